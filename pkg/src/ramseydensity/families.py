"""Locally finite graph families and independent-set expansion.

Each family generates growing prefixes of an infinite graph under a canonical
vertex order chosen so that prefix(n) is an induced subgraph of prefix(n+1):
path powers by index, k-ary trees in heap (BFS) order, grids by expanding
max-norm boxes around the origin with lexicographic tie-break, and disjoint
unions copy by copy.  On top of the generators sit exact brute-force
computations: the expansion profile mu(n) = min |N(I)| over independent
n-sets, doubly independent set enumeration, exact rational expansion ratios,
and the forest procedure extracting a bounded-size subset of an independent
set with nearly the same expansion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class PrefixTooSmallError(ValueError):
    """The requested computation cannot be certified inside the given prefix."""


@dataclass(frozen=True)
class FiniteGraph:
    """Simple undirected graph on vertices 0..n-1 with an edge set of sorted pairs."""

    n: int
    edges: frozenset

    def __post_init__(self):
        edges = frozenset((min(u, v), max(u, v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for u, v in edges:
            if u == v:
                raise ValueError("self-loops are not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError("edge endpoint out of range")

    def neighbors(self, v):
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def adjacency(self):
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def is_independent(self, vertices):
        vs = set(vertices)
        return all(not (u in vs and v in vs) for u, v in self.edges)

    def neighborhood(self, vertices):
        """N(S): vertices outside S with a neighbor in S."""
        vs = set(vertices)
        adj = self.adjacency()
        out = set()
        for v in vs:
            out |= adj[v]
        return out - vs

    def is_forest(self):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def to_text(self):
        lines = [f"{self.n} {len(self.edges)}"]
        lines += [f"{u} {v}" for u, v in sorted(self.edges)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        n, m = map(int, lines[0].split())
        edges = [tuple(map(int, ln.split())) for ln in lines[1:m + 1]]
        if len(edges) != m:
            raise ValueError("edge count does not match header")
        return cls(n, frozenset(edges))


def complete_graph(n):
    return FiniteGraph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a, b):
    return FiniteGraph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))


def path_graph(n):
    return FiniteGraph(n, frozenset((i, i + 1) for i in range(n - 1)))


class GraphFamily:
    """Base class: a canonical vertex order plus infinite-graph neighborhoods."""

    finite_size = None  # None means infinite

    def neighbors(self, v):
        raise NotImplementedError

    def prefix(self, n):
        """Induced subgraph on the first n vertices of the canonical order."""
        if n < 1:
            raise ValueError("n must be at least 1")
        if self.finite_size is not None and n > self.finite_size:
            raise ValueError("prefix larger than the underlying finite graph")
        edges = set()
        for v in range(n):
            for w in self.neighbors(v):
                if w < n:
                    edges.add((min(v, w), max(v, w)))
        return FiniteGraph(n, frozenset(edges))


class PathPower(GraphFamily):
    """Vertices 0, 1, 2, ...; x and y adjacent iff |x - y| <= k."""

    def __init__(self, k):
        if k < 1:
            raise ValueError("k must be at least 1")
        self.k = k

    def neighbors(self, v):
        return {w for w in range(max(0, v - self.k), v + self.k + 1) if w != v}


class KAryTree(GraphFamily):
    """Infinite rooted tree where every vertex has k children, in BFS order."""

    def __init__(self, k):
        if k < 1:
            raise ValueError("k must be at least 1")
        self.k = k

    def neighbors(self, v):
        out = set(range(self.k * v + 1, self.k * v + self.k + 1))
        if v > 0:
            out.add((v - 1) // self.k)
        return out


class Grid(GraphFamily):
    """Z^d with edges at Euclidean distance 1, ordered by expanding max-norm
    boxes around the origin, lexicographic within a box shell."""

    def __init__(self, d):
        if d < 1:
            raise ValueError("d must be at least 1")
        self.d = d
        self._coords = [(0,) * d]
        self._index = {(0,) * d: 0}
        self._radius = 0

    def _shell(self, r):
        pts = []

        def rec(prefix):
            if len(prefix) == self.d:
                if max(abs(c) for c in prefix) == r:
                    pts.append(tuple(prefix))
                return
            for c in range(-r, r + 1):
                rec(prefix + [c])

        rec([])
        return sorted(pts)

    def _grow_to_radius(self, r):
        while self._radius < r:
            self._radius += 1
            for pt in self._shell(self._radius):
                self._index[pt] = len(self._coords)
                self._coords.append(pt)

    def _grow_to_size(self, n):
        while len(self._coords) < n:
            self._grow_to_radius(self._radius + 1)

    def coord(self, v):
        self._grow_to_size(v + 1)
        return self._coords[v]

    def index(self, coord):
        coord = tuple(coord)
        self._grow_to_radius(max(abs(c) for c in coord))
        return self._index[coord]

    def neighbors(self, v):
        base = self.coord(v)
        self._grow_to_radius(max(abs(c) for c in base) + 1)
        out = set()
        for i in range(self.d):
            for step in (-1, 1):
                other = base[:i] + (base[i] + step,) + base[i + 1:]
                out.add(self._index[other])
        return out


class OmegaFactor(GraphFamily):
    """Countably many disjoint copies of a finite graph F, copy by copy."""

    def __init__(self, factor: FiniteGraph):
        if factor.n < 1:
            raise ValueError("factor must be nonempty")
        self.factor = factor
        self._adj = factor.adjacency()

    def neighbors(self, v):
        copy, local = divmod(v, self.factor.n)
        return {copy * self.factor.n + w for w in self._adj[local]}


class Explicit(GraphFamily):
    """A fixed finite graph presented through the family interface."""

    def __init__(self, graph: FiniteGraph):
        self.graph = graph
        self.finite_size = graph.n
        self._adj = graph.adjacency()

    def neighbors(self, v):
        return set(self._adj[v])


class ExplicitForest(Explicit):
    def __init__(self, graph: FiniteGraph):
        if not graph.is_forest():
            raise ValueError("graph is not acyclic")
        super().__init__(graph)


def parse_family(spec_text):
    """CLI family syntax: pathpower:k, karytree:k, grid:d, omega:<file>, explicit:<file>."""
    kind, _, arg = spec_text.partition(":")
    kind = kind.lower()
    if kind == "pathpower":
        return PathPower(int(arg))
    if kind == "karytree":
        return KAryTree(int(arg))
    if kind == "grid":
        return Grid(int(arg))
    if kind in ("omega", "omegafactor"):
        with open(arg, encoding="utf-8") as fh:
            return OmegaFactor(FiniteGraph.from_text(fh.read()))
    if kind == "explicit":
        with open(arg, encoding="utf-8") as fh:
            return Explicit(FiniteGraph.from_text(fh.read()))
    raise ValueError(f"unknown family {spec_text!r}")


def mu_bruteforce(family, n, prefix_size):
    """Exact mu(n): minimum |N(I)| over independent n-sets I, with N taken in
    the infinite graph.

    Only boundary-interior candidates are enumerated: I may not contain a
    vertex with a neighbor in the prefix's outermost ring (vertices that have
    neighbors outside the prefix), so the returned optimum's neighborhood is
    provably complete and ring-free.  Raises PrefixTooSmallError when no such
    candidate exists.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if family.finite_size is not None:
        prefix_size = min(prefix_size, family.finite_size)
    nbrs = {v: family.neighbors(v) for v in range(prefix_size)}
    ring = {v for v in range(prefix_size) if any(w >= prefix_size for w in nbrs[v])}
    interior = set(range(prefix_size)) - ring
    pool = sorted(v for v in range(prefix_size) if nbrs[v] <= interior)
    if len(pool) < n:
        raise PrefixTooSmallError(
            f"only {len(pool)} boundary-interior candidates; increase prefix_size")

    best = math.inf
    chosen = []

    def extend(start, depth, nbhd, blocked):
        nonlocal best
        if depth == n:
            if len(nbhd) < best:
                best = len(nbhd)
            return
        for idx in range(start, len(pool) - (n - depth) + 1):
            v = pool[idx]
            if v in blocked:
                continue
            new_nbhd = (nbhd | nbrs[v]) - {v}
            # adding a vertex can shrink the neighborhood by at most one
            if len(new_nbhd) - (n - depth - 1) >= best:
                continue
            extend(idx + 1, depth + 1, new_nbhd, blocked | nbrs[v])

    extend(0, 0, set(), set())
    if best == math.inf:
        raise PrefixTooSmallError("no independent boundary-interior set of the requested size")
    return int(best)


def _independent_sets(graph, nonempty=True):
    adj = graph.adjacency()
    out = []

    def rec(start, current):
        if current:
            out.append(tuple(current))
        for v in range(start, graph.n):
            if all(v not in adj[u] for u in current):
                current.append(v)
                rec(v + 1, current)
                current.pop()

    rec(0, [])
    if not nonempty:
        out.append(())
    return out


def min_expansion(F: FiniteGraph):
    """Exact rational min over nonempty independent I of |N(I)| / |I|."""
    if F.n < 1:
        raise ValueError("graph must be nonempty")
    best = None
    for I in _independent_sets(F):
        ratio = Fraction(len(F.neighborhood(I)), len(I))
        if best is None or ratio < best:
            best = ratio
    return best


def doubly_independent_sets(F: FiniteGraph):
    """All nonempty independent I whose neighborhood is also independent,
    sorted by (size, lexicographic)."""
    out = [I for I in _independent_sets(F) if F.is_independent(F.neighborhood(I))]
    return sorted(out, key=lambda s: (len(s), s))


def expansion_ratio(G: FiniteGraph, I):
    """Exact |N(I)| / |I| for a nonempty independent set I."""
    I = sorted(set(I))
    if not I:
        raise ValueError("I must be nonempty")
    if not G.is_independent(I):
        raise ValueError("I is not independent")
    return Fraction(len(G.neighborhood(I)), len(I))


def default_treecut_delta(lam, lam_prime):
    """A delta that always satisfies delta + lam/(1 - 2*delta*(1+lam)) < lam_prime."""
    lam, lam_prime = Fraction(lam), Fraction(lam_prime)
    gap = lam_prime - lam
    if gap <= 0:
        raise ValueError("lam_prime must exceed lam")
    return min(Fraction(1, 4), gap / 4, gap / (2 * (2 * lam + gap) * (1 + lam)))


def treecut(forest: FiniteGraph, I, lam, lam_prime, delta):
    """Extract I' subseteq I with |I'| <= 2/delta and |N(I')| <= lam_prime*|I'|
    from an independent set with |N(I)| <= lam*|I| in a forest.

    Procedure: root each component of the I-to-N(I) subforest at its least
    I-vertex; repeatedly delete the deepest vertex with at least 1/delta - 1
    descendants until all components are small; close the deleted set under
    parents of its N(I) part; pick the component of lowest |C cap J|/|C cap I|
    ratio; if it is big, split at its unique deleted-J vertex and take the
    shortest prefix of the pieces in increasing ratio order that collects at
    least 1/delta I-vertices.
    """
    lam, lam_prime, delta = Fraction(lam), Fraction(lam_prime), Fraction(delta)
    I = sorted(set(I))
    if not I:
        raise ValueError("I must be nonempty")
    if not forest.is_forest():
        raise ValueError("input graph is not acyclic")
    if not forest.is_independent(I):
        raise ValueError("I is not independent")
    J = forest.neighborhood(I)
    if len(J) > lam * len(I):
        raise ValueError(f"|N(I)| <= lam*|I| fails: {len(J)} > {lam} * {len(I)}")
    if 2 * delta * (1 + lam) >= 1:
        raise ValueError(f"delta too large: 2*delta*(1+lam) = {2 * delta * (1 + lam)} >= 1")
    lam_dd = lam / (1 - 2 * delta * (1 + lam))
    if delta + lam_dd >= lam_prime:
        raise ValueError(
            f"delta too large: delta + lam/(1-2*delta*(1+lam)) = {delta + lam_dd} >= {lam_prime}")

    iset = set(I)
    jset = set(J)
    verts = sorted(iset | jset)
    adj = {v: set() for v in verts}
    full_adj = forest.adjacency()
    for v in iset:
        for w in full_adj[v] & jset:
            adj[v].add(w)
            adj[w].add(v)

    # rooted structure: least I-vertex per component
    parent = {}
    order = []
    seen = set()
    for root in I:
        if root in seen:
            continue
        stack = [root]
        parent[root] = None
        seen.add(root)
        while stack:
            v = stack.pop()
            order.append(v)
            for w in sorted(adj[v]):
                if w not in seen:
                    seen.add(w)
                    parent[w] = v
                    stack.append(w)
    assert set(order) == set(verts)

    threshold = 1 / delta

    def components(removed):
        comp_of = {}
        comps = []
        for v in verts:
            if v in removed or v in comp_of:
                continue
            comp = set()
            stack = [v]
            comp_of[v] = len(comps)
            while stack:
                u = stack.pop()
                comp.add(u)
                for w in adj[u]:
                    if w not in removed and w not in comp_of:
                        comp_of[w] = len(comps)
                        stack.append(w)
            comps.append(comp)
        return comps

    def descendant_counts(removed):
        # removing a vertex detaches its whole subtree: survivors whose
        # parent was removed become roots, nothing is spliced upwards
        count = {v: 0 for v in verts if v not in removed}
        for v in reversed(order):
            if v in removed:
                continue
            p = parent[v]
            if p is not None and p not in removed:
                count[p] += count[v] + 1
        return count

    def is_live_ancestor(a, b, removed):
        p = parent[b]
        while p is not None and p not in removed:
            if p == a:
                return True
            p = parent[p]
        return False

    S = set()
    while True:
        comps = components(S)
        if all(len(c) < threshold for c in comps):
            break
        counts = descendant_counts(S)
        cands = {v for v, c in counts.items() if c >= threshold - 1}
        minimal = [v for v in cands
                   if not any(is_live_ancestor(v, w, S) for w in cands if w != v)]
        S.add(min(minimal))

    X = set(S)
    for v in S & jset:
        if parent[v] is not None:
            X.add(parent[v])

    comps = components(X & iset)
    scored = []
    for comp in comps:
        ci = comp & iset
        cj = comp & jset
        if ci:
            scored.append((Fraction(len(cj), len(ci)), min(comp), ci, cj, comp))
    scored.sort(key=lambda rec: (rec[0], rec[1]))
    ratio, _, ci, cj, comp = scored[0]
    assert ratio <= lam_dd, "no component meets the averaged ratio bound"
    M = 2 / delta

    if len(ci) <= M:
        i_prime = sorted(ci)
    else:
        inside = comp & X & jset
        assert len(inside) == 1, "big component must contain exactly one deleted J-vertex"
        v = next(iter(inside))
        pieces = []
        seen2 = set()
        for u in sorted(comp - {v}):
            if u in seen2:
                continue
            piece = set()
            stack = [u]
            seen2.add(u)
            while stack:
                w = stack.pop()
                piece.add(w)
                for y in adj[w]:
                    if y in comp and y != v and y not in seen2:
                        seen2.add(y)
                        stack.append(y)
            pi, pj = piece & iset, piece & jset
            key = (0, Fraction(len(pj), len(pi))) if pi else (1, Fraction(0))
            pieces.append((key, min(piece), pi))
        pieces.sort(key=lambda rec: (rec[0], rec[1]))
        i_prime = []
        for _, _, pi in pieces:
            i_prime.extend(sorted(pi))
            if len(i_prime) >= threshold:
                break
        i_prime = sorted(i_prime)

    got = forest.neighborhood(i_prime)
    assert len(i_prime) <= M, "output exceeds the size bound"
    assert len(got) <= lam_prime * len(i_prime), "output exceeds the expansion bound"
    return tuple(i_prime)
