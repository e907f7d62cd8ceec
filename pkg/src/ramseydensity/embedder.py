"""Monochromatic embedding machinery: backbone structures and the embedding
algorithm.

A backbone (WStructure) for color C is a vertex-disjoint union of isolated
C-shaded host vertices and complete bipartite pieces whose edges are all
color C, the size-s side C-shaded and the size-r side oppositely shaded,
each piece using one shade of each color.  The embedding algorithm maps a
prefix of an infinite pattern graph into the colored host so that every
edge lands on a color-C host edge, absorbing backbone components along the
way: pieces absorb designated doubly independent template sets together
with their neighborhoods, isolated vertices absorb fresh top-color pattern
vertices, and everything else is placed greedily inside the shade dictated
by the component's shade assignment, relying on the large common
neighborhoods the shading guarantees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .colorings import COLORS, other, density
from .families import FiniteGraph, OmegaFactor


@dataclass(frozen=True)
class BipartitePiece:
    """Complete color-C bipartite piece: X is the size-r side shaded in the
    opposite color, Y the size-s side shaded in C; shade_pair holds
    (C shade index, opposite shade index)."""

    X: tuple
    Y: tuple
    shade_pair: tuple

    def vertices(self):
        return set(self.X) | set(self.Y)


@dataclass(frozen=True)
class IsolatedVertex:
    v: int
    shade_index: int

    def vertices(self):
        return {self.v}


@dataclass(frozen=True)
class WStructure:
    color: str
    components: tuple

    def vertices(self):
        out = set()
        for comp in self.components:
            out |= comp.vertices()
        return out

    def pieces(self):
        return [c for c in self.components if isinstance(c, BipartitePiece)]

    def density_surrogate(self, n):
        return Fraction(len(self.vertices()), n)


def validate_w(chi, sh, W, r, s):
    """Check every backbone invariant against the host coloring and shading."""
    seen = set()
    for comp in W.components:
        vs = comp.vertices()
        if vs & seen:
            raise ValueError("backbone components are not disjoint")
        seen |= vs
        if isinstance(comp, IsolatedVertex):
            if sh.shade_of(comp.v) != (W.color, comp.shade_index):
                raise ValueError("isolated vertex shade mismatch")
        else:
            ci, cj = comp.shade_pair
            if len(comp.X) != r or len(comp.Y) != s:
                raise ValueError("piece side sizes mismatch")
            for y in comp.Y:
                if sh.shade_of(y) != (W.color, ci):
                    raise ValueError("piece Y-side shade mismatch")
            for x in comp.X:
                if sh.shade_of(x) != (other(W.color), cj):
                    raise ValueError("piece X-side shade mismatch")
            for x in comp.X:
                for y in comp.Y:
                    if chi.color(x, y) != W.color:
                        raise ValueError("piece edge has the wrong color")


def _find_piece(chi, color, xs_pool, ys_pool, r, s, window):
    """Lowest complete color-C piece: choose s Y-vertices ascending with
    bounded lookahead so that their common C-neighborhood in the X-pool has
    size at least r; returns (X, Y) or None."""
    ys_pool = ys_pool[:window]

    def rec(chosen, common, start):
        if len(chosen) == s:
            return sorted(common)[:r], list(chosen)
        for k in range(start, len(ys_pool)):
            y = ys_pool[k]
            new_common = {x for x in common if chi.color(x, y) == color}
            if len(new_common) >= r:
                got = rec(chosen + [y], new_common, k + 1)
                if got is not None:
                    return got
        return None

    return rec([], set(xs_pool), 0)


def build_W(chi, sh, r, s, window=64, max_pieces=None):
    """Greedy backbone packing: for each color and each shade pair, pack
    disjoint complete pieces (exhaustive search per piece over a bounded
    candidate window, optionally capped), then add every unused vertex of the
    color as an isolated component; keep the color with the denser result
    (ties red)."""
    best = None
    for color in COLORS:
        used = set()
        comps = []
        pieces = 0
        for ci in sh.nonempty_shades(color):
            for cj in sh.nonempty_shades(other(color)):
                while max_pieces is None or pieces < max_pieces:
                    ys_pool = [v for v in sh.members(color, ci) if v not in used]
                    xs_pool = [v for v in sh.members(other(color), cj) if v not in used]
                    if len(ys_pool) < s or len(xs_pool) < r:
                        break
                    got = _find_piece(chi, color, xs_pool, ys_pool, r, s, window)
                    if got is None:
                        break
                    X, Y = got
                    comps.append(BipartitePiece(tuple(X), tuple(Y), (ci, cj)))
                    used |= set(X) | set(Y)
                    pieces += 1
        for ci in sh.nonempty_shades(color):
            for v in sh.members(color, ci):
                if v not in used:
                    comps.append(IsolatedVertex(v, ci))
        comps.sort(key=lambda c: min(c.vertices()))
        W = WStructure(color=color, components=tuple(comps))
        if best is None or W.density_surrogate(chi.n) > best.density_surrogate(chi.n):
            best = W
    validate_w(chi, sh, best, r, s)
    return best


def components_of(graph: FiniteGraph):
    """Connected components as sorted vertex lists, ordered by least vertex."""
    adj = graph.adjacency()
    seen = set()
    comps = []
    for v in range(graph.n):
        if v in seen:
            continue
        comp = []
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class HPrefixSpec:
    """A prefix of an infinite pattern graph plus embedding metadata: a proper
    coloring psi into 1..a, one doubly independent template per component
    (|I| = r, |N(I)| <= s, psi constant a on N(I)), and the component floor b."""

    family: object
    size: int
    psi: tuple
    templates: dict
    r: int
    s: int
    b: int = 1

    def graph(self):
        return self.family.prefix(self.size)

    def validate(self):
        H = self.graph()
        a = max(self.psi)
        if len(self.psi) != self.size:
            raise ValueError("psi must color every prefix vertex")
        for u, v in H.edges:
            if self.psi[u] == self.psi[v]:
                raise ValueError("psi is not a proper coloring")
        comps = components_of(H)
        for cid, template in self.templates.items():
            tset = set(template)
            if len(tset) != self.r:
                raise ValueError("template size differs from r")
            if not tset <= set(comps[cid]):
                raise ValueError("template leaves its component")
            if not H.is_independent(tset):
                raise ValueError("template is not independent")
            nbhd = H.neighborhood(tset)
            if len(nbhd) > self.s:
                raise ValueError("template neighborhood exceeds s")
            if not H.is_independent(nbhd):
                raise ValueError("template is not doubly independent")
            if any(self.psi[w] != a for w in nbhd):
                raise ValueError("template neighborhood not colored a")
        return a

    @classmethod
    def omega_factor(cls, factor: FiniteGraph, copies, base_template, b=1):
        """Spec for countably many copies of a finite graph: the template and
        the coloring of one copy replicated; N(I) gets the top color a and the
        remaining vertices a greedy proper coloring below it."""
        fam = OmegaFactor(factor)
        tset = sorted(set(base_template))
        nbhd = sorted(factor.neighborhood(tset))
        rest = [v for v in range(factor.n) if v not in nbhd]
        adj = factor.adjacency()
        base_psi = {}
        for v in rest:
            taken = {base_psi[w] for w in adj[v] if w in base_psi}
            base_psi[v] = next(k for k in range(1, factor.n + 2) if k not in taken)
        a = max(base_psi.values(), default=0) + 1
        for v in nbhd:
            base_psi[v] = a
        psi = tuple(base_psi[v % factor.n] for v in range(copies * factor.n))
        templates = {cid: tuple(v + cid * factor.n for v in tset)
                     for cid in range(copies)}
        spec = cls(family=fam, size=copies * factor.n, psi=psi,
                   templates=templates, r=len(tset), s=len(nbhd), b=b)
        spec.validate()
        return spec


@dataclass
class EmbeddingState:
    """Partial injective map from pattern vertices to host vertices, plus the
    bookkeeping needed to verify the progress conditions."""

    color: str
    a: int
    phi: dict
    kappa: dict
    comp_of: dict
    shading: object
    consumed: tuple
    incomplete: bool
    steps: int
    t_set_sizes: tuple

    def image(self):
        return sorted(self.phi.values())

    def to_json_dict(self):
        return {"pairs": sorted([int(v), int(x)] for v, x in self.phi.items()),
                "color": self.color,
                "consumed_components": len(self.consumed),
                "incomplete": self.incomplete}


def embed(chi, sh, W, spec: HPrefixSpec, budget):
    """Alternate two operations for up to ``budget`` steps: define the image
    of the least unmapped pattern vertex, and absorb the next backbone
    component.

    Vertex images come from the shade dictated by the component's shade
    assignment kappa, adjacent in color C to every already-mapped neighbor;
    in top-shade components the whole out-reachable set is mapped first, in
    decreasing psi order.  Pieces absorb a fresh template (bijectively onto
    the opposite-shaded side, its neighborhood into the C-shaded side);
    isolated vertices and leftover C-side slots absorb fresh top-color
    pattern vertices with untouched neighborhoods.  An exhausted candidate
    pool flags the state incomplete and stops.
    """
    a = spec.validate()
    if a != sh.a:
        raise ValueError(f"psi uses {a} colors but the shading has a = {sh.a}")
    C = W.color
    validate_w(chi, sh, W, spec.r, spec.s)
    j_prime = sh.nonempty_shades(C)
    a_prime = max((len(sh.nonempty_shades(c)) for c in COLORS), default=0)
    if not (sh.a >= a_prime >= spec.b):
        raise ValueError("need a >= a' >= b")
    if not j_prime:
        raise ValueError("no nonempty shade of the backbone color")

    H = spec.graph()
    adj = H.adjacency()
    comps = components_of(H)
    comp_of = {v: i for i, comp in enumerate(comps) for v in comp}
    kappa = {i: j_prime[i % len(j_prime)] for i in range(len(comps))}

    # only multi-vertex pieces are withheld from regular placement: an
    # isolated backbone vertex covered by a regular image is already absorbed
    reserved = set()
    for piece in W.pieces():
        reserved |= piece.vertices()
    phi = {}
    used = set()
    consumed = []
    t_sizes = []
    incomplete = False

    out_nbrs = {v: [w for w in adj[v] if spec.psi[w] > spec.psi[v]] for v in range(H.n)}

    def place(v, pool_shade, require_adj_to):
        for x in sh.members(*pool_shade):
            if x in used or x in reserved:
                continue
            if all(chi.color(x, t) == C for t in require_adj_to):
                phi[v] = x
                used.add(x)
                return True
        return False

    def vertex_op():
        nonlocal incomplete
        v = next((u for u in range(H.n) if u not in phi), None)
        if v is None:
            return False
        k = kappa[comp_of[v]]
        if k != a:
            targets = [phi[w] for w in adj[v] if w in phi]
            if not place(v, (C, k), targets):
                incomplete = True
            return True
        # top-shade component: map the out-reachable set, top psi first
        T = set()
        stack = [v]
        while stack:
            u = stack.pop()
            if u in T:
                continue
            T.add(u)
            stack.extend(w for w in out_nbrs[u] if w not in T)
        t_sizes.append(len(T))
        for w in sorted(T, key=lambda u: (-spec.psi[u], u)):
            if w in phi:
                continue
            if spec.psi[w] == a:
                ok = place(w, (C, a), [])
            else:
                targets = [phi[u] for u in out_nbrs[w] if u in phi]
                ok = place(w, (other(C), spec.psi[w]), targets)
            if not ok:
                incomplete = True
                return True
        return True

    def fresh_top_vertex(shade_index):
        for v in range(H.n):
            if spec.psi[v] != a or v in phi:
                continue
            if kappa[comp_of[v]] != shade_index:
                continue
            if all(w not in phi for w in adj[v]):
                return v
        return None

    def consume(comp):
        nonlocal incomplete
        if isinstance(comp, IsolatedVertex):
            if comp.v in used:
                return True  # already covered by a regular image
            w = fresh_top_vertex(comp.shade_index)
            if w is None:
                return False
            phi[w] = comp.v
            used.add(comp.v)
            return True
        ci, _ = comp.shade_pair
        for cid, template in sorted(spec.templates.items()):
            if kappa[cid] != ci:
                continue
            tset = sorted(template)
            nbhd = sorted(H.neighborhood(tset))
            if any(u in phi for u in tset) or any(u in phi for u in nbhd):
                continue
            xs, ys = sorted(comp.X), sorted(comp.Y)
            for u, x in zip(tset, xs):
                phi[u] = x
                used.add(x)
            for u, y in zip(nbhd, ys):
                phi[u] = y
                used.add(y)
            reserved.difference_update(comp.vertices())
            for y in ys[len(nbhd):]:
                w = fresh_top_vertex(ci)
                if w is None:
                    incomplete = True
                    break
                phi[w] = y
                used.add(y)
            return True
        return False

    pending = list(W.components)
    steps = 0
    turn_vertex = True
    idle = 0
    while steps < budget and idle < 2 and not incomplete:
        did = False
        if turn_vertex:
            did = vertex_op()
        else:
            for comp in pending:
                if consume(comp):
                    pending.remove(comp)
                    consumed.append(comp)
                    did = True
                    break
        turn_vertex = not turn_vertex
        if did:
            steps += 1
            idle = 0
        else:
            idle += 1

    return EmbeddingState(color=C, a=a, phi=phi, kappa=kappa, comp_of=comp_of,
                          shading=sh, consumed=tuple(consumed),
                          incomplete=incomplete, steps=steps,
                          t_set_sizes=tuple(t_sizes))


@dataclass(frozen=True)
class EmbedReport:
    passed: bool
    failures: tuple
    density: object


def verify_embedding(state: EmbeddingState, chi, spec: HPrefixSpec, W):
    """Check injectivity, monochromatic edge images, the three progress
    conditions (on mapped vertices with unmapped neighbors), and containment
    of every consumed backbone component in the image; reports the image's
    density at the full host prefix."""
    failures = []
    H = spec.graph()
    adj = H.adjacency()
    a = state.a
    C = state.color
    sh = state.shading
    phi = state.phi

    if len(set(phi.values())) != len(phi):
        failures.append("phi is not injective")
    for u, v in H.edges:
        if u in phi and v in phi and chi.color(phi[u], phi[v]) != C:
            failures.append(f"edge {(u, v)} maps to a non-{C} edge")

    for v, x in phi.items():
        undef = [u for u in adj[v] if u not in phi]
        if not undef:
            continue
        k = state.kappa[state.comp_of[v]]
        shade = sh.shade_of(x)
        if k != a:
            if shade != (C, k):
                failures.append(f"vertex {v}: image shade {shade} != {(C, k)}")
        elif spec.psi[v] == a:
            if shade != (C, a):
                failures.append(f"vertex {v}: image shade {shade} != {(C, a)}")
        else:
            if shade != (other(C), spec.psi[v]):
                failures.append(f"vertex {v}: image shade {shade} != opposite {spec.psi[v]}")
            if any(spec.psi[u] >= spec.psi[v] for u in undef):
                failures.append(f"vertex {v}: an unmapped neighbor has psi >= psi(v)")

    image = set(phi.values())
    for comp in state.consumed:
        if not comp.vertices() <= image:
            failures.append("a consumed component is not inside the image")
            break

    density_report = density(sorted(image), chi.n, (chi.n,)) if image else None
    return EmbedReport(passed=not failures, failures=tuple(failures),
                       density=density_report)
