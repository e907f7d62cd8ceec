"""Piecewise-linear machinery for the crossing-functional variational problem.

The density bound f(lambda) is driven by first-crossing functionals of the
tilted functions gamma*x + g(x) and gamma*x - g(x), minimized over 1-Lipschitz
candidates g with g(0) = 0.  This module represents candidates as piecewise
linear functions with a declared tail slope, computes crossings exactly by
linear solves on segments, evaluates the supremum ratio by enumerating the
finitely many critical levels (never by grid sampling), and carries the
supporting apparatus: the self-similar sawtooth construction, the distance-1
canonicalization tracker, peak/valley removal, breakpoint traces, the
level-sequence recurrence, and the 45-degree rotation change of variables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

INF = math.inf

_LIP_TOL = 1e-9
_ID_TOL = 1e-12


class UnboundedCandidateError(ValueError):
    """A crossing is infinite somewhere in the requested level window."""


class ConsistencyError(AssertionError):
    """An internal cross-check (closed formula vs direct computation) failed."""


@dataclass(frozen=True)
class PLFunction:
    """Piecewise-linear function on [0, oo).

    ``breakpoints`` is strictly increasing and starts at 0; ``values`` gives
    the function there (value 0 at 0); beyond the last breakpoint the function
    continues with slope ``tail_slope``.  With ``lipschitz=True`` (default)
    every segment slope and the tail are checked to lie in [-1, 1]; degree
    profiles disable the check since their interpolation may jump faster.
    """

    breakpoints: tuple
    values: tuple
    tail_slope: float = 0.0
    lipschitz: bool = True

    def __post_init__(self):
        bp, vals = tuple(self.breakpoints), tuple(self.values)
        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "values", vals)
        if len(bp) != len(vals) or not bp:
            raise ValueError("breakpoints and values must be nonempty and equal length")
        if bp[0] != 0:
            raise ValueError("first breakpoint must be 0")
        if vals[0] != 0:
            raise ValueError("value at 0 must be 0")
        for a, b in zip(bp, bp[1:]):
            if not b > a:
                raise ValueError("breakpoints must be strictly increasing")
        if self.lipschitz:
            for (x0, y0), (x1, y1) in zip(zip(bp, vals), zip(bp[1:], vals[1:])):
                if abs(y1 - y0) > (x1 - x0) * (1 + 1e-12) + _LIP_TOL:
                    raise ValueError(f"segment [{x0},{x1}] violates the 1-Lipschitz bound")
            if abs(self.tail_slope) > 1 + _LIP_TOL:
                raise ValueError("tail slope outside [-1, 1]")

    @classmethod
    def zero(cls):
        return cls((0.0,), (0.0,), 0.0)

    @classmethod
    def linear(cls, slope):
        return cls((0.0,), (0.0,), float(slope), lipschitz=abs(slope) <= 1 + _LIP_TOL)

    @classmethod
    def from_points(cls, points, tail_slope=0.0, lipschitz=True):
        xs, ys = zip(*points)
        return cls(tuple(float(x) for x in xs), tuple(float(y) for y in ys),
                   float(tail_slope), lipschitz=lipschitz)

    def __call__(self, x):
        if x < 0:
            raise ValueError("domain is [0, oo)")
        bp, vals = self.breakpoints, self.values
        if x >= bp[-1]:
            return vals[-1] + self.tail_slope * (x - bp[-1])
        lo, hi = 0, len(bp) - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if bp[mid] <= x:
                lo = mid
            else:
                hi = mid
        x0, x1 = bp[lo], bp[hi]
        y0, y1 = vals[lo], vals[hi]
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    @property
    def span(self):
        return self.breakpoints[-1]

    def slopes(self):
        """Per-piece slopes, tail excluded."""
        bp, vals = self.breakpoints, self.values
        return [(y1 - y0) / (x1 - x0)
                for x0, x1, y0, y1 in zip(bp, bp[1:], vals, vals[1:])]

    def is_alternating_unit(self):
        """True iff slopes alternate +1, -1, +1, ... within tolerance."""
        sl = self.slopes()
        if not sl:
            return False
        want = 1.0
        for s in sl:
            if abs(s - want) > 1e-7:
                return False
            want = -want
        return True

    def refine(self, points):
        """Insert extra breakpoints without changing the function."""
        extra = [float(x) for x in points
                 if 0 < x < self.span and x not in self.breakpoints]
        bp = sorted(set(self.breakpoints) | set(extra))
        return PLFunction(tuple(bp), tuple(self(x) for x in bp),
                          self.tail_slope, lipschitz=self.lipschitz)


@dataclass(frozen=True)
class GammaParam:
    """Tilt parameter pair: gamma in (-1, 1) and lam = (1+gamma)/(1-gamma)."""

    gamma: float
    lam: float

    def __post_init__(self):
        if not -1 < self.gamma < 1:
            raise ValueError("gamma must lie in (-1, 1)")
        if self.lam < 0:
            raise ValueError("lam must be nonnegative")
        if abs(self.lam - (1 + self.gamma) / (1 - self.gamma)) > _ID_TOL * max(1.0, self.lam) \
                or abs(self.gamma - (self.lam - 1) / (self.lam + 1)) > _ID_TOL:
            raise ValueError("gamma and lam are not a matching pair")

    @classmethod
    def from_gamma(cls, gamma):
        gamma = float(gamma)
        return cls(gamma, (1 + gamma) / (1 - gamma))

    @classmethod
    def from_lambda(cls, lam):
        lam = float(lam)
        if lam <= 0:
            raise ValueError("lam must be positive and finite here")
        return cls((lam - 1) / (lam + 1), lam)


def _first_crossing(xs, ys, tail_slope, t, strict=False):
    """Least x with f(x) >= t (or > t when strict) for the piecewise function
    with vertices (xs, ys) and the given tail slope; inf when never reached.

    For strict crossings the returned point is the limit of the non-strict
    crossing from above, which is what the supremum enumeration needs.
    """
    n = len(xs)
    for i in range(n):
        y0 = ys[i]
        if (y0 > t) if strict else (y0 >= t):
            return xs[i]
        if i + 1 < n:
            y1 = ys[i + 1]
            if (y1 > t) if strict else (y1 >= t):
                slope = (y1 - y0) / (xs[i + 1] - xs[i])
                return xs[i] + (t - y0) / slope
        else:
            if tail_slope > 0:
                return xs[i] + (t - y0) / tail_slope
    return INF


def _tilted(g, gamma, sign):
    xs = g.breakpoints
    ys = tuple(gamma * x + sign * y for x, y in zip(xs, g.values))
    return xs, ys, gamma + sign * g.tail_slope


def gamma_crossing(g, p, t, sign, strict=False):
    """First x where gamma*x + sign*g(x) reaches level t; inf if never.

    ``sign`` is +1 or -1.  Requires t >= 0.  The root on the crossing segment
    is found by an exact linear solve.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if t < 0:
        raise ValueError("t must be nonnegative")
    xs, ys, tail = _tilted(g, p.gamma, sign)
    return _first_crossing(xs, ys, tail, t, strict=strict)


def _check_profile(g):
    vals = g.values
    if any(v < -_LIP_TOL for v in vals) or g.tail_slope < -_LIP_TOL:
        raise ValueError("g must be nonnegative")
    if any(b < a - _LIP_TOL for a, b in zip(vals, vals[1:])):
        raise ValueError("g must be non-decreasing")


def ell_crossing(g, lam, t, sign):
    """First-crossing functionals in the untilted coordinates.

    sign +1: least x with g(lam*x) - x >= t.
    sign -1: least x with x - g(x)/lam >= t.
    Requires lam > 0, t > 0 and g nonnegative non-decreasing.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if lam <= 0 or t <= 0:
        raise ValueError("lam and t must be positive")
    _check_profile(g)
    if sign == 1:
        xs = tuple(b / lam for b in g.breakpoints)
        ys = tuple(v - b / lam for b, v in zip(g.breakpoints, g.values))
        tail = lam * g.tail_slope - 1
    else:
        xs = g.breakpoints
        ys = tuple(b - v / lam for b, v in zip(g.breakpoints, g.values))
        tail = 1 - g.tail_slope / lam
    return _first_crossing(xs, ys, tail, t)


@dataclass(frozen=True)
class FBounds:
    """Lower/upper bounds for f at one argument; exact value when known."""

    lower: float
    upper: float
    exact: float | None


def f_closed(lam):
    """Closed-form bounds on f(lam); exact on [0, 1] and at 0 and +inf."""
    if lam == INF:
        return FBounds(0.5, 0.5, 0.5)
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    if lam > 100:
        raise ValueError("lam above 100 is unsupported")
    lower = (lam + 1) / (2 * lam + 1)
    if lam < 3:
        upper = (2 * lam * lam + 3 * lam + 7 + 2 * math.sqrt(lam + 1)) / (4 * lam * lam + 4 * lam + 9)
    else:
        upper = (lam + 1) / (2 * lam)
    exact = upper if lam <= 1 else None
    return FBounds(lower, upper, exact)


def f_from_h(h, lam):
    """Turn a value of the ratio supremum h at gamma=(lam-1)/(lam+1) into f(lam)."""
    return 1 - 1 / ((2 * lam / (1 + lam) ** 2) * h + 2 * lam / (1 + lam))


def h_upper_and_f(p):
    """Best-known upper bound for the ratio supremum at gamma, and the f value
    obtained by substituting it: the sawtooth value below 1/2, the flat-candidate
    value 2/gamma from 1/2 on."""
    gamma = p.gamma
    if gamma < 0.5:
        h_upper = (2 * gamma * gamma + 2 * gamma + 8 + math.sqrt(32 * (1 - gamma))) / (1 + gamma) ** 3
    else:
        h_upper = 2 / gamma
    return h_upper, f_from_h(h_upper, p.lam)


def sigma_ratio(p):
    """Geometric ratio of the sawtooth zeros for gamma < 1/2."""
    gamma = p.gamma
    if gamma >= 0.5:
        raise ValueError("sawtooth construction requires gamma < 1/2 (use g = 0 above)")
    return (1 - gamma + math.sqrt(2 * (1 - gamma))) / (1 + gamma)


def sigma_g(p, periods):
    """Self-similar sawtooth: zeros at sigma^i for i = 0..periods, slopes
    alternating +-1, nonnegative on [sigma^i, sigma^(i+1)) for odd i.

    The infinite construction oscillates all the way down to 0; here the
    window starts at sigma^0 = 1 with a flat run-in to the origin so that
    g(0) = 0 holds, which leaves the tail behaviour untouched.
    """
    if periods < 2:
        raise ValueError("periods must be at least 2")
    sigma = sigma_ratio(p)
    pts = [(0.0, 0.0), (1.0, 0.0)]
    lo = 1.0
    for i in range(periods):
        hi = lo * sigma
        sign = 1.0 if i % 2 == 1 else -1.0
        pts.append(((lo + hi) / 2, sign * (hi - lo) / 2))
        pts.append((hi, 0.0))
        lo = hi
    tail = 1.0 if periods % 2 == 1 else -1.0
    return PLFunction.from_points(pts, tail_slope=tail)


def sigma_peak_levels(p, periods):
    """Tilted peak levels of the sawtooth: level of tooth i under the
    functional that peaks there (odd teeth for +, even for -)."""
    sigma = sigma_ratio(p)
    levels = []
    lo = 1.0
    for _ in range(periods):
        hi = lo * sigma
        levels.append(p.gamma * (lo + hi) / 2 + (hi - lo) / 2)
        lo = hi
    return levels


def sigma_window(p, periods):
    """A level window over which the sawtooth supremum equals its tail value:
    interior peak levels with two more teeth of headroom on each side."""
    if periods < 6:
        raise ValueError("need at least 6 periods for an interior window")
    levels = sigma_peak_levels(p, periods)
    return 0.999 * levels[periods - 5], levels[periods - 3]


def sup_ratio(g, p, t_lo, t_hi):
    """sup over t in [t_lo, t_hi] of (crossing+ + crossing-)/t, exactly.

    Both crossings are piecewise linear in t between critical levels (the
    tilted images of g's breakpoints), and the ratio is monotone on each
    piece, so the supremum is attained at a critical level or as a right
    limit there; right limits are evaluated with strict crossings.
    """
    if not 0 < t_lo < t_hi:
        raise ValueError("need 0 < t_lo < t_hi")
    for sign in (1, -1):
        if gamma_crossing(g, p, t_hi, sign) == INF:
            raise UnboundedCandidateError(
                f"crossing with sign {sign:+d} is infinite at t = {t_hi}")
    levels = {t_lo, t_hi}
    for sign in (1, -1):
        for x, y in zip(g.breakpoints, g.values):
            v = p.gamma * x + sign * y
            if t_lo <= v <= t_hi:
                levels.add(v)
    best = -INF
    for t in sorted(levels):
        r = (gamma_crossing(g, p, t, 1) + gamma_crossing(g, p, t, -1)) / t
        if r > best:
            best = r
        if t < t_hi:
            r = (gamma_crossing(g, p, t, 1, strict=True)
                 + gamma_crossing(g, p, t, -1, strict=True)) / t
            if r > best:
                best = r
    return best


def sigma_f_value(lam, periods=10):
    """Empirical f(lam) through the sawtooth pipeline: build the sawtooth,
    evaluate the ratio supremum on an interior window, substitute into f."""
    p = GammaParam.from_lambda(lam)
    g = sigma_g(p, periods)
    t_lo, t_hi = sigma_window(p, periods)
    h = sup_ratio(g, p, t_lo, t_hi)
    return f_from_h(h, lam)


def random_alternating_candidate(rng, p, max_pieces=40, span_cap=1e9):
    """Random alternating +-1 candidate with geometric-ish tooth growth tuned
    around the sawtooth ratio, canonicalized and extrema-reduced; the growth
    keeps both tilted functions unbounded so tail windows exist."""
    growth = sigma_ratio(p) * rng.uniform(0.75, 1.4)
    pts = [(0.0, 0.0)]
    x = y = 0.0
    slope = 1.0
    ell = rng.uniform(0.5, 2.0)
    for _ in range(max_pieces):
        x += ell
        y += slope * ell
        pts.append((x, y))
        slope = -slope
        ell *= growth * rng.uniform(0.8, 1.25)
        if x > span_cap:
            break
    g = PLFunction.from_points(pts, tail_slope=slope)
    return remove_extrema(canonicalize(g, span=x), p)


def tilted_peak_levels(g, p, sign):
    """Levels of the local maxima of gamma*x + sign*g(x), ascending."""
    vals = [p.gamma * x + sign * y for x, y in zip(g.breakpoints, g.values)]
    return sorted(vals[i] for i in range(1, len(vals) - 1)
                  if vals[i] >= vals[i - 1] and vals[i] >= vals[i + 1])


def candidate_window(g, p):
    """The full level window a candidate supports: [1, 95% of the joint
    crossing capacity].  Measuring the ratio supremum here gives the
    candidate every jump it owns, and is dominated by its true limit
    superior (which is infinite past the capacity).  Returns None when the
    capacity does not even reach level 1."""
    cap_p = max(p.gamma * x + y for x, y in zip(g.breakpoints, g.values))
    cap_m = max(p.gamma * x - y for x, y in zip(g.breakpoints, g.values))
    cap = 0.95 * min(cap_p, cap_m)
    if cap <= 1.0:
        return None
    return 1.0, cap


def canonicalize(g, span):
    """Distance-1 tracker: replace g by a function with slopes alternating
    +1, -1 starting at +1, staying within sup-distance 1 of g on [0, span].

    The tracker moves with slope +1 until it sits 1 above g, then with slope
    -1 until 1 below, and so on; pieces after the first have length >= 1 and
    the first has length >= 1/2 (the final piece may be cut at span).
    """
    if span <= 0:
        raise ValueError("span must be positive")
    if span > 1e14:
        raise ValueError("span too large for distance-1 tracking in float64")
    pts = [(0.0, 0.0)]
    x0, y0, slope = 0.0, 0.0, 1.0
    while x0 < span:
        # first x > x0 where slope * (tracker - g) reaches +1
        xs = [x0] + [b for b in g.breakpoints if b > x0]
        ys = [slope * (y0 + slope * (x - x0) - g(x)) for x in xs]
        tail = 1 - slope * g.tail_slope
        nxt = _first_crossing(xs, ys, tail, 1.0)
        if nxt >= span or nxt == INF:
            pts.append((span, y0 + slope * (span - x0)))
            break
        if nxt <= x0:
            raise ValueError("tracker made no progress; span too large for float64")
        y0 = y0 + slope * (nxt - x0)
        x0 = nxt
        pts.append((x0, y0))
        slope = -slope
    return PLFunction.from_points(pts, tail_slope=slope)


def remove_extrema(g, p):
    """Delete dominated peaks and valleys of an alternating +-1 function.

    A peak (odd vertex) whose tilted value gamma*x + g(x) does not exceed the
    previous peak's can never be a first crossing; it is removed by extending
    the neighbouring descending and ascending lines until they meet (and
    symmetrically for valleys under gamma*x - g(x)).  Repeats on the first
    removable extremum until none remains.
    """
    if not g.is_alternating_unit():
        raise ValueError("input must have alternating +-1 slopes starting with +1")
    xs, ys = list(g.breakpoints), list(g.values)
    gamma = p.gamma
    changed = True
    while changed:
        changed = False
        m = len(xs)
        for i in range(2, m - 2):
            peak = i % 2 == 1
            sign = 1.0 if peak else -1.0
            if gamma * xs[i] + sign * ys[i] <= gamma * xs[i - 2] + sign * ys[i - 2]:
                xstar = (xs[i - 1] + xs[i + 1] + sign * (ys[i - 1] - ys[i + 1])) / 2
                ystar = ys[i - 1] - sign * (xstar - xs[i - 1])
                xs[i - 1:i + 2] = [xstar]
                ys[i - 1:i + 2] = [ystar]
                changed = True
                break
    return PLFunction(tuple(xs), tuple(ys), g.tail_slope)


@dataclass(frozen=True)
class BreakpointTrace:
    """Piece lengths, piece ends and tilted crossing levels of an alternating
    +-1 function; the first piece always has slope +1."""

    piece_lengths: tuple
    ends: tuple
    crossing_values: tuple
    first_slope: int = 1


def trace(g, p):
    """Exact breakpoint trace of an alternating +-1 function, cross-checked
    in rational arithmetic against the closed formula expressing each piece
    end in terms of the crossing levels."""
    if not g.is_alternating_unit():
        raise ValueError("input must have alternating +-1 slopes starting with +1")
    gamma = Fraction(p.gamma)
    xs = [Fraction(b) for b in g.breakpoints]
    ell = [b - a for a, b in zip(xs, xs[1:])]
    ends, gvals, ts = [], [], []
    x = Fraction(0)
    y = Fraction(0)
    for i, l in enumerate(ell, start=1):
        x += l
        y += l if i % 2 == 1 else -l
        ends.append(x)
        gvals.append(y)
        ts.append(gamma * x + (y if i % 2 == 1 else -y))
    # closed formula x_i = t_i/(1+gamma) + sum_{j<i} 2/(1-gamma^2) q^(i-j) t_j
    q = (1 - gamma) / (1 + gamma)
    c = 2 / (1 - gamma * gamma)
    for i, xi in enumerate(ends, start=1):
        acc = ts[i - 1] / (1 + gamma)
        for j in range(1, i):
            acc += c * q ** (i - j) * ts[j - 1]
        if xi == 0:
            ok = acc == 0
        else:
            ok = abs(acc - xi) <= Fraction(1, 10 ** 9) * abs(xi)
        if not ok:
            raise ConsistencyError(f"piece end {i}: closed formula {acc} != {xi}")
    # identity t_i = sum_j (gamma + (-1)^(j-i)) ell_j
    for i in range(1, len(ell) + 1):
        acc = sum((gamma + (1 if (j - i) % 2 == 0 else -1)) * ell[j - 1]
                  for j in range(1, i + 1))
        if acc != ts[i - 1]:
            raise ConsistencyError(f"level identity failed at {i}")
    return BreakpointTrace(tuple(float(l) for l in ell),
                           tuple(float(x) for x in ends),
                           tuple(float(t) for t in ts))


def increasing_levels(ts, floor=1.0):
    """The subsequence of levels that are >= floor and strict running maxima;
    the reduction under which only these levels matter for the supremum."""
    out, best = [], -INF
    for t in ts:
        if t >= floor and t > best:
            out.append(t)
            best = t
    return out


def s_good(ts, S, p, tol=1e-9):
    """Whether the increasing level sequence certifies value S: for every
    checkable i, S*t_i dominates the closed lower-bound expression built from
    t_1..t_{i+1} (t_0 = 0).  A single-entry sequence is vacuously good."""
    gamma = p.gamma
    q = (1 - gamma) / (1 + gamma)
    c = 2 / (1 - gamma * gamma)
    full = [0.0] + list(ts)
    for i in range(1, len(ts)):
        rhs = (2 / (1 + gamma)) * full[i]
        for j in range(1, i + 2):
            rhs += c * q ** (i - j + 2) * (full[j] + full[j - 1])
        if S * full[i] < rhs - tol * max(1.0, abs(rhs)):
            return False
    return True


@dataclass(frozen=True)
class RecurrenceRun:
    """Trajectory of the level recurrence at a candidate value S.

    ``T`` holds the float-representable prefix (the scan itself continues on
    a rescaled state, so huge trajectories do not overflow);
    ``first_nonpositive`` is the 1-based index of the first entry <= 0, if
    any; ``discriminant`` belongs to the characteristic polynomial
    x^2 + alpha*x + beta of the equivalent three-term recurrence.
    """

    S: float
    T: tuple
    first_nonpositive: int | None
    discriminant: float
    alpha: float
    beta: float


def recurrence_discriminant(S, p):
    """Discriminant of x^2 + alpha*x + beta for the three-term form of the
    level recurrence at S; its sign flips exactly at the sawtooth value."""
    gamma = p.gamma
    q = (1 - gamma) / (1 + gamma)
    c = 2 / (1 - gamma * gamma)
    d = 2 / (1 + gamma)
    alpha = -(S - d - c * q) / (c * q)
    beta = (S - d) / c
    return alpha * alpha - 4 * beta, alpha, beta


def run_recurrence(t1, S, p, N):
    """Run the level recurrence T_1 = t1, T_{i+1} defined by the equality case
    of the certificate inequality, for N steps.

    Growth is geometric, so the linear state (T_i, running sum) is rescaled
    uniformly whenever it gets large; rescaling preserves signs and ratios.
    """
    if t1 <= 0:
        raise ValueError("t1 must be positive")
    if N < 2:
        raise ValueError("N must be at least 2")
    gamma = p.gamma
    q = (1 - gamma) / (1 + gamma)
    c = 2 / (1 - gamma * gamma)
    d = 2 / (1 + gamma)
    disc, alpha, beta = recurrence_discriminant(S, p)

    stored = [float(t1)]
    cur = float(t1)        # rescaled T_i
    acc = q * q * cur      # rescaled running sum_{j<=i} q^(i-j+2) (T_j + T_{j-1})
    scale = 1.0            # stored value = rescaled value * scale while storing
    first_np = None
    for i in range(2, N + 1):
        nxt = ((S - d) * cur - c * acc) / (c * q) - cur
        if not math.isfinite(nxt):
            raise OverflowError(f"recurrence overflowed at index {i}")
        if nxt <= 0 and first_np is None:
            first_np = i
            stored.append(nxt * scale if abs(nxt * scale) < 1e280 else nxt)
            break
        acc = q * acc + q * q * (nxt + cur)
        cur = nxt
        true_mag = abs(cur) * scale
        if true_mag < 1e280:
            stored.append(cur * scale)
        if abs(cur) > 1e200:
            cur *= 1e-200
            acc *= 1e-200
            scale *= 1e200
    return RecurrenceRun(S=float(S), T=tuple(stored), first_nonpositive=first_np,
                         discriminant=disc, alpha=alpha, beta=beta)


def rotate(g):
    """Change of variables z(x) = g(y) - y at the unique y with x = g(y) + y.

    Requires g non-decreasing (then x -> g(x) + x is strictly increasing and
    the difference quotients of g and the identity never have opposite signs,
    which is what makes z 1-Lipschitz); z(0) = 0 and the image is computed
    segment by segment in closed form.
    """
    for s in g.slopes() + [g.tail_slope]:
        if abs(s + 1) <= _ID_TOL:
            raise ValueError("a segment of slope -1 makes the parameterization non-invertible")
        if s < 0:
            raise ValueError("rotation requires a non-decreasing function")
    xs = tuple(y + v for y, v in zip(g.breakpoints, g.values))
    zs = tuple(v - y for y, v in zip(g.breakpoints, g.values))
    tail = (g.tail_slope - 1) / (g.tail_slope + 1)
    return PLFunction(xs, zs, tail)
