"""Exact geometric model: rotation by alpha with the two-cell partition.

The circle is [0, 1) with t -> t + alpha mod 1 and cells [0, 1-alpha),
[1-alpha, 1). Depth-n refinements have endpoints (-j*alpha) mod 1, so all
geometry lives in the quadratic field of alpha and every comparison is
exact. This is the independent oracle for the symbolic computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .contfrac import CFExpansion, convergents, quadratic_of_cf
from .generators import RotationCodingSource, kappa_images
from .quadratic import ONE, ZERO, QuadraticReal
from .recurrence import DEFAULT_POLICY, WindowPolicy, tau_cylinder
from .words import occurrences


@dataclass(frozen=True)
class RotationSpec:
    """Rotation angle plus (optionally) its continued fraction.

    The expansion, when present, powers the best-approximation ladder in
    tau_interval; without it the linear scan is used.
    """

    alpha: QuadraticReal
    cf: CFExpansion | None = None

    def __post_init__(self):
        if self.alpha.is_rational:
            raise ValueError("rotation angle must be irrational")
        if not (ZERO < self.alpha < ONE):
            raise ValueError("rotation angle must lie in (0, 1)")

    @classmethod
    def from_cf(cls, cf: CFExpansion) -> "RotationSpec":
        return cls(quadratic_of_cf(cf), cf)

    @property
    def description(self) -> str:
        return str(self.cf) if self.cf is not None else str(self.alpha)


@dataclass(frozen=True)
class IntervalAtom:
    left: QuadraticReal
    right: QuadraticReal
    depth: int

    @property
    def length(self) -> QuadraticReal:
        return self.right - self.left


def partition_points(spec: RotationSpec, n: int) -> list[QuadraticReal]:
    """Endpoints (-j*alpha) mod 1 for 0 <= j <= n, sorted ascending."""
    pts = []
    t = ZERO
    for _ in range(n + 1):
        pts.append(t)
        t = (t - spec.alpha).mod1()
    pts.sort()
    return pts


def atom_lengths(spec: RotationSpec, n: int) -> list[QuadraticReal]:
    """Lengths of all depth-n atoms, in circle order."""
    pts = partition_points(spec, n)
    out = [b - a for a, b in zip(pts, pts[1:])]
    out.append(ONE - pts[-1])
    return out


def atom_of(spec: RotationSpec, t: QuadraticReal, n: int) -> IntervalAtom:
    """The depth-n atom [l, r) containing t."""
    if not isinstance(t, QuadraticReal):
        t = QuadraticReal(t)
    if not (ZERO <= t < ONE):
        raise ValueError("t must lie in [0, 1)")
    pts = partition_points(spec, n)
    left = ZERO
    right = ONE
    for p in pts:
        if p <= t:
            left = p
        else:
            right = p
            break
    return IntervalAtom(left, right, n)


def _abs(x: QuadraticReal) -> QuadraticReal:
    return -x if x.sign() < 0 else x


def tau_length(spec: RotationSpec, length: QuadraticReal) -> int:
    """min{k >= 1 : ||k*alpha|| < length}, i.e. when the shifted interval
    first overlaps itself.

    With the expansion available only convergent denominators are tested
    (no smaller k can beat the previous convergent's distance); otherwise
    k is scanned linearly.
    """
    if length.sign() <= 0:
        raise ValueError("interval length must be positive")
    if spec.cf is not None:
        if _dist(spec.alpha, 1) < length:
            return 1
        i = 1
        p_prev, q_prev = 1, 0
        p, q = 0, 1
        while True:
            a = spec.cf.coefficient(i)  # finite expansions may raise here
            p, p_prev = a * p + p_prev, p
            q, q_prev = a * q + q_prev, q
            # ||q*alpha|| = |q*alpha - p| exactly
            if _abs(spec.alpha * q - p) < length:
                return q
            i += 1
    return tau_length_linear(spec, length)


def tau_length_linear(spec: RotationSpec, length: QuadraticReal) -> int:
    frac = ZERO
    k = 0
    while True:
        k += 1
        frac = (frac + spec.alpha).mod1()
        if min(frac, ONE - frac) < length:
            return k


def _dist(alpha: QuadraticReal, k: int) -> QuadraticReal:
    frac = (alpha * k).mod1()
    other = ONE - frac
    return frac if frac < other else other


def tau_interval(spec: RotationSpec, atom: IntervalAtom) -> int:
    """Recurrence time of an interval under the rotation."""
    return tau_length(spec, atom.length)


# ------------------------------------------------------------------ measures

def _segments_intersect(segs, lo, hi):
    out = []
    for a, b in segs:
        l = a if a > lo else lo
        r = b if b < hi else hi
        if l < r:
            out.append((l, r))
    return out


def cylinder_interval(spec: RotationSpec, word: str) -> list[tuple[QuadraticReal, QuadraticReal]]:
    """The set {t : the coding of t starts with word}, as disjoint segments.

    Mathematically one arc; it may come back in two pieces when it wraps 0.
    """
    boundary = ONE - spec.alpha
    segs = [(ZERO, ONE)]
    shift = ZERO  # (-j*alpha) mod 1
    for sym in word:
        if sym == "0":
            lo, hi = ZERO, boundary
        elif sym == "1":
            lo, hi = boundary, ONE
        else:
            raise ValueError("symbols must be 0 or 1, got %r" % sym)
        # preimage of [lo, hi) under t -> t + j*alpha is [lo, hi) + shift
        a = (lo + shift).mod1()
        b = a + (hi - lo)
        if b <= ONE:
            pre = [(a, b)]
        else:
            pre = [(a, ONE), (ZERO, b - ONE)]
        segs = [
            s for lo2, hi2 in pre for s in _segments_intersect(segs, lo2, hi2)
        ]
        if not segs:
            return []
        shift = (shift - spec.alpha).mod1()
    return segs


def cylinder_measure(spec: RotationSpec, word: str) -> QuadraticReal:
    """Exact measure of the cylinder of word; 0 when word is not a factor."""
    total = ZERO
    for a, b in cylinder_interval(spec, word):
        total = total + (b - a)
    return total


def mu_tower_values(
    spec: RotationSpec, steps, empirical_text: str | None = None
):
    """Weighted base measures of the composition tower at depth len(steps).

    The tower at depth n has two bases, reached by the composed images
    v = k_1..k_n(0) and u = k_1..k_n(1); a base is the set of points whose
    coding starts with the image word followed by u (u is a prefix of v,
    and both v and u are return words to u, so these aligned cylinders
    tile the space by Kac's theorem). Returns (value_0, value_1) with
    value_a = |image_a| * measure(aligned cylinder of a).

    With empirical_text the measures are occurrence frequencies in that
    text instead of exact lengths, and floats come back.
    """
    v, u = kappa_images(list(steps))
    out = []
    for w in (v, u):
        pattern = w + u
        if empirical_text is None:
            out.append(len(w) * cylinder_measure(spec, pattern))
        else:
            positions = len(occurrences(pattern, empirical_text))
            slots = len(empirical_text) - len(pattern) + 1
            if slots <= 0:
                raise ValueError("text shorter than the aligned pattern")
            out.append(len(w) * positions / slots)
    return out[0], out[1]


# --------------------------------------------------------------- cross-check

@dataclass(frozen=True)
class CrossCheckRow:
    n: int
    tau_symbolic: int
    tau_geometric: int
    atom_length: QuadraticReal
    match: bool


@dataclass
class CrossCheckReport:
    alpha: str
    depth: int
    rows: list[CrossCheckRow]

    CSV_HEADER = "n,tau_symbolic,tau_geometric,atom_len_num_approx,match"

    @property
    def mismatches(self) -> list[CrossCheckRow]:
        return [r for r in self.rows if not r.match]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_csv(self) -> str:
        lines = [self.CSV_HEADER]
        for r in self.rows:
            lines.append(
                "%d,%d,%d,%.12g,%d"
                % (
                    r.n,
                    r.tau_symbolic,
                    r.tau_geometric,
                    float(r.atom_length),
                    int(r.match),
                )
            )
        return "\n".join(lines) + "\n"


def cross_check(
    spec: RotationSpec, depth: int, policy: WindowPolicy = DEFAULT_POLICY
) -> CrossCheckReport:
    """Symbolic vs geometric recurrence times at t = 0, depths 1..depth.

    Symbolic side: tau of the depth-n cylinder of the coding of 0.
    Geometric side: tau of the depth-n atom [0, min_{1<=j<=n} (-j*alpha)).
    The two must agree exactly at every depth.
    """
    source = RotationCodingSource(spec.alpha, 0, "rotation %s" % spec.description)
    rows = []
    point = ZERO
    m = None
    for n in range(1, depth + 1):
        point = (point - spec.alpha).mod1()
        if m is None or point < m:
            m = point
        geo = tau_length(spec, m)
        sym = tau_cylinder(source, n, policy).tau
        rows.append(CrossCheckRow(n, sym, geo, m, sym == geo))
    return CrossCheckReport(spec.description, depth, rows)
