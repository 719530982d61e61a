"""Weak Denjoy sub-systems as symbolic objects.

A WDS is carried purely symbolically: the factor family of the Sturmian
subshift of its rotation angle, together with the circular order of its
central cylinders.  The order is computed from exact coding arcs, never
lexicographically: the cylinder of a central (2n+1)-word is the arc of
offsets whose coding realizes the word, and the circle orders the arcs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import permutations

import numpy as np

from .errors import (
    DegenerateArc,
    DepthMismatch,
    NotSaturated,
    RationalAlpha,
)
from .exact import QuadReal, as_real
from .symbolic import (
    CentralWindow,
    FactorSet,
    estimate_rotation_interval,
    factor_family,
    sturmian_window,
)


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WdsSymbolic:
    """Sturmian subshift of a rotation angle in (0, 1/2), with the factor
    family up to length 2*depth+1 and an orientation sign for the induced
    circular order (-1 models the inverse order of an equivalent WDS)."""

    alpha: QuadReal
    depth: int
    family: dict[int, FactorSet]
    window: CentralWindow
    orientation: int = 1

    def factors(self, length: int) -> FactorSet:
        return self.family[length]


@dataclass(frozen=True)
class CircularOrderGraph:
    """Admissible central words in their circular order, plus the exact
    arc left-endpoints realizing them."""

    depth: int
    cylinders: tuple[str, ...]
    arc_lefts: tuple[QuadReal, ...]

    def __len__(self) -> int:
        return len(self.cylinders)

    def position(self, word: str) -> int:
        return self.cylinders.index(word)

    def in_order(self, a: str, b: str, c: str) -> bool:
        """Ternary betweenness: b lies on the (directed) arc from a to c.
        Degenerate triples follow the interval conventions: (a, b, a) is
        always in order, and so are (a, a, c) and (a, c, c)."""
        i, j, k = self.position(a), self.position(b), self.position(c)
        if i == k:
            return True
        m = len(self.cylinders)
        return (j - i) % m <= (k - i) % m

    def index_triples(self) -> np.ndarray:
        """All ordered triples of distinct cylinder indices in circular order."""
        m = len(self.cylinders)
        out = []
        for i in range(m):
            for db in range(1, m):
                for dc in range(db + 1, m):
                    out.append((i, (i + db) % m, (i + dc) % m))
        return np.array(out, dtype=np.int64)


@dataclass(frozen=True)
class RotationClass:
    """Rotation number modulo sign: exact rational bounds inside [0, 1/2]."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not (0 <= self.lo <= self.hi <= Fraction(1, 2)):
            raise ValueError("class bounds must lie in [0, 1/2]")

    @property
    def representative(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def overlaps(self, other: "RotationClass") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


@dataclass(frozen=True)
class GapPair:
    """Two admissible central words coding the two endpoints of one gap:
    they agree for k >= k0 and k <= k1 and swap '10'/'01' in between."""

    upper: str   # carries '10' at the swap (left gap endpoint coding)
    lower: str   # carries '01' at the swap (right gap endpoint coding)
    position: int  # window index j of the swap: words differ at j, j+1
    k0: int
    k1: int


class Equivalence(enum.Enum):
    EQUAL_ORDER = "EqualOrder"
    REVERSED_ORDER = "ReversedOrder"
    NOT_EQUIVALENT = "NotEquivalent"


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def build_wds(
    alpha,
    depth: int,
    *,
    initial_radius: int | None = None,
    max_radius: int = 1 << 17,
    orientation: int = 1,
) -> WdsSymbolic:
    """Generate the factor family from a saturated Sturmian window and
    verify the Sturmian invariants (complexity n+1, balance <= 1)."""
    a = as_real(alpha)
    if a.is_rational:
        raise RationalAlpha(f"{alpha} is rational")
    if not (QuadReal(0) < a < Fraction(1, 2)):
        raise ValueError("alpha must lie in (0, 1/2)")
    top = 2 * depth + 1
    radius = initial_radius or max(8 * top, 128)
    while True:
        w = sturmian_window(a, 0, radius)
        fam = factor_family(w, top)
        if all(len(fam[n]) == n + 1 for n in range(1, top + 1)):
            break
        if radius >= max_radius:
            raise NotSaturated(
                f"factors not saturated at depth {depth} with radius {radius}")
        radius *= 2
    for n in range(1, top + 1):
        ones = {u.count("1") for u in fam[n].words}
        if max(ones) - min(ones) > 1:
            raise NotSaturated(f"balance defect exceeds 1 at length {n}")
    return WdsSymbolic(a, depth, fam, w, orientation)


def reversed_wds(w: WdsSymbolic) -> WdsSymbolic:
    """Same subshift with the inverse circular order."""
    return replace(w, orientation=-w.orientation)


# ---------------------------------------------------------------------------
# cylinder order
# ---------------------------------------------------------------------------

def _coding_word(alpha: QuadReal, theta: QuadReal, n: int) -> str:
    chars = []
    t = (theta + (-n) * alpha).frac()
    one = QuadReal(1)
    for _ in range(2 * n + 1):
        chars.append("0" if t < alpha else "1")
        t = t + alpha
        if t >= one:
            t = t - 1
    return "".join(chars)


def cylinder_order(w: WdsSymbolic) -> CircularOrderGraph:
    """Order the admissible central words by the left endpoints of their
    coding arcs.  The arcs are cut by the exact points {j*alpha} for
    j in [-n, n+1]; the coding is right-continuous, so each arc's word is
    the word of its left endpoint."""
    n = w.depth
    alpha = w.alpha
    pts = [(j * alpha).frac() for j in range(-n, n + 2)]
    pts.sort()
    for p, q in zip(pts, pts[1:]):
        if not (p < q):
            raise DegenerateArc("coinciding arc boundaries (rational angle?)")
    words = tuple(_coding_word(alpha, p, n) for p in pts)
    if len(set(words)) != len(words):
        raise DegenerateArc("two arcs realize the same central word")
    if set(words) != set(w.factors(2 * n + 1).words):
        raise DegenerateArc("arc words disagree with the factor family")
    if w.orientation < 0:
        words = words[::-1]
        pts = pts[::-1]
    return CircularOrderGraph(n, words, tuple(pts))


# ---------------------------------------------------------------------------
# Hausdorff distance between order graphs
# ---------------------------------------------------------------------------

def _agreement(u: str, v: str, n: int) -> int:
    """Min |k| of disagreement between central words; n+1 when equal."""
    c = n  # index of k = 0
    for k in range(n + 1):
        if u[c + k] != v[c + k] or u[c - k] != v[c - k]:
            return k
    return n + 1


def _directed_value(agr: np.ndarray, t1: np.ndarray, t2: np.ndarray) -> int:
    """max over t1 of min over t2 of the triple distance, in agreement units
    (larger agreement = smaller distance), returned as min-max agreement."""
    a = np.minimum.reduce([
        agr[np.ix_(t1[:, 0], t2[:, 0])],
        agr[np.ix_(t1[:, 1], t2[:, 1])],
        agr[np.ix_(t1[:, 2], t2[:, 2])],
    ])
    return int(a.max(axis=1).min())


def graph_hausdorff(g1: CircularOrderGraph, g2: CircularOrderGraph) -> Fraction:
    """Hausdorff distance between the triple sets under the product shift
    metric, minimized over g2 and its order reversal."""
    if g1.depth != g2.depth:
        raise DepthMismatch(f"depths {g1.depth} != {g2.depth}")
    n = g1.depth
    agr = np.empty((len(g1), len(g2)), dtype=np.int64)
    for i, u in enumerate(g1.cylinders):
        for j, v in enumerate(g2.cylinders):
            agr[i, j] = _agreement(u, v, n)
    t1 = g1.index_triples()
    t2 = g2.index_triples()
    best = Fraction(1)
    for t2_variant in (t2, t2[:, ::-1]):
        h = min(_directed_value(agr, t1, t2_variant),
                _directed_value(agr.T, t2_variant, t1))
        dist = Fraction(0) if h >= n + 1 else Fraction(1, h + 1)
        best = min(best, dist)
    return best


# ---------------------------------------------------------------------------
# rotation class and equivalence
# ---------------------------------------------------------------------------

def fold_interval(lo: Fraction, hi: Fraction) -> RotationClass:
    """Fold an interval of angles through x -> min(x, 1-x) into [0, 1/2]."""
    half = Fraction(1, 2)
    if hi <= half:
        return RotationClass(lo, hi)
    if lo >= half:
        return RotationClass(1 - hi, 1 - lo)
    return RotationClass(min(lo, 1 - hi), half)


def rotation_class(w: WdsSymbolic, **kwargs) -> RotationClass:
    iv = estimate_rotation_interval(w.window, **kwargs)
    return fold_interval(iv.lo, iv.hi)


def _cyclic_equal(a: tuple, b: tuple) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    double = b + b
    return any(double[i:i + len(a)] == a for i in range(len(b)))


def equivalence_test(w1: WdsSymbolic, w2: WdsSymbolic) -> Equivalence:
    """Outcome of comparing two symbolic WDS: same subshift with the same
    circular order, with the inverse order, or different subshifts."""
    if w1.depth != w2.depth:
        raise DepthMismatch(f"depths {w1.depth} != {w2.depth}")
    top = 2 * w1.depth + 1
    for n in range(1, top + 1):
        if w1.factors(n).words != w2.factors(n).words:
            return Equivalence.NOT_EQUIVALENT
    g1 = cylinder_order(w1)
    g2 = cylinder_order(w2)
    if _cyclic_equal(g1.cylinders, g2.cylinders):
        return Equivalence.EQUAL_ORDER
    if _cyclic_equal(g1.cylinders, g2.cylinders[::-1]):
        return Equivalence.REVERSED_ORDER
    return Equivalence.NOT_EQUIVALENT


# ---------------------------------------------------------------------------
# gap pairs
# ---------------------------------------------------------------------------

def asymptotic_pairs_in(words, radius: int) -> list[GapPair]:
    """Scan a set of central words for pairs differing by exactly one
    adjacent '10' <-> '01' swap (the coding signature of a gap)."""
    ws = sorted(words)
    pairs = []
    for i, u in enumerate(ws):
        for v in ws[i + 1:]:
            diffs = [p for p in range(len(u)) if u[p] != v[p]]
            if len(diffs) != 2 or diffs[1] != diffs[0] + 1:
                continue
            p = diffs[0]
            du, dv = u[p:p + 2], v[p:p + 2]
            if {du, dv} != {"10", "01"}:
                continue
            upper, lower = (u, v) if du == "10" else (v, u)
            j = p - radius
            pairs.append(GapPair(upper, lower, j, k0=j + 2, k1=j - 1))
    return pairs


def asymptotic_pairs(w: WdsSymbolic) -> list[GapPair]:
    if w.depth < 10:
        raise ValueError("gap detection needs depth >= 10")
    return asymptotic_pairs_in(w.factors(2 * w.depth + 1).words, w.depth)


def _pairs_aligned(p1: GapPair, p2: GapPair, radius: int) -> bool:
    # Windows of one bi-infinite pair satisfy u2[k] = u1[k + s] with
    # s = j1 - j2 (swap offsets), on the overlapping index range.
    s = p1.position - p2.position
    lo = max(-radius, -radius - s)
    hi = min(radius, radius - s)
    if hi < lo:
        return False
    c = radius
    for k in range(lo, hi + 1):
        if p2.upper[k + c] != p1.upper[k + s + c]:
            return False
        if p2.lower[k + c] != p1.lower[k + s + c]:
            return False
    return True


def gap_orbit_count(w: WdsSymbolic) -> int:
    pairs = asymptotic_pairs(w)
    return count_gap_orbits(pairs, w.depth)


def count_gap_orbits(pairs: list[GapPair], radius: int) -> int:
    reps: list[GapPair] = []
    for p in pairs:
        if not any(_pairs_aligned(p, r, radius) for r in reps):
            reps.append(p)
    return len(reps)


# ---------------------------------------------------------------------------
# continuity probe
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProbeRow:
    alpha_prime: QuadReal
    distance: float            # |alpha' - alpha0|
    agreement_radius: int      # largest R with identical windows on [-R, R]
    hausdorff_bound: Fraction
    class0: RotationClass
    class1: RotationClass


@dataclass(frozen=True)
class ContinuityReport:
    alpha0: QuadReal
    radius: int
    depth: int
    rows: tuple[ProbeRow, ...]
    monotone: bool


def continuity_probe(alpha0, radius: int, perturbations, depth: int = 6) -> ContinuityReport:
    """For each perturbed angle report the window agreement radius, the
    order-graph distance and both rotation classes, then check the
    monotone relation: closer angle => larger agreement => smaller bound."""
    a0 = as_real(alpha0)
    w0 = build_wds(a0, depth)
    g0 = cylinder_order(w0)
    win0 = sturmian_window(a0, 0, radius)
    cls0 = rotation_class(w0)
    rows = []
    for ap in perturbations:
        a1 = as_real(ap)
        win1 = sturmian_window(a1, 0, radius)
        agree = radius
        for k in range(radius + 1):
            if win0[k] != win1[k] or win0[-k] != win1[-k]:
                agree = k - 1
                break
        if a1 == a0:
            bound, cls1 = Fraction(0), cls0
        else:
            w1 = build_wds(a1, depth)
            bound = graph_hausdorff(g0, cylinder_order(w1))
            cls1 = rotation_class(w1)
        rows.append(ProbeRow(a1, abs(float(a1) - float(a0)), agree, bound, cls0, cls1))
    by_dist = sorted(rows, key=lambda r: r.distance)
    monotone = all(
        r1.agreement_radius >= r2.agreement_radius and r1.hausdorff_bound <= r2.hausdorff_bound
        for r1, r2 in zip(by_dist, by_dist[1:])
    )
    return ContinuityReport(a0, radius, depth, tuple(rows), monotone)
