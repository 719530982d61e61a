"""Explicit Denjoy circle maps with a single gap orbit.

The construction blows up the rotation orbit {n*alpha}: the orbit point
of index n becomes a gap of length c/((|n|+1)(|n|+2)) with c = 1/3, so
the total gap mass is 1/2 and the minimal Cantor set keeps measure 1/2.
On each gap the map is the affine bijection onto the next gap; on the
minimal set it is conjugate to the rotation through the measure
coordinate.  Gaps beyond the index cutoff M are kept as points and
their mass (the error budget) is reported.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import NotInMinimalSet, RationalAlpha
from .exact import as_real, is_exact
from .symbolic import CentralWindow

#: gap-length normalizer: sum over Z of 1/((|n|+1)(|n|+2)) = 3/2, so c = 1/3
#: makes the total gap mass exactly 1/2.
GAP_NORMALIZER = Fraction(1, 3)


def gap_length(n: int, c: float = float(GAP_NORMALIZER)) -> float:
    return c / ((abs(n) + 1) * (abs(n) + 2))


@dataclass
class DenjoyMap:
    """Denjoy example: circle homeomorphism with rotation number alpha whose
    complement of the minimal set is the orbit of one gap anchored at 0."""

    alpha: object                 # exact QuadReal/Fraction or float
    cutoff: int
    alpha_float: float = field(init=False)
    # sorted-by-position tables over orbit indices |n| <= cutoff
    _pos: np.ndarray = field(init=False, repr=False)      # {n alpha}, sorted
    _idx: np.ndarray = field(init=False, repr=False)      # orbit index n per slot
    _len: np.ndarray = field(init=False, repr=False)      # gap lengths per slot
    _cum: np.ndarray = field(init=False, repr=False)      # exclusive mass prefix
    _a: np.ndarray = field(init=False, repr=False)        # gap left endpoints
    _slot_of_n: np.ndarray = field(init=False, repr=False)
    error_budget: float = field(init=False)

    def __post_init__(self):
        m = self.cutoff
        self.alpha_float = float(self.alpha)
        ns = np.arange(-m, m + 1)
        pos = np.mod(ns * self.alpha_float, 1.0)
        lens = float(GAP_NORMALIZER) / ((np.abs(ns) + 1.0) * (np.abs(ns) + 2.0))
        order = np.argsort(pos)
        self._pos = pos[order]
        self._idx = ns[order]
        self._len = lens[order]
        cum = np.cumsum(self._len)
        self._cum = np.concatenate([[0.0], cum[:-1]])
        self._a = 0.5 * self._pos + self._cum
        slot = np.empty(2 * m + 1, dtype=np.int64)
        slot[self._idx + m] = np.arange(2 * m + 1)
        self._slot_of_n = slot
        self.error_budget = 2.0 * float(GAP_NORMALIZER) / (m + 2)

    # --- coordinates ---------------------------------------------------

    def gap_endpoints(self, n: int) -> tuple[float, float]:
        """(a_n, b_n) for the gap at orbit index n."""
        if abs(n) > self.cutoff:
            raise IndexError(f"gap index {n} beyond cutoff {self.cutoff}")
        s = self._slot_of_n[n + self.cutoff]
        return float(self._a[s]), float(self._a[s] + self._len[s])

    @property
    def gap_zero(self) -> tuple[float, float]:
        return self.gap_endpoints(0)

    def position_of_angle(self, theta: float) -> float:
        """Image of the rotation coordinate theta in the blown-up circle
        (left limit at orbit points, i.e. the gap's left endpoint)."""
        theta %= 1.0
        j = bisect_right(self._pos, theta) - 1
        if j >= 0 and self._pos[j] == theta:
            return float(self._a[j])
        mass = self._cum[j] + self._len[j] if j >= 0 else 0.0
        return 0.5 * theta + float(mass)

    def locate_gap(self, x: float) -> int | None:
        """Sorted slot of the gap whose closure contains x, else None."""
        j = bisect_right(self._a, x) - 1
        if j >= 0 and x <= self._a[j] + self._len[j]:
            return j
        return None

    def angle_of_position(self, x: float) -> float:
        """Semi-conjugacy to the rotation: collapse each gap to its anchor."""
        j = self.locate_gap(x)
        if j is not None:
            return float(self._pos[j])
        k = bisect_right(self._a, x) - 1
        mass = self._cum[k] + self._len[k] if k >= 0 else 0.0
        return 2.0 * (x - float(mass))

    # --- the map ---------------------------------------------------------

    def _step(self, x: float, direction: int) -> float:
        j = self.locate_gap(x)
        if j is not None:
            n = int(self._idx[j])
            n2 = n + direction
            if abs(n2) <= self.cutoff:
                s2 = self._slot_of_n[n2 + self.cutoff]
                t = (x - self._a[j]) / self._len[j]
                return float(self._a[s2] + t * self._len[s2])
            # beyond the cutoff the gap is a point
            return self.position_of_angle((self._pos[j] + direction * self.alpha_float) % 1.0)
        theta = self.angle_of_position(x)
        return self.position_of_angle((theta + direction * self.alpha_float) % 1.0)

    def __call__(self, x: float) -> float:
        return self._step(x, +1)

    def inverse(self, x: float) -> float:
        return self._step(x, -1)


def denjoy_build(alpha, cutoff: int = 10 ** 4) -> DenjoyMap:
    """Build the Denjoy example for an irrational-representable alpha."""
    if cutoff < 10 ** 3:
        raise ValueError("cutoff must be at least 10^3")
    if is_exact(alpha):
        a = as_real(alpha)
        if a.is_rational:
            raise RationalAlpha(f"{alpha} is rational: the coding would be periodic")
        return DenjoyMap(a, cutoff)
    return DenjoyMap(float(alpha), cutoff)


def rotation_estimate(h: DenjoyMap, x: float, iterations: int) -> float:
    """Orbit average of the canonical lift: mean of (h(y) - y) mod 1."""
    y = x
    total = 0.0
    for _ in range(iterations):
        y2 = h(y)
        total += (y2 - y) % 1.0
        y = y2
    return total / iterations


# ---------------------------------------------------------------------------
# semi-conjugacy
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SemiConjugacy:
    """Monotone degree-one map k with k(h(x)) = k(x) + alpha, k(b_0) = 0."""

    denjoy: DenjoyMap

    @property
    def cutoff(self) -> int:
        return self.denjoy.cutoff

    def __call__(self, x: float) -> float:
        return self.denjoy.angle_of_position(x)


def semi_conjugacy(h: DenjoyMap) -> SemiConjugacy:
    return SemiConjugacy(h)


# ---------------------------------------------------------------------------
# symbolic coding of the minimal set
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CodingIntervals:
    """Half-open coding arcs: I0 runs from the middle of the base gap to the
    middle of its image gap in the direct sense; I1 is the complement.
    Both endpoints sit in gap interiors, so minimal-set points are always
    classified with a margin of half the smaller gap length."""

    mid0: float
    mid1: float

    def symbol(self, x: float) -> int:
        return 0 if self.mid0 <= x < self.mid1 else 1


def coding_intervals(h: DenjoyMap) -> CodingIntervals:
    a0, b0 = h.gap_endpoints(0)
    a1, b1 = h.gap_endpoints(1)
    return CodingIntervals(0.5 * (a0 + b0), 0.5 * (a1 + b1))


def itinerary(
    h: DenjoyMap,
    ci: CodingIntervals,
    x: float,
    radius: int,
    clearance: float = 1e-9,
) -> CentralWindow:
    """Central itinerary window of x under h with respect to the coding arcs."""
    j = h.locate_gap(x)
    if j is not None:
        a = float(h._a[j])
        b = a + float(h._len[j])
        if a + clearance < x < b - clearance:
            raise NotInMinimalSet(f"{x} lies inside the gap ({a}, {b})")
    symbols = [0] * (2 * radius + 1)
    y = x
    for k in range(radius + 1):
        symbols[k + radius] = ci.symbol(y)
        y = h(y)
    y = x
    for k in range(1, radius + 1):
        y = h.inverse(y)
        symbols[radius - k] = ci.symbol(y)
    return CentralWindow(radius, tuple(symbols))


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def write_denjoy(h: DenjoyMap, path, label: str | None = None) -> None:
    conv = Fraction(h.alpha_float).limit_denominator(10 ** 6)
    alpha_field = label if label is not None else f"float:{h.alpha_float!r}"
    with open(path, "w") as fh:
        fh.write(f"alpha={alpha_field}\n")
        fh.write(f"convergent={conv.numerator}/{conv.denominator}\n")
        fh.write(f"c={GAP_NORMALIZER.numerator}/{GAP_NORMALIZER.denominator}\n")
        fh.write(f"M={h.cutoff}\n")


def read_denjoy(path) -> DenjoyMap:
    from .exact import parse_angle

    fields = {}
    with open(path) as fh:
        for line in fh:
            if "=" in line:
                key, val = line.strip().split("=", 1)
                fields[key] = val
    spec = fields["alpha"]
    if spec.startswith("float:"):
        alpha = float(spec[6:])
    else:
        alpha = parse_angle(spec)
    return denjoy_build(alpha, int(fields["M"]))
