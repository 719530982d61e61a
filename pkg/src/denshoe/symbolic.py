"""Binary coding words, the shift metric, and rotation-number recovery.

The coding convention throughout: symbol 0 at time k iff the rotated
point {theta + k*alpha} lies in the half-open arc [0, alpha); symbol 1
on the complementary arc.  Endpoint hits are resolved by the half-open
rule, so exact angles always produce a well-defined symbol.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import BoundaryUndecidable, NotSturmian, WindowTooShort
from .exact import QuadReal, as_real, is_exact

GUARD_BAND = 1e-12
ESCALATED_DPS = 60
ESCALATED_GUARD = 1e-40


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CentralWindow:
    """Finite central block of a bi-infinite 0/1 coding, indices -N..N."""

    radius: int
    symbols: tuple[int, ...]

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("radius must be non-negative")
        if len(self.symbols) != 2 * self.radius + 1:
            raise ValueError("need exactly 2N+1 symbols")
        if any(s not in (0, 1) for s in self.symbols):
            raise ValueError("symbols must be 0 or 1")

    def __getitem__(self, k: int) -> int:
        if abs(k) > self.radius:
            raise IndexError(f"index {k} outside [-{self.radius}, {self.radius}]")
        return self.symbols[k + self.radius]

    def __len__(self) -> int:
        return 2 * self.radius + 1

    def word(self) -> str:
        return "".join("01"[s] for s in self.symbols)

    def segment(self, lo: int, hi: int) -> str:
        """Symbols at indices lo..hi inclusive, as a string."""
        if lo < -self.radius or hi > self.radius:
            raise IndexError("segment outside window")
        return self.word()[lo + self.radius:hi + self.radius + 1]

    @classmethod
    def from_word(cls, word: str) -> "CentralWindow":
        if len(word) % 2 == 0:
            raise ValueError("central word must have odd length")
        return cls(len(word) // 2, tuple(int(c) for c in word))

    def write(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(f"N={self.radius}\n")
            for k in range(-self.radius, self.radius + 1):
                fh.write(f"{k} {self[k]}\n")

    @classmethod
    def read(cls, path) -> "CentralWindow":
        with open(path) as fh:
            header = fh.readline().strip()
            if not header.startswith("N="):
                raise ValueError("window file must start with N=<radius>")
            radius = int(header[2:])
            got = {}
            for line in fh:
                if not line.strip():
                    continue
                k, s = line.split()
                got[int(k)] = int(s)
        return cls(radius, tuple(got[k] for k in range(-radius, radius + 1)))


@dataclass(frozen=True)
class FactorSet:
    """All distinct length-n sub-blocks observed in a window."""

    length: int
    words: frozenset[str]

    def __post_init__(self):
        if any(len(u) != self.length for u in self.words):
            raise ValueError("factor length mismatch")

    def __len__(self) -> int:
        return len(self.words)

    def sorted_words(self) -> list[str]:
        return sorted(self.words)

    def write(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(f"n={self.length}\n")
            for u in self.sorted_words():
                fh.write(u + "\n")

    @classmethod
    def read(cls, path) -> "FactorSet":
        with open(path) as fh:
            header = fh.readline().strip()
            if not header.startswith("n="):
                raise ValueError("factor file must start with n=<length>")
            n = int(header[2:])
            words = frozenset(line.strip() for line in fh if line.strip())
        return cls(n, words)


@dataclass(frozen=True)
class ShiftDistance:
    """Value of the shift metric d(u,v) = max_k |u_k - v_k| / (|k|+1).

    `truncated` marks comparisons of unequal radii, where the value is
    only a lower bound computed on the common radius."""

    value: Fraction
    truncated: bool = False

    def __post_init__(self):
        if not (0 <= self.value <= 1):
            raise ValueError("shift distance lies in [0, 1]")


@dataclass(frozen=True)
class FareyInterval:
    """Interval [lo, hi] with endpoints Farey neighbors (or equal)."""

    lo: Fraction
    hi: Fraction
    periodic: bool = False

    def __post_init__(self):
        if not (0 <= self.lo <= self.hi <= 1):
            raise ValueError("endpoints must satisfy 0 <= lo <= hi <= 1")
        if self.lo != self.hi:
            det = self.lo.numerator * self.hi.denominator - self.hi.numerator * self.lo.denominator
            if abs(det) != 1:
                raise ValueError("endpoints are not Farey neighbors")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


# ---------------------------------------------------------------------------
# coding symbols
# ---------------------------------------------------------------------------

def _symbol_exact(alpha: QuadReal, theta: QuadReal, k: int) -> int:
    t = (theta + k * alpha).frac()
    return 0 if t < alpha else 1


def _symbol_float(alpha: float, theta: float, k: int) -> int:
    t = (theta + k * alpha) % 1.0
    margin = min(t, 1.0 - t, abs(t - alpha))
    if margin > GUARD_BAND:
        return 0 if t < alpha else 1
    # Escalate to extended precision.  Floats are exact binary rationals,
    # so the escalated value is exact; a margin of exactly zero is a true
    # endpoint hit and the half-open rule [0, alpha) resolves it.
    import mpmath

    with mpmath.workdps(ESCALATED_DPS):
        a = mpmath.mpf(alpha)
        tt = mpmath.frac(mpmath.mpf(theta) + k * a)
        if tt == 0:
            return 0
        if tt == a:
            return 1
        margin = min(tt, 1 - tt, abs(tt - a))
        if margin > ESCALATED_GUARD:
            return 0 if tt < a else 1
    raise BoundaryUndecidable(
        f"point {{theta + {k}*alpha}} is indistinguishable from an arc endpoint")


def sturmian_symbol(alpha, theta, k: int) -> int:
    """Symbol of the rotation coding at time k: 0 iff {theta+k*alpha} in [0, alpha)."""
    if is_exact(alpha) and is_exact(theta):
        return _symbol_exact(as_real(alpha), as_real(theta), k)
    return _symbol_float(float(alpha), float(theta), k)


def sturmian_window(alpha, theta, radius: int) -> CentralWindow:
    """Central coding window of radius N for the rotation by alpha, offset theta."""
    if is_exact(alpha) and is_exact(theta):
        a = as_real(alpha)
        t = (as_real(theta) + (-radius) * a).frac()
        one = QuadReal(1)
        syms = []
        for _ in range(2 * radius + 1):
            syms.append(0 if t < a else 1)
            t = t + a
            if t >= one:
                t = t - 1
        return CentralWindow(radius, tuple(syms))
    af, tf = float(alpha), float(theta)
    syms = tuple(_symbol_float(af, tf, k) for k in range(-radius, radius + 1))
    return CentralWindow(radius, syms)


# ---------------------------------------------------------------------------
# the shift metric
# ---------------------------------------------------------------------------

def shift_distance(u: CentralWindow, v: CentralWindow) -> ShiftDistance:
    """Exact max_k |u_k - v_k|/(|k|+1) over the common radius.

    The first disagreement at minimal |k| dominates, so the scan runs
    outward from k = 0 and stops at the first difference."""
    r = min(u.radius, v.radius)
    truncated = u.radius != v.radius
    for k in range(r + 1):
        if u[k] != v[k] or u[-k] != v[-k]:
            return ShiftDistance(Fraction(1, k + 1), truncated)
    return ShiftDistance(Fraction(0), truncated)


def agreement_radius(u: CentralWindow, v: CentralWindow) -> int | None:
    """Smallest |k| where u and v disagree; None if equal on the common radius."""
    r = min(u.radius, v.radius)
    for k in range(r + 1):
        if u[k] != v[k] or u[-k] != v[-k]:
            return k
    return None


# ---------------------------------------------------------------------------
# factors, complexity, balance
# ---------------------------------------------------------------------------

def factor_set(w: CentralWindow, n: int) -> FactorSet:
    """The set of distinct length-n blocks of the window."""
    if n < 1:
        raise ValueError("factor length must be >= 1")
    if len(w) < n:
        raise WindowTooShort(f"window length {len(w)} < factor length {n}")
    word = w.word()
    return FactorSet(n, frozenset(word[i:i + n] for i in range(len(word) - n + 1)))


def complexity(w: CentralWindow, n: int) -> int:
    return len(factor_set(w, n))


def balance_defect(w: CentralWindow, n: int) -> int:
    """Max difference of 1-counts over pairs of length-n factors (<=1 iff balanced)."""
    counts = {u.count("1") for u in factor_set(w, n).words}
    return max(counts) - min(counts)


def factor_family(w: CentralWindow, max_length: int) -> dict[int, FactorSet]:
    """Factor sets of every length 1..max_length."""
    return {n: factor_set(w, n) for n in range(1, max_length + 1)}


# ---------------------------------------------------------------------------
# limit languages of rational slopes
# ---------------------------------------------------------------------------
#
# For a rational slope m = p/q the coding language of nearby irrational
# slopes is constant on each side of m as long as the factor length does
# not exceed q.  Both one-sided languages are computed exactly with
# first-order numbers v + s*eps (eps an infinitesimal): values live on
# the grid Z/2q, slopes are integers, comparisons are lexicographic.

def _jet_frac(v: int, s: int, twoq: int) -> tuple[int, int]:
    v %= twoq
    if v == 0 and s < 0:
        return twoq, s
    return v, s


def rational_limit_language(p: int, q: int, side: int, n: int) -> frozenset[str]:
    """Length-n factors of rotation codings with slope just above (side=+1)
    or just below (side=-1) the rational p/q."""
    if side not in (1, -1):
        raise ValueError("side must be +1 or -1")
    twoq = 2 * q
    beta = (2 * p, 2 * side)  # value scaled by 2q, slope scaled by 2
    # boundary offsets where some symbol of the length-n word flips
    pts = []
    for k in range(-1, n):
        pts.append(_jet_frac(-k * beta[0], -k * beta[1], twoq))
    pts = sorted(set(pts))
    words = set()
    m = len(pts)
    for i in range(m):
        v1, s1 = pts[i]
        if i + 1 < m:
            v2, s2 = pts[i + 1]
        else:
            v2, s2 = pts[0][0] + twoq, pts[0][1]
        # arc midpoint; values are even so the halving is exact
        phi = ((v1 + v2) // 2, (s1 + s2) // 2)
        chars = []
        for k in range(n):
            t = _jet_frac(phi[0] + k * beta[0], phi[1] + k * beta[1], twoq)
            chars.append("0" if t < beta else "1")
        words.add("".join(chars))
    return frozenset(words)


# ---------------------------------------------------------------------------
# rotation-number recovery
# ---------------------------------------------------------------------------

def _smallest_period(word: str) -> int:
    # classic KMP failure-function period
    n = len(word)
    fail = [0] * (n + 1)
    k = 0
    for i in range(1, n):
        while k and word[i] != word[k]:
            k = fail[k]
        if word[i] == word[k]:
            k += 1
        fail[i + 1] = k
    return n - fail[n]


def _validate_sturmian(w: CentralWindow, max_check: int) -> None:
    for n in range(1, min(max_check, len(w)) + 1):
        if complexity(w, n) > n + 1:
            raise NotSturmian(f"complexity exceeds n+1 at n={n}")
        if balance_defect(w, n) > 1:
            raise NotSturmian(f"balance defect exceeds 1 at n={n}")


def estimate_rotation_interval(
    w: CentralWindow,
    *,
    max_denominator: int = 10 ** 6,
    target_width: Fraction = Fraction(1, 1200),
    language_cap: int = 600,
    validate_to: int = 40,
) -> FareyInterval:
    """Farey interval guaranteed to contain every slope whose Sturmian
    language includes all observed factors.

    Stern-Brocot refinement: each mediant is accepted on the side proven
    by either the symbol-0 frequency bound or an observed factor that is
    admissible on only one side of the mediant.  The walk stops at the
    target width, at the denominator cap, or when the window no longer
    decides; every stop is sound (the interval only ever shrinks around
    the compatible-slope set)."""
    L = len(w)
    word = w.word()

    if word.count(word[0]) == L:
        # constant window: coding of rotation number 0 (mod 1)
        return FareyInterval(Fraction(0), Fraction(1, 2 * w.radius + 2), periodic=True)

    _validate_sturmian(w, validate_to)

    period = _smallest_period(word)
    periodic = period <= L // 2

    c0 = word.count("0")
    freq_lo = max(Fraction(0), Fraction(c0 - 1, L))
    freq_hi = min(Fraction(1), Fraction(c0 + 1, L))

    def decide(mp: int, mq: int) -> int:
        m = Fraction(mp, mq)
        if m < freq_lo:
            return 1
        if m > freq_hi:
            return -1
        if mq > min(L, language_cap):
            return 0
        above = rational_limit_language(mp, mq, +1, mq)
        below = rational_limit_language(mp, mq, -1, mq)
        seen_above = any(word.find(u) >= 0 for u in above - below)
        seen_below = any(word.find(u) >= 0 for u in below - above)
        if seen_above and seen_below:
            raise NotSturmian(
                f"factors on both sides of {mp}/{mq}: window is not a rotation coding")
        if seen_above:
            return 1
        if seen_below:
            return -1
        return 0

    lo_p, lo_q = 0, 1
    hi_p, hi_q = 1, 1
    while Fraction(1, lo_q * hi_q) > target_width:
        mp, mq = lo_p + hi_p, lo_q + hi_q
        if mq > max_denominator:
            break
        s = decide(mp, mq)
        if s > 0:
            lo_p, lo_q = mp, mq
        elif s < 0:
            hi_p, hi_q = mp, mq
        else:
            break

    lo, hi = Fraction(lo_p, lo_q), Fraction(hi_p, hi_q)
    if hi < freq_lo or lo > freq_hi:
        raise NotSturmian("frequency bound and factor refinement are inconsistent")
    return FareyInterval(lo, hi, periodic=periodic)


# ---------------------------------------------------------------------------
# Hausdorff proximity of subshifts via shared factors
# ---------------------------------------------------------------------------

def symbolic_hausdorff(
    family_a: dict[int, FactorSet],
    family_b: dict[int, FactorSet],
    depth: int,
) -> ShiftDistance:
    """Bound on the Hausdorff distance of two subshifts: 1/(d+2) where d is
    the largest depth whose central (2d+1)-factor sets coincide."""
    for fam in (family_a, family_b):
        if 2 * depth + 1 not in fam:
            raise WindowTooShort(f"family lacks factors of length {2 * depth + 1}")
    for d in range(depth, -1, -1):
        n = 2 * d + 1
        if family_a[n].words == family_b[n].words:
            return ShiftDistance(Fraction(1, d + 2))
    return ShiftDistance(Fraction(1))
