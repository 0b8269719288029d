"""Closed-form exact counting: product formula, Pfaffians, path-matrix
Pfaffian route, binomial summation lemmas, and plane-partition identities.

Every quantity here is an exact integer or an exact rational; floating
point never appears.  ``ExactInt`` and ``ExactRat`` name the scalar types
used throughout the package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

from .errors import DomainError, UsageError, ValidationError
from .regions import HexagonSpec, quarter_reduction

ExactInt = int
ExactRat = Fraction


def binom(n: int, k: int) -> int:
    """Binomial coefficient with out-of-range lower index giving 0."""
    if n < 0:
        raise DomainError(f"binomial with negative upper index {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _validate_labels(n: int, x: int, y: int, kept) -> tuple[int, ...]:
    kept = tuple(kept)
    if n < 0 or x < 0 or y < -1:
        raise ValidationError(f"need n >= 0, x >= 0, y >= -1, got ({n}, {x}, {y})")
    if list(kept) != sorted(set(kept)) or (kept and (kept[0] < 1 or kept[-1] > n)):
        raise ValidationError(f"labels must be strictly increasing in [1, {n}], got {kept}")
    return kept


def product_formula_count(n: int, x: int, y: int, kept) -> ExactInt:
    """Tilings of the dented trapezoid with free east side, kept bumps given.

    Evaluates prod_a C(x+y+n+i_a, y+2 i_a) * prod_{a<b} (i_b-i_a)/(y+i_a+i_b)
    exactly; the rational pair product always clears its denominators.
    """
    kept = _validate_labels(n, x, y, kept)
    num = 1
    den = 1
    for i in kept:
        num *= binom(x + y + n + i, y + 2 * i)
    for a, b in combinations(kept, 2):
        num *= b - a
        den *= y + a + b
    q, r = divmod(num, den)
    assert r == 0, f"product formula did not clear denominators at {(n, x, y, kept)}"
    assert q >= 0
    return q


# ---------------------------------------------------------------------------
# Pfaffians

_EXPANSION_LIMIT = 8


class SkewArray:
    """Upper triangle of a skew-symmetric matrix with exact rational entries."""

    def __init__(self, size: int, upper: dict[tuple[int, int], Fraction]):
        self.size = size
        self._upper = {}
        for (i, j), v in upper.items():
            if not 0 <= i < j < size:
                raise ValidationError(f"upper-triangle index out of range: {(i, j)}")
            self._upper[(i, j)] = Fraction(v)

    @classmethod
    def from_function(cls, size: int, fn) -> "SkewArray":
        return cls(size, {(i, j): fn(i, j) for i in range(size) for j in range(i + 1, size)})

    @classmethod
    def from_upper_rows(cls, rows) -> "SkewArray":
        """rows[i] lists the entries a[i][i+1:], as in a ragged upper triangle."""
        size = len(rows) + 1 if rows else 0
        upper = {}
        for i, row in enumerate(rows):
            if len(row) != size - 1 - i:
                raise ValidationError("ragged rows do not form an upper triangle")
            for off, v in enumerate(row):
                upper[(i, i + 1 + off)] = Fraction(v)
        return cls(size, upper)

    def entry(self, i: int, j: int) -> Fraction:
        if i == j:
            return Fraction(0)
        if i < j:
            return self._upper.get((i, j), Fraction(0))
        return -self._upper.get((j, i), Fraction(0))

    def completion(self) -> list[list[Fraction]]:
        """The full skew-symmetric matrix."""
        return [[self.entry(i, j) for j in range(self.size)] for i in range(self.size)]


def _matchings(items: list[int]):
    if not items:
        yield []
        return
    first = items[0]
    rest = items[1:]
    for k, partner in enumerate(rest):
        for sub in _matchings(rest[:k] + rest[k + 1 :]):
            yield [(first, partner)] + sub


def _crossing_sign(matching: list[tuple[int, int]]) -> int:
    crossed = 0
    for (i, j), (k, l) in combinations(matching, 2):
        if i < k < j < l or k < i < l < j:
            crossed += 1
    return -1 if crossed % 2 else 1


def _pfaffian_expansion(a: SkewArray) -> Fraction:
    total = Fraction(0)
    for mu in _matchings(list(range(a.size))):
        term = Fraction(_crossing_sign(mu))
        for i, j in mu:
            term *= a.entry(i, j)
            if term == 0:
                break
        total += term
    return total


def _pfaffian_elimination(a: SkewArray) -> Fraction:
    n = a.size
    m = a.completion()
    result = Fraction(1)
    for i in range(0, n, 2):
        piv = next((k for k in range(i + 1, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != i + 1:
            m[piv], m[i + 1] = m[i + 1], m[piv]
            for row in m:
                row[piv], row[i + 1] = row[i + 1], row[piv]
            result = -result
        p = m[i][i + 1]
        result *= p
        cs = [m[i][j] / p for j in range(i + 2, n)]
        for j, c in zip(range(i + 2, n), cs):
            if c:
                for t in range(n):
                    m[j][t] -= c * m[i + 1][t]
        for j, c in zip(range(i + 2, n), cs):
            if c:
                for t in range(n):
                    m[t][j] -= c * m[t][i + 1]
    return result


def pfaffian(a: SkewArray, method: str = "auto") -> ExactRat:
    """Pfaffian of an even-sized skew-symmetric array, exactly.

    ``method`` picks the matching-expansion definition, the exact rational
    elimination scheme, or (default) the expansion up to size 8 and the
    elimination beyond.
    """
    if a.size % 2 != 0:
        raise UsageError(
            f"Pfaffian needs an even size, got {a.size}; augment with an index-0 row first"
        )
    if a.size == 0:
        return Fraction(1)
    if method == "expansion" or (method == "auto" and a.size <= _EXPANSION_LIMIT):
        return _pfaffian_expansion(a)
    if method in ("elimination", "auto"):
        return _pfaffian_elimination(a)
    raise UsageError(f"unknown pfaffian method {method!r}")


def schur_pfaffian_lhs(xs) -> ExactRat:
    """Pf[(x_j - x_i)/(x_j + x_i)] for an even-length tuple."""
    xs = [Fraction(v) for v in xs]
    if len(xs) % 2 != 0:
        raise UsageError(f"need an even number of values, got {len(xs)}")
    for a, b in combinations(xs, 2):
        if a + b == 0:
            raise DomainError(f"x_i + x_j = 0 for values {a} and {b}")
    arr = SkewArray.from_function(len(xs), lambda i, j: (xs[j] - xs[i]) / (xs[j] + xs[i]))
    return pfaffian(arr)


def schur_pfaffian_rhs(xs) -> ExactRat:
    """prod_{i<j} (x_j - x_i)/(x_j + x_i)."""
    xs = [Fraction(v) for v in xs]
    out = Fraction(1)
    for a, b in combinations(xs, 2):
        if a + b == 0:
            raise DomainError(f"x_i + x_j = 0 for values {a} and {b}")
        out *= (b - a) / (b + a)
    return out


# ---------------------------------------------------------------------------
# Binomial summation lemmas

def lemma_sum_a(m: int, k: int) -> ExactInt:
    """sum_{i=0}^m C(i, k) = C(m+1, k+1)."""
    if m < 0 or k < 0:
        raise ValidationError(f"need m, k >= 0, got ({m}, {k})")
    return binom(m + 1, k + 1)


def lemma_sum_b(k: int, l: int, m: int, y: int) -> ExactInt:
    """Closed form of the antisymmetrized double binomial sum:

    sum_{1<=i<j<=m} [C(y+k+i, y+2k) C(y+l+j, y+2l) - C(y+k+j, y+2k) C(y+l+i, y+2l)]
      = (l-k)/(y+l+k+1) * C(y+m+k+1, m-k) * C(y+m+l+1, m-l).
    """
    if not (1 <= k < l <= m) or y < 0:
        raise ValidationError(f"need 1 <= k < l <= m and y >= 0, got {(k, l, m, y)}")
    v = Fraction(l - k, y + l + k + 1) * binom(y + m + k + 1, m - k) * binom(y + m + l + 1, m - l)
    assert v.denominator == 1
    return int(v)


def lemma_sum_b_midform(k: int, l: int, m: int, y: int) -> ExactRat:
    """The same quantity written with the three explicit fractions."""
    if not (1 <= k < l <= m) or y < 0:
        raise ValidationError(f"need 1 <= k < l <= m and y >= 0, got {(k, l, m, y)}")
    return (
        Fraction(l - k, y + l + k + 1)
        * Fraction(m - k + 1, y + 2 * k + 1)
        * Fraction(m - l + 1, y + 2 * l + 1)
        * binom(y + m + k + 1, y + 2 * k)
        * binom(y + m + l + 1, y + 2 * l)
    )


# ---------------------------------------------------------------------------
# Pfaffian route through the nonintersecting-path matrix

def _path_entry_closed(ia: int, ib: int, n: int, x: int, y: int) -> Fraction:
    return (
        Fraction(ib - ia, y + ia + ib)
        * binom(y + n + x + ia, n + x - ia)
        * binom(y + n + x + ib, n + x - ib)
    )


def _path_entry_sum(ia: int, ib: int, n: int, x: int, y: int) -> Fraction:
    total = 0
    for s in range(1, n + x + 1):
        for t in range(s + 1, n + x + 1):
            total += binom(y + ia + s - 1, y + 2 * ia - 1) * binom(y + ib + t - 1, y + 2 * ib - 1)
            total -= binom(y + ia + t - 1, y + 2 * ia - 1) * binom(y + ib + s - 1, y + 2 * ib - 1)
    return Fraction(total)


def _path_row0_closed(ib: int, n: int, x: int, y: int) -> Fraction:
    return Fraction(binom(y + n + x + ib, y + 2 * ib))


def _path_row0_sum(ib: int, n: int, x: int, y: int) -> Fraction:
    return Fraction(sum(binom(y + ib + s - 1, y + 2 * ib - 1) for s in range(1, n + x + 1)))


def lgv_pfaffian_count(n: int, x: int, y: int, kept, entry_mode: str = "closed") -> ExactInt:
    """Tiling count via the Pfaffian of the start-to-free-end path matrix.

    Independent of the product formula: the entries come from the lattice
    path counts (either their closed forms or the literal single/double
    sums over the free-boundary ending segments) and the Pfaffian is
    evaluated numerically.  Odd label counts are handled by augmenting the
    array with an index-0 row of single-sum entries.
    """
    kept = _validate_labels(n, x, y, kept)
    if entry_mode == "closed":
        pair_entry, row0 = _path_entry_closed, _path_row0_closed
    elif entry_mode == "sums":
        pair_entry, row0 = _path_entry_sum, _path_row0_sum
    else:
        raise UsageError(f"unknown entry_mode {entry_mode!r}")
    k = len(kept)
    if k == 0:
        return 1
    if k % 2 == 0:
        arr = SkewArray.from_function(k, lambda a, b: pair_entry(kept[a], kept[b], n, x, y))
    else:
        def fn(a: int, b: int) -> Fraction:
            if a == 0:
                return row0(kept[b - 1], n, x, y)
            return pair_entry(kept[a - 1], kept[b - 1], n, x, y)

        arr = SkewArray.from_function(k + 1, fn)
    v = pfaffian(arr)
    assert v.denominator == 1 and v >= 0, f"path Pfaffian not a count at {(n, x, y, kept)}"
    return int(v)


# ---------------------------------------------------------------------------
# Plane-partition identities

def ssc_hexagon_count(spec: HexagonSpec) -> ExactInt:
    """Doubly-symmetric tilings of the holed hexagon, by quarter reduction."""
    r = quarter_reduction(spec)
    return product_formula_count(r.n, r.x, r.y, r.kept_bumps)


def macmahon_box(a: int, b: int, c: int) -> ExactInt:
    """Number of plane partitions in an a x b x c box (boxed-product formula)."""
    if a < 0 or b < 0 or c < 0:
        raise ValidationError(f"box sides must be >= 0, got {(a, b, c)}")
    v = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                v *= Fraction(i + j + k - 1, i + j + k - 2)
    assert v.denominator == 1
    return int(v)
