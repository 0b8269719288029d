"""Gap-corner correlation: exact double sum, moment-polynomial route,
finite-size ratios, limit ratios, and the floating-point asymptotics.

The gap sits at (alpha, beta) measured from the corner of the angle; the
working parameters are R = beta and v' = alpha - 1.  The change of
variables alpha = 2v - R, beta = R behind the finite-size scaffolding
needs v = (alpha + beta)/2 to be an integer, so those operations insist
on alpha + beta even; the correlation formulas themselves are defined for
every integer alpha >= 1.

Everything except ``asymptotic_prediction`` and ``moment_approximant`` is
exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError, ParityError, ValidationError
from .exactcount import ExactInt, ExactRat, binom, product_formula_count


@dataclass(frozen=True)
class CorrelationParams:
    """Gap parameters in (R, v') form: R = beta >= 1, v' = alpha - 1 >= 0."""

    R: int
    vprime: int

    def __post_init__(self) -> None:
        if self.R < 1 or self.vprime < 0:
            raise ValidationError(f"need R >= 1 and vprime >= 0, got {self}")

    @classmethod
    def from_alpha_beta(cls, alpha: int, beta: int) -> "CorrelationParams":
        if alpha < 1 or beta < 1:
            raise ValidationError(f"need alpha, beta >= 1, got ({alpha}, {beta})")
        return cls(R=beta, vprime=alpha - 1)

    @property
    def alpha(self) -> int:
        return self.vprime + 1

    @property
    def beta(self) -> int:
        return self.R

    @property
    def q(self) -> Fraction:
        """Aspect ratio alpha/beta."""
        return Fraction(self.alpha, self.R)


def _double_sum_weights(R: int, vp: int) -> list[Fraction]:
    """F(a) with the correlation's summand equal to
    (-1)^(a+b) F(a) F(b) (b-a)^2 / (2v'+a+b+2)."""
    ws = []
    for a in range(R + 1):
        ws.append(
            Fraction(factorial(R + a - 1), factorial(2 * a) * factorial(R - a))
            * Fraction(
                factorial(2 * vp + 2 * a + 1),
                (1 << (2 * vp + 2 * a)) * factorial(vp + a) * factorial(vp + a + 1),
            )
        )
    return ws


def correlation_double_sum(p: CorrelationParams, symmetrized: bool = False) -> ExactRat:
    """The corner correlation as an exact rational.

    Default form: 4R * | sum_{a,b=0..R} (-1)^(a+b) F(a) F(b) (b-a)^2 / (2v'+a+b+2) |.
    With ``symmetrized`` the equal 8R * |sum over a < b| form is evaluated
    instead (the diagonal vanishes through the (b-a)^2 factor).
    """
    R, vp = p.R, p.vprime
    f = _double_sum_weights(R, vp)
    total = Fraction(0)
    if symmetrized:
        for a in range(R + 1):
            for b in range(a + 1, R + 1):
                sign = -1 if (a + b) % 2 else 1
                total += sign * f[a] * f[b] * Fraction((b - a) ** 2, 2 * vp + a + b + 2)
        return 8 * R * abs(total)
    for a in range(R + 1):
        for b in range(R + 1):
            if a == b:
                continue
            sign = -1 if (a + b) % 2 else 1
            total += sign * f[a] * f[b] * Fraction((b - a) ** 2, 2 * vp + a + b + 2)
    return 4 * R * abs(total)


# ---------------------------------------------------------------------------
# Moment polynomials

def _pochhammer(base: Fraction, m: int) -> Fraction:
    out = Fraction(1)
    for t in range(m):
        out *= base + t
    return out


@dataclass(frozen=True)
class MomentPolynomial:
    """The moment sum as a polynomial in x with exact coefficients.

    Coefficient a is (1/R) * (-R)_a (R)_a (3/2)_{v+a} / ((1)_a (1/2)_a (2)_{v+a})
    * (1/4)^a * a^k, so the degree is at most R.
    """

    k: int
    R: int
    v: int
    coefficients: tuple[Fraction, ...]

    def degree(self) -> int:
        d = len(self.coefficients) - 1
        while d > 0 and self.coefficients[d] == 0:
            d -= 1
        return d

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        out = Fraction(0)
        for c in reversed(self.coefficients):
            out = out * x + c
        return out

    def evaluate_float(self, x: float) -> float:
        out = 0.0
        for c in reversed(self.coefficients):
            out = out * x + float(c)
        return out


def moment_polynomial(k: int, R: int, v: int) -> MomentPolynomial:
    """Exact coefficients of the k-th moment sum at parameters (R, v)."""
    if R < 1:
        raise DomainError(f"moment sums need R >= 1 (1/R prefactor), got {R}")
    if k < 0 or v < 0:
        raise ValidationError(f"need k >= 0 and v >= 0, got (k, v) = ({k}, {v})")
    coeffs = []
    # g tracks (-R)_a (R)_a (3/2)_{v+a} / ((1)_a (1/2)_a (2)_{v+a})
    g = _pochhammer(Fraction(3, 2), v) / _pochhammer(Fraction(2), v)
    quarter = Fraction(1, 4)
    scale = Fraction(1)
    for a in range(R + 1):
        coeffs.append(g * scale * a**k / R)
        g *= Fraction(-R + a) * (R + a) * (Fraction(3, 2) + v + a)
        g /= (a + 1) * (Fraction(1, 2) + a) * (2 + v + a)
        scale *= quarter
    return MomentPolynomial(k=k, R=R, v=v, coefficients=tuple(coeffs))


def moment_sum_direct(k: int, R: int, v: int, x) -> ExactRat:
    """Literal evaluation of the moment sum at rational x (reference path)."""
    if R < 1:
        raise DomainError(f"moment sums need R >= 1, got {R}")
    x = Fraction(x)
    total = Fraction(0)
    for a in range(R + 1):
        term = (
            _pochhammer(Fraction(-R), a)
            * _pochhammer(Fraction(R), a)
            * _pochhammer(Fraction(3, 2), v + a)
        )
        term /= (
            _pochhammer(Fraction(1), a)
            * _pochhammer(Fraction(1, 2), a)
            * _pochhammer(Fraction(2), v + a)
        )
        total += term * (x / 4) ** a * a**k
    return total / R


def correlation_via_moments(p: CorrelationParams) -> ExactRat:
    """8R * | int_0^1 (T2*T0 - T1^2) x^(2v'+1) dx | with exact integration."""
    R, vp = p.R, p.vprime
    t0 = moment_polynomial(0, R, vp).coefficients
    t1 = moment_polynomial(1, R, vp).coefficients
    t2 = moment_polynomial(2, R, vp).coefficients
    prod = [Fraction(0)] * (2 * R + 1)
    for i, a in enumerate(t2):
        if a:
            for j, b in enumerate(t0):
                if b:
                    prod[i + j] += a * b
    for i, a in enumerate(t1):
        if a:
            for j, b in enumerate(t1):
                if b:
                    prod[i + j] -= a * b
    integral = Fraction(0)
    for m, c in enumerate(prod):
        if c:
            integral += c / (m + 2 * vp + 2)  # int_0^1 x^(m + 2v' + 1) dx
    return 8 * R * abs(integral)


# ---------------------------------------------------------------------------
# Limit ratios for dented regions

def limit_ratio_pair(i: int, j: int) -> ExactRat:
    """Large-size limit of the tiling-count ratio between the square trapezoid
    with dents at bumps {i, j} and the reference dents {1, 2}."""
    if not 1 <= i < j:
        raise ValidationError(f"need 1 <= i < j, got ({i}, {j})")
    return (
        4
        * Fraction(j - i, j + i)
        * Fraction(binom(2 * i - 1, i - 1), 1 << (2 * i - 2))
        * Fraction(binom(2 * j - 1, j - 1), 1 << (2 * j - 2))
    )


def limit_ratio_general(labels) -> ExactRat:
    """Limit of the ratio between dents at {i_1..i_k} and dents at {1..k}.

    ``labels`` are the dented bump positions; the underlying finite regions
    keep every other bump.
    """
    labels = tuple(labels)
    if list(labels) != sorted(set(labels)) or (labels and labels[0] < 1):
        raise ValidationError(f"labels must be strictly increasing and >= 1, got {labels}")
    out = Fraction(1)
    k = len(labels)
    for a in range(1, k + 1):
        ia = labels[a - 1]
        out *= Fraction(binom(2 * ia - 1, ia - 1), 1 << (2 * ia)) / Fraction(
            binom(2 * a - 1, a - 1), 1 << (2 * a)
        )
    for a in range(1, k + 1):
        for b in range(a + 1, k + 1):
            ia, ib = labels[a - 1], labels[b - 1]
            out *= Fraction(ib - ia, ib + ia) / Fraction(b - a, b + a)
    return out


def finite_dent_ratio(n: int, labels) -> ExactRat:
    """The finite-size ratio whose limit is ``limit_ratio_general(labels)``."""
    labels = tuple(labels)
    k = len(labels)
    if labels and labels[-1] > n:
        raise ValidationError(f"labels {labels} exceed n = {n}")
    kept_num = tuple(i for i in range(1, n + 1) if i not in set(labels))
    kept_den = tuple(i for i in range(1, n + 1) if i > k)
    return Fraction(
        product_formula_count(n, n, 0, kept_num), product_formula_count(n, n, 0, kept_den)
    )


# ---------------------------------------------------------------------------
# Finite-size gap counts

def _finite_n_params(n: int, alpha: int, beta: int) -> tuple[int, int]:
    if alpha < 1 or beta < 1:
        raise ValidationError(f"need alpha, beta >= 1, got ({alpha}, {beta})")
    if (alpha + beta) % 2 != 0:
        raise ParityError(
            f"alpha + beta = {alpha + beta} is odd; the change of variables "
            f"alpha = 2v - R, beta = R needs v = (alpha + beta)/2 integral"
        )
    v = (alpha + beta) // 2
    R = beta
    if alpha < 1 or 2 * v > n:
        raise ValidationError(
            f"bump labels [{2 * v - R}, {2 * v}] must lie in [1, {n}]; increase n"
        )
    return R, v


def finite_n_numerator(n: int, alpha: int, beta: int) -> ExactInt:
    """Tilings of the square trapezoid of size n with the gap at (alpha, beta),
    via the two-column expansion over pairs of bump labels feeding the gap."""
    R, v = _finite_n_params(n, alpha, beta)
    base = 2 * v - R  # = alpha
    full = range(1, n + 1)
    total = Fraction(0)
    for a in range(R + 1):
        for b in range(a + 1, R + 1):
            coeff = Fraction(
                (b - a) * factorial(R + a - 1) * factorial(R + b - 1),
                factorial(2 * a) * factorial(R - a) * factorial(2 * b) * factorial(R - b),
            )
            kept = tuple(i for i in full if i not in (base + a, base + b))
            sign = -1 if (a + b) % 2 else 1
            total += sign * coeff * product_formula_count(n, n, 0, kept)
    out = 2 * R * abs(total)
    assert out.denominator == 1, "gap expansion did not produce an integer"
    return int(out)


def finite_n_correlation(n: int, alpha: int, beta: int) -> ExactRat:
    """Ratio of the gapped count at (alpha, beta) to the reference gap (1, 1)."""
    return Fraction(finite_n_numerator(n, alpha, beta), finite_n_numerator(n, 1, 1))


# ---------------------------------------------------------------------------
# Asymptotics (floating point enters only here)

def asymptotic_prediction(q, R: int) -> float:
    """Predicted correlation 16 / (3 pi R q sqrt(q^2 + 1/3))."""
    qf = float(Fraction(q)) if not isinstance(q, float) else q
    if qf <= 0 or R < 1:
        raise ValidationError(f"need q > 0 and R >= 1, got (q, R) = ({q}, {R})")
    return 16.0 / (3.0 * math.pi * R * qf * math.sqrt(qf * qf + 1.0 / 3.0))


def moment_approximant(n: int, R: int, q, x: float) -> float:
    """Oscillatory approximant to the n-th moment sum at v = qR - 1.

    Defined for x in (0, 1]; the approximation error decays like R^(n - 5/2).
    """
    if not 0 < x <= 1:
        raise DomainError(f"approximant defined on (0, 1], got x = {x}")
    if R < 1:
        raise ValidationError(f"need R >= 1, got {R}")
    qf = float(Fraction(q)) if not isinstance(q, float) else q
    w = math.sqrt(x / (4.0 - x))
    amplitude = (
        2.0
        / math.sqrt(math.pi)
        * (qf * qf + x / (4.0 - x)) ** -0.25
        * R**-1.5
        * (R * w) ** n
    )
    phase = R * math.acos(1.0 - x / 2.0) - 0.5 * math.atan(w / qf) + n * math.pi / 2.0
    return amplitude * math.cos(phase)
