"""Named verification suites: each runs a documented grid of identities and
returns one result per case.  The CLI's ``verify`` command and the
acceptance tests both drive these.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Callable, NamedTuple

from . import correlation, exactcount, images, oracle, regions


class CheckResult(NamedTuple):
    name: str
    ok: bool
    detail: str = ""


def _check(name: str, got, want) -> CheckResult:
    ok = got == want
    return CheckResult(name, ok, "" if ok else f"got {got}, want {want}")


# ---------------------------------------------------------------------------
# routes: product formula == path-matrix Pfaffian == brute-force oracle

def suite_routes() -> list[CheckResult]:
    out = []
    for n in range(0, 5):
        for x in range(0, 4):
            for y in range(-1, 3):
                for k in range(n + 1):
                    for kept in combinations(range(1, n + 1), k):
                        p = exactcount.product_formula_count(n, x, y, kept)
                        g = exactcount.lgv_pfaffian_count(n, x, y, kept)
                        o = oracle.count_tilings(
                            regions.build_region(regions.RegionSpec(n, x, y, kept))
                        )
                        name = f"routes n={n} x={x} y={y} kept={kept}"
                        ok = p == g == o
                        out.append(
                            CheckResult(
                                name, ok, "" if ok else f"product {p}, pfaffian {g}, oracle {o}"
                            )
                        )
    return out


# ---------------------------------------------------------------------------
# schur: Pfaffian identity on random rational tuples

def suite_schur(seed: int = 20250810, tuples: int = 50) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []
    lengths = [2, 4, 6, 8]
    for t in range(tuples):
        k = lengths[t % len(lengths)]
        xs = []
        while len(xs) < k:
            v = Fraction(rng.randint(1, 40), rng.randint(1, 40))
            if v not in xs:
                xs.append(v)
        lhs = exactcount.schur_pfaffian_lhs(xs)
        rhs = exactcount.schur_pfaffian_rhs(xs)
        out.append(_check(f"schur len={k} #{t}", lhs, rhs))
    for t, k in enumerate((1, 3, 5, 7)):
        xs = [Fraction(0)]
        while len(xs) < k + 1:
            v = Fraction(rng.randint(1, 40), rng.randint(1, 40))
            if v not in xs:
                xs.append(v)
        lhs = exactcount.schur_pfaffian_lhs(xs)
        rhs = exactcount.schur_pfaffian_rhs(xs)
        out.append(_check(f"schur odd-augmented len={k} #{t}", lhs, rhs))
    return out


# ---------------------------------------------------------------------------
# lemma33: closed forms equal literal sums

def lemma_sum_a_literal(m: int, k: int) -> int:
    return sum(exactcount.binom(i, k) for i in range(m + 1))


def lemma_sum_b_literal(k: int, l: int, m: int, y: int) -> int:
    total = 0
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            total += exactcount.binom(y + k + i, y + 2 * k) * exactcount.binom(
                y + l + j, y + 2 * l
            )
            total -= exactcount.binom(y + k + j, y + 2 * k) * exactcount.binom(
                y + l + i, y + 2 * l
            )
    return total


def suite_lemma33() -> list[CheckResult]:
    out = []
    for m in range(0, 13):
        for k in range(0, 13):
            out.append(
                _check(f"lemma-a m={m} k={k}", exactcount.lemma_sum_a(m, k),
                       lemma_sum_a_literal(m, k))
            )
    for m in range(1, 9):
        for k in range(1, m):
            for l in range(k + 1, m + 1):
                for y in range(0, 5):
                    lit = lemma_sum_b_literal(k, l, m, y)
                    closed = exactcount.lemma_sum_b(k, l, m, y)
                    mid = exactcount.lemma_sum_b_midform(k, l, m, y)
                    ok = closed == lit == mid
                    out.append(
                        CheckResult(
                            f"lemma-b k={k} l={l} m={m} y={y}", ok,
                            "" if ok else f"closed {closed}, literal {lit}, midform {mid}",
                        )
                    )
    return out


# ---------------------------------------------------------------------------
# ssc: hexagon symmetric counts vs the quarter-reduction product formula,
# plus the boxed-plane-partition specialization

def plane_partition_count(a: int, b: int, c: int) -> int:
    """Literal enumeration of monotone a x b arrays with entries in [0, c]."""
    if a == 0 or b == 0:
        return 1
    rows: list[tuple[int, ...]] = []

    def build_row(prefix: list[int], bound: int) -> None:
        if len(prefix) == b:
            rows.append(tuple(prefix))
            return
        for v in range(min(bound, prefix[-1] if prefix else c), -1, -1):
            build_row(prefix + [v], v)

    build_row([], c)
    count = 0

    def extend(level: int, prev: tuple[int, ...]) -> None:
        nonlocal count
        if level == a:
            count += 1
            return
        for row in rows:
            if all(rv <= pv for rv, pv in zip(row, prev)):
                extend(level + 1, row)

    extend(0, tuple([c] * b))
    return count


def _hexagon_grid(max_cells: int = 60):
    for parity in ("even", "odd"):
        for n in (1, 2):
            for x in (0, 1):
                for s in range(0, n + 1):
                    for slots in combinations(range(1, n + 1), s):
                        spec = regions.HexagonSpec(parity, n, x, slots)
                        lat = regions.build_hexagon(spec)
                        if lat.cell_count() <= max_cells:
                            yield spec, lat


def suite_ssc() -> list[CheckResult]:
    out = []
    for spec, lat in _hexagon_grid():
        got = oracle.count_symmetric_tilings(lat, True, True)
        want = exactcount.ssc_hexagon_count(spec)
        out.append(
            _check(
                f"ssc {spec.parity} n={spec.n} x={spec.x} slots={spec.slots}", got, want
            )
        )
    # s = 0 specialization: doubly symmetric tilings of the even hexagon with
    # slant sides 2n and vertical sides 2x equal the n x n x x box count.
    for n in range(1, 4):
        for x in range(0, 4):
            got = exactcount.ssc_hexagon_count(regions.HexagonSpec("even", n, x))
            want = exactcount.macmahon_box(n, n, x)
            out.append(_check(f"ssc-box n={n} x={x}", got, want))
    for dims in ((1, 1, 1), (2, 2, 2)):
        out.append(
            _check(
                f"box-enumeration {dims}",
                exactcount.macmahon_box(*dims),
                plane_partition_count(*dims),
            )
        )
    return out


# ---------------------------------------------------------------------------
# factorization: unconstrained count = horizontal count * vertical count

def suite_factorization() -> list[CheckResult]:
    instances = [
        regions.HexagonSpec("even", 2, 1, (1,)),
        regions.HexagonSpec("even", 2, 1, (2,)),
        regions.HexagonSpec("even", 2, 1, (1, 2)),
        regions.HexagonSpec("odd", 1, 1, (1,)),
    ]
    out = []
    for spec in instances:
        lat = regions.build_hexagon(spec)
        m = oracle.count_tilings(lat)
        mh = oracle.count_symmetric_tilings(lat, True, False)
        mv = oracle.count_symmetric_tilings(lat, False, True)
        name = f"factorization {spec.parity} n={spec.n} x={spec.x} slots={spec.slots}"
        ok = m == mh * mv
        out.append(CheckResult(name, ok, "" if ok else f"M {m}, M_h {mh}, M_v {mv}"))
    return out


# ---------------------------------------------------------------------------
# moments: double sum == moment route; symmetrized == full form

def suite_moments() -> list[CheckResult]:
    out = []
    for R in range(1, 13):
        for vp in range(0, 13):
            p = correlation.CorrelationParams(R, vp)
            ds = correlation.correlation_double_sum(p)
            mm = correlation.correlation_via_moments(p)
            sym = correlation.correlation_double_sum(p, symmetrized=True)
            ok = ds == mm == sym
            out.append(
                CheckResult(
                    f"moments R={R} v'={vp}", ok,
                    "" if ok else f"double {ds}, moments {mm}, symmetrized {sym}",
                )
            )
    return out


# ---------------------------------------------------------------------------
# conjecture: image-distance ratios vs exact correlation ratios

def _exact_omega(alpha: int, beta: int) -> float:
    p = correlation.CorrelationParams.from_alpha_beta(alpha, beta)
    return float(correlation.correlation_via_moments(p))


def suite_conjecture() -> list[CheckResult]:
    pairs = [((2, 2), (4, 4)), ((2, 2), (2, 4)), ((4, 4), (2, 4))]
    out = []
    for base_a, base_b in pairs:
        errs = {}
        for scale in (1, 2, 4):
            a = (base_a[0] * scale, base_a[1] * scale)
            b = (base_b[0] * scale, base_b[1] * scale)
            conj = images.conjecture_ratio(
                images.build_images_90_mixed(*a), images.build_images_90_mixed(*b)
            )
            exact = _exact_omega(*a) / _exact_omega(*b)
            errs[scale] = abs(conj / exact - 1)
        name = f"conjecture {base_a} vs {base_b}"
        ok = (
            errs[2] < 0.25
            and errs[4] < 0.25
            and errs[2] < errs[1]
            and errs[4] < errs[1]
        )
        detail = ", ".join(f"x{s}: {errs[s]:.4f}" for s in (1, 2, 4))
        out.append(CheckResult(name, ok, detail))
    return out


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "routes": suite_routes,
    "schur": suite_schur,
    "lemma33": suite_lemma33,
    "ssc": suite_ssc,
    "factorization": suite_factorization,
    "moments": suite_moments,
    "conjecture": suite_conjecture,
}


def run_suite(name: str) -> list[CheckResult]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choices: {', '.join(sorted(SUITES))}")
    return SUITES[name]()
