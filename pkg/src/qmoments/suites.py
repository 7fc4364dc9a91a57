"""Suite runners: execute every identity check over points and build reports.

Random mode evaluates each identity family at a deterministic list of
sampled admissible points; since all arithmetic is exact, a single mismatch
is a hard counterexample.  Grid mode evaluates on a degree-bound grid (see
``degrees``), which upgrades a passing run to a proof of the identity as a
rational-function identity for each checked index.

The hermite suite needs a nonzero Laurent argument t; in random mode it uses
t = a when a is nonzero and falls back to t = q (never zero for admissible
points) otherwise.
"""

from __future__ import annotations

import time
from fractions import Fraction

from . import degrees, expansion, hankel, moments, qhermite, qseries
from ._version import __version__
from .errors import InvalidInputError
from .points import QPoint
from .polynomials import LaurentPolynomial, Polynomial
from .rationals import format_rational
from .report import Counterexample, IdentityRecord, SuiteConfig, VerificationReport
from .sampling import sample_points

DEFAULT_NMAX = {
    "conjecture": 24,
    "expansion": 8,
    "induction": 8,
    "theorem": 8,
    "hankel": 8,
    "lemmas": 20,
    "hermite": 16,
}

SUITE_IDS = tuple(DEFAULT_NMAX)

_GRID_NMAX_CAP = 6


def _ce(point: QPoint, index: str, lhs: object, rhs: object) -> Counterexample:
    def render(value: object) -> str:
        if isinstance(value, Fraction):
            return format_rational(value)
        return str(value)

    return Counterexample(
        q=format_rational(point.q),
        a=format_rational(point.a),
        index=index,
        lhs=render(lhs),
        rhs=render(rhs),
    )


def _first_poly_mismatch(lhs: Polynomial, rhs: Polynomial) -> tuple[int, Fraction, Fraction]:
    for j in range(max(lhs.degree, rhs.degree) + 1):
        if lhs.coefficient(j) != rhs.coefficient(j):
            return j, lhs.coefficient(j), rhs.coefficient(j)
    raise AssertionError("polynomials compare unequal but share all coefficients")


def _first_laurent_mismatch(
    lhs: LaurentPolynomial, rhs: LaurentPolynomial
) -> tuple[int, Fraction, Fraction]:
    for e in sorted(set(lhs.coeffs) | set(rhs.coeffs)):
        if lhs.coefficient(e) != rhs.coefficient(e):
            return e, lhs.coefficient(e), rhs.coefficient(e)
    raise AssertionError("Laurent polynomials compare unequal but share all coefficients")


def _conjecture_at(n: int, point: QPoint, mu=None) -> Counterexample | None:
    value = moments.moment_table(n, point).mu[n] if mu is None else mu[n]
    rhs = moments.moment_closed_form(n, point)
    if value != rhs:
        return _ce(point, f"n={n}", value, rhs)
    return None


def _conjecture_prefix_at(n: int, point: QPoint) -> Counterexample | None:
    # The degree bound for index n covers the whole family m <= n, so the
    # grid check verifies the full prefix at every grid point.
    mu = moments.moment_table(n, point).mu
    for m in range(n + 1):
        found = _conjecture_at(m, point, mu)
        if found:
            return found
    return None


def _expansion_at(n: int, point: QPoint) -> Counterexample | None:
    lhs, rhs = expansion.expansion_sides(n, point)
    if lhs != rhs:
        j, lc, rc = _first_poly_mismatch(lhs, rhs)
        return _ce(point, f"n={n}, coefficient of x^{j}", lc, rc)
    return None


def _induction_at(n: int, point: QPoint, lower=None, upper=None) -> Counterexample | None:
    lower = expansion.expansion_coeffs(n, point) if lower is None else lower
    upper = expansion.expansion_coeffs(n + 1, point) if upper is None else upper
    for k in range(2 * n + 3):
        lhs, rhs, note = expansion.induction_sides(n, k, point, lower, upper)
        if note is not None:
            return _ce(point, f"n={n}, k={k}", lhs, note)
        if lhs != rhs:
            return _ce(point, f"n={n}, k={k}", lhs, rhs)
    return None


def _theorem_at(n: int, point: QPoint) -> Counterexample | None:
    for label, lhs, rhs in expansion.theorem_identities(n, point):
        if lhs != rhs:
            return _ce(point, f"n={n}, {label}", lhs, rhs)
    return None


def _hankel_at(n: int, point: QPoint) -> Counterexample | None:
    result = hankel.hankel_check(n, point)
    if not result.equal:
        return _ce(point, f"n={n}", result.determinant, result.lambda_product)
    return None


def _lemmas_at(n: int, point: QPoint, mu=None) -> Counterexample | None:
    lhs, rhs = qseries.qbinomial_theorem_sides(n, point)
    if lhs != rhs:
        return _ce(point, f"q-binomial theorem, m={n}", lhs, rhs)
    lhs, rhs = qseries.qvandermonde_limit_sides(n, point.q)
    if lhs != rhs:
        return _ce(point, f"q-Vandermonde limit, p={n}", lhs, rhs)
    half = n // 2
    if mu is None:
        mu = moments.moment_table(2 * half + 1, point).mu
    for m in range(half + 1):
        for eps in (0, 1):
            closed = moments.product_basis_moment(m, eps, point, "closed")
            direct = moments.product_basis_moment(m, eps, point, "direct", mu=mu)
            if closed != direct:
                return _ce(
                    point, f"product moment n={m}, eps={eps}", direct, closed
                )
    return None


def _hermite_at(n: int, t0: Fraction, point: QPoint) -> Counterexample | None:
    q = point.q
    h_n = qhermite.hermite_laurent(n, q)
    if not qhermite.is_palindromic(h_n):
        return _ce(point, f"palindromicity, n={n}", h_n, "palindromic coefficients")
    if len(h_n.coeffs) != n + 1:
        return _ce(point, f"coefficient count, n={n}", len(h_n.coeffs), n + 1)
    if not qhermite.connection_laurent_identity(n, q):
        return _ce(point, f"Laurent connection, n={n}", "lhs", "rhs")
    if n >= 1:
        lhs, rhs = qhermite.hermite_recurrence_sides(n, q)
        if lhs != rhs:
            e, lc, rc = _first_laurent_mismatch(lhs, rhs)
            return _ce(point, f"three-term recurrence, n={n}, t^{e}", lc, rc)
    lhs, rhs = qhermite.connection_sides(n, t0, q)
    if lhs != rhs:
        return _ce(point, f"connection, n={n}, t={format_rational(t0)}", lhs, rhs)
    return None


def _run_random(suite: str, n_max: int, points: list[QPoint]) -> Counterexample | None:
    if suite == "conjecture":
        for point in points:
            mu = moments.moment_table(n_max, point).mu
            for n in range(n_max + 1):
                found = _conjecture_at(n, point, mu)
                if found:
                    return found
    elif suite == "expansion":
        for point in points:
            for n in range(n_max + 1):
                found = _expansion_at(n, point)
                if found:
                    return found
    elif suite == "induction":
        for point in points:
            tables = [
                expansion.expansion_coeffs(n, point) for n in range(n_max + 2)
            ]
            for n in range(n_max + 1):
                found = _induction_at(n, point, tables[n], tables[n + 1])
                if found:
                    return found
    elif suite == "theorem":
        for point in points:
            for n in range(n_max + 1):
                found = _theorem_at(n, point)
                if found:
                    return found
    elif suite == "hankel":
        for point in points:
            for n in range(n_max + 1):
                found = _hankel_at(n, point)
                if found:
                    return found
    elif suite == "lemmas":
        for point in points:
            mu = moments.moment_table(2 * (n_max // 2) + 1, point).mu
            for n in range(n_max + 1):
                found = _lemmas_at(n, point, mu)
                if found:
                    return found
    elif suite == "hermite":
        for point in points:
            t0 = point.a if point.a != 0 else point.q
            for n in range(n_max + 1):
                found = _hermite_at(n, t0, point)
                if found:
                    return found
    else:
        raise InvalidInputError(f"unknown suite {suite!r}")
    return None


def _run_grid(suite: str, n_max: int) -> tuple[int, Counterexample | None]:
    """Run a suite on degree-bound grids; returns (points evaluated, failure)."""
    evaluated = 0
    for n in range(n_max + 1):
        dq, da = degrees.degree_bound(suite, n)
        q_values = [Fraction(v) for v in range(2, dq + 3)]
        if suite == "hermite":
            second_values = [Fraction(v) for v in range(1, da + 2)]
        else:
            second_values = [Fraction(v) for v in range(0, da + 1)]
        for q in q_values:
            for second in second_values:
                evaluated += 1
                if suite == "hermite":
                    point = QPoint(q, second * second)
                    found = _hermite_at(n, second, point)
                else:
                    point = QPoint(q, second)
                    if suite == "conjecture":
                        found = _conjecture_prefix_at(n, point)
                    elif suite == "expansion":
                        found = _expansion_at(n, point)
                    elif suite == "induction":
                        found = _induction_at(n, point)
                    elif suite == "theorem":
                        found = _theorem_at(n, point)
                    elif suite == "hankel":
                        found = _hankel_at(n, point)
                    elif suite == "lemmas":
                        found = _lemmas_at(n, point)
                    else:
                        raise InvalidInputError(f"unknown suite {suite!r}")
                if found:
                    return evaluated, found
    return evaluated, None


def _range_label(suite: str, n_max: int) -> str:
    if suite == "induction":
        return f"n=0..{n_max}, k=0..2n+2"
    if suite == "lemmas":
        return f"m,p=0..{n_max}; product moments n=0..{n_max // 2}"
    return f"n=0..{n_max}"


def _resolve_nmax(suite: str, config: SuiteConfig) -> int:
    if config.n_max is not None:
        return config.n_max
    default = DEFAULT_NMAX[suite]
    if config.mode == "grid":
        return min(default, _GRID_NMAX_CAP)
    return default


def run_suite(config: SuiteConfig) -> VerificationReport:
    """Execute the selected suite (or all of them) and assemble a report."""
    if config.suite != "all" and config.suite not in SUITE_IDS:
        raise InvalidInputError(
            f"unknown suite {config.suite!r} (expected one of"
            f" {', '.join(SUITE_IDS)} or 'all')"
        )
    selected = SUITE_IDS if config.suite == "all" else (config.suite,)

    if config.mode == "grid":
        if config.explicit_points:
            raise InvalidInputError("grid mode generates its own points")
        points: list[QPoint] = []
    elif config.explicit_points:
        points = list(config.explicit_points)
    else:
        points = sample_points(config.trials, config.seed, config.bound)

    echo: dict[str, object] = {
        "version": __version__,
        "suite": config.suite,
        "n_max": config.n_max,
        "mode": config.mode,
        "trials": config.trials,
        "seed": config.seed,
        "bound": config.bound,
    }
    if config.mode == "random":
        echo["points"] = [p.as_strings() for p in points]

    report = VerificationReport(config=echo)
    for suite in selected:
        n_max = _resolve_nmax(suite, config)
        started = time.perf_counter()
        if config.mode == "grid":
            count, failure = _run_grid(suite, n_max)
        else:
            failure = _run_random(suite, n_max, points)
            count = len(points)
        report.durations[suite] = round(time.perf_counter() - started, 6)
        report.identities.append(
            IdentityRecord(
                id=suite,
                range=_range_label(suite, n_max),
                points=count,
                status="pass" if failure is None else "fail",
                counterexample=failure,
            )
        )
    return report
