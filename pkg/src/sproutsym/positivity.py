"""Finite total-nonnegativity evidence and empirical expansion positivity.

Only finite necessary conditions are computed here: a passing minor
report means "no violation found up to (order, degree)", never "the
sequence is totally nonnegative" (which is an analytic statement about
all minors at once).  Each minor of the seed's Toeplitz matrix equals a
skew Schur coefficient of some R_n, so a negative minor certifies a
Schur-negative expansion and vice versa within the scanned window.

Minors are evaluated fraction-free: the coefficient window is scaled by
the lcm of its denominators into an integer matrix, each minor runs
through Bareiss elimination in exact integers, and reported values are
scaled back down.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm

from .errors import BudgetError, PrecisionError
from .linalg import det_int_bareiss
from .partitions import Partition, enumerate_partitions
from .series import rat_str
from .sprout import Seed, decimate_seed, sprout_m
from .symfunc import Basis, convert

DEFAULT_MINOR_BUDGET = 3_000_000


@dataclass(frozen=True)
class MinorReport:
    """Every violation found while sweeping Toeplitz minors."""

    max_order: int
    max_degree: int
    violations: tuple
    passed: bool
    note: str = ""

    def to_json_obj(self) -> dict:
        return {
            "max_order": self.max_order,
            "max_degree": self.max_degree,
            "violations": [
                {
                    "rows": list(rows),
                    "cols": list(cols),
                    "determinant": rat_str(value, always_slash=True),
                }
                for rows, cols, value in self.violations
            ],
            "passed": self.passed,
            "note": self.note,
        }


@dataclass(frozen=True)
class PositivityReport:
    """First negative coefficient (if any) in a basis expansion sweep."""

    basis: Basis
    n_max: int
    first_negative: tuple | None
    passed: bool
    e_precheck_first_fail: int | None = None

    def to_json_obj(self) -> dict:
        first = None
        if self.first_negative is not None:
            n, lam, coeff = self.first_negative
            first = {
                "n": n,
                "partition": list(lam),
                "coeff": rat_str(coeff, always_slash=True),
            }
        return {
            "basis": self.basis.value,
            "n_max": self.n_max,
            "first_negative": first,
            "passed": self.passed,
            "e_precheck_first_fail": self.e_precheck_first_fail,
        }


def toeplitz_minor(seed: Seed, rows, cols) -> Fraction:
    """One exact minor of the seed's Toeplitz matrix [a_{j-i}]."""
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise ValueError("minor needs equally many rows and columns")
    matrix = [[seed.a_coeff(j - i) for j in cols] for i in rows]
    scale = lcm(*(x.denominator for row in matrix for x in row), 1)
    det = det_int_bareiss([[int(x * scale) for x in row] for row in matrix])
    return Fraction(det, scale ** len(rows))


def _minor_count(max_order: int, max_degree: int) -> int:
    return sum(
        comb(max_degree + 1, r) ** 2
        for r in range(1, min(max_order, max_degree + 1) + 1)
    )


def toeplitz_minors(
    seed: Seed,
    max_order: int,
    max_degree: int,
    minor_budget: int = DEFAULT_MINOR_BUDGET,
) -> MinorReport:
    """Evaluate every minor with indices <= max_degree and order <= max_order.

    Exact arithmetic throughout; violations are reported in (order, rows,
    cols) lexicographic order regardless of evaluation strategy.
    """
    if max_order < 1:
        raise ValueError("max_order must be positive")
    if max_degree > seed.precision:
        raise PrecisionError(
            f"degree {max_degree} beyond seed precision {seed.precision}"
        )
    count = _minor_count(max_order, max_degree)
    if count > minor_budget:
        raise BudgetError(
            f"{count} minors exceed the budget of {minor_budget}; "
            "shrink max_order/max_degree or raise minor_budget"
        )
    size = max_degree + 1
    scale = lcm(*(seed.a_coeff(k).denominator for k in range(size)), 1)
    entries = [int(seed.a_coeff(k) * scale) for k in range(size)]
    toeplitz = [
        [entries[j - i] if j >= i else 0 for j in range(size)] for i in range(size)
    ]
    violations = []
    for order in range(1, min(max_order, size) + 1):
        back = scale**order
        for rows in combinations(range(size), order):
            for cols in combinations(range(size), order):
                sub = [[toeplitz[i][j] for j in cols] for i in rows]
                det = det_int_bareiss(sub)
                if det < 0:
                    violations.append((rows, cols, Fraction(det, back)))
    return MinorReport(
        max_order=max_order,
        max_degree=max_degree,
        violations=tuple(violations),
        passed=not violations,
    )


def expansion_positivity(seed: Seed, n_max: int, basis: Basis) -> PositivityReport:
    """Expand R_1..R_{n_max} in the s, e or h basis and report the first
    strictly negative coefficient, scanning degrees upward and partitions
    in canonical order.

    For the e basis the necessary inequality a_n <= a_{n-1}/n is checked
    first; its earliest failure is recorded alongside the full sweep.
    """
    if basis not in (Basis.S, Basis.E, Basis.H):
        raise ValueError("positivity sweep supports the s, e and h bases only")
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if n_max > seed.precision:
        raise PrecisionError(f"degree {n_max} beyond seed precision {seed.precision}")
    precheck = None
    if basis is Basis.E:
        for n in range(1, n_max + 1):
            if seed.a_coeff(n) > seed.a_coeff(n - 1) / n:
                precheck = n
                break
    first_negative = None
    for n in range(1, n_max + 1):
        expansion = convert(sprout_m(seed, n), basis)
        for lam in enumerate_partitions(n):
            coeff = expansion.coeff(lam)
            if coeff < 0:
                first_negative = (n, lam, coeff)
                break
        if first_negative:
            break
    return PositivityReport(
        basis=basis,
        n_max=n_max,
        first_negative=first_negative,
        passed=first_negative is None,
        e_precheck_first_fail=precheck,
    )


def decimation_check(
    seed: Seed,
    d: int,
    max_order: int,
    max_degree: int,
    minor_budget: int = DEFAULT_MINOR_BUDGET,
) -> MinorReport:
    """Minor sweep of the decimated seed sum_n a_{dn} t^n.

    Every minor inspected here is literally a minor of the undecimated
    Toeplitz matrix (its row/column indices multiplied by d), so
    violations here certify violations there.
    """
    if d < 1:
        raise ValueError("decimation step must be positive")
    if d * max_degree > seed.precision:
        raise PrecisionError(
            f"decimated degree {d}*{max_degree} beyond seed precision {seed.precision}"
        )
    report = toeplitz_minors(
        decimate_seed(seed, d), max_order, max_degree, minor_budget=minor_budget
    )
    note = (
        f"entries a_(d*(j-i)) with d={d}: the matrix [a_(d(j-i))] is a submatrix "
        f"of [a_(j-i)], so each minor here is a minor of the base Toeplitz matrix"
    )
    return MinorReport(
        max_order=report.max_order,
        max_degree=report.max_degree,
        violations=report.violations,
        passed=report.passed,
        note=note,
    )


def straight_shape_minor(seed: Seed, lam) -> Fraction:
    """The Toeplitz minor whose value is the Schur coefficient <R_n, s_lam>.

    Rows lam_1 - 1 - lam_i + i and columns lam_1 - 1 + j (1-based i, j)
    reproduce det[a_{lam_i - i + j}].
    """
    lam = Partition(lam)
    ell = len(lam)
    if ell == 0:
        return Fraction(1)
    top = lam[0] - 1
    rows = [top - lam[i] + (i + 1) for i in range(ell)]
    cols = [top + (j + 1) for j in range(ell)]
    return toeplitz_minor(seed, rows, cols)
