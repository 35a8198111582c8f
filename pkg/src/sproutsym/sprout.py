"""Sprout sequences: symmetric functions grown from a seed power series.

A seed F(t) = 1 + a_1 t + a_2 t^2 + ... generates the sequence R_0 = 1,
R_1, R_2, ... through prod_i F(x_i t) = sum_n R_n t^n.  Three redundant
construction routes are implemented so that disagreement localizes bugs:

* the monomial route      [m_lam] R_n = a_{lam_1} a_{lam_2} ...
* the power-sum route     [p_lam] R_n = b_{lam_1} b_{lam_2} ... / z_lam
* the hom route           [b_lam] R_n = phi(dual of b_lam), where phi is
  the algebra map sending h_k to a_k.

Here b_n are the log coefficients, log F(t) = sum_n b_n t^n / n; they are
derived once at seed construction.

Every ``special_*`` operation evaluates both its closed form and the
generic coefficient extraction and raises ConsistencyError if the two
disagree, rather than returning a silently wrong value.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import ConsistencyError, PrecisionError
from .linalg import det_fraction
from .partitions import Partition, enumerate_partitions, z_of
from .series import (
    Poly,
    Series,
    exp_series,
    hook_ratio,
    inverse,
    log_series,
    mul,
    negate_arg,
    poly_div_one_plus_u,
    poly_trim,
    power,
)
from .series import decimate as series_decimate
from .symfunc import (
    Basis,
    SymFunc,
    basis_element,
    convert,
    kronecker,
    multiply,
    omega,
    principal_specialize,
)


class Seed:
    """A seed series together with its derived log coefficients.

    ``a`` holds the series coefficients (a_0 = 1 enforced); ``b[n]`` is
    n times the n-th log coefficient, with the convention b[0] = 1.
    """

    __slots__ = ("a", "b", "name")

    def __init__(self, a: Series, name: str | None = None):
        if a.coeff(0) != 1:
            raise ValueError("seed series must have constant term 1")
        log = log_series(a)
        self.a = a
        self.b = tuple(
            Fraction(1) if n == 0 else n * log.coeff(n)
            for n in range(a.precision + 1)
        )
        self.name = name

    @property
    def precision(self) -> int:
        return self.a.precision

    def a_coeff(self, k: int) -> Fraction:
        """a_k, with a_k = 0 for k < 0 (the Toeplitz/determinant convention)."""
        if k < 0:
            return Fraction(0)
        return self.a.coeff(k)

    def b_coeff(self, n: int) -> Fraction:
        if n < 0 or n > self.precision:
            raise PrecisionError(f"b_{n} beyond seed precision {self.precision}")
        return self.b[n]

    def __repr__(self) -> str:
        label = self.name or "seed"
        return f"Seed({label}, precision {self.precision})"


def _check_degree(seed: Seed, n: int) -> None:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n > seed.precision:
        raise PrecisionError(f"degree {n} beyond seed precision {seed.precision}")


def sprout_m(seed: Seed, n: int) -> SymFunc:
    """R_n in the monomial basis: [m_lam] R_n = prod a_{lam_i}."""
    _check_degree(seed, n)
    terms = {}
    for lam in enumerate_partitions(n):
        c = prod((seed.a_coeff(part) for part in lam), start=Fraction(1))
        if c != 0:
            terms[lam] = c
    return SymFunc(Basis.M, n, terms)


def sprout_p(seed: Seed, n: int) -> SymFunc:
    """R_n in the power-sum basis: [p_lam] R_n = prod b_{lam_i} / z_lam."""
    _check_degree(seed, n)
    terms = {}
    for lam in enumerate_partitions(n):
        c = prod((seed.b_coeff(part) for part in lam), start=Fraction(1))
        if c != 0:
            terms[lam] = c / z_of(lam)
    return SymFunc(Basis.P, n, terms)


def schur_coeff(seed: Seed, lam) -> Fraction:
    """<R_n, s_lam> as the determinant det[a_{lam_i - i + j}]."""
    lam = Partition(lam)
    _check_degree(seed, lam.n)
    ell = len(lam)
    if ell == 0:
        return Fraction(1)
    rows = [
        [seed.a_coeff(lam[i] - (i + 1) + (j + 1)) for j in range(ell)]
        for i in range(ell)
    ]
    return det_fraction(rows)


def phi_hom(seed: Seed, f: SymFunc) -> Fraction:
    """The algebra homomorphism h_k -> a_k, applied to any symmetric function."""
    _check_degree(seed, f.degree)
    hvec = convert(f, Basis.H)
    acc = Fraction(0)
    for lam, c in hvec.terms.items():
        acc += c * prod((seed.a_coeff(part) for part in lam), start=Fraction(1))
    return acc


def expansion_in(seed: Seed, n: int, basis: Basis) -> SymFunc:
    """R_n in any basis, via phi applied to the dual basis elements.

    The dual pairs are (m, h), (p, p/z), (e, omega m) and s is self-dual,
    so each coefficient is a single phi evaluation.  Agrees exactly with
    converting the monomial route.
    """
    _check_degree(seed, n)
    terms = {}
    for lam in enumerate_partitions(n):
        if basis is Basis.M:
            c = prod((seed.a_coeff(part) for part in lam), start=Fraction(1))
        elif basis is Basis.P:
            c = phi_hom(seed, basis_element(Basis.P, lam)) / z_of(lam)
        elif basis is Basis.H:
            c = phi_hom(seed, basis_element(Basis.M, lam))
        elif basis is Basis.E:
            c = phi_hom(seed, omega(basis_element(Basis.M, lam)))
        else:
            c = schur_coeff(seed, lam)
        if c != 0:
            terms[lam] = c
    return SymFunc(basis, n, terms)


def omega_seed(seed: Seed) -> Seed:
    """Seed of the omega-transformed sequence: 1 / F(-t)."""
    name = f"omega({seed.name})" if seed.name else None
    return Seed(inverse(negate_arg(seed.a)), name=name)


def decimate_seed(seed: Seed, d: int) -> Seed:
    """Seed with series sum_n a_{dn} t^n; log coefficients are rebuilt from scratch."""
    name = f"decimate({seed.name},{d})" if seed.name else None
    return Seed(series_decimate(seed.a, d), name=name)


def _consistent(label: str, closed, generic):
    if closed != generic:
        raise ConsistencyError(
            f"{label}: closed form {closed!r} != generic extraction {generic!r}"
        )
    return closed


def special_sn(seed: Seed, n_max: int) -> Series:
    """Series of [s_n] R_n, which reproduces the seed itself.

    Cross-checked against the sum of the h-expansion coefficients of R_n.
    """
    _check_degree(seed, n_max)
    closed = [seed.a_coeff(n) for n in range(n_max + 1)]
    for n in range(n_max + 1):
        hsum = sum(convert(sprout_m(seed, n), Basis.H).terms.values(), Fraction(0))
        _consistent(f"[s_{n}]R_{n}", closed[n], hsum)
    return Series(closed)


def special_hk_series(seed: Seed, k: int, n_max: int) -> Series:
    """Series whose n-th coefficient is [h_k^n] R_{kn} (h_k^n = the n-th power).

    Closed form: 1 / (F(-t) with each log coefficient b_i replaced by
    b_{ki}), the substitution applied at the log level.  The n = 1
    coefficient gives [h_k] R_k = b_k.
    """
    if k < 1:
        raise ValueError("k must be positive")
    _check_degree(seed, k * n_max)
    sub_log = Series(
        [Fraction(0)]
        + [
            Fraction(-1 if n % 2 else 1) * seed.b_coeff(k * n) / n
            for n in range(1, n_max + 1)
        ]
    )
    closed = inverse(exp_series(sub_log))
    for n in range(n_max + 1):
        column = Partition((k,) * n)
        generic = convert(sprout_m(seed, k * n), Basis.H).coeff(column)
        _consistent(f"[h_{k}^{n}]R_{k * n}", closed.coeff(n), generic)
    return closed


def special_h_pair(seed: Seed, i: int, j: int) -> Fraction:
    """[h_i h_j] R_{i+j} by the closed form b_i b_j - b_n (halved when i = j)."""
    if i < 1 or j < 1:
        raise ValueError("indices must be positive")
    n = i + j
    _check_degree(seed, n)
    if i != j:
        closed = seed.b_coeff(i) * seed.b_coeff(j) - seed.b_coeff(n)
    else:
        closed = (seed.b_coeff(i) ** 2 - seed.b_coeff(n)) / 2
    column = Partition(sorted((i, j), reverse=True))
    generic = convert(sprout_m(seed, n), Basis.H).coeff(column)
    return _consistent(f"[h_{i}h_{j}]R_{n}", closed, generic)


def special_ones(seed: Seed, n_max: int, k: int) -> Series:
    """Series of R_n(1^k), which equals F(t)^k coefficientwise."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    _check_degree(seed, n_max)
    closed = power(seed.a.truncate(n_max), k)
    for n in range(n_max + 1):
        generic = principal_specialize(sprout_m(seed, n), k)
        _consistent(f"R_{n}(1^{k})", closed.coeff(n), generic)
    return closed


def _hook(n: int, k: int) -> Partition:
    """The hook partition (n-k, 1^k) of n."""
    return Partition((n - k,) + (1,) * k)


def special_hooks(seed: Seed, n: int) -> Poly:
    """P_n(u) / (1+u) where F(t)/F(-ut) = sum P_n(u) t^n.

    The quotient's u^k coefficient is the hook Schur coefficient
    [s_{(n-k,1^k)}] R_n; failure to divide exactly by 1+u would mean an
    arithmetic bug, not a property of the seed.
    """
    if n < 1:
        raise ValueError("n must be positive")
    _check_degree(seed, n)
    ratio = hook_ratio(seed.a.truncate(n))
    closed = poly_div_one_plus_u(ratio.coeff(n))
    generic = poly_trim([schur_coeff(seed, _hook(n, k)) for k in range(n)])
    return _consistent(f"P_{n}(u)/(1+u)", closed, generic)


@dataclass(frozen=True)
class KroneckerReport:
    """Outcome of the internal-product homomorphism check at one degree."""

    degree: int
    checked_pairs: int
    violations: tuple
    passed: bool

    def to_json_obj(self) -> dict:
        return {
            "degree": self.degree,
            "checked_pairs": self.checked_pairs,
            "violations": [
                {"left": list(lam), "right": list(mu)} for lam, mu in self.violations
            ],
            "passed": self.passed,
        }


def kronecker_hom_check(seed: Seed, n: int) -> KroneckerReport:
    """Verify that f -> f * A(t) is multiplicative on power-sum products.

    For every pair (lam, mu) with |lam| + |mu| = n, the internal product
    of R_n with p_lam p_mu must factor as the product of the two lower
    internal products; each side is also compared against its closed
    power-sum form prod b.
    """
    _check_degree(seed, n)
    violations = []
    checked = 0
    r_full = sprout_p(seed, n)
    for s in range(n + 1):
        r_left = sprout_p(seed, s)
        r_right = sprout_p(seed, n - s)
        for lam in enumerate_partitions(s):
            act_left = kronecker(r_left, basis_element(Basis.P, lam))
            for mu in enumerate_partitions(n - s):
                checked += 1
                act_right = kronecker(r_right, basis_element(Basis.P, mu))
                product = multiply(
                    basis_element(Basis.P, lam), basis_element(Basis.P, mu)
                )
                lhs = kronecker(r_full, product)
                rhs = multiply(act_left, act_right)
                b_prod = prod(
                    (seed.b_coeff(part) for part in tuple(lam) + tuple(mu)),
                    start=Fraction(1),
                )
                expected = SymFunc(
                    Basis.P, n, {product_key: b_prod for product_key in product.terms}
                )
                if lhs != convert(rhs, Basis.P) or lhs != expected:
                    violations.append((lam, mu))
    return KroneckerReport(
        degree=n,
        checked_pairs=checked,
        violations=tuple(violations),
        passed=not violations,
    )
