"""Truncated formal power series over exact rationals.

A ``Series`` of precision N stores exactly the coefficients of t^0..t^N.
Coefficients beyond N are unknown, not zero: reading one raises
``PrecisionError`` and arithmetic truncates to the shortest operand.
Nothing is ever silently zero-padded, so identity and positivity checks
can only see coefficients that were really computed.

``PolySeries`` is the same discipline with coefficients that are
polynomials in a second indeterminate u (tuples of Fractions indexed by
the power of u); it backs the two-variable ratio f(t)/f(-u t).

The seed-file format also lives here: a JSON array of rationals written
as "p/q" strings, index = power of t, entry 0 equal to "1".
"""

import json
from fractions import Fraction

from .errors import ConsistencyError, PrecisionError


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rat_str(x: Fraction, always_slash: bool = False) -> str:
    """Canonical "p/q" with q > 0 and gcd(p, q) = 1.

    Integers drop the "/1" unless ``always_slash`` is set (the JSON
    schemas keep it for uniformity).
    """
    x = _frac(x)
    if x.denominator == 1 and not always_slash:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Series:
    """Coefficients a_0..a_N of a truncated power series, all exact."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(_frac(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs = coeffs

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("coefficient index must be nonnegative")
        if n > self.precision:
            raise PrecisionError(
                f"coefficient {n} requested beyond stored precision {self.precision}"
            )
        return self.coeffs[n]

    def truncate(self, n: int) -> "Series":
        if n > self.precision:
            raise PrecisionError(
                f"cannot extend precision {self.precision} to {n}"
            )
        return Series(self.coeffs[: n + 1])

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Series([{', '.join(rat_str(c) for c in self.coeffs)}])"


def mul(f: Series, g: Series) -> Series:
    """Cauchy product truncated to the common precision of the operands."""
    n = min(f.precision, g.precision)
    out = [
        sum((f.coeffs[k] * g.coeffs[m - k] for k in range(m + 1)), Fraction(0))
        for m in range(n + 1)
    ]
    return Series(out)


def power(f: Series, k: int) -> Series:
    """f(t)**k at the precision of f (k = 0 gives the constant series 1)."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    out = Series([Fraction(1)] + [Fraction(0)] * f.precision)
    for _ in range(k):
        out = mul(out, f)
    return out


def inverse(f: Series) -> Series:
    """Multiplicative inverse; requires constant term 1."""
    if f.coeffs[0] != 1:
        raise ValueError("inverse needs constant term 1")
    g = [Fraction(1)]
    for n in range(1, f.precision + 1):
        g.append(-sum((f.coeffs[k] * g[n - k] for k in range(1, n + 1)), Fraction(0)))
    return Series(g)


def log_series(f: Series) -> Series:
    """Formal logarithm of a series with constant term 1."""
    if f.coeffs[0] != 1:
        raise ValueError("log needs constant term 1")
    c = [Fraction(0)]
    for n in range(1, f.precision + 1):
        acc = sum((j * c[j] * f.coeffs[n - j] for j in range(1, n)), Fraction(0))
        c.append(f.coeffs[n] - acc / n)
    return Series(c)


def exp_series(f: Series) -> Series:
    """Formal exponential of a series with constant term 0."""
    if f.coeffs[0] != 0:
        raise ValueError("exp needs constant term 0")
    g = [Fraction(1)]
    for n in range(1, f.precision + 1):
        acc = sum((j * f.coeffs[j] * g[n - j] for j in range(1, n + 1)), Fraction(0))
        g.append(acc / n)
    return Series(g)


def negate_arg(f: Series) -> Series:
    """f(-t): multiply coefficient n by (-1)**n."""
    return Series([c if n % 2 == 0 else -c for n, c in enumerate(f.coeffs)])


def decimate(f: Series, d: int) -> Series:
    """Keep every d-th coefficient: output coefficient n is input coefficient d*n."""
    if d < 1:
        raise ValueError("decimation step must be positive")
    return Series(f.coeffs[::d])


# ---------------------------------------------------------------------------
# Polynomials in u (tuples of Fractions, index = power of u) and PolySeries.

Poly = tuple  # tuple[Fraction, ...]; () is the zero polynomial


def poly_trim(c) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(Fraction(x) for x in c)


def poly_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return poly_trim(out)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def poly_scale(a: Poly, s) -> Poly:
    s = _frac(s)
    if s == 0:
        return ()
    return poly_trim(x * s for x in a)


def poly_eval(a: Poly, x) -> Fraction:
    x = _frac(x)
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_div_one_plus_u(p: Poly) -> Poly:
    """Exact quotient p(u) / (1 + u); nonzero remainder is an internal bug."""
    if not p:
        return ()
    q = [Fraction(0)] * (len(p) - 1)
    carry = Fraction(0)
    for k in range(len(p) - 1, 0, -1):
        q[k - 1] = p[k] - carry
        carry = q[k - 1]
    if p[0] - carry != 0:
        raise ConsistencyError(f"polynomial {p!r} is not divisible by 1+u")
    return poly_trim(q)


class PolySeries:
    """Truncated series in t whose coefficients are polynomials in u."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(poly_trim(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least its constant term")

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("coefficient index must be nonnegative")
        if n > self.precision:
            raise PrecisionError(
                f"coefficient {n} requested beyond stored precision {self.precision}"
            )
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolySeries) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"PolySeries({list(self.coeffs)!r})"


def hook_ratio(f: Series) -> PolySeries:
    """Expand f(t) / f(-u t) as a PolySeries.

    Coefficient n is a polynomial P_n(u) of degree at most n; P_0 = 1.
    """
    if f.coeffs[0] != 1:
        raise ValueError("hook ratio needs constant term 1")
    n_max = f.precision
    # g = f(-u t): coefficient of t^n is a_n * (-u)^n.
    g: list[Poly] = []
    for n in range(n_max + 1):
        a = f.coeffs[n] if n % 2 == 0 else -f.coeffs[n]
        g.append(poly_trim([Fraction(0)] * n + [a]))
    # h = 1 / f(-u t) by the usual inverse recurrence, in K[u].
    h: list[Poly] = [(Fraction(1),)]
    for n in range(1, n_max + 1):
        acc: Poly = ()
        for k in range(1, n + 1):
            acc = poly_add(acc, poly_mul(g[k], h[n - k]))
        h.append(poly_scale(acc, -1))
    # p = f(t) * h.
    p: list[Poly] = []
    for n in range(n_max + 1):
        acc = ()
        for k in range(n + 1):
            acc = poly_add(acc, poly_scale(h[n - k], f.coeffs[k]))
        p.append(acc)
    return PolySeries(p)


# ---------------------------------------------------------------------------
# Seed files.


def load_seed_series(path) -> Series:
    """Load a seed file (JSON array of "p/q" strings; entry 0 must be "1")."""
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed seed file {path}: {exc}") from exc
    if not isinstance(data, list) or not data:
        raise ValueError(f"malformed seed file {path}: expected a nonempty JSON array")
    try:
        coeffs = [_frac(entry) for entry in data]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed seed file {path}: {exc}") from exc
    if coeffs[0] != 1:
        raise ValueError(f"seed file {path}: constant term must be 1")
    return Series(coeffs)


def dump_seed_series(f: Series) -> str:
    """Serialize a series in the seed-file format."""
    return json.dumps([rat_str(c, always_slash=True) for c in f.coeffs])
