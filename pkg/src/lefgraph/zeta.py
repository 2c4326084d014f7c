"""Dynamical zeta functions of graph automorphisms.

zeta_T(z) = exp(sum_n L(T^n) z^n / n) is rational; it is computed by two
independent constructive routes (a determinant product over cohomology
degrees and a periodic-orbit product) and checked against the power series
of its logarithmic derivative.  The graph zeta function multiplies the
per-automorphism zetas over the whole group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import CliqueComplex, build_complex
from .cohomology import CochainSpaces, permutation_parity_sign
from .dynamics import GraphMap, lefschetz_chain
from .graphs import Graph
from .linalg import (
    cyclotomic_factor,
    det_one_minus_z,
    one_minus_z_to_the,
    one_plus_z_to_the,
    poly_div_exact,
    poly_gcd,
    poly_mul,
    poly_pow,
    poly_trim,
)
from .symmetry import AutomorphismGroup, automorphism_group, simplex_orbits_under_map


class ZetaError(ValueError):
    pass


def _format_factor(p: int, e: int, plus: bool) -> str:
    base = f"(1{'+' if plus else '-'}z)" if p == 1 else \
        f"(1{'+' if plus else '-'}z^{p})"
    return base if e == 1 else f"{base}^{e}"


def _poly_text(c: list[int]) -> str:
    if c == [0]:
        return "0"
    parts = []
    for i, x in enumerate(c):
        if x == 0:
            continue
        if i == 0:
            parts.append(str(x))
            continue
        z = "z" if i == 1 else f"z^{i}"
        if x == 1:
            term = z
        elif x == -1:
            term = f"-{z}"
        else:
            term = f"{x}{z}"
        parts.append(term if not parts else (f"+ {term}" if x > 0 else f"- {term.lstrip('-')}"))
    return " ".join(parts)


class RationalFunctionZ:
    """A rational function of z with value 1 at z = 0.

    Stored as a coprime pair of primitive integer polynomials (ascending
    coefficients, denominator constant term positive).  When the function was
    built from an orbit census, the factor list [(p, e_minus, e_plus), ...]
    with exponents of (1 - z^p) and (1 + z^p) is retained.
    """

    __slots__ = ("num", "den", "factors")

    def __init__(self, num: list[int], den: list[int],
                 factors: tuple[tuple[int, int, int], ...] | None = None):
        self.num = tuple(poly_trim(num))
        self.den = tuple(poly_trim(den))
        self.factors = factors
        if self.den[0] <= 0 or self.num[0] != self.den[0]:
            raise ZetaError("zeta functions must satisfy zeta(0) = 1")

    @classmethod
    def one(cls) -> "RationalFunctionZ":
        return cls([1], [1], ())

    @classmethod
    def from_quotient(cls, num, den) -> "RationalFunctionZ":
        """Normalize an arbitrary quotient of polynomials (int or Fraction).

        Both lists are scaled by one common factor (so the function is
        unchanged), divided by their polynomial gcd, then by their common
        integer content, and sign-fixed to a positive denominator constant.
        """
        num, den = _joint_integer_scale(num, den)
        if poly_trim(den) == [0]:
            raise ZetaError("zero denominator")
        g = poly_gcd(num, den)
        if g != [1]:
            num = poly_div_exact(num, g)
            den = poly_div_exact(den, g)
        num, den = _common_content_and_sign(num, den)
        return cls(num, den)

    @classmethod
    def from_factors(cls, exponents: dict[int, tuple[int, int]]) -> "RationalFunctionZ":
        """Build from {period p: (exponent of 1-z^p, exponent of 1+z^p)}.

        Expansion goes through the cyclotomic building blocks F_d (constant
        term 1), whose exponents are added up; positive exponents multiply
        into the numerator, negative into the denominator, so the pair is
        coprime by construction with no polynomial gcd needed.
        """
        cyclo: dict[int, int] = {}
        factors = []
        for p in sorted(exponents):
            e_minus, e_plus = exponents[p]
            if e_minus == 0 and e_plus == 0:
                continue
            factors.append((p, e_minus, e_plus))
            if e_minus:
                for d in one_minus_z_to_the(p):
                    cyclo[d] = cyclo.get(d, 0) + e_minus
            if e_plus:
                for d in one_plus_z_to_the(p):
                    cyclo[d] = cyclo.get(d, 0) + e_plus
        num, den = [1], [1]
        for d in sorted(cyclo):
            e = cyclo[d]
            if e > 0:
                num = poly_mul(num, poly_pow(cyclotomic_factor(d), e))
            elif e < 0:
                den = poly_mul(den, poly_pow(cyclotomic_factor(d), -e))
        return cls(num, den, tuple(factors))

    def __mul__(self, other: "RationalFunctionZ") -> "RationalFunctionZ":
        if self.factors is not None and other.factors is not None:
            merged: dict[int, tuple[int, int]] = {}
            for p, e_minus, e_plus in self.factors + other.factors:
                m, pl = merged.get(p, (0, 0))
                merged[p] = (m + e_minus, pl + e_plus)
            return RationalFunctionZ.from_factors(merged)
        return RationalFunctionZ.from_quotient(
            poly_mul(list(self.num), list(other.num)),
            poly_mul(list(self.den), list(other.den)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunctionZ):
            return NotImplemented
        return poly_mul(list(self.num), list(other.den)) == \
            poly_mul(list(other.num), list(self.den))

    def __hash__(self):
        return hash((self.num, self.den))

    def is_one(self) -> bool:
        return self.num == self.den

    def log_derivative_series(self, count: int) -> list[int]:
        """First `count` coefficients l_1..l_count with zeta'/zeta = sum l_n z^(n-1).

        Exact long division of (num' den - num den') by (num den); all
        coefficients are integers because both polynomials have constant
        term 1 up to a common factor.
        """
        num, den = list(self.num), list(self.den)
        a = poly_trim([x - y for x, y in _pad(
            poly_mul(_derivative(num), den), poly_mul(num, _derivative(den)))])
        b = poly_mul(num, den)
        scale = b[0]
        series = []
        for i in range(count):
            ai = a[i] if i < len(a) else 0
            acc = ai - sum(series[j] * b[i - j] for j in range(max(0, i - len(b) + 1), i))
            # b[0] = num(0)*den(0) = den(0)^2 = scale; division is exact.
            q, r = divmod(acc, scale)
            if r:
                raise ZetaError("log-derivative series is not integral")
            series.append(q)
        return series

    def to_json(self) -> dict:
        return {
            "factored": [list(f) for f in self.factors] if self.factors is not None else None,
            "numerator": list(self.num),
            "denominator": list(self.den),
            "text": self.text(),
        }

    def text(self) -> str:
        """Factored rendering when available, else a polynomial quotient."""
        if self.factors is not None:
            if not self.factors:
                return "1"
            parts = []
            for p, e_minus, e_plus in self.factors:
                if e_minus:
                    parts.append(_format_factor(p, e_minus, plus=False))
                if e_plus:
                    parts.append(_format_factor(p, e_plus, plus=True))
            return " ".join(parts) if parts else "1"
        if self.den == (1,):
            return _poly_text(list(self.num))
        return f"({_poly_text(list(self.num))}) / ({_poly_text(list(self.den))})"

    def __repr__(self) -> str:
        return f"RationalFunctionZ({self.text()})"


def _pad(a: list[int], b: list[int]) -> list[tuple[int, int]]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
            for i in range(n)]


def _derivative(a: list[int]) -> list[int]:
    if len(a) <= 1:
        return [0]
    return poly_trim([i * c for i, c in enumerate(a)][1:])


def _joint_integer_scale(num, den) -> tuple[list[int], list[int]]:
    """Scale both coefficient lists by one factor to make everything integer."""
    fn = [Fraction(x) for x in num]
    fd = [Fraction(x) for x in den]
    scale = 1
    for x in fn + fd:
        scale = scale * x.denominator // _int_gcd(scale, x.denominator)
    return (poly_trim([int(x * scale) for x in fn]),
            poly_trim([int(x * scale) for x in fd]))


def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _common_content_and_sign(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Divide by the shared integer content only, keeping the quotient's value."""
    g = 0
    for x in num + den:
        g = _int_gcd(g, x)
    if g > 1:
        num = [x // g for x in num]
        den = [x // g for x in den]
    if den[0] < 0:
        num = [-x for x in num]
        den = [-x for x in den]
    return num, den


@dataclass
class OrbitCensus:
    """Counts of prime periodic orbits by period, dimension parity, and sign.

    a(p): odd-dimensional, T^p-signature +1;  b(p): even-dimensional, +1;
    c(p): odd-dimensional, signature -1;      d(p): even-dimensional, -1.
    """

    a: dict[int, int] = field(default_factory=dict)
    b: dict[int, int] = field(default_factory=dict)
    c: dict[int, int] = field(default_factory=dict)
    d: dict[int, int] = field(default_factory=dict)

    def periods(self) -> list[int]:
        return sorted(set(self.a) | set(self.b) | set(self.c) | set(self.d))

    def total_weight(self) -> int:
        """Sum of p * (orbit count at p): must equal the simplex count."""
        return sum(p * (self.a.get(p, 0) + self.b.get(p, 0)
                        + self.c.get(p, 0) + self.d.get(p, 0))
                   for p in self.periods())

    def merged(self, other: "OrbitCensus") -> "OrbitCensus":
        out = OrbitCensus(dict(self.a), dict(self.b), dict(self.c), dict(self.d))
        for mine, theirs in ((out.a, other.a), (out.b, other.b),
                             (out.c, other.c), (out.d, other.d)):
            for p, k in theirs.items():
                mine[p] = mine.get(p, 0) + k
        return out

    def exponents(self) -> dict[int, tuple[int, int]]:
        """Per period: exponents of (1 - z^p) and (1 + z^p) in the product."""
        return {p: (self.a.get(p, 0) - self.b.get(p, 0),
                    self.c.get(p, 0) - self.d.get(p, 0))
                for p in self.periods()}


def orbit_census(cx: CliqueComplex, t: GraphMap) -> OrbitCensus:
    """Classify every periodic orbit of an automorphism.

    For an orbit of minimal period p with representative x, the signature of
    T^p restricted to x decides the sign class; the dimension of x decides
    the parity class.
    """
    if not t.is_automorphism():
        raise ZetaError("the orbit census needs an automorphism")
    census = OrbitCensus()
    powers: dict[int, tuple[int, ...]] = {}
    for orbit in simplex_orbits_under_map(cx, t):
        p = orbit.period
        if p not in powers:
            powers[p] = t.power(p).image
        image_p = powers[p]
        x = orbit.representative
        sign = permutation_parity_sign([image_p[v] for v in x])
        odd_dim = len(x) % 2 == 0  # dim = len - 1
        target = (census.a if sign > 0 else census.c) if odd_dim else \
            (census.b if sign > 0 else census.d)
        target[p] = target.get(p, 0) + 1
    return census


def zeta_product(census: OrbitCensus) -> RationalFunctionZ:
    """Periodic-orbit product: prod_p (1-z^p)^(a-b) (1+z^p)^(c-d)."""
    return RationalFunctionZ.from_factors(census.exponents())


def zeta_det(g: Graph, t: GraphMap,
             spaces: CochainSpaces | None = None) -> RationalFunctionZ:
    """Determinant route: prod_k det(1 - z T_k)^((-1)^(k+1)), k from 0.

    T_k is the matrix induced on H^k; even k lands in the denominator, odd k
    in the numerator.
    """
    if not t.is_automorphism():
        raise ZetaError("the determinant formula needs finite order, i.e. an automorphism")
    if spaces is None:
        spaces = CochainSpaces(build_complex(g))
    num, den = [Fraction(1)], [Fraction(1)]
    for k in range(spaces.dim + 1):
        if spaces.betti(k) == 0:
            continue
        det = det_one_minus_z(spaces.induced_matrix(t.image, k))
        if k % 2:
            num = _fraction_poly_mul(num, det)
        else:
            den = _fraction_poly_mul(den, det)
    return RationalFunctionZ.from_quotient(num, den)


def _fraction_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def series_consistency(zeta: RationalFunctionZ, lefschetz_values: list[int]) -> bool:
    """Does zeta'/zeta agree with sum L(T^n) z^(n-1) to the given order?"""
    return zeta.log_derivative_series(len(lefschetz_values)) == list(lefschetz_values)


def lefschetz_iterates(cx: CliqueComplex, t: GraphMap, count: int) -> list[int]:
    """L(T^n) for n = 1..count, by the chain-trace route."""
    out = []
    current = t
    for _ in range(count):
        out.append(lefschetz_chain(cx, current))
        current = t.compose(current)
    return out


def graph_zeta(g: Graph, group: AutomorphismGroup | None = None,
               cx: CliqueComplex | None = None) -> RationalFunctionZ:
    """zeta_G = product of zeta_T over the automorphism group.

    Computed by merging all orbit censuses first, then expanding once, so
    the factored form is the merged census product.
    """
    if group is None:
        group = automorphism_group(g)
    if cx is None:
        cx = build_complex(g)
    combined = OrbitCensus()
    for t in group:
        combined = combined.merged(orbit_census(cx, t))
    return zeta_product(combined)
