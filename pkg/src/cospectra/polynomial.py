"""Univariate polynomials with exact integer and rational coefficients.

Coefficients are stored in ascending degree order. Besides ring arithmetic
this module provides exact root extraction for integer roots and real root
isolation (Sturm sequences plus dyadic bisection) for polynomials that are
known to be real-rooted, such as characteristic polynomials of symmetric
matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
import math
from math import gcd
from typing import Iterable, Sequence

from .errors import ZeroPolynomial


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = _strip(int(x) for x in self.coeffs)
        object.__setattr__(self, "coeffs", c)

    # constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def linear(cls, root: int) -> IntPoly:
        """The monic factor (x - root)."""
        return cls((-root, 1))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPoly:
        return cls((0,) * degree + (c,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        return reduce(lambda acc, r: acc * cls.linear(r), roots, cls.constant(1))

    # basic properties ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> IntPoly:
        """Divide out the content and make the leading coefficient positive."""
        c = self.content()
        if c == 0:
            return self
        if self.leading < 0:
            c = -c
        return IntPoly(x // c for x in self.coeffs)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other) -> IntPoly:
        other = _coerce(other)
        n = max(len(self), len(other))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> IntPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> IntPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self) + len(other) - 1)
        b = other.coeffs
        for i, a in enumerate(self.coeffs):
            if a:
                for j, bj in enumerate(b):
                    out[i + j] += a * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Long division requiring every quotient coefficient to be integral.

        Raises ArithmeticError if an inexact division is encountered.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dl, dd = divisor.leading, divisor.degree
        if self.degree < dd:
            return IntPoly(), self
        quot = [0] * (self.degree - dd + 1)
        for i in range(self.degree - dd, -1, -1):
            top = rem[i + dd]
            if top == 0:
                continue
            q, r = divmod(top, dl)
            if r:
                raise ArithmeticError("inexact integer polynomial division")
            quot[i] = q
            for j, c in enumerate(divisor.coeffs):
                rem[i + j] -= q * c
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, divisor) -> IntPoly:
        """Quotient of a division known to leave no remainder."""
        if isinstance(divisor, int):
            if any(c % divisor for c in self.coeffs):
                raise ArithmeticError("inexact integer division")
            return IntPoly(c // divisor for c in self.coeffs)
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError("polynomial division leaves a remainder")
        return q

    def divides(self, other: IntPoly) -> bool:
        """True if self divides other over the integers."""
        try:
            return other.divmod(self)[1].is_zero()
        except ArithmeticError:
            return False

    # evaluation and transforms -----------------------------------------

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, inner: IntPoly) -> IntPoly:
        """self(inner(x))."""
        acc = IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def scale_argument(self, s: int) -> IntPoly:
        """p(s*x)."""
        return IntPoly(c * s**i for i, c in enumerate(self.coeffs))

    def even_part_in_square(self) -> IntPoly | None:
        """g with self(x) == g(x**2), or None if self has odd-degree terms."""
        if any(c for c in self.coeffs[1::2]):
            return None
        return IntPoly(self.coeffs[::2])

    def deflate_zero(self) -> tuple[int, IntPoly]:
        """Split off the maximal power of x: returns (m, q) with self = x**m * q."""
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no finite zero multiplicity")
        m = 0
        while self.coeffs[m] == 0:
            m += 1
        return m, IntPoly(self.coeffs[m:])

    def tolist(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self.coeffs)


def _coerce(value) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly.constant(value)
    raise TypeError(f"cannot combine IntPoly with {type(value).__name__}")


def format_poly(coeffs: Sequence, var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if i == 0:
            body = f"{mag}"
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with rational coefficients, stored as numerator/denominator.

    The pair is content-reduced and the denominator is positive, so equal
    polynomials have equal representations.
    """

    numerator: IntPoly
    denominator: int = 1

    def __post_init__(self):
        num, den = self.numerator, int(self.denominator)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(num.content(), den)
        if g > 1:
            num, den = num.exact_div(g), den // g
        if num.is_zero():
            den = 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def from_fractions(cls, coeffs: Sequence[Fraction]) -> RationalPoly:
        den = reduce(lambda a, b: a * b // gcd(a, b), (Fraction(c).denominator for c in coeffs), 1)
        return cls(IntPoly(int(Fraction(c) * den) for c in coeffs), den)

    @property
    def degree(self) -> int:
        return self.numerator.degree

    def coefficients(self) -> list[Fraction]:
        return [Fraction(c, self.denominator) for c in self.numerator.coeffs]

    def is_monic(self) -> bool:
        return self.numerator.leading == self.denominator

    def __mul__(self, other) -> RationalPoly:
        if isinstance(other, RationalPoly):
            return RationalPoly(self.numerator * other.numerator, self.denominator * other.denominator)
        return RationalPoly(self.numerator * _coerce(other), self.denominator)

    __rmul__ = __mul__

    def __call__(self, x):
        return Fraction(self.numerator(x), self.denominator) if isinstance(x, (int, Fraction)) \
            else self.numerator(x) / self.denominator

    def __str__(self) -> str:
        return format_poly(self.coefficients())


# exact root helpers -----------------------------------------------------


def root_multiplicity(p: IntPoly | RationalPoly, r: int) -> int:
    """Largest e such that (x - r)**e divides p, by repeated synthetic division."""
    if isinstance(p, RationalPoly):
        p = p.numerator
    if p.is_zero():
        raise ZeroPolynomial("root multiplicity undefined for the zero polynomial")
    coeffs = list(p.coeffs)
    e = 0
    while len(coeffs) > 1:
        # synthetic division by (x - r), high degree first
        acc = 0
        quot = []
        for c in reversed(coeffs):
            acc = acc * r + c
            quot.append(acc)
        if quot.pop() != 0:
            break
        coeffs = quot[::-1]
        e += 1
    return e


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Z[x] with positive leading coefficient."""
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, _prem(a, b).primitive()
    return a.primitive()


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder with a positive scaling factor |lc(b)|**(deg a - deg b + 1)."""
    delta = a.degree - b.degree
    if delta < 0:
        return a
    scaled = a * (abs(b.leading) ** (delta + 1))
    return scaled.divmod(b)[1]


def _positive_part(p: IntPoly) -> IntPoly:
    """Divide by the positive content, keeping the sign pattern intact."""
    c = p.content()
    return p.exact_div(c) if c > 1 else p


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm over Z: primitive squarefree factors with multiplicities.

    The product of f**m over the result equals p up to a constant factor.
    """
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial")
    f = p.primitive()
    if f.degree <= 0:
        return []
    out = []
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f.exact_div(a)
    c = fp.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def _sturm_chain(p: IntPoly) -> list[IntPoly]:
    chain = [p, _positive_part(p.derivative())]
    while chain[-1].degree > 0:
        r = _prem(chain[-2], chain[-1])
        if r.is_zero():
            break
        chain.append(_positive_part(-r))
    return chain


def _sign_at(p: IntPoly, num: int, shift: int) -> int:
    """Sign of p(num / 2**shift), computed in exact integers."""
    d = p.degree
    acc = 0
    for i, c in enumerate(p.coeffs):
        acc += c * num**i << (shift * (d - i))
    return (acc > 0) - (acc < 0)


def _variations(chain: list[IntPoly], num: int, shift: int) -> int:
    signs = [s for s in (_sign_at(q, num, shift) for q in chain) if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _root_bound_exp(p: IntPoly) -> int:
    """e such that every complex root has |x| < 2**e (Fujiwara bound)."""
    n = p.degree
    log_lc = math.log2(abs(p.leading))
    worst = -math.inf
    for i in range(1, n + 1):
        c = p[n - i]
        if c:
            worst = max(worst, (math.log2(abs(c)) - log_lc) / i)
    if worst == -math.inf:
        return 1
    return max(1, math.floor(worst) + 3)


def isolate_real_roots(p: IntPoly, precision_bits: int = 44) -> list[float]:
    """Distinct real roots of a squarefree integer polynomial, ascending.

    Roots are isolated by Sturm counting over dyadic intervals and then
    bisected exactly down to width 2**-precision_bits.
    """
    if p.degree <= 0:
        return []
    chain = _sturm_chain(p)
    shift = precision_bits
    half = 1 << (_root_bound_exp(p) + shift)

    def count(a: int, b: int) -> int:
        return _variations(chain, a, shift) - _variations(chain, b, shift)

    found: list[int] = []
    stack = [(-half, half, count(-half, half))]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            found.append(_refine(p, chain, a, b, shift))
            continue
        if b - a <= 1:
            # roots closer than the working precision
            found.extend([b] * k)
            continue
        mid = (a + b) // 2
        left = count(a, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, k - left))
    return sorted(x / (1 << shift) for x in found)


def _refine(p: IntPoly, chain: list[IntPoly], a: int, b: int, shift: int) -> int:
    """Shrink (a, b], known to hold exactly one simple root, to unit width."""
    sa, sb = _sign_at(p, a, shift), _sign_at(p, b, shift)
    while b - a > 1:
        if sb == 0:
            return b
        mid = (a + b) // 2
        sm = _sign_at(p, mid, shift)
        if sa != 0:
            go_left = sm == 0 or sm != sa
        else:
            go_left = _variations(chain, a, shift) - _variations(chain, mid, shift) == 1
        if go_left:
            b, sb = mid, sm
        else:
            a, sa = mid, sm
    return b


def real_roots(p: IntPoly | RationalPoly, precision_bits: int = 44) -> list[float]:
    """All real roots with multiplicity, ascending.

    Intended for real-rooted polynomials; complex roots are silently absent
    from the result.
    """
    if isinstance(p, RationalPoly):
        p = p.numerator
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial")
    out: list[float] = []
    for factor, mult in squarefree_decomposition(p):
        for r in isolate_real_roots(factor, precision_bits):
            out.extend([r] * mult)
    return sorted(out)
