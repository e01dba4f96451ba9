"""Exact arithmetic in the cyclotomic field Q(zeta_24).

Elements are stored as integer coordinates over the power basis
1, z, ..., z^7 (z = exp(2 pi i / 24)) together with a positive common
denominator.  Reduction uses Phi_24(x) = x^8 - x^4 + 1, i.e. z^8 = z^4 - 1.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

DEGREE = 8
ORDER = 24
_SUPPORTED_ORDERS = (1, 2, 3, 4, 6, 8, 12, 24)


def _reduce(poly: list[int]) -> tuple[int, ...]:
    # fold x^k (k >= 8) via x^8 = x^4 - 1, highest degree first
    poly = list(poly)
    for k in range(len(poly) - 1, DEGREE - 1, -1):
        c = poly[k]
        if c:
            poly[k - 4] += c
            poly[k - 8] -= c
        poly[k] = 0
    poly.extend([0] * (DEGREE - len(poly)))
    return tuple(poly[:DEGREE])


def _normalize(nums, den: int) -> tuple[tuple[int, ...], int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        nums = tuple(-a for a in nums)
        den = -den
    g = den
    for a in nums:
        if a:
            g = gcd(g, a)
            if g == 1:
                break
    if g > 1:
        nums = tuple(a // g for a in nums)
        den //= g
    if not any(nums):
        den = 1
    return tuple(nums), den


class Scalar:
    """Immutable element of Q(zeta_24)."""

    __slots__ = ("nums", "den", "_hash")

    def __init__(self, nums=(0,) * DEGREE, den: int = 1, *, _raw: bool = False):
        if _raw:
            self.nums = nums
            self.den = den
        else:
            nums = tuple(int(a) for a in nums)
            if len(nums) != DEGREE:
                raise ValueError("expected 8 coordinates")
            self.nums, self.den = _normalize(nums, int(den))
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def of(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, int):
            return _int_scalar(value)
        if isinstance(value, Fraction):
            return cls((value.numerator,) + (0,) * 7, value.denominator)
        raise TypeError(f"cannot coerce {type(value).__name__} to Scalar")

    @classmethod
    def from_coeffs(cls, coeffs) -> "Scalar":
        fr = [Fraction(c) for c in coeffs]
        if len(fr) != DEGREE:
            raise ValueError("expected 8 coordinates")
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        return cls(tuple(int(f * den) for f in fr), den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar.of(other)
            else:
                return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        d1, d2 = self.den, other.den
        if d1 == d2:
            return Scalar(tuple(a + b for a, b in zip(self.nums, other.nums)), d1)
        return Scalar(tuple(a * d2 + b * d1 for a, b in zip(self.nums, other.nums)), d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(tuple(-a for a in self.nums), self.den, _raw=True)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar.of(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.of(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, int):
                if other == 0:
                    return ZERO
                return Scalar(tuple(a * other for a in self.nums), self.den)
            if isinstance(other, Fraction):
                other = Scalar.of(other)
            else:
                return NotImplemented
        a, b = self.nums, other.nums
        if not any(b[1:]):
            c = b[0]
            return Scalar(tuple(x * c for x in a), self.den * other.den)
        if not any(a[1:]):
            c = a[0]
            return Scalar(tuple(x * c for x in b), self.den * other.den)
        prod = [0] * (2 * DEGREE - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Scalar(_reduce(prod), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero Scalar")
        if self.is_rational():
            return Scalar((self.den,) + (0,) * 7, self.nums[0])
        # norm trick: product of the conjugates z -> z^k, k coprime to 24, k != 1
        conj = ONE
        for k in (5, 7, 11, 13, 17, 19, 23):
            conj = conj * self.galois(k)
        norm = self * conj
        return conj * norm.inverse()

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar.of(other)
            else:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.of(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, k: int) -> "Scalar":
        """Apply the automorphism z -> z^k (gcd(k, 24) = 1)."""
        if gcd(k, ORDER) != 1:
            raise ValueError("k must be a unit mod 24")
        out = ZERO
        for i, a in enumerate(self.nums):
            if a:
                out = out + Scalar.of(a) * zeta_power(i * k)
        return out / self.den if self.den != 1 else out

    def conjugate(self) -> "Scalar":
        return self.galois(ORDER - 1)

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.den == other.den and self.nums == other.nums
        if isinstance(other, (int, Fraction)):
            return self == Scalar.of(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nums, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # rendering ----------------------------------------------------------
    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if k == 0:
                body = str(mag)
            else:
                mono = "z" if k == 1 else f"z^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"

    def to_complex(self) -> complex:
        """Debug-only numeric embedding z -> exp(2 pi i / 24)."""
        import cmath

        z = cmath.exp(2j * cmath.pi / ORDER)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))


_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\*?)?(z(?:\^(\d+))?)?$")


def parse(text: str) -> Scalar:
    """Inverse of ``str(Scalar)``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar text")
    if s[0] not in "+-":
        s = "+" + s
    tokens = re.findall(r"([+-])([^+-]+)", s)
    if "".join(a + b for a, b in tokens) != s:
        raise ValueError(f"cannot parse scalar {text!r}")
    coeffs = [Fraction(0)] * DEGREE
    for sign, body in tokens:
        m = _TERM.match(body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"bad term {body!r}")
        c = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        k = 0
        if m.group(2):
            k = int(m.group(3)) if m.group(3) else 1
        if k >= DEGREE:
            raise ValueError("power must be < 8 in canonical text")
        coeffs[k] += -c if sign == "-" else c
    return Scalar.from_coeffs(coeffs)


@lru_cache(maxsize=None)
def _int_scalar(n: int) -> Scalar:
    return Scalar((n,) + (0,) * 7, 1)


@lru_cache(maxsize=None)
def zeta_power(k: int) -> Scalar:
    """z^k for any integer k."""
    k %= ORDER
    poly = [0] * (k + 1)
    poly[k] = 1
    return Scalar(_reduce(poly), 1)


def root_of_unity(r: int) -> Scalar:
    """Primitive r-th root of unity exp(2 pi i / r) for r dividing 24."""
    if not isinstance(r, int) or r <= 0 or ORDER % r:
        raise ValueError(f"r={r} does not divide 24")
    return zeta_power(ORDER // r)


def sqrt2() -> Scalar:
    """Positive square root of 2, as zeta_8 + zeta_8^{-1}."""
    return zeta_power(3) + zeta_power(-3)


ZERO = Scalar((0,) * 8, 1)
ONE = Scalar((1,) + (0,) * 7, 1)


def S(value) -> Scalar:
    return Scalar.of(value)
