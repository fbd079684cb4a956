"""Exact integer polynomials in the intensity variable, plus a few
combinatorial numbers.

Every moment in this package is a polynomial in a single variable ``l`` (the
intensity) with integer coefficients.  Coefficients are Python ints, so there
is no overflow no matter how large the moments get.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence


class LambdaPoly:
    """Immutable polynomial with integer coefficients, stored in ascending
    degree order.  Trailing zeros are stripped on construction so that two
    equal polynomials always have equal coefficient tuples."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("LambdaPoly is immutable")

    @classmethod
    def zero(cls) -> "LambdaPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "LambdaPoly":
        return _ONE

    @classmethod
    def var(cls) -> "LambdaPoly":
        return _VAR

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "LambdaPoly":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        # zero polynomial gets degree -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == LambdaPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("LambdaPoly", self.coeffs))

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return LambdaPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly(-x for x in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LambdaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = _ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LambdaPoly":
        """Multiply by ``l**k``."""
        if not self.coeffs:
            return self
        return LambdaPoly([0] * k + list(self.coeffs))

    def __call__(self, x):
        return poly_eval(self, x)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "LambdaPoly":
        return cls(data)

    def render(self, var: str = "l") -> str:
        """Text form, highest degree first, e.g. ``l^3+5*l``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += sign + body
        return s

    def __repr__(self):
        return f"LambdaPoly({list(self.coeffs)})"

    def __str__(self):
        return self.render()


def _coerce(x):
    if isinstance(x, LambdaPoly):
        return x
    if isinstance(x, int):
        return LambdaPoly([x])
    return None


_ZERO = LambdaPoly()
_ONE = LambdaPoly([1])
_VAR = LambdaPoly([0, 1])


def poly_add(p: LambdaPoly, q: LambdaPoly) -> LambdaPoly:
    return p + q


def poly_mul(p: LambdaPoly, q: LambdaPoly) -> LambdaPoly:
    return p * q


def poly_eval(p: LambdaPoly, x):
    """Horner evaluation.  Stays exact for int and Fraction arguments."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_sum(polys: Iterable[LambdaPoly]) -> LambdaPoly:
    acc: dict[int, int] = {}
    for p in polys:
        for k, c in enumerate(_coerce(p).coeffs):
            acc[k] = acc.get(k, 0) + c
    if not acc:
        return _ZERO
    return LambdaPoly(acc.get(k, 0) for k in range(max(acc) + 1))


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"binomial({n}, {k}) needs 0 <= k <= n")
    return comb(n, k)


@lru_cache(maxsize=None)
def catalan(k: int) -> int:
    if k < 0:
        raise ValueError("catalan index must be >= 0")
    return comb(2 * k, k) // (k + 1)


def double_factorial_odd(k: int) -> int:
    """(2k-1)!! with the convention (-1)!! = 1."""
    if k < 0:
        raise ValueError("index must be >= 0")
    out = 1
    for i in range(1, 2 * k, 2):
        out *= i
    return out


def arcsine_moment(k: int) -> Fraction:
    """A_k = (2k-1)!!/k!, the 2k-th moment of the standard arcsine law."""
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return Fraction(double_factorial_odd(k), fact)


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a
