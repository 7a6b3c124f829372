"""
Univariate polynomials with exact integer coefficients.

Coefficients are stored in ascending order of exponent as a tuple of Python
ints, so there is no overflow at any degree.  The zero polynomial is the empty
tuple; trailing zeros are always stripped.

>>> p = IntPolynomial([1, -1]) * IntPolynomial([1, 1])
>>> str(p)
'1 - x^2'
>>> p.to_json()
{'coeffs': [1, 0, -1], 'var': 'x'}
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import Union

__all__ = ["IntPolynomial", "PolynomialDivisionError", "ONE", "ZERO", "X"]


class PolynomialDivisionError(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(int(c) for c in coeffs[:end])


class IntPolynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self._c = _strip(list(coeffs))

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff])

    @classmethod
    def from_json(cls, doc: dict) -> IntPolynomial:
        if doc.get("var", "x") != "x":
            raise ValueError(f"unsupported variable {doc['var']!r}")
        coeffs = doc["coeffs"]
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in coeffs):
            raise ValueError("coefficients must be integers")
        return cls(coeffs)

    # -- accessors ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self._c):
            return self._c[k]
        return 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: PolyLike) -> IntPolynomial:
        other = _coerce(other)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self._c])

    def __sub__(self, other: PolyLike) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: PolyLike) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: PolyLike) -> IntPolynomial:
        other = _coerce(other)
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("negative shift")
        if not self._c:
            return self
        return IntPolynomial((0,) * k + self._c)

    def substitute_power(self, k: int) -> IntPolynomial:
        """Return p(x^k) by spreading coefficients k apart."""
        if k < 1:
            raise ValueError("k must be positive")
        if not self._c:
            return self
        out = [0] * (k * (len(self._c) - 1) + 1)
        out[::k] = self._c
        return IntPolynomial(out)

    def divmod(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division over the integers.

        The divisor's leading coefficient must divide every intermediate
        leading coefficient; monic or -monic divisors always qualify.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dc = divisor._c
        lead = dc[-1]
        dd = len(dc) - 1
        if len(rem) <= dd:
            return ZERO, self
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise PolynomialDivisionError("non-integral quotient coefficient")
            quot[k - dd] = q
            for j, d in enumerate(dc):
                rem[k - dd + j] -= q * d
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, divisor: IntPolynomial) -> IntPolynomial:
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise PolynomialDivisionError(f"({self}) / ({divisor}) leaves remainder {r}")
        return q

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == _strip([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    # -- rendering ---------------------------------------------------------

    def to_json(self) -> dict:
        return {"coeffs": list(self._c), "var": "x"}

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._c)!r})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"


PolyLike = Union[IntPolynomial, int]


def _coerce(p: PolyLike) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial([p])
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
X = IntPolynomial([0, 1])
