"""
q-analogs, index-set structure, and closed product formulas for the signed
odd-length generating functions.

All q-multinomials are built with the q-Pascal recurrence and then evaluated
at q = x^2 by spreading coefficients, so every intermediate stays in Z[x].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Literal, Sequence

from .groups import IndexSet, InvalidIndexSetError, generator_range
from .poly import ONE, ZERO, IntPolynomial, PolynomialDivisionError

__all__ = [
    "IntervalDecomposition", "ShiftError",
    "q_bracket", "q_factorial", "q_binomial", "q_multinomial",
    "connected_components", "m_tilde", "component_parts", "is_compressed",
    "shifted_set", "one_minus_x_pow",
    "closed_chessboard_plus", "closed_chessboard_minus", "closed_conjA",
    "closed_sn_quotient", "closed_sn_full", "closed_b_ascending", "closed_conjB",
]


class ShiftError(ValueError):
    """A component shift was requested where its hypotheses fail."""


# -- q-analogs ---------------------------------------------------------------

def q_bracket(n: int) -> IntPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("negative argument")
    return IntPolynomial([1] * n)


def q_factorial(n: int) -> IntPolynomial:
    if n < 0:
        raise ValueError("negative argument")
    return reduce(lambda acc, k: acc * q_bracket(k), range(1, n + 1), ONE)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> IntPolynomial:
    """Gaussian binomial via [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


def q_multinomial(n: int, parts: Sequence[int]) -> IntPolynomial:
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {list(parts)}")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to {n}")
    result, running = ONE, 0
    for p in parts:
        running += p
        result = result * q_binomial(running, p)
    return result


def one_minus_x_pow(k: int) -> IntPolynomial:
    return ONE - IntPolynomial.monomial(k)


def _prod_one_minus(exponents) -> IntPolynomial:
    return reduce(lambda acc, e: acc * one_minus_x_pow(e), exponents, ONE)


# -- index-set structure -----------------------------------------------------

@dataclass(frozen=True)
class IntervalDecomposition:
    """Maximal intervals (a, b) of an index set, in increasing order.

    ``zero_component`` is the interval containing 0 for a type-B set that
    contains 0; ``others`` are the remaining intervals.
    """

    intervals: tuple[tuple[int, int], ...]
    zero_component: tuple[int, int] | None = None

    @property
    def others(self) -> tuple[tuple[int, int], ...]:
        if self.zero_component is None:
            return self.intervals
        return tuple(iv for iv in self.intervals if iv != self.zero_component)


def connected_components(I: IndexSet) -> IntervalDecomposition:
    intervals: list[tuple[int, int]] = []
    for i in sorted(I.members):
        if intervals and intervals[-1][1] == i - 1:
            intervals[-1] = (intervals[-1][0], i)
        else:
            intervals.append((i, i))
    zero = intervals[0] if I.kind == "B" and 0 in I.members else None
    return IntervalDecomposition(tuple(intervals), zero)


def component_parts(I: IndexSet) -> list[int]:
    """floor((|I_k| + 1) / 2) for each component (type B: excluding J_0)."""
    return [(b - a + 2) // 2 for a, b in connected_components(I).others]


def m_tilde(I: IndexSet) -> int:
    return sum(component_parts(I))


def is_compressed(I: IndexSet, n: int | None = None) -> bool:
    """I = [1, a_s - 1] minus {a_1, ..., a_(s-1)} with every a_i even."""
    if I.kind != "A":
        raise InvalidIndexSetError("compressed sets are defined for type A only")
    if n is not None and n != I.n:
        raise InvalidIndexSetError(f"index set has rank {I.n}, not {n}")
    if not I.members:
        return False
    top = max(I.members) + 1
    if top % 2:
        return False
    return all(c % 2 == 0 for c in range(1, top) if c not in I.members)


def shifted_set(I: IndexSet, component: tuple[int, int],
                direction: Literal["right", "left"]) -> IndexSet:
    """Move an odd-size component one step.

    Right: [i, i+2k] -> [i+1, i+2k+1], needs i >= 1 and i+2k+2 not in I.
    Left: [i+1, i+2k+1] -> [i, i+2k], needs i >= 1 and i-1 not in I.
    The result must stay inside the generator range.
    """
    start, end = component
    if component not in connected_components(I).intervals:
        raise ShiftError(f"{component} is not a connected component of {I}")
    if (end - start + 1) % 2 == 0:
        raise ShiftError(f"component {component} has even cardinality")
    lo, hi = generator_range(I.kind, I.n)
    if direction == "right":
        if start < 1:
            raise ShiftError("the component containing 0 cannot be shifted")
        if end + 2 in I.members:
            raise ShiftError(f"slot {end + 2} is occupied")
        if end + 1 > hi:
            raise ShiftError(f"shift would leave the generator range [{lo}, {hi}]")
        return IndexSet(I.kind, I.n, (I.members - {start}) | {end + 1})
    if direction == "left":
        i = start - 1
        if i < 1:
            raise ShiftError(f"shift would leave the generator range [1, {hi}]")
        if i - 1 in I.members:
            raise ShiftError(f"slot {i - 1} is occupied")
        return IndexSet(I.kind, I.n, (I.members - {end}) | {i})
    raise ValueError(f"direction must be 'right' or 'left', not {direction!r}")


# -- closed forms ------------------------------------------------------------

def _require(I: IndexSet, kind: str, n: int) -> None:
    if I.kind != kind or I.n != n:
        raise InvalidIndexSetError(
            f"expected a type-{kind} index set of rank {n}, got type {I.kind}, rank {I.n}")


def _multinomial_x2(I: IndexSet) -> tuple[int, IntPolynomial]:
    parts = component_parts(I)
    mt = sum(parts)
    return mt, q_multinomial(mt, parts).substitute_power(2)


def closed_chessboard_plus(n: int, I: IndexSet) -> IntPolynomial:
    """Signed sum over the even chessboard elements of S_n^I."""
    _require(I, "A", n)
    mt, mult = _multinomial_x2(I)
    return mult * _prod_one_minus(2 * k for k in range(mt + 1, (n - 1) // 2 + 1))


def closed_chessboard_minus(n: int, I: IndexSet) -> IntPolynomial:
    """Signed sum over the odd chessboard elements of S_n^I, n even."""
    if n % 2:
        raise ValueError("odd chessboard elements exist only for even n")
    _require(I, "A", n)
    if is_compressed(I) and n - 1 in I.members:
        return ZERO
    return -closed_chessboard_plus(n, I).shift(n // 2)


def closed_conjA(n: int, I: IndexSet) -> IntPolynomial:
    """chi-weighted signed sum over the chessboard elements of S_n^I."""
    _require(I, "A", n)
    m = n // 2
    mt, mult = _multinomial_x2(I)
    if n % 2:
        return mult * _prod_one_minus(2 * k for k in range(mt + 1, m + 1))
    if m == mt:
        return mult
    return (ONE + IntPolynomial.monomial(m)) * mult * _prod_one_minus(
        2 * k for k in range(mt + 1, m))


def closed_sn_quotient(n: int, I: IndexSet) -> IntPolynomial:
    """Signed sum over all of S_n^I."""
    _require(I, "A", n)
    m = n // 2
    mt, mult = _multinomial_x2(I)
    base = mult * _prod_one_minus(2 * k for k in range(mt + 1, (n - 1) // 2 + 1))
    if n % 2 or n == 2 * mt:
        return base
    return one_minus_x_pow(m) * base


def closed_sn_full(n: int) -> IntPolynomial:
    """Signed sum over the whole symmetric group."""
    if n < 1:
        raise ValueError("n must be positive")
    m = n // 2
    if n % 2:
        return _prod_one_minus(2 * j for j in range(1, m + 1))
    return one_minus_x_pow(m) * _prod_one_minus(2 * j for j in range(1, m))


def closed_b_ascending(n: int) -> IntPolynomial:
    """Signed sum over B_n^{[n-1]}, the elements with no descent among s_1..s_(n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _prod_one_minus(2 * j - 1 for j in range(1, (n + 1) // 2 + 1))


def closed_conjB(n: int, J: IndexSet) -> IntPolynomial:
    """Signed sum over B_n^J."""
    _require(J, "B", n)
    a = min(set(range(n + 1)) - J.members)
    mt, mult = _multinomial_x2(J)
    numerator = _prod_one_minus(range(a + 1, n + 1)) * mult
    denominator = _prod_one_minus(2 * i for i in range(1, mt + 1))
    try:
        return numerator.exact_div(denominator)
    except PolynomialDivisionError as exc:
        raise PolynomialDivisionError(f"type-B closed form not polynomial for n={n}, J={J}") from exc
