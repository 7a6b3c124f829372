"""
Odd length statistics and chessboard classification.

The odd length counts inversions (i, j) whose positions have opposite parity.
In type B the count runs over the extended window on [-n, n] and is halved.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .groups import (
    IndexSet, Permutation, PermutationA, PermutationB,
    extended_window, inverse, left_parabolic_decompose, length,
)

__all__ = [
    "ChessboardClass", "OddStatsB", "NotChessboardError",
    "odd_length_a", "odd_length_a_alternating", "odd_length_b", "odd_length",
    "odd_stats_b", "chessboard_class", "chi",
]


class ChessboardClass(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"
    NOT_CHESSBOARD = "none"


class NotChessboardError(ValueError):
    pass


@dataclass(frozen=True)
class OddStatsB:
    oinv: int
    oneg: int
    onsp: int

    @property
    def total(self) -> int:
        return self.oinv + self.oneg + self.onsp


def odd_length_a(w: PermutationA) -> int:
    win = w.window
    return sum(1 for i, j in combinations(range(w.n), 2)
               if (j - i) & 1 and win[i] > win[j])


def odd_length_a_alternating(w: PermutationA) -> int:
    """Odd length as the signed sum over all I of (-1)^|I| 2^(n-2-|I|) l(w^I).

    w^I is the minimal representative of the coset w W_I; it is the inverse
    of the left-quotient part of w^-1, which has the same length.  The weight
    is fractional when |I| = n-1, so twice the sum is accumulated in integers
    and halved at the end.
    """
    n = w.n
    w_inv = inverse(w)
    doubled = 0
    for mask in range(1 << (n - 1)):
        I = IndexSet.from_mask("A", n, mask)
        k = len(I)
        quotient_part = left_parabolic_decompose(w_inv, I)[1]
        term = length(quotient_part) << (n - 1 - k)
        doubled += -term if k & 1 else term
    if doubled & 1:
        raise ArithmeticError(f"odd doubled alternating sum {doubled} for {w}")
    return doubled // 2


def odd_length_b(w: PermutationB) -> int:
    ext = extended_window(w)
    m = len(ext)
    # positions -n..n map to 0..2n, which keeps parity differences intact
    total = sum(1 for i in range(m) for j in range(i + 1, m)
                if (j - i) & 1 and ext[i] > ext[j])
    assert total % 2 == 0
    return total // 2


def odd_length(w: Permutation) -> int:
    return odd_length_a(w) if w.kind == "A" else odd_length_b(w)


def odd_stats_b(w: PermutationB) -> OddStatsB:
    win = w.window
    oinv = onsp = 0
    for i, j in combinations(range(w.n), 2):
        if (j - i) & 1:
            oinv += win[i] > win[j]
            onsp += win[i] + win[j] < 0
    # 0-based index i is the odd position i+1 when i is even
    oneg = sum(1 for i in range(0, w.n, 2) if win[i] < 0)
    return OddStatsB(oinv, oneg, onsp)


def chessboard_class(w: Permutation) -> ChessboardClass:
    parities = {(i + v) & 1 for i, v in enumerate(w.window, start=1)}
    if parities == {0}:
        return ChessboardClass.PLUS
    if parities == {1}:
        return ChessboardClass.MINUS
    return ChessboardClass.NOT_CHESSBOARD


def chi(w: Permutation) -> int:
    cls = chessboard_class(w)
    if cls is ChessboardClass.NOT_CHESSBOARD:
        raise NotChessboardError(f"{w} is not a chessboard element")
    return 1 if cls is ChessboardClass.PLUS else -1
