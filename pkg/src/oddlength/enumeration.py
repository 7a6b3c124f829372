"""
Enumeration of S_n and B_n and signed generating functions over quotients.

One sweep of the group fills a DescentClassTable: for every right descent set
D and chessboard class it holds sum (-1)^l(w) x^L(w).  An element lies in the
quotient W^I exactly when D(w) and I are disjoint, so any quotient sum is a
sum of table cells, and all 2^r quotient sums at once come from a subset-sum
(zeta) transform over the descent-set axis.

The sweep is vectorised with numpy and partitioned on the first window entry.
Partitions are grouped into one private table per worker and merged by
integer addition, so the result does not depend on the worker count.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Literal

import numpy as np

from .groups import (
    IndexSet, InvalidIndexSetError, Kind, Permutation, PermutationA, PermutationB,
    generator_range, length, right_descents,
)
from .poly import IntPolynomial
from .stats import ChessboardClass, chessboard_class, odd_length

__all__ = [
    "ResourceLimits", "ResourceLimitError", "WeightSpec", "DescentClassTable",
    "ElementStats", "DEFAULT_LIMITS", "CLASS_ORDER",
    "enumerate_group", "partition_keys", "partition_windows", "element_statistics",
    "build_descent_class_table", "cached_table", "gf_quotient",
    "gf_quotient_filtered", "gf_reference", "max_odd_length", "subset_sum_transform",
]

log = logging.getLogger(__name__)

CLASS_ORDER = (ChessboardClass.PLUS, ChessboardClass.MINUS, ChessboardClass.NOT_CHESSBOARD)
_CLASS_INDEX = {c: k for k, c in enumerate(CLASS_ORDER)}


class ResourceLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class ResourceLimits:
    max_n_a: int = 11
    max_n_b: int = 8

    def check(self, kind: Kind, n: int) -> None:
        if n < 1:
            raise ValueError("rank must be positive")
        cap = self.max_n_a if kind == "A" else self.max_n_b
        if n > cap:
            raise ResourceLimitError(
                f"type {kind} rank {n} exceeds the configured limit {cap}")


DEFAULT_LIMITS = ResourceLimits()


@dataclass(frozen=True)
class WeightSpec:
    """Which elements contribute, and whether chi multiplies the summand."""

    restrict: Literal["all", "chessboard", "plus", "minus"] = "all"
    apply_chi: bool = False

    def __post_init__(self):
        if self.restrict not in ("all", "chessboard", "plus", "minus"):
            raise ValueError(f"unknown restriction {self.restrict!r}")
        if self.apply_chi and self.restrict == "all":
            raise ValueError("chi is only defined on chessboard elements")

    def class_weights(self) -> np.ndarray:
        """Multiplier for the PLUS, MINUS and NOT_CHESSBOARD cells."""
        w = {"all": [1, 1, 1], "chessboard": [1, 1, 0],
             "plus": [1, 0, 0], "minus": [0, 1, 0]}[self.restrict]
        if self.apply_chi:
            w[1] = -w[1]
        return np.array(w, dtype=np.int64)


# -- streaming enumeration ---------------------------------------------------

def _signed_lex(values: list[int]) -> Iterator[tuple[int, ...]]:
    if not values:
        yield ()
        return
    for v in sorted([-a for a in values] + values):
        rest = [a for a in values if a != abs(v)]
        for tail in _signed_lex(rest):
            yield (v,) + tail


def enumerate_group(kind: Kind, n: int, limits: ResourceLimits = DEFAULT_LIMITS) -> Iterator[Permutation]:
    """Every element once, windows in lexicographic order."""
    limits.check(kind, n)
    if kind == "A":
        for w in permutations(range(1, n + 1)):
            yield PermutationA(w)
    elif kind == "B":
        for w in _signed_lex(list(range(1, n + 1))):
            yield PermutationB(w)
    else:
        raise ValueError(f"unknown group kind {kind!r}")


# -- vectorised kernel -------------------------------------------------------

@lru_cache(maxsize=4)
def _lex_array(k: int, signed: bool) -> np.ndarray:
    """All (signed) permutations of 1..k as int8 rows, lexicographic."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int8)
    sub = _lex_array(k - 1, signed)
    blocks = []
    for first in partition_keys("B" if signed else "A", k):
        blocks.append(_prepend(first, sub, k))
    return np.concatenate(blocks)


def _prepend(first: int, sub: np.ndarray, k: int) -> np.ndarray:
    """Rows ``first`` followed by ``sub`` relabelled onto the unused values.

    Relabelling +-j -> +-rest[j-1] preserves order, so lex order survives.
    """
    rest = np.array([v for v in range(1, k + 1) if v != abs(first)], dtype=np.int8)
    lookup = np.zeros(2 * k + 1, dtype=np.int8)  # index j + k for j in [-k, k]
    for j, r in enumerate(rest, start=1):
        lookup[k + j] = r
        lookup[k - j] = -r
    tail = lookup[sub.astype(np.int16) + k]
    head = np.full((sub.shape[0], 1), first, dtype=np.int8)
    return np.hstack([head, tail])


def partition_keys(kind: Kind, n: int) -> list[int]:
    """Possible first window entries, in lexicographic order."""
    if kind == "A":
        return list(range(1, n + 1))
    return list(range(-n, 0)) + list(range(1, n + 1))


def partition_windows(kind: Kind, n: int, first: int) -> np.ndarray:
    return _prepend(first, _lex_array(n - 1, kind == "B"), n)


@dataclass(frozen=True)
class ElementStats:
    """Per-element statistics for a block of windows (row-aligned arrays)."""

    windows: np.ndarray
    length: np.ndarray
    odd_length: np.ndarray
    descents: np.ndarray
    cls: np.ndarray


def _inversion_counts(E: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Inversions and opposite-parity inversions of each row of E."""
    rows, m = E.shape
    inv = np.zeros(rows, dtype=np.int16)
    odd = np.zeros(rows, dtype=np.int16)
    for i in range(m - 1):
        for j in range(i + 1, m):
            c = E[:, i] > E[:, j]
            inv += c
            if (j - i) & 1:
                odd += c
    return inv, odd


def _kernel(kind: Kind, W: np.ndarray) -> ElementStats:
    rows, n = W.shape
    if kind == "A":
        ell, odd = _inversion_counts(W)
        desc = np.zeros(rows, dtype=np.int32)
        for i in range(n - 1):
            desc |= (W[:, i] > W[:, i + 1]).astype(np.int32) << i
    else:
        ext = np.hstack([-W[:, ::-1], np.zeros((rows, 1), dtype=np.int8), W])
        inv2, odd2 = _inversion_counts(ext)
        # drop the self-mirrored pairs (-i, i), inverted exactly when w(i) < 0
        neg = (W < 0).sum(axis=1, dtype=np.int16)
        ell, odd = (inv2 - neg) // 2, odd2 // 2
        desc = (W[:, 0] < 0).astype(np.int32)
        for i in range(1, n):
            desc |= (W[:, i - 1] > W[:, i]).astype(np.int32) << i
    parity = (W + np.arange(1, n + 1, dtype=np.int8)) & 1
    odd_positions = parity.sum(axis=1)
    cls = np.full(rows, 2, dtype=np.int8)
    cls[odd_positions == 0] = 0
    cls[odd_positions == n] = 1
    return ElementStats(W, ell, odd, desc, cls)


def element_statistics(kind: Kind, n: int, first: int | None = None,
                       limits: ResourceLimits = DEFAULT_LIMITS) -> ElementStats:
    """Statistics for the whole group, or for one first-entry partition."""
    limits.check(kind, n)
    if first is not None:
        return _kernel(kind, partition_windows(kind, n, first))
    return _kernel(kind, _lex_array(n, kind == "B"))


def max_odd_length(kind: Kind, n: int) -> int:
    if kind == "A":
        return ((n + 1) // 2) * (n // 2)
    evens = n + 1 if n % 2 == 0 else n
    return evens * (2 * n + 1 - evens) // 2


# -- descent-class tables ----------------------------------------------------

def subset_sum_transform(f: np.ndarray, bits: int) -> np.ndarray:
    """F[T] = sum of f[D] over D subset of T, along axis 0."""
    F = f.copy()
    for b in range(bits):
        shape = (1 << (bits - b - 1), 2, 1 << b) + F.shape[1:]
        view = F.reshape(shape)
        view[:, 1] += view[:, 0]
    return F


@dataclass(frozen=True, eq=False)
class DescentClassTable:
    """signed[D, c, k]: sum of (-1)^l over elements with descent mask D,
    class index c (see CLASS_ORDER) and odd length k.  counts[D, c]: element count.
    """

    kind: Kind
    n: int
    signed: np.ndarray
    counts: np.ndarray
    position: int | None = None
    value: int | None = None

    @property
    def bits(self) -> int:
        lo, hi = generator_range(self.kind, self.n)
        return hi - lo + 1

    def total_count(self) -> int:
        return int(self.counts.sum())

    def cell(self, D: IndexSet, cls: ChessboardClass) -> IntPolynomial:
        self._check(D)
        return IntPolynomial(self.signed[D.mask, _CLASS_INDEX[cls]].tolist())

    def cell_count(self, D: IndexSet, cls: ChessboardClass) -> int:
        self._check(D)
        return int(self.counts[D.mask, _CLASS_INDEX[cls]])

    def nonzero_cells(self) -> dict[tuple[IndexSet, ChessboardClass], IntPolynomial]:
        out = {}
        for mask, c in zip(*np.nonzero(self.counts)):
            D = IndexSet.from_mask(self.kind, self.n, int(mask))
            out[D, CLASS_ORDER[c]] = IntPolynomial(self.signed[mask, c].tolist())
        return out

    def _check(self, I: IndexSet) -> None:
        if I.kind != self.kind or I.n != self.n:
            raise InvalidIndexSetError(
                f"index set for type {I.kind}, n={I.n} used with a type {self.kind}, n={self.n} table")

    def gf(self, I: IndexSet, weight: WeightSpec = WeightSpec()) -> IntPolynomial:
        """Quotient sum by adding every cell whose descent set avoids I."""
        self._check(I)
        masks = np.arange(self.signed.shape[0])
        keep = (masks & I.mask) == 0
        per_class = self.signed[keep].sum(axis=0)
        return IntPolynomial((weight.class_weights() @ per_class).tolist())

    def quotient_count(self, I: IndexSet, weight: WeightSpec = WeightSpec()) -> int:
        self._check(I)
        masks = np.arange(self.counts.shape[0])
        keep = (masks & I.mask) == 0
        return int((np.abs(weight.class_weights()) * self.counts[keep].sum(axis=0)).sum())

    def quotient_sums(self, weight: WeightSpec = WeightSpec()) -> np.ndarray:
        """Row I (as a mask) holds the coefficients of the sum over W^I."""
        f = np.tensordot(self.signed, weight.class_weights(), axes=([1], [0]))
        F = subset_sum_transform(f, self.bits)
        # W^I collects descent sets inside the complement of I
        return F[::-1].copy()

    def all_quotient_gfs(self, weight: WeightSpec = WeightSpec()) -> list[IntPolynomial]:
        return [IntPolynomial(row.tolist()) for row in self.quotient_sums(weight)]

    def merged(self, other: DescentClassTable) -> DescentClassTable:
        if (self.kind, self.n, self.position, self.value) != (
                other.kind, other.n, other.position, other.value):
            raise ValueError("tables describe different sweeps")
        return DescentClassTable(self.kind, self.n, self.signed + other.signed,
                                 self.counts + other.counts, self.position, self.value)


def _empty_arrays(kind: Kind, n: int) -> tuple[np.ndarray, np.ndarray]:
    lo, hi = generator_range(kind, n)
    cells = 1 << (hi - lo + 1)
    return (np.zeros((cells, 3, max_odd_length(kind, n) + 1), dtype=np.int64),
            np.zeros((cells, 3), dtype=np.int64))


def _accumulate(kind: Kind, n: int, keys: list[int], position: int | None,
                value: int | None) -> tuple[np.ndarray, np.ndarray]:
    signed, counts = _empty_arrays(kind, n)
    ncls, nL = 3, signed.shape[2]
    for first in keys:
        st = element_statistics(kind, n, first, ResourceLimits(n, n))
        if position is not None:
            keep = st.windows[:, position - 1] == value
            desc, cls, odd, ell = st.descents[keep], st.cls[keep], st.odd_length[keep], st.length[keep]
        else:
            desc, cls, odd, ell = st.descents, st.cls, st.odd_length, st.length
        cell = desc.astype(np.int64) * ncls + cls
        flat = cell * nL + odd
        size = signed.size
        even = (ell & 1) == 0
        signed += (np.bincount(flat[even], minlength=size)
                   - np.bincount(flat[~even], minlength=size)).reshape(signed.shape)
        counts += np.bincount(cell, minlength=counts.size).reshape(counts.shape)
    return signed, counts


def build_descent_class_table(kind: Kind, n: int, workers: int = 1,
                              limits: ResourceLimits = DEFAULT_LIMITS,
                              position: int | None = None,
                              value: int | None = None) -> DescentClassTable:
    """One sweep over the group (optionally only elements with w(position) = value)."""
    limits.check(kind, n)
    if (position is None) != (value is None):
        raise ValueError("position and value must be given together")
    if position is not None:
        if not 1 <= position <= n:
            raise ValueError(f"position {position} outside [1, {n}]")
        if not (1 <= abs(value) <= n) or (kind == "A" and value < 0):
            raise ValueError(f"value {value} impossible for type {kind}, n={n}")
    keys = partition_keys(kind, n)
    if position == 1:
        keys = [value]
    workers = max(1, int(workers))
    chunks = [list(c) for c in np.array_split(np.array(keys), min(workers, len(keys))) if len(c)]
    if len(chunks) == 1:
        parts = [_accumulate(kind, n, chunks[0], position, value)]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(lambda c: _accumulate(kind, n, c, position, value), chunks))
    signed, counts = _empty_arrays(kind, n)
    for s, c in parts:
        signed += s
        counts += c
    log.debug("built type %s n=%d table from %d partition group(s)", kind, n, len(chunks))
    return DescentClassTable(kind, n, signed, counts, position, value)


@lru_cache(maxsize=512)
def cached_table(kind: Kind, n: int, position: int | None = None,
                 value: int | None = None, workers: int = 1) -> DescentClassTable:
    return build_descent_class_table(kind, n, workers, ResourceLimits(n, n), position, value)


# -- generating-function queries ---------------------------------------------

def _direct_sum(kind: Kind, n: int, I: IndexSet, weight: WeightSpec,
                position: int | None, value: int | None) -> IntPolynomial:
    coeffs = np.zeros(max_odd_length(kind, n) + 1, dtype=np.int64)
    class_w = weight.class_weights()
    for first in partition_keys(kind, n):
        if position == 1 and first != value:
            continue
        st = element_statistics(kind, n, first, ResourceLimits(n, n))
        keep = (st.descents & I.mask) == 0
        if position is not None:
            keep &= st.windows[:, position - 1] == value
        w = class_w[st.cls[keep]] * np.where(st.length[keep] & 1, -1, 1)
        coeffs += _weighted_bincount(st.odd_length[keep], w, coeffs.size)
    return IntPolynomial(coeffs.tolist())


def _weighted_bincount(idx: np.ndarray, w: np.ndarray, size: int) -> np.ndarray:
    out = np.zeros(size, dtype=np.int64)
    np.add.at(out, idx.astype(np.intp), w.astype(np.int64))
    return out


def _validate_query(kind: Kind, n: int, I: IndexSet, limits: ResourceLimits) -> None:
    limits.check(kind, n)
    if I.kind != kind or I.n != n:
        raise InvalidIndexSetError(
            f"index set for type {I.kind}, n={I.n} used with type {kind}, n={n}")


def gf_quotient(kind: Kind, n: int, I: IndexSet, weight: WeightSpec = WeightSpec(),
                method: Literal["table", "direct"] = "table",
                limits: ResourceLimits = DEFAULT_LIMITS, workers: int = 1) -> IntPolynomial:
    """sum over {w : D(w) and I disjoint} of (-1)^l(w) [chi(w)] x^L(w)."""
    _validate_query(kind, n, I, limits)
    if method == "table":
        return cached_table(kind, n, workers=workers).gf(I, weight)
    if method == "direct":
        return _direct_sum(kind, n, I, weight, None, None)
    raise ValueError(f"unknown method {method!r}")


def gf_quotient_filtered(kind: Kind, n: int, I: IndexSet, weight: WeightSpec,
                         position: int, value: int,
                         method: Literal["table", "direct"] = "table",
                         limits: ResourceLimits = DEFAULT_LIMITS, workers: int = 1) -> IntPolynomial:
    """As gf_quotient, restricted to elements with w(position) = value."""
    _validate_query(kind, n, I, limits)
    if not 1 <= position <= n:
        raise ValueError(f"position {position} outside [1, {n}]")
    if kind == "A" and not 1 <= value <= n:
        raise ValueError(f"value {value} outside [1, {n}]")
    if kind == "B" and not 1 <= abs(value) <= n:
        raise ValueError(f"value {value} outside [-{n}, {n}]")
    if method == "table":
        return cached_table(kind, n, position, value, workers).gf(I, weight)
    if method == "direct":
        return _direct_sum(kind, n, I, weight, position, value)
    raise ValueError(f"unknown method {method!r}")


def gf_reference(kind: Kind, n: int, I: IndexSet, weight: WeightSpec = WeightSpec(),
                 position: int | None = None, value: int | None = None) -> IntPolynomial:
    """Element-by-element sum using the plain definitions; slow, small n only."""
    class_w = dict(zip(CLASS_ORDER, weight.class_weights().tolist()))
    coeffs: dict[int, int] = {}
    for w in enumerate_group(kind, n):
        if position is not None and w(position) != value:
            continue
        if right_descents(w).members & I.members:
            continue
        c = class_w[chessboard_class(w)]
        if c:
            k = odd_length(w)
            coeffs[k] = coeffs.get(k, 0) + (-c if length(w) & 1 else c)
    top = max(coeffs, default=-1)
    return IntPolynomial([coeffs.get(k, 0) for k in range(top + 1)])
