"""
Elements of the symmetric group S_n (type A) and the hyperoctahedral group
B_n (type B), written in window notation.

A type-B window lists sigma(1), ..., sigma(n); the rest of the map on [-n, n]
follows from sigma(-j) = -sigma(j) and sigma(0) = 0 and is derived when needed.
Generators are indexed 1..n-1 in type A and 0..n-1 in type B, with s_0
negating the first entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Union

__all__ = [
    "Kind", "PermutationA", "PermutationB", "Permutation", "IndexSet",
    "InvalidElementError", "InvalidIndexSetError",
    "parse_window", "parse_index_set", "identity", "generator",
    "compose", "inverse", "left_multiply_generator", "length",
    "right_descents", "left_descents", "left_parabolic_decompose",
    "in_parabolic_subgroup", "is_minimal_coset_rep", "extended_window",
]

Kind = Literal["A", "B"]


class InvalidElementError(ValueError):
    pass


class InvalidIndexSetError(ValueError):
    pass


@dataclass(frozen=True)
class PermutationA:
    window: tuple[int, ...]
    kind: Kind = field(default="A", init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "window", tuple(int(v) for v in self.window))
        n = len(self.window)
        if n == 0:
            raise InvalidElementError("empty window")
        seen = set()
        for v in self.window:
            if not 1 <= v <= n:
                raise InvalidElementError(f"value {v} out of range [1, {n}]")
            if v in seen:
                raise InvalidElementError(f"duplicate value {v}")
            seen.add(v)

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def __mul__(self, other: PermutationA) -> PermutationA:
        return compose(self, other)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.window)) + "]"


@dataclass(frozen=True)
class PermutationB:
    window: tuple[int, ...]
    kind: Kind = field(default="B", init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "window", tuple(int(v) for v in self.window))
        n = len(self.window)
        if n == 0:
            raise InvalidElementError("empty window")
        seen = set()
        for v in self.window:
            if v == 0:
                raise InvalidElementError("zero entry in signed window")
            if abs(v) > n:
                raise InvalidElementError(f"value {v} out of range [-{n}, {n}]")
            if abs(v) in seen:
                raise InvalidElementError(f"duplicate absolute value {abs(v)}")
            seen.add(abs(v))

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i == 0:
            return 0
        v = self.window[abs(i) - 1]
        return v if i > 0 else -v

    def __mul__(self, other: PermutationB) -> PermutationB:
        return compose(self, other)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.window)) + "]"


Permutation = Union[PermutationA, PermutationB]
_CLASSES = {"A": PermutationA, "B": PermutationB}


@dataclass(frozen=True)
class IndexSet:
    """A set of generator indices for a group of given kind and rank."""

    kind: Kind
    n: int
    members: frozenset[int]

    def __init__(self, kind: Kind, n: int, members: Iterable[int] = ()):
        if kind not in ("A", "B"):
            raise InvalidIndexSetError(f"unknown kind {kind!r}")
        if n < 1:
            raise InvalidIndexSetError("rank must be positive")
        members = frozenset(int(i) for i in members)
        lo, hi = generator_range(kind, n)
        bad = sorted(i for i in members if not lo <= i <= hi)
        if bad:
            raise InvalidIndexSetError(
                f"indices {bad} outside [{lo}, {hi}] for type {kind}, n={n}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", members)

    @classmethod
    def full(cls, kind: Kind, n: int) -> IndexSet:
        lo, hi = generator_range(kind, n)
        return cls(kind, n, range(lo, hi + 1))

    @classmethod
    def from_mask(cls, kind: Kind, n: int, mask: int) -> IndexSet:
        lo, hi = generator_range(kind, n)
        return cls(kind, n, (lo + b for b in range(hi - lo + 1) if mask >> b & 1))

    @property
    def mask(self) -> int:
        """Bit (i - lowest generator index) is set for each member i."""
        lo = generator_range(self.kind, self.n)[0]
        return sum(1 << (i - lo) for i in self.members)

    def __contains__(self, i: object) -> bool:
        return i in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __or__(self, other: Iterable[int]) -> IndexSet:
        return IndexSet(self.kind, self.n, self.members | frozenset(other))

    def __sub__(self, other: Iterable[int]) -> IndexSet:
        return IndexSet(self.kind, self.n, self.members - frozenset(other))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, sorted(self.members))) + "}"


def generator_range(kind: Kind, n: int) -> tuple[int, int]:
    """Inclusive index range of the Coxeter generators (may be empty in type A)."""
    return (1, n - 1) if kind == "A" else (0, n - 1)


def _check_kind(kind: str) -> Kind:
    if kind not in _CLASSES:
        raise ValueError(f"unknown group kind {kind!r}; expected 'A' or 'B'")
    return kind  # type: ignore[return-value]


def parse_window(kind: Kind, text: str, n: int | None = None) -> Permutation:
    """Parse comma-separated window text such as ``"-2,4,3,-1"``."""
    cls = _CLASSES[_check_kind(kind)]
    parts = [p.strip() for p in text.strip().strip("[]").split(",")]
    try:
        values = tuple(int(p) for p in parts)
    except ValueError:
        raise InvalidElementError(f"not a comma-separated integer list: {text!r}") from None
    if n is not None and len(values) != n:
        raise InvalidElementError(f"window has {len(values)} entries, expected {n}")
    return cls(values)


def parse_index_set(kind: Kind, n: int, text: str) -> IndexSet:
    """Parse ``"1,2,5"``; the empty string is the empty set."""
    text = text.strip().strip("{}")
    if not text:
        return IndexSet(kind, n)
    try:
        members = [int(p) for p in text.split(",")]
    except ValueError:
        raise InvalidIndexSetError(f"not a comma-separated integer list: {text!r}") from None
    if len(set(members)) != len(members):
        raise InvalidIndexSetError(f"repeated index in {text!r}")
    return IndexSet(kind, n, members)


def identity(kind: Kind, n: int) -> Permutation:
    return _CLASSES[_check_kind(kind)](tuple(range(1, n + 1)))


def generator(kind: Kind, n: int, i: int) -> Permutation:
    """The simple reflection s_i."""
    lo, hi = generator_range(kind, n)
    if not lo <= i <= hi:
        raise InvalidIndexSetError(f"no generator s_{i} in type {kind}, n={n}")
    w = list(range(1, n + 1))
    if i == 0:
        w[0] = -1
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return _CLASSES[kind](tuple(w))


def _same_group(u: Permutation, v: Permutation) -> None:
    if u.kind != v.kind or u.n != v.n:
        raise ValueError(f"cannot combine type {u.kind}_{u.n} with type {v.kind}_{v.n}")


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u o v)(i) = u(v(i))."""
    _same_group(u, v)
    if u.kind == "A":
        return PermutationA(tuple(u.window[j - 1] for j in v.window))
    return PermutationB(tuple(u(j) for j in v.window))


def inverse(w: Permutation) -> Permutation:
    out = [0] * w.n
    for i, v in enumerate(w.window, start=1):
        # w(i) = v  =>  w^-1(|v|) = sign(v) * i
        out[abs(v) - 1] = i if v > 0 else -i
    return type(w)(tuple(out))


def left_multiply_generator(i: int, w: Permutation) -> Permutation:
    """s_i o w, acting on values: swap i and i+1 (s_0 negates +-1)."""
    lo, hi = generator_range(w.kind, w.n)
    if not lo <= i <= hi:
        raise InvalidIndexSetError(f"no generator s_{i} in type {w.kind}, n={w.n}")
    out = []
    for v in w.window:
        a = abs(v)
        if i == 0:
            out.append(-v if a == 1 else v)
        elif a == i:
            out.append(i + 1 if v > 0 else -(i + 1))
        elif a == i + 1:
            out.append(i if v > 0 else -i)
        else:
            out.append(v)
    return type(w)(tuple(out))


def extended_window(w: PermutationB) -> list[int]:
    """Values sigma(-n), ..., sigma(0), ..., sigma(n)."""
    return [-v for v in reversed(w.window)] + [0] + list(w.window)


def _count_inversions(seq: list[int] | tuple[int, ...]) -> int:
    m = len(seq)
    return sum(1 for i in range(m) for j in range(i + 1, m) if seq[i] > seq[j])


def length(w: Permutation) -> int:
    """Coxeter length.

    Type A counts inversions.  Type B halves the inversions of the extended
    window over [-n, n], leaving out the pairs (-i, i): those are their own
    mirror images and are inversions exactly when w(i) < 0, so with them the
    count would be 2 l(w) + neg(w).
    """
    if w.kind == "A":
        return _count_inversions(w.window)
    ext = extended_window(w)
    m = len(ext)
    total = sum(1 for i in range(m) for j in range(i + 1, m)
                if i + j != m - 1 and ext[i] > ext[j])
    assert total % 2 == 0, "mirror-paired inversion count must be even"
    return total // 2


def right_descents(w: Permutation) -> IndexSet:
    win = w.window
    desc = [i for i in range(1, w.n) if win[i - 1] > win[i]]
    if w.kind == "B" and win[0] < 0:
        desc.append(0)
    return IndexSet(w.kind, w.n, desc)


def left_descents(w: Permutation) -> IndexSet:
    return right_descents(inverse(w))


def _left_descents_by_length(w: Permutation) -> IndexSet:
    lo, hi = generator_range(w.kind, w.n)
    lw = length(w)
    return IndexSet(w.kind, w.n,
                    (i for i in range(lo, hi + 1)
                     if length(left_multiply_generator(i, w)) < lw))


def _validate_set(w: Permutation, J: IndexSet) -> None:
    if J.kind != w.kind or J.n != w.n:
        raise InvalidIndexSetError(
            f"index set for type {J.kind}, n={J.n} used with type {w.kind}, n={w.n}")


def left_parabolic_decompose(w: Permutation, J: IndexSet) -> tuple[Permutation, Permutation]:
    """Split w = u o v with u in W_J and v free of left descents in J.

    Left descents in J are stripped one at a time (smallest index first);
    each step lowers the length by one, so the loop terminates.
    """
    _validate_set(w, J)
    n = w.n
    rest = list(w.window)
    part = list(range(1, n + 1))
    targets = sorted(J.members)
    while True:
        # signed position of each value: inv[v] = w^-1(v)
        inv = [0] * (n + 2)
        for pos, v in enumerate(rest, start=1):
            inv[abs(v)] = pos if v > 0 else -pos
        for j in targets:
            if (inv[1] < 0) if j == 0 else (inv[j] > inv[j + 1]):
                break
        else:
            cls = type(w)
            return cls(tuple(part)), cls(tuple(rest))
        if j == 0:
            # s_0 o rest negates the entry of absolute value 1; part o s_0 negates part(1)
            rest = [-v if abs(v) == 1 else v for v in rest]
            part[0] = -part[0]
        else:
            swap = {j: j + 1, j + 1: j}
            rest = [(swap[abs(v)] if v > 0 else -swap[abs(v)]) if abs(v) in swap else v
                    for v in rest]
            part[j - 1], part[j] = part[j], part[j - 1]


def in_parabolic_subgroup(w: Permutation, J: IndexSet) -> bool:
    """Membership in W_J: w may only move entries within the position blocks
    cut out by J; sign changes are allowed only in the block touching s_0."""
    _validate_set(w, J)
    block = [0] * (w.n + 1)
    b = 0
    for pos in range(1, w.n + 1):
        block[pos] = b
        if pos not in J:
            b += 1
    signed_ok = 0 in J
    for pos, v in enumerate(w.window, start=1):
        if block[abs(v)] != block[pos]:
            return False
        if v < 0 and not (signed_ok and block[pos] == 0):
            return False
    return True


def is_minimal_coset_rep(w: Permutation, I: IndexSet, side: Literal["right", "left"] = "right") -> bool:
    _validate_set(w, I)
    if side == "right":
        desc = right_descents(w)
    elif side == "left":
        desc = left_descents(w)
    else:
        raise ValueError(f"side must be 'right' or 'left', not {side!r}")
    return not (desc.members & I.members)
