"""
Executable catalog of odd-length identities.

Each identity expands into a finite list of instances (rank, index set, and
whatever extra parameters its hypotheses name).  Every instance compares two
exactly computed values; the first mismatch is kept as a counterexample that
can be replayed by passing its parameters back as ``where``.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Any, Callable, Iterator

from .enumeration import (
    DEFAULT_LIMITS, ResourceLimitError, ResourceLimits, WeightSpec,
    cached_table, enumerate_group,
)
from .groups import (
    IndexSet, Kind, compose, in_parabolic_subgroup, left_descents,
    left_parabolic_decompose, length,
)
from .poly import ONE, ZERO, IntPolynomial
from .qseries import (
    closed_b_ascending, closed_chessboard_minus, closed_chessboard_plus,
    closed_conjA, closed_conjB, closed_sn_full, closed_sn_quotient,
    connected_components, is_compressed, m_tilde, one_minus_x_pow, shifted_set,
)
from .stats import odd_length_a, odd_length_a_alternating, odd_length_b, odd_stats_b

__all__ = [
    "IdentityId", "CheckParams", "CheckReport", "SuiteConfig",
    "check_identity", "run_suite", "UnknownIdentityError",
]


class IdentityId(str, enum.Enum):
    prop2_1_additivity = "prop2_1_additivity"
    prop2_7_ascending = "prop2_7_ascending"
    lemma2_8_chessB = "lemma2_8_chessB"
    prop2_9_fact2 = "prop2_9_fact2"
    prop2_10_zero_removal = "prop2_10_zero_removal"
    lemma3_1_chessA = "lemma3_1_chessA"
    eq_chessA0 = "eq_chessA0"
    lemma3_2_zero = "lemma3_2_zero"
    prop3_3_scr = "prop3_3_scr"
    prop3_4_scl = "prop3_4_scl"
    prop3_5_scrr = "prop3_5_scrr"
    prop3_6_sclr = "prop3_6_sclr"
    thm4_1_plus = "thm4_1_plus"
    thm4_1_minus = "thm4_1_minus"
    thm4_2_conjA = "thm4_2_conjA"
    cor4_3_sn = "cor4_3_sn"
    cor4_4_full = "cor4_4_full"
    prop5_1_decomp = "prop5_1_decomp"
    prop5_2_shiftB = "prop5_2_shiftB"
    prop5_3_inflateB = "prop5_3_inflateB"
    thm5_4_conjB = "thm5_4_conjB"
    defA_equivalence = "defA_equivalence"
    compressed_iff_m_eq_mtilde = "compressed_iff_m_eq_mtilde"


class UnknownIdentityError(KeyError):
    pass


@dataclass(frozen=True)
class CheckParams:
    """Rank caps and an optional instance filter.

    ``max_n_a``/``max_n_b`` bound the ordinary checks; the closed-form
    theorems run one rank further unless ``main_n_a``/``main_n_b`` say
    otherwise.  Element-by-element checks are additionally capped by the
    ``brute_*`` fields.
    """

    max_n_a: int = 9
    max_n_b: int = 7
    main_n_a: int | None = None
    main_n_b: int | None = None
    brute_n_a: int = 7
    brute_n_b: int = 6
    decompose_n_a: int = 5
    decompose_n_b: int = 4
    where: dict[str, Any] | None = None
    workers: int = 1
    limits: ResourceLimits = DEFAULT_LIMITS

    @property
    def top_a(self) -> int:
        if self.main_n_a is not None:
            return self.main_n_a
        return min(self.max_n_a + 1, self.limits.max_n_a)

    @property
    def top_b(self) -> int:
        if self.main_n_b is not None:
            return self.main_n_b
        return min(self.max_n_b + 1, self.limits.max_n_b)

    def validate(self) -> None:
        for n in (self.max_n_a, self.top_a):
            self.limits.check("A", n)
        for n in (self.max_n_b, self.top_b):
            self.limits.check("B", n)


@dataclass
class CheckReport:
    identity: IdentityId
    params: dict[str, Any]
    status: str  # "pass", "fail" or "error" (no instance in range)
    counterexample: dict[str, Any] | None = None
    elapsed_ms: float = 0.0
    instances: int = 0
    message: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "identity": self.identity.value,
            "params": self.params,
            "status": self.status,
        }
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample
        if self.message:
            doc["message"] = self.message
        doc["elapsed_ms"] = round(self.elapsed_ms, 3)
        return doc


# -- helpers -----------------------------------------------------------------

Instance = tuple[dict[str, Any], Any, Any]

ALL = WeightSpec()
PLUS = WeightSpec("plus")
MINUS = WeightSpec("minus")
CHESS = WeightSpec("chessboard")
CHESS_CHI = WeightSpec("chessboard", apply_chi=True)


def _sets(kind: Kind, n: int) -> Iterator[IndexSet]:
    bits = n - 1 if kind == "A" else n
    for mask in range(1 << bits):
        yield IndexSet.from_mask(kind, n, mask)


@lru_cache(maxsize=256)
def _quotients(kind: Kind, n: int, weight: WeightSpec, position: int | None = None,
               value: int | None = None, workers: int = 1) -> tuple[IntPolynomial, ...]:
    table = cached_table(kind, n, position, value, workers)
    return tuple(table.all_quotient_gfs(weight))


class _Ctx:
    def __init__(self, params: CheckParams):
        self.p = params

    def q(self, I: IndexSet, weight: WeightSpec = ALL, position: int | None = None,
          value: int | None = None) -> IntPolynomial:
        return _quotients(I.kind, I.n, weight, position, value, self.p.workers)[I.mask]


def _jsonable(v: Any) -> Any:
    if isinstance(v, IntPolynomial):
        return v.to_json()
    if isinstance(v, IndexSet):
        return sorted(v.members)
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _inst(n: int, I: IndexSet | None = None, **extra: Any) -> dict[str, Any]:
    d: dict[str, Any] = {"n": n}
    if I is not None:
        d["set"] = sorted(I.members)
    for k, v in extra.items():
        d[k] = list(v) if isinstance(v, tuple) else v
    return d


def _even_complement(I: IndexSet, lo: int) -> bool:
    """Every index of [lo, n-1] missing from I is even."""
    return all(i % 2 == 0 for i in range(lo, I.n) if i not in I.members)


# -- element-level checks ----------------------------------------------------

def _prop2_1(ctx: _Ctx, kind_caps) -> Iterator[Instance]:
    for kind, cap in kind_caps:
        for n in range(1, cap + 1):
            sets = list(_sets(kind, n))
            for w in enumerate_group(kind, n):
                lw = length(w)
                for J in sets:
                    u, v = left_parabolic_decompose(w, J)
                    got = {"length": length(u) + length(v),
                           "recomposes": compose(u, v) == w,
                           "in_parabolic": in_parabolic_subgroup(u, J),
                           "quotient_clean": not (left_descents(v).members & J.members)}
                    want = {"length": lw, "recomposes": True,
                            "in_parabolic": True, "quotient_clean": True}
                    yield _inst(n, J, kind=kind, window=list(w.window)), got, want


def check_prop2_1(ctx: _Ctx) -> Iterator[Instance]:
    p = ctx.p
    yield from _prop2_1(ctx, [("A", min(p.max_n_a, p.decompose_n_a)),
                              ("B", min(p.max_n_b, p.decompose_n_b))])


def check_defA(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, min(ctx.p.max_n_a, ctx.p.brute_n_a) + 1):
        for w in enumerate_group("A", n):
            yield _inst(n, window=list(w.window)), odd_length_a_alternating(w), odd_length_a(w)


def check_prop5_1(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, min(ctx.p.max_n_b, ctx.p.brute_n_b) + 1):
        for w in enumerate_group("B", n):
            yield _inst(n, window=list(w.window)), odd_length_b(w), odd_stats_b(w).total


def check_compressed(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(2, ctx.p.top_a + 1, 2):
        for I in _sets("A", n):
            yield _inst(n, I), n // 2 == m_tilde(I), is_compressed(I) and (n - 1) in I


# -- type A quotient checks --------------------------------------------------

def check_thm4_1_plus(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.top_a + 1):
        for I in _sets("A", n):
            yield _inst(n, I), ctx.q(I, PLUS), closed_chessboard_plus(n, I)


def check_thm4_1_minus(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(2, ctx.p.top_a + 1, 2):
        for I in _sets("A", n):
            yield _inst(n, I), ctx.q(I, MINUS), closed_chessboard_minus(n, I)


def check_thm4_2(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.top_a + 1):
        for I in _sets("A", n):
            yield _inst(n, I), ctx.q(I, CHESS_CHI), closed_conjA(n, I)


def check_cor4_3(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.top_a + 1):
        for I in _sets("A", n):
            yield _inst(n, I), ctx.q(I), closed_sn_quotient(n, I)


def check_cor4_4(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.top_a + 1):
        yield _inst(n), ctx.q(IndexSet("A", n)), closed_sn_full(n)


def check_chessA0(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.max_n_a + 1):
        for I in _sets("A", n):
            yield _inst(n, I), ctx.q(I), ctx.q(I, CHESS)


def check_lemma3_1(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.max_n_a + 1):
        for I in _sets("A", n):
            if n % 2 == 1 or _even_complement(I, 1):
                yield _inst(n, I), ctx.q(I), ctx.q(I, PLUS)


def check_lemma3_2(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(3, ctx.p.max_n_a + 1):
        for I in _sets("A", n):
            for a in range(2, n):
                if I.members & set(range(a - 2, a + 2)):
                    continue
                for v in (n, 1):
                    yield _inst(n, I, a=a, value=v), ctx.q(I, ALL, a, v), ZERO


def _right_shifts(kind: Kind, n: int) -> Iterator[tuple[IndexSet, tuple[int, int], IndexSet]]:
    for I in _sets(kind, n):
        for comp in connected_components(I).intervals:
            start, end = comp
            if start >= 1 and (end - start) % 2 == 0 and end + 2 not in I and end + 1 <= n - 1:
                yield I, comp, shifted_set(I, comp, "right")


def _left_shifts(n: int) -> Iterator[tuple[IndexSet, tuple[int, int], IndexSet]]:
    for I in _sets("A", n):
        for comp in connected_components(I).intervals:
            start, end = comp
            i = start - 1
            if i >= 1 and (end - start) % 2 == 0 and i - 1 not in I:
                yield I, comp, shifted_set(I, comp, "left")


def _three_way(ctx: _Ctx, n: int, I: IndexSet, comp, moved: IndexSet,
               pos: int | None = None, val: int | None = None,
               **extra) -> Iterator[Instance]:
    base = ctx.q(I, ALL, pos, val)
    for variant, other in (("union", I | moved.members), ("shifted", moved)):
        yield (_inst(n, I, component=comp, variant=variant, **extra),
               base, ctx.q(other, ALL, pos, val))


def check_prop3_3(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.max_n_a + 1):
        for I, comp, moved in _right_shifts("A", n):
            yield from _three_way(ctx, n, I, comp, moved)


def check_prop3_4(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.max_n_a + 1):
        for I, comp, moved in _left_shifts(n):
            yield from _three_way(ctx, n, I, comp, moved)


def check_prop3_5(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.max_n_a + 1):
        for I, comp, moved in _right_shifts("A", n):
            i, top = comp[0], comp[1] + 2
            for a in range(1, n + 1):
                if a in I or i - 1 <= a <= top:
                    continue
                yield from _three_way(ctx, n, I, comp, moved, a, n, a=a, value=n)


def check_prop3_6(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.max_n_a + 1):
        for I, comp, moved in _left_shifts(n):
            # component [i+1, i+2k+1]: the excluded window is [i-1, i+2k+2]
            i, top = comp[0] - 1, comp[1] + 1
            for a in range(1, n + 1):
                if a in I or i - 1 <= a <= top:
                    continue
                yield from _three_way(ctx, n, I, comp, moved, a, n, a=a, value=n)


# -- type B quotient checks --------------------------------------------------

def check_prop2_7(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.max_n_b + 1):
        yield _inst(n), ctx.q(IndexSet("B", n, range(1, n))), closed_b_ascending(n)


def check_lemma2_8(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.max_n_b + 1):
        for J in _sets("B", n):
            yield _inst(n, J), ctx.q(J), ctx.q(J, PLUS)


def check_prop2_9(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.max_n_b + 1):
        ascending = ctx.q(IndexSet("B", n, range(1, n)))
        for J in _sets("B", n):
            if 0 in J:
                continue
            if n % 2 == 0 and not _even_complement(J, 1):
                continue
            yield _inst(n, J), ctx.q(J), ascending * ctx.q(IndexSet("A", n, J.members))


def check_prop2_10(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(2, ctx.p.max_n_b + 1, 2):
        for J in _sets("B", n):
            # i = 0 would need B_0; the identity is then the trivial J = J
            if 0 not in J or not _even_complement(J, 0):
                continue
            i = min(set(range(n + 1)) - J.members)
            factor = ctx.q(IndexSet("B", i, range(1, i)))
            yield _inst(n, J, i=i), ctx.q(J - {0}), ctx.q(J) * factor


def check_prop5_2(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.max_n_b + 1):
        for J, comp, moved in _right_shifts("B", n):
            yield from _three_way(ctx, n, J, comp, moved)


def check_prop5_3(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.max_n_b + 1):
        for J in _sets("B", n):
            a = min(set(range(n + 1)) - J.members)
            if a > n - 1 or a + 1 in J:
                continue
            yield _inst(n, J, a=a), ctx.q(J), one_minus_x_pow(a + 1) * ctx.q(J | {a})


def check_thm5_4(ctx: _Ctx) -> Iterator[Instance]:
    for n in range(1, ctx.p.top_b + 1):
        for J in _sets("B", n):
            yield _inst(n, J), ctx.q(J), closed_conjB(n, J)


CATALOG: dict[IdentityId, Callable[[_Ctx], Iterator[Instance]]] = {
    IdentityId.prop2_1_additivity: check_prop2_1,
    IdentityId.prop2_7_ascending: check_prop2_7,
    IdentityId.lemma2_8_chessB: check_lemma2_8,
    IdentityId.prop2_9_fact2: check_prop2_9,
    IdentityId.prop2_10_zero_removal: check_prop2_10,
    IdentityId.lemma3_1_chessA: check_lemma3_1,
    IdentityId.eq_chessA0: check_chessA0,
    IdentityId.lemma3_2_zero: check_lemma3_2,
    IdentityId.prop3_3_scr: check_prop3_3,
    IdentityId.prop3_4_scl: check_prop3_4,
    IdentityId.prop3_5_scrr: check_prop3_5,
    IdentityId.prop3_6_sclr: check_prop3_6,
    IdentityId.thm4_1_plus: check_thm4_1_plus,
    IdentityId.thm4_1_minus: check_thm4_1_minus,
    IdentityId.thm4_2_conjA: check_thm4_2,
    IdentityId.cor4_3_sn: check_cor4_3,
    IdentityId.cor4_4_full: check_cor4_4,
    IdentityId.prop5_1_decomp: check_prop5_1,
    IdentityId.prop5_2_shiftB: check_prop5_2,
    IdentityId.prop5_3_inflateB: check_prop5_3,
    IdentityId.thm5_4_conjB: check_thm5_4,
    IdentityId.defA_equivalence: check_defA,
    IdentityId.compressed_iff_m_eq_mtilde: check_compressed,
}


def _matches(inst: dict[str, Any], where: dict[str, Any] | None) -> bool:
    if not where:
        return True
    return all(inst.get(k) == v for k, v in where.items())


def _restrict(params: CheckParams) -> CheckParams:
    """Narrow every rank cap to the replay rank when ``where`` pins one."""
    if not params.where or "n" not in params.where:
        return params
    n = params.where["n"]
    return replace(params, max_n_a=min(params.max_n_a, n), max_n_b=min(params.max_n_b, n),
                   main_n_a=min(params.top_a, n), main_n_b=min(params.top_b, n))


def check_identity(identity: IdentityId | str, params: CheckParams = CheckParams()) -> CheckReport:
    try:
        ident = IdentityId(identity)
    except ValueError:
        raise UnknownIdentityError(identity) from None
    params.validate()
    ctx = _Ctx(_restrict(params))
    start = time.perf_counter()
    count = 0
    ranks: set[int] = set()
    counterexample = None
    for inst, lhs, rhs in CATALOG[ident](ctx):
        if not _matches(inst, params.where):
            continue
        count += 1
        ranks.add(inst["n"])
        if lhs != rhs:
            counterexample = {"params": inst, "lhs": _jsonable(lhs), "rhs": _jsonable(rhs)}
            break
    elapsed = (time.perf_counter() - start) * 1000
    summary: dict[str, Any] = {
        "ranks": sorted(ranks),
        "instances": count,
    }
    if params.where:
        summary["where"] = params.where
    if counterexample is not None:
        status, message = "fail", ""
    elif count == 0:
        status, message = "error", "no instance satisfies the hypotheses in the configured range"
    else:
        status, message = "pass", ""
    return CheckReport(ident, summary, status, counterexample, elapsed, count, message)


@dataclass(frozen=True)
class SuiteConfig:
    ids: tuple[IdentityId, ...] = tuple(IdentityId)
    params: CheckParams = field(default_factory=CheckParams)
    threads: int = 1


def run_suite(config: SuiteConfig = SuiteConfig()) -> list[CheckReport]:
    """One report per requested identity, in the order given."""
    ids = [IdentityId(i) for i in config.ids]

    def one(ident: IdentityId) -> CheckReport:
        try:
            return check_identity(ident, config.params)
        except ResourceLimitError as exc:
            return CheckReport(ident, {}, "error", message=str(exc))

    if config.threads > 1 and len(ids) > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            return list(pool.map(one, ids))
    return [one(i) for i in ids]
