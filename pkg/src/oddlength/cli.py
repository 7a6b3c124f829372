"""
Command-line interface.

    oddlength stats  --group B --window -2,4,3,-1
    oddlength gf     --group A --n 5 --set "" [--restrict plus] [--chi]
    oddlength closed --formula sn-quotient --n 5 --set ""
    oddlength verify --suite default --report text

Exit status: 0 on success, 1 when a verification fails, 2 for usage errors
and 3 when a rank exceeds the configured resource limits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, replace
from typing import Any, Callable, Sequence, TextIO

from .enumeration import DEFAULT_LIMITS, ResourceLimitError, WeightSpec, cached_table
from .groups import (
    IndexSet, InvalidElementError, InvalidIndexSetError, Kind,
    left_descents, length, parse_index_set, parse_window, right_descents,
)
from .poly import IntPolynomial
from .qseries import (
    closed_b_ascending, closed_chessboard_minus, closed_chessboard_plus,
    closed_conjA, closed_conjB, closed_sn_full, closed_sn_quotient,
)
from .stats import NotChessboardError, chessboard_class, chi, odd_length, odd_stats_b
from .verifier import CheckParams, IdentityId, SuiteConfig, run_suite

__all__ = ["CliConfig", "UsageError", "build_parser", "run_cli", "main", "FORMULAS"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(ValueError):
    pass


# tag -> (group kind of the index set, closed form); None means no index set
FORMULAS: dict[str, tuple[Kind, Callable[..., IntPolynomial]] | tuple[None, Callable[[int], IntPolynomial]]] = {
    "chessboard-plus": ("A", closed_chessboard_plus),
    "chessboard-minus": ("A", closed_chessboard_minus),
    "conjA": ("A", closed_conjA),
    "sn-quotient": ("A", closed_sn_quotient),
    "sn-full": (None, closed_sn_full),
    "b-ascending": (None, closed_b_ascending),
    "conjB": ("B", closed_conjB),
}

_RESTRICT = {"all": "all", "chess": "chessboard", "chessboard": "chessboard",
             "plus": "plus", "minus": "minus"}


@dataclass(frozen=True)
class CliConfig:
    """Parsed and cross-checked options for one invocation."""

    command: str
    group: Kind | None = None
    n: int | None = None
    window: str | None = None
    index_set: str | None = None
    all_sets: bool = False
    weight: WeightSpec = WeightSpec()
    formula: str | None = None
    fmt: str = "text"
    suite: tuple[IdentityId, ...] = ()
    max_n_a: int | None = None
    max_n_b: int | None = None
    threads: int = 1

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> CliConfig:
        cmd = ns.command
        if cmd == "stats":
            return cls(cmd, group=ns.group, window=ns.window, fmt=ns.format)
        if cmd == "gf":
            restrict = _RESTRICT[ns.restrict]
            if ns.chi and restrict == "all":
                # chi lives on chessboard elements only
                restrict = "chessboard"
            if ns.set is None and not ns.all_sets:
                raise UsageError("gf needs --set (use \"\" for the empty set) or --all-sets")
            if ns.set is not None and ns.all_sets:
                raise UsageError("--set and --all-sets are mutually exclusive")
            return cls(cmd, group=ns.group, n=ns.n, index_set=ns.set, all_sets=ns.all_sets,
                       weight=WeightSpec(restrict, ns.chi), fmt=ns.format,
                       threads=_positive(ns.threads, "--threads"))
        if cmd == "closed":
            kind = FORMULAS[ns.formula][0]
            if kind is None and (ns.set is not None or ns.all_sets):
                raise UsageError(f"formula {ns.formula} takes no index set")
            if kind is not None and ns.set is None and not ns.all_sets:
                raise UsageError(f"formula {ns.formula} needs --set or --all-sets")
            if ns.set is not None and ns.all_sets:
                raise UsageError("--set and --all-sets are mutually exclusive")
            return cls(cmd, group=kind, n=ns.n, index_set=ns.set, all_sets=ns.all_sets,
                       formula=ns.formula, fmt=ns.format)
        if cmd == "verify":
            return cls(cmd, suite=_parse_suite(ns.suite), max_n_a=ns.max_n_a, max_n_b=ns.max_n_b,
                       fmt=ns.report, threads=_positive(ns.threads, "--threads"))
        raise UsageError(f"unknown command {cmd!r}")


def _positive(v: int, flag: str) -> int:
    if v < 1:
        raise UsageError(f"{flag} must be at least 1")
    return v


def _parse_suite(text: str) -> tuple[IdentityId, ...]:
    if text.strip() == "default":
        return tuple(IdentityId)
    ids = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            ids.append(IdentityId(tok))
        except ValueError:
            raise UsageError(f"unknown identity {tok!r}") from None
    if len(set(ids)) != len(ids):
        raise UsageError("identity listed twice")
    return tuple(ids)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="oddlength", description="Signed odd-length generating functions of Coxeter groups.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("stats", help="statistics of one element")
    s.add_argument("--group", choices=["A", "B"], required=True)
    s.add_argument("--window", required=True, help="comma-separated window, e.g. -2,4,3,-1")
    s.add_argument("--format", choices=["text", "json"], default="text")

    g = sub.add_parser("gf", help="generating function by enumeration")
    g.add_argument("--group", choices=["A", "B"], required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--set", help="comma-separated index set; \"\" is the empty set")
    g.add_argument("--all-sets", action="store_true", help="every index set of the rank")
    g.add_argument("--restrict", choices=sorted(_RESTRICT), default="all")
    g.add_argument("--chi", action="store_true", help="weight chessboard elements by chi")
    g.add_argument("--threads", type=int, default=1)
    g.add_argument("--format", choices=["text", "json", "csv"], default="text")

    c = sub.add_parser("closed", help="closed product formula")
    c.add_argument("--formula", choices=list(FORMULAS), required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--set")
    c.add_argument("--all-sets", action="store_true")
    c.add_argument("--format", choices=["text", "json", "csv"], default="text")

    v = sub.add_parser("verify", help="run the identity suite")
    v.add_argument("--suite", default="default", help="'default' or comma-separated identity ids")
    v.add_argument("--max-n-a", type=int)
    v.add_argument("--max-n-b", type=int)
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--report", choices=["text", "json"], default="text")
    return p


# -- commands ----------------------------------------------------------------

def _dump(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _set_list(I: IndexSet) -> list[int]:
    return sorted(I.members)


def _cmd_stats(cfg: CliConfig) -> tuple[int, str]:
    w = parse_window(cfg.group, cfg.window)
    cls = chessboard_class(w)
    try:
        chi_value: int | None = chi(w)
    except NotChessboardError:
        chi_value = None
    doc: dict[str, Any] = {
        "group": cfg.group,
        "window": list(w.window),
        "length": length(w),
        "odd_length": odd_length(w),
        "right_descents": _set_list(right_descents(w)),
        "left_descents": _set_list(left_descents(w)),
        "chessboard": cls.value,
        "chi": chi_value,
    }
    if cfg.group == "B":
        st = odd_stats_b(w)
        doc.update(oinv=st.oinv, oneg=st.oneg, onsp=st.onsp)
    if cfg.fmt == "json":
        return EXIT_OK, _dump(doc)
    lines = []
    for key, val in doc.items():
        if isinstance(val, list) and key != "window":
            val = "{" + ", ".join(map(str, val)) + "}"
        elif key == "window":
            val = "[" + ", ".join(map(str, val)) + "]"
        elif val is None:
            val = "undefined"
        lines.append(f"{key:<15}{val}")
    return EXIT_OK, "\n".join(lines) + "\n"


def _rows_document(cfg: CliConfig, rows: list[tuple[IndexSet, IntPolynomial]],
                   head: dict[str, Any]) -> str:
    if cfg.fmt == "csv":
        buf = io.StringIO()
        out = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        out.writerow(["n", "set", "coeffs"])
        for I, poly in rows:
            out.writerow([cfg.n, ",".join(map(str, _set_list(I))),
                          json.dumps(list(poly.coeffs), separators=(",", ":"))])
        return buf.getvalue()
    if cfg.fmt == "json":
        if cfg.all_sets:
            doc = dict(head, rows=[{"set": _set_list(I), "poly": p.to_json()} for I, p in rows])
        else:
            I, poly = rows[0]
            doc = dict(head, set=_set_list(I), poly=poly.to_json())
        return _dump(doc)
    if cfg.all_sets:
        return "".join(f"{{{','.join(map(str, _set_list(I)))}}}\t{p}\n" for I, p in rows)
    return f"{rows[0][1]}\n"


def _index_sets(kind: Kind, n: int, cfg: CliConfig) -> list[IndexSet]:
    if cfg.all_sets:
        bits = IndexSet.full(kind, n).mask.bit_length()
        return [IndexSet.from_mask(kind, n, m) for m in range(1 << bits)]
    return [parse_index_set(kind, n, cfg.index_set)]


def _cmd_gf(cfg: CliConfig) -> tuple[int, str]:
    DEFAULT_LIMITS.check(cfg.group, cfg.n)
    sets = _index_sets(cfg.group, cfg.n, cfg)
    table = cached_table(cfg.group, cfg.n, workers=cfg.threads)
    if cfg.all_sets:
        sums = table.quotient_sums(cfg.weight)
        rows = [(I, IntPolynomial(sums[I.mask].tolist())) for I in sets]
    else:
        rows = [(I, table.gf(I, cfg.weight)) for I in sets]
    head = {"group": cfg.group, "n": cfg.n, "restrict": cfg.weight.restrict,
            "chi": cfg.weight.apply_chi}
    return EXIT_OK, _rows_document(cfg, rows, head)


def _cmd_closed(cfg: CliConfig) -> tuple[int, str]:
    kind, fn = FORMULAS[cfg.formula]
    if kind is None:
        poly = fn(cfg.n)
        if cfg.fmt == "json":
            return EXIT_OK, _dump({"formula": cfg.formula, "n": cfg.n, "poly": poly.to_json()})
        if cfg.fmt == "csv":
            return EXIT_OK, _rows_document(cfg, [(IndexSet("A", max(cfg.n, 1)), poly)], {})
        return EXIT_OK, f"{poly}\n"
    if cfg.n < 1:
        raise UsageError("n must be positive")
    rows = [(I, fn(cfg.n, I)) for I in _index_sets(kind, cfg.n, cfg)]
    return EXIT_OK, _rows_document(cfg, rows, {"formula": cfg.formula, "n": cfg.n})


def _cmd_verify(cfg: CliConfig) -> tuple[int, str]:
    params = CheckParams(limits=DEFAULT_LIMITS, workers=cfg.threads)
    if cfg.max_n_a is not None:
        params = replace(params, max_n_a=cfg.max_n_a)
    if cfg.max_n_b is not None:
        params = replace(params, max_n_b=cfg.max_n_b)
    for v in (params.max_n_a, params.max_n_b):
        if v < 1:
            raise UsageError("rank caps must be positive")
    params.validate()
    reports = run_suite(SuiteConfig(cfg.suite, params, cfg.threads))
    ok = all(r.passed for r in reports)
    if cfg.fmt == "json":
        text = _dump({"passed": ok, "reports": [r.to_json() for r in reports]})
    else:
        lines = []
        for r in reports:
            p = r.params
            lines.append(f"{r.status.upper():<6}{r.identity.value:<28}"
                         f"ranks={p.get('ranks', [])} instances={r.instances} "
                         f"{r.elapsed_ms:.0f} ms")
            if r.counterexample is not None:
                lines.append(f"      counterexample: {json.dumps(r.counterexample)}")
            if r.message:
                lines.append(f"      {r.message}")
        passed = sum(r.passed for r in reports)
        lines.append(f"{passed}/{len(reports)} identities passed")
        text = "\n".join(lines) + "\n"
    return (EXIT_OK if ok else EXIT_FAIL), text


_COMMANDS = {"stats": _cmd_stats, "gf": _cmd_gf, "closed": _cmd_closed, "verify": _cmd_verify}


def _glue_windows(argv: Sequence[str]) -> list[str]:
    """Attach the value to --window so a leading minus is not read as a flag."""
    out: list[str] = []
    it = iter(argv)
    for a in it:
        if a == "--window":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--window={nxt}")
        else:
            out.append(a)
    return out


def run_cli(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
            stderr: TextIO | None = None) -> int:
    """Run one command; the document goes to ``stdout``, diagnostics to ``stderr``."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(_glue_windows(sys.argv[1:] if argv is None else argv))
        if ns.verbose:
            logging.basicConfig(level=logging.DEBUG, stream=stderr)
        cfg = CliConfig.from_namespace(ns)
        status, text = _COMMANDS[cfg.command](cfg)
    except ResourceLimitError as exc:
        print(f"oddlength: refused: {exc}", file=stderr)
        return EXIT_LIMIT
    except (UsageError, InvalidElementError, InvalidIndexSetError, ValueError) as exc:
        print(parser.format_usage().rstrip(), file=stderr)
        print(f"oddlength: error: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    stdout.write(text)
    return status


def main() -> None:
    sys.exit(run_cli())
