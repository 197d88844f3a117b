"""Command-line front end.

Subcommands: enumerate, mobius, verify, identity, table, export.  All output
is deterministic; JSON is the machine format and text tables are fixed-width
right-aligned integers.  Exit codes: 0 = all checks pass, 1 = a mathematical
check failed, 2 = usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .algebra import (
    ImpLattice,
    enumerate_all,
    full_algebra,
    lattice_from_dict,
    lattice_to_dict,
    lattice_to_json,
    top_only,
    verdict_to_dict,
)
from .formulas import (
    bell,
    chain_report_to_dict,
    chain_sum_corrected,
    chain_sum_printed,
    factorial,
    mu_rank_sum_chain,
    mu_rank_sum_composition,
    mu_rank_sum_oracle,
    mu_top_closed_form,
    mobius_product_formula,
)
from .poset import (
    NotComparableError,
    interval,
    interval_to_dict,
    interval_to_dot,
    mobius_between,
)
from .verify import SUITES, run_suite, summarize

POSET_CAP = 8
TABLE_CAP = 100
# the p-table composition column enumerates C(n-1, k-1) compositions, so it
# is emitted only up to this bound
COMPOSITION_TABLE_CAP = 16
ORACLE_TABLE_CAP = 5


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int | None = None
    n_max: int | None = None
    k: int | None = None
    lower: ImpLattice | None = None
    upper: ImpLattice | None = None
    suite: str = "all"
    fmt: str = "text"
    out: str | None = None
    override_cap: bool = False


def _cap_check(value: int, cap: int, what: str, override: bool) -> None:
    if value < 0:
        raise UsageError(f"{what} must be >= 0, got {value}")
    if value > cap and not override:
        raise UsageError(
            f"{what} {value} exceeds the safety cap {cap}; pass --override-cap to force"
        )


def _parse_lattice(text: str, what: str) -> ImpLattice:
    try:
        return lattice_from_dict(json.loads(text))
    except ValueError as exc:
        raise UsageError(f"cannot parse {what}: {exc}") from exc


def _resolve_pair(cfg: RunConfig) -> tuple[ImpLattice, ImpLattice]:
    """Fill in the [lower, upper] pair: --upper defaults to the full algebra,
    and a bare --n means the extreme interval [{1}, B_n]."""
    lower, upper = cfg.lower, cfg.upper
    if lower is None and upper is None:
        if cfg.n is None:
            raise UsageError("need --lower/--upper or --n")
        lower, upper = top_only(cfg.n), full_algebra(cfg.n)
    elif lower is None:
        lower = top_only(upper.n)
    elif upper is None:
        upper = full_algebra(lower.n)
    if lower.n != upper.n:
        raise UsageError(f"lower has n={lower.n} but upper has n={upper.n}")
    _cap_check(lower.n, POSET_CAP, "interval context n", cfg.override_cap)
    return lower, upper


def _text_table(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i]) for i in range(len(header))]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for r in rows:
        lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths)))
    return lines


def cmd_enumerate(cfg: RunConfig) -> tuple[str, int]:
    if cfg.n is None:
        raise UsageError("enumerate needs --n")
    _cap_check(cfg.n, POSET_CAP, "n", cfg.override_cap)
    lattices = enumerate_all(cfg.n)
    expected = bell(cfg.n + 1)
    ok = len(lattices) == expected
    if cfg.fmt == "json":
        doc = {
            "command": "enumerate",
            "n": cfg.n,
            "count": len(lattices),
            "bell": expected,
            "match": ok,
            "lattices": [lattice_to_dict(A) for A in lattices],
        }
        text = json.dumps(doc, indent=2)
    else:
        lines = [lattice_to_json(A) for A in lattices]
        lines.append(f"count={len(lattices)} bell={expected} {'ok' if ok else 'MISMATCH'}")
        text = "\n".join(lines)
    return text, 0 if ok else 1


def cmd_mobius(cfg: RunConfig) -> tuple[str, int]:
    lower, upper = _resolve_pair(cfg)
    try:
        oracle = mobius_between(lower, upper)
    except NotComparableError as exc:
        raise UsageError(str(exc)) from exc
    closed_form = None
    agree = None
    if upper == full_algebra(upper.n):
        closed_form = mobius_product_formula(lower)
        agree = closed_form == oracle
    if cfg.fmt == "json":
        doc = {
            "command": "mobius",
            "n": lower.n,
            "lower": lattice_to_dict(lower),
            "upper": lattice_to_dict(upper),
            "mu_oracle": str(oracle),
            "mu_product_formula": None if closed_form is None else str(closed_form),
            "agree": agree,
        }
        text = json.dumps(doc, indent=2)
    else:
        lines = [f"mu_oracle={oracle}"]
        if closed_form is not None:
            lines.append(f"mu_product_formula={closed_form}")
            lines.append(f"agree={'yes' if agree else 'NO'}")
        text = "\n".join(lines)
    return text, 1 if agree is False else 0


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    if cfg.n_max is None:
        raise UsageError("verify needs --n-max")
    _cap_check(cfg.n_max, POSET_CAP, "n-max", cfg.override_cap)
    verdicts = run_suite(cfg.suite, cfg.n_max)
    summary = summarize(verdicts)
    if cfg.fmt == "json":
        doc = {
            "command": "verify",
            "suite": cfg.suite,
            "n_max": cfg.n_max,
            "verdicts": [verdict_to_dict(v) for v in verdicts],
            "summary": summary,
        }
        text = json.dumps(doc, indent=2)
    else:
        lines = []
        for v in verdicts:
            params = " ".join(f"{key}={val}" for key, val in v.params.items())
            lines.append(
                f"{'PASS' if v.passed else 'FAIL'} {v.claim} {params} lhs={v.lhs} rhs={v.rhs}"
            )
        lines.append(
            f"summary: {summary['claims']} claims, {summary['passed']} passed, "
            f"{summary['failed']} failed"
        )
        text = "\n".join(lines)
    return text, 0 if summary["failed"] == 0 else 1


def cmd_identity(cfg: RunConfig) -> tuple[str, int]:
    if cfg.n_max is None:
        raise UsageError("identity needs --n-max")
    _cap_check(cfg.n_max, TABLE_CAP, "n-max", cfg.override_cap)
    rows = []
    all_ok = True
    for n in range(1, cfg.n_max + 1):
        closed = mu_top_closed_form(n)
        corrected = chain_sum_corrected(n)
        printed = chain_sum_printed(n)
        printed_expected = (-1) ** n * factorial(n - 1)
        corrected_ok = corrected.value == closed
        printed_ok = printed.value == printed_expected
        all_ok = all_ok and corrected_ok and printed_ok
        rows.append(
            {
                "n": n,
                "closed_form": str(closed),
                "corrected": str(corrected.value),
                "printed": str(printed.value),
                "printed_expected": str(printed_expected),
                "corrected_ok": corrected_ok,
                "printed_ok": printed_ok,
            }
        )
    if cfg.fmt == "json":
        doc = {"command": "identity", "n_max": cfg.n_max, "rows": rows, "all_ok": all_ok}
        text = json.dumps(doc, indent=2)
    else:
        header = ["n", "closed_form", "corrected", "printed", "printed_expected", "ok"]
        table_rows = [
            [
                str(r["n"]),
                r["closed_form"],
                r["corrected"],
                r["printed"],
                r["printed_expected"],
                "yes" if r["corrected_ok"] and r["printed_ok"] else "NO",
            ]
            for r in rows
        ]
        text = "\n".join(_text_table(header, table_rows))
    return text, 0 if all_ok else 1


def cmd_table(cfg: RunConfig) -> tuple[str, int]:
    if (cfg.n is None) == (cfg.n_max is None):
        raise UsageError("table needs exactly one of --n or --n-max")
    if cfg.n is not None:
        _cap_check(cfg.n, TABLE_CAP, "n", cfg.override_cap)
        ns = [cfg.n]
    else:
        _cap_check(cfg.n_max, TABLE_CAP, "n-max", cfg.override_cap)
        ns = list(range(1, cfg.n_max + 1))
    if cfg.k is not None:
        if cfg.k < 1:
            raise UsageError(f"k must be >= 1, got {cfg.k}")
        if cfg.n is not None and cfg.k > cfg.n:
            raise UsageError(f"need 1 <= k <= n, got k={cfg.k}, n={cfg.n}")
    rows = []
    all_ok = True
    for n in ns:
        ks = [cfg.k] if cfg.k is not None else list(range(1, n + 1))
        for k in ks:
            if k > n:
                continue  # an n-max sweep has no (k, n) row until n reaches k
            chain = mu_rank_sum_chain(k, n)
            composition = (
                mu_rank_sum_composition(k, n) if n <= COMPOSITION_TABLE_CAP else None
            )
            oracle = mu_rank_sum_oracle(k, n) if n <= ORACLE_TABLE_CAP else None
            ok = all(
                other is None or other == chain.value for other in (composition, oracle)
            )
            all_ok = all_ok and ok
            rows.append(
                {
                    "n": n,
                    "k": k,
                    "chain": str(chain.value),
                    "chain_count": chain.chain_count,
                    "composition": None if composition is None else str(composition),
                    "oracle": None if oracle is None else str(oracle),
                    "match": ok,
                }
            )
    if cfg.fmt == "json":
        doc = {"command": "table", "rows": rows, "all_ok": all_ok}
        text = json.dumps(doc, indent=2)
    else:
        header = ["n", "k", "chain", "composition", "oracle", "ok"]
        table_rows = [
            [
                str(r["n"]),
                str(r["k"]),
                r["chain"],
                "-" if r["composition"] is None else r["composition"],
                "-" if r["oracle"] is None else r["oracle"],
                "yes" if r["match"] else "NO",
            ]
            for r in rows
        ]
        text = "\n".join(_text_table(header, table_rows))
    return text, 0 if all_ok else 1


def cmd_export(cfg: RunConfig) -> tuple[str, int]:
    lower, upper = _resolve_pair(cfg)
    try:
        poset = interval(lower, upper)
    except NotComparableError as exc:
        raise UsageError(str(exc)) from exc
    if cfg.fmt == "dot":
        text = interval_to_dot(poset)
    else:
        text = json.dumps(interval_to_dict(poset), indent=2)
    return text, 0


_COMMANDS = {
    "enumerate": cmd_enumerate,
    "mobius": cmd_mobius,
    "verify": cmd_verify,
    "identity": cmd_identity,
    "table": cmd_table,
    "export": cmd_export,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="implattice",
        description=(
            "Exact Mobius-function combinatorics for the order of implication "
            "sublattices of a finite Boolean algebra."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default=formats[0], dest="fmt")
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument(
            "--override-cap",
            action="store_true",
            help="bypass the safety caps on n",
        )

    p = sub.add_parser("enumerate", help="list every sublattice of B_n")
    p.add_argument("--n", type=int, required=True)
    add_common(p)

    p = sub.add_parser("mobius", help="mu(lower, upper) by oracle and closed form")
    p.add_argument("--n", type=int, help="shorthand for the interval [{1}, B_n]")
    p.add_argument("--lower", help="ImpLattice JSON")
    p.add_argument("--upper", help="ImpLattice JSON (default: the full algebra)")
    add_common(p)

    p = sub.add_parser("verify", help="run a verification suite for all n <= n-max")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    add_common(p)

    p = sub.add_parser("identity", help="top-interval identity table over n")
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    add_common(p)

    p = sub.add_parser("table", help="rank-restricted Mobius sum table over (k, n)")
    p.add_argument("--n", type=int, help="single-n table")
    p.add_argument("--n-max", type=int, dest="n_max", help="all n up to this bound")
    p.add_argument("--k", type=int, help="restrict to one k")
    add_common(p)

    p = sub.add_parser("export", help="interval Hasse diagram as DOT or JSON")
    p.add_argument("--n", type=int, help="shorthand for the interval [{1}, B_n]")
    p.add_argument("--lower", help="ImpLattice JSON")
    p.add_argument("--upper", help="ImpLattice JSON (default: the full algebra)")
    add_common(p, formats=("dot", "json"))

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    lower = _parse_lattice(args.lower, "--lower") if getattr(args, "lower", None) else None
    upper = _parse_lattice(args.upper, "--upper") if getattr(args, "upper", None) else None
    return RunConfig(
        command=args.command,
        n=getattr(args, "n", None),
        n_max=getattr(args, "n_max", None),
        k=getattr(args, "k", None),
        lower=lower,
        upper=upper,
        suite=getattr(args, "suite", "all"),
        fmt=args.fmt,
        out=args.out,
        override_cap=args.override_cap,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        text, code = _COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not text.endswith("\n"):
        text += "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
