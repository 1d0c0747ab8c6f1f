"""``lcdgc`` command line: cosets, count, enumerate, analyze, audit."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import cyclotomic as cy
from .algebra import AlgebraElement, is_idempotent, is_lcd_idempotent, is_self_adjoint
from .codes import (
    METHODS,
    CapacityError,
    build_code,
    default_method,
    is_lcd_gram,
    is_lcd_intersection,
    lcd_supports,
    mds_report,
    structural_parameters,
    MAX_DISTANCE_DIM,
)
from .groups import FiniteGroup, make_group, members

EXIT_OK, EXIT_INVALID, EXIT_CAPACITY, EXIT_AUDIT = 0, 2, 3, 4
MAX_AUDIT_N = 99


class UsageError(ValueError):
    pass


def _report(command: str, inputs: dict, group: dict | None, results, warnings=None) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "group": group,
        "results": results,
        "warnings": list(warnings or []),
    }


def _group_info(g: FiniteGroup) -> dict:
    return {"kind": g.kind, "order": g.n}


def _cyclic_info(n: int) -> dict:
    return {"kind": f"cyclic:{n}", "order": n}


# -- commands ------------------------------------------------------------------


def cmd_cosets(n: int) -> tuple[dict, int]:
    part = cy.cosets(n)
    rows = [
        {"representative": c[0], "residues": list(c), "inverse_closed": closed}
        for c, closed in zip(part.cosets, part.inverse_closed)
    ]
    blocks = [[part.cosets[i][0] for i in blk] for blk in part.blocks]
    results = {"n": n, "t": part.t, "t1": part.t1, "cosets": rows, "blocks": blocks}
    return _report("cosets", {"n": n}, _cyclic_info(n), results), EXIT_OK


def _audit_dict(a: cy.AuditResult) -> dict:
    return {
        "u_set": list(a.u_set),
        "t": a.t,
        "paper_t1": a.paper_t1,
        "direct_t1": a.direct_t1,
        "paper_count": a.paper_count,
        "direct_count": a.direct_count,
        "oracle_count": a.oracle_count,
        "agrees": a.agrees,
    }


def _literal_warning(a: cy.AuditResult) -> str:
    if a.paper_count is None:
        return (
            f"n={a.n}: t + t1 = {a.t} + {a.paper_t1} is odd with t1 from the U-set; "
            f"the general formula has no integer value (direct count {a.direct_count})"
        )
    return (
        f"n={a.n}: general formula with t1 from the U-set gives {a.paper_count} "
        f"(t1={a.paper_t1}); direct count is {a.direct_count} (t1={a.direct_t1})"
    )


def cmd_count(n: int) -> tuple[dict, int]:
    r = cy.count_lcd_cyclic(n)
    warnings = []
    results = {
        "n": n,
        "count": r.count,
        "theorem_path": r.theorem_path,
        "t": r.t,
        "t1": r.t1,
        "blocks": r.blocks,
        "closed_forms": dict(r.closed_forms),
    }
    if r.theorem_path != cy.DIVIDES:
        a = cy.paper_general_formula_audit(n, with_oracle=True)
        results["audit"] = _audit_dict(a)
        if not a.agrees:
            warnings.append(_literal_warning(a))
    for name, value in r.closed_forms.items():
        if name != cy.GENERAL_LITERAL and value != r.count:
            warnings.append(f"n={n}: closed form for '{name}' gives {value}, direct count is {r.count}")
    return _report("count", {"n": n}, _cyclic_info(n), results, warnings), EXIT_OK


def _code_entry(g: FiniteGroup, support: int, with_params: bool, warnings: list[str]) -> dict:
    idx = members(support)
    entry = {"support": idx, "labels": [g.labels[i] for i in idx]}
    if not with_params:
        return entry
    c = build_code(g, AlgebraElement(g, support))
    entry.update({"n": c.n, "k": c.k, "d": None, "lcd_gram": is_lcd_gram(c), "lcd_intersection": is_lcd_intersection(c), "mds": None})
    if 0 < c.k <= MAX_DISTANCE_DIM:
        entry["d"] = c.d
        entry["mds"] = mds_report(c).is_mds
    elif c.k > MAX_DISTANCE_DIM:
        warnings.append(f"support {idx}: k={c.k} exceeds {MAX_DISTANCE_DIM}; distance not computed")
    return entry


def cmd_enumerate(spec: str, method: str | None, with_params: bool, catalog: str | None) -> tuple[dict, int]:
    g = make_group(spec)
    method = method or default_method(g)
    supports = lcd_supports(g, method)
    warnings: list[str] = []
    entries = [_code_entry(g, s, with_params or catalog is not None, warnings) for s in supports if s]
    if catalog:
        with Path(catalog).open("a", encoding="utf-8") as fh:
            for e in entries:
                line = {"group": g.kind, "support": e["support"], "n": e["n"], "k": e["k"], "d": e["d"], "lcd": e["lcd_gram"], "mds": e["mds"]}
                fh.write(json.dumps(line) + "\n")
    if catalog and not with_params:
        entries = [{"support": e["support"], "labels": e["labels"]} for e in entries]
    results = {
        "method": method,
        "count": len(entries),
        "count_including_zero": len(supports),
        "codes": entries,
    }
    inputs = {"group": spec, "method": method, "with_params": with_params}
    return _report("enumerate", inputs, _group_info(g), results, warnings), EXIT_OK


def _parse_support(text: str, n: int) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        idx = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"support must be comma-separated element indices, got {text!r}") from None
    bad = [i for i in idx if not 0 <= i < n]
    if bad:
        raise UsageError(f"support indices {bad} out of range 0..{n - 1}")
    if len(set(idx)) != len(idx):
        raise UsageError("support lists an element twice")
    return sorted(idx)


def cmd_analyze(spec: str, support: str) -> tuple[dict, int]:
    g = make_group(spec)
    idx = _parse_support(support, g.n)
    e = AlgebraElement.of(g, idx)
    c = build_code(g, e)
    warnings = []
    lcd_applicable = is_lcd_idempotent(e)
    results = {
        "support": idx,
        "labels": [g.labels[i] for i in idx],
        "weight": e.weight,
        "idempotent": is_idempotent(e),
        "self_adjoint": is_self_adjoint(e),
        "lcd_applicable": lcd_applicable,
        "lcd_gram": is_lcd_gram(c),
        "lcd_intersection": is_lcd_intersection(c),
        "n": c.n,
        "k": c.k,
        "d": None,
        "generator": c.gen.to_strings(),
    }
    if not lcd_applicable:
        warnings.append("generator is not a self-adjoint idempotent; LCD group-code statements do not apply")
    if c.k > MAX_DISTANCE_DIM:
        warnings.append(f"k={c.k} exceeds {MAX_DISTANCE_DIM}; distance not computed")
    elif c.k > 0:
        results["d"] = c.d
    s = structural_parameters(c)
    results["structure"] = {
        "case": s.case,
        "predicted_k": s.predicted_k,
        "predicted_d": s.predicted_d,
        "computed_k": s.computed_k,
        "computed_d": s.computed_d,
        "consistent": s.consistent,
    }
    if results["d"] is not None:
        m = mds_report(c)
        results["mds"] = {
            "is_mds": m.is_mds,
            "is_maximal_ideal": m.is_maximal_ideal,
            "maximal_scenario": m.maximal_scenario,
            "even_order_exclusion": m.even_order_exclusion,
            "consistent": m.consistent,
        }
    else:
        results["mds"] = None
    return _report("analyze", {"group": spec, "support": idx}, _group_info(g), results, warnings), EXIT_OK


def cmd_audit(max_n: int) -> tuple[dict, int]:
    if not 1 <= max_n <= MAX_AUDIT_N:
        raise UsageError(f"--max-n must be in 1..{MAX_AUDIT_N}, got {max_n}")
    rows, warnings, code = [], [], EXIT_OK
    for n in range(1, max_n + 1, 2):
        r = cy.count_lcd_cyclic(n)
        closed = r.closed_forms.get(r.theorem_path)
        row = {
            "n": n,
            "theorem_path": r.theorem_path,
            "t": r.t,
            "t1": r.t1,
            "blocks": r.blocks,
            "block_count": r.count,
            "closed_form": closed,
            "closed_form_agrees": None if closed is None else closed == r.count,
            "paper_literal_count": None,
            "paper_literal_agrees": None,
            "oracle_count": None,
            "oracle_agrees": None,
        }
        if r.theorem_path != cy.DIVIDES:
            a = cy.paper_general_formula_audit(n)
            row["paper_literal_count"] = a.paper_count
            row["paper_literal_agrees"] = a.agrees
            if not a.agrees:
                warnings.append(_literal_warning(a))
        if closed is not None and closed != r.count:
            warnings.append(f"n={n}: closed form for '{r.theorem_path}' gives {closed}, block count is {r.count}")
        if n <= cy.MAX_ORACLE_N:
            o = cy.oracle_count(n)
            row["oracle_count"] = o
            row["oracle_agrees"] = o == r.count
            if o != r.count:
                code = EXIT_AUDIT
        rows.append(row)
    return _report("audit", {"max_n": max_n}, None, {"max_n": max_n, "rows": rows}, warnings), code


# -- rendering -----------------------------------------------------------------


def _table_rows(report: dict) -> tuple[list[str], list[list]]:
    cmd, res = report["command"], report["results"]
    if cmd == "cosets":
        head = ["representative", "residues", "inverse_closed"]
        return head, [[c["representative"], " ".join(map(str, c["residues"])), c["inverse_closed"]] for c in res["cosets"]]
    if cmd == "enumerate":
        codes = res["codes"]
        keys = list(codes[0].keys()) if codes else ["support", "labels"]
        return keys, [[_cell(c[k]) for k in keys] for c in codes]
    if cmd == "audit":
        keys = list(res["rows"][0].keys())
        return keys, [[_cell(r[k]) for k in keys] for r in res["rows"]]
    flat = _flatten(res)
    return ["field", "value"], [[k, _cell(v)] for k, v in flat]


def _flatten(d: dict, prefix: str = "") -> list[tuple[str, object]]:
    out = []
    for k, v in d.items():
        if isinstance(v, dict):
            out.extend(_flatten(v, f"{prefix}{k}."))
        else:
            out.append((f"{prefix}{k}", v))
    return out


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, list):
        return " ".join(map(str, v))
    return str(v)


def _summary(report: dict) -> list[str]:
    res = report["results"]
    if report["command"] == "cosets":
        blocks = " ".join("{" + ",".join(f"C{r}" for r in b) + "}" for b in res["blocks"])
        return [f"t={res['t']}  t1={res['t1']}  blocks ({len(res['blocks'])}): {blocks}"]
    if report["command"] == "enumerate":
        return [f"{res['count']} nonzero LCD idempotents ({res['count_including_zero']} with zero), method={res['method']}"]
    return []


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    head, rows = _table_rows(report)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(head)
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    cells = [head] + [[_cell(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(head))]
    lines = []
    if report["group"]:
        lines.append(f"{report['command']}  group={report['group']['kind']}  order={report['group']['order']}")
    else:
        lines.append(report["command"])
    for i, r in enumerate(cells):
        lines.append("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    lines.extend(_summary(report))
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default="table")
    common.add_argument("--catalog", metavar="PATH", help="append one JSON line per enumerated code")

    parser = argparse.ArgumentParser(prog="lcdgc", description="Binary LCD group codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cosets", parents=[common], help="2-cyclotomic cosets mod odd n")
    p.add_argument("n", type=int)

    p = sub.add_parser("count", parents=[common], help="number of LCD cyclic group codes of odd length n")
    p.add_argument("n", type=int)

    p = sub.add_parser("enumerate", parents=[common], help="list every LCD idempotent of a group")
    p.add_argument("group")
    p.add_argument("--method", choices=METHODS)
    p.add_argument("--with-params", action="store_true", help="add [n, k, d], LCD checks and MDS flag")

    p = sub.add_parser("analyze", parents=[common], help="parameters of e F2[G] for one support")
    p.add_argument("group")
    p.add_argument("--support", required=True, help="comma-separated element indices, e.g. 0,4,5")

    p = sub.add_parser("audit", parents=[common], help="compare counting formulas with direct counts")
    p.add_argument("--max-n", type=int, default=27)
    return parser


def run(argv=None) -> tuple[dict, int, str]:
    args = build_parser().parse_args(argv)
    if args.command == "cosets":
        report, code = cmd_cosets(args.n)
    elif args.command == "count":
        report, code = cmd_count(args.n)
    elif args.command == "enumerate":
        report, code = cmd_enumerate(args.group, args.method, args.with_params, args.catalog)
    elif args.command == "analyze":
        report, code = cmd_analyze(args.group, args.support)
    else:
        report, code = cmd_audit(args.max_n)
    return report, code, args.format


def main(argv=None) -> int:
    try:
        report, code, fmt = run(argv)
    except CapacityError as exc:
        print(f"lcdgc: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"lcdgc: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(render(report, fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
