"""Command line surface.

Examples::

    borelreg gens "(x1^6,x2^6)*(x1^7,x2^7,x3^7)"
    borelreg reg "sbt(x2^6*x3^7)" --method chain
    borelreg reg "(x1^3,x2^2)" --method auto --format json
    borelreg chain "sbt(x2^6*x3^7)"
    borelreg socle "(x1^3,x2^2)"
    borelreg check "(x1^3,x2^2)" --borel-type --sbt
    borelreg decomp 17 "1|2|4|12"
    borelreg gamma "x2^7,x3^10,x5^17" "1|2|4|12" --q 2

Exit codes: 0 success, 1 usage, 2 expression syntax error, 3 violated
mathematical precondition (non-artinian socle, non-Borel-type chain, ...),
4 internal scan bound exceeded, 5 method disagreement under ``--strict``.

Reports carry every computed method with its value, pairwise agreement
flags, and discrepancy notes; published worked examples whose printed
values disagree with the enumeration are flagged from the audit catalog.
Output is plain text (never colored) or JSON conforming to the shipped
``schema.json``.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from typing import Any

from . import audit, borel, dfixed, oracle
from .dseq import DSequence, d_decompose
from .errors import (
    AmbientMismatchError,
    BoundExceededError,
    DomainError,
    ParseError,
)
from .exprs import (
    DFixedPowers,
    DFixedPrincipal,
    Sbt,
    evaluate,
    parse,
    print_expr,
)
from .ideals import MonomialIdeal, is_artinian, is_stable
from .monomials import Monomial

_REG_METHODS = ("chain", "truncation", "socle", "sbt-formula", "chi-formula")


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); usage errors are 1
        raise _UsageError(message)


def _report(command: str, input_text: str, ambient: int | None) -> dict[str, Any]:
    return {
        "command": command,
        "input": input_text,
        "ambient": ambient,
        "results": [],
        "agreements": [],
        "discrepancy_notes": [],
    }


def _attach_known_notes(report: dict, ideal: MonomialIdeal, expr=None):
    notes = audit.known_notes(ideal)
    if isinstance(expr, DFixedPowers):
        extra = audit.powers_equality_note(expr.pairs, expr.dseq)
        if extra:
            notes.append(extra)
    for note in notes:
        if note not in report["discrepancy_notes"]:
            report["discrepancy_notes"].append(note)


def _eval_input(args) -> tuple[Any, MonomialIdeal]:
    text = args.expr
    if text == "-":
        text = sys.stdin.read().strip()
    expr = parse(text)
    ideal = evaluate(expr, ambient=args.vars)
    return expr, ideal


def _reg_by_method(method: str, expr, ideal: MonomialIdeal) -> dict[str, Any]:
    if method == "chain":
        chain = borel.sequential_chain(ideal)
        if not ideal.is_proper:
            raise DomainError("regularity requires a proper nonzero ideal")
        tops = [s for s in chain.top_degrees if s is not None]
        if not tops:
            raise DomainError("every chain section was saturated")
        return {
            "method": "chain",
            "value": max(tops) + 1,
            "witnesses": [{"section_top_degrees": list(chain.top_degrees)}],
        }
    if method == "truncation":
        return {"method": "truncation", "value": borel.reg_truncation(ideal)}
    if method == "socle":
        if is_artinian(ideal):
            report = oracle.socle_oracle(ideal)
            return {
                "method": "socle",
                "value": report.reg,
                "witnesses": [{"max_socle_degree": report.max_degree}],
            }
        if not borel.is_borel_type(ideal):
            raise DomainError(
                "socle method requires an artinian or Borel-type ideal"
            )
        return {"method": "socle", "value": oracle.reg_enumerative(ideal)}
    if method in ("sbt-formula", "chi-formula") and isinstance(expr, Sbt):
        u = Monomial.from_powers(ideal.ambient, dict(expr.monomial))
        table = borel.chi_table(u)
        return {
            "method": method,
            "value": table.regularity,
            "witnesses": [
                {
                    "label": "formula (as printed)",
                    "chi": list(table.chi),
                    "rows": [
                        {"q": r.q, "f": r.f, "total": r.total}
                        for r in table.rows
                    ],
                }
            ],
        }
    if method == "chi-formula" and isinstance(expr, DFixedPowers):
        spec = dfixed.normalize_spec(expr.pairs, expr.dseq)
        if spec.ambient != ideal.ambient:
            raise DomainError(
                "chi formula needs the last power variable to be the last"
                " ring variable"
            )
        chi = dfixed.chi_sequence(spec)
        return {
            "method": "chi-formula",
            "value": sum(chi) + 1,
            "witnesses": [{"chi": list(chi), "max_socle_degree": sum(chi)}],
        }
    if method == "chi-formula" and isinstance(expr, DFixedPrincipal):
        if expr.variable != ideal.ambient:
            raise DomainError(
                "chi formula needs the power variable to be the last ring"
                " variable"
            )
        value = dfixed.reg_principal_d_fixed(
            ideal.ambient, expr.exponent, expr.dseq
        )
        return {"method": "chi-formula", "value": value}
    raise DomainError(f"method {method} does not apply to this input")


def _cmd_reg(args) -> dict[str, Any]:
    expr, ideal = _eval_input(args)
    report = _report("reg", print_expr(expr), ideal.ambient)
    if args.method == "auto":
        methods = ["chain", "truncation", "socle", "chi-formula"]
    else:
        methods = [args.method]
    skipped_all = True
    for method in methods:
        try:
            entry = _reg_by_method(method, expr, ideal)
        except DomainError:
            if args.method != "auto":
                raise
            continue
        skipped_all = False
        report["results"].append(entry)
    if skipped_all:
        raise DomainError("no regularity method applies to this input")
    values = [
        (r["method"], r["value"]) for r in report["results"] if r["value"] is not None
    ]
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            report["agreements"].append(
                {
                    "a": values[i][0],
                    "b": values[j][0],
                    "equal": values[i][1] == values[j][1],
                }
            )
    enumerative = {m: v for m, v in values if m in ("chain", "truncation", "socle")}
    formula = {m: v for m, v in values if m.endswith("formula")}
    for fm, fv in formula.items():
        for em, ev in enumerative.items():
            if fv != ev:
                note = (
                    f"{fm} (as printed) gives {fv} but the enumerative"
                    f" {em} value is {ev}; chain/truncation/socle are"
                    " authoritative"
                )
                if note not in report["discrepancy_notes"]:
                    report["discrepancy_notes"].append(note)
    _attach_known_notes(report, ideal, expr)
    return report


def _cmd_gens(args) -> dict[str, Any]:
    expr, ideal = _eval_input(args)
    report = _report("gens", print_expr(expr), ideal.ambient)
    report["results"].append(
        {
            "method": "minimal-generators",
            "value": [str(g) for g in ideal.generators],
        }
    )
    _attach_known_notes(report, ideal, expr)
    return report


def _cmd_chain(args) -> dict[str, Any]:
    expr, ideal = _eval_input(args)
    chain = borel.sequential_chain(ideal)
    report = _report("chain", print_expr(expr), ideal.ambient)
    rows = []
    for ell, step in enumerate(chain.steps):
        rows.append(
            {
                "step": ell,
                "top_variable": step.top_variable,
                "section": [str(g) for g in step.section.generators],
                "saturation": [
                    str(g) for g in step.section_saturation.generators
                ],
                "top_degree": step.top_degree,
            }
        )
    report["results"].append({"method": "sequential-chain", "value": rows})
    _attach_known_notes(report, ideal, expr)
    return report


def _cmd_socle(args) -> dict[str, Any]:
    expr, ideal = _eval_input(args)
    if not is_artinian(ideal):
        raise DomainError("socle report requires an artinian ideal")
    socle = oracle.socle_oracle(ideal)
    report = _report("socle", print_expr(expr), ideal.ambient)
    report["results"].append(
        {
            "method": "socle-enumeration",
            "value": {
                "socle_monomials": [str(u) for u in socle.socle_monomials],
                "max_degree": socle.max_degree,
                "reg": socle.reg,
            },
        }
    )
    _attach_known_notes(report, ideal, expr)
    return report


def _cmd_check(args) -> dict[str, Any]:
    expr, ideal = _eval_input(args)
    report = _report("check", print_expr(expr), ideal.ambient)
    ran = False
    if args.borel_type:
        ran = True
        j = borel.borel_violation(ideal)
        report["results"].append(
            {
                "method": "borel-type",
                "value": j is None,
                "witnesses": []
                if j is None
                else [f"saturations differ at variable x{j}"],
            }
        )
    if args.sbt:
        ran = True
        witness = borel.sbt_violation(ideal)
        entry = {"method": "sbt", "value": witness is None, "witnesses": []}
        if witness is not None:
            u, j, i = witness
            entry["witnesses"] = [f"u={u}, j={j}, i={i}: no exchange witness"]
        report["results"].append(entry)
    if args.stable:
        ran = True
        report["results"].append(
            {"method": "stable", "value": is_stable(ideal), "witnesses": []}
        )
    if args.dfixed is not None:
        ran = True
        d = _parse_dseq_arg(args.dfixed)
        witness = dfixed.d_fixed_violation(ideal, d)
        entry = {
            "method": f"dfixed {d}",
            "value": witness is None,
            "witnesses": [],
        }
        if witness is not None:
            u, j, i, t = witness
            entry["witnesses"] = [f"u={u}, j={j}, i={i}, t={t}: exchange leaves the ideal"]
        report["results"].append(entry)
    if not ran:
        raise _UsageError(
            "check needs at least one of --borel-type --sbt --stable --dfixed D"
        )
    _attach_known_notes(report, ideal, expr)
    return report


def _parse_dseq_arg(text: str) -> DSequence:
    try:
        return DSequence.parse(text)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None


def _cmd_decomp(args) -> dict[str, Any]:
    d = _parse_dseq_arg(args.dseq)
    if args.value < 0:
        raise DomainError("cannot decompose a negative integer")
    decomposition = d_decompose(args.value, d)
    report = _report("decomp", f"{args.value} over {d}", None)
    report["results"].append(
        {"method": "d-decomposition", "value": list(decomposition.coefficients)}
    )
    return report


def _parse_power_list(text: str) -> tuple[tuple[int, int], ...]:
    expr = parse(f"dfix({text};1|2)")
    assert isinstance(expr, DFixedPowers)
    return expr.pairs


def _cmd_gamma(args) -> dict[str, Any]:
    d = _parse_dseq_arg(args.dseq)
    pairs = _parse_power_list(args.powers)
    spec = dfixed.normalize_spec(pairs, d)
    family = dfixed.gamma_families(spec, args.q)
    report = _report(
        "gamma", f"{args.powers} over {d}", spec.ambient
    )
    report["results"].append(
        {
            "method": f"gamma-family q={args.q}",
            "value": [list(t) for t in family.tuples],
        }
    )
    carrying = [
        t
        for t in family.tuples
        if not dfixed.gamma_tuple_is_additive(spec, args.q, t)
    ]
    if carrying:
        report["discrepancy_notes"].append(
            "tuples whose blockwise digits do not add up to the digits of"
            f" the target exponent describe no generators: {carrying};"
            " the published splitting conditions admit them, the ideal"
            " decomposition does not"
        )
    return report


def render_text(report: dict[str, Any]) -> str:
    lines = [
        f"command: {report['command']}",
        f"input:   {report['input']}",
        f"ambient: {report['ambient']}",
    ]
    for entry in report["results"]:
        lines.append(f"[{entry['method']}]")
        value = entry["value"]
        if isinstance(value, list) and value and isinstance(value[0], dict):
            for row in value:
                lines.append(
                    "  " + "  ".join(f"{k}={v}" for k, v in row.items())
                )
        elif isinstance(value, dict):
            for k, v in value.items():
                lines.append(f"  {k}: {v}")
        else:
            lines.append(f"  value: {value}")
        for w in entry.get("witnesses", []):
            lines.append(f"  witness: {w}")
    if report["agreements"]:
        for a in report["agreements"]:
            mark = "==" if a["equal"] else "!="
            lines.append(f"agreement: {a['a']} {mark} {a['b']}")
    for note in report["discrepancy_notes"]:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def load_schema() -> dict[str, Any]:
    with resources.files("borelreg").joinpath("schema.json").open() as fh:
        return json.load(fh)


def validate_report(report: Any, schema: dict[str, Any] | None = None) -> list[str]:
    """Check a report against the shipped schema (subset of JSON Schema:
    type / required / properties / items).  Returns a list of problems,
    empty when the document conforms."""
    schema = schema or load_schema()
    problems: list[str] = []

    def check(value, node, path):
        types = node.get("type")
        if types is not None:
            allowed = types if isinstance(types, list) else [types]
            kind = {
                type(None): "null",
                bool: "boolean",
                int: "integer",
                float: "number",
                str: "string",
                list: "array",
                dict: "object",
            }.get(type(value))
            if kind == "integer" and "number" in allowed:
                kind = "number"
            if kind not in allowed:
                problems.append(f"{path}: expected {allowed}, got {kind}")
                return
        if isinstance(value, dict):
            for key in node.get("required", []):
                if key not in value:
                    problems.append(f"{path}: missing required key {key!r}")
            for key, sub in node.get("properties", {}).items():
                if key in value:
                    check(value[key], sub, f"{path}.{key}")
        if isinstance(value, list) and "items" in node:
            for i, item in enumerate(value):
                check(item, node["items"], f"{path}[{i}]")

    check(report, schema, "$")
    return problems


def build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="borelreg",
        description="Regularity of Borel-type and d-fixed monomial ideals,"
        " with enumerative cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--vars", type=int, default=None, help="ambient variable count")
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )
        p.add_argument(
            "--strict",
            action="store_true",
            help="exit 5 when computed methods disagree",
        )

    p = sub.add_parser("gens", help="minimal generators")
    p.add_argument("expr")
    common(p)

    p = sub.add_parser("reg", help="Castelnuovo-Mumford regularity")
    p.add_argument("expr")
    p.add_argument(
        "--method", choices=("auto",) + _REG_METHODS, default="auto"
    )
    common(p)

    p = sub.add_parser("chain", help="sequential chain table")
    p.add_argument("expr")
    common(p)

    p = sub.add_parser("socle", help="socle enumeration (artinian only)")
    p.add_argument("expr")
    common(p)

    p = sub.add_parser("check", help="classification checks")
    p.add_argument("expr")
    p.add_argument("--borel-type", action="store_true")
    p.add_argument("--sbt", action="store_true")
    p.add_argument("--stable", action="store_true")
    p.add_argument("--dfixed", metavar="D", default=None)
    common(p)

    p = sub.add_parser("decomp", help="d-decomposition of an integer")
    p.add_argument("value", type=int)
    p.add_argument("dseq")
    common(p)

    p = sub.add_parser("gamma", help="gamma splitting families")
    p.add_argument("powers", help='power list like "x2^7,x3^10,x5^17"')
    p.add_argument("dseq")
    p.add_argument("--q", type=int, required=True)
    common(p)

    return parser


_COMMANDS = {
    "gens": _cmd_gens,
    "reg": _cmd_reg,
    "chain": _cmd_chain,
    "socle": _cmd_socle,
    "check": _cmd_check,
    "decomp": _cmd_decomp,
    "gamma": _cmd_gamma,
}


def _fail(args, kind: str, message: str, code: int) -> int:
    print(f"{kind} error: {message}", file=sys.stderr)
    if getattr(args, "format", "text") == "json":
        print(json.dumps({"error": {"kind": kind, "message": message}}))
    return code


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        report = _COMMANDS[args.command](args)
    except _UsageError as exc:
        return _fail(args, "usage", str(exc), 1)
    except ParseError as exc:
        return _fail(args, "syntax", str(exc), 2)
    except (DomainError, AmbientMismatchError) as exc:
        return _fail(args, "domain", str(exc), 3)
    except BoundExceededError as exc:
        return _fail(args, "bound", str(exc), 4)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))
    if args.strict and any(not a["equal"] for a in report["agreements"]):
        return 5
    return 0


if __name__ == "__main__":
    sys.exit(main())
