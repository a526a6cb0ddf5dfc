"""Command-line surface: parse, dispatch, report.

Verbs
-----
  group       root-datum summary (lattices, center, root count)
  cohomology  H^1..H^3 of the group, H^2/H^4 of the flag base, Chern classes
  twist       analyze a twist representative (cycle test, class, dual data)
  dualize     dual-bundle Chern data, optionally after a torsor shift
  langlands   two-sided Langlands T-duality verification
  extension   commutator map / fibrewise trivializability at a level
  contcheck   numerical curvature-constant table

Output is deterministic: the JSON rendering of a report is byte-identical
across runs for identical argv (text output is a rendering of the same
dictionary).  Exit codes: 0 success, 1 a --expect assertion failed, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import contcheck as cont
from . import flagcoh, loopext, tduality
from .errors import RequiresExplicitB, TdualError, Unavailable, UsageError
from .rootdata import (
    RootDatum,
    all_roots,
    basic_form,
    build,
    center,
    fundamental_group_of,
    named_group,
)
from .zlinalg import IntMatrix

SCHEMA = "tdual-lie/1"
VERBS = ("group", "cohomology", "twist", "dualize", "langlands", "extension", "contcheck")

CONVENTIONS = {
    "cartan": "cartan[i][j] = <alpha_i, alpha_j^vee>",
    "coordinates": "Cartan algebra in fundamental-coweight coordinates, its dual "
                   "in fundamental-weight coordinates",
    "integral_basis": "simple coroots when simply connected, fundamental coweights "
                      "when adjoint, Hermite basis otherwise",
    "character_basis": "dual basis of the integral-lattice basis",
    "invariant_form": "normalized so coroots of long roots have squared length 2; "
                      "the level multiplies the form",
    "twist": tduality.TWIST_BASIS_CONVENTION,
}


@dataclass(frozen=True)
class RunConfig:
    verb: str
    groups: tuple[str, ...]
    level: int
    twist_spec: str | None
    shift_spec: str | None
    b_spec: str | None
    expect: str | None
    fmt: str
    output: str | None
    grid: int


def _positive_grid(default: int) -> int:
    raw = os.environ.get("TDUAL_PRECISION")
    if raw is None:
        return default
    try:
        val = int(raw)
    except ValueError as exc:
        raise UsageError(f"TDUAL_PRECISION must be an integer, got {raw!r}") from exc
    if val < 16:
        raise UsageError("TDUAL_PRECISION must be at least 16")
    return val


def parse_args(argv) -> RunConfig:
    parser = argparse.ArgumentParser(
        prog="tdual",
        description="Topological T-duality data for compact semisimple Lie groups.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    needs_group = {}
    for verb in VERBS:
        p = sub.add_parser(verb)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", default=None)
        p.add_argument("--expect", default=None,
                       choices=("trivializable", "not-trivializable", "match",
                                "available", "dualizable", "cycle", "pass"))
        if verb != "contcheck":
            p.add_argument("--group", "-g", default=None,
                           help="named group, inline JSON, or @path to a JSON root datum")
            p.add_argument("--group-list", default=None,
                           help="comma-separated group specs (batch mode)")
            needs_group[verb] = True
        if verb in ("twist", "dualize"):
            p.add_argument("--twist", required=True,
                           help='twist spec: "langlands", "level:K", inline JSON matrix, or @path')
        if verb == "dualize":
            p.add_argument("--shift", default=None,
                           help="strictly upper-triangular integer matrix (JSON or @path)")
        if verb == "extension":
            p.add_argument("--level", type=int, default=1)
            p.add_argument("--b", default=None,
                           help="explicit commutator matrix of rationals (JSON or @path)")
        if verb == "contcheck":
            p.add_argument("--grid", type=int, default=None)

    ns = parser.parse_args(argv)
    groups: tuple[str, ...] = ()
    if needs_group.get(ns.verb):
        if ns.group and ns.group_list:
            raise UsageError("--group and --group-list are mutually exclusive")
        if ns.group:
            groups = (ns.group,)
        elif ns.group_list:
            groups = tuple(s.strip() for s in ns.group_list.split(",") if s.strip())
        if not groups:
            raise UsageError(f"verb {ns.verb!r} needs --group or --group-list")
    grid = ns.grid if getattr(ns, "grid", None) else _positive_grid(cont.DEFAULT_GRID)
    return RunConfig(
        verb=ns.verb,
        groups=groups,
        level=getattr(ns, "level", 1),
        twist_spec=getattr(ns, "twist", None),
        shift_spec=getattr(ns, "shift", None),
        b_spec=getattr(ns, "b", None),
        expect=ns.expect,
        fmt=ns.format,
        output=ns.output,
        grid=grid,
    )


# -- input parsing -----------------------------------------------------------


def _load_json(spec: str):
    text = spec
    if spec.startswith("@"):
        with open(spec[1:], "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {spec!r}: {exc}") from exc


def resolve_group(spec: str) -> RootDatum:
    if spec.startswith("{") or spec.startswith("@"):
        data = _load_json(spec)
        try:
            comps = [(c["series"], int(c["rank"])) for c in data["components"]]
        except (KeyError, TypeError) as exc:
            raise UsageError(f"root-datum JSON needs components[].series/.rank: {exc}") from exc
        fg = data.get("fundamental_group", "simply_connected")
        return build(comps, fg, label=data.get("label"))
    return named_group(spec)


def resolve_twist(rd: RootDatum, spec: str) -> tduality.TwistClass:
    if spec == "langlands":
        return tduality.langlands_twist(rd)
    if spec.startswith("level:"):
        try:
            level = int(spec.split(":", 1)[1])
        except ValueError as exc:
            raise UsageError(f"malformed level twist {spec!r}") from exc
        return tduality.level_twist(rd, level)
    rows = _load_json(spec)
    try:
        return tduality.TwistClass(rd, IntMatrix(rows))
    except (TdualError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed twist matrix {spec!r}: {exc}") from exc


def resolve_shift(spec: str) -> tduality.ShiftMatrix:
    rows = _load_json(spec)
    try:
        return tduality.ShiftMatrix.from_rows(rows)
    except (TdualError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed shift matrix {spec!r}: {exc}") from exc


# -- per-verb reports ---------------------------------------------------------


def _group_dict(g) -> dict:
    return {"free_rank": g.free_rank, "invariant_factors": list(g.torsion),
            "pretty": g.describe()}


def report_group(rd: RootDatum) -> dict:
    return {
        "group": rd.label,
        "components": [[s, r] for s, r in rd.components],
        "rank": rd.rank,
        "cartan": rd.cartan.tolist(),
        "simply_connected": rd.is_simply_connected(),
        "simply_laced": rd.is_simply_laced(),
        "integral_basis": rd.integral.basis.tolist(),
        "character_basis": rd.char_lattice().basis.tolist(),
        "center": _group_dict(center(rd)),
        "fundamental_group": _group_dict(fundamental_group_of(rd)),
        "root_count": len(all_roots(rd)),
    }


def report_cohomology(rd: RootDatum) -> dict:
    return flagcoh.cohomology(rd).as_dict()


def report_twist(rd: RootDatum, twist: tduality.TwistClass) -> dict:
    out = {
        "group": rd.label,
        "twist": twist.matrix.tolist(),
        "twist_is_cycle": twist.is_cycle(),
    }
    if out["twist_is_cycle"]:
        free, tors = twist.h3_class()
        out["h3_class"] = {"free": list(free), "torsion": list(tors)}
        out.update(tduality.dual_chern(twist).as_dict())
    dual_rep = flagcoh.dualizability_report(rd, twist.matrix)
    out["dualizable"] = dual_rep.dualizable
    out["dualizability_notes"] = list(dual_rep.notes)
    return out


def report_dualize(rd: RootDatum, twist: tduality.TwistClass,
                   shift: tduality.ShiftMatrix | None) -> dict:
    out = report_twist(rd, twist)
    if shift is not None and out["twist_is_cycle"]:
        moved = tduality.reduction_torsor_shift(twist, shift)
        out["shift"] = shift.entries.tolist()
        out["shifted"] = moved.as_dict()
    return out


def report_langlands(rd: RootDatum) -> dict:
    try:
        rep = tduality.verify_langlands_tdual(rd)
    except Unavailable as exc:
        return {
            "group": rd.label,
            "available": False,
            "match": None,
            "reason": str(exc),
            "evidence": _jsonable(exc.evidence),
        }
    return rep.as_dict()


def report_extension(rd: RootDatum, level: int, b_spec: str | None) -> dict:
    form = basic_form(rd, level)
    out: dict = {"group": rd.label, "level": level}
    try:
        if b_spec is not None:
            b = loopext.commutator_from_matrix(rd, _load_json(b_spec))
        else:
            b = loopext.commutator_from_level(rd, form)
    except RequiresExplicitB as exc:
        out["requires_explicit_b"] = True
        out["reason"] = str(exc)
        return out
    rep = loopext.fibrewise_trivializable(rd, form, b)
    out.update(rep.as_dict())
    out["lift"] = [[str(v) for v in row] for row in loopext.lift_commutator(b).matrix]
    out["admissibility"] = loopext.admissibility_check(rd, form, b).as_dict()
    return out


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# -- driving -------------------------------------------------------------------


_EXPECT_TESTS = {
    "trivializable": lambda r: r.get("trivializable") is True,
    "not-trivializable": lambda r: r.get("trivializable") is False,
    "match": lambda r: r.get("match") is True,
    "available": lambda r: r.get("available") is True,
    "dualizable": lambda r: r.get("dualizable") is True,
    "cycle": lambda r: r.get("twist_is_cycle") is True,
    "pass": lambda r: r.get("passed") is True,
}


def run(config: RunConfig) -> tuple[int, dict]:
    """Execute a parsed command; returns (exit code, report)."""
    reports = []
    if config.verb == "contcheck":
        reports.append(cont.continuum_summary(config.grid))
    else:
        for spec in config.groups:
            rd = resolve_group(spec)
            if config.verb == "group":
                reports.append(report_group(rd))
            elif config.verb == "cohomology":
                reports.append(report_cohomology(rd))
            elif config.verb in ("twist", "dualize"):
                shift = resolve_shift(config.shift_spec) if config.shift_spec else None
                try:
                    twist = resolve_twist(rd, config.twist_spec)
                except Unavailable as exc:
                    reports.append({"group": rd.label, "available": False,
                                    "reason": str(exc)})
                    continue
                if config.verb == "twist":
                    reports.append(report_twist(rd, twist))
                else:
                    reports.append(report_dualize(rd, twist, shift))
            elif config.verb == "langlands":
                reports.append(report_langlands(rd))
            elif config.verb == "extension":
                reports.append(report_extension(rd, config.level, config.b_spec))

    payload = {
        "schema": SCHEMA,
        "command": config.verb,
        "conventions": CONVENTIONS,
        "reports": reports,
    }
    code = 0
    if config.expect is not None:
        test = _EXPECT_TESTS[config.expect]
        if not all(test(r) for r in reports):
            payload["expect"] = {"asserted": config.expect, "satisfied": False}
            code = 1
        else:
            payload["expect"] = {"asserted": config.expect, "satisfied": True}
    return code, payload


def render_text(payload: dict) -> str:
    """Line rendering of the JSON payload (same data, human layout)."""
    lines = [f"# {payload['command']}  [{payload['schema']}]"]

    def emit(prefix, value):
        if isinstance(value, dict):
            for k in value:
                emit(f"{prefix}{k}.", value[k])
        elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            for i, v in enumerate(value):
                emit(f"{prefix}{i}.", v)
        else:
            lines.append(f"{prefix[:-1]}: {value}")

    for i, rep in enumerate(payload["reports"]):
        lines.append(f"-- report {i} --")
        emit("", rep)
    if "expect" in payload:
        emit("expect.", payload["expect"])
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    try:
        config = parse_args(argv if argv is not None else sys.argv[1:])
        code, payload = run(config)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except TdualError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if config.fmt == "json":
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        text = render_text(payload)
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
