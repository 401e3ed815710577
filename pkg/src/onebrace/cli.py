"""Command-line front end.

Every command emits one JSON (or CSV) document.  Exit codes: 0 all checks
passed, 1 a check failed, 2 the input was malformed or unsupported.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from . import series as series_mod
from .core import (
    Brace,
    CheckReport,
    Exhaustive,
    Sampled,
    UnsupportedStrategy,
    check_A3_identities,
    check_brace_axioms,
    check_lemma_identities,
    group_power,
    multiple,
    power_closed_form,
)
from .finite import (
    FAMILIES,
    AxiomViolation,
    BraceSpecError,
    CayleyBrace,
    QuotientSpec,
    build_quotient,
    build_trivial_cyclic,
    load_brace,
)
from .free import FreeBrace, generator_sequence
from .ybe import YbeMap, check_all, derive_solution

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    spec: str | None = None
    family: str | None = None
    modulus: int | None = None
    int_range: tuple[int, int] | None = None
    strategy: str | None = None
    samples: int = 10_000
    seed: int = 0
    max_depth: int = series_mod.DEFAULT_MAX_DEPTH
    out: str | None = None
    fmt: str = "json"
    elements: tuple[str, ...] = ()
    export: str | None = None
    timing: bool = False

    def brace_descriptor(self) -> dict[str, Any]:
        if self.spec:
            return {"spec": self.spec}
        return {"kind": self.family, "modulus": self.modulus}

    def resolve_strategy(self, brace: Brace):
        if self.strategy == "sampled" or (self.strategy is None and not brace.is_finite):
            return Sampled(self.samples, self.seed)
        if not brace.is_finite:
            raise InputError(f"exhaustive strategy needs a finite brace; {brace.name} is infinite")
        return Exhaustive()


# ---------------------------------------------------------------- helpers


def jsonable(x):
    if isinstance(x, tuple):
        return [jsonable(e) for e in x]
    if isinstance(x, list):
        return [jsonable(e) for e in x]
    if isinstance(x, dict):
        return {k: jsonable(v) for k, v in x.items()}
    if hasattr(x, "item"):  # numpy scalar
        return x.item()
    return x


def report_dict(rep: CheckReport, timing: bool = False) -> dict[str, Any]:
    d = {
        "name": rep.name,
        "status": rep.status,
        "identity": rep.identity,
        "witness": jsonable(rep.witness),
        "examined": rep.examined,
        "seed": rep.seed,
    }
    if rep.detail:
        d["detail"] = rep.detail
    if timing:
        d["elapsed_s"] = rep.elapsed
    return d


def _timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    reps = fn(*args, **kwargs)
    dt = (time.perf_counter() - t0) / max(len(reps), 1)
    for r in reps:
        r.elapsed = round(dt, 6)
    return reps


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like A..B, got {text!r}") from None


def _read_doc(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def load_config_brace(cfg: RunConfig) -> Brace:
    """Brace from ``--spec`` or ``--family/--modulus``; AxiomViolation propagates."""
    if cfg.spec:
        doc = _read_doc(cfg.spec)
    elif cfg.family:
        doc = {"kind": cfg.family}
        if cfg.modulus is not None:
            doc["modulus"] = cfg.modulus
    else:
        raise InputError("give --spec PATH or --family NAME")
    try:
        return load_brace(doc)
    except BraceSpecError as exc:
        raise InputError(str(exc)) from None


def parse_element(brace: Brace, token: str):
    candidates = [token]
    try:
        v = json.loads(token)
        candidates.append(tuple(v) if isinstance(v, list) else v)
    except json.JSONDecodeError:
        pass
    try:
        parts = tuple(int(s) for s in token.split(","))
        candidates += [parts, parts[0]] if len(parts) == 1 else [parts]
    except ValueError:
        pass
    for c in candidates:
        if brace.contains(c):
            return brace.coerce(c) if isinstance(brace, FreeBrace) else c
    raise InputError(f"{token!r} is not an element of {brace.name}")


def default_generator(brace: Brace):
    if isinstance(brace, FreeBrace):
        return brace.generator()
    for g in ((1, 0, 0), (1, 0), 1):
        if brace.contains(g):
            return g
    raise InputError("no default generator for this brace; pass --element")


def _base(cfg: RunConfig) -> dict[str, Any]:
    return {"command": cfg.command, "brace": cfg.brace_descriptor()}


def _strategy_dict(strategy) -> dict[str, Any]:
    if isinstance(strategy, Sampled):
        return {"kind": "sampled", "samples": strategy.count, "seed": strategy.seed,
                "bound": strategy.bound}
    return {"kind": "exhaustive"}


def _violation_doc(cfg: RunConfig, exc: AxiomViolation) -> dict[str, Any]:
    doc = _base(cfg)
    doc["status"] = "fail"
    doc["error"] = type(exc).__name__
    doc["message"] = str(exc)
    doc["checks"] = [report_dict(exc.report, cfg.timing)]
    return doc


def _status(checks: list[CheckReport]) -> str:
    return "pass" if all(c.passed for c in checks) else "fail"


# ---------------------------------------------------------------- commands


def cmd_verify(cfg: RunConfig) -> tuple[int, dict]:
    try:
        brace = load_config_brace(cfg)
    except AxiomViolation as exc:
        return EXIT_FAIL, _violation_doc(cfg, exc)
    strategy = cfg.resolve_strategy(brace)
    lo, hi = cfg.int_range or (-6, 6)
    checks = _timed(check_brace_axioms, brace, strategy)
    checks += _timed(check_lemma_identities, brace, strategy)
    doc = _base(cfg)
    doc["strategy"] = _strategy_dict(strategy)
    if brace.is_finite:
        doc["order"] = brace.order()
        left = series_mod.left_series(brace, 3)
        a3_zero = any(stage.is_zero for stage in left)
        doc["a3_zero"] = a3_zero
        if a3_zero:
            square = left[1].elements() if len(left) > 1 else [brace.zero]
            checks += _timed(check_A3_identities, brace, range(lo, hi + 1), strategy, square)
    else:
        doc["a3_zero"] = True
        checks += _timed(check_A3_identities, brace, range(lo, hi + 1), strategy)
    doc["status"] = _status(checks)
    doc["checks"] = [report_dict(c, cfg.timing) for c in checks]
    return (EXIT_OK if doc["status"] == "pass" else EXIT_FAIL), doc


def _finite(cfg: RunConfig) -> CayleyBrace:
    brace = load_config_brace(cfg)
    if not brace.is_finite:
        raise InputError(f"{cfg.command} needs a finite brace; {brace.name} is infinite")
    return brace


def cmd_series(cfg: RunConfig) -> tuple[int, dict]:
    try:
        brace = _finite(cfg)
    except AxiomViolation as exc:
        return EXIT_FAIL, _violation_doc(cfg, exc)
    rep = series_mod.series_report(brace, cfg.max_depth)
    doc = _base(cfg)
    doc["order"] = brace.order()
    doc.update(rep.to_dict())
    return EXIT_OK, doc


def cmd_ybe(cfg: RunConfig) -> tuple[int, dict]:
    doc = _base(cfg)
    solution_doc = _read_doc(cfg.spec) if cfg.spec else None
    if solution_doc is not None and isinstance(solution_doc, dict) and "r" in solution_doc:
        try:
            r = YbeMap.from_document(solution_doc)
        except BraceSpecError as exc:
            raise InputError(str(exc)) from None
        doc["source"] = "solution"
    else:
        try:
            brace = _finite(cfg)
        except AxiomViolation as exc:
            return EXIT_FAIL, _violation_doc(cfg, exc)
        r = derive_solution(brace)
        doc["source"] = "brace"
    checks = _timed(check_all, r)
    doc["carrier_size"] = len(r.carrier)
    doc["status"] = _status(checks)
    doc["checks"] = [report_dict(c, cfg.timing) for c in checks]
    if cfg.export:
        Path(cfg.export).write_text(json.dumps(jsonable(r.to_document(checks)), indent=1) + "\n")
    return (EXIT_OK if doc["status"] == "pass" else EXIT_FAIL), doc


def _classify_row(family: str, m: int, max_depth: int) -> dict[str, Any]:
    row: dict[str, Any] = {"modulus": m}
    try:
        if family == "trivial_cyclic":
            brace = build_trivial_cyclic(m)
        else:
            brace = build_quotient(QuotientSpec(family.split("_")[1], m))
    except AxiomViolation as exc:
        row.update(order=None, legal=False, ns_class=None, generator_vanishes_at=None,
                   reason=str(exc), witness=jsonable(exc.report.witness))
        return row
    except BraceSpecError as exc:
        row.update(order=None, legal=False, ns_class=None, generator_vanishes_at=None,
                   reason=str(exc), witness=None)
        return row
    cls = series_mod.classify_NS(brace, max_depth)
    gen = default_generator(brace) if brace.order() > 1 else brace.zero
    seq = generator_sequence(brace, gen, max_depth)
    row.update(order=brace.order(), legal=True, ns_class=list(cls) if cls else None,
               generator_vanishes_at=seq.vanishing_index(brace.zero), reason=None, witness=None)
    return row


def cmd_classify(cfg: RunConfig) -> tuple[int, dict]:
    if cfg.family not in ("quotient_d2", "quotient_d3", "trivial_cyclic"):
        raise InputError("classify needs --family quotient_d2, quotient_d3 or trivial_cyclic")
    if cfg.int_range is None:
        raise InputError("classify needs --range A..B")
    lo, hi = cfg.int_range
    doc = {"command": "classify", "family": cfg.family, "range": [lo, hi]}
    doc["rows"] = [_classify_row(cfg.family, m, cfg.max_depth) for m in range(lo, hi + 1)]
    return EXIT_OK, doc


def cmd_closure(cfg: RunConfig) -> tuple[int, dict]:
    try:
        brace = _finite(cfg)
    except AxiomViolation as exc:
        return EXIT_FAIL, _violation_doc(cfg, exc)
    gens = [parse_element(brace, t) for t in cfg.elements]
    members = series_mod.subbrace_closure(brace, gens)
    ordered = [e for e in brace.elements() if e in members]
    doc = _base(cfg)
    doc.update(order=brace.order(), generators=jsonable(gens), closure_size=len(ordered),
               is_whole=len(ordered) == brace.order(), closure=jsonable(ordered))
    return EXIT_OK, doc


def cmd_power_table(cfg: RunConfig) -> tuple[int, dict]:
    try:
        brace = load_config_brace(cfg)
    except AxiomViolation as exc:
        return EXIT_FAIL, _violation_doc(cfg, exc)
    a = parse_element(brace, cfg.elements[0]) if cfg.elements else default_generator(brace)
    lo, hi = cfg.int_range or (-6, 6)
    rows = []
    for m in range(lo, hi + 1):
        closed = power_closed_form(brace, a, m)
        oracle = group_power(brace, a, m)
        rows.append({"m": m, "closed_form": jsonable(closed), "repeated_product": jsonable(oracle),
                     "multiple": jsonable(multiple(brace, m, a)), "agree": closed == oracle})
    doc = _base(cfg)
    doc.update(element=jsonable(a), rows=rows,
               status="pass" if all(r["agree"] for r in rows) else "fail")
    return (EXIT_OK if doc["status"] == "pass" else EXIT_FAIL), doc


COMMANDS = {
    "verify": cmd_verify,
    "series": cmd_series,
    "ybe": cmd_ybe,
    "classify": cmd_classify,
    "closure": cmd_closure,
    "power-table": cmd_power_table,
}


# ---------------------------------------------------------------- output


def to_csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "checks" in doc:
        w.writerow(["command", "name", "status", "identity", "witness", "examined", "seed"])
        for c in doc["checks"]:
            w.writerow([doc["command"], c["name"], c["status"], c["identity"],
                        json.dumps(c["witness"]), c["examined"], c["seed"]])
    elif "rows" in doc:
        keys = list(doc["rows"][0]) if doc["rows"] else ["modulus"]
        w.writerow(keys)
        for row in doc["rows"]:
            w.writerow([json.dumps(row[k]) if isinstance(row[k], (list, dict)) else row[k]
                        for k in keys])
    elif "left_stage_sizes" in doc:
        w.writerow(["series", "stage", "size"])
        for label, key in (("left", "left_stage_sizes"), ("star", "star_stage_sizes")):
            for i, size in enumerate(doc[key], start=1):
                w.writerow([label, i, size])
    else:
        w.writerow(["key", "value"])
        for k, v in doc.items():
            w.writerow([k, json.dumps(v)])
    return buf.getvalue()


def render(doc: dict, fmt: str) -> str:
    if fmt == "csv":
        return to_csv(doc)
    return json.dumps(jsonable(doc), indent=2) + "\n"


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", metavar="PATH", help="brace-spec JSON document")
    common.add_argument("--family", choices=FAMILIES[:-1], help="built-in brace family")
    common.add_argument("--modulus", type=int, metavar="N")
    common.add_argument("--range", dest="int_range", type=parse_range, metavar="A..B",
                        help="inclusive integer range; write --range=-5..5 for negatives")
    common.add_argument("--strategy", choices=("exhaustive", "sampled"))
    common.add_argument("--samples", type=int, default=10_000, metavar="N")
    common.add_argument("--seed", type=int, default=0, metavar="N")
    common.add_argument("--max-depth", type=int, default=series_mod.DEFAULT_MAX_DEPTH, metavar="N")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    common.add_argument("--timing", action="store_true",
                        help="add wall-clock times (reports are then not reproducible)")

    parser = argparse.ArgumentParser(prog="onebrace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="axioms, general identities, A^3 identities")
    sub.add_parser("series", parents=[common], help="left and star series, N_S class")
    p = sub.add_parser("ybe", parents=[common], help="derived Yang-Baxter map and its checks")
    p.add_argument("--export", metavar="PATH", help="write the solution document")
    sub.add_parser("classify", parents=[common], help="N_S class over a range of moduli")
    p = sub.add_parser("closure", parents=[common], help="subbrace generated by elements")
    p.add_argument("--element", dest="elements", action="append", default=[], metavar="X")
    p = sub.add_parser("power-table", parents=[common], help="a^m closed form vs repeated product")
    p.add_argument("--element", dest="elements", action="append", default=[], metavar="X")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    cfg.elements = tuple(getattr(args, "elements", ()) or ())
    try:
        code, doc = COMMANDS[cfg.command](cfg)
    except (InputError, UnsupportedStrategy, BraceSpecError) as exc:
        print(f"onebrace {cfg.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = render(doc, cfg.fmt)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
