"""Command-line front end.

    toricface <command> FAN.json [--field q] [--field fp:2] [--box 4] [--format json]

A fan document is a JSON object with ``ambient_dim``, ``rays`` and
``maximal_cones`` (ray-index lists, or lists of inline vectors) and an optional
``name``.  Exit status: 0 when every requested check completed, 1 on an input
error, 2 when a search ran out of budget (unless ``--lenient``).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable

from . import report
from .config import AnalysisConfig
from .errors import InputError, NotAFan, NotPointed, ParseError, SearchBudgetExceeded
from .fan import Fan, build_fan
from .geometry import BoxSpec, cone_from_generators
from .homology import FieldSpec, cohomology_profile
from .ring import (
    canonical_ideal_subfan, gorenstein_check, is_cohen_macaulay, is_euler_fan, local_cohomology_hilbert,
    manifold_boundary_duality_check, omega_hilbert,
)
from .shelling import clean_consequence_check, cleanness_check, semishellability_check, shellability_search

COMMANDS = (
    "validate", "analyze", "cohomology", "omega", "localcoh", "gorenstein", "canonical-ideal",
    "boundary-duality", "shelling", "semishelling", "clean", "all",
)


# --- input ------------------------------------------------------------------------------------


def _int_vector(value, d: int, locus: str) -> tuple[int, ...]:
    if not isinstance(value, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in value):
        raise ParseError("expected a list of integers", locus)
    if len(value) != d:
        raise ParseError(f"expected {d} coordinates, got {len(value)}", locus)
    if not any(value):
        raise ParseError("the zero vector does not span a ray", locus)
    return tuple(value)


def parse_fan(text: str) -> Fan:
    """Parse and validate a fan document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"line {e.lineno}, column {e.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("a fan document must be a JSON object", "document")
    for key in ("ambient_dim", "maximal_cones"):
        if key not in doc:
            raise ParseError("missing field", key)
    unknown = set(doc) - {"ambient_dim", "rays", "maximal_cones", "name"}
    if unknown:
        raise ParseError(f"unknown field(s) {sorted(unknown)}", "document")
    d = doc["ambient_dim"]
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ParseError("must be a positive integer", "ambient_dim")
    raw_rays = doc.get("rays", [])
    if not isinstance(raw_rays, list):
        raise ParseError("must be a list", "rays")
    rays = [_int_vector(r, d, f"rays[{i}]") for i, r in enumerate(raw_rays)]
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("must be a string", "name")
    if not isinstance(doc["maximal_cones"], list):
        raise ParseError("must be a list", "maximal_cones")
    cones = []
    for i, entry in enumerate(doc["maximal_cones"]):
        locus = f"maximal_cones[{i}]"
        if not isinstance(entry, list):
            raise ParseError("expected a list of ray indices or vectors", locus)
        gens = []
        for j, item in enumerate(entry):
            if isinstance(item, list):
                gens.append(_int_vector(item, d, f"{locus}[{j}]"))
            elif isinstance(item, int) and not isinstance(item, bool):
                if not 0 <= item < len(rays):
                    raise ParseError(f"ray index {item} out of range", f"{locus}[{j}]")
                gens.append(rays[item])
            else:
                raise ParseError("expected a ray index or an integer vector", f"{locus}[{j}]")
        try:
            cones.append(cone_from_generators(gens, d))
        except NotPointed as e:
            raise NotPointed(f"{locus}: {e}") from None
    return build_fan(cones, d, name)


# --- commands ---------------------------------------------------------------------------------


class _Run:
    """Collects results, caveats and the Unknown flag for one command."""

    def __init__(self, fan: Fan, cfg: AnalysisConfig, degree: int | None):
        self.fan = fan
        self.cfg = cfg
        self.degree = degree
        self.caveats: list[str] = []
        self.unknown = False

    def per_field(self, fn: Callable) -> dict:
        return {str(k): fn(k) for k in self.cfg.fields}

    def searched(self, label: str, fn: Callable) -> dict:
        try:
            return fn()
        except SearchBudgetExceeded as e:
            self.unknown = True
            return report.unknown(f"{label}: {e}")

    def note_box(self, label: str, doc: dict) -> dict:
        if doc.get("box_qualified") or doc.get("verdict") in ("Gorenstein", "Clean"):
            self.caveats.append(report.caveat_for(label, self.cfg.box))
        return doc

    # individual checks

    def cm_gate(self, k: FieldSpec) -> dict | None:
        res = is_cohen_macaulay(self.fan, k)
        return None if res else report.cm(res, self.fan)

    def cohomology(self, k):
        return [
            {"cone": report.cone_entry(self.fan, c)} | report.graded(h)
            for c, h in cohomology_profile(self.fan, k).items()
        ]

    def omega(self, k):
        return self.cm_gate(k) or report.hilbert_slice(omega_hilbert(self.fan, k, self.cfg.box))

    def localcoh(self, k):
        i = self.fan.dim if self.degree is None else self.degree
        return {"degree": i} | report.hilbert_slice(local_cohomology_hilbert(self.fan, k, i, self.cfg.box))

    def gorenstein(self, k):
        return self.cm_gate(k) or self.note_box(f"gorenstein[{k}]", report.gorenstein(
            gorenstein_check(self.fan, k, self.cfg.box)))

    def canonical(self, k):
        return self.cm_gate(k) or report.canonical(canonical_ideal_subfan(self.fan, k))

    def duality(self, k):
        return self.cm_gate(k) or report.duality(manifold_boundary_duality_check(self.fan, k))

    def analyze(self, k):
        return {
            "cohen_macaulay": report.cm(is_cohen_macaulay(self.fan, k), self.fan),
            "euler": report.euler(is_euler_fan(self.fan)),
            "gorenstein": self.gorenstein(k),
            "canonical_ideal": self.canonical(k),
        }

    def shelling(self):
        return self.searched("shelling", lambda: report.shelling(shellability_search(self.fan, self.cfg.budget)))

    def semishelling(self):
        return self.searched("semishelling", lambda: report.semishelling(
            semishellability_check(self.fan, budget=self.cfg.budget)))

    def clean(self):
        def go():
            res = cleanness_check(self.fan, self.cfg.box, self.cfg.budget)
            steps = clean_consequence_check(self.fan, res, self.cfg.fields[0], self.cfg.box) if res else None
            return self.note_box("clean", report.clean(res, steps))
        return self.searched("clean", go)


def run_command(command: str, fan: Fan, cfg: AnalysisConfig, degree: int | None = None) -> tuple[dict, bool]:
    """Report document for one command, and whether an Unknown verdict is present."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    run = _Run(fan, cfg, degree)
    results: dict = {}
    if command == "validate":
        results["valid"] = True
        results["cones"] = report.cone_table(fan)
    elif command == "cohomology":
        results["cohomology"] = run.per_field(run.cohomology)
    elif command == "omega":
        results["omega"] = run.per_field(run.omega)
    elif command == "localcoh":
        results["local_cohomology"] = run.per_field(run.localcoh)
    elif command == "gorenstein":
        results["gorenstein"] = run.per_field(run.gorenstein)
    elif command == "canonical-ideal":
        results["canonical_ideal"] = run.per_field(run.canonical)
    elif command == "boundary-duality":
        results["boundary_duality"] = run.per_field(run.duality)
    elif command in ("analyze", "all"):
        results["analysis"] = run.per_field(run.analyze)
    if command in ("shelling", "all"):
        results["shelling"] = run.shelling()
    if command in ("semishelling", "all"):
        results["semishelling"] = run.semishelling()
    if command in ("clean", "all"):
        results["clean"] = run.clean()
    doc = {
        "command": command,
        "fan": report.fan_summary(fan),
        "fields": [str(k) for k in cfg.fields],
        "box": cfg.box.radius,
        "results": results,
        "caveats": sorted(set(run.caveats)),
    }
    return doc, run.unknown


# --- entry point ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toricface", description="Analyze a rational pointed fan and its toric face ring.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("fan", help="fan document (JSON); '-' reads standard input")
    p.add_argument("--field", action="append", type=FieldSpec.parse, metavar="q|fp:P",
                   help="coefficient field; repeat to compare fields (default q)")
    p.add_argument("--box", type=int, default=4, metavar="R", help="box radius for lattice conditions (default 4)")
    p.add_argument("--degree", type=int, help="local cohomology degree for 'localcoh' (default dim of the fan)")
    p.add_argument("--budget", type=int, default=AnalysisConfig.budget, help="node budget for searches")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--lenient", action="store_true", help="exit 0 even when a search ran out of budget")
    p.add_argument("--timing", action="store_true", help="include wall-clock time (makes output non-reproducible)")
    return p


def _emit(doc: dict, fmt: str, stream) -> None:
    if fmt == "json":
        stream.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        stream.write(report.render_text(doc) + "\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        cfg = AnalysisConfig(tuple(args.field or [FieldSpec(0)]), BoxSpec(args.box), args.budget, not args.lenient)
        if args.fan == "-":
            text = sys.stdin.read()
        else:
            with open(args.fan, encoding="utf-8") as fh:
                text = fh.read()
        fan = parse_fan(text)
        doc, unknown = run_command(args.command, fan, cfg, args.degree)
    except (InputError, OSError, ValueError) as e:
        err = {"type": type(e).__name__, "message": str(e)}
        if isinstance(e, ParseError) and e.locus:
            err["locus"] = e.locus
        if isinstance(e, NotAFan):
            err["cones"] = [[list(g) for g in e.first.generators], [list(g) for g in e.second.generators]]
        _emit({"error": err}, args.format, sys.stdout if args.format == "json" else sys.stderr)
        return 1
    if args.timing:
        doc["seconds"] = round(time.perf_counter() - started, 3)
    _emit(doc, args.format, sys.stdout)
    return 2 if unknown and cfg.strict else 0
