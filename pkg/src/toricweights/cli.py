"""Command-line front end.

Subcommands: check, triangulations, vectors, polytope, verify.  Input is a
JSON document {"vertices": [[int, ...], ...]}; dimension is inferred from the
vector length.  Machine-format output is deterministic for identical
(input, seed, trials): sorted keys, rationals rendered as "p/q" strings.
Exit codes: 0 pass, 1 verification failure, 2 input error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .functionals import degrees
from .pipeline import Analysis, analyze
from .polytope import LatticePolytope, lattice_points
from .triangulation import EnumerationCapExceeded, EnumerationCaps
from .vectors import boundary_vector, gkz_vector, hurwitz_vector
from .weights import run_support_trials, verify_identities

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str
    seed: int = 0
    trials: int = 20
    max_triangulations: int = 1_000_000
    time_budget: Optional[float] = None
    format: str = "human"
    skip_delzant_check: bool = False
    kind: Optional[str] = None

    @property
    def caps(self) -> EnumerationCaps:
        return EnumerationCaps(self.max_triangulations, self.time_budget)


def frac_str(value) -> str:
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def load_vertices(path: str) -> list[list[int]]:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: parse error at line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise InputError(f'{path}: expected a single object {{"vertices": [[int, ...], ...]}}')
    vertices = doc["vertices"]
    if (
        not isinstance(vertices, list)
        or not vertices
        or not all(isinstance(v, list) and v and all(isinstance(x, int) for x in v) for v in vertices)
    ):
        raise InputError(f"{path}: vertices must be a nonempty list of integer vectors")
    return vertices


def _common(cfg: RunConfig) -> dict:
    return {
        "command": cfg.command,
        "input": cfg.input,
        "seed": cfg.seed,
        "trials": cfg.trials,
        "caps": {
            "max_triangulations": cfg.max_triangulations,
            "time_budget": cfg.time_budget,
        },
    }


def cmd_check(cfg: RunConfig) -> tuple[dict, int]:
    vertices = load_vertices(cfg.input)
    try:
        q = LatticePolytope.from_vertices(vertices)
    except ValueError as e:
        raise InputError(f"{cfg.input}: {e}") from None
    deg = degrees(q)
    warnings = []
    delzant = None
    delzant_report = None
    if not cfg.skip_delzant_check:
        rep = q.delzant
        delzant = rep.ok
        delzant_report = [
            {
                "vertex": list(r.vertex),
                "edge_directions": [list(d) for d in r.edge_directions],
                "determinant": r.determinant,
                "ok": r.ok,
            }
            for r in rep.vertices
        ]
        if not rep.ok:
            bad = [list(r.vertex) for r in rep.vertices if not r.ok]
            warnings.append(f"not Delzant: smoothness fails at vertices {bad}")
    if q.volume < 2:
        warnings.append("degree (normalized volume) below 2; weight-polytope theory assumes degree >= 2")
    report = _common(cfg) | {
        "polytope": {
            "dim": q.dim,
            "vertices": [list(v) for v in q.vertices],
            "facets": [{"normal": list(f.normal), "offset": f.offset} for f in q.facets],
        },
        "delzant": delzant,
        "delzant_report": delzant_report,
        "volume": q.volume,
        "boundary_volume": q.boundary_volume,
        "deg_chow": deg.chow,
        "deg_hurwitz": deg.hurwitz,
        "num_lattice_points": len(lattice_points(q)),
        "warnings": warnings,
    }
    return report, EXIT_PASS


def _analyze(cfg: RunConfig) -> Analysis:
    vertices = load_vertices(cfg.input)
    try:
        return analyze(vertices, caps=cfg.caps)
    except ValueError as e:
        raise InputError(f"{cfg.input}: {e}") from None


def _triangulation_entry(entry) -> dict:
    return {
        "id": entry.id,
        "simplices": [list(s) for s in entry.triangulation.simplices],
        "witness": list(entry.certificate.witness.heights),
        "used_points": list(entry.triangulation.used_points),
    }


def cmd_triangulations(cfg: RunConfig) -> tuple[dict, int]:
    analysis = _analyze(cfg)
    report = _common(cfg) | {
        "count": len(analysis.enumeration),
        "triangulations": [_triangulation_entry(e) for e in analysis.enumeration],
        "warnings": analysis.warnings,
    }
    return report, EXIT_PASS


def cmd_vectors(cfg: RunConfig) -> tuple[dict, int]:
    analysis = _analyze(cfg)
    fn = {"gkz": gkz_vector, "boundary": boundary_vector, "hurwitz": hurwitz_vector}[cfg.kind or "gkz"]
    rows = [
        {
            "id": e.id,
            "simplices": [list(s) for s in e.triangulation.simplices],
            "vector": list(fn(e.triangulation).entries),
        }
        for e in analysis.enumeration
    ]
    report = _common(cfg) | {"kind": cfg.kind or "gkz", "vectors": rows, "warnings": analysis.warnings}
    return report, EXIT_PASS


def cmd_polytope(cfg: RunConfig) -> tuple[dict, int]:
    analysis = _analyze(cfg)
    poly = analysis.chow if (cfg.kind or "chow") == "chow" else analysis.hurwitz
    report = _common(cfg) | {
        "kind": poly.kind,
        "ambient_dim": poly.ambient_dim,
        "affine_dim": poly.affine_dim,
        "vertices": [list(v) for v in poly.vertices],
        "generators": [
            {"vector": list(g.vector), "triangulations": list(g.triangulation_ids)}
            for g in poly.generators
        ],
        "warnings": analysis.warnings,
    }
    return report, EXIT_PASS


def cmd_verify(cfg: RunConfig) -> tuple[dict, int]:
    analysis = _analyze(cfg)
    identities = verify_identities(analysis, trials=cfg.trials, seed=cfg.seed)
    supports = run_support_trials(analysis, count=cfg.trials, seed=cfg.seed)
    checks = [
        {
            "name": "identities",
            "pass": identities.passed,
            "checks": identities.checks,
            "failures": [
                {"triangulation": f.triangulation_id, "trial": f.trial, "name": f.name,
                 "lhs": str(f.lhs), "rhs": str(f.rhs)}
                for f in identities.failures
            ],
        },
        {
            "name": "support corollaries",
            "pass": supports.passed,
            "liftings": supports.applicable,
            "failures": [
                {"kind": f.kind, "lifting": list(f.lifting.heights),
                 "minimum": frac_str(f.minimum), "pairing": frac_str(f.pairing_value)}
                for f in supports.failures
            ],
        },
    ]
    all_pass = identities.passed and supports.passed
    report = _common(cfg) | {
        "count": len(analysis.enumeration),
        "triangulations": [_triangulation_entry(e) for e in analysis.enumeration],
        "chow_vertices": [list(v) for v in analysis.chow.vertices],
        "hurwitz_vertices": [list(v) for v in analysis.hurwitz.vertices],
        "deg_chow": analysis.degrees.chow,
        "deg_hurwitz": analysis.degrees.hurwitz,
        "checks": checks,
        "all_pass": all_pass,
        "warnings": analysis.warnings,
    }
    return report, EXIT_PASS if all_pass else EXIT_FAIL


def _print_human(report: dict) -> None:
    def emit(key, value, indent=0):
        pad = "  " * indent
        if isinstance(value, dict):
            print(f"{pad}{key}:")
            for k, v in value.items():
                emit(k, v, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{pad}{key}:")
            for item in value:
                parts = ", ".join(f"{k}={json.dumps(v)}" for k, v in item.items())
                print(f"{pad}  - {parts}")
        else:
            print(f"{pad}{key}: {json.dumps(value)}")

    for key, value in report.items():
        emit(key, value)


COMMANDS = {
    "check": cmd_check,
    "triangulations": cmd_triangulations,
    "vectors": cmd_vectors,
    "polytope": cmd_polytope,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toricweights", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="polytope JSON file")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=int, default=20)
        p.add_argument("--max-triangulations", type=int, default=1_000_000)
        p.add_argument("--time-budget", type=float, default=None, help="enumeration budget in seconds")
        p.add_argument("--format", choices=("human", "machine"), default="human")
        p.add_argument("--skip-delzant-check", action="store_true")
        if name == "vectors":
            p.add_argument("--kind", choices=("gkz", "boundary", "hurwitz"), default="gkz")
        if name == "polytope":
            p.add_argument("--kind", choices=("chow", "hurwitz"), default="chow")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        input=args.input,
        seed=args.seed,
        trials=args.trials,
        max_triangulations=args.max_triangulations,
        time_budget=args.time_budget,
        format=args.format,
        skip_delzant_check=args.skip_delzant_check,
        kind=getattr(args, "kind", None),
    )
    try:
        report, code = COMMANDS[cfg.command](cfg)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except EnumerationCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    if cfg.format == "machine":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        _print_human(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
