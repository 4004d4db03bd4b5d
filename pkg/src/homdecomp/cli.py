"""Command-line front end: ring-spec files in, deterministic reports out.

Four subcommands: analyze (one Hom module, JSON), grid (lattice
classification, ASCII/JSON plus an optional SVG), stabilize (index and
torsion generators), verify (one named statement).  All output is
byte-deterministic for fixed inputs and seed, except the timing field
in analyze reports.

Exit codes: 0 success, 2 bad input or failed hypothesis, 1 defect.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from .decomp import decide
from .hom import build_hom
from .monomials import MonomialIdeal, format_monomial, grlex_key, parse_monomial
from .rings import (
    LocalRing,
    SearchCapExceeded,
    depth_is_zero,
    gamma_module_generators,
    is_cohen_macaulay,
    stabilization_index,
    validate_sop,
)
from .theorems import (
    GridClassification,
    PointClass,
    VerificationError,
    check_radical_transfer,
    classify_grid,
    decomposition_dict,
    search_decomposable_powers,
    search_nonfree_powers,
    verify_colon_identity,
    verify_non_cm_power,
    verify_rees,
    verify_thm_dim1,
    verify_thm_nonfree,
)

THEOREMS = ("rees", "3.1", "3.3", "4.1", "4.2", "2.5", "2.6", "2.7")

GLYPHS = {
    PointClass.FREE_CYCLIC: "F",
    PointClass.CYCLIC_NONFREE: "C",
    PointClass.INDECOMPOSABLE_NONCYCLIC: "I",
    PointClass.DECOMPOSABLE: "D",
}

FILLS = {
    PointClass.FREE_CYCLIC: "#a8ddb5",
    PointClass.CYCLIC_NONFREE: "#7bccc4",
    PointClass.INDECOMPOSABLE_NONCYCLIC: "#fdbb84",
    PointClass.DECOMPOSABLE: "#e34a33",
}

LEGEND = (
    (PointClass.FREE_CYCLIC, "free cyclic"),
    (PointClass.CYCLIC_NONFREE, "cyclic non-free"),
    (PointClass.INDECOMPOSABLE_NONCYCLIC, "indecomposable non-cyclic"),
    (PointClass.DECOMPOSABLE, "decomposable"),
)


class RingSpecError(ValueError):
    """Malformed ring-spec text; the message carries the line number."""


@dataclass(frozen=True)
class RingSpec:
    """Parsed ring-spec file: the ring plus optional sop, prime, and seed."""

    variables: tuple[str, ...]
    relations: tuple[str, ...] = ()
    sop: tuple[str, ...] = ()
    prime: int | None = None
    seed: int | None = None

    def ring(self) -> LocalRing:
        body = "(" + (", ".join(self.relations) if self.relations else "0") + ")"
        return LocalRing.from_text(self.variables, body)

    def parameter_system(self):
        if not self.sop:
            raise ValueError("the spec declares no sop")
        ring = self.ring()
        return validate_sop(ring, [ring.parse_monomial(t) for t in self.sop])


def parse_ring_file(text: str) -> RingSpec:
    """Line grammar: `ring x y`, `relations x^2 xy`, `sop y`, `prime 7`, `seed 3`.

    Blank lines and `#` comments are skipped.  Keys may appear once,
    `ring` must come before any monomials, and every monomial must use
    declared variables only.
    """
    variables: tuple[str, ...] | None = None
    sections: dict[str, tuple] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if key in sections or (key == "ring" and variables is not None):
            raise RingSpecError(f"line {lineno}: duplicate {key} section")
        if key == "ring":
            if not rest:
                raise RingSpecError(f"line {lineno}: ring line needs variable names")
            for name in rest:
                if not name.isalpha():
                    raise RingSpecError(f"line {lineno}: bad variable name {name!r}")
            if len(set(rest)) != len(rest):
                raise RingSpecError(f"line {lineno}: duplicate variable")
            variables = tuple(rest)
            continue
        if key in ("relations", "sop"):
            if variables is None:
                raise RingSpecError(f"line {lineno}: ring must be declared before {key}")
            monos = []
            for t in rest:
                try:
                    monos.append(format_monomial(parse_monomial(t, variables), variables))
                except ValueError as exc:
                    raise RingSpecError(f"line {lineno}: {exc}") from exc
            sections[key] = tuple(monos)
            continue
        if key in ("prime", "seed"):
            if len(rest) != 1 or not rest[0].isdigit():
                raise RingSpecError(f"line {lineno}: {key} takes one integer")
            sections[key] = (int(rest[0]),)
            continue
        raise RingSpecError(f"line {lineno}: unknown key {key!r}")
    if variables is None:
        raise RingSpecError("no ring line found")
    return RingSpec(
        variables=variables,
        relations=sections.get("relations", ()),
        sop=sections.get("sop", ()),
        prime=sections.get("prime", (None,))[0],
        seed=sections.get("seed", (None,))[0],
    )


def serialize_ring_spec(spec: RingSpec) -> str:
    lines = ["ring " + " ".join(spec.variables)]
    if spec.relations:
        lines.append("relations " + " ".join(spec.relations))
    if spec.sop:
        lines.append("sop " + " ".join(spec.sop))
    if spec.prime is not None:
        lines.append(f"prime {spec.prime}")
    if spec.seed is not None:
        lines.append(f"seed {spec.seed}")
    return "\n".join(lines) + "\n"


def _fmt_gens(ring: LocalRing, gens) -> list:
    return [ring.fmt(u) for u in sorted(gens, key=grlex_key)]


def analysis_report(spec: RingSpec, a_text: str | None, b_text: str | None,
                    powers: list | None, prime: int | None, seed: int) -> dict:
    """The full pipeline on one (a, b) pair, as a JSON-ready dict."""
    ring = spec.ring()
    if a_text is not None:
        a_gens = list(ring.parse_ideal(a_text).gens)
    elif spec.sop:
        a_gens = [ring.parse_monomial(t) for t in spec.sop]
    else:
        raise ValueError("no a ideal: pass --a or declare a sop in the spec")
    ps = validate_sop(ring, a_gens)
    if b_text is not None:
        b_spec = list(ring.parse_ideal(b_text).gens)
    elif powers is not None:
        b_spec = powers
    else:
        raise ValueError("no b ideal: pass --b or --powers")
    Q = build_hom(ps, b_spec)
    t0 = time.perf_counter()
    verdict = decide(Q.presentation, seed=seed, prime=prime)
    elapsed = time.perf_counter() - t0
    witness = Q.non_free_annihilator_witness()
    return {
        "ring": {
            "variables": list(ring.variables),
            "relations": ring.fmt_ideal(ring.defining),
        },
        "a": ring.fmt_ideal(ps.params_ideal()),
        "b": ring.fmt_ideal(Q.b_ideal),
        "dimension": ring.dimension(),
        "depth_zero": depth_is_zero(ring),
        "cohen_macaulay": is_cohen_macaulay(ps),
        "gamma_generators": _fmt_gens(ring, gamma_module_generators(ring)),
        "stabilization_index": stabilization_index(ring),
        "hom": {
            "length": Q.length(),
            "minimal_generators": Q.minimal_generator_count(),
            "cyclic": Q.is_cyclic(),
            "base_length": Q.base_length(),
            "free_over_base": Q.is_free_over_base(),
            "non_free_witness": ring.fmt(witness) if witness is not None else None,
            "decomposition": decomposition_dict(verdict),
        },
        "timing_ms": round(elapsed * 1000.0, 3),
    }


def grid_report(grid: GridClassification) -> dict:
    ring = grid.ps.ring
    points = []
    for t in grid.lattice():
        points.append({
            "t": list(t),
            "class": grid.classes[t].value,
            "free": grid.free[t],
        })
    return {
        "ring": {
            "variables": list(ring.variables),
            "relations": ring.fmt_ideal(ring.defining),
        },
        "sop": [ring.fmt(p) for p in grid.ps.params],
        "max": grid.tmax,
        "points": points,
    }


def render_grid_ascii(grid: GridClassification) -> str:
    """Terminal picture; rows are t2 from the top down, columns t1."""
    d = len(grid.ps.params)
    T = grid.tmax
    w = len(str(T))
    lines = []
    if d == 1:
        cells = " ".join(GLYPHS[grid.classes[(t,)]].rjust(w) for t in range(1, T + 1))
        axis = " ".join(str(t).rjust(w) for t in range(1, T + 1))
        lines.append("t1 | " + axis)
        lines.append("   | " + cells)
    elif d == 2:
        for t2 in range(T, 0, -1):
            row = " ".join(GLYPHS[grid.classes[(t1, t2)]].rjust(w) for t1 in range(1, T + 1))
            lines.append(f"t2 {str(t2).rjust(w)} | " + row)
        lines.append("   " + " " * w + " +" + "-" * ((w + 1) * T))
        axis = " ".join(str(t).rjust(w) for t in range(1, T + 1))
        lines.append("   " + " " * w + "   " + axis + "  t1")
    else:
        raise ValueError("ascii grids need one or two parameters; use --format json")
    lines.append("")
    lines.append("  ".join(f"{GLYPHS[cls]} {label}" for cls, label in LEGEND))
    return "\n".join(lines) + "\n"


CELL = 28
MARGIN_LEFT = 46
MARGIN_TOP = 16
MARGIN_BOTTOM = 40
LEGEND_WIDTH = 210


def render_grid_figure(grid: GridClassification) -> str:
    """Deterministic SVG for a two-parameter grid; one square per point."""
    if len(grid.ps.params) != 2:
        raise ValueError("figure rendering needs exactly two parameters")
    T = grid.tmax
    width = MARGIN_LEFT + CELL * T + 24 + LEGEND_WIDTH
    height = MARGIN_TOP + CELL * T + MARGIN_BOTTOM
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for (t1, t2) in grid.lattice():
        x = MARGIN_LEFT + (t1 - 1) * CELL
        y = MARGIN_TOP + (T - t2) * CELL
        fill = FILLS[grid.classes[(t1, t2)]]
        out.append(
            f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" '
            f'fill="{fill}" stroke="#555555" stroke-width="1"/>')
    font = 'font-family="monospace" font-size="12" fill="#000000"'
    for t1 in range(1, T + 1):
        x = MARGIN_LEFT + (t1 - 1) * CELL + CELL // 2
        y = MARGIN_TOP + CELL * T + 16
        out.append(f'<text x="{x}" y="{y}" text-anchor="middle" {font}>{t1}</text>')
    for t2 in range(1, T + 1):
        x = MARGIN_LEFT - 8
        y = MARGIN_TOP + (T - t2) * CELL + CELL // 2 + 4
        out.append(f'<text x="{x}" y="{y}" text-anchor="end" {font}>{t2}</text>')
    out.append(
        f'<text x="{MARGIN_LEFT + CELL * T // 2}" y="{MARGIN_TOP + CELL * T + 32}" '
        f'text-anchor="middle" {font}>t1</text>')
    out.append(f'<text x="14" y="{MARGIN_TOP + CELL * T // 2}" {font}>t2</text>')
    lv = MARGIN_LEFT + CELL * T + 24
    for i, (cls, label) in enumerate(LEGEND):
        y = MARGIN_TOP + 8 + i * 22
        out.append(
            f'<rect x="{lv}" y="{y}" width="14" height="14" fill="{FILLS[cls]}" '
            f'stroke="#555555" stroke-width="1"/>')
        out.append(f'<text x="{lv + 20}" y="{y + 11}" {font}>{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _load_spec(path: str) -> RingSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ring_file(fh.read())


def _parse_powers(text: str) -> list:
    try:
        vals = [int(v) for v in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad --powers value {text!r}: comma-separated integers") from exc
    if not vals:
        raise ValueError("--powers must list at least one exponent")
    return vals


def cmd_analyze(args) -> int:
    spec = _load_spec(args.spec)
    powers = _parse_powers(args.powers) if args.powers else None
    prime = args.prime if args.prime is not None else spec.prime
    seed = args.seed if args.seed is not None else (spec.seed or 0)
    _emit(analysis_report(spec, args.a, args.b, powers, prime, seed))
    return 0


def cmd_grid(args) -> int:
    spec = _load_spec(args.spec)
    seed = args.seed if args.seed is not None else (spec.seed or 0)
    if args.max == 0:
        if args.format == "json":
            _emit({"max": 0, "points": []})
        else:
            sys.stdout.write("empty grid\n")
        return 0
    grid = classify_grid(spec.parameter_system(), args.max, seed)
    if args.format == "json":
        _emit(grid_report(grid))
    else:
        sys.stdout.write(render_grid_ascii(grid))
    if args.out:
        svg = render_grid_figure(grid)
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


def cmd_stabilize(args) -> int:
    spec = _load_spec(args.spec)
    ring = spec.ring()
    _emit({
        "ring": {
            "variables": list(ring.variables),
            "relations": ring.fmt_ideal(ring.defining),
        },
        "stabilization_index": stabilization_index(ring),
        "gamma_generators": _fmt_gens(ring, gamma_module_generators(ring)),
    })
    return 0


def _single_parameter(spec: RingSpec, ring: LocalRing, a_text: str | None):
    if a_text is not None:
        gens = ring.parse_ideal(a_text).gens
        if len(gens) != 1:
            raise ValueError("--a must be a principal ideal here")
        return gens[0]
    ps = spec.parameter_system()
    if len(ps.params) != 1:
        raise ValueError("need a single parameter: one-element sop or --a")
    return ps.params[0]


def cmd_verify(args) -> int:
    spec = _load_spec(args.spec)
    ring = spec.ring()
    seed = args.seed if args.seed is not None else (spec.seed or 0)
    name = args.theorem
    if name == "rees":
        ps = spec.parameter_system()
        if args.b is not None:
            b_spec = list(ring.parse_ideal(args.b).gens)
        elif args.powers:
            b_spec = _parse_powers(args.powers)
        else:
            b_spec = [2] * len(ps.params)
        report = verify_rees(ps, b_spec)
    elif name == "3.1":
        report = verify_thm_dim1(ring, _single_parameter(spec, ring, args.a))
    elif name == "3.3":
        report = verify_thm_nonfree(ring)
    elif name == "4.1":
        report = search_decomposable_powers(spec.parameter_system(), seed)
    elif name == "4.2":
        report = search_nonfree_powers(spec.parameter_system(), seed)
    elif name == "2.5":
        report = verify_colon_identity(ring, count=100, seed=seed or 7)
    elif name == "2.6":
        if not args.powers or args.b is None:
            raise ValueError("--theorem 2.6 needs --powers (for J) and --b (for N)")
        ps = spec.parameter_system()
        vals = _parse_powers(args.powers)
        if len(vals) != len(ps.params):
            raise ValueError("need one exponent per parameter")
        small = MonomialIdeal(ring.ambient,
                              [tuple(e * t for e in p) for p, t in zip(ps.params, vals)])
        report = check_radical_transfer(ring, small, ps.params_ideal(),
                                        ring.parse_ideal(args.b), seed)
    else:
        report = verify_non_cm_power(spec.parameter_system())
    _emit(report.as_dict())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="homdecomp",
        description="Hom-module construction and decomposition over monomial rings")
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="classify one Hom module")
    pa.add_argument("spec", help="ring-spec file")
    pa.add_argument("--a", help="ideal text, e.g. \"(y)\"; default: the spec's sop")
    pa.add_argument("--b", help="ideal text for b")
    pa.add_argument("--powers", help="b as parameter powers, e.g. \"2,3\"")
    pa.add_argument("--prime", type=int, help="working prime override")
    pa.add_argument("--seed", type=int, help="seed for randomized splitting")
    pa.set_defaults(run=cmd_analyze)

    pg = sub.add_parser("grid", help="classify the exponent lattice")
    pg.add_argument("spec", help="ring-spec file; must declare a sop")
    pg.add_argument("--max", type=int, default=5, help="box size T (default 5)")
    pg.add_argument("--out", help="write an SVG figure here (two parameters only)")
    pg.add_argument("--format", choices=("ascii", "json"), default="ascii")
    pg.add_argument("--seed", type=int)
    pg.set_defaults(run=cmd_grid)

    ps_ = sub.add_parser("stabilize", help="stabilization index and torsion generators")
    ps_.add_argument("spec", help="ring-spec file")
    ps_.set_defaults(run=cmd_stabilize)

    pv = sub.add_parser("verify", help="run one named statement check")
    pv.add_argument("spec", help="ring-spec file")
    pv.add_argument("--theorem", required=True, choices=THEOREMS)
    pv.add_argument("--a", help="principal ideal, used by 3.1")
    pv.add_argument("--b", help="ideal text, used by rees and 2.6")
    pv.add_argument("--powers", help="exponent list, used by rees and 2.6")
    pv.add_argument("--seed", type=int)
    pv.set_defaults(run=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (RingSpecError, SearchCapExceeded, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except VerificationError as exc:
        sys.stderr.write(f"check failed: {exc}\n")
        return 1
    except Exception as exc:  # noqa: BLE001
        sys.stderr.write(f"internal error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
