"""Command-line interface.

    inertia sectors <file>
    inertia inertial <file>
    inertia cohomology <file> [--coeff q|z] [--max-degree D]
    inertia multiply <file> <g> <h>
    inertia flag <type><rank>
    inertia check <file>

Every subcommand accepts ``--format text|json``; ``-`` reads standard input.
Exit codes: 0 success, 1 invalid input, 2 unsupported request, 3 a property
check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .checks import run_checks
from .delzant import format_input, load_input
from .errors import InputError, UnsupportedError
from .flag import gamma_flag, root_system_data, special_classes
from .inertial_ring import (
    coefficient_names,
    nh_presentation,
    smile_factors,
    smile_sets,
    star_exponents,
    star_structure_constant,
)
from .kirwan import (
    DEFAULT_CUTOFF,
    display_degrees,
    graded_groups_z,
    hcr_presentation,
    poincare_series_q,
)
from .sectors import element_name, gamma_group, parse_element

EXIT_OK, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_CHECK_FAILED = 0, 1, 2, 3

# larger groups are refused rather than enumerated
MAX_GAMMA = 2000


def fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="inertia", description="Inertial and Chen-Ruan cohomology of toric orbifold quotients.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_file(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="input file, or - for standard input")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        return sp

    with_file("sectors", "twisted sectors, logweights and ages")
    with_file("inertial", "NH presentation and structure constants")
    sp = with_file("cohomology", "Chen-Ruan cohomology of the quotient")
    sp.add_argument("--coeff", choices=("q", "z"), default="q")
    sp.add_argument("--max-degree", type=Fraction, default=Fraction(DEFAULT_CUTOFF))
    sp = with_file("multiply", "one structure constant, both derivations")
    sp.add_argument("g")
    sp.add_argument("h")
    sp = sub.add_parser("flag", help="special classes of a compact Lie group")
    sp.add_argument("type", help="e.g. G2, B2, A3")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp = with_file("check", "run the property suite on one input")
    sp.add_argument("--max-degree", type=Fraction, default=Fraction(DEFAULT_CUTOFF))
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


# ---------------------------------------------------------------------------
# Reports


def _properties(D) -> dict:
    return {
        "mode": D.mode,
        "N": D.N,
        "dim": D.d,
        "torus_rank": D.k_rank,
        "weights": [list(w) for w in D.weights],
        "connected": D.connected,
    }


def _sector_rows(D, G, names: dict) -> list[dict]:
    rows = []
    for s in G.gamma:
        rows.append(
            {
                "element": element_name(D, s.g),
                "generator": names.get(s.g, "1" if s.g.is_identity else None),
                "logweights": [fmt(x) for x in s.g.a],
                "age": fmt(s.age),
                "degree_shift": fmt(s.degree_shift),
                "fixed_coords": sorted(i + 1 for i in s.fixed_coords),
                "in_box": s.in_box,
                "sector_face_dim": None if s.sector_face is None else s.sector_face.dim,
            }
        )
    return rows


def _generator_names(D, G) -> dict:
    return {s.g: f"y{j + 1}" for j, s in enumerate(G.twisted)}


def _presentation_dict(R) -> dict:
    return {
        "coefficients": [{"name": n, "degree": fmt(d)} for n, d, _ in R.coefficient_variables],
        "generators": [{"name": n, "degree": fmt(deg)} for n, _, deg in R.sector_generators],
        "relations": [R.render(r) for r in R.relations],
        "ring": R.describe(),
    }


def report_sectors(D, P) -> dict:
    G = gamma_group(D, P, max_order=MAX_GAMMA)
    return {
        "command": "sectors",
        "input": format_input(D, P),
        "sectors": _sector_rows(D, G, _generator_names(D, G)),
        "properties": {**_properties(D), "gamma_order": len(G), "box_size": len(G.box), "exponent": G.exponent},
    }


def _constant_table(D, G, names):
    cn = coefficient_names(D.k_rank)
    out = []
    tw = G.twisted
    for a, s in enumerate(tw):
        for t in tw[a:]:
            target, c = star_structure_constant(D, s.g, t.g)
            out.append(
                {
                    "g": names[s.g],
                    "h": names[t.g],
                    "coefficient": c.render(cn),
                    "target": names.get(target, "1"),
                }
            )
    return out


def report_inertial(D, P) -> dict:
    G = gamma_group(D, P, max_order=MAX_GAMMA)
    names = _generator_names(D, G)
    R = nh_presentation(D, G)
    return {
        "command": "inertial",
        "input": format_input(D, P),
        "sectors": _sector_rows(D, G, names),
        "presentation": _presentation_dict(R),
        "structure_constants": _constant_table(D, G, names),
        "properties": {**_properties(D), "gamma_order": len(G)},
    }


def report_cohomology(D, P, coeff: str, cutoff: Fraction) -> dict:
    G = gamma_group(D, P, max_order=MAX_GAMMA)
    H, ker = hcr_presentation(D, P, G)
    series = poincare_series_q(D, P, G, cutoff)
    out = {
        "command": "cohomology",
        "input": format_input(D, P),
        "presentation": _presentation_dict(H),
        "kernel": ker.render(),
        "series": {fmt(d): n for d, n in series.items()},
    }
    if coeff == "z":
        Z = graded_groups_z(D, P, G, cutoff)
        out["groups"] = [
            {"degree": fmt(d), "rank": Z[d][0], "torsion": list(Z[d][1]), "text": Z.describe(d)}
            for d in display_degrees(Z, cutoff)
        ]
    out["properties"] = {**_properties(D), "coefficients": coeff, "max_degree": fmt(cutoff), "gamma_order": len(G)}
    return out


def report_multiply(D, P, g_text: str, h_text: str) -> dict:
    G = gamma_group(D, P, max_order=MAX_GAMMA)
    names = _generator_names(D, G)
    g = parse_element(D, G, g_text)
    h = parse_element(D, G, h_text)
    cn = coefficient_names(D.k_rank)
    target, c = star_structure_constant(D, g, h)
    eps, f = smile_factors(D, g, h)
    ob, nb = smile_sets(D, g, h)
    return {
        "command": "multiply",
        "input": format_input(D, P),
        "product": {
            "g": element_name(D, g),
            "h": element_name(D, h),
            "g_generator": names.get(g, "1"),
            "h_generator": names.get(h, "1"),
            "target": element_name(D, target),
            "target_generator": names.get(target, "1"),
            "star": {"exponents": [fmt(x) for x in star_exponents(D, g, h)], "coefficient": c.render(cn)},
            "smile": {
                "obstruction_coords": sorted(i + 1 for i in ob),
                "obstruction_class": eps.render(cn),
                "normal_coords": sorted(i + 1 for i in nb),
                "normal_class": f.render(cn),
                "coefficient": (eps * f).render(cn),
            },
            "agree": eps * f == c,
        },
        "properties": _properties(D),
    }


def report_flag(type_text: str) -> dict:
    R = root_system_data(type_text)
    T = special_classes(R)
    F = gamma_flag(R, T)
    classes = [
        {
            "vertex": "omega" if e.vertex == 0 else f"alpha{e.vertex}",
            "alcove_vertex": [fmt(x) for x in e.alcove_vertex],
            "order": e.adjoint_order,
            "centralizer": e.centralizer_type,
            "centralizer_group": e.centralizer_name,
            "components": e.component_count,
            "central": e.central,
        }
        for e in T.entries
    ]
    return {
        "command": "flag",
        "input": R.name,
        "classes": classes,
        "group": {
            "structure": F.describe(),
            "order": F.order,
            "invariant_factors": list(F.invariant_factors),
            "finite_stabilizers": F.stabilizer_count,
        },
        "properties": {
            "rank": R.rank,
            "marks": list(R.marks),
            "roots": len(R.all_roots),
            "weyl_order": R.weyl_order,
        },
    }


def report_check(D, P, cutoff: Fraction) -> dict:
    G = gamma_group(D, P, max_order=MAX_GAMMA)
    results = run_checks(D, P, G, cutoff)
    return {
        "command": "check",
        "input": format_input(D, P),
        "properties": {
            r.name: {"passed": r.passed, "failed": r.failed} for r in results
        },
        "all_passed": all(r.ok for r in results),
    }


def make_report(args) -> dict:
    if args.command == "flag":
        return report_flag(args.type)
    text = _read(args.file)
    D, P = load_input(text)
    if args.command == "sectors":
        return report_sectors(D, P)
    D.require_connected()
    if args.command == "inertial":
        return report_inertial(D, P)
    if args.command == "cohomology":
        if args.max_degree < 0:
            raise InputError("--max-degree must be nonnegative")
        return report_cohomology(D, P, args.coeff, args.max_degree)
    if args.command == "multiply":
        return report_multiply(D, P, args.g, args.h)
    if args.command == "check":
        return report_check(D, P, args.max_degree)
    raise InputError(f"unknown command {args.command!r}")


# ---------------------------------------------------------------------------
# Serialization


def _table(header: Sequence[str], rows: Sequence[Sequence]) -> list[str]:
    cells = [[str(c) for c in header]] + [["-" if c is None else str(c) for c in r] for r in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(header))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]


def _text_sectors(rep) -> list[str]:
    rows = [
        (
            r["element"],
            r["generator"],
            " ".join(r["logweights"]),
            r["degree_shift"],
            ",".join(map(str, r["fixed_coords"])) or "{0}",
            "yes" if r["in_box"] else "no",
            r["sector_face_dim"],
        )
        for r in rep["sectors"]
    ]
    return _table(("g", "gen", "logweights", "2*age", "fixed", "box", "face dim"), rows)


def _text_presentation(pres) -> list[str]:
    gens = ", ".join(f"{g['name']} (deg {g['degree']})" for g in pres["coefficients"] + pres["generators"])
    out = [f"generators: {gens}", "relations:"]
    out += [f"  {r}" for r in pres["relations"]] or ["  (none)"]
    return out


def _times(coefficient: str, generator: str) -> str:
    if generator == "1":
        return coefficient
    if coefficient == "1":
        return generator
    if any(op in coefficient for op in " +-"):
        coefficient = f"({coefficient})"
    return f"{coefficient}*{generator}"


def to_text(rep: dict) -> str:
    cmd = rep["command"]
    lines = []
    if cmd != "flag":
        lines.append("input: " + rep["input"].strip().replace("\n", " / "))
    props = rep.get("properties", {})
    if cmd == "sectors":
        lines.append(
            f"Gamma: {props['gamma_order']} elements, exponent {props['exponent']}, {props['box_size']} finite stabilizers"
        )
        lines += _text_sectors(rep)
    elif cmd == "inertial":
        lines += _text_sectors(rep)
        lines.append("NH presentation: " + rep["presentation"]["ring"])
        lines += _text_presentation(rep["presentation"])
        lines.append("structure constants:")
        lines += _table(
            ("g", "h", "g*h"),
            [(c["g"], c["h"], _times(c["coefficient"], c["target"])) for c in rep["structure_constants"]],
        )
    elif cmd == "cohomology":
        lines.append("H_CR presentation: " + rep["presentation"]["ring"])
        lines += _text_presentation(rep["presentation"])
        lines.append("Kirwan kernel: <" + ", ".join(rep["kernel"]) + ">")
        lines.append("Poincare series (rational Betti numbers by degree):")
        lines += [f"  {d}: {n}" for d, n in rep["series"].items()]
        if "groups" in rep:
            lines.append("integral groups:")
            lines += [f"  {g['degree']}: {g['text']}" for g in rep["groups"]]
    elif cmd == "multiply":
        p = rep["product"]
        lines.append(f"{p['g_generator']} * {p['h_generator']} = {_times(p['star']['coefficient'], p['target_generator'])}")
        lines.append(f"  g = {p['g']}, h = {p['h']}, gh = {p['target']}")
        lines.append(f"  star exponents: ({', '.join(p['star']['exponents'])})")
        s = p["smile"]
        lines.append(f"  obstruction bundle on coords {s['obstruction_coords'] or '{}'}: epsilon = {s['obstruction_class']}")
        lines.append(f"  normal bundle on coords {s['normal_coords'] or '{}'}: f = {s['normal_class']}")
        lines.append(f"  epsilon * f = {s['coefficient']} ({'agrees' if p['agree'] else 'DISAGREES'} with star)")
    elif cmd == "flag":
        lines.append(f"{rep['input']}: marks {props['marks']}, |W| = {props['weyl_order']}, {props['roots']} roots")
        lines += _table(
            ("vertex", "alcove vertex", "order", "centralizer", "group", "components"),
            [(c["vertex"], "(" + ", ".join(c["alcove_vertex"]) + ")", c["order"], c["centralizer"],
              c["centralizer_group"], c["components"]) for c in rep["classes"]],
        )
        g = rep["group"]
        lines.append(f"Gamma = {g['structure']}, order {g['order']}, {g['finite_stabilizers']} finite stabilizers")
    elif cmd == "check":
        lines += _table(
            ("property", "passed", "failed"),
            [(name, v["passed"], v["failed"]) for name, v in props.items()],
        )
        lines.append("all passed" if rep["all_passed"] else "FAILURES")
    return "\n".join(lines) + "\n"


def serialize(rep: dict, fmt_: str = "text") -> str:
    if fmt_ == "json":
        return json.dumps(rep, indent=2) + "\n"
    return to_text(rep)


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        rep = make_report(args)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except UnsupportedError as exc:
        print(f"unsupported: {exc}", file=stderr)
        return EXIT_UNSUPPORTED
    stdout.write(serialize(rep, args.format))
    if rep["command"] == "check" and not rep["all_passed"]:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def main() -> None:
    sys.exit(run())
