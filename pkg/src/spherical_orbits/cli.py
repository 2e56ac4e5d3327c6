"""Command line front end.

Exit codes: 0 success, 1 validation failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .closure import closure_fan, star
from .colored_fan import (
    ColoredCone,
    ColoredFan,
    is_complete,
    orbit_poset,
    validate_colored_cone,
    validate_fan,
)
from .datum import full_colors, validate_datum
from .errors import (
    ColorInF,
    InvalidColoredCone,
    InvalidDatum,
    NonSimplicialTrace,
    NotInFan,
    ParseError,
    SphericalError,
    TheoremViolation,
    UnknownColor,
)
from .exact_linalg import as_fraction
from .intersection import intersect_with_orbit, multiplicity_cross_check
from .io import Document, load, vec_out
from .orbit import OrbitDatum, check_refinement, cross_validate, full_colors_of_orbit, localize

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _split_top(text: str, sep: str) -> list[str]:
    """Split on ``sep`` outside parentheses."""
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [s.strip() for s in out if s.strip()]


def parse_selector(doc: Document, fan: ColoredFan, text: str) -> ColoredCone:
    """A maximal-cone index, or ``gens=1,0,0/0,0,1;colors=D',D_b(delta)``
    (``gens=`` empty for the zero cone)."""
    text = text.strip()
    if text.lstrip("-").isdigit():
        k = int(text)
        if not 0 <= k < len(doc.maximal):
            raise UsageError(f"cone index {k} out of range 0..{len(doc.maximal) - 1}")
        return doc.maximal[k]
    fields = {}
    for part in text.split(";"):
        key, eq, val = part.partition("=")
        if not eq or key.strip() not in ("gens", "colors"):
            raise UsageError(f"bad cone selector {text!r}")
        fields[key.strip()] = val.strip()
    r = doc.datum.rank
    gens = []
    for g in fields.get("gens", "").split("/"):
        if not g.strip():
            continue
        try:
            v = tuple(int(x) for x in g.split(","))
        except ValueError:
            raise UsageError(f"bad generator {g!r}") from None
        if len(v) != r:
            raise UsageError(f"generator {g!r} has length {len(v)}, expected {r}")
        gens.append(v)
    cols = _split_top(fields.get("colors", ""), ",")
    cc = ColoredCone.make(gens, cols, r)
    if cc not in fan:
        raise NotInFan(f"{cc!r} is not a member of the fan")
    return cc


def _rat_text(x) -> str:
    return str(as_fraction(x))


def _vec_text(v) -> str:
    return "(" + ", ".join(_rat_text(x) for x in v) + ")"


def _labels(rs, idx) -> list[str]:
    return [rs.labels[i] for i in sorted(idx)]


def _colors_out(datum, colors) -> list[dict]:
    rs = datum.root_system
    return [
        {"name": c.name, "kind": c.kind, "rho": vec_out(c.rho), "varsigma": _labels(rs, c.varsigma)}
        for c in colors
    ]


def _cone_out(cc: ColoredCone) -> dict:
    return {"generators": [vec_out(g) for g in cc.cone.generators], "colors": sorted(cc.colors)}


def _orbit_out(orbit: OrbitDatum) -> dict:
    d0 = orbit.datum0
    rs = d0.root_system
    return {
        "cone": _cone_out(orbit.cc),
        "m0_basis": [vec_out(r) for r in orbit.m0_in_m.rows],
        "m0_characters": [vec_out(m) for m in d0.m_basis],
        "sigma0": [list(s) for s in d0.sigma],
        "sigma0_characters": [rs.format_character(c) for c in d0.sigma_characters],
        "s_p0": _labels(rs, d0.s_p),
        "colors_a0": [{"name": n, "rho": vec_out(rho)} for n, rho in d0.colors_a],
        "psi": {n0: n for n0, n in orbit.psi},
        "colors0": _colors_out(d0, full_colors_of_orbit(orbit)),
    }


def _emit(args, machine: dict, human: list[str]):
    if args.format == "machine":
        print(json.dumps(machine, indent=2, ensure_ascii=False))
    else:
        print("\n".join(human))


def _fmt_cc(cc: ColoredCone) -> str:
    gens = ", ".join(_vec_text(g) for g in cc.cone.generators) or "0"
    return f"(cone({gens}), {{{', '.join(sorted(cc.colors))}}})"


def _orbit_human(orbit: OrbitDatum) -> list[str]:
    d0 = orbit.datum0
    rs = d0.root_system
    lines = [f"orbit of {_fmt_cc(orbit.cc)}"]
    lines.append("M0 basis (M-coordinates):")
    if not orbit.m0_in_m.rows:
        lines.append("  {0}")
    for row, chi in zip(orbit.m0_in_m.rows, d0.m_basis):
        lines.append(f"  {_vec_text(row)}  = {rs.format_character(chi)}")
    sig = ", ".join(rs.format_character(c) for c in d0.sigma_characters)
    lines.append(f"Sigma0 = {{{sig}}}")
    lines.append(f"S^p_0 = {{{', '.join(_labels(rs, d0.s_p))}}}")
    lines.append(f"D^a_0 = {{{', '.join(n for n, _ in d0.colors_a)}}}")
    for n0, n in orbit.psi:
        lines.append(f"  psi({n0}) = {n}")
    lines.append("colors of the orbit:")
    for c in full_colors_of_orbit(orbit):
        vs = ", ".join(_labels(rs, c.varsigma))
        lines.append(f"  {c.name}  [{c.kind}]  rho0 = {_vec_text(c.rho)}  varsigma0 = {{{vs}}}")
    return lines


def cmd_validate(args, doc: Document) -> int:
    d = doc.datum
    rep = validate_datum(d)
    lines = [str(rep)]
    out = {"datum": {"ok": rep.ok, "violations": rep.violations}}
    if not rep.ok:
        _emit(args, out, lines)
        return EXIT_INVALID
    ok = True
    cone_reports = []
    for k, cc in enumerate(doc.maximal):
        r = validate_colored_cone(d, cc)
        cone_reports.append({"index": k, "ok": r.ok, "violations": r.violations})
        if not r.ok:
            ok = False
            lines.append(f"maximal cone {k}: {r}")
    out["cones"] = cone_reports
    if ok:
        fan = doc.fan()
        r = validate_fan(d, fan)
        ok = r.ok
        lines.append(f"{r} ({len(fan)} colored cones)")
        out["fan"] = {"ok": r.ok, "violations": r.violations, "size": len(fan)}
        if ok and args.check_complete:
            complete = is_complete(d, fan)
            ok = complete
            lines.append(f"complete: {'yes' if complete else 'no'}")
            out["complete"] = complete
    _emit(args, out, lines)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_colors(args, doc: Document) -> int:
    d = doc.datum
    colors = full_colors(d)
    rs = d.root_system
    lines = []
    for c in colors:
        vs = ", ".join(_labels(rs, c.varsigma))
        lines.append(f"{c.name}  [{c.kind}]  rho = {_vec_text(c.rho)}  varsigma = {{{vs}}}")
    _emit(args, {"colors": _colors_out(d, colors)}, lines)
    return EXIT_OK


def _select(args, doc):
    fan = doc.fan()
    return fan, parse_selector(doc, fan, args.cone)


def cmd_orbit(args, doc: Document) -> int:
    fan, cc = _select(args, doc)
    orbit = localize(doc.datum, fan, cc)
    out = _orbit_out(orbit)
    lines = _orbit_human(orbit)
    code = EXIT_OK
    if args.cross_validate:
        rep = cross_validate(doc.datum, cc, orbit)
        out["cross_validation"] = {"ok": rep.ok, "violations": rep.violations, "notes": rep.notes}
        lines.append(str(rep))
        code = EXIT_OK if rep.ok else EXIT_INVALID
    else:
        ref = check_refinement(doc.datum, cc, orbit)
        out["refinement"] = ref.value
        lines.append(f"refinement: {ref.value}")
    _emit(args, out, lines)
    return code


def cmd_star(args, doc: Document) -> int:
    fan, cc = _select(args, doc)
    members = star(doc.datum, fan, cc)
    _emit(args, {"star": [_cone_out(m) for m in members]}, [_fmt_cc(m) for m in members])
    return EXIT_OK


def cmd_closure_fan(args, doc: Document) -> int:
    fan, cc = _select(args, doc)
    orbit, fan0 = closure_fan(doc.datum, fan, cc)
    out = {"orbit": _orbit_out(orbit), "fan": [_cone_out(c) for c in fan0]}
    lines = _orbit_human(orbit) + [f"colored fan of the orbit closure ({len(fan0)} colored cones):"]
    lines += ["  " + _fmt_cc(c) for c in fan0]
    code = EXIT_OK
    if args.cross_validate:
        reps = [validate_fan(orbit.datum0, fan0), cross_validate(doc.datum, cc, orbit)]
        for r in reps:
            lines.append(str(r))
        ok = all(r.ok for r in reps)
        out["cross_validation"] = {"ok": ok, "violations": [v for r in reps for v in r.violations]}
        code = EXIT_OK if ok else EXIT_INVALID
    _emit(args, out, lines)
    return code


def cmd_intersect(args, doc: Document) -> int:
    fan, cc = _select(args, doc)
    orbit = localize(doc.datum, fan, cc)
    try:
        total = intersect_with_orbit(orbit, args.color)
    except ColorInF:
        _emit(args, {"color": args.color, "contains_orbit": True}, [f"X0 ⊆ closure({args.color})"])
        return EXIT_OK
    out = {"color": args.color, "intersection": total.as_dict()}
    lines = [f"closure({args.color}) ∩ X0 = {total}"]
    code = EXIT_OK
    if args.cross_validate:
        ok = multiplicity_cross_check(doc.datum, orbit, args.color, total)
        out["multiplicity_check"] = ok
        lines.append(f"multiplicity check: {'passed' if ok else 'FAILED'}")
        code = EXIT_OK if ok else EXIT_INVALID
    _emit(args, out, lines)
    return code


def cmd_poset(args, doc: Document) -> int:
    fan = doc.fan()
    P = orbit_poset(doc.datum, fan)
    out = {"nodes": [_cone_out(c) for c in P.nodes], "covers": [list(e) for e in P.covers]}
    lines = [f"[{k}] {_fmt_cc(c)}" for k, c in enumerate(P.nodes)]
    lines.append("covering relations (face -> cone; the orbit of the cone lies in the closure of the orbit of the face):")
    lines += [f"  {i} -> {j}" for i, j in P.covers]
    _emit(args, out, lines)
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "colors": cmd_colors,
    "orbit": cmd_orbit,
    "star": cmd_star,
    "closure-fan": cmd_closure_fan,
    "intersect": cmd_intersect,
    "poset": cmd_poset,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "machine"), default="human")
    common.add_argument("--check-complete", action="store_true", help="also test that the fan covers V")
    common.add_argument("--cross-validate", action="store_true", help="run the consistency checks")
    parser = argparse.ArgumentParser(
        prog="spherical-orbits",
        description="Orbits, orbit closures and color intersections of spherical embeddings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    help_text = {
        "validate": "check the datum and the colored fan",
        "colors": "list the full set of colors",
        "orbit": "datum of the orbit of a colored cone",
        "star": "fan members having the cone as a colored face",
        "closure-fan": "colored fan of the orbit closure",
        "intersect": "intersection of a color closure with the orbit",
        "poset": "orbit poset of the fan",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], help=help_text[name])
        p.add_argument("file", help="document path or bundled example name")
        if name in ("orbit", "star", "closure-fan", "intersect"):
            p.add_argument("cone", help="maximal cone index or 'gens=...;colors=...'")
        if name == "intersect":
            p.add_argument("color", help="name of a color not in F")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        doc = load(args.file)
        return COMMANDS[args.command](args, doc)
    except (ParseError, UsageError, NotInFan, UnknownColor) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidDatum, InvalidColoredCone, NonSimplicialTrace, TheoremViolation) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SphericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
