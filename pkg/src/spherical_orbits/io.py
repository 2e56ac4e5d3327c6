"""Reading and writing datum documents.

A document is a JSON (or YAML) mapping with the fields

``root_system``
    root system type such as ``"A1xF4"`` or ``"A2+C1"``
``simple_root_labels``
    optional list of names for the simple roots, in Bourbaki order
``m_basis``
    list of characters; entries are integers or ``"p/q"`` strings
``sigma``
    spherical roots as integer vectors in M-coordinates
``s_p``
    list of simple-root labels
``colors_a``
    list of ``{"name": ..., "rho": [...]}`` with ``rho`` in N-coordinates
``fan``
    list of maximal colored cones ``{"generators": [...], "colors": [...]}``
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import yaml

from .colored_fan import ColoredCone, ColoredFan
from .datum import HomogeneousSphericalDatum
from .errors import ParseError, SphericalError
from .exact_linalg import as_fraction, normalize
from .root_systems import parse_root_system

FIELDS = ("root_system", "simple_root_labels", "m_basis", "sigma", "s_p", "colors_a", "fan")
REQUIRED = ("root_system", "m_basis", "sigma")


@dataclass(frozen=True)
class Document:
    datum: HomogeneousSphericalDatum
    maximal: tuple  # ColoredCones exactly as listed
    root_system: str
    custom_labels: bool

    def fan(self) -> ColoredFan:
        return ColoredFan.from_maximal(self.datum, self.maximal)


def _rat(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"{where}: expected an integer or a 'p/q' string, got {x!r}")
    try:
        return normalize(as_fraction(x))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{where}: cannot read {x!r} as a rational") from None


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{where}: expected an integer, got {x!r}")
    return x


def _list(x, where):
    if not isinstance(x, list):
        raise ParseError(f"{where}: expected a list, got {type(x).__name__}")
    return x


def _vectors(rows, where, conv, length=None):
    out = []
    for k, row in enumerate(_list(rows, where)):
        row = _list(row, f"{where}[{k}]")
        if length is not None and len(row) != length:
            raise ParseError(f"{where}[{k}] has length {len(row)}, expected {length}")
        out.append(tuple(conv(x, f"{where}[{k}]") for x in row))
    return out


def from_dict(doc: dict) -> Document:
    if not isinstance(doc, dict):
        raise ParseError("a document must be a mapping")
    unknown = sorted(set(doc) - set(FIELDS))
    if unknown:
        raise ParseError(f"unknown fields {unknown}")
    missing = [f for f in REQUIRED if f not in doc]
    if missing:
        raise ParseError(f"missing fields {missing}")
    type_name = doc["root_system"]
    if not isinstance(type_name, str):
        raise ParseError("root_system must be a string")
    labels = doc.get("simple_root_labels")
    if labels is not None:
        labels = [str(x) for x in _list(labels, "simple_root_labels")]
    try:
        rs = parse_root_system(type_name, labels)
    except SphericalError as exc:
        raise ParseError(str(exc)) from None

    m_basis = _vectors(doc["m_basis"], "m_basis", _rat, rs.char_dim)
    r = len(m_basis)
    sigma = _vectors(doc["sigma"], "sigma", _int, r)
    s_p = []
    for a in _list(doc.get("s_p", []), "s_p"):
        if a not in rs.labels:
            raise ParseError(f"s_p: unknown simple root {a!r}")
        s_p.append(a)
    colors_a = []
    for k, entry in enumerate(_list(doc.get("colors_a", []), "colors_a")):
        if not isinstance(entry, dict) or set(entry) != {"name", "rho"}:
            raise ParseError(f"colors_a[{k}] must have exactly the keys 'name' and 'rho'")
        rho = _vectors([entry["rho"]], f"colors_a[{k}].rho", _int, r)[0]
        colors_a.append((str(entry["name"]), rho))
    datum = HomogeneousSphericalDatum.build(rs, m_basis, sigma, s_p, colors_a)

    maximal = []
    for k, entry in enumerate(_list(doc.get("fan", []), "fan")):
        if not isinstance(entry, dict) or not set(entry) <= {"generators", "colors"}:
            raise ParseError(f"fan[{k}] must have the keys 'generators' and 'colors'")
        gens = _vectors(entry.get("generators", []), f"fan[{k}].generators", _int, r)
        cols = [str(c) for c in _list(entry.get("colors", []), f"fan[{k}].colors")]
        maximal.append(ColoredCone.make(gens, cols, r))
    return Document(datum, tuple(maximal), type_name, labels is not None)


def loads(text: str) -> Document:
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            raise ParseError(f"neither JSON nor YAML: {exc}") from None
    return from_dict(data)


def example_names() -> list[str]:
    folder = resources.files("spherical_orbits") / "examples"
    return sorted(p.name[: -len(".json")] for p in folder.iterdir() if p.name.endswith(".json"))


def load(path_or_name: str | Path) -> Document:
    """Load a document from a path, or a bundled example by name."""
    p = Path(path_or_name)
    if p.exists():
        return loads(p.read_text(encoding="utf-8"))
    name = str(path_or_name)
    if name in example_names():
        ref = resources.files("spherical_orbits") / "examples" / f"{name}.json"
        return loads(ref.read_text(encoding="utf-8"))
    raise ParseError(f"no such file or bundled example: {name}")


def load_example(name: str) -> Document:
    return load(name)


def rat_out(x):
    """Exact rational as JSON: integers stay integers, others become "p/q"."""
    x = normalize(x)
    return x if isinstance(x, int) else f"{x.numerator}/{x.denominator}"


def vec_out(v) -> list:
    return [rat_out(x) for x in v]


def to_dict(doc: Document) -> dict:
    d = doc.datum
    rs = d.root_system
    out = {"root_system": doc.root_system}
    if doc.custom_labels:
        out["simple_root_labels"] = list(rs.labels)
    out["m_basis"] = [vec_out(m) for m in d.m_basis]
    out["sigma"] = [list(s) for s in d.sigma]
    out["s_p"] = [rs.labels[i] for i in sorted(d.s_p)]
    out["colors_a"] = [{"name": n, "rho": list(rho)} for n, rho in d.colors_a]
    out["fan"] = [
        {"generators": [list(g) for g in cc.cone.generators], "colors": sorted(cc.colors)}
        for cc in doc.maximal
    ]
    return out


def dumps(doc: Document) -> str:
    return json.dumps(to_dict(doc), indent=2, sort_keys=False)
