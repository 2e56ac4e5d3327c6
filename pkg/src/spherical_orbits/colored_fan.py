"""Colored cones, colored fans and the orbit poset."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cones import Cone, hyperplane_arrangement_cells, rel_interiors_meet_within
from .datum import HomogeneousSphericalDatum, full_colors, valuation_cone
from .errors import UnknownColor, ValidationReport
from .exact_linalg import is_zero


@dataclass(frozen=True)
class ColoredCone:
    cone: Cone
    colors: frozenset

    @classmethod
    def make(cls, generators: Iterable[Sequence], colors: Iterable[str] = (), dim: int | None = None):
        gens = [tuple(g) for g in generators]
        if dim is None:
            dim = len(gens[0])
        return cls(Cone.from_generators(gens, dim), frozenset(colors))

    @classmethod
    def zero(cls, dim: int) -> "ColoredCone":
        return cls(Cone.zero(dim), frozenset())

    @property
    def sort_key(self):
        return (self.cone.dim, self.cone.generators, tuple(sorted(self.colors)))

    def __repr__(self) -> str:
        gens = "0" if self.cone.is_zero else ", ".join(map(str, self.cone.generators))
        cols = ", ".join(sorted(self.colors))
        return f"(cone({gens}), {{{cols}}})"


def _check_colors(datum, cc: ColoredCone):
    colors = full_colors(datum)
    for name in cc.colors:
        if name not in colors:
            raise UnknownColor(f"color {name!r} of {cc!r} is not a color of the datum")
    return colors


def meets_valuation_cone(datum: HomogeneousSphericalDatum, cone: Cone) -> bool:
    """``C° ∩ V != ∅``."""
    return rel_interiors_meet_within(cone, cone, valuation_cone(datum))


def validate_colored_cone(datum: HomogeneousSphericalDatum, cc: ColoredCone) -> ValidationReport:
    """Check that ``cc`` is a strictly convex colored cone.

    The requirement that ``C`` be generated by ``rho(F)`` and elements of
    ``V`` is tested ray by ray: every extremal ray must carry some
    ``rho(D)``, ``D in F``, or lie in ``V``.
    """
    rep = ValidationReport(f"colored cone {cc!r}")
    colors = _check_colors(datum, cc)
    C = cc.cone
    V = valuation_cone(datum)
    if C.ambient_dim != datum.rank:
        rep.fail(f"cone lives in Q^{C.ambient_dim}, expected N_Q of rank {datum.rank}")
        return rep
    if not meets_valuation_cone(datum, C):
        rep.fail("relative interior of C misses the valuation cone")
    if not C.is_strictly_convex:
        rep.fail("C is not strictly convex")
    rhos = {name: colors[name].rho for name in cc.colors}
    for name, rho in sorted(rhos.items()):
        if is_zero(rho):
            rep.fail(f"rho({name}) = 0")
        elif not C.contains(rho):
            rep.fail(f"rho({name}) = {rho} does not lie in C")
    ray_cones = {name: Cone.from_generators([rho], C.ambient_dim) for name, rho in rhos.items() if not is_zero(rho)}
    for ray in C.rays:
        if V.contains(ray):
            continue
        ray_cone = Cone.from_generators([ray], C.ambient_dim)
        if not any(rc == ray_cone for rc in ray_cones.values()):
            rep.fail(f"extremal ray {ray} is neither in V nor spanned by some rho(D), D in F")
    return rep


def colored_faces(datum: HomogeneousSphericalDatum, cc: ColoredCone) -> list[ColoredCone]:
    colors = _check_colors(datum, cc)
    out = []
    for face in cc.cone.faces():
        if not meets_valuation_cone(datum, face):
            continue
        fcol = frozenset(name for name in cc.colors if face.contains(colors[name].rho))
        out.append(ColoredCone(face, fcol))
    return sorted(out, key=lambda c: c.sort_key)


def is_colored_face(datum: HomogeneousSphericalDatum, cc1: ColoredCone, cc2: ColoredCone) -> bool:
    colors = _check_colors(datum, cc2)
    _check_colors(datum, cc1)
    if not cc1.cone.is_face_of(cc2.cone):
        return False
    expected = frozenset(name for name in cc2.colors if cc1.cone.contains(colors[name].rho))
    return cc1.colors == expected and meets_valuation_cone(datum, cc1.cone)


@dataclass(frozen=True)
class ColoredFan:
    cones: tuple

    @classmethod
    def of(cls, cones: Iterable[ColoredCone]) -> "ColoredFan":
        return cls(tuple(sorted(set(cones), key=lambda c: c.sort_key)))

    @classmethod
    def from_maximal(cls, datum: HomogeneousSphericalDatum, maximal: Iterable[ColoredCone]) -> "ColoredFan":
        """Complete a list of colored cones by all their colored faces."""
        members = set()
        for cc in maximal:
            members.add(cc)
            members.update(colored_faces(datum, cc))
        if not members:
            members.add(ColoredCone.zero(datum.rank))
        return cls.of(members)

    def __iter__(self):
        return iter(self.cones)

    def __len__(self):
        return len(self.cones)

    def __contains__(self, cc) -> bool:
        return cc in self.cones

    def index(self, cc: ColoredCone) -> int:
        return self.cones.index(cc)

    def maximal(self, datum: HomogeneousSphericalDatum) -> list[ColoredCone]:
        return [
            c for c in self.cones
            if not any(d != c and is_colored_face(datum, c, d) for d in self.cones)
        ]


def validate_fan(datum: HomogeneousSphericalDatum, fan: ColoredFan) -> ValidationReport:
    rep = ValidationReport("colored fan")
    if not fan.cones:
        rep.fail("a colored fan must be nonempty")
        return rep
    members = set(fan.cones)
    for cc in fan.cones:
        sub = validate_colored_cone(datum, cc)
        if not sub.ok:
            rep.extend(sub, f"{cc!r}: ")
            continue
        for face in colored_faces(datum, cc):
            if face not in members:
                rep.fail(f"colored face {face!r} of {cc!r} is missing from the fan")
    V = valuation_cone(datum)
    cones = fan.cones
    for i in range(len(cones)):
        for j in range(i + 1, len(cones)):
            if rel_interiors_meet_within(cones[i].cone, cones[j].cone, V):
                rep.fail(f"relative interiors of {cones[i]!r} and {cones[j]!r} meet inside V")
    return rep


def is_complete(datum: HomogeneousSphericalDatum, fan: ColoredFan) -> bool:
    """Does the support of the fan cover the valuation cone?"""
    V = valuation_cone(datum)
    normals = []
    seen = set()
    for cc in fan.cones:
        for h in list(cc.cone.facet_normals) + list(cc.cone.equations):
            key = max(tuple(h), tuple(-x for x in h))
            if key not in seen:
                seen.add(key)
                normals.append(key)
    for cell in hyperplane_arrangement_cells(V, normals):
        p = cell.relative_interior_point()
        if not any(cc.cone.contains(p) for cc in fan.cones):
            return False
    return True


@dataclass(frozen=True)
class OrbitPoset:
    """Hasse diagram of the fan ordered by the colored-face relation.

    ``covers`` holds index pairs ``(i, j)`` where node ``i`` is a maximal
    proper colored face of node ``j``; the orbit of ``j`` then lies in the
    closure of the orbit of ``i``.
    """

    nodes: tuple
    covers: tuple
    order: frozenset  # all pairs (i, j) with i a colored face of j, i != j

    def below(self, j: int) -> set[int]:
        return {a for a, b in self.order if b == j}

    def above(self, i: int) -> set[int]:
        return {b for a, b in self.order if a == i}

    def maximal_above(self, i: int) -> set[int]:
        up = self.above(i)
        return {b for b in up if not self.above(b)}


def orbit_poset(datum: HomogeneousSphericalDatum, fan: ColoredFan) -> OrbitPoset:
    nodes = fan.cones
    n = len(nodes)
    order = {
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and is_colored_face(datum, nodes[i], nodes[j])
    }
    covers = sorted(
        (i, j) for i, j in order if not any((i, k) in order and (k, j) in order for k in range(n))
    )
    return OrbitPoset(nodes, tuple(covers), frozenset(order))
