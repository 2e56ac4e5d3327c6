"""The colored fan of an orbit closure.

The orbits in the closure of ``X0`` correspond to the star of its colored
cone.  Each star member ``(C', F')`` becomes ``(pi(C'), Phi(F'))`` over the
orbit datum, where ``Phi(F')`` pulls type-a colors back along ``psi`` and
adds every orbit color moved by a simple root whose parent colors all lie
in ``F'``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .colored_fan import ColoredCone, ColoredFan, is_colored_face
from .cones import Cone
from .datum import ColorSet, HomogeneousSphericalDatum, full_colors
from .errors import NotInFan, TheoremViolation, UnknownColor
from .orbit import OrbitDatum, full_colors_of_orbit, localize


@dataclass(frozen=True)
class StarMember:
    parent: ColoredCone
    image: ColoredCone


def star(datum: HomogeneousSphericalDatum, fan: ColoredFan, cc: ColoredCone) -> list[ColoredCone]:
    """Fan members having ``cc`` as a colored face, ``cc`` included."""
    if cc not in fan:
        raise NotInFan(f"{cc!r} is not a member of the fan")
    return [d for d in fan if is_colored_face(datum, cc, d)]


def phi(orbit: OrbitDatum, parent_colors: ColorSet, f_prime: Iterable[str]) -> frozenset:
    f_prime = frozenset(f_prime)
    for name in f_prime:
        if name not in parent_colors:
            raise UnknownColor(f"{name!r} is not a color of the parent datum")
    colors0 = full_colors_of_orbit(orbit)
    out = {name0 for name0, name in orbit.psi if name in f_prime}
    for i in range(orbit.parent.root_system.n_simple):
        if parent_colors.moved(i) <= f_prime:
            out |= colors0.moved(i)
    return frozenset(out)


def project_cone(orbit: OrbitDatum, cone: Cone) -> Cone:
    r0 = orbit.datum0.rank
    if r0 == 0:
        return Cone.zero(0)
    return cone.linear_image(orbit.pi)


def star_members(datum: HomogeneousSphericalDatum, fan: ColoredFan, cc: ColoredCone, orbit: OrbitDatum) -> list[StarMember]:
    colors = full_colors(datum)
    out = []
    for parent in star(datum, fan, cc):
        image = ColoredCone(project_cone(orbit, parent.cone), phi(orbit, colors, parent.colors))
        out.append(StarMember(parent, image))
    return out


def closure_fan(datum: HomogeneousSphericalDatum, fan: ColoredFan, cc: ColoredCone) -> tuple[OrbitDatum, ColoredFan]:
    orbit = localize(datum, fan, cc)
    members = star_members(datum, fan, cc, orbit)
    images = [m.image for m in members]
    if len(set(images)) != len(images):
        raise TheoremViolation("two star members have the same image; the input fan is inconsistent")
    for m in members:
        if not m.image.cone.is_strictly_convex:
            raise TheoremViolation(f"pi of {m.parent!r} is not strictly convex")
    return orbit, ColoredFan.of(images)
