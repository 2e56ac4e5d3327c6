"""The homogeneous spherical datum of a G-orbit in a spherical embedding.

Given a colored cone ``(C, F)`` the orbit ``X0`` has weight lattice
``M0 = M ∩ C^perp``; its spherical roots span the extremal rays of
``cone(Sigma) ∩ M0_Q``; ``S^p_0`` collects the simple roots whose moved
colors all lie in ``F``; and its type-a colors are in bijection (via
``psi``) with the type-a colors of the parent that some spherical root of
``X0`` moves.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .colored_fan import ColoredCone, ColoredFan, validate_colored_cone
from .cones import Cone
from .datum import (
    KIND_A,
    ColorSet,
    HomogeneousSphericalDatum,
    full_colors,
    validate_datum,
    valuation_cone,
)
from .errors import (
    InvalidColoredCone,
    InvalidDatum,
    NonSimplicialTrace,
    NotInFan,
    TheoremViolation,
    ValidationReport,
)
from .exact_linalg import (
    IntLatticeBasis,
    dot,
    integer_kernel,
    mat_vec,
    primitive_generator,
    rank,
    restrict_functional,
    vec_mat,
)

ORBIT_SUFFIX = "@X0"


@dataclass(frozen=True)
class OrbitDatum:
    parent: HomogeneousSphericalDatum
    cc: ColoredCone
    datum0: HomogeneousSphericalDatum
    m0_in_m: IntLatticeBasis
    pi: tuple  # rows of M0 in M-coordinates; pi(v) = pi . v maps N to N0
    psi: tuple  # ((orbit color name, parent color name), ...)

    @property
    def psi_map(self) -> dict:
        return dict(self.psi)

    def psi_inverse(self, parent_name: str) -> str | None:
        for name0, name in self.psi:
            if name == parent_name:
                return name0
        return None

    def project(self, v) -> tuple:
        """``pi(v)`` for ``v`` in N."""
        if not self.pi:
            return ()
        return mat_vec(self.pi, v)

    def sigma0_in_m(self) -> list[tuple]:
        """Spherical roots of the orbit, in M-coordinates."""
        return [self.m0_in_m.to_ambient(s) for s in self.datum0.sigma]

    def simple_in_sigma0(self, i: int) -> bool:
        return self.datum0.simple_in_sigma(i)


def _sigma0(datum: HomogeneousSphericalDatum, C: Cone, M0: IntLatticeBasis) -> list[tuple]:
    r = datum.rank
    trace = Cone.from_generators(datum.sigma, r).intersect_subspace(C.generators)
    if trace.lineality:
        raise NonSimplicialTrace("cone(Sigma) ∩ M0 is not strictly convex")
    rays = list(trace.rays)
    if rays and rank(rays) != len(rays):
        raise NonSimplicialTrace(
            f"cone(Sigma) ∩ M0 has {len(rays)} extremal rays {rays} of rank {rank(rays)}"
        )
    # M0 is saturated, so the primitive point of M on each ray already lies
    # in M0 and is primitive there as well.
    return sorted(primitive_generator(ray, M0) for ray in rays)


def localize(
    datum: HomogeneousSphericalDatum,
    fan: ColoredFan | None,
    cc: ColoredCone,
) -> OrbitDatum:
    """The datum ``(M0, Sigma0, S^p_0, D^a_0)`` of the orbit of ``cc``.

    ``fan`` may be ``None``, in which case ``cc`` is only checked to be a
    valid colored cone.
    """
    if fan is not None and cc not in fan:
        raise NotInFan(f"{cc!r} is not a member of the fan")
    colors = full_colors(datum)
    rep = validate_colored_cone(datum, cc)
    if not rep.ok:
        raise InvalidColoredCone(str(rep))
    C = cc.cone
    r = datum.rank
    rs = datum.root_system

    M0 = integer_kernel(C.generators, r)
    sigma0 = _sigma0(datum, C, M0)
    s_p0 = frozenset(i for i in range(rs.n_simple) if colors.moved(i) <= cc.colors)

    sigma0_chars = {datum.character(M0.to_ambient(s)) for s in sigma0}
    simple_in_sigma0 = {i for i in range(rs.n_simple) if rs.simple_root(i) in sigma0_chars}

    colors_a0 = []
    psi = []
    for name, rho in datum.colors_a:
        if colors[name].varsigma & simple_in_sigma0:
            name0 = name + ORBIT_SUFFIX
            colors_a0.append((name0, restrict_functional(rho, M0)))
            psi.append((name0, name))

    m_basis0 = [datum.character(row) for row in M0.rows]
    datum0 = HomogeneousSphericalDatum.build(rs, m_basis0, sigma0, s_p0, colors_a0)
    return OrbitDatum(datum, cc, datum0, M0, M0.rows, tuple(psi))


def full_colors_of_orbit(orbit: OrbitDatum) -> ColorSet:
    return full_colors(orbit.datum0)


class Refinement(enum.Enum):
    REFINED = "Refined"
    NOT_APPLICABLE = "NotApplicable"


def sigma_in_m0(datum: HomogeneousSphericalDatum, M0: IntLatticeBasis) -> list[tuple]:
    """``Sigma ∩ M0`` in M0-coordinates."""
    out = []
    for s in datum.sigma:
        if M0.contains(s):
            out.append(tuple(int(x) for x in M0.coordinates(s)))
    return sorted(out)


def check_refinement(datum: HomogeneousSphericalDatum, cc: ColoredCone, orbit: OrbitDatum) -> Refinement:
    """When ``dim(C ∩ V) = dim C`` the spherical roots of the orbit are
    exactly ``Sigma ∩ M0``."""
    C = cc.cone
    if C.intersect(valuation_cone(datum)).dim != C.dim:
        return Refinement.NOT_APPLICABLE
    expected = sigma_in_m0(datum, orbit.m0_in_m)
    if sorted(orbit.datum0.sigma) != expected:
        raise TheoremViolation(
            f"dim(C ∩ V) = dim C but Sigma0 = {list(orbit.datum0.sigma)} "
            f"differs from Sigma ∩ M0 = {expected}"
        )
    return Refinement.REFINED


def cross_validate(datum: HomogeneousSphericalDatum, cc: ColoredCone, orbit: OrbitDatum) -> ValidationReport:
    """Run every consistency property of the orbit datum."""
    rep = ValidationReport(f"orbit of {cc!r}")
    C = cc.cone
    rs = datum.root_system
    colors = full_colors(datum)
    M0 = orbit.m0_in_m
    d0 = orbit.datum0
    sigma0_m = orbit.sigma0_in_m()

    for row in M0.rows:
        for g in C.generators:
            if dot(row, g) != 0:
                rep.fail(f"M0 basis vector {row} does not vanish on generator {g} of C")
    if d0.sigma and rank(d0.sigma) != len(d0.sigma):
        rep.fail("Sigma0 is linearly dependent")

    sub = validate_datum(d0)
    if not sub.ok:
        rep.extend(sub, "orbit datum: ")

    # the valuation cone of the orbit is the projection of V
    V0 = valuation_cone(d0)
    piV = valuation_cone(datum).linear_image(orbit.pi) if orbit.pi else Cone.zero(0)
    if piV != V0:
        rep.fail(f"pi(V) = {piV!r} differs from V0 = {V0!r}")

    sigma_cone = {}

    def cone_without(k):
        if k not in sigma_cone:
            rest = [s for j, s in enumerate(datum.sigma) if j != k]
            sigma_cone[k] = Cone.from_generators(rest, datum.rank)
        return sigma_cone[k]

    def sigma0_inside(k):
        K = cone_without(k)
        return all(K.contains(s) for s in sigma0_m)

    sigma0_set = set(map(tuple, sigma0_m))
    for k, gamma in enumerate(datum.sigma):
        if all(dot(g, gamma) <= 0 for g in C.generators):
            if tuple(gamma) not in sigma0_set and not sigma0_inside(k):
                rep.fail(
                    f"spherical root {rs.format_character(datum.sigma_characters[k])} is "
                    "nonpositive on C, but neither lies in Sigma0 nor bounds it"
                )

    psi = orbit.psi_map
    parents = set(psi.values())
    colors0 = full_colors(d0)
    simple0 = {i for i in range(rs.n_simple) if d0.simple_in_sigma(i)}
    for name, _ in datum.colors_a:
        vs = colors[name].varsigma
        meets = bool(vs & simple0)
        if meets != (name in parents):
            rep.fail(f"psi image and the condition varsigma({name}) ∩ Sigma0 != ∅ disagree")
        for i in sorted(vs):
            k = datum.sigma_index_of_simple(i)
            ok = i in simple0 or sigma0_inside(k)
            if meets and not ok:
                rep.fail(
                    f"{rs.labels[i]} in varsigma({name}) is not in Sigma0 and "
                    f"cone(Sigma0) is not inside cone(Sigma \\ {{{rs.labels[i]}}})"
                )
            elif not ok:
                rep.note(f"varsigma({name}) ∩ Sigma0 = ∅ is forced through {rs.labels[i]}")

    for name0, name in orbit.psi:
        c0 = colors0[name0]
        if c0.kind != KIND_A:
            rep.fail(f"{name0} is not a type-a color of the orbit")
        expected_vs = colors[name].varsigma & simple0
        if c0.varsigma != expected_vs:
            rep.fail(f"varsigma0({name0}) = {sorted(c0.varsigma)} != varsigma({name}) ∩ Sigma0")
        if c0.rho != orbit.project(colors[name].rho):
            rep.fail(f"rho0({name0}) != pi(rho({name}))")

    refinement = check_refinement(datum, cc, orbit)
    rep.note(f"refinement check: {refinement.value}")
    return rep


def orbit_for(datum, fan, cc) -> OrbitDatum:
    """``localize`` with the datum validated up front."""
    rep = validate_datum(datum)
    if not rep.ok:
        raise InvalidDatum(str(rep))
    return localize(datum, fan, cc)


def character_of_m0(orbit: OrbitDatum, coords) -> tuple:
    return orbit.parent.character(vec_mat(coords, orbit.m0_in_m.rows))
