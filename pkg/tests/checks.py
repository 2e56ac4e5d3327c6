"""Consistency checks run over every orbit of a fan.

Each function returns a list of failure messages (empty on success).
"""

from __future__ import annotations

from spherical_orbits.closure import closure_fan, phi, star_members
from spherical_orbits.colored_fan import is_colored_face, validate_fan
from spherical_orbits.datum import full_colors
from spherical_orbits.exact_linalg import IntLatticeBasis
from spherical_orbits.intersection import intersect_with_orbit, multiplicity_cross_check
from spherical_orbits.orbit import cross_validate, localize


def projection_of_v(datum, fan, cc):
    orbit = localize(datum, fan, cc)
    rep = cross_validate(datum, cc, orbit)
    return [f"{cc!r}: {v}" for v in rep.violations if "pi(V)" in v] + (
        [] if rep.ok else [f"{cc!r}: cross validation: {rep.violations}"]
    )


def phi_of_own_colors(datum, fan, cc):
    orbit = localize(datum, fan, cc)
    got = phi(orbit, full_colors(datum), cc.colors)
    return [] if not got else [f"{cc!r}: Phi(F) = {sorted(got)}"]


def closure_fan_valid(datum, fan, cc):
    orbit, fan0 = closure_fan(datum, fan, cc)
    rep = validate_fan(orbit.datum0, fan0)
    out = [f"{cc!r}: closure fan: {v}" for v in rep.violations]
    members = star_members(datum, fan, cc, orbit)
    if len(fan0) != len(members):
        out.append(f"{cc!r}: closure fan has {len(fan0)} cones for {len(members)} star members")
    own = [m.image for m in members if m.parent == cc]
    if len(own) != 1 or not own[0].cone.is_zero or own[0].colors:
        out.append(f"{cc!r}: own cone does not map to (0, {{}})")
    return out


def poset_embedding(datum, fan, cc):
    orbit = localize(datum, fan, cc)
    members = star_members(datum, fan, cc, orbit)
    out = []
    for a in members:
        for b in members:
            up = is_colored_face(datum, a.parent, b.parent)
            down = is_colored_face(orbit.datum0, a.image, b.image)
            if up != down:
                out.append(f"{cc!r}: face relation of {a.parent!r} <= {b.parent!r} not preserved")
    return out


def functoriality(datum, fan, cc):
    """Localizing twice equals localizing once."""
    orbit, fan0 = closure_fan(datum, fan, cc)
    out = []
    for m in star_members(datum, fan, cc, orbit):
        direct = localize(datum, fan, m.parent)
        twice = localize(orbit.datum0, fan0, m.image)
        lat = IntLatticeBasis.from_generators(
            [orbit.m0_in_m.to_ambient(r) for r in twice.m0_in_m.rows], datum.rank
        )
        if lat != direct.m0_in_m:
            out.append(f"{cc!r} -> {m.parent!r}: weight lattices differ")
        if set(direct.datum0.sigma_characters) != set(twice.datum0.sigma_characters):
            out.append(f"{cc!r} -> {m.parent!r}: spherical roots differ")
        if direct.datum0.s_p != twice.datum0.s_p:
            out.append(f"{cc!r} -> {m.parent!r}: S^p differs")
    return out


def multiplicities(datum, fan, cc):
    orbit = localize(datum, fan, cc)
    out = []
    for D in full_colors(datum):
        if D.name in cc.colors:
            continue
        total = intersect_with_orbit(orbit, D.name)
        if not multiplicity_cross_check(datum, orbit, D.name, total):
            out.append(f"{cc!r}: multiplicities of {D.name} -> {total} do not match")
    return out


ALL = (projection_of_v, phi_of_own_colors, closure_fan_valid, poset_embedding, functoriality, multiplicities)


def run_all(datum, fan):
    failures = []
    for cc in fan:
        for check in ALL:
            failures += check(datum, fan, cc)
    return failures


def toric_datum(n):
    """A torus of rank ``n``: no spherical roots and no colors."""
    from spherical_orbits.datum import HomogeneousSphericalDatum
    from spherical_orbits.root_systems import parse_root_system

    rs = parse_root_system(f"A1+C{n}")
    basis = [tuple(int(j == i + 1) for j in range(n + 1)) for i in range(n)]
    return HomogeneousSphericalDatum.build(rs, basis, [], [0])


def toric_mismatches(n, steps, seed):
    """Compare every closure fan of a random complete toric fan with the
    classical star quotient.  Returns ``(number of cones checked, failures)``."""
    import random

    from oracles import prim, solve_left, stellar_fan, toric_star_quotient
    from spherical_orbits.colored_fan import ColoredCone, ColoredFan

    rng = random.Random(seed)
    rays, maximal = stellar_fan(n, steps, rng)
    rays = [tuple(int(x) for x in r) for r in rays]
    datum = toric_datum(n)
    fan = ColoredFan.from_maximal(
        datum, [ColoredCone.make([rays[i] for i in sorted(s)], [], n) for s in maximal]
    )
    index = {r: i for i, r in enumerate(rays)}
    failures = []
    for cc in fan:
        tau = frozenset(index[r] for r in cc.cone.rays)
        B, expected = toric_star_quotient(rays, maximal, tau, n)
        orbit, fan0 = closure_fan(datum, fan, cc)
        M0 = orbit.m0_in_m
        if M0.rank != n - len(tau) or not M0.is_saturated():
            failures.append(f"{cc!r}: M0 is not the saturated lattice tau^perp")
        T = solve_left(orbit.pi, B, n) if orbit.pi else []
        mapped = {
            frozenset(tuple(int(x) for x in prim([sum(t * w for t, w in zip(row, ray)) for row in T]))
                      for ray in cone)
            for cone in expected
        }
        got = {frozenset(c.cone.rays) for c in fan0}
        if any(c.colors for c in fan0):
            failures.append(f"{cc!r}: colored cone in a toric closure fan")
        if got != mapped:
            failures.append(f"{cc!r}: closure fan {sorted(map(sorted, got))} != {sorted(map(sorted, mapped))}")
    return len(fan), failures
