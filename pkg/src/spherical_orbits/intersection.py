"""Intersections of color closures with a closed orbit.

For a simple embedding with closed orbit ``X0`` and a color ``D`` outside
``F``, the closure of ``D`` meets ``X0`` in a formal sum of orbit colors:

==========================================  ===================================
color ``D``                                 ``closure(D) ∩ X0``
==========================================  ===================================
type a, ``varsigma(D) ∩ Sigma0 != ∅``       ``psi^-1(D) + sum D_{0,alpha}`` over
                                            ``alpha in varsigma(D) \\ Sigma0``
type a, ``varsigma(D) ∩ Sigma0 = ∅``        ``sum D_{0,alpha}`` over ``varsigma(D)``
``D_{2alpha}``, ``2alpha in Sigma0``        ``D_{0,2alpha}``
``D_{2alpha}`` otherwise                    ``2 D_{0,alpha}``
``D_{alpha,beta}``, sum in ``Sigma0 ∪ 2Sigma0``  ``D_{0,alpha,beta}``
``D_{alpha,beta}`` otherwise                ``D_{0,alpha} + D_{0,beta}``
``D_alpha``                                 ``D_{0,alpha}``
==========================================  ===================================
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .colored_fan import ColoredCone, ColoredFan
from .datum import KIND_2A, KIND_A, KIND_B1, KIND_B2, ColorSet, HomogeneousSphericalDatum, full_colors
from .errors import ColorInF, TheoremViolation, UnknownColor
from .orbit import OrbitDatum, full_colors_of_orbit, localize


@dataclass(frozen=True)
class FormalColorSum:
    terms: tuple  # ((orbit color name, multiplicity), ...), sorted by name

    @classmethod
    def of(cls, terms: Mapping[str, int]) -> "FormalColorSum":
        for name, mu in terms.items():
            if mu < 1:
                raise ValueError(f"multiplicity of {name} must be positive, got {mu}")
        return cls(tuple(sorted(terms.items())))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(name if mu == 1 else f"{mu}*{name}" for name, mu in self.terms)


def _b1(colors0: ColorSet, orbit: OrbitDatum, i: int) -> str:
    c = colors0.find(KIND_B1, {i})
    if c is None:
        label = orbit.parent.label(i)
        raise TheoremViolation(
            f"the orbit has no color D_0,{label} of type b1; this cannot happen for a "
            "genuine spherical datum"
        )
    return c.name


def _lookup(colors0: ColorSet, orbit: OrbitDatum, kind: str, vs) -> str:
    c = colors0.find(kind, vs)
    if c is None:
        labels = ",".join(orbit.parent.label(i) for i in sorted(vs))
        raise TheoremViolation(f"the orbit has no color of type {kind} moved by {labels}")
    return c.name


def intersect_with_orbit(orbit: OrbitDatum, name: str) -> FormalColorSum:
    datum = orbit.parent
    colors = full_colors(datum)
    D = colors[name]
    if name in orbit.cc.colors:
        raise ColorInF(f"{name} lies in F, so its closure contains the orbit")
    colors0 = full_colors_of_orbit(orbit)
    d0 = orbit.datum0
    terms: dict[str, int] = {}

    def add(n, mu=1):
        terms[n] = terms.get(n, 0) + mu

    if D.kind == KIND_A:
        in_sigma0 = {i for i in D.varsigma if d0.simple_in_sigma(i)}
        if in_sigma0:
            name0 = orbit.psi_inverse(name)
            if name0 is None:
                raise TheoremViolation(f"{name} meets Sigma0 but has no psi-preimage")
            add(name0)
        for i in sorted(D.varsigma - in_sigma0):
            add(_b1(colors0, orbit, i))
    elif D.kind == KIND_2A:
        (i,) = D.varsigma
        if d0.double_in_sigma(i):
            add(_lookup(colors0, orbit, KIND_2A, {i}))
        else:
            add(_b1(colors0, orbit, i), 2)
    elif D.kind == KIND_B2:
        i, j = sorted(D.varsigma)
        if d0.related(i, j):
            add(_lookup(colors0, orbit, KIND_B2, {i, j}))
        else:
            add(_b1(colors0, orbit, i))
            add(_b1(colors0, orbit, j))
    else:
        (i,) = D.varsigma
        add(_b1(colors0, orbit, i))
    return FormalColorSum.of(terms)


def intersect_color(
    datum: HomogeneousSphericalDatum, fan: ColoredFan | None, cc: ColoredCone, name: str
) -> FormalColorSum:
    """``closure(D) ∩ X0`` for the orbit ``X0`` of ``cc`` as a formal sum."""
    if name not in full_colors(datum):
        raise UnknownColor(f"no color named {name!r}")
    return intersect_with_orbit(localize(datum, fan, cc), name)


def _c(color, i: int) -> int:
    if i not in color.varsigma:
        return 0
    return 2 if color.kind == KIND_2A else 1


def multiplicity_cross_check(
    datum: HomogeneousSphericalDatum, orbit: OrbitDatum, name: str, total: FormalColorSum
) -> bool:
    """Compare, at every simple root, the coefficient of ``D`` with the
    weighted coefficients of the orbit colors in ``total``."""
    D = full_colors(datum)[name]
    colors0 = full_colors_of_orbit(orbit)
    for i in range(datum.root_system.n_simple):
        rhs = sum(mu * _c(colors0[n0], i) for n0, mu in total.terms)
        if _c(D, i) != rhs:
            return False
    return True
