"""Homogeneous spherical data and their colors.

Coordinates: ``m_basis`` holds a Z-basis of the weight lattice M as
characters (coefficients over the simple roots, then central coordinates).
Spherical roots are integer vectors in M-coordinates; every element of
N = Hom(M, Z), in particular every ``rho``, is written in the dual basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Sequence

from .cones import Cone
from .errors import InvalidDatum, NonIntegralRho, UnknownColor, ValidationReport
from .exact_linalg import as_fraction, dot, normalize, rank, vec, vec_mat
from .root_systems import RootSystem

KIND_A = "a"
KIND_2A = "2a"
KIND_B1 = "b1"
KIND_B2 = "b2"
KINDS = (KIND_A, KIND_2A, KIND_B1, KIND_B2)


@dataclass(frozen=True)
class HomogeneousSphericalDatum:
    root_system: RootSystem
    m_basis: tuple
    sigma: tuple
    s_p: frozenset
    colors_a: tuple  # ((name, rho), ...)

    @classmethod
    def build(
        cls,
        root_system: RootSystem,
        m_basis: Iterable[Sequence],
        sigma: Iterable[Sequence[int]],
        s_p: Iterable = (),
        colors_a: Iterable = (),
    ) -> "HomogeneousSphericalDatum":
        """Normalizing constructor; ``s_p`` may hold labels or indices and
        ``colors_a`` may be ``(name, rho)`` pairs or a mapping."""
        if isinstance(colors_a, dict):
            colors_a = colors_a.items()
        sp = frozenset(root_system.index(a) if isinstance(a, str) else int(a) for a in s_p)
        return cls(
            root_system,
            tuple(vec(m) for m in m_basis),
            tuple(tuple(int(x) for x in s) for s in sigma),
            sp,
            tuple((str(name), tuple(int(x) for x in rho)) for name, rho in colors_a),
        )

    @property
    def rank(self) -> int:
        return len(self.m_basis)

    def character(self, m_coords: Sequence) -> tuple:
        """The character with the given M-coordinates."""
        if not self.m_basis:
            return (0,) * self.root_system.char_dim
        return vec_mat(m_coords, self.m_basis)

    @cached_property
    def sigma_characters(self) -> tuple:
        return tuple(self.character(s) for s in self.sigma)

    def coroot_restriction(self, i: int) -> tuple:
        """``alpha_i^vee|_M`` in N-coordinates (possibly non-integral)."""
        return tuple(self.root_system.cartan_pairing(i, m) for m in self.m_basis)

    def _root_multiple_in_sigma(self, chi) -> int | None:
        """Index of the spherical root equal to ``chi``."""
        chi = vec(chi)
        for k, s in enumerate(self.sigma_characters):
            if s == chi:
                return k
        return None

    def sigma_index_of_simple(self, i: int) -> int | None:
        """Index ``k`` with ``sigma[k] == alpha_i``, if any."""
        return self._root_multiple_in_sigma(self.root_system.simple_root(i))

    def simple_in_sigma(self, i: int) -> bool:
        return self.sigma_index_of_simple(i) is not None

    def double_in_sigma(self, i: int) -> bool:
        two = tuple(2 * x for x in self.root_system.simple_root(i))
        return self._root_multiple_in_sigma(two) is not None

    def related(self, i: int, j: int) -> bool:
        """``alpha_i ~ alpha_j``: orthogonal with sum in Sigma or 2 Sigma."""
        if i == j or not self.root_system.are_orthogonal(i, j):
            return False
        rs = self.root_system
        s = tuple(a + b for a, b in zip(rs.simple_root(i), rs.simple_root(j)))
        half = tuple(as_fraction(x) / 2 for x in s)
        return (
            self._root_multiple_in_sigma(s) is not None
            or self._root_multiple_in_sigma(half) is not None
        )

    def label(self, i: int) -> str:
        return self.root_system.labels[i]


@dataclass(frozen=True)
class Color:
    name: str
    kind: str
    rho: tuple
    varsigma: frozenset

    def moved_by(self, i: int) -> bool:
        return i in self.varsigma


@dataclass(frozen=True)
class ColorSet:
    colors: tuple

    def __iter__(self):
        return iter(self.colors)

    def __len__(self):
        return len(self.colors)

    def __contains__(self, name) -> bool:
        return any(c.name == name for c in self.colors)

    @property
    def names(self) -> tuple:
        return tuple(c.name for c in self.colors)

    def __getitem__(self, name: str) -> Color:
        for c in self.colors:
            if c.name == name:
                return c
        raise UnknownColor(f"no color named {name!r}")

    def moved(self, i: int) -> frozenset:
        """``D(alpha_i)``: names of colors moved by ``P_alpha_i``."""
        return frozenset(c.name for c in self.colors if i in c.varsigma)

    def of_kind(self, kind: str) -> tuple:
        return tuple(c for c in self.colors if c.kind == kind)

    def find(self, kind: str, varsigma: Iterable[int]) -> Color | None:
        vs = frozenset(varsigma)
        for c in self.colors:
            if c.kind == kind and c.varsigma == vs:
                return c
        return None


@lru_cache(maxsize=512)
def valuation_cone(datum: HomogeneousSphericalDatum) -> Cone:
    """``V = {v : <v, gamma> <= 0 for gamma in Sigma}`` as the dual of
    ``cone(-Sigma)``."""
    r = datum.rank
    return Cone.from_generators([tuple(-x for x in s) for s in datum.sigma], r).dual()


def _integral(v) -> bool:
    return all(as_fraction(x).denominator == 1 for x in v)


def _recover(datum: HomogeneousSphericalDatum, report: ValidationReport | None = None):
    """Build the full color list; problems go to ``report`` when given,
    otherwise raise."""

    def problem(msg, exc=InvalidDatum):
        if report is None:
            raise exc(msg)
        report.fail(msg)

    rs = datum.root_system
    n = rs.n_simple
    colors: list[Color] = []
    simple_sigma = [i for i in range(n) if datum.simple_in_sigma(i)]

    for name, rho in datum.colors_a:
        vs = frozenset(
            i for i in simple_sigma if dot(rho, datum.sigma[datum.sigma_index_of_simple(i)]) == 1
        )
        colors.append(Color(name, KIND_A, tuple(rho), vs))

    for i in range(n):
        if datum.double_in_sigma(i):
            half = tuple(as_fraction(x) / 2 for x in datum.coroot_restriction(i))
            if not _integral(half):
                problem(
                    f"1/2 {datum.label(i)}^vee|_M = {format_vector(half)} is not integral",
                    NonIntegralRho,
                )
                half = tuple(as_fraction(x).numerator for x in half)
            colors.append(Color(f"D_2a({datum.label(i)})", KIND_2A, vec(half), frozenset({i})))

    related = {i: [j for j in range(n) if datum.related(i, j)] for i in range(n)}
    for i in range(n):
        if i in datum.s_p or datum.simple_in_sigma(i) or datum.double_in_sigma(i) or related[i]:
            continue
        rho = datum.coroot_restriction(i)
        if not _integral(rho):
            problem(f"{datum.label(i)}^vee|_M = {format_vector(rho)} is not integral", NonIntegralRho)
        colors.append(Color(f"D_b({datum.label(i)})", KIND_B1, vec(rho), frozenset({i})))

    for i in range(n):
        for j in related[i]:
            if j <= i:
                continue
            rho_i = datum.coroot_restriction(i)
            rho_j = datum.coroot_restriction(j)
            if rho_i != rho_j:
                problem(
                    f"{datum.label(i)}^vee|_M != {datum.label(j)}^vee|_M although "
                    f"{datum.label(i)} ~ {datum.label(j)}"
                )
            if not _integral(rho_i):
                problem(f"{datum.label(i)}^vee|_M is not integral", NonIntegralRho)
            colors.append(
                Color(
                    f"D_b({datum.label(i)},{datum.label(j)})",
                    KIND_B2,
                    vec(rho_i),
                    frozenset({i, j}),
                )
            )

    names = [c.name for c in colors]
    dupes = sorted({x for x in names if names.count(x) > 1})
    if dupes:
        problem(f"color names collide: {dupes}")
    return ColorSet(tuple(colors))


def validate_datum(datum: HomogeneousSphericalDatum) -> ValidationReport:
    """Check the necessary conditions on a homogeneous spherical datum.

    Only the listed combinatorial consequences are checked, not the full
    Luna axiom system, so a clean report does not certify existence.
    """
    rep = ValidationReport("homogeneous spherical datum")
    rs = datum.root_system
    r = datum.rank
    n = rs.n_simple

    shape_ok = True
    for m in datum.m_basis:
        if len(m) != rs.char_dim:
            rep.fail(f"M basis vector {format_vector(m)} has length {len(m)}, expected {rs.char_dim}")
            shape_ok = False
    for s in datum.sigma:
        if len(s) != r:
            rep.fail(f"spherical root {list(s)} has length {len(s)}, expected rank M = {r}")
            shape_ok = False
    for name, rho in datum.colors_a:
        if len(rho) != r:
            rep.fail(f"rho({name}) has length {len(rho)}, expected rank M = {r}")
            shape_ok = False
    for i in datum.s_p:
        if not 0 <= i < n:
            rep.fail(f"S^p index {i} is not a simple root")
            shape_ok = False
    names = [name for name, _ in datum.colors_a]
    if len(set(names)) != len(names):
        rep.fail("type-a color names are not unique")
    if not shape_ok:
        return rep

    if datum.m_basis and rank(datum.m_basis) != r:
        rep.fail("M basis is linearly dependent")
        return rep
    if datum.sigma and rank(datum.sigma) != len(datum.sigma):
        rep.fail(f"spherical roots {[list(s) for s in datum.sigma]} are linearly dependent")
    for s in datum.sigma:
        if gcd(*s) != 1:
            rep.fail(f"spherical root {list(s)} is not primitive in M")
    for i in range(n):
        if datum.simple_in_sigma(i) and datum.double_in_sigma(i):
            rep.fail(f"both {datum.label(i)} and 2{datum.label(i)} are spherical roots")

    for i in range(n):
        k = datum.sigma_index_of_simple(i)
        if k is None:
            continue
        gamma = datum.sigma[k]
        pos = [(name, rho) for name, rho in datum.colors_a if dot(rho, gamma) > 0]
        if len(pos) != 2:
            rep.fail(
                f"{datum.label(i)} in Sigma ∩ S needs exactly two type-a colors with "
                f"<rho, {datum.label(i)}> > 0, found {[p[0] for p in pos]}"
            )
        else:
            total = tuple(a + b for a, b in zip(pos[0][1], pos[1][1]))
            cor = datum.coroot_restriction(i)
            if vec(total) != vec(cor):
                rep.fail(
                    f"rho({pos[0][0]})+rho({pos[1][0]}) = {format_vector(total)} != "
                    f"{datum.label(i)}^vee|_M = {format_vector(cor)}"
                )

    simple_sigma = {datum.sigma_index_of_simple(i) for i in range(n)} - {None}
    for name, rho in datum.colors_a:
        moved = False
        for k, gamma in enumerate(datum.sigma):
            p = dot(rho, gamma)
            if p > 1:
                rep.fail(f"<rho({name}), sigma_{k + 1}> = {p} > 1")
            elif p == 1:
                if k in simple_sigma:
                    moved = True
                else:
                    rep.fail(
                        f"<rho({name}), sigma_{k + 1}> = 1 but sigma_{k + 1} is not a simple root"
                    )
        if not moved:
            rep.fail(f"type-a color {name} is moved by no simple root in Sigma")

    colors = _recover(datum, rep)
    moved_union = set()
    for c in colors:
        moved_union |= c.varsigma
    expected_sp = set(range(n)) - moved_union
    if set(datum.s_p) != expected_sp:
        got = sorted(datum.label(i) for i in datum.s_p)
        want = sorted(datum.label(i) for i in expected_sp)
        rep.fail(f"S^p = {got} but the colors leave {want} unmoved")
    for i in range(n):
        d = colors.moved(i)
        if len(d) > 2:
            rep.fail(f"D({datum.label(i)}) = {sorted(d)} has more than two colors")
        if (len(d) == 2) != datum.simple_in_sigma(i):
            rep.fail(f"|D({datum.label(i)})| = {len(d)} inconsistent with Sigma ∩ S")
    if rep.ok:
        rep.note("necessary conditions hold (the full Luna axioms are not checked)")
    return rep


@lru_cache(maxsize=512)
def _full_colors_cached(datum: HomogeneousSphericalDatum) -> ColorSet:
    rep = validate_datum(datum)
    if not rep.ok:
        non_integral = [v for v in rep.violations if "not integral" in v]
        exc = NonIntegralRho if non_integral else InvalidDatum
        raise exc("; ".join(rep.violations))
    return _recover(datum)


def full_colors(datum: HomogeneousSphericalDatum) -> ColorSet:
    """Recover the full color set D with rho and varsigma."""
    return _full_colors_cached(datum)


def format_vector(v: Sequence) -> str:
    return "(" + ", ".join(str(normalize(x)) for x in v) + ")"
