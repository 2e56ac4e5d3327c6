"""Exact rational polyhedral cones.

A :class:`Cone` carries both descriptions at once:

* generators: a lineality basis (HNF of the saturated lattice of the
  lineality space) and primitive extremal rays of the pointed part, each
  ray orthogonally projected off the lineality space;
* facets: the same data for the dual cone, i.e. equations spanning the
  orthogonal complement and irredundant facet normals.

Both are canonical, so ``==`` is geometric equality.  Conversions use the
double description method with integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch
from .exact_linalg import (
    as_fraction,
    dot,
    is_zero,
    mat_vec,
    primitive,
    rank,
    saturation,
    solve,
)


def _prim_int(v):
    g = gcd(*v)
    if g == 0:
        return None
    return tuple(a // g for a in v)


def _double_description(ineqs: Sequence[Sequence[int]], n: int):
    """Generators of ``{x in Q^n : <a, x> >= 0 for a in ineqs}``.

    Returns ``(lineality, rays)``: integer vectors, rays extreme modulo the
    lineality space but not yet canonicalized.
    """
    lin = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays: list[tuple] = []
    zeros: list[frozenset] = []
    for k, a in enumerate(ineqs):
        if is_zero(a):
            continue
        vals = [dot(a, l) for l in lin]
        j = next((i for i, x in enumerate(vals) if x != 0), None)
        if j is not None:
            l0 = lin[j] if vals[j] > 0 else tuple(-x for x in lin[j])
            s0 = abs(vals[j])
            new_lin = []
            for i, l in enumerate(lin):
                if i == j:
                    continue
                w = _prim_int(tuple(s0 * x - vals[i] * y for x, y in zip(l, l0)))
                if w is not None:
                    new_lin.append(w)
            new_rays = []
            for r in rays:
                t = dot(a, r)
                new_rays.append(_prim_int(tuple(s0 * x - t * y for x, y in zip(r, l0))))
            zeros = [z | {k} for z in zeros]
            lin = new_lin
            rays = new_rays + [l0]
            zeros.append(frozenset(range(k)))
            continue
        vals = [dot(a, r) for r in rays]
        pos = [i for i, x in enumerate(vals) if x > 0]
        negs = [i for i, x in enumerate(vals) if x < 0]
        zer = [i for i, x in enumerate(vals) if x == 0]
        if not negs:
            zeros = [z | {k} if vals[i] == 0 else z for i, z in enumerate(zeros)]
            continue
        out_rays = [rays[i] for i in pos + zer]
        out_zeros = [zeros[i] for i in pos] + [zeros[i] | {k} for i in zer]
        for p in pos:
            for q in negs:
                common = zeros[p] & zeros[q]
                if any(
                    i != p and i != q and common <= zeros[i]
                    for i in range(len(rays))
                ):
                    continue
                w = tuple(vals[p] * y - vals[q] * x for x, y in zip(rays[p], rays[q]))
                w = _prim_int(w)
                if w is None:
                    continue
                out_rays.append(w)
                out_zeros.append(common | {k})
        rays, zeros = out_rays, out_zeros
    return lin, rays


def _canonical(lin, rays, n):
    """Canonical (lineality HNF, sorted projected primitive rays)."""
    L = saturation(lin, n)
    if L.rows:
        basis = [[as_fraction(a) for a in r] for r in L.rows]
        gram = [[dot(u, v) for v in basis] for u in basis]
    out = set()
    for r in rays:
        if L.rows:
            rhs = [dot(u, r) for u in basis]
            coef = solve(gram, rhs)
            proj = [as_fraction(x) - sum(c * u[i] for c, u in zip(coef, basis)) for i, x in enumerate(r)]
            if all(x == 0 for x in proj):
                continue
            out.add(primitive(proj))
        else:
            p = _prim_int(tuple(int(x) for x in r))
            if p is not None:
                out.add(p)
    return L.rows, tuple(sorted(out))


def _to_int_rays(vecs, n):
    out = []
    for v in vecs:
        if len(v) != n:
            raise DimensionMismatch(f"vector {tuple(v)} has length {len(v)}, expected {n}")
        if not is_zero(v):
            out.append(primitive(v))
    return out


def _pm(basis):
    return [tuple(b) for b in basis] + [tuple(-x for x in b) for b in basis]


@dataclass(frozen=True)
class Cone:
    ambient_dim: int
    lineality: tuple
    rays: tuple
    equations: tuple
    facet_normals: tuple

    # -- construction -----------------------------------------------------

    @classmethod
    def from_generators(cls, vecs: Iterable[Sequence], ambient_dim: int | None = None) -> "Cone":
        vecs = [tuple(v) for v in vecs]
        if ambient_dim is None:
            if not vecs:
                raise DimensionMismatch("ambient dimension needed for an empty generator list")
            ambient_dim = len(vecs[0])
        n = ambient_dim
        gens = _to_int_rays(vecs, n)
        eqs, normals = _canonical(*_double_description(gens, n), n)
        lin, rays = _canonical(*_double_description(_pm(eqs) + list(normals), n), n)
        return cls(n, lin, rays, eqs, normals)

    @classmethod
    def from_inequalities(
        cls, ineqs: Iterable[Sequence], ambient_dim: int, equations: Iterable[Sequence] = ()
    ) -> "Cone":
        n = ambient_dim
        rows = _to_int_rays(list(ineqs), n) + _pm(_to_int_rays(list(equations), n))
        lin, rays = _canonical(*_double_description(rows, n), n)
        eqs, normals = _canonical(*_double_description(_pm(lin) + list(rays), n), n)
        return cls(n, lin, rays, eqs, normals)

    @classmethod
    def zero(cls, n: int) -> "Cone":
        return cls.from_generators([], n)

    @classmethod
    def full(cls, n: int) -> "Cone":
        return cls.from_inequalities([], n)

    # -- descriptions -----------------------------------------------------

    @cached_property
    def generators(self) -> tuple:
        return tuple(sorted(set(_pm(self.lineality)) | set(self.rays)))

    @cached_property
    def facets(self) -> tuple:
        return tuple(sorted(set(_pm(self.equations)) | set(self.facet_normals)))

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    @property
    def is_strictly_convex(self) -> bool:
        return not self.lineality

    @property
    def is_zero(self) -> bool:
        return not self.lineality and not self.rays

    def dual(self) -> "Cone":
        return Cone(self.ambient_dim, self.equations, self.facet_normals, self.lineality, self.rays)

    def _check(self, n):
        if n != self.ambient_dim:
            raise DimensionMismatch(f"ambient dimensions differ: {self.ambient_dim} vs {n}")

    # -- membership -------------------------------------------------------

    def contains(self, v: Sequence) -> bool:
        self._check(len(v))
        return all(dot(e, v) == 0 for e in self.equations) and all(
            dot(f, v) >= 0 for f in self.facet_normals
        )

    def in_relative_interior(self, v: Sequence) -> bool:
        self._check(len(v))
        return all(dot(e, v) == 0 for e in self.equations) and all(
            dot(f, v) > 0 for f in self.facet_normals
        )

    def contains_cone(self, other: "Cone") -> bool:
        self._check(other.ambient_dim)
        return all(self.contains(g) for g in other.generators)

    def relative_interior_point(self) -> tuple:
        """Sum of the extremal rays; lies in the relative interior."""
        out = [0] * self.ambient_dim
        for r in self.rays:
            out = [a + b for a, b in zip(out, r)]
        return tuple(out)

    # -- faces ------------------------------------------------------------

    def _face_from_rays(self, ray_idx) -> "Cone":
        return Cone.from_generators(
            _pm(self.lineality) + [self.rays[i] for i in ray_idx], self.ambient_dim
        )

    def faces(self) -> list["Cone"]:
        """All faces, smallest dimension first."""
        full = frozenset(range(len(self.rays)))
        incid = [
            frozenset(i for i, r in enumerate(self.rays) if dot(f, r) == 0)
            for f in self.facet_normals
        ]
        found = {full}
        frontier = [full]
        while frontier:
            nxt = []
            for s in frontier:
                for z in incid:
                    t = s & z
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
            frontier = nxt
        faces = [self._face_from_rays(sorted(s)) for s in found]
        return sorted(set(faces), key=lambda c: (c.dim, c.generators))

    def smallest_face_containing(self, other: "Cone") -> "Cone":
        """The smallest face of ``self`` containing the cone ``other``
        (which must lie inside ``self``)."""
        gens = other.generators
        active = [f for f in self.facet_normals if all(dot(f, g) == 0 for g in gens)]
        keep = [i for i, r in enumerate(self.rays) if all(dot(f, r) == 0 for f in active)]
        return self._face_from_rays(keep)

    def is_face_of(self, other: "Cone") -> bool:
        other._check(self.ambient_dim)
        if not other.contains_cone(self):
            return False
        return other.smallest_face_containing(self) == self

    # -- operations -------------------------------------------------------

    def intersect(self, other: "Cone") -> "Cone":
        self._check(other.ambient_dim)
        return Cone.from_inequalities(
            list(self.facet_normals) + list(other.facet_normals),
            self.ambient_dim,
            list(self.equations) + list(other.equations),
        )

    def intersect_subspace(self, equations: Iterable[Sequence]) -> "Cone":
        equations = [tuple(e) for e in equations]
        for e in equations:
            self._check(len(e))
        return Cone.from_inequalities(
            self.facet_normals, self.ambient_dim, list(self.equations) + equations
        )

    def linear_image(self, A: Sequence[Sequence]) -> "Cone":
        """Image under the linear map with matrix ``A`` (rows = output
        coordinates)."""
        for row in A:
            self._check(len(row))
        m = len(A)
        return Cone.from_generators([mat_vec(A, g) for g in self.generators], m)

    def span_rank(self) -> int:
        return rank(self.generators) if self.generators else 0

    def __repr__(self) -> str:
        if self.is_zero:
            return f"Cone(0 in Q^{self.ambient_dim})"
        return f"Cone({list(self.generators)})"


def dual_cone(C: Cone) -> Cone:
    return C.dual()


def faces(C: Cone) -> list[Cone]:
    return C.faces()


def is_face(Cp: Cone, C: Cone) -> bool:
    return Cp.is_face_of(C)


def contains(C: Cone, v: Sequence) -> bool:
    return C.contains(v)


def in_relative_interior(C: Cone, v: Sequence) -> bool:
    return C.in_relative_interior(v)


def intersect(C1: Cone, C2: Cone) -> Cone:
    return C1.intersect(C2)


def linear_image(C: Cone, A: Sequence[Sequence]) -> Cone:
    return C.linear_image(A)


def rel_interiors_meet_within(C1: Cone, C2: Cone, W: Cone) -> bool:
    """Is there an ``x`` in the relative interiors of ``C1`` and ``C2`` that
    also lies in ``W``?

    The strict inequalities are homogenized with a slack coordinate ``t``:
    ``<f, x> >= t``, ``t >= 0``; the system is feasible with ``t > 0`` iff
    some extremal ray of the lifted cone has positive ``t``.
    """
    C1._check(C2.ambient_dim)
    C1._check(W.ambient_dim)
    n = C1.ambient_dim
    rows = []
    for e in list(C1.equations) + list(C2.equations) + list(W.equations):
        rows.append(tuple(e) + (0,))
        rows.append(tuple(-x for x in e) + (0,))
    for f in W.facet_normals:
        rows.append(tuple(f) + (0,))
    for f in list(C1.facet_normals) + list(C2.facet_normals):
        rows.append(tuple(f) + (-1,))
    rows.append((0,) * n + (1,))
    _, rays = _double_description(rows, n + 1)
    return any(r[n] > 0 for r in rays)


def hyperplane_arrangement_cells(region: Cone, normals: Iterable[Sequence]) -> list[Cone]:
    """Full-dimensional cells of ``region`` cut by the hyperplanes
    ``normals^perp``."""
    cells = [region]
    d = region.dim
    for h in normals:
        if all(dot(h, g) == 0 for g in region.generators):
            continue
        nxt = []
        for cell in cells:
            for sign in (1, -1):
                part = Cone.from_inequalities(
                    list(cell.facet_normals) + [tuple(sign * x for x in h)],
                    cell.ambient_dim,
                    cell.equations,
                )
                if part.dim == d:
                    nxt.append(part)
        cells = nxt
    return cells


__all__ = [
    "Cone",
    "dual_cone",
    "faces",
    "is_face",
    "contains",
    "in_relative_interior",
    "intersect",
    "linear_image",
    "rel_interiors_meet_within",
    "hyperplane_arrangement_cells",
]
