import random

import pytest

from oracles import h_to_v, same_span
from spherical_orbits.cones import (
    Cone,
    contains,
    dual_cone,
    faces,
    hyperplane_arrangement_cells,
    in_relative_interior,
    intersect,
    is_face,
    linear_image,
    rel_interiors_meet_within,
)
from spherical_orbits.errors import DimensionMismatch

E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
QUADRANT = Cone.from_generators([(1, 0), (0, 1)])
# valuation cone of the four-factor fixture: v1 <= 0, v2 <= 0
V_CL = Cone.from_generators([(-1, 0, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])


def random_cone(rng, n=None, max_gens=5, bound=4):
    n = n or rng.randint(1, 5)
    k = rng.randint(0, max_gens)
    gens = [tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(k)]
    return Cone.from_generators(gens, n)


def random_ineqs(rng, n, max_rows=4, bound=3):
    k = rng.randint(0, max_rows)
    return [tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(k)]


def matches_oracle(cone, ineqs, n):
    lin_rank, lin, rays = h_to_v(ineqs, n)
    if len(cone.lineality) != lin_rank:
        return False
    if lin_rank and not same_span(cone.lineality, lin, n):
        return False
    return sorted(cone.rays) == rays


class TestConstruction:
    def test_quadrant(self):
        assert QUADRANT.rays == ((0, 1), (1, 0))
        assert sorted(QUADRANT.facet_normals) == [(0, 1), (1, 0)]

    def test_zero_cone(self):
        Z = Cone.from_generators([], 3)
        assert Z.is_zero and Z.generators == ()
        assert sorted(Z.facets) == sorted([E1, E2, E3, (-1, 0, 0), (0, -1, 0), (0, 0, -1)])

    def test_localization_cone(self):
        C = Cone.from_generators([(-1, 1, -1, 0), (0, -1, 1, -1)])
        assert C.dim == 2 and C.is_strictly_convex

    def test_generators_are_canonical(self):
        a = Cone.from_generators([(2, 0), (0, 3), (1, 1)])
        assert a == QUADRANT
        assert a.generators == ((0, 1), (1, 0))

    def test_mismatch(self):
        with pytest.raises(DimensionMismatch):
            Cone.from_generators([(1, 0), (1, 0, 0)])
        with pytest.raises(DimensionMismatch):
            contains(QUADRANT, (1, 0, 0))


class TestDual:
    def test_self_dual_quadrant(self):
        assert dual_cone(QUADRANT) == QUADRANT

    def test_valuation_cone(self):
        minus_sigma = Cone.from_generators([(-1, 0, 0), (0, -1, 0)])
        V = dual_cone(minus_sigma)
        assert V == V_CL
        for g in V.generators:
            for s in minus_sigma.generators:
                assert sum(a * b for a, b in zip(g, s)) >= 0

    def test_full_space(self):
        assert dual_cone(Cone.full(3)).is_zero

    def test_involution_random(self):
        rng = random.Random(11)
        for _ in range(200):
            C = random_cone(rng)
            assert dual_cone(dual_cone(C)) == C


class TestFaces:
    def test_quadrant(self):
        assert len(faces(QUADRANT)) == 4

    def test_simplicial(self):
        assert len(faces(Cone.from_generators([E1, E2, E3]))) == 8

    def test_zero(self):
        assert faces(Cone.zero(2)) == [Cone.zero(2)]

    def test_is_face_examples(self):
        big = Cone.from_generators([(-1, -1, 0), E1, E3])
        assert is_face(Cone.from_generators([E3]), big)
        assert is_face(Cone.from_generators([(1, 0)]), QUADRANT)
        assert not is_face(Cone.from_generators([(1, 1)]), QUADRANT)

    def test_random_face_lattice(self):
        rng = random.Random(5)
        for _ in range(60):
            C = random_cone(rng, n=rng.randint(1, 4), max_gens=5, bound=3)
            fs = faces(C)
            assert C in fs and any(f.dim == len(C.lineality) for f in fs)
            for f in fs:
                assert is_face(f, C)
                for g in fs:
                    assert intersect(f, g) in fs
                    if is_face(f, g):
                        for h in fs:
                            if is_face(g, h):
                                assert is_face(f, h)


class TestMembership:
    def test_examples(self):
        assert in_relative_interior(Cone.zero(2), (0, 0))
        assert in_relative_interior(Cone.from_generators([(-1, -1, 0), E3]), (-1, -1, 1))
        assert not in_relative_interior(QUADRANT, (1, 0))

    def test_generators_and_sum(self):
        rng = random.Random(3)
        for _ in range(100):
            C = random_cone(rng)
            for g in C.generators:
                assert contains(C, g)
            if C.is_strictly_convex and C.dim >= 1:
                s = tuple(map(sum, zip(*C.rays)))
                assert in_relative_interior(C, s)


class TestIntersect:
    def test_sigma_trace_first(self):
        sigma = Cone.from_generators([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
        trace = sigma.intersect_subspace([(-1, 1, -1, 0), (0, -1, 1, -1)])
        assert trace == Cone.from_generators([(0, 1, 1, 0)])

    def test_sigma_trace_second(self):
        sigma = Cone.from_generators([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
        trace = sigma.intersect_subspace([(0, -1, 1, -1), (0, 0, -1, 1)])
        assert trace == Cone.from_generators([(1, 0, 0, 0), (0, 0, 1, 1)])

    def test_whole_space(self):
        C = Cone.from_generators([(1, 2), (-1, 0)])
        assert intersect(C, Cone.full(2)) == C

    def test_from_inequalities_matches_oracle(self):
        rng = random.Random(17)
        for _ in range(150):
            n = rng.randint(1, 5)
            A = random_ineqs(rng, n, max_rows=6)
            assert matches_oracle(Cone.from_inequalities(A, n), A, n)

    def test_intersect_matches_oracle(self):
        rng = random.Random(23)
        for _ in range(150):
            n = rng.randint(1, 5)
            A1, A2 = random_ineqs(rng, n), random_ineqs(rng, n)
            K = intersect(Cone.from_inequalities(A1, n), Cone.from_inequalities(A2, n))
            assert matches_oracle(K, A1 + A2, n)


class TestImage:
    def test_projection_of_valuation_cone(self):
        img = linear_image(V_CL, [(1, 0, 0), (0, 1, 0)])
        assert img == Cone.from_generators([(-1, 0), (0, -1)])

    def test_identity(self):
        C = Cone.from_generators([(1, 2), (3, -1)])
        assert linear_image(C, [(1, 0), (0, 1)]) == C

    def test_zero(self):
        assert linear_image(Cone.zero(3), [(1, 2, 3)]) == Cone.zero(1)


class TestConvexity:
    def test_examples(self):
        assert not Cone.from_generators([(1,), (-1,)]).is_strictly_convex
        assert not V_CL.is_strictly_convex
        C = Cone.from_generators([(-1, 1, -1, 0), (0, -1, 1, -1)])
        assert C.is_strictly_convex and C.dim == 2


class TestRelInteriors:
    def test_examples(self):
        r = Cone.from_generators([E3])
        assert rel_interiors_meet_within(r, r, V_CL)
        c1 = Cone.from_generators([(-1, -1, 0), E1, E3])
        c2 = Cone.from_generators([(-1, -1, 0), E2, E3])
        assert not rel_interiors_meet_within(c1, c2, V_CL)
        Z = Cone.zero(3)
        assert rel_interiors_meet_within(Z, Z, V_CL)

    def test_symmetric_and_consistent(self):
        rng = random.Random(29)
        for _ in range(80):
            n = rng.randint(1, 3)
            C1, C2, W = (random_cone(rng, n, max_gens=3, bound=2) for _ in range(3))
            got = rel_interiors_meet_within(C1, C2, W)
            assert got == rel_interiors_meet_within(C2, C1, W)
            K = intersect(intersect(C1, C2), W)
            p = K.relative_interior_point()
            assert got == (in_relative_interior(C1, p) and in_relative_interior(C2, p))


def test_arrangement_cells_cover_region():
    region = Cone.full(2)
    cells = hyperplane_arrangement_cells(region, [(1, 0), (0, 1), (1, -1)])
    assert len(cells) == 6
    assert all(c.dim == 2 for c in cells)
