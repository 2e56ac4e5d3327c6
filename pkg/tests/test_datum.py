from fractions import Fraction

import pytest

from spherical_orbits.cones import Cone
from spherical_orbits.datum import (
    KIND_2A,
    KINDS,
    HomogeneousSphericalDatum,
    full_colors,
    validate_datum,
    valuation_cone,
)
from spherical_orbits.errors import InvalidDatum, NonIntegralRho, UnknownColor
from spherical_orbits.exact_linalg import dot
from spherical_orbits.io import example_names, load
from spherical_orbits.root_systems import parse_root_system


def make(name, m, sigma, s_p=(), colors_a=(), labels=None):
    return HomogeneousSphericalDatum.build(parse_root_system(name, labels), m, sigma, s_p, colors_a)


def test_valuation_cone_rank_one(docs):
    assert valuation_cone(docs["type_a_to_b"].datum) == Cone.from_generators([(-1,)])


def test_valuation_cone_without_spherical_roots():
    d = make("A1+C2", [(0, 1, 0), (0, 0, 1)], [], ["alpha"])
    assert valuation_cone(d) == Cone.full(2)


def test_valuation_cone_inequalities(docs):
    d = docs["ex_clfan"].datum
    direct = Cone.from_inequalities([(-1, 0, 0), (0, -1, 0)], 3)
    assert valuation_cone(d) == direct


@pytest.mark.parametrize("name", example_names())
def test_examples_validate(docs, name):
    assert validate_datum(docs[name].datum).ok


def test_colors_2a(docs):
    colors = full_colors(docs["type_2a_to_b"].datum)
    assert colors.names == ("D_2a(alpha)",)
    (c,) = colors
    assert c.kind == KIND_2A
    # <rho(D_2alpha), 2alpha> = 2, and 2alpha is the basis vector of M
    assert dot(c.rho, (1,)) == 2


def test_colors_four_factor(docs):
    colors = full_colors(docs["ex_clfan"].datum)
    rho = {c.name: c.rho for c in colors}
    assert rho == {
        "D'": (1, 0, 0),
        "D''": (1, 0, 0),
        "D_b(beta,gamma)": (0, 1, 0),
        "D_b(delta)": (0, 0, 1),
    }


def test_colors_f4(docs):
    d = docs["ex_l"].datum
    colors = full_colors(d)
    assert len(colors) == 6
    label = d.root_system.labels
    vs = {c.name: {label[i] for i in c.varsigma} for c in colors}
    assert vs["D'"] == {"alpha_1"}
    assert vs["D''"] == {"alpha_1", "beta_1"}
    assert vs["D'''"] == {"beta_1"}
    assert colors.moved(d.root_system.index("beta_1")) == {"D''", "D'''"}
    # recomputed rho of the type b colors
    rho = {c.name: c.rho for c in colors}
    assert rho["D_b(beta_2)"] == (0, -1, 1, -1)
    assert rho["D_b(beta_3)"] == (0, 0, 0, 1)
    assert rho["D_b(beta_4)"] == (0, 0, -1, 1)


@pytest.mark.parametrize("name", example_names())
def test_color_invariants(docs, name):
    d = docs[name].datum
    colors = full_colors(d)
    n = d.root_system.n_simple
    assert sorted(c.name for c in colors) == sorted(set(colors.names))
    assert all(c.kind in KINDS for c in colors)
    moved = set()
    for c in colors:
        moved |= c.varsigma
    assert set(d.s_p) == set(range(n)) - moved
    for i in range(n):
        D = colors.moved(i)
        assert len(D) <= 2
        assert (len(D) == 2) == d.simple_in_sigma(i)
        if d.simple_in_sigma(i):
            alpha = d.sigma[d.sigma_index_of_simple(i)]
            assert D == {c.name for c in colors if dot(c.rho, alpha) > 0}


def test_wrong_rho_sum(docs):
    d = docs["ex_clfan"].datum
    bad = make(
        "A1xA1xA1xA1",
        d.m_basis,
        d.sigma,
        [],
        [("D'", (1, 1, 0)), ("D''", (1, 0, 0))],
        d.root_system.labels,
    )
    rep = validate_datum(bad)
    assert not rep.ok
    assert any("rho(D')+rho(D'')" in v and "(2, 0, 0)" in v for v in rep.violations)
    with pytest.raises(InvalidDatum):
        full_colors(bad)


def test_root_and_double():
    rep = validate_datum(make("A1", [(1,)], [(1,), (2,)], [], [("D'", (1,)), ("D''", (1,))]))
    assert any("not primitive" in v for v in rep.violations)
    assert any("linearly dependent" in v for v in rep.violations)
    assert any("both alpha and 2alpha" in v for v in rep.violations)


def test_length_mismatch_reported():
    rep = validate_datum(make("A2", [(1, 0)], [(1, 0)]))
    assert not rep.ok


def test_non_integral_half_coroot():
    d = make("A1+C1", [(2, 0), ("1/2", 1)], [(1, 0)])
    rep = validate_datum(d)
    assert not rep.ok
    with pytest.raises(NonIntegralRho):
        full_colors(d)


def test_non_integral_coroot_of_b_color():
    d = make("A2", [(Fraction(1, 2), 0)], [])
    with pytest.raises(NonIntegralRho):
        full_colors(d)


def test_generated_name_collision():
    d = make("A1", [(1,)], [], [], [("D_b(alpha)", (1,))])
    rep = validate_datum(d)
    assert not rep.ok


def test_sp_mismatch():
    rep = validate_datum(make("A1+C1", [(0, 1)], [], []))
    assert rep.ok
    # alpha is a spherical root, so it moves two colors and cannot lie in S^p
    rep = validate_datum(make("A1", [(1,)], [(1,)], ["alpha"], [("D'", (1,)), ("D''", (1,))]))
    assert any("S^p" in v for v in rep.violations)


def test_unknown_color(docs):
    with pytest.raises(UnknownColor):
        full_colors(docs["ex_l"].datum)["D_nope"]


def test_build_accepts_mapping():
    d = make("A1", [(1,)], [(1,)], [], {"D'": (1,), "D''": (1,)})
    assert d == load("type_a_to_b").datum
