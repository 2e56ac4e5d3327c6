"""Orbits of spherical embeddings, computed from colored fans.

Everything is exact: rationals are :class:`fractions.Fraction`, lattice
vectors are tuples of ``int``.
"""

from .closure import StarMember, closure_fan, phi, star
from .colored_fan import (
    ColoredCone,
    ColoredFan,
    OrbitPoset,
    colored_faces,
    is_colored_face,
    is_complete,
    orbit_poset,
    validate_colored_cone,
    validate_fan,
)
from .cones import Cone, dual_cone, faces, intersect, is_face, linear_image, rel_interiors_meet_within
from .datum import Color, ColorSet, HomogeneousSphericalDatum, full_colors, validate_datum, valuation_cone
from .errors import *  # noqa: F401,F403
from .exact_linalg import IntLatticeBasis, hnf, integer_kernel, primitive_generator, restrict_functional
from .intersection import FormalColorSum, intersect_color, multiplicity_cross_check
from .io import Document, load, load_example
from .orbit import OrbitDatum, Refinement, check_refinement, cross_validate, full_colors_of_orbit, localize
from .root_systems import RootSystem, are_orthogonal, cartan_pairing, parse_root_system

__version__ = "0.1.0"
