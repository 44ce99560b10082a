"""Annihilating-ideal and annihilator-ideal graphs of finite commutative rings."""

from .kernels import BACKEND
from .ring import (
    ElementSet,
    FiniteRing,
    cyclic_ring,
    is_decomposable,
    is_field,
    is_reduced,
    is_zr_ideal,
    nilradical,
    null_square_local_ring,
    poly_quotient_ring,
    product_ring,
    quotient_ring,
    zero_divisor_set,
)
from .ideals import (
    Ideal,
    IdealLattice,
    annihilating_ideal_vertices,
    annihilator,
    enumerate_ideals,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    principal_ideal,
)
from .graphs import GraphKind, GraphShape, IdealGraph, build_graph, classify_shape

__version__ = "0.1.0"
