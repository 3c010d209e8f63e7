"""Exact toolkit for the centre of two-parameter quantum groups.

Everything is computed over the exact coefficient field Q(r, s) (with the
fractional-exponent extensions the weight lattice requires); there is no
floating point anywhere.
"""

from .errors import ConsistencyError
from .euler import EulerData, build_euler
from .field import FieldElem, LaurentRS, evaluate_at_point, field_arithmetic, normalize_fraction
from .hc import (
    HCImage,
    expand_in_orbit_sums,
    express_orbit_sum_in_hc,
    grothendieck_product,
    hc_image,
    orbit_sum,
    poly_evaluate,
    poly_express,
)
from .modules import (
    CentralElement,
    GradedModule,
    build_z,
    check_s2_twist,
    simple_quotient,
    theta_matrix,
    verify_central,
    verify_trace_identity,
    verma_truncate,
)
from .mults import MultTable, freudenthal, kostant_mult, kostant_partition_count, weyl_dim
from .pairing import FreeWord, GramData, PairingEngine
from .roots import RootSystem, Weight, build_root_system
from .torus import (
    FlatElement,
    U0Element,
    chi_eval,
    gamma_rho_twist,
    omega_pairing,
    rho_eval,
    rho_pair_eval,
    weyl_act_flat,
)

__all__ = [
    "CentralElement",
    "ConsistencyError",
    "EulerData",
    "FieldElem",
    "FlatElement",
    "FreeWord",
    "GradedModule",
    "GramData",
    "HCImage",
    "LaurentRS",
    "MultTable",
    "PairingEngine",
    "RootSystem",
    "U0Element",
    "Weight",
    "build_euler",
    "build_root_system",
    "build_z",
    "check_s2_twist",
    "chi_eval",
    "evaluate_at_point",
    "expand_in_orbit_sums",
    "express_orbit_sum_in_hc",
    "field_arithmetic",
    "freudenthal",
    "gamma_rho_twist",
    "grothendieck_product",
    "hc_image",
    "kostant_mult",
    "kostant_partition_count",
    "normalize_fraction",
    "omega_pairing",
    "orbit_sum",
    "poly_evaluate",
    "poly_express",
    "rho_eval",
    "rho_pair_eval",
    "simple_quotient",
    "theta_matrix",
    "verify_central",
    "verify_trace_identity",
    "verma_truncate",
    "weyl_act_flat",
    "weyl_dim",
]
