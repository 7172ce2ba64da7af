"""Exact-arithmetic workbench for noncommutative Jordan superalgebras."""
from __future__ import annotations

from .catalog import (
    build,
    cross_product_star,
    grassmann_algebra,
    make_dt,
    make_gamma_nd,
    make_j_gamma,
    make_j_gamma_A,
    make_jvf,
    make_k3,
    make_uvf,
    random_algebra,
)
from .derivations import (
    DerivationSpace,
    closure_check,
    der_bracket,
    derivation_basis,
    derivation_space,
    derivation_system,
    find_sl2_triple,
    lieosp_check,
    uvfstar_der_check,
)
from .errors import NCJordanError
from .fields import Field, function_field, gaussian_rationals, parse_field, prime_field, rationals
from .grassmann import GrassmannElement, WnDerivation, parse_element, poisson_grassmann
from .morphisms import (
    ParametricMap,
    SubalgebraWitness,
    enumerate_automorphisms,
    enumerate_subalgebras,
    is_automorphism,
    is_homomorphism,
    is_subalgebra,
    isomorphism_search,
)
from .superalgebra import (
    Element,
    LinearMap,
    Report,
    SuperAlgebra,
    check_derivation,
    check_flexible,
    check_jordan_super,
    check_noncomm_jordan,
    check_poisson_bracket,
    commutator_bracket,
    plus_algebra,
    reconstruct,
)

__version__ = "0.1.0"
