"""Finite-dimensional cocommutative color Hopf algebras over exact fields."""
from .scalars import FieldSpec, Residue, arith, nth_roots_of_unity_exist, power
from .groups import (
    Bicharacter,
    FgAbGroup,
    bichar_eval,
    build_gamma,
    element_op,
    kappa_eval,
    u_bar,
    validate_commutation_factor,
)
from .linalg import (
    GradedLinearMap,
    GradedSubspace,
    GradedVectorSpace,
    braiding_map,
    map_image,
    map_kernel,
    quotient_space,
    subspace_lattice,
    tensor_space,
)
from .hopf import (
    ColorHopfAlgebra,
    HopfMorphism,
    VerificationReport,
    convolution,
    tensor_hopf,
    verify_hopf,
    verify_morphism,
)
from .catops import (
    binary_product,
    coequalizer,
    cokernel,
    diagonal,
    equalizer,
    factor_through,
    factorize,
    hkernel,
    ideal_closure,
    pullback_inclusion,
)
from .normality import (
    is_abelian_object,
    is_normal,
    is_quotient_module_coalgebra,
    newman_phi,
    newman_psi,
    xi_map,
)
from .twist import twist, twist_morphism, twist_preserves_structure_checks
from .corpus import FiniteGroupTable, exterior_hopf, group_algebra, mutate

__version__ = "0.1.0"

__all__ = [
    "Bicharacter",
    "ColorHopfAlgebra",
    "FgAbGroup",
    "FieldSpec",
    "FiniteGroupTable",
    "GradedLinearMap",
    "GradedSubspace",
    "GradedVectorSpace",
    "HopfMorphism",
    "Residue",
    "VerificationReport",
    "arith",
    "bichar_eval",
    "binary_product",
    "braiding_map",
    "build_gamma",
    "coequalizer",
    "cokernel",
    "convolution",
    "diagonal",
    "element_op",
    "equalizer",
    "exterior_hopf",
    "factor_through",
    "factorize",
    "group_algebra",
    "hkernel",
    "ideal_closure",
    "is_abelian_object",
    "is_normal",
    "is_quotient_module_coalgebra",
    "kappa_eval",
    "map_image",
    "map_kernel",
    "mutate",
    "newman_phi",
    "newman_psi",
    "nth_roots_of_unity_exist",
    "power",
    "pullback_inclusion",
    "quotient_space",
    "subspace_lattice",
    "tensor_hopf",
    "tensor_space",
    "twist",
    "twist_morphism",
    "twist_preserves_structure_checks",
    "u_bar",
    "validate_commutation_factor",
    "verify_hopf",
    "verify_morphism",
    "xi_map",
]
