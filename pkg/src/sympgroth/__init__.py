"""Certified diagonal scalings, the inf->1 norm and symplectic taming of vector families."""
from .antisymmetric import (
    AntisymCanonicalForm,
    antisym_canonical,
    block_rotation_generator,
    interleave_permutation,
    reconstruct,
)
from .errors import CapacityError, ConsistencyError, InputError
from .experiments import SweepReport, SweepRow, blt_sweep, sharpness_sweep, tame_bench
from .grothendieck import (
    KG_LOWER,
    KG_UPPER,
    InequalityReport,
    ScalingCertificate,
    ScalingVector,
    combine_scalings,
    corollary_check,
    scaling_search,
    theorem1_check,
)
from .linalg import (
    hadamard_bound_check,
    hs_norm,
    matrix_exp,
    numerical_rank,
    singular_values,
    solve_right_factor,
    spectral_norm,
    spectrum_report,
    svd_jacobi,
    sym_eig,
)
from .opnorms import ENUMERATION_LIMIT, InftyOneResult, abs_sum, infty_one_bounds, infty_one_exact
from .symplectic import (
    IsotropicSplit,
    SymplecticSpace,
    VectorFamily,
    example2_vectors,
    fourier_orthogonal,
    is_symplectic,
    pairing_matrix,
    random_orthosymplectic,
    random_symplectic,
    standard_J,
    symplectic_basis_extension,
    symplectic_exp,
    symplectic_transform,
)
from .tame import TameResult, limit_check, pairing_rank, tame

__version__ = "0.1.0"
