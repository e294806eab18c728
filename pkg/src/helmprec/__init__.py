"""Nearby preconditioning for heterogeneous Helmholtz finite-element systems.

Builds P1 Galerkin systems for coefficient pairs on the unit square,
preconditions one with the exact LU factors of the other, runs standard and
weighted GMRES, and numerically checks the matrix-norm / field-of-values /
sharpness theory that predicts when iteration counts are independent of the
wavenumber.
"""

from .mesh import Mesh2D, build_unit_square_mesh, choose_resolution
from .coefficients import (
    MatrixField,
    RngStream,
    ScalarField,
    alpha_of,
    checkerboard_n,
    constant_n,
    diff_norm_linf,
    diff_norm_lq,
    identity_A,
    sample_random_A,
    sample_random_n,
    spectral_norm_2x2,
)
from .assembly import (
    ComplexSparseMatrix,
    ProblemInstance,
    assemble_Dk,
    assemble_boundary_mass,
    assemble_mass,
    assemble_planewave_rhs,
    assemble_stiffness,
    assemble_system,
    h1k_relative_fem_error,
)
from .sparse_linalg import (
    BandedLU,
    NotSpdError,
    SingularMatrixError,
    SpdFactor,
    factorize_system,
    lu_factorize,
    lu_solve,
    matvec,
    spd_factorize,
    spd_solve,
)
from .krylov import (
    GmresOptions,
    GmresReport,
    InnerProductSpec,
    apply_preconditioned,
    gmres,
    solve_nearby,
    weighted_inner,
    weighted_norm,
)
from .analysis import (
    FovReport,
    NormConstants,
    OperatorNormEstimate,
    adjoint_norm_identity_check,
    compute_norm_constants,
    fov_distance,
    perturbation_norm_scan,
    preconditioned_difference_operator,
    weighted_operator_norm,
)
from .sharpness import SharpnessConfig, pde_residual_orders, sharpness_experiment

__all__ = [name for name in dir() if not name.startswith("_")]
