#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab

Exact computations on matrix subrings of M_n(A) over a finite-dimensional
algebra A: building the rings, resolving their modules, certifying the
derived equivalence between Λ and Σ through an explicit tilting module,
and checking homological dimension bounds.

Core Components:
- field / linalg: exact arithmetic over Q and F_p on sympy domains
- algebra: FdAlgebra, radical, quotients, corners, validation reports
- semisimple: primitive idempotents and Cartan matrices
- rings: Λ, Σ, Γ = M_n(A), block extensions and tiled triangular rings
- modules / resolutions: left modules, Hom spaces, minimal resolutions, Ext
- tilting: the tilting module T, End(T) ≅ Σ, D-split sequences
- dimensions: global and finitistic dimension, named dimension bounds
- quiver / specfile / corpus / cli: inputs, bundled examples and reports

Example:
    >>> from src import corpus_entry, verify_theorem
    >>> spec = corpus_entry("lambda-dual-numbers")
    >>> report = verify_theorem(spec.lambda_spec())
    >>> report.ok, report.end_dim, report.sigma_dim
    (True, 4, 4)
"""

__version__ = "1.0.0"

# Configuration and errors
from .constants import (
    DEFAULT_BUDGET, DEFAULT_DEPTH, DEFAULT_SEED, FORMAT_VERSION, MAX_BUILT_DIM,
    STATUS_FAIL, STATUS_INCONCLUSIVE, STATUS_PASS, TOOL_NAME, TOOL_VERSION,
)
from .errors import (
    AlgebraError, ClosureError, DimensionCapError, DimensionMismatchError, FieldGuardError,
    InclusionError, NonSplitError, NotAnIdealError, NotASubmoduleError, NotIdempotentError,
    ParseError, SpecValidationError, ZeroRingError,
)

# Fields and linear algebra
from .field import RATIONAL_FIELD, FieldSpec
from .linalg import Subquotient, Subspace

# Algebras
from .algebra import (
    FdAlgebra, Idempotents, ValidationReport,
    center, corner, field_algebra, lower_triangular, matrix_algebra, multiply, quotient,
    radical, radical_power, truncated_polynomial, validate_algebra,
)
from .semisimple import cartan_matrix, primitive_decomposition, primitive_idempotents

# Rings
from .rings import (
    BlockExtensionSpec, BuiltRing, LambdaSpec, TiledTriangularSpec,
    basic_block_extension, build_block_extension, build_cor33_shape, build_full_matrix,
    build_lambda, build_sigma, build_tiled_triangular,
    validate_block_spec, validate_lambda_spec, validate_tiled_spec,
)

# Modules and resolutions
from .modules import HomSpace, LeftModule, ModuleMap, hom_space, projective_module
from .resolutions import (
    PdValue, ext_dim, is_isomorphic, minimal_resolution, proj_dim, simple_modules,
    top_and_cover,
)

# Tilting and dimensions
from .tilting import (
    check_D_split, cokernel_modules, construct_phi, endomorphism_algebra,
    tilting_conditions, verify_theorem,
)
from .dimensions import (
    BOUND_NAMES, Budget, check_bound, check_prop_4_12_hypotheses, findim_estimate,
    global_dimension, is_self_injective,
)

# Inputs and driver
from .quiver import QuiverSpec, build_path_algebra
from .specfile import SpecFile, parse, serialize
from .corpus import corpus, corpus_entry, corpus_names
from .cli import ReportFile, RunOptions, run


__all__ = [
    # Version
    "__version__",

    # Configuration and errors
    "DEFAULT_BUDGET", "DEFAULT_DEPTH", "DEFAULT_SEED", "FORMAT_VERSION", "MAX_BUILT_DIM",
    "STATUS_FAIL", "STATUS_INCONCLUSIVE", "STATUS_PASS", "TOOL_NAME", "TOOL_VERSION",
    "AlgebraError", "ClosureError", "DimensionCapError", "DimensionMismatchError",
    "FieldGuardError", "InclusionError", "NonSplitError", "NotAnIdealError",
    "NotASubmoduleError", "NotIdempotentError", "ParseError", "SpecValidationError",
    "ZeroRingError",

    # Fields and algebras
    "RATIONAL_FIELD", "FieldSpec", "Subquotient", "Subspace",
    "FdAlgebra", "Idempotents", "ValidationReport",
    "center", "corner", "field_algebra", "lower_triangular", "matrix_algebra", "multiply",
    "quotient", "radical", "radical_power", "truncated_polynomial", "validate_algebra",
    "cartan_matrix", "primitive_decomposition", "primitive_idempotents",

    # Rings
    "BlockExtensionSpec", "BuiltRing", "LambdaSpec", "TiledTriangularSpec",
    "basic_block_extension", "build_block_extension", "build_cor33_shape",
    "build_full_matrix", "build_lambda", "build_sigma", "build_tiled_triangular",
    "validate_block_spec", "validate_lambda_spec", "validate_tiled_spec",

    # Modules, resolutions, tilting, dimensions
    "HomSpace", "LeftModule", "ModuleMap", "hom_space", "projective_module",
    "PdValue", "ext_dim", "is_isomorphic", "minimal_resolution", "proj_dim",
    "simple_modules", "top_and_cover",
    "check_D_split", "cokernel_modules", "construct_phi", "endomorphism_algebra",
    "tilting_conditions", "verify_theorem",
    "BOUND_NAMES", "Budget", "check_bound", "check_prop_4_12_hypotheses",
    "findim_estimate", "global_dimension", "is_self_injective",

    # Inputs and driver
    "QuiverSpec", "build_path_algebra", "SpecFile", "parse", "serialize",
    "corpus", "corpus_entry", "corpus_names", "ReportFile", "RunOptions", "run",
]
