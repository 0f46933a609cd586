#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab — Constants Module

Defaults shared by every engine. Engines take keyword overrides, the CLI
plumbs its flags into the same names, and reports echo the values they ran
with so that every claim can be replayed.

The three knobs that matter most:
- DEFAULT_DEPTH:  how many projective covers a minimal resolution may take
- DEFAULT_SEED:   seed of every randomized search (isomorphism, estimator)
- DEFAULT_BUDGET: module cap, sample count and depth of the findim estimator
"""


# =============================================================================
# VERSIONING
# =============================================================================

TOOL_NAME = "matrix-subring-lab"
TOOL_VERSION = "1.0.0"
FORMAT_VERSION = 1                 # leading field of spec and report files


# =============================================================================
# HOMOLOGICAL SEARCH DEFAULTS
# =============================================================================

DEFAULT_DEPTH = 20                 # projective covers per minimal resolution
DEFAULT_SEED = 0

ISO_TRIALS = 64                    # random hom combinations tried per isomorphism test
ISO_GRID_BASIS = 3                 # basis maps swept by the deterministic fallback grid
RANDOM_COEFF_BOUND = 3             # random integer coefficients lie in [-3, 3]

SPLIT_RANDOM_TRIALS = 48           # random candidates when splitting a semisimple piece
LIFT_MAX_ROUNDS = 64               # idempotent lifting iterations before giving up


# =============================================================================
# FINITISTIC DIMENSION ESTIMATOR
# =============================================================================

BUDGET_MODULE_CAP = 24             # skip family members of larger dimension
BUDGET_SAMPLES = 6                 # seeded generators sampled per projective
BUDGET_DEPTH = 6                   # resolution depth inside the estimator
DEFAULT_BUDGET = (BUDGET_MODULE_CAP, BUDGET_SAMPLES, BUDGET_DEPTH)


# =============================================================================
# SIZE GUARDS
# =============================================================================

MAX_BUILT_DIM = 512                # largest built ring accepted without --max-dim
BRUTE_FORCE_MAX_DIM = 6            # algebras eligible for the brute-force gldim oracle


# =============================================================================
# CHECK STATUSES AND EXIT CODES
# =============================================================================

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_INCONCLUSIVE = "inconclusive"

EXIT_OK = 0                        # every requested check passed
EXIT_INPUT_ERROR = 1               # unreadable or invalid input
EXIT_CHECK_FAILED = 2              # at least one check failed
EXIT_INCONCLUSIVE = 3              # nothing failed, something hit a cutoff
