#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab — Module Engine

Finite-dimensional left modules over an FdAlgebra, the maps between them,
and the constructions the homological layer is built from.

Conventions:
- The action is a homomorphism b ↦ ρ(b) of column-convention matrices:
  ρ(b_i)·ρ(b_j) = Σ_k c_ijk ρ(b_k), and b·v is ρ(b) applied to v.
- A ModuleMap M → N stores a dim(N) × dim(M) matrix F with ρ_N(b)·F = F·ρ_M(b).
- compose(f, g) is "f then g", i.e. the map g∘f.

Modules carry the frame degree of each basis vector when their basis is
homogeneous (e_k·v = v for exactly one frame idempotent e_k). Hom spaces
between graded modules only have unknowns in matching degrees and only need
the intertwining equations for a generating set of the algebra, which keeps
the linear systems small on large matrix rings.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy.polys.matrices import DomainMatrix

from .algebra import FdAlgebra, Quotient, ValidationReport, radical
from .constants import DEFAULT_SEED, RANDOM_COEFF_BOUND
from .errors import DimensionMismatchError, NotASubmoduleError
from .field import FieldSpec
from .linalg import (Row, Subspace, Vector, apply, block_diagonal, columns, flatten,
                     identity_matrix, inverse, is_zero_matrix, linear_combination,
                     matrix_from_columns, matrix_from_dod, matrix_nullspace, matrix_rank,
                     matrix_rows, nullspace_basis, nullspace_rows, rank_of_rows, solve_rows,
                     take_columns, take_rows, zero_matrix)
from .rings import BuiltRing

logger = logging.getLogger(__name__)


# =============================================================================
# MODULES
# =============================================================================

@dataclass(frozen=True, eq=False)
class LeftModule:
    """
    A finite-dimensional left module.

    Attributes:
        algebra: the acting algebra
        dim: dimension over the field
        action: ρ(b_i) for every basis element b_i, each dim × dim
        degrees: frame index of each basis vector, None for a non-homogeneous
            basis; left empty to have it inferred
        name: label used in reports
    """

    algebra: FdAlgebra
    dim: int
    action: Tuple[DomainMatrix, ...]
    degrees: Optional[Tuple[int, ...]] = ()
    name: str = ""

    def __post_init__(self):
        if len(self.action) != self.algebra.dim:
            raise DimensionMismatchError(
                f"{len(self.action)} action matrices for an algebra of dimension {self.algebra.dim}")
        for m in self.action:
            if m.shape != (self.dim, self.dim):
                raise DimensionMismatchError(f"action matrix of shape {m.shape}, module dim {self.dim}")
        if self.degrees == () and self.dim > 0:
            object.__setattr__(self, "degrees", _infer_degrees(self))
        elif self.degrees is not None and len(self.degrees) != self.dim:
            raise DimensionMismatchError("one degree per basis vector expected")

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def is_graded(self) -> bool:
        return self.degrees is not None

    def matrix_of(self, a: Sequence) -> DomainMatrix:
        """ρ(a) for an algebra element a."""
        return linear_combination(a, self.action, (self.dim, self.dim), self.field)

    def act(self, a: Sequence, v: Sequence) -> Vector:
        return apply(self.matrix_of(a), v, self.field)

    def letters(self, with_frame: bool = True) -> Tuple[DomainMatrix, ...]:
        """Action of the algebra generators, optionally followed by the frame."""
        cache = vars(self).setdefault("_letters", {})
        if with_frame not in cache:
            gens = list(self.algebra.generators)
            if with_frame:
                gens += list(self.algebra.frame)
            cache[with_frame] = tuple(self.matrix_of(g) for g in gens)
        return cache[with_frame]

    def degree_part(self, k: int) -> List[int]:
        return [j for j, d in enumerate(self.degrees) if d == k]

    def validate(self) -> ValidationReport:
        """The action is a unital algebra homomorphism."""
        A = self.algebra
        report = ValidationReport(self.name or "module")
        I = identity_matrix(self.dim, self.field)
        report.check(self.matrix_of(A.unit) == I, "unit", "the unit does not act as the identity")
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = self.action[i].matmul(self.action[j])
                rhs = self.matrix_of(A.structure_constant(i, j))
                report.check(lhs == rhs, "action", f"ρ(b{i})ρ(b{j}) != ρ(b{i}·b{j})", (i, j))
        return report

    def summary(self) -> str:
        return f"{self.name or 'module'}: dim {self.dim} over {self.algebra.name or 'algebra'}"

    def __repr__(self) -> str:
        return f"LeftModule(name={self.name!r}, dim={self.dim})"


def _infer_degrees(M: LeftModule) -> Optional[Tuple[int, ...]]:
    frame = M.algebra.frame
    if len(frame) == 1:
        return (0,) * M.dim
    degrees: List[Optional[int]] = [None] * M.dim
    for k, e in enumerate(frame):
        for j, col in enumerate(columns(M.matrix_of(e), M.field)):
            if col[j] == M.field.one and sum(1 for a in col if a) == 1:
                degrees[j] = k
    if any(d is None for d in degrees):
        return None
    return tuple(degrees)


def _same_algebra(M: LeftModule, N: LeftModule) -> None:
    if M.algebra is not N.algebra:
        raise DimensionMismatchError("modules over different algebras")


def _rows_degrees(M: LeftModule, rows: Sequence[Sequence]) -> Optional[Tuple[int, ...]]:
    if not M.is_graded:
        return None
    out = []
    for r in rows:
        degs = {M.degrees[i] for i, a in enumerate(r) if a}
        if len(degs) != 1:
            return None
        out.append(degs.pop())
    return tuple(out)


# =============================================================================
# MODULE MAPS
# =============================================================================

@dataclass(frozen=True, eq=False)
class ModuleMap:
    """A module homomorphism, stored as a dim(target) × dim(source) matrix."""

    source: LeftModule
    target: LeftModule
    mat: DomainMatrix
    name: str = ""

    def __post_init__(self):
        if self.mat.shape != (self.target.dim, self.source.dim):
            raise DimensionMismatchError(
                f"map matrix of shape {self.mat.shape}, expected {(self.target.dim, self.source.dim)}")

    @classmethod
    def zero(cls, M: LeftModule, N: LeftModule) -> "ModuleMap":
        return cls(M, N, zero_matrix(N.dim, M.dim, M.field))

    @classmethod
    def identity(cls, M: LeftModule) -> "ModuleMap":
        return cls(M, M, identity_matrix(M.dim, M.field), "id")

    @property
    def field(self) -> FieldSpec:
        return self.source.field

    def __call__(self, v: Sequence) -> Vector:
        return apply(self.mat, v, self.field)

    def then(self, g: "ModuleMap") -> "ModuleMap":
        """self followed by g."""
        if g.source is not self.target:
            raise DimensionMismatchError("maps are not composable")
        return ModuleMap(self.source, g.target, g.mat.matmul(self.mat))

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target, self.mat.add(other.mat))

    def __sub__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target, self.mat.sub(other.mat))

    def scaled(self, c) -> "ModuleMap":
        return ModuleMap(self.source, self.target,
                         linear_combination([c], [self.mat], self.mat.shape, self.field))

    @cached_property
    def rank(self) -> int:
        if self.source.dim == 0 or self.target.dim == 0:
            return 0
        return matrix_rank(self.mat, self.field)

    @property
    def is_zero(self) -> bool:
        return is_zero_matrix(self.mat)

    @property
    def is_injective(self) -> bool:
        return self.rank == self.source.dim

    @property
    def is_surjective(self) -> bool:
        return self.rank == self.target.dim

    @property
    def is_isomorphism(self) -> bool:
        return self.source.dim == self.target.dim and self.is_injective

    def flatten(self) -> Row:
        return flatten(self.mat)

    def is_homomorphism(self) -> bool:
        """ρ_N(b)·F = F·ρ_M(b) on every basis element."""
        return all(self.target.action[i].matmul(self.mat) == self.mat.matmul(self.source.action[i])
                   for i in range(self.source.algebra.dim))

    def __repr__(self) -> str:
        return f"ModuleMap({self.source.name or 'M'} -> {self.target.name or 'N'}, rank {self.rank})"


def compose(f: ModuleMap, g: ModuleMap) -> ModuleMap:
    """fg in the written order: first f, then g."""
    return f.then(g)


# =============================================================================
# HOM SPACES
# =============================================================================

@dataclass(frozen=True, eq=False)
class HomSpace:
    """
    A basis of Hom(source, target).

    Each basis map has a 1 at one free matrix position and 0 at the other
    free positions, so `coordinates` reads any homomorphism off those
    positions.
    """

    source: LeftModule
    target: LeftModule
    basis: Tuple[ModuleMap, ...]
    free: Tuple[Tuple[int, int], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, k: int) -> ModuleMap:
        return self.basis[k]

    def coordinates(self, f: ModuleMap) -> Vector:
        dod = f.mat.to_dod()
        zero = self.source.field.zero
        return tuple(dod.get(r, {}).get(c, zero) for r, c in self.free)

    def combination(self, coeffs: Sequence) -> ModuleMap:
        shape = (self.target.dim, self.source.dim)
        mat = linear_combination(coeffs, [f.mat for f in self.basis], shape, self.source.field)
        return ModuleMap(self.source, self.target, mat)

    def random_element(self, rng: np.random.Generator,
                       bound: int = RANDOM_COEFF_BOUND) -> ModuleMap:
        return self.combination(self.source.field.random_vector(rng, self.dim, bound))


def hom_space(M: LeftModule, N: LeftModule) -> HomSpace:
    """Basis of Hom_A(M, N) from the intertwining equations."""
    _same_algebra(M, N)
    cache = vars(M).setdefault("_hom_cache", {})
    hit = cache.get(id(N))
    if hit is not None and hit[0] is N:
        return hit[1]
    result = _solve_hom(M, N)
    cache[id(N)] = (N, result)
    return result


def _solve_hom(M: LeftModule, N: LeftModule) -> HomSpace:
    field = M.field
    zero = field.zero
    if M.dim == 0 or N.dim == 0:
        return HomSpace(M, N, (), ())
    graded = M.is_graded and N.is_graded
    m_by_deg: Dict[int, List[int]] = {}
    n_by_deg: Dict[int, List[int]] = {}
    if graded:
        for c, d in enumerate(M.degrees):
            m_by_deg.setdefault(d, []).append(c)
        for r, d in enumerate(N.degrees):
            n_by_deg.setdefault(d, []).append(r)
        variables = [(r, c) for r in range(N.dim) for c in m_by_deg.get(N.degrees[r], [])]
    else:
        variables = [(r, c) for r in range(N.dim) for c in range(M.dim)]
    if not variables:
        return HomSpace(M, N, (), ())
    index = {v: k for k, v in enumerate(variables)}

    all_m, all_n = list(range(M.dim)), list(range(N.dim))
    equations: Dict[Tuple[int, int, int], Row] = {}
    letters = zip(M.letters(not graded), N.letters(not graded))
    for g, (Mg, Ng) in enumerate(letters):
        # (ρ_N(g)·X)[r][c2]
        for r, row in Ng.to_dod().items():
            for s, a in row.items():
                for c2 in (m_by_deg.get(N.degrees[s], []) if graded else all_m):
                    eq = equations.setdefault((g, r, c2), {})
                    var = index[(s, c2)]
                    eq[var] = eq.get(var, zero) + a
        # (X·ρ_M(g))[r][c2]
        for c, row in Mg.to_dod().items():
            for c2, b in row.items():
                for r in (n_by_deg.get(M.degrees[c], []) if graded else all_n):
                    eq = equations.setdefault((g, r, c2), {})
                    var = index[(r, c)]
                    eq[var] = eq.get(var, zero) - b
    rows = [{k: a for k, a in eq.items() if a} for eq in equations.values()]
    kernel, free = nullspace_basis([r for r in rows if r], len(variables), field)
    basis = []
    for vec in kernel:
        dod: Dict[int, Row] = {}
        for k, a in vec.items():
            r, c = variables[k]
            dod.setdefault(r, {})[c] = a
        basis.append(ModuleMap(M, N, matrix_from_dod(dod, N.dim, M.dim, field)))
    logger.debug("Hom(%s, %s): %d unknowns, %d equations, dim %d",
                 M.name or "M", N.name or "N", len(variables), len(rows), len(basis))
    return HomSpace(M, N, tuple(basis), tuple(variables[k] for k in free))


def span_rank(maps: Sequence[ModuleMap]) -> int:
    """Dimension of the span of a family of maps with one source and target."""
    if not maps:
        return 0
    first = maps[0]
    ncols = first.target.dim * first.source.dim
    return rank_of_rows([f.flatten() for f in maps], ncols, first.field)


def contains_map(maps: Sequence[ModuleMap], f: ModuleMap) -> bool:
    """Whether f lies in the span of maps."""
    return span_rank(list(maps) + [f]) == span_rank(maps)


# =============================================================================
# SUBMODULES AND QUOTIENTS
# =============================================================================

def is_submodule(M: LeftModule, S: Subspace) -> bool:
    return all(S.contains(apply(mat, v, M.field)) for mat in M.letters() for v in S.rows)


def submodule(M: LeftModule, S: Subspace, name: str = "",
              check: bool = True) -> Tuple[LeftModule, ModuleMap]:
    """S ⊆ M as a module on the echelon basis of S, with its inclusion."""
    if S.ambient_dim != M.dim:
        raise DimensionMismatchError("subspace of the wrong ambient dimension")
    if check and not is_submodule(M, S):
        raise NotASubmoduleError(f"subspace is not a submodule of {M.name or 'the module'}")
    field = M.field
    s = S.dim
    B = matrix_from_columns(S.rows, M.dim, field) if s else zero_matrix(M.dim, 0, field)
    if s == 0:
        action = tuple(zero_matrix(0, 0, field) for _ in M.action)
    else:
        action = tuple(take_rows(rho.matmul(B), S.pivots) for rho in M.action)
    degrees = _rows_degrees(M, S.rows) if s and M.is_graded else ()
    sub = LeftModule(M.algebra, s, action, degrees, name)
    return sub, ModuleMap(sub, M, B, "inclusion")


def quotient_module(M: LeftModule, S: Subspace, name: str = "",
                    check: bool = True) -> Tuple[LeftModule, ModuleMap]:
    """M/S on the standard basis vectors outside the pivots of S, with the projection."""
    if check and not is_submodule(M, S):
        raise NotASubmoduleError(f"subspace is not a submodule of {M.name or 'the module'}")
    field = M.field
    pivots = set(S.pivots)
    kept = [c for c in range(M.dim) if c not in pivots]
    position = {c: k for k, c in enumerate(kept)}
    q = len(kept)
    dod: Dict[int, Row] = {}
    for c, k in position.items():
        dod.setdefault(k, {})[c] = field.one
    for row, p in zip(S.rows, S.pivots):
        for c, a in enumerate(row):
            if a and c in position:
                dod.setdefault(position[c], {})[p] = -a
    Q = matrix_from_dod(dod, q, M.dim, field)
    if q == 0:
        action = tuple(zero_matrix(0, 0, field) for _ in M.action)
    else:
        action = tuple(Q.matmul(take_columns(rho, kept)) for rho in M.action)
    degrees = tuple(M.degrees[c] for c in kept) if M.is_graded and q else ()
    quo = LeftModule(M.algebra, q, action, degrees, name)
    return quo, ModuleMap(M, quo, Q, "projection")


def subquotient_module(M: LeftModule, X: Subspace, Y: Subspace,
                       name: str = "") -> LeftModule:
    """X/Y for submodules Y ⊆ X of M."""
    sub, _ = submodule(M, X)
    Y_in_X = Subspace.span(M.field, X.dim, [X.coords(y) for y in Y.rows])
    quo, _ = quotient_module(sub, Y_in_X, name)
    return quo


def generated_submodule(M: LeftModule, vectors: Sequence[Sequence],
                        name: str = "") -> Tuple[LeftModule, ModuleMap]:
    """The smallest submodule containing the given vectors."""
    field = M.field
    mats = M.letters()
    S = Subspace.span(field, M.dim, vectors)
    while True:
        images = [apply(mat, v, field) for mat in mats for v in S.rows]
        grown = S + Subspace.span(field, M.dim, images)
        if grown.dim == S.dim:
            break
        S = grown
    return submodule(M, S, name, check=False)


def kernel(f: ModuleMap, name: str = "") -> Tuple[LeftModule, ModuleMap]:
    field = f.field
    if f.source.dim == 0:
        return submodule(f.source, Subspace.zero(field, 0), name, check=False)
    K = Subspace.span(field, f.source.dim, matrix_nullspace(f.mat, field)) \
        if f.target.dim else Subspace.full(field, f.source.dim)
    return submodule(f.source, K, name or "ker", check=False)


def image_subspace(f: ModuleMap) -> Subspace:
    cols = columns(f.mat, f.field) if f.source.dim else []
    return Subspace.span(f.field, f.target.dim, cols)


def image(f: ModuleMap, name: str = "") -> LeftModule:
    module, _ = submodule(f.target, image_subspace(f), name or "im", check=False)
    return module


def cokernel(f: ModuleMap, name: str = "") -> Tuple[LeftModule, ModuleMap]:
    return quotient_module(f.target, image_subspace(f), name or "coker", check=False)


# =============================================================================
# STANDARD MODULES
# =============================================================================

def regular_module(A: FdAlgebra) -> LeftModule:
    cache = vars(A)
    if "_regular_module" not in cache:
        cache["_regular_module"] = LeftModule(A, A.dim, A.left_regular, (), f"{A.name or 'A'}")
    return cache["_regular_module"]


def _projective_data(A: FdAlgebra, e: Tuple) -> Tuple[LeftModule, Subspace]:
    cache = vars(A).setdefault("_projectives", {})
    if e not in cache:
        S = Subspace.span(A.field, A.dim, [A.multiply(A.basis_vector(j), e) for j in range(A.dim)])
        module, _ = submodule(regular_module(A), S, check=False)
        cache[e] = (module, S)
    return cache[e]


def projective_module(R: Union[BuiltRing, FdAlgebra], i: Union[int, Sequence],
                      name: str = "") -> LeftModule:
    """
    R·e for a position i of a built ring, a frame index of an algebra, or an
    explicit idempotent e.
    """
    if isinstance(R, BuiltRing):
        A, e = R.algebra, tuple(R.idems[i])
    else:
        A = R
        e = tuple(A.frame[i]) if isinstance(i, (int, np.integer)) else tuple(i)
    module, _ = _projective_data(A, e)
    if not name or name == module.name:
        return module
    # one shared object per (idempotent, name)
    named = vars(A).setdefault("_named_projectives", {})
    if (e, name) not in named:
        named[(e, name)] = LeftModule(A, module.dim, module.action, module.degrees, name)
    return named[(e, name)]


def projective_basis(A: FdAlgebra, e: Sequence) -> Subspace:
    """The subspace A·e of A carrying the basis of the projective module A·e."""
    return _projective_data(A, tuple(e))[1]


def right_multiplication(A: FdAlgebra, e: Sequence, f: Sequence, x: Sequence,
                         source: Optional[LeftModule] = None,
                         target: Optional[LeftModule] = None) -> ModuleMap:
    """μ_x: A·e → A·f, y ↦ y·x, for x ∈ e·A·f."""
    e, f = tuple(e), tuple(f)
    if A.multiply(A.multiply(e, x), f) != tuple(x):
        raise ValueError("x does not lie in e·A·f")
    src_module, src_basis = _projective_data(A, e)
    tgt_module, tgt_basis = _projective_data(A, f)
    cols = [tgt_basis.coords(A.multiply(y, x)) for y in src_basis.rows]
    mat = matrix_from_columns(cols, tgt_basis.dim, A.field) if cols \
        else zero_matrix(tgt_basis.dim, 0, A.field)
    return ModuleMap(source or src_module, target or tgt_module, mat, "right-multiplication")


def cyclic_quotient(A: FdAlgebra, I: Subspace, name: str = "") -> LeftModule:
    """A/I for a left ideal I."""
    module, _ = quotient_module(regular_module(A), I, name or f"{A.name or 'A'}/I")
    return module


def restrict(M: LeftModule, phi: DomainMatrix, B: FdAlgebra, name: str = "") -> LeftModule:
    """Restriction of scalars along an algebra map φ: B → A given as a dim A × dim B matrix."""
    if phi.shape != (M.algebra.dim, B.dim):
        raise DimensionMismatchError("embedding matrix has the wrong shape")
    images = columns(phi, M.field)
    action = tuple(M.matrix_of(col) for col in images)
    return LeftModule(B, M.dim, action, (), name or M.name)


def descend(M: LeftModule, Q: Quotient, name: str = "") -> LeftModule:
    """
    M as a module over A/I, for a module M annihilated by I.

    Raises:
        ValueError: some element of I acts nonzero on M
    """
    if Q.kernel.ambient_dim != M.algebra.dim:
        raise DimensionMismatchError("quotient of a different algebra")
    for r in Q.kernel.rows:
        if not is_zero_matrix(M.matrix_of(r)):
            raise ValueError(f"{M.name or 'module'} is not annihilated by the ideal")
    B = Q.algebra
    action = tuple(M.matrix_of(Q.lift(B.field.unit_vector(B.dim, k))) for k in range(B.dim))
    return LeftModule(B, M.dim, action, (), name or M.name)


# =============================================================================
# DIRECT SUMS AND CHANGES OF BASIS
# =============================================================================

@dataclass(frozen=True, eq=False)
class DirectSum:
    """M_1 ⊕ ... ⊕ M_r with its injections and projections."""

    module: LeftModule
    summands: Tuple[LeftModule, ...]
    injections: Tuple[ModuleMap, ...]
    projections: Tuple[ModuleMap, ...]
    offsets: Tuple[int, ...]


def direct_sum(modules: Sequence[LeftModule], name: str = "") -> DirectSum:
    if not modules:
        raise ValueError("direct sum of no modules")
    A = modules[0].algebra
    for M in modules:
        if M.algebra is not A:
            raise DimensionMismatchError("summands over different algebras")
    field = A.field
    total = sum(M.dim for M in modules)
    action = tuple(block_diagonal([M.action[i] for M in modules], field) for i in range(A.dim))
    graded = all(M.is_graded for M in modules)
    degrees = tuple(d for M in modules for d in M.degrees) if graded and total else \
        (() if graded else None)
    S = LeftModule(A, total, action, degrees if total else (), name)
    injections, projections, offsets = [], [], []
    off = 0
    for M in modules:
        inj = {off + j: {j: field.one} for j in range(M.dim)}
        proj = {j: {off + j: field.one} for j in range(M.dim)}
        injections.append(ModuleMap(M, S, matrix_from_dod(inj, total, M.dim, field)))
        projections.append(ModuleMap(S, M, matrix_from_dod(proj, M.dim, total, field)))
        offsets.append(off)
        off += M.dim
    return DirectSum(S, tuple(modules), tuple(injections), tuple(projections), tuple(offsets))


def change_basis(M: LeftModule, P: DomainMatrix, name: str = "") -> Tuple[LeftModule, ModuleMap]:
    """
    The module on the basis given by the columns of P, with the isomorphism
    new → M (whose matrix is P).
    """
    P_inv = inverse(P)
    action = tuple(P_inv.matmul(rho).matmul(P) for rho in M.action)
    N = LeftModule(M.algebra, M.dim, action, (), name or M.name)
    return N, ModuleMap(N, M, P, "change-of-basis")


def random_change_of_basis(M: LeftModule, seed: int = DEFAULT_SEED,
                           bound: int = RANDOM_COEFF_BOUND) -> Tuple[LeftModule, ModuleMap]:
    """Conjugate the action by a seeded random invertible integer matrix."""
    rng = np.random.default_rng(seed)
    field = M.field
    while True:
        cols = [field.random_vector(rng, M.dim, bound) for _ in range(M.dim)]
        P = matrix_from_columns(cols, M.dim, field)
        if M.dim == 0 or matrix_rank(P, field) == M.dim:
            return change_basis(M, P)


# =============================================================================
# RADICAL AND SOCLE OF A MODULE
# =============================================================================

def radical_subspace(M: LeftModule) -> Subspace:
    """rad(A)·M."""
    field = M.field
    if M.dim == 0:
        return Subspace.zero(field, 0)
    vectors = []
    for r in radical(M.algebra).rows:
        vectors.extend(columns(M.matrix_of(r), field))
    return Subspace.span(field, M.dim, vectors)


def socle_subspace(M: LeftModule) -> Subspace:
    """{v ∈ M : rad(A)·v = 0}."""
    field = M.field
    rows: List[Row] = []
    for r in radical(M.algebra).rows:
        for i, row in M.matrix_of(r).to_dod().items():
            rows.append(dict(row))
    return Subspace.from_rows(field, M.dim, nullspace_rows(rows, M.dim, field)) \
        if rows else Subspace.full(field, M.dim)


def top_module(M: LeftModule) -> Tuple[LeftModule, ModuleMap]:
    """M/rad·M with its projection."""
    return quotient_module(M, radical_subspace(M), f"top({M.name})" if M.name else "top",
                           check=False)


# =============================================================================
# MAPS THROUGH QUOTIENTS
# =============================================================================

def section_matrix(p: ModuleMap) -> DomainMatrix:
    """A linear right inverse of a surjective map (not a module map in general)."""
    field = p.field
    rows = matrix_rows(p.mat)
    cols = []
    for k in range(p.target.dim):
        x = solve_rows(rows, field.unit_vector(p.target.dim, k), p.source.dim, field)
        if x is None:
            raise ValueError("map is not surjective")
        cols.append(x)
    if not cols:
        return zero_matrix(p.source.dim, 0, field)
    return matrix_from_columns(cols, p.source.dim, field)


def induced_map(f: ModuleMap, p: ModuleMap, q: ModuleMap, name: str = "") -> ModuleMap:
    """
    The map α: X' → Y' with p then α = f then q, for f: X → Y and
    surjections p: X ↠ X', q: Y ↠ Y'.

    Raises:
        ValueError: f then q does not vanish on ker p
    """
    if p.source is not f.source or q.source is not f.target:
        raise DimensionMismatchError("maps do not form a square")
    fq = q.mat.matmul(f.mat)
    alpha = ModuleMap(p.target, q.target, fq.matmul(section_matrix(p)), name)
    if alpha.mat.matmul(p.mat) != fq:
        raise ValueError("map does not descend to the quotient")
    return alpha
