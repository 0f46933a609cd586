#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab — Exact Linear Algebra Module

Everything homological in the lab reduces to ranks, nullspaces and echelon
forms over an exact field. This module wraps sympy's DomainMatrix (sparse
format throughout) and adds the two subspace types the rest of the lab is
written against:

- Subspace:    a subspace of k^n in canonical reduced row echelon form, so
               equality and containment are syntactic
- Subquotient: X/Y for Y ⊆ X, with a canonical complement basis and
               coordinate reading

Vectors are plain tuples of field elements; sparse rows are dicts
{column: nonzero value}.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from .errors import DimensionMismatchError
from .field import FieldSpec

Vector = Tuple
Row = Dict[int, object]


# =============================================================================
# VECTOR HELPERS
# =============================================================================

def to_sparse(vec: Sequence) -> Row:
    return {i: a for i, a in enumerate(vec) if a}


def to_dense(row: Row, n: int, field: FieldSpec) -> Vector:
    zero = field.zero
    return tuple(row.get(i, zero) for i in range(n))


def vec_add(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatchError(f"cannot add vectors of lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatchError(f"cannot subtract vectors of lengths {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u: Sequence) -> Vector:
    return tuple(c * a for a in u)


def is_zero_vector(u: Sequence) -> bool:
    return not any(u)


def combine(coeffs: Sequence, vectors: Sequence[Sequence], n: int, field: FieldSpec) -> Vector:
    """Σ coeffs[k]·vectors[k] as a dense vector of length n."""
    acc = [field.zero] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for i, a in enumerate(v):
            if a:
                acc[i] += c * a
    return tuple(acc)


# =============================================================================
# ECHELON FORMS
# =============================================================================

def rref_rows(rows: Sequence[Row], ncols: int,
              field: FieldSpec) -> Tuple[List[Row], Tuple[int, ...]]:
    """Reduced row echelon form of sparse rows; returns (nonzero rows, pivots)."""
    dod = {i: dict(r) for i, r in enumerate(rows) if r}
    if not dod:
        return [], ()
    M = DomainMatrix.from_dod(dod, (len(rows), ncols), field.domain)
    R, pivots = M.rref()
    reduced = R.to_dod()
    return [dict(reduced.get(k, {})) for k in range(len(pivots))], tuple(pivots)


def nullspace_basis(rows: Sequence[Row], ncols: int,
                    field: FieldSpec) -> Tuple[List[Row], Tuple[int, ...]]:
    """
    Basis of {x : row·x = 0 for every row}, one vector per free column,
    together with the free columns.

    The vector attached to free column f has a 1 at f and 0 at every other
    free column, so coordinates of a solution are its values at the free
    columns.
    """
    reduced, pivots = rref_rows(rows, ncols, field)
    pivot_set = set(pivots)
    one = field.one
    basis = []
    free = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = {f: one}
        for r, p in zip(reduced, pivots):
            a = r.get(f)
            if a:
                vec[p] = -a
        basis.append(vec)
        free.append(f)
    return basis, tuple(free)


def nullspace_rows(rows: Sequence[Row], ncols: int, field: FieldSpec) -> List[Row]:
    return nullspace_basis(rows, ncols, field)[0]


def solve_rows(rows: Sequence[Row], rhs: Sequence, ncols: int,
               field: FieldSpec) -> Optional[Vector]:
    """One solution x of row_i·x = rhs[i] (free variables set to 0), or None."""
    augmented = []
    for r, b in zip(rows, rhs):
        row = dict(r)
        if b:
            row[ncols] = -b
        augmented.append(row)
    reduced, pivots = rref_rows(augmented, ncols + 1, field)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for r, p in zip(reduced, pivots):
        c = r.get(ncols)
        if c:
            x[p] = -c
    return tuple(x)


def rank_of_rows(rows: Sequence[Row], ncols: int, field: FieldSpec) -> int:
    return len(rref_rows(rows, ncols, field)[1])


# =============================================================================
# MATRICES
# =============================================================================

def matrix_from_dod(dod: Dict[int, Row], nrows: int, ncols: int,
                    field: FieldSpec) -> DomainMatrix:
    clean = {}
    for i, row in dod.items():
        r = {j: a for j, a in row.items() if a}
        if r:
            clean[i] = r
    return DomainMatrix.from_dod(clean, (nrows, ncols), field.domain)


def matrix_from_columns(columns: Sequence[Sequence], nrows: int,
                        field: FieldSpec) -> DomainMatrix:
    dod: Dict[int, Row] = {}
    for j, col in enumerate(columns):
        if len(col) != nrows:
            raise DimensionMismatchError(f"column {j} has length {len(col)}, expected {nrows}")
        for i, a in enumerate(col):
            if a:
                dod.setdefault(i, {})[j] = a
    return DomainMatrix.from_dod(dod, (nrows, len(columns)), field.domain)


def zero_matrix(nrows: int, ncols: int, field: FieldSpec) -> DomainMatrix:
    return DomainMatrix.from_dod({}, (nrows, ncols), field.domain)


def identity_matrix(n: int, field: FieldSpec) -> DomainMatrix:
    one = field.one
    return DomainMatrix.from_dod({i: {i: one} for i in range(n)}, (n, n), field.domain)


def column(M: DomainMatrix, j: int, field: FieldSpec) -> Vector:
    nrows = M.shape[0]
    zero = field.zero
    out = [zero] * nrows
    for i, row in M.to_dod().items():
        a = row.get(j)
        if a:
            out[i] = a
    return tuple(out)


def columns(M: DomainMatrix, field: FieldSpec) -> List[Vector]:
    nrows, ncols = M.shape
    zero = field.zero
    cols = [[zero] * nrows for _ in range(ncols)]
    for i, row in M.to_dod().items():
        for j, a in row.items():
            cols[j][i] = a
    return [tuple(c) for c in cols]


def apply(M: DomainMatrix, v: Sequence, field: FieldSpec) -> Vector:
    """M·v for a dense column vector v."""
    nrows, ncols = M.shape
    if len(v) != ncols:
        raise DimensionMismatchError(f"matrix has {ncols} columns, vector has length {len(v)}")
    zero = field.zero
    out = [zero] * nrows
    for i, row in M.to_dod().items():
        acc = zero
        for j, a in row.items():
            b = v[j]
            if b:
                acc += a * b
        out[i] = acc
    return tuple(out)


def matrix_rows(M: DomainMatrix) -> List[Row]:
    nrows = M.shape[0]
    dod = M.to_dod()
    return [dict(dod.get(i, {})) for i in range(nrows)]


def matrix_rank(M: DomainMatrix, field: FieldSpec) -> int:
    return rank_of_rows(matrix_rows(M), M.shape[1], field)


def matrix_nullspace(M: DomainMatrix, field: FieldSpec) -> List[Vector]:
    n = M.shape[1]
    return [to_dense(r, n, field) for r in nullspace_rows(matrix_rows(M), n, field)]


def flatten(M: DomainMatrix) -> Row:
    """Row-major sparse flattening, used to compare and span maps."""
    ncols = M.shape[1]
    out = {}
    for i, row in M.to_dod().items():
        for j, a in row.items():
            out[i * ncols + j] = a
    return out


def linear_combination(coeffs: Sequence, mats: Sequence[DomainMatrix],
                       shape: Tuple[int, int], field: FieldSpec) -> DomainMatrix:
    dod: Dict[int, Row] = {}
    for c, M in zip(coeffs, mats):
        if not c:
            continue
        for i, row in M.to_dod().items():
            target = dod.setdefault(i, {})
            for j, a in row.items():
                target[j] = target.get(j, field.zero) + c * a
    return matrix_from_dod(dod, shape[0], shape[1], field)


def is_zero_matrix(M: DomainMatrix) -> bool:
    return not M.to_dod()


# =============================================================================
# SUBSPACES
# =============================================================================

@dataclass(frozen=True)
class Subspace:
    """
    A subspace of k^n held in reduced row echelon form.

    The echelon basis is canonical: two equal subspaces have identical
    `rows` and `pivots`, so dataclass equality is subspace equality.
    """

    field: FieldSpec
    ambient_dim: int
    rows: Tuple[Vector, ...] = ()
    pivots: Tuple[int, ...] = ()

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def span(cls, field: FieldSpec, ambient_dim: int,
             vectors: Iterable[Sequence]) -> "Subspace":
        sparse_rows = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(
                    f"vector of length {len(v)} in a {ambient_dim}-dimensional space")
            sparse_rows.append(to_sparse(v))
        return cls.from_rows(field, ambient_dim, sparse_rows)

    @classmethod
    def from_rows(cls, field: FieldSpec, ambient_dim: int,
                  sparse_rows: Sequence[Row]) -> "Subspace":
        reduced, pivots = rref_rows(sparse_rows, ambient_dim, field)
        rows = tuple(to_dense(r, ambient_dim, field) for r in reduced)
        return cls(field, ambient_dim, rows, pivots)

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim)

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        rows = tuple(field.unit_vector(ambient_dim, i) for i in range(ambient_dim))
        return cls(field, ambient_dim, rows, tuple(range(ambient_dim)))

    # -------------------------------------------------------------------------
    # Queries
    # -------------------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def is_zero(self) -> bool:
        return not self.rows

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of v after clearing every pivot column."""
        r = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = r[p]
            if c:
                for i, a in enumerate(row):
                    if a:
                        r[i] -= c * a
        return tuple(r)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError(
                f"vector of length {len(v)} tested against a {self.ambient_dim}-dimensional space")
        return is_zero_vector(self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def coords(self, v: Sequence) -> Vector:
        """Coordinates of v (assumed in the subspace) in the echelon basis."""
        return tuple(v[p] for p in self.pivots)

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.rows)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubspace(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.ambient_dim, self.rows + other.rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        residues = [to_sparse(other.reduce(r)) for r in self.rows]
        # columns of the relation system are the rows of self
        relation_rows: Dict[int, Row] = {}
        for k, res in enumerate(residues):
            for i, a in res.items():
                relation_rows.setdefault(i, {})[k] = a
        kernel = nullspace_rows(list(relation_rows.values()), self.dim, self.field)
        vectors = [combine(to_dense(c, self.dim, self.field), self.rows,
                           self.ambient_dim, self.field) for c in kernel]
        return Subspace.span(self.field, self.ambient_dim, vectors)

    def basis(self) -> List[Vector]:
        return list(self.rows)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, pivots={self.pivots})"


# =============================================================================
# SUBQUOTIENTS
# =============================================================================

@dataclass(frozen=True)
class Subquotient:
    """
    X/Y for subspaces Y ⊆ X of one ambient space.

    The complement basis is the echelon form of X's rows reduced modulo Y; it
    vanishes on Y's pivot columns, so residues are read off in two passes.
    """

    numerator: Subspace
    denominator: Optional[Subspace] = None

    def __post_init__(self):
        if self.denominator is None:
            object.__setattr__(self, "denominator",
                               Subspace.zero(self.numerator.field, self.numerator.ambient_dim))
        if not self.denominator.issubspace(self.numerator):
            raise ValueError("denominator of a subquotient must lie in its numerator")

    @cached_property
    def complement(self) -> Subspace:
        reduced = [to_sparse(self.denominator.reduce(r)) for r in self.numerator.rows]
        return Subspace.from_rows(self.numerator.field, self.numerator.ambient_dim, reduced)

    @property
    def dim(self) -> int:
        return self.numerator.dim - self.denominator.dim

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def is_plain(self) -> bool:
        return self.denominator.is_zero

    def representatives(self) -> List[Vector]:
        return list(self.complement.rows)

    def residue(self, v: Sequence) -> Vector:
        """Coordinates of the class of v (v must lie in the numerator)."""
        return self.complement.coords(self.denominator.reduce(v))

    def contains(self, v: Sequence) -> bool:
        return self.numerator.contains(v)

    def lift(self, coords: Sequence) -> Vector:
        n = self.numerator.ambient_dim
        return combine(coords, self.complement.rows, n, self.numerator.field)

    def __repr__(self) -> str:
        return (f"Subquotient(dim={self.dim}, numerator={self.numerator.dim}, "
                f"denominator={self.denominator.dim})")


def take_rows(M: DomainMatrix, rows: Sequence[int]) -> DomainMatrix:
    """Sub-matrix on the given rows, in the given order."""
    dod = M.to_dod()
    picked = {k: dict(dod[r]) for k, r in enumerate(rows) if r in dod}
    return DomainMatrix.from_dod(picked, (len(rows), M.shape[1]), M.domain)


def take_columns(M: DomainMatrix, cols: Sequence[int]) -> DomainMatrix:
    """Sub-matrix on the given columns, in the given order."""
    index = {c: k for k, c in enumerate(cols)}
    picked = {}
    for i, row in M.to_dod().items():
        r = {index[j]: a for j, a in row.items() if j in index}
        if r:
            picked[i] = r
    return DomainMatrix.from_dod(picked, (M.shape[0], len(cols)), M.domain)


def block_diagonal(blocks: Sequence[DomainMatrix], field: FieldSpec) -> DomainMatrix:
    dod: Dict[int, Row] = {}
    r0 = c0 = 0
    for B in blocks:
        for i, row in B.to_dod().items():
            dod[r0 + i] = {c0 + j: a for j, a in row.items()}
        r0 += B.shape[0]
        c0 += B.shape[1]
    return DomainMatrix.from_dod(dod, (r0, c0), field.domain)


def inverse(M: DomainMatrix) -> DomainMatrix:
    return M.to_dense().inv().to_sparse()
