#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab — Semisimple Splitting Module

Primitive idempotents, simple-module isoclasses and Cartan matrices.

The algorithm works one frame corner e·A·e at a time:

1. Pass to the semisimple quotient S = eAe / rad(eAe).
2. Split S into primitive orthogonal idempotents. A candidate element a
   either has a minimal polynomial with two coprime factors (giving a CRT
   idempotent), or a factor whose value g(a) is a nonzero zero divisor (the
   left ideal S·g(a) then has a right identity, which is idempotent).
   Splitting recurses into the corners until every corner is 1-dimensional.
   A corner that refuses to split is a division algebra over the field and
   raises NonSplitError.
3. Lift back through the radical with a ← 3a² − 2a³, orthogonalising each
   lift against the earlier ones; the last idempotent is 1 minus the rest.

Two primitives f, f' are isomorphic iff f·A·f' ⊄ rad A.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix, Poly, Symbol

from .algebra import (FdAlgebra, Idempotents, corner, corner_algebra, quotient, radical)
from .constants import DEFAULT_SEED, LIFT_MAX_ROUNDS, SPLIT_RANDOM_TRIALS
from .errors import NonSplitError
from .field import FieldSpec
from .linalg import (Subspace, Vector, combine, is_zero_vector, nullspace_rows, solve_rows,
                     to_dense, vec_add, vec_scale, vec_sub)

logger = logging.getLogger(__name__)

_X = Symbol("x")


# =============================================================================
# POLYNOMIALS OF ELEMENTS
# =============================================================================

def minimal_polynomial(A: FdAlgebra, a: Sequence) -> Poly:
    """Monic minimal polynomial of a over the ground field."""
    field = A.field
    powers = [tuple(A.unit)]
    while True:
        nxt = A.multiply(powers[-1], a)
        powers.append(nxt)
        k = len(powers)
        rows = [{j: p[i] for j, p in enumerate(powers) if p[i]} for i in range(A.dim)]
        kernel = nullspace_rows(rows, k, field)
        if kernel:
            coeffs = to_dense(kernel[0], k, field)
            return Poly([field.to_rational(c) for c in reversed(coeffs)], _X,
                        domain=field.domain)


def evaluate(A: FdAlgebra, poly: Poly, a: Sequence) -> Vector:
    """poly(a) by Horner's rule."""
    field = A.field
    result = A.zero_vector
    for c in poly.all_coeffs():
        result = vec_add(A.multiply(result, a), vec_scale(field.convert(c), A.unit))
    return result


def _split_by(A: FdAlgebra, a: Sequence) -> Optional[Vector]:
    """A nontrivial idempotent of a semisimple A produced from a, or None."""
    mu = minimal_polynomial(A, a)
    _, factors = mu.factor_list()
    factors = [(g.set_domain(mu.domain), m) for g, m in factors]
    if len(factors) >= 2:
        g, m = factors[0]
        g = g ** m
        h = mu.exquo(g)
        _, t, _ = g.gcdex(h)
        return evaluate(A, t * h, a)
    g, m = factors[0]
    if m < 2:
        return None
    return _right_identity(A, evaluate(A, g, a))


def _right_identity(A: FdAlgebra, z: Vector) -> Optional[Vector]:
    """The idempotent u ∈ A·z with l·u = l on A·z (A semisimple, z a zero divisor)."""
    field = A.field
    L = Subspace.span(field, A.dim, [A.multiply(A.basis_vector(i), z) for i in range(A.dim)])
    if L.is_zero or L.is_full:
        return None
    r = L.dim
    rows, rhs = [], []
    for l in L.rows:
        products = [A.multiply(l, b) for b in L.rows]
        for i in range(A.dim):
            rows.append({k: p[i] for k, p in enumerate(products) if p[i]})
            rhs.append(l[i])
    x = solve_rows(rows, rhs, r, field)
    if x is None:
        return None
    return combine(x, L.rows, A.dim, field)


def _candidates(A: FdAlgebra, rng: np.random.Generator):
    d = A.dim
    for i in range(d):
        yield A.basis_vector(i)
    for i in range(d):
        for j in range(i + 1, d):
            yield vec_add(A.basis_vector(i), A.basis_vector(j))
            yield vec_sub(A.basis_vector(i), A.basis_vector(j))
    for _ in range(SPLIT_RANDOM_TRIALS):
        yield A.field.random_vector(rng, d)


def find_nontrivial_idempotent(A: FdAlgebra, seed: int = DEFAULT_SEED) -> Optional[Vector]:
    """An idempotent other than 0 and 1 in a semisimple algebra, or None if none was found."""
    rng = np.random.default_rng(seed)
    one = tuple(A.unit)
    for a in _candidates(A, rng):
        e = _split_by(A, a)
        if e is not None and not is_zero_vector(e) and e != one and A.is_idempotent(e):
            return e
    return None


def split_semisimple(S: FdAlgebra, seed: int = DEFAULT_SEED) -> List[Vector]:
    """Primitive orthogonal idempotents of a split semisimple algebra, summing to 1."""
    return _split(S, tuple(S.unit), seed)


def _split(S: FdAlgebra, e: Vector, seed: int) -> List[Vector]:
    view = corner_algebra(S, e)
    if view.algebra.dim == 1:
        return [e]
    f = find_nontrivial_idempotent(view.algebra, seed)
    if f is None:
        raise NonSplitError(
            f"a {view.algebra.dim}-dimensional corner of {S.name or 'the semisimple quotient'} "
            f"does not split over {S.field}")
    f_S = view.lift(f)
    return _split(S, f_S, seed) + _split(S, vec_sub(e, f_S), seed)


# =============================================================================
# LIFTING
# =============================================================================

def lift_idempotent(A: FdAlgebra, a: Sequence) -> Vector:
    """Iterate a ← 3a² − 2a³ until a is idempotent (a must be idempotent modulo rad A)."""
    three, two = A.field.convert(3), A.field.convert(2)
    a = tuple(a)
    for _ in range(LIFT_MAX_ROUNDS):
        a2 = A.multiply(a, a)
        if a2 == a:
            return a
        a3 = A.multiply(a2, a)
        a = vec_sub(vec_scale(three, a2), vec_scale(two, a3))
    raise ArithmeticError("idempotent lifting did not converge")


def lift_orthogonal(A: FdAlgebra, approximations: Sequence[Sequence]) -> List[Vector]:
    """
    Orthogonal idempotents lifting a complete family known modulo rad A.

    Each approximation is conjugated into the corner (1 − E)A(1 − E) of the
    idempotents lifted so far before lifting; the last one is 1 − E.
    """
    one = tuple(A.unit)
    E = A.zero_vector
    lifted: List[Vector] = []
    for a in approximations[:-1]:
        rest = vec_sub(one, E)
        a = A.multiply(A.multiply(rest, a), rest)
        f = lift_idempotent(A, a)
        lifted.append(f)
        E = vec_add(E, f)
    lifted.append(vec_sub(one, E))
    return lifted


# =============================================================================
# PRIMITIVE DECOMPOSITIONS
# =============================================================================

@dataclass(frozen=True, eq=False)
class PrimitiveDecomposition:
    """
    Primitive orthogonal idempotents of A grouped by the isoclass of A·f.

    Attributes:
        algebra: the decomposed algebra
        idempotents: the primitives, frame corner by frame corner
        classes: indices into idempotents, one tuple per isoclass
        frame_of: the frame corner each primitive came from
    """

    algebra: FdAlgebra
    idempotents: Idempotents
    classes: Tuple[Tuple[int, ...], ...]
    frame_of: Tuple[int, ...]

    @property
    def representatives(self) -> Tuple[Vector, ...]:
        return tuple(self.idempotents[c[0]] for c in self.classes)

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @property
    def is_basic(self) -> bool:
        return all(len(c) == 1 for c in self.classes)

    def class_of(self, index: int) -> int:
        for t, members in enumerate(self.classes):
            if index in members:
                return t
        raise IndexError(index)

    def summary(self) -> str:
        return (f"{len(self.idempotents)} primitive idempotent(s) in "
                f"{len(self.classes)} isoclass(es), multiplicities {list(self.multiplicities)}")


def _corner_primitives(A: FdAlgebra, e: Vector, seed: int) -> List[Vector]:
    view = corner_algebra(A, e)
    C = view.algebra
    if C.dim == 1:
        return [e]
    rad = radical(C)
    if rad.is_zero:
        prims = split_semisimple(C, seed)
    else:
        q = quotient(C, rad)
        bar = split_semisimple(q.algebra, seed)
        prims = lift_orthogonal(C, [q.lift(b) for b in bar])
    return [view.lift(f) for f in prims]


def _isomorphic(A: FdAlgebra, f: Vector, g: Vector) -> bool:
    return not corner(A, f, g).issubspace(radical(A))


def primitive_decomposition(A: FdAlgebra, seed: int = DEFAULT_SEED) -> PrimitiveDecomposition:
    """Primitive idempotents of A with their isoclasses; cached per algebra for the default seed."""
    cache = vars(A)
    if seed == DEFAULT_SEED and "_primitive_decomposition" in cache:
        return cache["_primitive_decomposition"]
    prims: List[Vector] = []
    frame_of: List[int] = []
    for k, e in enumerate(A.frame):
        found = _corner_primitives(A, tuple(e), seed)
        prims.extend(found)
        frame_of.extend([k] * len(found))
    classes: List[List[int]] = []
    for i, f in enumerate(prims):
        for members in classes:
            if _isomorphic(A, prims[members[0]], f):
                members.append(i)
                break
        else:
            classes.append([i])
    result = PrimitiveDecomposition(A, Idempotents(tuple(prims)),
                                    tuple(tuple(c) for c in classes), tuple(frame_of))
    logger.debug("%s: %s", A.name or "algebra", result.summary())
    if seed == DEFAULT_SEED:
        cache["_primitive_decomposition"] = result
    return result


def primitive_idempotents(A: FdAlgebra, seed: int = DEFAULT_SEED) -> Idempotents:
    return primitive_decomposition(A, seed).idempotents


def decomposition_from(A: FdAlgebra, prims: Idempotents) -> PrimitiveDecomposition:
    """Group a caller-supplied complete set of primitive idempotents into isoclasses."""
    report = prims.check(A)
    if not report.ok:
        raise ValueError(report.summary())
    classes: List[List[int]] = []
    for i, f in enumerate(prims):
        for members in classes:
            if _isomorphic(A, prims[members[0]], f):
                members.append(i)
                break
        else:
            classes.append([i])
    return PrimitiveDecomposition(A, prims, tuple(tuple(c) for c in classes),
                                  tuple(range(len(prims))))


# =============================================================================
# CARTAN MATRICES
# =============================================================================

def cartan_matrix(A: FdAlgebra, prims: Optional[Idempotents] = None,
                  seed: int = DEFAULT_SEED) -> np.ndarray:
    """
    C[s][t] = dim f_s·A·f_t over one primitive f per isoclass.

    Raises:
        NonSplitError: A/rad A has a block that is not a matrix algebra over the field
    """
    decomposition = (primitive_decomposition(A, seed) if prims is None
                     else decomposition_from(A, prims))
    reps = decomposition.representatives
    n = len(reps)
    C = np.zeros((n, n), dtype=np.int64)
    for s, f in enumerate(reps):
        for t, g in enumerate(reps):
            C[s, t] = corner(A, f, g).dim
    return C


def cartan_determinant(C: np.ndarray) -> int:
    """Exact determinant of an integer matrix."""
    if C.size == 0:
        return 1
    return int(Matrix(C.tolist()).det())


def simple_dimensions(A: FdAlgebra, seed: int = DEFAULT_SEED) -> Tuple[int, ...]:
    """Dimension of each simple module, isoclass by isoclass (split case)."""
    return primitive_decomposition(A, seed).multiplicities


if __name__ == "__main__":
    from .algebra import lower_triangular, matrix_algebra, truncated_polynomial

    F = FieldSpec.rationals()
    print("=" * 70)
    print("CARTAN MATRICES")
    print("=" * 70)
    for B in (truncated_polynomial(F, 2), lower_triangular(F, 2), matrix_algebra(F, 2)):
        C = cartan_matrix(B)
        print(f"{B.name:>12}: {C.tolist()}  det {cartan_determinant(C)}")
