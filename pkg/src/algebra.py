#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab — Algebra Core Module

FdAlgebra is a finite-dimensional unital associative algebra given by
structure constants over an exact field. Every ring the lab talks about
(A, A_i, Λ, Σ, Γ, P, Φ, End(T), quotients and corners) is a value of this
type.

Core operations:
- validate_algebra:  associativity on all basis triples, unit laws, frame
- multiply:          bilinear extension of the structure constants
- radical:           kernel of the trace form T(a, b) = tr(L_ab)
- quotient:          A/I on a canonical complement basis, with projection
- center:            commutant of a generating set
- corner:            e·A·f for idempotents e, f

Each algebra carries a frame: a complete set of orthogonal idempotents
(matrix positions, quiver vertices, or just the unit). Basis vectors are
expected to be frame-homogeneous, which lets Hom computations work block by
block.

Example:
    >>> A = truncated_polynomial(FieldSpec.rationals(), 2)
    >>> radical(A).dim
    1
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from .errors import (DimensionMismatchError, NotAnIdealError, NotIdempotentError,
                     ZeroRingError)
from .field import FieldSpec
from .linalg import (Row, Subquotient, Subspace, Vector, combine, is_zero_vector,
                     matrix_from_dod, nullspace_rows, to_dense, to_sparse, vec_add,
                     vec_sub)

logger = logging.getLogger(__name__)

Table = Mapping[Tuple[int, int], Tuple[Tuple[int, object], ...]]


# =============================================================================
# VALIDATION REPORTS
# =============================================================================

@dataclass(frozen=True)
class ValidationFailure:
    """One failed condition: a stable code, a readable message, and where it failed."""

    code: str
    message: str
    where: Tuple = ()

    def to_dict(self) -> Dict:
        return {"code": self.code, "message": self.message, "where": list(self.where)}


@dataclass
class ValidationReport:
    """
    Outcome of a validator. An empty failure list means valid.

    Attributes:
        subject: what was validated
        failures: every failed condition, in discovery order
        checked: number of conditions evaluated
    """

    subject: str
    failures: List[ValidationFailure] = dataclass_field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, code: str, message: str, where: Tuple = ()) -> bool:
        self.checked += 1
        if not condition:
            self.failures.append(ValidationFailure(code, message, tuple(where)))
        return condition

    def merge(self, other: "ValidationReport") -> "ValidationReport":
        self.failures.extend(other.failures)
        self.checked += other.checked
        return self

    def codes(self) -> List[str]:
        return [f.code for f in self.failures]

    def summary(self) -> str:
        if self.ok:
            return f"{self.subject}: valid ({self.checked} conditions)"
        head = "; ".join(f.message for f in self.failures[:3])
        more = f" (+{len(self.failures) - 3} more)" if len(self.failures) > 3 else ""
        return f"{self.subject}: {len(self.failures)} failure(s): {head}{more}"

    def to_dict(self) -> Dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checked": self.checked,
            "failures": [f.to_dict() for f in self.failures],
        }

    def __repr__(self) -> str:
        return f"ValidationReport({self.summary()})"


# =============================================================================
# FINITE-DIMENSIONAL ALGEBRAS
# =============================================================================

@dataclass(frozen=True, eq=False)
class FdAlgebra:
    """
    A finite-dimensional unital associative algebra.

    Attributes:
        field: ground field
        dim: dimension over the field
        table: sparse structure constants, (i, j) -> ((k, c_ijk), ...) with c_ijk ≠ 0
        unit: coordinates of 1
        labels: basis element names
        frame: complete set of orthogonal idempotents the basis is homogeneous for
        name: free-form description used in reports
    """

    field: FieldSpec
    dim: int
    table: Table
    unit: Vector
    labels: Tuple[str, ...] = ()
    frame: Tuple[Vector, ...] = ()
    name: str = ""

    def __post_init__(self):
        if self.dim <= 0:
            raise ZeroRingError("algebras have positive dimension")
        if len(self.unit) != self.dim:
            raise DimensionMismatchError(f"unit has length {len(self.unit)}, dim is {self.dim}")
        for (i, j), entry in self.table.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise DimensionMismatchError(f"structure constant index {(i, j)} out of range")
            for k, _ in entry:
                if not 0 <= k < self.dim:
                    raise DimensionMismatchError(f"structure constant target {k} out of range")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"b{i}" for i in range(self.dim)))
        elif len(self.labels) != self.dim:
            raise DimensionMismatchError(f"{len(self.labels)} labels for dimension {self.dim}")
        if not self.frame:
            object.__setattr__(self, "frame", (tuple(self.unit),))
        for e in self.frame:
            if len(e) != self.dim:
                raise DimensionMismatchError("frame idempotent of the wrong length")

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def from_products(cls, field: FieldSpec, dim: int,
                      product: Callable[[int, int], Sequence],
                      unit: Sequence, **kwargs) -> "FdAlgebra":
        """Build the table from a function giving b_i·b_j as a coordinate vector."""
        table = {}
        for i in range(dim):
            for j in range(dim):
                entry = tuple((k, c) for k, c in enumerate(product(i, j)) if c)
                if entry:
                    table[(i, j)] = entry
        return cls(field, dim, table, tuple(unit), **kwargs)

    @classmethod
    def from_triples(cls, field: FieldSpec, dim: int,
                     triples: Sequence[Tuple[int, int, int, object]],
                     unit: Sequence, **kwargs) -> "FdAlgebra":
        """Build from sparse (i, j, k, c) structure constants; repeated triples add up."""
        acc: Dict[Tuple[int, int], Dict[int, object]] = {}
        for i, j, k, c in triples:
            slot = acc.setdefault((i, j), {})
            slot[k] = slot.get(k, field.zero) + field.coerce(c)
        table = {}
        for key, slot in acc.items():
            entry = tuple((k, c) for k, c in sorted(slot.items()) if c)
            if entry:
                table[key] = entry
        return cls(field, dim, table, tuple(unit), **kwargs)

    # -------------------------------------------------------------------------
    # Elements
    # -------------------------------------------------------------------------

    @property
    def zero_vector(self) -> Vector:
        return self.field.zeros(self.dim)

    def basis_vector(self, i: int) -> Vector:
        return self.field.unit_vector(self.dim, i)

    def structure_constant(self, i: int, j: int) -> Vector:
        row = dict(self.table.get((i, j), ()))
        return to_dense(row, self.dim, self.field)

    def multiply(self, u: Sequence, v: Sequence) -> Vector:
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatchError(
                f"multiply needs vectors of length {self.dim}, got {len(u)} and {len(v)}")
        zero = self.field.zero
        acc = [zero] * self.dim
        nz_v = [(j, b) for j, b in enumerate(v) if b]
        table = self.table
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in nz_v:
                entry = table.get((i, j))
                if entry:
                    ab = a * b
                    for k, c in entry:
                        acc[k] += ab * c
        return tuple(acc)

    def power(self, u: Sequence, k: int) -> Vector:
        result = tuple(self.unit)
        for _ in range(k):
            result = self.multiply(result, u)
        return result

    def is_idempotent(self, e: Sequence) -> bool:
        return self.multiply(e, e) == tuple(e)

    def format_element(self, v: Sequence) -> str:
        terms = []
        for c, lab in zip(v, self.labels):
            if not c:
                continue
            text = self.field.format(c)
            terms.append(lab if text == "1" else f"-{lab}" if text == "-1" else f"{text}*{lab}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    # -------------------------------------------------------------------------
    # Regular representations
    # -------------------------------------------------------------------------

    @cached_property
    def left_regular(self) -> Tuple[DomainMatrix, ...]:
        """ρ(b_i) with ρ(b_i)[k][j] = coefficient of b_k in b_i·b_j."""
        dods: List[Dict[int, Row]] = [dict() for _ in range(self.dim)]
        for (i, j), entry in self.table.items():
            for k, c in entry:
                dods[i].setdefault(k, {})[j] = c
        return tuple(matrix_from_dod(d, self.dim, self.dim, self.field) for d in dods)

    @cached_property
    def right_regular(self) -> Tuple[DomainMatrix, ...]:
        """R(b_i) with R(b_i)[k][j] = coefficient of b_k in b_j·b_i."""
        dods: List[Dict[int, Row]] = [dict() for _ in range(self.dim)]
        for (j, i), entry in self.table.items():
            for k, c in entry:
                dods[i].setdefault(k, {})[j] = c
        return tuple(matrix_from_dod(d, self.dim, self.dim, self.field) for d in dods)

    @cached_property
    def trace_vector(self) -> Vector:
        """t_k = tr(L_{b_k})."""
        t = [self.field.zero] * self.dim
        for (i, j), entry in self.table.items():
            for k, c in entry:
                if k == j:
                    t[i] += c
        return tuple(t)

    # -------------------------------------------------------------------------
    # Cached structure
    # -------------------------------------------------------------------------

    @cached_property
    def generators(self) -> Tuple[Vector, ...]:
        """Basis elements that, with the frame, generate the algebra."""
        return _greedy_generators(self)

    @cached_property
    def rad(self) -> Subspace:
        return _trace_radical(self)

    @property
    def is_commutative(self) -> bool:
        for (i, j), entry in self.table.items():
            if self.table.get((j, i)) != entry:
                return False
        return all((j, i) in self.table for (i, j) in self.table)

    def triples(self) -> List[Tuple[int, int, int, object]]:
        return [(i, j, k, c) for (i, j) in sorted(self.table) for k, c in self.table[(i, j)]]

    def summary(self) -> str:
        return (f"{self.name or 'algebra'}: dim {self.dim} over {self.field}, "
                f"{len(self.frame)} frame idempotent(s)")

    def __repr__(self) -> str:
        return f"FdAlgebra(name={self.name!r}, dim={self.dim}, field={self.field})"


# =============================================================================
# IDEMPOTENT SETS
# =============================================================================

@dataclass(frozen=True)
class Idempotents:
    """A list e_1..e_n expected to be orthogonal idempotents summing to 1."""

    elems: Tuple[Vector, ...]

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __getitem__(self, i: int) -> Vector:
        return self.elems[i]

    def check(self, A: FdAlgebra) -> ValidationReport:
        report = ValidationReport("idempotents")
        total = A.zero_vector
        for i, e in enumerate(self.elems):
            report.check(A.multiply(e, e) == tuple(e), "not-idempotent",
                         f"e_{i + 1}^2 != e_{i + 1}", (i,))
            for j, f in enumerate(self.elems):
                if i != j:
                    report.check(is_zero_vector(A.multiply(e, f)), "not-orthogonal",
                                 f"e_{i + 1}·e_{j + 1} != 0", (i, j))
            total = vec_add(total, e)
        report.check(total == tuple(A.unit), "not-complete", "idempotents do not sum to 1")
        return report


# =============================================================================
# CORE OPERATIONS
# =============================================================================

def validate_algebra(A: FdAlgebra) -> ValidationReport:
    """Every failed associativity triple, unit failure and frame failure."""
    report = ValidationReport(A.name or "algebra")
    d, table, zero = A.dim, A.table, A.field.zero
    for i in range(d):
        for j in range(d):
            ij = table.get((i, j), ())
            for k in range(d):
                left: Dict[int, object] = {}
                for l, c in ij:
                    for m, c2 in table.get((l, k), ()):
                        left[m] = left.get(m, zero) + c * c2
                right: Dict[int, object] = {}
                for l, c in table.get((j, k), ()):
                    for m, c2 in table.get((i, l), ()):
                        right[m] = right.get(m, zero) + c * c2
                same = {m: c for m, c in left.items() if c} == {m: c for m, c in right.items() if c}
                report.check(same, "associativity",
                             f"(b{i}·b{j})·b{k} != b{i}·(b{j}·b{k})", (i, j, k))
    one = A.unit
    for i in range(d):
        b = A.basis_vector(i)
        report.check(A.multiply(one, b) == b, "unit-left", f"1·b{i} != b{i}", (i,))
        report.check(A.multiply(b, one) == b, "unit-right", f"b{i}·1 != b{i}", (i,))
    if len(A.frame) > 1 or A.frame[0] != tuple(A.unit):
        report.merge(Idempotents(A.frame).check(A))
    logger.debug("validated %s: %d failures", report.subject, len(report.failures))
    return report


def multiply(A: FdAlgebra, u: Sequence, v: Sequence) -> Vector:
    return A.multiply(u, v)


def _trace_radical(A: FdAlgebra) -> Subspace:
    A.field.guard(A.dim)
    t = A.trace_vector
    zero = A.field.zero
    rows: List[Row] = [dict() for _ in range(A.dim)]
    for (i, j), entry in A.table.items():
        acc = zero
        for k, c in entry:
            if t[k]:
                acc += c * t[k]
        if acc:
            rows[j][i] = acc
    kernel = nullspace_rows(rows, A.dim, A.field)
    return Subspace.from_rows(A.field, A.dim, kernel)


def radical(A: FdAlgebra) -> Subspace:
    """Jacobson radical as the kernel of the trace form (char 0 or p > dim)."""
    return A.rad


def subspace_product(A: FdAlgebra, U: Subspace, W: Subspace) -> Subspace:
    """span{u·w : u ∈ U, w ∈ W}."""
    products = [A.multiply(u, w) for u in U.rows for w in W.rows]
    return Subspace.span(A.field, A.dim, products)


def full_subspace(A: FdAlgebra) -> Subspace:
    return Subspace.full(A.field, A.dim)


def span(A: FdAlgebra, vectors: Sequence[Sequence]) -> Subspace:
    return Subspace.span(A.field, A.dim, vectors)


def is_left_ideal(A: FdAlgebra, I: Subspace) -> bool:
    gens = list(A.generators) + list(A.frame)
    return all(I.contains(A.multiply(g, x)) for g in gens for x in I.rows)


def is_right_ideal(A: FdAlgebra, I: Subspace) -> bool:
    gens = list(A.generators) + list(A.frame)
    return all(I.contains(A.multiply(x, g)) for g in gens for x in I.rows)


def is_ideal(A: FdAlgebra, I: Subspace) -> bool:
    return is_left_ideal(A, I) and is_right_ideal(A, I)


def is_subring(A: FdAlgebra, B: Subspace) -> bool:
    """Contains the unit of A and is closed under multiplication."""
    return B.contains(A.unit) and subspace_product(A, B, B).issubspace(B)


def radical_power(A: FdAlgebra, k: int) -> Subspace:
    result = full_subspace(A)
    for _ in range(k):
        result = subspace_product(A, result, A.rad)
    return result


def loewy_length(A: FdAlgebra) -> int:
    """Smallest k with rad^k = 0."""
    power, k = A.rad, 1
    while not power.is_zero:
        power = subspace_product(A, power, A.rad)
        k += 1
        if k > A.dim + 1:
            raise ArithmeticError("radical is not nilpotent")
    return k


# =============================================================================
# QUOTIENTS
# =============================================================================

@dataclass(frozen=True, eq=False)
class Quotient:
    """A/I with the projection A → A/I recorded as a matrix."""

    algebra: FdAlgebra
    projection: DomainMatrix
    kernel: Subspace
    data: Subquotient

    def project(self, v: Sequence) -> Vector:
        return self.data.residue(v)

    def lift(self, coords: Sequence) -> Vector:
        return self.data.lift(coords)

    def __iter__(self):
        return iter((self.algebra, self.projection))


def _label_of(A: FdAlgebra, v: Sequence) -> str:
    support = [i for i, a in enumerate(v) if a]
    if len(support) == 1 and v[support[0]] == A.field.one:
        return A.labels[support[0]]
    return A.format_element(v)


def quotient(A: FdAlgebra, I: Subspace, name: str = "") -> Quotient:
    """
    The quotient algebra A/I on the canonical complement basis.

    Raises:
        NotAnIdealError: I is not a two-sided ideal
        ZeroRingError: I = A
    """
    if I.ambient_dim != A.dim:
        raise DimensionMismatchError("ideal lives in a different algebra")
    if I.is_full:
        raise ZeroRingError("quotient by the whole algebra is the zero ring")
    if not is_ideal(A, I):
        raise NotAnIdealError("subspace is not a two-sided ideal")
    data = Subquotient(Subspace.full(A.field, A.dim), I)
    reps = data.representatives()
    q = len(reps)

    def product(i, j):
        return data.residue(A.multiply(reps[i], reps[j]))

    frame = []
    for e in A.frame:
        r = data.residue(e)
        if not is_zero_vector(r):
            frame.append(r)
    Q = FdAlgebra.from_products(
        A.field, q, product, data.residue(A.unit),
        labels=tuple(_label_of(A, r) for r in reps), frame=tuple(frame),
        name=name or (f"{A.name}/I" if A.name else "quotient"))
    dod: Dict[int, Row] = {}
    for j in range(A.dim):
        for i, c in enumerate(data.residue(A.basis_vector(j))):
            if c:
                dod.setdefault(i, {})[j] = c
    projection = matrix_from_dod(dod, q, A.dim, A.field)
    return Quotient(Q, projection, I, data)


# =============================================================================
# CENTER AND CORNERS
# =============================================================================

def center(A: FdAlgebra) -> Subspace:
    """Solutions of z·g = g·z over a generating set (frame included)."""
    zero = A.field.zero
    rows: List[Row] = []
    gens = list(A.generators) + list(A.frame)
    for g in gens:
        g_sparse = to_sparse(g)
        eqs: Dict[int, Row] = {}
        for k in range(A.dim):
            for j, gj in g_sparse.items():
                for m, c in A.table.get((k, j), ()):
                    slot = eqs.setdefault(m, {})
                    slot[k] = slot.get(k, zero) + gj * c
                for m, c in A.table.get((j, k), ()):
                    slot = eqs.setdefault(m, {})
                    slot[k] = slot.get(k, zero) - gj * c
        rows.extend({k: c for k, c in r.items() if c} for r in eqs.values())
    kernel = nullspace_rows(rows, A.dim, A.field)
    return Subspace.from_rows(A.field, A.dim, kernel)


def _require_idempotent(A: FdAlgebra, e: Sequence, name: str) -> None:
    if len(e) != A.dim:
        raise DimensionMismatchError(f"{name} has length {len(e)}, dim is {A.dim}")
    if not A.is_idempotent(e):
        raise NotIdempotentError(f"{name} is not idempotent")


def corner(A: FdAlgebra, e: Sequence, f: Sequence) -> Subspace:
    """e·A·f, spanned by e·b·f over the basis."""
    _require_idempotent(A, e, "e")
    _require_idempotent(A, f, "f")
    vectors = [A.multiply(A.multiply(e, A.basis_vector(i)), f) for i in range(A.dim)]
    return Subspace.span(A.field, A.dim, vectors)


@dataclass(frozen=True, eq=False)
class SubalgebraView:
    """A subalgebra given by a subspace of A, carried as an FdAlgebra on the echelon basis."""

    ambient: FdAlgebra
    subspace: Subspace
    algebra: FdAlgebra

    def lift(self, coords: Sequence) -> Vector:
        return combine(coords, self.subspace.rows, self.ambient.dim, self.ambient.field)

    def coords(self, v: Sequence) -> Vector:
        return self.subspace.coords(v)


def subalgebra(A: FdAlgebra, B: Subspace, unit: Sequence, name: str = "",
               frame: Sequence[Sequence] = ()) -> SubalgebraView:
    """The algebra structure on a multiplicatively closed subspace with the given unit."""
    if B.is_zero:
        raise ZeroRingError("subalgebra on the zero subspace")
    rows = B.rows

    def product(i, j):
        return B.coords(A.multiply(rows[i], rows[j]))

    algebra = FdAlgebra.from_products(
        A.field, B.dim, product, B.coords(unit),
        labels=tuple(_label_of(A, r) for r in rows),
        frame=tuple(B.coords(e) for e in frame),
        name=name)
    return SubalgebraView(A, B, algebra)


def corner_algebra(A: FdAlgebra, e: Sequence, name: str = "") -> SubalgebraView:
    """e·A·e as an algebra with unit e."""
    if is_zero_vector(e):
        raise ZeroRingError("corner at the zero idempotent")
    return subalgebra(A, corner(A, e, e), e, name=name or f"corner of {A.name}".strip())


# =============================================================================
# GENERATORS
# =============================================================================

def generated_subalgebra(A: FdAlgebra, gens: Sequence[Sequence]) -> Subspace:
    """Span of all words in gens, the unit and the frame."""
    letters = [tuple(g) for g in gens] + [tuple(e) for e in A.frame]
    W = Subspace.span(A.field, A.dim, [A.unit] + letters)
    while True:
        products = [A.multiply(w, g) for w in W.rows for g in letters]
        grown = W + Subspace.span(A.field, A.dim, products)
        if grown.dim == W.dim:
            return W
        W = grown


def _greedy_generators(A: FdAlgebra) -> Tuple[Vector, ...]:
    chosen: List[Vector] = []
    closure = generated_subalgebra(A, chosen)
    for i in range(A.dim):
        if closure.is_full:
            break
        b = A.basis_vector(i)
        if closure.contains(b):
            continue
        chosen.append(b)
        closure = generated_subalgebra(A, chosen)
    logger.debug("%s: %d generators beyond the frame", A.name or "algebra", len(chosen))
    return tuple(chosen)


def subalgebra_generators(A: FdAlgebra) -> Tuple[Vector, ...]:
    return A.generators


# =============================================================================
# STANDARD ALGEBRAS
# =============================================================================

def field_algebra(field: FieldSpec) -> FdAlgebra:
    return FdAlgebra(field, 1, {(0, 0): ((0, field.one),)}, (field.one,),
                     labels=("1",), name="k")


def truncated_polynomial(field: FieldSpec, n: int, var: str = "x") -> FdAlgebra:
    """k[x]/(x^n) on the basis 1, x, ..., x^(n-1)."""
    one = field.one
    table = {}
    for i in range(n):
        for j in range(n):
            if i + j < n:
                table[(i, j)] = ((i + j, one),)
    labels = tuple("1" if i == 0 else var if i == 1 else f"{var}^{i}" for i in range(n))
    return FdAlgebra(field, n, table, field.unit_vector(n, 0), labels=labels,
                     name=f"k[{var}]/({var}^{n})")


def matrix_algebra(field: FieldSpec, n: int) -> FdAlgebra:
    """M_n(k) on matrix units E_ij (row-major), framed by the E_ii."""
    one = field.one
    d = n * n
    table = {}
    for i in range(n):
        for j in range(n):
            for l in range(n):
                table[(i * n + j, j * n + l)] = ((i * n + l, one),)
    unit = tuple(one if (k // n) == (k % n) else field.zero for k in range(d))
    labels = tuple(f"E{i + 1}{j + 1}" for i in range(n) for j in range(n))
    frame = tuple(field.unit_vector(d, i * n + i) for i in range(n))
    return FdAlgebra(field, d, table, unit, labels=labels, frame=frame, name=f"M_{n}(k)")


def lower_triangular(field: FieldSpec, n: int = 2) -> FdAlgebra:
    """Lower-triangular n×n matrices over k, on E_ij with i ≥ j in row-major order."""
    positions = [(i, j) for i in range(n) for j in range(n) if i >= j]
    index = {p: k for k, p in enumerate(positions)}
    one = field.one
    table = {}
    for (i, j), a in index.items():
        for (j2, l), b in index.items():
            if j == j2:
                table[(a, b)] = ((index[(i, l)], one),)
    d = len(positions)
    unit = tuple(one if i == j else field.zero for (i, j) in positions)
    frame = tuple(field.unit_vector(d, index[(i, i)]) for i in range(n))
    labels = tuple(f"E{i + 1}{j + 1}" for (i, j) in positions)
    return FdAlgebra(field, d, table, unit, labels=labels, frame=frame, name=f"T_{n}(k)")


def product_algebra(*algebras: FdAlgebra, name: str = "") -> FdAlgebra:
    """Direct product A_1 × ... × A_r with the union of the factors' frames."""
    if not algebras:
        raise ZeroRingError("empty product")
    field = algebras[0].field
    offsets, total = [], 0
    for B in algebras:
        offsets.append(total)
        total += B.dim
    table, unit, labels, frame = {}, [], [], []
    for factor, (B, off) in enumerate(zip(algebras, offsets), start=1):
        for (i, j), entry in B.table.items():
            table[(i + off, j + off)] = tuple((k + off, c) for k, c in entry)
        unit.extend(B.unit)
        labels.extend(f"{lab}@{factor}" for lab in B.labels)
        for e in B.frame:
            frame.append(field.zeros(off) + tuple(e) + field.zeros(total - off - B.dim))
    return FdAlgebra(field, total, table, tuple(unit), labels=tuple(labels),
                     frame=tuple(frame), name=name or " x ".join(B.name or "A" for B in algebras))
