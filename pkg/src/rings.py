#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab — Ring Builder Module

Every matrix-shaped ring of the lab is assembled by one routine: given a
base algebra A, a size N and an entry for every matrix position (a
subquotient X/Y of A), the basis of the ring is the concatenation of the
entries' complement bases in row-major position order, and the product of
two basis vectors is the A-product of their representatives, read back in
the target entry. Products leaving the target entry raise ClosureError.

Specs (1-based indices, as in matrix notation):
- LambdaSpec:          A, A_2..A_n, I_2..I_n, I_ij        → Λ and Σ
- TiledTriangularSpec: A, I_ij (i < j)                     → Φ, M_n(A)
- BlockExtensionSpec:  A, e_1..e_m, n_1..n_m, block data   → P(n_1, ..., n_m)

Built rings (BuiltRing) use 0-based matrix positions; position a carries
the idempotent idems[a] (the unit of its diagonal entry).
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from .algebra import (FdAlgebra, Idempotents, ValidationReport, corner, is_ideal,
                      is_subring, radical, subspace_product)
from .constants import MAX_BUILT_DIM
from .errors import (ClosureError, DimensionCapError, DimensionMismatchError,
                     InclusionError, SpecValidationError, ZeroRingError)
from .linalg import Subquotient, Subspace, Vector, matrix_from_dod

logger = logging.getLogger(__name__)

Position = Tuple[int, int]

LOWER = "lower"
UPPER = "upper"


# =============================================================================
# BUILT RINGS
# =============================================================================

@dataclass(frozen=True, eq=False)
class BuiltRing:
    """
    A matrix ring over a base algebra, as an FdAlgebra with its positions.

    Attributes:
        algebra: the ring itself
        idems: position idempotents, one per diagonal position
        entry_map: (a, b) -> declared entry as a subquotient of the base
        base: the base algebra A
        size: number of matrix rows
        offsets: (a, b) -> index of the first basis vector of that entry
        kind: which builder produced it
        position_names: display name of each position ("2", or "1.3" in block rings)
    """

    algebra: FdAlgebra
    idems: Idempotents
    entry_map: Mapping[Position, Subquotient]
    base: FdAlgebra
    size: int
    offsets: Mapping[Position, int]
    kind: str = ""
    position_names: Tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def entry(self, a: int, b: int) -> Subquotient:
        return self.entry_map[(a, b)]

    def entry_dims(self) -> List[List[int]]:
        return [[self.entry_map[(a, b)].dim for b in range(self.size)] for a in range(self.size)]

    def position_range(self, a: int, b: int) -> range:
        start = self.offsets[(a, b)]
        return range(start, start + self.entry_map[(a, b)].dim)

    def position_subspace(self, a: int, b: int) -> Subspace:
        F = self.algebra.field
        return Subspace.span(F, self.dim, [self.algebra.basis_vector(k)
                                           for k in self.position_range(a, b)])

    def element(self, a: int, b: int, x: Sequence) -> Vector:
        """The matrix with the class of x ∈ A at (a, b) and zeros elsewhere."""
        target = self.entry_map[(a, b)]
        if not target.contains(x):
            raise InclusionError(f"element does not lie in entry ({a + 1},{b + 1})")
        out = list(self.algebra.zero_vector)
        start = self.offsets[(a, b)]
        for k, c in enumerate(target.residue(x)):
            out[start + k] = c
        return tuple(out)

    def component(self, v: Sequence, a: int, b: int) -> Vector:
        """Representative in A of the (a, b) entry of v."""
        coords = [v[k] for k in self.position_range(a, b)]
        return self.entry_map[(a, b)].lift(coords)

    def summary(self) -> str:
        return f"{self.kind or 'ring'} {self.algebra.name!r}: {self.size}x{self.size}, dim {self.dim}"

    def to_dict(self) -> Dict:
        return {
            "kind": self.kind,
            "name": self.algebra.name,
            "size": self.size,
            "dim": self.dim,
            "entry_dims": self.entry_dims(),
        }


def _zero_entry(base: FdAlgebra) -> Subquotient:
    return Subquotient(Subspace.zero(base.field, base.dim))


def _entry_label(base: FdAlgebra, x: Vector) -> str:
    support = [i for i, c in enumerate(x) if c]
    if len(support) == 1 and x[support[0]] == base.field.one:
        return base.labels[support[0]]
    return f"({base.format_element(x)})"


def _assemble(base: FdAlgebra, size: int, entries: Mapping[Position, Subquotient],
              units: Sequence[Vector], name: str, kind: str,
              max_dim: int = MAX_BUILT_DIM,
              position_names: Sequence[str] = ()) -> BuiltRing:
    field = base.field
    zero_entry = _zero_entry(base)
    full_entries = {(a, b): entries.get((a, b), zero_entry)
                    for a in range(size) for b in range(size)}
    offsets: Dict[Position, int] = {}
    reps: Dict[Position, List[Vector]] = {}
    total = 0
    for a in range(size):
        for b in range(size):
            offsets[(a, b)] = total
            reps[(a, b)] = full_entries[(a, b)].representatives()
            total += len(reps[(a, b)])
    if total > max_dim:
        raise DimensionCapError(f"{kind} {name!r} would have dimension {total} > {max_dim}")
    for a in range(size):
        if full_entries[(a, a)].is_zero:
            raise ZeroRingError(f"diagonal entry ({a + 1},{a + 1}) is the zero ring")
    logger.debug("assembling %s %r: size %d, dim %d", kind, name, size, total)

    table: Dict[Tuple[int, int], Tuple] = {}
    for (a, b), xs in reps.items():
        if not xs:
            continue
        for c in range(size):
            ys = reps[(b, c)]
            if not ys:
                continue
            target = full_entries[(a, c)]
            out = offsets[(a, c)]
            for k, x in enumerate(xs):
                for l, y in enumerate(ys):
                    prod = base.multiply(x, y)
                    if not any(prod):
                        continue
                    if not target.contains(prod):
                        raise ClosureError(
                            f"entry ({a + 1},{b + 1}) times entry ({b + 1},{c + 1}) "
                            f"leaves entry ({a + 1},{c + 1})")
                    coords = tuple((out + m, v) for m, v in enumerate(target.residue(prod)) if v)
                    if coords:
                        table[(offsets[(a, b)] + k, offsets[(b, c)] + l)] = coords

    zero = field.zero
    unit = [zero] * total
    frame = []
    for a in range(size):
        diag = full_entries[(a, a)]
        e = [zero] * total
        for m, v in enumerate(diag.residue(units[a])):
            e[offsets[(a, a)] + m] = v
            unit[offsets[(a, a)] + m] = v
        frame.append(tuple(e))
    labels = []
    for a in range(size):
        for b in range(size):
            for x in reps[(a, b)]:
                labels.append(f"{_entry_label(base, x)}[{a + 1},{b + 1}]")
    algebra = FdAlgebra(field, total, table, tuple(unit), labels=tuple(labels),
                        frame=tuple(frame), name=name)
    names = tuple(position_names) or tuple(str(a + 1) for a in range(size))
    return BuiltRing(algebra, Idempotents(tuple(frame)), full_entries, base, size,
                     offsets, kind, names)


def _closure_check(report: ValidationReport, base: FdAlgebra, size: int,
                   entry: Callable[[int, int], Subspace]) -> None:
    """entry(a, b)·entry(b, c) ⊆ entry(a, c) for all positions (0-based)."""
    for a in range(size):
        for b in range(size):
            left = entry(a, b)
            if left.is_zero:
                continue
            for c in range(size):
                right = entry(b, c)
                if right.is_zero:
                    continue
                ok = subspace_product(base, left, right).issubspace(entry(a, c))
                report.check(ok, "closure",
                             f"entry ({a + 1},{b + 1}) times entry ({b + 1},{c + 1}) "
                             f"is not inside entry ({a + 1},{c + 1})", (a, b, c))


def _ambient_check(report: ValidationReport, base: FdAlgebra,
                   named: Sequence[Tuple[str, Subspace]]) -> bool:
    ok = True
    for label, S in named:
        ok &= report.check(S.ambient_dim == base.dim and S.field == base.field, "ambient",
                           f"{label} does not live in the base algebra")
    return ok


# =============================================================================
# Λ AND Σ
# =============================================================================

@dataclass(frozen=True, eq=False)
class LambdaSpec:
    """
    The data of Λ: subrings A_2..A_n, ideals I_2..I_n and I_ij (2 ≤ j < i ≤ n).

    Indices are 1-based as in matrix notation; `chain_required` can be switched off for
    shapes whose columns are constant (the chain is then not needed for Λ to
    be a ring).
    """

    base: FdAlgebra
    n: int
    subrings: Tuple[Subspace, ...]
    ideals: Tuple[Subspace, ...]
    cross_ideals: Mapping[Position, Subspace] = dataclass_field(default_factory=dict)
    chain_required: bool = True
    name: str = ""

    def subring(self, i: int) -> Subspace:
        if i == 1:
            return Subspace.full(self.base.field, self.base.dim)
        return self.subrings[i - 2]

    def ideal(self, j: int) -> Subspace:
        return self.ideals[j - 2]

    def cross_ideal(self, i: int, j: int) -> Subspace:
        return self.cross_ideals[(i, j)]

    def entry(self, i: int, j: int) -> Subspace:
        """(i, 1) → A; j > i → I_j; (i, i) → A_i; 1 < j < i → I_ij."""
        if j == 1:
            return Subspace.full(self.base.field, self.base.dim)
        if j > i:
            return self.ideal(j)
        if i == j:
            return self.subring(i)
        return self.cross_ideal(i, j)

    @classmethod
    def uniform(cls, base: FdAlgebra, ideals: Sequence[Subspace],
                subrings: Optional[Sequence[Subspace]] = None,
                cross: Optional[Callable[[int, int], Subspace]] = None,
                **kwargs) -> "LambdaSpec":
        """A_i defaults to A; I_ij defaults to I_j."""
        n = len(ideals) + 1
        full = Subspace.full(base.field, base.dim)
        subrings = tuple(subrings) if subrings is not None else tuple(full for _ in ideals)
        cross = cross or (lambda i, j: ideals[j - 2])
        cross_ideals = {(i, j): cross(i, j) for i in range(3, n + 1) for j in range(2, i)}
        return cls(base, n, subrings, tuple(ideals), cross_ideals, **kwargs)

    def summary(self) -> str:
        return (f"LambdaSpec {self.name!r}: n={self.n}, dim A={self.base.dim}, "
                f"dim I=[{', '.join(str(I.dim) for I in self.ideals)}]")


def validate_lambda_spec(spec: LambdaSpec) -> ValidationReport:
    """Every chain, containment, ideal, subring and product condition on the Λ data."""
    report = ValidationReport(f"lambda spec {spec.name!r}".replace(" ''", ""))
    n, base = spec.n, spec.base
    if not report.check(n >= 2, "size", f"n must be at least 2 (got {n})"):
        return report
    report.check(len(spec.subrings) == n - 1, "arity", f"expected {n - 1} subrings A_2..A_n")
    report.check(len(spec.ideals) == n - 1, "arity", f"expected {n - 1} ideals I_2..I_n")
    expected = {(i, j) for i in range(3, n + 1) for j in range(2, i)}
    for key in sorted(expected - set(spec.cross_ideals)):
        report.check(False, "missing-cross-ideal", f"I_{key[0]}{key[1]} is missing", key)
    for key in sorted(set(spec.cross_ideals) - expected):
        report.check(False, "extra-cross-ideal", f"I_{key[0]}{key[1]} is not a Λ entry", key)
    if not report.ok:
        return report
    named = [(f"A_{i}", spec.subring(i)) for i in range(2, n + 1)]
    named += [(f"I_{i}", spec.ideal(i)) for i in range(2, n + 1)]
    named += [(f"I_{i}{j}", S) for (i, j), S in sorted(spec.cross_ideals.items())]
    if not _ambient_check(report, base, named):
        return report

    for i in range(2, n + 1):
        Ai, Ii = spec.subring(i), spec.ideal(i)
        report.check(is_subring(base, Ai), "subring",
                     f"A_{i} is not a subring with the identity of A", (i,))
        report.check(is_ideal(base, Ii), "ideal", f"I_{i} is not an ideal of A", (i,))
        report.check(Ii.issubspace(Ai), "ideal-in-subring", f"I_{i} is not inside A_{i}", (i,))
        if spec.chain_required and i < n:
            report.check(spec.ideal(i + 1).issubspace(Ii), "chain",
                         f"I_{i + 1} is not inside I_{i}", (i + 1, i))
    for (i, j), Iij in sorted(spec.cross_ideals.items()):
        report.check(is_ideal(base, Iij), "cross-ideal", f"I_{i}{j} is not an ideal of A", (i, j))
        report.check(spec.ideal(j).issubspace(Iij), "cross-contains",
                     f"I_{j} is not inside I_{i}{j}", (i, j))
        products = Subspace.zero(base.field, base.dim)
        for l in range(j + 1, i):
            products = products + subspace_product(
                base, spec.cross_ideal(i, l), spec.cross_ideal(l, j))
        report.check(products.issubspace(Iij), "cross-product",
                     f"sum of I_{i}l·I_l{j} is not inside I_{i}{j}", (i, j))
    logger.debug(report.summary())
    return report


def _require(report: ValidationReport) -> None:
    if not report.ok:
        raise SpecValidationError(report)


def build_lambda(spec: LambdaSpec, max_dim: int = MAX_BUILT_DIM) -> BuiltRing:
    """Λ with the entry rule of LambdaSpec.entry."""
    _require(validate_lambda_spec(spec))
    n = spec.n
    entries = {(a, b): Subquotient(spec.entry(a + 1, b + 1)) for a in range(n) for b in range(n)}
    units = [spec.base.unit] * n
    return _assemble(spec.base, n, entries, units, spec.name or "Lambda", "lambda", max_dim)


def _sigma_entries(spec: LambdaSpec, rows: int) -> Dict[Position, Subquotient]:
    """Σ entries on positions 0..rows-1 of the top-left part; position r stands for i = r + 2."""
    entries = {}
    for r in range(rows):
        i = r + 2
        entries[(r, r)] = Subquotient(spec.subring(i), spec.ideal(i))
        for c in range(r):
            j = c + 2
            entries[(r, c)] = Subquotient(spec.cross_ideal(i, j), spec.ideal(j))
    return entries


def _guard_sigma(spec: LambdaSpec) -> None:
    for i in range(2, spec.n + 1):
        if spec.ideal(i) == spec.subring(i):
            raise ZeroRingError(f"A_{i}/I_{i} is the zero ring")


def build_sigma(spec: LambdaSpec, max_dim: int = MAX_BUILT_DIM) -> BuiltRing:
    """
    Σ: diagonal A_i/I_i, below-diagonal I_ij/I_j, last row A/I_2, ..., A/I_n, A.

    Raises:
        ZeroRingError: some A_i = I_i
    """
    _require(validate_lambda_spec(spec))
    _guard_sigma(spec)
    n, base = spec.n, spec.base
    full = Subspace.full(base.field, base.dim)
    entries = _sigma_entries(spec, n - 1)
    for c in range(n - 1):
        entries[(n - 1, c)] = Subquotient(full, spec.ideal(c + 2))
    entries[(n - 1, n - 1)] = Subquotient(full)
    units = [base.unit] * n
    return _assemble(base, n, entries, units, f"Sigma({spec.name or 'Lambda'})", "sigma",
                     max_dim)


@dataclass(frozen=True, eq=False)
class TriangularParts:
    """Σ = [[R, 0], [M, S]] with R the top-left block, S = A and M = ⊕ A/I_i."""

    R: BuiltRing
    S: FdAlgebra
    M_ideals: Tuple[Subspace, ...]


def sigma_triangular_parts(spec: LambdaSpec) -> TriangularParts:
    _require(validate_lambda_spec(spec))
    _guard_sigma(spec)
    rows = spec.n - 1
    R = _assemble(spec.base, rows, _sigma_entries(spec, rows), [spec.base.unit] * rows,
                  f"Sigma'({spec.name or 'Lambda'})", "sigma-top")
    return TriangularParts(R, spec.base, tuple(spec.ideals))


def build_cor33_shape(A: FdAlgebra, ideals: Sequence[Subspace], variant: int,
                      name: str = "") -> LambdaSpec:
    """
    The two constant-column shapes with A_i = A.

    variant 1: I_ij = I_j (the chain is not needed)
    variant 2: I_ij = A (the chain I_n ⊆ ... ⊆ I_2 is required)
    """
    full = Subspace.full(A.field, A.dim)
    if variant == 1:
        spec = LambdaSpec.uniform(A, ideals, chain_required=False, name=name)
    elif variant == 2:
        spec = LambdaSpec.uniform(A, ideals, cross=lambda i, j: full, name=name)
    else:
        raise ValueError(f"variant must be 1 or 2 (got {variant})")
    _require(validate_lambda_spec(spec))
    return spec


# =============================================================================
# TILED TRIANGULAR RINGS AND FULL MATRIX RINGS
# =============================================================================

@dataclass(frozen=True, eq=False)
class TiledTriangularSpec:
    """Φ: A on and below the diagonal, ideals I_ij above it (1-based, i < j)."""

    base: FdAlgebra
    n: int
    ideals: Mapping[Position, Subspace] = dataclass_field(default_factory=dict)
    name: str = ""

    def entry(self, i: int, j: int) -> Subspace:
        if i >= j:
            return Subspace.full(self.base.field, self.base.dim)
        return self.ideals[(i, j)]

    @classmethod
    def from_rule(cls, base: FdAlgebra, n: int,
                  rule: Callable[[int, int], Subspace], **kwargs) -> "TiledTriangularSpec":
        return cls(base, n, {(i, j): rule(i, j) for i in range(1, n + 1)
                             for j in range(i + 1, n + 1)}, **kwargs)


def validate_tiled_spec(spec: TiledTriangularSpec) -> ValidationReport:
    report = ValidationReport(f"tiled spec {spec.name!r}".replace(" ''", ""))
    n, base = spec.n, spec.base
    if not report.check(n >= 1, "size", f"n must be at least 1 (got {n})"):
        return report
    expected = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    for key in sorted(expected - set(spec.ideals)):
        report.check(False, "missing-ideal", f"I_{key[0]}{key[1]} is missing", key)
    if not report.ok:
        return report
    if not _ambient_check(report, base, [(f"I_{i}{j}", S) for (i, j), S in spec.ideals.items()]):
        return report
    for (i, j), S in sorted(spec.ideals.items()):
        report.check(is_ideal(base, S), "ideal", f"I_{i}{j} is not an ideal of A", (i, j))
    _closure_check(report, base, n, lambda a, b: spec.entry(a + 1, b + 1))
    return report


def build_tiled_triangular(spec: TiledTriangularSpec, max_dim: int = MAX_BUILT_DIM) -> BuiltRing:
    _require(validate_tiled_spec(spec))
    n = spec.n
    entries = {(a, b): Subquotient(spec.entry(a + 1, b + 1)) for a in range(n) for b in range(n)}
    return _assemble(spec.base, n, entries, [spec.base.unit] * n, spec.name or "Phi",
                     "tiled", max_dim)


def build_full_matrix(A: FdAlgebra, n: int, max_dim: int = MAX_BUILT_DIM) -> BuiltRing:
    """Γ = M_n(A)."""
    if n < 1:
        raise ValueError(f"n must be at least 1 (got {n})")
    full = Subquotient(Subspace.full(A.field, A.dim))
    entries = {(a, b): full for a in range(n) for b in range(n)}
    name = A.name if n == 1 else f"M_{n}({A.name or 'A'})"
    ring = _assemble(A, n, entries, [A.unit] * n, name, "full-matrix", max_dim)
    if n == 1:
        same = FdAlgebra(A.field, A.dim, A.table, A.unit, labels=A.labels, frame=A.frame, name=name)
        return BuiltRing(same, Idempotents((tuple(A.unit),)), ring.entry_map, A, 1,
                         ring.offsets, ring.kind, ring.position_names)
    return ring


def embed(inner: BuiltRing, outer: BuiltRing) -> DomainMatrix:
    """
    Inclusion of one matrix ring into another over the same base, as a matrix
    of shape dim(outer) × dim(inner).

    Raises:
        InclusionError: an entry of inner is not inside the matching entry of outer
    """
    if inner.size != outer.size or inner.base is not outer.base:
        raise DimensionMismatchError("embedding needs matrix rings of one size over one base")
    dod: Dict[int, Dict[int, object]] = {}
    for (a, b), sq in inner.entry_map.items():
        target = outer.entry_map[(a, b)]
        if not sq.is_plain or not target.is_plain:
            raise InclusionError("embedding is only defined between rings with plain entries")
        for k, x in zip(inner.position_range(a, b), sq.representatives()):
            if not target.contains(x):
                raise InclusionError(f"entry ({a + 1},{b + 1}) is not contained in the target")
            for m, c in zip(outer.position_range(a, b), target.residue(x)):
                if c:
                    dod.setdefault(m, {})[k] = c
    return matrix_from_dod(dod, outer.dim, inner.dim, inner.algebra.field)


# =============================================================================
# GENERAL BLOCK EXTENSIONS
# =============================================================================

@dataclass(frozen=True, eq=False)
class DiagonalBlock:
    """Case-I data of one block: subrings B_2..B_n, ideals I_2..I_n and I_pq (2 ≤ q < p ≤ n)."""

    subrings: Tuple[Subspace, ...] = ()
    ideals: Tuple[Subspace, ...] = ()
    cross_ideals: Mapping[Position, Subspace] = dataclass_field(default_factory=dict)
    chain_required: bool = True


@dataclass(frozen=True, eq=False)
class BlockExtensionSpec:
    """
    A general block extension P(n_1, ..., n_m) of A along e_1..e_m.

    Attributes:
        base: A
        idems: the decomposition of the identity e_1..e_m
        sizes: n_1..n_m
        blocks: case-I data per block, as subspaces of A inside A_i = e_iAe_i
        off_diagonal: (i, p, s, q) -> P_{ip,sq} ⊆ e_iAe_s for i ≠ s, q ≥ 2
            (missing entries default to e_iAe_s)
        orientation: "lower" for the staircase with A_i in the first column,
            "upper" for its transpose (A_i on and above the diagonal)
        strict_case2: rows of a block above the diagonal must repeat row 1
    """

    base: FdAlgebra
    idems: Idempotents
    sizes: Tuple[int, ...]
    blocks: Tuple[DiagonalBlock, ...]
    off_diagonal: Mapping[Tuple[int, int, int, int], Subspace] = dataclass_field(default_factory=dict)
    orientation: str = LOWER
    strict_case2: bool = True
    name: str = ""

    @property
    def m(self) -> int:
        return len(self.sizes)

    @property
    def total_size(self) -> int:
        return sum(self.sizes)

    def positions(self) -> List[Tuple[int, int]]:
        """Global position order: (block i, row p), both 1-based."""
        return [(i, p) for i in range(1, self.m + 1) for p in range(1, self.sizes[i - 1] + 1)]

    def block_algebra(self, i: int) -> Subspace:
        e = self.idems[i - 1]
        return corner(self.base, e, e)

    def block_corner(self, i: int, s: int) -> Subspace:
        return corner(self.base, self.idems[i - 1], self.idems[s - 1])

    def _staircase(self, i: int, p: int, q: int) -> Subspace:
        block = self.blocks[i - 1]
        if q == 1:
            return self.block_algebra(i)
        if q > p:
            return block.ideals[q - 2]
        if p == q:
            return block.subrings[p - 2]
        return block.cross_ideals[(p, q)]

    def entry(self, i: int, p: int, s: int, q: int) -> Subspace:
        """P_{ip,sq}."""
        if i == s:
            if self.orientation == UPPER:
                return self._staircase(i, q, p)
            return self._staircase(i, p, q)
        full = self.block_corner(i, s)
        if self.orientation == UPPER:
            return self.off_diagonal.get((i, p, s, q), full)
        if q == 1:
            return full
        if i < s:
            row_one = self.off_diagonal.get((i, 1, s, q), full)
            return row_one if self.strict_case2 else self.off_diagonal.get((i, p, s, q), row_one)
        return self.off_diagonal.get((i, p, s, q), full)

    def global_entry(self, a: int, b: int) -> Subspace:
        positions = self.positions()
        (i, p), (s, q) = positions[a], positions[b]
        return self.entry(i, p, s, q)


def validate_block_spec(spec: BlockExtensionSpec) -> ValidationReport:
    report = ValidationReport(f"block extension spec {spec.name!r}".replace(" ''", ""))
    base = spec.base
    report.check(spec.orientation in (LOWER, UPPER), "orientation",
                 f"orientation must be 'lower' or 'upper' (got {spec.orientation!r})")
    if not report.check(len(spec.idems) == spec.m and spec.m >= 1, "arity",
                        f"{len(spec.idems)} idempotents for {spec.m} block sizes"):
        return report
    report.check(len(spec.blocks) == spec.m, "arity", f"{len(spec.blocks)} blocks for m={spec.m}")
    for i, n_i in enumerate(spec.sizes, start=1):
        report.check(n_i >= 1, "size", f"n_{i} must be positive", (i,))
    if not report.ok:
        return report
    report.merge(spec.idems.check(base))
    if not report.ok:
        return report

    for i, (n_i, block) in enumerate(zip(spec.sizes, spec.blocks), start=1):
        Ai = spec.block_algebra(i)
        e = spec.idems[i - 1]
        if not report.check(len(block.subrings) == n_i - 1 and len(block.ideals) == n_i - 1,
                            "arity", f"block {i} needs {n_i - 1} subrings and ideals", (i,)):
            continue
        expected = {(p, q) for p in range(3, n_i + 1) for q in range(2, p)}
        missing = expected - set(block.cross_ideals)
        if not report.check(not missing, "missing-cross-ideal",
                            f"block {i} lacks I_{i}pq for {sorted(missing)}", (i,)):
            continue
        named = [(f"B_{i}{l}", S) for l, S in enumerate(block.subrings, start=2)]
        named += [(f"I_{i}{l}", S) for l, S in enumerate(block.ideals, start=2)]
        named += [(f"I_{i}{p}{q}", S) for (p, q), S in block.cross_ideals.items()]
        if not _ambient_check(report, base, named):
            continue
        for l in range(2, n_i + 1):
            B, I = block.subrings[l - 2], block.ideals[l - 2]
            closed = subspace_product(base, B, B).issubspace(B)
            report.check(B.issubspace(Ai) and B.contains(e) and closed, "subring",
                         f"B_{i}{l} is not a subring of A_{i} with identity e_{i}", (i, l))
            report.check(_is_block_ideal(base, Ai, I), "ideal",
                         f"I_{i}{l} is not an ideal of A_{i}", (i, l))
            report.check(I.issubspace(B), "ideal-in-subring",
                         f"I_{i}{l} is not inside B_{i}{l}", (i, l))
            if l < n_i and block.chain_required:
                report.check(block.ideals[l - 1].issubspace(I), "chain",
                             f"I_{i}{l + 1} is not inside I_{i}{l}", (i, l))
        for (p, q), S in sorted(block.cross_ideals.items()):
            report.check(_is_block_ideal(base, Ai, S), "cross-ideal",
                         f"I_{i}{p}{q} is not an ideal of A_{i}", (i, p, q))
            report.check(block.ideals[q - 2].issubspace(S), "cross-contains",
                         f"I_{i}{q} is not inside I_{i}{p}{q}", (i, p, q))

    for (i, p, s, q), S in sorted(spec.off_diagonal.items()):
        if not report.check(i != s and 1 <= i <= spec.m and 1 <= s <= spec.m
                            and 1 <= p <= spec.sizes[i - 1] and 2 <= q <= spec.sizes[s - 1],
                            "offdiag-index", f"P_{i}{p},{s}{q} is not an off-diagonal entry",
                            (i, p, s, q)):
            continue
        if not _ambient_check(report, base, [(f"P_{i}{p},{s}{q}", S)]):
            continue
        Eis = spec.block_corner(i, s)
        report.check(S.issubspace(Eis), "offdiag-corner",
                     f"P_{i}{p},{s}{q} is not inside e_{i}Ae_{s}", (i, p, s, q))
        bimodule = (subspace_product(base, spec.block_algebra(i), S).issubspace(S)
                    and subspace_product(base, S, spec.block_algebra(s)).issubspace(S))
        report.check(bimodule, "bimodule",
                     f"P_{i}{p},{s}{q} is not an (A_{i}, A_{s})-bimodule", (i, p, s, q))
        if spec.orientation == UPPER:
            report.check(S == Eis, "upper-offdiag-full",
                         f"upper staircase blocks need P_{i}{p},{s}{q} = e_{i}Ae_{s}", (i, p, s, q))
        elif i < s and spec.strict_case2 and p > 1:
            row_one = spec.off_diagonal.get((i, 1, s, q), Eis)
            report.check(S == row_one, "case2-rows",
                         f"P_{i}{p},{s}{q} differs from P_{i}1,{s}{q}", (i, p, s, q))
    if not report.ok:
        return report
    _closure_check(report, base, spec.total_size, spec.global_entry)
    return report


def _is_block_ideal(base: FdAlgebra, Ai: Subspace, I: Subspace) -> bool:
    return (I.issubspace(Ai)
            and subspace_product(base, Ai, I).issubspace(I)
            and subspace_product(base, I, Ai).issubspace(I))


def build_block_extension(spec: BlockExtensionSpec, max_dim: int = MAX_BUILT_DIM) -> BuiltRing:
    _require(validate_block_spec(spec))
    N = spec.total_size
    positions = spec.positions()
    entries = {(a, b): Subquotient(spec.global_entry(a, b)) for a in range(N) for b in range(N)}
    units = [spec.idems[i - 1] for i, _ in positions]
    names = [f"{i}.{p}" for i, p in positions]
    return _assemble(spec.base, N, entries, units, spec.name or "P", "block-extension",
                     max_dim, names)


def basic_block_extension(A: FdAlgebra, idems: Idempotents, sizes: Sequence[int],
                          name: str = "") -> BlockExtensionSpec:
    """
    The block extension of a basic algebra: each P(i, i) has A_i on and above
    the diagonal and rad A_i below it; off-diagonal blocks are full e_iAe_s.
    """
    rad = radical(A)
    blocks = []
    for e, n_i in zip(idems, sizes):
        Ai = corner(A, e, e)
        rad_i = Subspace.span(A.field, A.dim,
                              [A.multiply(A.multiply(e, r), e) for r in rad.rows])
        blocks.append(DiagonalBlock(
            subrings=tuple(Ai for _ in range(n_i - 1)),
            ideals=tuple(rad_i for _ in range(n_i - 1)),
            cross_ideals={(p, q): Ai for p in range(3, n_i + 1) for q in range(2, p)}))
    dims = ",".join(str(n) for n in sizes)
    return BlockExtensionSpec(A, idems, tuple(sizes), tuple(blocks), {}, UPPER, True,
                              name or f"P({dims})")


def lambda_as_block_spec(spec: LambdaSpec) -> BlockExtensionSpec:
    """The m = 1 block extension carrying the same data as a LambdaSpec."""
    block = DiagonalBlock(tuple(spec.subrings), tuple(spec.ideals), dict(spec.cross_ideals),
                          spec.chain_required)
    return BlockExtensionSpec(spec.base, Idempotents((tuple(spec.base.unit),)), (spec.n,),
                              (block,), {}, LOWER, True, spec.name)
