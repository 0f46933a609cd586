#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab — Quiver Front-End

Turns a quiver with relations into an FdAlgebra:

    kQ / (J^N + ⟨relations⟩)

Paths are composed left to right: "alpha*beta" is alpha followed by beta,
so it starts at the source of alpha and ends at the target of beta. The
truncated path algebra kQ/J^N (paths of length < N) is built first; the
ideal spanned by p·r·q for relations r and paths p, q is then factored out
on the canonical complement basis, which keeps the shorter paths of each
relation as pivots and the longer ones as basis elements.

Relations are written as sympy expressions in noncommuting arrow symbols:

    alpha^3 - beta*delta
    alpha*beta
    2*x*y = y*x

Example:
    >>> q = QuiverSpec.from_lists(["1"], [("x", "1", "1")], ["x^2"], bound=2)
    >>> A, idems = build_path_algebra(q)
    >>> A.dim
    2
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Add, Mul, Pow, Rational, Symbol, expand
from sympy.parsing.sympy_parser import (convert_xor, parse_expr,
                                        standard_transformations)

from .algebra import FdAlgebra, Idempotents, ValidationReport, quotient
from .constants import MAX_BUILT_DIM
from .errors import DimensionCapError, ParseError, SpecValidationError
from .field import RATIONAL_FIELD, FieldSpec
from .linalg import Subspace, Vector

logger = logging.getLogger(__name__)

Path = Tuple[str, ...]
Term = Tuple[Rational, Path]

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


# =============================================================================
# QUIVER DATA
# =============================================================================

@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str


@dataclass(frozen=True)
class QuiverSpec:
    """
    A finite quiver with relations and a nilpotency bound.

    Attributes:
        vertices: vertex names, in frame order
        arrows: labelled arrows between named vertices
        relations: relation texts, one linear combination of paths each
        bound: N, every path of length ≥ N is zero
        name: free-form description used in reports
    """

    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    relations: Tuple[str, ...] = ()
    bound: int = 2
    name: str = ""

    @classmethod
    def from_lists(cls, vertices: Sequence[str], arrows: Sequence[Tuple[str, str, str]],
                   relations: Sequence[str] = (), bound: int = 2,
                   name: str = "") -> "QuiverSpec":
        """Arrows given as (label, source, target) triples."""
        return cls(tuple(vertices), tuple(Arrow(*a) for a in arrows),
                   tuple(relations), bound, name)

    def arrow(self, label: str) -> Arrow:
        for a in self.arrows:
            if a.label == label:
                return a
        raise KeyError(label)

    def path_source(self, path: Path, vertex: Optional[str] = None) -> str:
        return self.arrow(path[0]).source if path else vertex

    def path_target(self, path: Path, vertex: Optional[str] = None) -> str:
        return self.arrow(path[-1]).target if path else vertex

    def is_path(self, path: Path) -> bool:
        return all(self.arrow(a).target == self.arrow(b).source
                   for a, b in zip(path, path[1:]))


# =============================================================================
# RELATIONS
# =============================================================================

def _letters(factor, symbols: Dict[str, Symbol]) -> Optional[List[str]]:
    """Arrow labels of a noncommutative monomial factor, or None if it is not one."""
    if isinstance(factor, Symbol):
        return [factor.name] if factor.name in symbols else None
    if isinstance(factor, Pow) and factor.exp.is_Integer and factor.exp > 0:
        inner = _letters(factor.base, symbols)
        return None if inner is None else inner * int(factor.exp)
    if isinstance(factor, Mul):
        commuting, ordered = factor.args_cnc()
        if commuting:
            return None
        out: List[str] = []
        for f in ordered:
            inner = _letters(f, symbols)
            if inner is None:
                return None
            out.extend(inner)
        return out
    return None


def relation_terms(q: QuiverSpec, text: str) -> List[Term]:
    """
    Expand one relation into (coefficient, path) terms.

    "lhs = rhs" is read as lhs - rhs. Powers of a symbol become repeated
    arrows. Raises ParseError (line 0) for text that is not a polynomial in
    the arrow symbols.
    """
    symbols = {a.label: Symbol(a.label, commutative=False) for a in q.arrows}
    sides = text.split("=")
    if len(sides) > 2:
        raise ParseError(f"relation {text!r} has more than one '='", 0)
    try:
        parsed = [parse_expr(s, local_dict=symbols, transformations=_TRANSFORMATIONS)
                  for s in sides]
    except (SyntaxError, TypeError, ValueError) as exc:
        raise ParseError(f"cannot read relation {text!r}: {exc}", 0) from exc
    expr = expand(parsed[0] - parsed[1] if len(parsed) == 2 else parsed[0])
    if expr == 0:
        return []
    terms: Dict[Path, Rational] = {}
    for term in Add.make_args(expr):
        commuting, ordered = term.args_cnc()
        coeff = Mul(*commuting)
        if not coeff.is_Rational:
            raise ParseError(f"relation {text!r} has a non-rational coefficient {coeff}", 0)
        path: List[str] = []
        for factor in ordered:
            letters = _letters(factor, symbols)
            if letters is None:
                raise ParseError(f"relation {text!r} uses an unknown factor {factor}", 0)
            path.extend(letters)
        key = tuple(path)
        terms[key] = terms.get(key, Rational(0)) + coeff
    return [(c, p) for p, c in terms.items() if c != 0]


def validate_quiver(q: QuiverSpec) -> ValidationReport:
    """Vertices, arrows, bound and admissibility of every relation."""
    report = ValidationReport(f"quiver {q.name!r}".replace(" ''", ""))
    report.check(len(q.vertices) > 0, "no-vertices", "a quiver needs at least one vertex")
    report.check(len(set(q.vertices)) == len(q.vertices), "duplicate-vertex",
                 "vertex names must be distinct")
    labels = [a.label for a in q.arrows]
    report.check(len(set(labels)) == len(labels), "duplicate-arrow",
                 "arrow labels must be distinct")
    for a in q.arrows:
        report.check(a.source in q.vertices and a.target in q.vertices, "arrow-endpoint",
                     f"arrow {a.label} joins undeclared vertices", (a.label,))
        report.check(a.label.isidentifier(), "arrow-label",
                     f"arrow label {a.label!r} is not an identifier", (a.label,))
    report.check(q.bound >= 1, "bound", f"nilpotency bound must be positive (got {q.bound})")
    if not report.ok:
        return report
    for k, text in enumerate(q.relations):
        try:
            terms = relation_terms(q, text)
        except ParseError as exc:
            report.check(False, "relation-syntax", exc.message, (k,))
            continue
        for _, path in terms:
            if not report.check(q.is_path(path), "relation-path",
                                f"{'*'.join(path)} in relation {k + 1} is not a path", (k,)):
                continue
            report.check(len(path) >= 2, "relation-length",
                         f"relation {k + 1} has a term of length {len(path)} < 2", (k,))
        ends = {(q.path_source(p), q.path_target(p)) for _, p in terms
                if p and q.is_path(p)}
        report.check(len(ends) <= 1, "relation-endpoints",
                     f"paths of relation {k + 1} do not share source and target", (k,))
    return report


# =============================================================================
# PATH ALGEBRAS
# =============================================================================

def enumerate_paths(q: QuiverSpec, max_length: int) -> List[Tuple[str, Path]]:
    """
    Every path of length ≤ max_length as (start vertex, arrows), by length.

    Trivial paths come first in vertex order; longer paths extend shorter
    ones by an arrow leaving their endpoint, in arrow order.
    """
    paths = [(v, ()) for v in q.vertices]
    layer = list(paths)
    for _ in range(max_length):
        nxt = []
        for v, p in layer:
            end = q.path_target(p, v)
            for a in q.arrows:
                if a.source == end:
                    nxt.append((v, p + (a.label,)))
        paths.extend(nxt)
        layer = nxt
    return paths


def _path_label(vertex: str, path: Path) -> str:
    return "*".join(path) if path else f"e{vertex}"


def truncated_path_algebra(q: QuiverSpec, field: FieldSpec = RATIONAL_FIELD,
                           max_paths: Optional[int] = None) -> Tuple[FdAlgebra, List[Tuple[str, Path]]]:
    """kQ/J^N on the basis of paths of length < N, vertex idempotents as frame."""
    paths = enumerate_paths(q, q.bound - 1)
    if max_paths is not None and len(paths) > max_paths:
        raise DimensionCapError(f"{len(paths)} paths of length < {q.bound} exceed {max_paths}")
    index = {p: k for k, p in enumerate(paths)}
    n = len(paths)

    def product(i, j):
        (u, p), (v, r) = paths[i], paths[j]
        out = list(field.zeros(n))
        if q.path_target(p, u) != v:
            return out
        key = (u, p + r)
        if key in index:
            out[index[key]] = field.one
        return out

    unit = [field.zero] * n
    frame = []
    for v in q.vertices:
        unit[index[(v, ())]] = field.one
        frame.append(field.unit_vector(n, index[(v, ())]))
    T = FdAlgebra.from_products(field, n, product, unit,
                                labels=tuple(_path_label(v, p) for v, p in paths),
                                frame=tuple(frame), name=f"k{q.name or 'Q'}/J^{q.bound}")
    return T, paths


def relation_ideal(q: QuiverSpec, T: FdAlgebra,
                   paths: Sequence[Tuple[str, Path]]) -> Subspace:
    """The span of p·r·q inside kQ/J^N for every relation r and paths p, q."""
    field = T.field
    index = {p: k for k, p in enumerate(paths)}
    vectors: List[Vector] = []
    for text in q.relations:
        terms = relation_terms(q, text)
        if not terms:
            continue
        start = q.path_source(terms[0][1])
        end = q.path_target(terms[0][1])
        shortest = min(len(p) for _, p in terms)
        before = [(v, p) for v, p in paths if q.path_target(p, v) == start]
        after = [p for v, p in paths if v == end]
        for v, left in before:
            for right in after:
                if len(left) + shortest + len(right) >= q.bound:
                    continue
                vec = list(field.zeros(T.dim))
                for c, middle in terms:
                    key = (v, left + middle + right)
                    if key in index:
                        vec[index[key]] += field.convert(c)
                vectors.append(tuple(vec))
    logger.debug("relation ideal from %d generators in a %d-path space", len(vectors), T.dim)
    return Subspace.span(field, T.dim, vectors)


def build_path_algebra(q: QuiverSpec, field: FieldSpec = RATIONAL_FIELD,
                       max_dim: int = MAX_BUILT_DIM) -> Tuple[FdAlgebra, Idempotents]:
    """
    kQ/(J^N + ⟨relations⟩) with its vertex idempotents.

    Raises:
        SpecValidationError: the quiver or a relation is not admissible
        DimensionCapError: the algebra (or the path space) is too large
    """
    report = validate_quiver(q)
    if not report.ok:
        raise SpecValidationError(report)
    T, paths = truncated_path_algebra(q, field, max_paths=8 * max_dim)
    I = relation_ideal(q, T, paths)
    if T.dim - I.dim > max_dim:
        raise DimensionCapError(f"path algebra has dimension {T.dim - I.dim} > {max_dim}")
    # relation terms have length ≥ 2, so no trivial path is ever in I
    if I.is_zero:
        A = FdAlgebra(field, T.dim, T.table, T.unit, T.labels, T.frame, q.name or T.name)
    else:
        A = quotient(T, I, name=q.name or "kQ/I").algebra
    idems = Idempotents(A.frame)
    logger.info("path algebra %s: %d paths, relation ideal %d, dim %d",
                q.name or "kQ/I", T.dim, I.dim, A.dim)
    return A, idems


if __name__ == "__main__":
    print("=" * 70)
    print("QUIVER FRONT-END")
    print("=" * 70)
    q = QuiverSpec.from_lists(
        ["1", "2"],
        [("alpha", "1", "1"), ("beta", "1", "2"), ("delta", "2", "1")],
        ["alpha^3 = beta*delta", "alpha*beta", "delta*alpha"], bound=4, name="example-3")
    A, idems = build_path_algebra(q)
    print(A.summary())
    print("basis:", ", ".join(A.labels))
