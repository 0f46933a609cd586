#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab — Spec File Format

A line-oriented text format for an algebra together with the ring specs
built over it. One statement per line, `#` starts a comment, rationals are
written "p/q". Sections open with a keyword and close with `end`:

    format_version 1
    name lambda-dual-numbers
    field Q
    note Λ = [[A, rad], [A, A]] over k[x]/(x^2)
    algebra
      dim 2
      labels 1 x
      unit 1 0
      mult 0 0 0 1
      mult 0 1 1 1
      mult 1 0 1 1
      frame 1 0
    end
    lambda
      n 2
      ideal 2 rad
    end
    option depth 12

The base algebra comes from either an `algebra` section (sparse structure
constants i j k c, 0-based) or a `quiver` section (`vertex`, `arrow label
source target`, `relation ...`, `bound N`). Subspaces are referenced by
name: `subspace NAME ... end` blocks of `vector` lines, or the built-in
names full, zero, rad and rad^k.

serialize() writes the canonical text: sections in a fixed order, subspaces
as reduced echelon rows, entries sorted. parse(serialize(s)) reproduces the
same text.
"""

import logging
import re
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import FdAlgebra, Idempotents, radical, radical_power
from .constants import FORMAT_VERSION, MAX_BUILT_DIM
from .dimensions import Budget
from .errors import AlgebraError, ParseError
from .field import RATIONAL_FIELD, FieldSpec
from .linalg import Subspace, Vector
from .quiver import Arrow, QuiverSpec, build_path_algebra
from .rings import (LOWER, UPPER, BlockExtensionSpec, DiagonalBlock, LambdaSpec,
                    TiledTriangularSpec, basic_block_extension)

logger = logging.getLogger(__name__)

BUILTIN_SUBSPACES = ("full", "zero", "rad")
_RAD_POWER = re.compile(r"^rad\^([1-9][0-9]*)$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_^]*$")


# =============================================================================
# DECLARATIONS
# =============================================================================

@dataclass
class LambdaDecl:
    """Λ by subspace names; A_i defaults to full, I_ij to I_j."""

    n: int
    ideals: Dict[int, str] = dataclass_field(default_factory=dict)
    subrings: Dict[int, str] = dataclass_field(default_factory=dict)
    cross: Dict[Tuple[int, int], str] = dataclass_field(default_factory=dict)
    chain: bool = True


@dataclass
class BlockDecl:
    """
    A block extension by subspace names.

    With `basic` set, the block extension of a basic algebra is built from
    the sizes alone. Otherwise each block reads its ideals from `ideals`
    (i, q), its diagonal subrings from `subrings` (i, p) (default e_iAe_i)
    and its cross ideals from `cross` (i, p, q) (default the ideal of q).
    """

    sizes: Tuple[int, ...]
    idempotents: Optional[Tuple[Vector, ...]] = None
    basic: bool = False
    orientation: str = LOWER
    strict_case2: bool = True
    ideals: Dict[Tuple[int, int], str] = dataclass_field(default_factory=dict)
    subrings: Dict[Tuple[int, int], str] = dataclass_field(default_factory=dict)
    cross: Dict[Tuple[int, int, int], str] = dataclass_field(default_factory=dict)
    off_diagonal: Dict[Tuple[int, int, int, int], str] = dataclass_field(default_factory=dict)
    chain: Dict[int, bool] = dataclass_field(default_factory=dict)


@dataclass
class TiledDecl:
    n: int
    ideals: Dict[Tuple[int, int], str] = dataclass_field(default_factory=dict)


@dataclass
class SpecOptions:
    depth: Optional[int] = None
    seed: Optional[int] = None
    budget: Optional[str] = None
    max_dim: Optional[int] = None

    def items(self) -> List[Tuple[str, str]]:
        out = []
        for key in ("depth", "seed", "budget", "max_dim"):
            value = getattr(self, key)
            if value is not None:
                out.append((key, str(value)))
        return out


# =============================================================================
# SPEC FILES
# =============================================================================

@dataclass
class SpecFile:
    """
    One parsed spec file: a base algebra, named subspaces and ring specs.

    `algebra` is always the built base algebra; when `quiver` is set it was
    built from the quiver and the quiver is what gets serialized.
    """

    name: str
    field: FieldSpec
    algebra: FdAlgebra
    quiver: Optional[QuiverSpec] = None
    subspaces: Dict[str, Subspace] = dataclass_field(default_factory=dict)
    lam: Optional[LambdaDecl] = None
    block: Optional[BlockDecl] = None
    tiled: Optional[TiledDecl] = None
    options: SpecOptions = dataclass_field(default_factory=SpecOptions)
    notes: List[str] = dataclass_field(default_factory=list)

    # -------------------------------------------------------------------------
    # Name resolution
    # -------------------------------------------------------------------------

    def has_subspace(self, name: str) -> bool:
        return (name in self.subspaces or name in BUILTIN_SUBSPACES
                or _RAD_POWER.match(name) is not None)

    def subspace(self, name: str) -> Subspace:
        A = self.algebra
        if name in self.subspaces:
            return self.subspaces[name]
        if name == "full":
            return Subspace.full(A.field, A.dim)
        if name == "zero":
            return Subspace.zero(A.field, A.dim)
        if name == "rad":
            return radical(A)
        match = _RAD_POWER.match(name)
        if match:
            return radical_power(A, int(match.group(1)))
        raise KeyError(name)

    # -------------------------------------------------------------------------
    # Ring specs
    # -------------------------------------------------------------------------

    def lambda_spec(self) -> LambdaSpec:
        if self.lam is None:
            raise LookupError(f"{self.name} has no lambda section")
        d = self.lam
        ideals = [self.subspace(d.ideals[j]) for j in range(2, d.n + 1)]
        subrings = [self.subspace(d.subrings.get(i, "full")) for i in range(2, d.n + 1)]
        cross = {(i, j): self.subspace(d.cross[(i, j)]) if (i, j) in d.cross else ideals[j - 2]
                 for i in range(3, d.n + 1) for j in range(2, i)}
        return LambdaSpec(self.algebra, d.n, tuple(subrings), tuple(ideals), cross,
                          d.chain, self.name)

    def idempotents(self) -> Idempotents:
        if self.block is not None and self.block.idempotents is not None:
            return Idempotents(self.block.idempotents)
        return Idempotents(self.algebra.frame)

    def block_spec(self) -> BlockExtensionSpec:
        if self.block is None:
            raise LookupError(f"{self.name} has no block section")
        d = self.block
        idems = self.idempotents()
        if d.basic:
            return basic_block_extension(self.algebra, idems, d.sizes, name=self.name)
        spec = BlockExtensionSpec(self.algebra, idems, d.sizes, (), {}, d.orientation,
                                  d.strict_case2, self.name)
        blocks = []
        for i, n_i in enumerate(d.sizes, start=1):
            corner = spec.block_algebra(i)
            ideals = tuple(self.subspace(d.ideals[(i, q)]) for q in range(2, n_i + 1))
            subrings = tuple(self.subspace(d.subrings[(i, p)]) if (i, p) in d.subrings else corner
                             for p in range(2, n_i + 1))
            cross = {(p, q): self.subspace(d.cross[(i, p, q)]) if (i, p, q) in d.cross
                     else ideals[q - 2]
                     for p in range(3, n_i + 1) for q in range(2, p)}
            blocks.append(DiagonalBlock(subrings, ideals, cross, d.chain.get(i, True)))
        off = {key: self.subspace(ref) for key, ref in d.off_diagonal.items()}
        return BlockExtensionSpec(self.algebra, idems, d.sizes, tuple(blocks), off,
                                  d.orientation, d.strict_case2, self.name)

    def tiled_spec(self) -> TiledTriangularSpec:
        if self.tiled is None:
            raise LookupError(f"{self.name} has no tiled section")
        d = self.tiled
        return TiledTriangularSpec(self.algebra, d.n,
                                   {key: self.subspace(ref) for key, ref in d.ideals.items()},
                                   self.name)

    def kinds(self) -> List[str]:
        return [k for k, v in (("lambda", self.lam), ("block", self.block),
                               ("tiled", self.tiled)) if v is not None]

    def summary(self) -> str:
        kinds = ", ".join(self.kinds()) or "no ring specs"
        return f"{self.name}: dim A = {self.algebra.dim} over {self.field} ({kinds})"


# =============================================================================
# SERIALIZATION
# =============================================================================

def _vec(field: FieldSpec, v: Sequence) -> str:
    return " ".join(field.format(c) for c in v)


def serialize(spec: SpecFile) -> str:
    """Canonical text of a spec file."""
    F = spec.field
    out = [f"format_version {FORMAT_VERSION}", f"name {spec.name}", f"field {F.descriptor}"]
    out += [f"note {n}" for n in spec.notes]
    if spec.quiver is not None:
        q = spec.quiver
        out.append("quiver")
        out += [f"  vertex {v}" for v in q.vertices]
        out += [f"  arrow {a.label} {a.source} {a.target}" for a in q.arrows]
        out += [f"  relation {r.strip()}" for r in q.relations]
        out.append(f"  bound {q.bound}")
        out.append("end")
    else:
        A = spec.algebra
        out.append("algebra")
        out.append(f"  dim {A.dim}")
        out.append("  labels " + " ".join(re.sub(r"\s+", "", lab) for lab in A.labels))
        out.append(f"  unit {_vec(F, A.unit)}")
        out += [f"  mult {i} {j} {k} {F.format(c)}" for i, j, k, c in A.triples()]
        out += [f"  frame {_vec(F, e)}" for e in A.frame]
        out.append("end")
    for name, U in spec.subspaces.items():
        out.append(f"subspace {name}")
        out += [f"  vector {_vec(F, r)}" for r in U.rows]
        out.append("end")
    if spec.lam is not None:
        d = spec.lam
        out += ["lambda", f"  n {d.n}"]
        out += [f"  ideal {j} {ref}" for j, ref in sorted(d.ideals.items())]
        out += [f"  subring {i} {ref}" for i, ref in sorted(d.subrings.items())]
        out += [f"  cross {i} {j} {ref}" for (i, j), ref in sorted(d.cross.items())]
        if not d.chain:
            out.append("  chain false")
        out.append("end")
    if spec.block is not None:
        d = spec.block
        out += ["block", "  sizes " + " ".join(str(s) for s in d.sizes)]
        if d.idempotents is not None:
            out += [f"  idempotent {_vec(F, e)}" for e in d.idempotents]
        if d.basic:
            out.append("  basic")
        else:
            out.append(f"  orientation {d.orientation}")
            if not d.strict_case2:
                out.append("  strict_case2 false")
            out += [f"  ideal {i} {q} {ref}" for (i, q), ref in sorted(d.ideals.items())]
            out += [f"  subring {i} {p} {ref}" for (i, p), ref in sorted(d.subrings.items())]
            out += [f"  cross {i} {p} {q} {ref}" for (i, p, q), ref in sorted(d.cross.items())]
            out += [f"  offdiag {' '.join(map(str, key))} {ref}"
                    for key, ref in sorted(d.off_diagonal.items())]
            out += [f"  chain {i} false" for i, flag in sorted(d.chain.items()) if not flag]
        out.append("end")
    if spec.tiled is not None:
        d = spec.tiled
        out += ["tiled", f"  n {d.n}"]
        out += [f"  ideal {i} {j} {ref}" for (i, j), ref in sorted(d.ideals.items())]
        out.append("end")
    out += [f"option {key} {value}" for key, value in spec.options.items()]
    return "\n".join(out) + "\n"


# =============================================================================
# PARSING
# =============================================================================

@dataclass
class _Line:
    number: int
    tokens: List[Tuple[str, int]]
    text: str

    @property
    def keyword(self) -> str:
        return self.tokens[0][0]

    def rest(self) -> str:
        """Everything after the keyword, verbatim."""
        return self.text[self.tokens[0][1] - 1 + len(self.keyword):].strip()

    def error(self, message: str, token: int = 0) -> ParseError:
        column = self.tokens[token][1] if token < len(self.tokens) else len(self.text) + 1
        return ParseError(message, self.number, column)


def _lex(text: str) -> List[_Line]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", body)]
        if tokens:
            lines.append(_Line(number, tokens, body))
    return lines


class _Parser:
    """Single pass over the lexed lines; sections are parsed by their own methods."""

    def __init__(self, text: str, field: Optional[FieldSpec], max_dim: int):
        self.lines = _lex(text)
        self.pos = 0
        self.field_override = field
        self.field: Optional[FieldSpec] = field
        self.max_dim = max_dim
        self.name = ""
        self.notes: List[str] = []
        self.algebra: Optional[FdAlgebra] = None
        self.quiver: Optional[QuiverSpec] = None
        self.raw_subspaces: List[Tuple[_Line, str, List[Tuple[_Line, Vector]]]] = []
        self.lam: Optional[Tuple[_Line, LambdaDecl]] = None
        self.block: Optional[Tuple[_Line, BlockDecl]] = None
        self.tiled: Optional[Tuple[_Line, TiledDecl]] = None
        self.options = SpecOptions()
        self.references: List[Tuple[_Line, int, str]] = []

    # -------------------------------------------------------------------------
    # Token helpers
    # -------------------------------------------------------------------------

    def _int(self, line: _Line, k: int, low: int = 0) -> int:
        if k >= len(line.tokens):
            raise line.error(f"'{line.keyword}' needs more arguments", k)
        text = line.tokens[k][0]
        try:
            value = int(text)
        except ValueError:
            raise line.error(f"expected an integer, got {text!r}", k) from None
        if value < low:
            raise line.error(f"{value} is below the minimum {low}", k)
        return value

    def _scalar(self, line: _Line, k: int):
        text = line.tokens[k][0]
        try:
            return self.field.parse(text)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise line.error(f"bad scalar {text!r}: {exc}", k) from None

    def _vector(self, line: _Line, start: int = 1, length: Optional[int] = None) -> Vector:
        values = tuple(self._scalar(line, k) for k in range(start, len(line.tokens)))
        if length is not None and len(values) != length:
            raise line.error(f"expected {length} coordinates, got {len(values)}", start)
        return values

    def _arity(self, line: _Line, count: int) -> None:
        if len(line.tokens) != count:
            raise line.error(f"'{line.keyword}' takes {count - 1} argument(s)",
                             count if len(line.tokens) > count else 0)

    def _bool(self, line: _Line, k: int) -> bool:
        text = line.tokens[k][0] if k < len(line.tokens) else ""
        if text not in ("true", "false"):
            raise line.error(f"expected true or false, got {text!r}", k)
        return text == "true"

    def _ref(self, line: _Line, k: int) -> str:
        if k >= len(line.tokens):
            raise line.error("missing subspace name", k)
        self.references.append((line, k, line.tokens[k][0]))
        return line.tokens[k][0]

    def _section(self) -> List[_Line]:
        opener = self.lines[self.pos]
        body = []
        self.pos += 1
        while self.pos < len(self.lines):
            line = self.lines[self.pos]
            self.pos += 1
            if line.keyword == "end":
                self._arity(line, 1)
                return body
            body.append(line)
        raise opener.error(f"section '{opener.keyword}' is never closed by 'end'")

    # -------------------------------------------------------------------------
    # Top level
    # -------------------------------------------------------------------------

    def parse(self) -> SpecFile:
        if not self.lines:
            raise ParseError("empty spec file", 1)
        first = self.lines[0]
        if first.keyword != "format_version":
            raise first.error("the first statement must be 'format_version'")
        self._arity(first, 2)
        if self._int(first, 1) != FORMAT_VERSION:
            raise first.error(f"unsupported format_version (this tool reads {FORMAT_VERSION})", 1)
        self.pos = 1
        base_line = None
        while self.pos < len(self.lines):
            line = self.lines[self.pos]
            kw = line.keyword
            if kw == "name":
                self._arity(line, 2)
                self.name = line.tokens[1][0]
                self.pos += 1
            elif kw == "field":
                self._arity(line, 2)
                if base_line is not None:
                    raise line.error("'field' must come before the algebra or quiver section")
                if self.field_override is None:
                    try:
                        self.field = FieldSpec.from_descriptor(line.tokens[1][0])
                    except ValueError as exc:
                        raise line.error(str(exc), 1) from None
                self.pos += 1
            elif kw == "note":
                self.notes.append(line.rest())
                self.pos += 1
            elif kw in ("algebra", "quiver"):
                if base_line is not None:
                    raise line.error("only one algebra or quiver section is allowed")
                base_line = line
                self._arity(line, 1)
                self.field = self.field or RATIONAL_FIELD
                body = self._section()
                if kw == "algebra":
                    self._algebra(line, body)
                else:
                    self._quiver(line, body)
            elif kw == "subspace":
                self._arity(line, 2)
                name = line.tokens[1][0]
                if not _NAME.match(name) or name in BUILTIN_SUBSPACES or _RAD_POWER.match(name):
                    raise line.error(f"{name!r} cannot name a subspace", 1)
                if any(n == name for _, n, _ in self.raw_subspaces):
                    raise line.error(f"subspace {name!r} is defined twice", 1)
                body = self._section()
                vectors = []
                for b in body:
                    if b.keyword != "vector":
                        raise b.error(f"unexpected {b.keyword!r} in a subspace section")
                    vectors.append((b, None))
                self.raw_subspaces.append((line, name, vectors))
            elif kw in ("lambda", "block", "tiled"):
                if getattr(self, "lam" if kw == "lambda" else kw) is not None:
                    raise line.error(f"only one {kw} section is allowed")
                self._arity(line, 1)
                body = self._section()
                parsed = getattr(self, f"_{kw}")(line, body)
                setattr(self, "lam" if kw == "lambda" else kw, (line, parsed))
            elif kw == "option":
                self._option(line)
                self.pos += 1
            else:
                raise line.error(f"unknown statement {kw!r}")
        if self.algebra is None:
            raise ParseError("no algebra or quiver section", self.lines[-1].number)
        return self._finish()

    def _finish(self) -> SpecFile:
        A = self.algebra
        subspaces: Dict[str, Subspace] = {}
        for line, name, vectors in self.raw_subspaces:
            rows = [self._vector(b, 1, A.dim) for b, _ in vectors]
            subspaces[name] = Subspace.span(A.field, A.dim, rows)
        spec = SpecFile(self.name or "spec", self.field, A, self.quiver, subspaces,
                        self.lam[1] if self.lam else None,
                        self.block[1] if self.block else None,
                        self.tiled[1] if self.tiled else None,
                        self.options, self.notes)
        for line, k, ref in self.references:
            if not spec.has_subspace(ref):
                raise line.error(f"subspace {ref!r} is not defined", k)
        if self.lam:
            line, d = self.lam
            missing = [j for j in range(2, d.n + 1) if j not in d.ideals]
            if missing:
                raise line.error(f"lambda section has no ideal for column {missing[0]}")
        if self.block:
            line, d = self.block
            if d.idempotents is not None:
                for e in d.idempotents:
                    if len(e) != A.dim:
                        raise line.error(f"idempotent of length {len(e)} in dimension {A.dim}")
            count = len(d.idempotents) if d.idempotents is not None else len(A.frame)
            if count != len(d.sizes):
                raise line.error(f"{len(d.sizes)} sizes for {count} idempotents")
            if not d.basic:
                for i, n_i in enumerate(d.sizes, start=1):
                    for q in range(2, n_i + 1):
                        if (i, q) not in d.ideals:
                            raise line.error(f"block {i} has no ideal for column {q}")
        return spec

    # -------------------------------------------------------------------------
    # Sections
    # -------------------------------------------------------------------------

    def _algebra(self, opener: _Line, body: List[_Line]) -> None:
        F = self.field
        dim = None
        labels: Tuple[str, ...] = ()
        unit = None
        triples = []
        frame = []
        for line in body:
            kw = line.keyword
            if kw == "dim":
                self._arity(line, 2)
                dim = self._int(line, 1, low=1)
            elif dim is None:
                raise line.error("'dim' must come first in an algebra section")
            elif kw == "labels":
                labels = tuple(t for t, _ in line.tokens[1:])
                if len(labels) != dim:
                    raise line.error(f"{len(labels)} labels for dimension {dim}", 1)
            elif kw == "unit":
                unit = self._vector(line, 1, dim)
            elif kw == "mult":
                self._arity(line, 5)
                i, j, k = (self._int(line, t) for t in (1, 2, 3))
                for t, index in zip((1, 2, 3), (i, j, k)):
                    if index >= dim:
                        raise line.error(f"basis index {index} out of range 0..{dim - 1}", t)
                triples.append((i, j, k, self._scalar(line, 4)))
            elif kw == "frame":
                frame.append(self._vector(line, 1, dim))
            else:
                raise line.error(f"unexpected {kw!r} in an algebra section")
        if dim is None or unit is None:
            raise opener.error("an algebra section needs 'dim' and 'unit'")
        try:
            self.algebra = FdAlgebra.from_triples(F, dim, triples, unit, labels=labels,
                                                  frame=tuple(frame), name=self.name)
        except AlgebraError as exc:
            raise opener.error(str(exc)) from None

    def _quiver(self, opener: _Line, body: List[_Line]) -> None:
        vertices, arrows, relations = [], [], []
        bound = None
        for line in body:
            kw = line.keyword
            if kw == "vertex":
                self._arity(line, 2)
                vertices.append(line.tokens[1][0])
            elif kw == "arrow":
                self._arity(line, 4)
                label, source, target = (t for t, _ in line.tokens[1:])
                for k, v in ((2, source), (3, target)):
                    if v not in vertices:
                        raise line.error(f"vertex {v!r} is not declared", k)
                arrows.append(Arrow(label, source, target))
            elif kw == "relation":
                if len(line.tokens) < 2:
                    raise line.error("empty relation")
                relations.append(line.rest())
            elif kw == "bound":
                self._arity(line, 2)
                bound = self._int(line, 1, low=1)
            else:
                raise line.error(f"unexpected {kw!r} in a quiver section")
        if bound is None:
            raise opener.error("a quiver section needs a 'bound'")
        self.quiver = QuiverSpec(tuple(vertices), tuple(arrows), tuple(relations), bound,
                                 self.name)
        try:
            self.algebra, _ = build_path_algebra(self.quiver, self.field, self.max_dim)
        except AlgebraError as exc:
            raise opener.error(str(exc)) from None

    def _lambda(self, opener: _Line, body: List[_Line]) -> LambdaDecl:
        n = None
        decl = LambdaDecl(0)
        for line in body:
            kw = line.keyword
            if kw == "n":
                self._arity(line, 2)
                n = self._int(line, 1, low=2)
                decl.n = n
            elif n is None:
                raise line.error("'n' must come first in a lambda section")
            elif kw == "ideal":
                self._arity(line, 3)
                j = self._index(line, 1, 2, n)
                decl.ideals[j] = self._ref(line, 2)
            elif kw == "subring":
                self._arity(line, 3)
                i = self._index(line, 1, 2, n)
                decl.subrings[i] = self._ref(line, 2)
            elif kw == "cross":
                self._arity(line, 4)
                i = self._index(line, 1, 3, n)
                j = self._index(line, 2, 2, i - 1)
                decl.cross[(i, j)] = self._ref(line, 3)
            elif kw == "chain":
                self._arity(line, 2)
                decl.chain = self._bool(line, 1)
            else:
                raise line.error(f"unexpected {kw!r} in a lambda section")
        if n is None:
            raise opener.error("a lambda section needs 'n'")
        return decl

    def _block(self, opener: _Line, body: List[_Line]) -> BlockDecl:
        decl: Optional[BlockDecl] = None
        idempotents: List[Vector] = []
        for line in body:
            kw = line.keyword
            if kw == "sizes":
                if len(line.tokens) < 2:
                    raise line.error("'sizes' needs at least one block size")
                decl = BlockDecl(tuple(self._int(line, k, low=1)
                                       for k in range(1, len(line.tokens))))
                continue
            if decl is None:
                raise line.error("'sizes' must come first in a block section")
            sizes = decl.sizes
            if kw == "idempotent":
                idempotents.append(self._vector(line, 1, self.algebra.dim))
            elif kw == "basic":
                self._arity(line, 1)
                decl.basic = True
                decl.orientation = UPPER
            elif kw == "orientation":
                self._arity(line, 2)
                value = line.tokens[1][0]
                if value not in (LOWER, UPPER):
                    raise line.error(f"orientation is '{LOWER}' or '{UPPER}'", 1)
                decl.orientation = value
            elif kw == "strict_case2":
                self._arity(line, 2)
                decl.strict_case2 = self._bool(line, 1)
            elif kw == "ideal":
                self._arity(line, 4)
                i = self._index(line, 1, 1, len(sizes))
                decl.ideals[(i, self._index(line, 2, 2, sizes[i - 1]))] = self._ref(line, 3)
            elif kw == "subring":
                self._arity(line, 4)
                i = self._index(line, 1, 1, len(sizes))
                decl.subrings[(i, self._index(line, 2, 2, sizes[i - 1]))] = self._ref(line, 3)
            elif kw == "cross":
                self._arity(line, 5)
                i = self._index(line, 1, 1, len(sizes))
                p = self._index(line, 2, 3, sizes[i - 1])
                decl.cross[(i, p, self._index(line, 3, 2, p - 1))] = self._ref(line, 4)
            elif kw == "offdiag":
                self._arity(line, 6)
                i = self._index(line, 1, 1, len(sizes))
                p = self._index(line, 2, 1, sizes[i - 1])
                s = self._index(line, 3, 1, len(sizes))
                if s == i:
                    raise line.error("off-diagonal entries join different blocks", 3)
                q = self._index(line, 4, 1, sizes[s - 1])
                decl.off_diagonal[(i, p, s, q)] = self._ref(line, 5)
            elif kw == "chain":
                self._arity(line, 3)
                decl.chain[self._index(line, 1, 1, len(sizes))] = self._bool(line, 2)
            else:
                raise line.error(f"unexpected {kw!r} in a block section")
        if decl is None:
            raise opener.error("a block section needs 'sizes'")
        if idempotents:
            decl.idempotents = tuple(idempotents)
        return decl

    def _tiled(self, opener: _Line, body: List[_Line]) -> TiledDecl:
        decl: Optional[TiledDecl] = None
        for line in body:
            kw = line.keyword
            if kw == "n":
                self._arity(line, 2)
                decl = TiledDecl(self._int(line, 1, low=1))
            elif decl is None:
                raise line.error("'n' must come first in a tiled section")
            elif kw == "ideal":
                self._arity(line, 4)
                i = self._index(line, 1, 1, decl.n - 1)
                j = self._index(line, 2, i + 1, decl.n)
                decl.ideals[(i, j)] = self._ref(line, 3)
            else:
                raise line.error(f"unexpected {kw!r} in a tiled section")
        if decl is None:
            raise opener.error("a tiled section needs 'n'")
        missing = [(i, j) for i in range(1, decl.n + 1) for j in range(i + 1, decl.n + 1)
                   if (i, j) not in decl.ideals]
        if missing:
            raise opener.error(f"tiled section has no ideal for entry {missing[0]}")
        return decl

    def _index(self, line: _Line, k: int, low: int, high: int) -> int:
        value = self._int(line, k)
        if not low <= value <= high:
            raise line.error(f"index {value} out of range {low}..{high}", k)
        return value

    def _option(self, line: _Line) -> None:
        self._arity(line, 3)
        key, value = line.tokens[1][0], line.tokens[2][0]
        if key in ("depth", "seed", "max_dim"):
            setattr(self.options, key, self._int(line, 2, low=1 if key == "max_dim" else 0))
        elif key == "budget":
            try:
                Budget.parse(value)
            except ValueError as exc:
                raise line.error(str(exc), 2) from None
            self.options.budget = value
        else:
            raise line.error(f"unknown option {key!r}", 1)


def parse(text: str, field: Optional[FieldSpec] = None,
          max_dim: int = MAX_BUILT_DIM) -> SpecFile:
    """
    Read a spec file.

    Args:
        text: the file contents
        field: when given, every literal is re-read over this field and the
            file's own `field` line is ignored
        max_dim: cap for algebras built from a quiver section

    Raises:
        ParseError: malformed input, with line and column
    """
    spec = _Parser(text, field, max_dim).parse()
    logger.debug("parsed %s", spec.summary())
    return spec


def load(path: str, field: Optional[FieldSpec] = None,
         max_dim: int = MAX_BUILT_DIM) -> SpecFile:
    with open(path, encoding="utf-8") as handle:
        return parse(handle.read(), field, max_dim)
