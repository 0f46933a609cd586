#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab — Tilting Lab

The objects behind the derived equivalence of Λ and Σ, built and checked
one by one:

- the sequences 0 → Λe_i → Λe_1 → L_i → 0 (2 ≤ i ≤ n) and the tilting
  module T = L_2 ⊕ ... ⊕ L_n ⊕ Λe_1
- End_Λ(T) as an FdAlgebra whose basis is the union of Hom(T_a, T_b) bases
- the map φ: Σ → End_Λ(T) assembled from right multiplications, with a
  certificate that it is a ring isomorphism
- D-split sequence checks, the tilting conditions and derived invariants

Maps are composed left to right (f·g is "f then g"), so End_Λ(T) has
Hom(T_a, T_b) in its (a, b) corner exactly like Σ has its (a, b) entry.
"""

import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .algebra import FdAlgebra, ValidationReport, center
from .constants import DEFAULT_DEPTH, DEFAULT_SEED
from .errors import InclusionError
from .linalg import Vector, matrix_from_columns, matrix_rank, vec_add
from .modules import (DirectSum, LeftModule, ModuleMap, cokernel, contains_map, direct_sum,
                      hom_space, induced_map, projective_module, regular_module, restrict,
                      right_multiplication, span_rank)
from .resolutions import ext_dim, proj_dim
from .rings import (LOWER, BlockExtensionSpec, BuiltRing, LambdaSpec, build_full_matrix,
                    build_lambda, build_sigma, embed)
from .semisimple import cartan_determinant, cartan_matrix, primitive_decomposition

logger = logging.getLogger(__name__)


# =============================================================================
# THE TILTING MODULE
# =============================================================================

@dataclass(frozen=True, eq=False)
class DefiningSequence:
    """0 → P_i → P_1 → L → 0 with its maps."""

    label: str
    projective: LeftModule
    top_projective: LeftModule
    inclusion: ModuleMap
    projection: ModuleMap

    @property
    def cokernel(self) -> LeftModule:
        return self.projection.target

    def check(self) -> ValidationReport:
        report = ValidationReport(f"sequence {self.label}")
        lam, pi = self.inclusion, self.projection
        report.check(lam.is_injective, "injective", f"inclusion into {self.label} is not injective")
        report.check(pi.is_surjective, "surjective", f"projection onto {self.label} is not onto")
        report.check(lam.then(pi).is_zero, "composite", "inclusion then projection is not zero")
        report.check(lam.rank + pi.rank == self.top_projective.dim, "exactness",
                     f"the sequence for {self.label} is not exact in the middle")
        return report


@dataclass(frozen=True, eq=False)
class TiltingBundle:
    """
    Λ with the modules L_2..L_n and T = L_2 ⊕ ... ⊕ L_n ⊕ Λe_1.

    Attributes:
        ring: the built Λ
        sequences: the defining sequence of each L_i, in order i = 2..n
        summands: (L_2, ..., L_n, Λe_1), fixed order
        T: the direct sum of the summands
    """

    ring: BuiltRing
    sequences: Tuple[DefiningSequence, ...]
    summands: Tuple[LeftModule, ...]
    T: DirectSum
    spec: Optional[LambdaSpec] = None

    @property
    def Ls(self) -> Tuple[LeftModule, ...]:
        return tuple(s.cokernel for s in self.sequences)

    @property
    def top_projective(self) -> LeftModule:
        return self.summands[-1]

    def summary(self) -> str:
        dims = [M.dim for M in self.summands]
        return f"T over {self.ring.algebra.name}: summand dims {dims}, dim T = {self.T.module.dim}"


def _defining_sequence(R: BuiltRing, a: int, top: int, x: Sequence, label: str) -> DefiningSequence:
    A = R.algebra
    P_a = projective_module(R, a, f"P{R.position_names[a]}")
    P_top = projective_module(R, top, f"P{R.position_names[top]}")
    u = R.element(a, top, x)
    lam = right_multiplication(A, R.idems[a], R.idems[top], u, P_a, P_top)
    if not lam.is_injective:
        raise InclusionError(f"Λe_{R.position_names[a]} does not embed into the first column")
    L, pi = cokernel(lam, label)
    return DefiningSequence(label, P_a, P_top, lam, pi)


def cokernel_modules(ring: BuiltRing, spec: Optional[LambdaSpec] = None) -> TiltingBundle:
    """
    L_i = coker(Λe_i ↪ Λe_1) for 2 ≤ i ≤ n, where the inclusion is right
    multiplication by the matrix unit with 1 at (i, 1).

    Raises:
        InclusionError: an inclusion is not injective
    """
    base = ring.base
    sequences = tuple(_defining_sequence(ring, a, 0, base.unit, f"L{a + 1}")
                      for a in range(1, ring.size))
    for s in sequences:
        report = s.check()
        if not report.ok:
            raise InclusionError(report.summary())
    P1 = projective_module(ring, 0, f"P{ring.position_names[0]}")
    summands = tuple(s.cokernel for s in sequences) + (P1,)
    T = direct_sum(summands, "T")
    bundle = TiltingBundle(ring, sequences, summands, T, spec)
    logger.debug(bundle.summary())
    return bundle


def block_cokernel_modules(P: BuiltRing, spec: BlockExtensionSpec) -> Dict[Tuple[int, int], DefiningSequence]:
    """
    L_(i,p) = coker(P·e_(i,p) ↪ P·e_(i,1)) for every block i and row p ≥ 2 of a
    lower-orientation block extension.
    """
    if spec.orientation != LOWER:
        raise ValueError("block cokernels need the lower staircase orientation")
    positions = spec.positions()
    index = {pos: k for k, pos in enumerate(positions)}
    out = {}
    for (i, p) in positions:
        if p == 1:
            continue
        e = spec.idems[i - 1]
        out[(i, p)] = _defining_sequence(P, index[(i, p)], index[(i, 1)], e, f"L{i}.{p}")
    return out


# =============================================================================
# ADD-MEMBERSHIP AND D-SPLIT SEQUENCES
# =============================================================================

def in_add(M: LeftModule, generators: Sequence[LeftModule]) -> bool:
    """
    M ∈ add(D) iff id_M lies in the span of the composites M → D_a → M over
    the generators D_a of D.
    """
    if M.dim == 0:
        return True
    composites = []
    for D in generators:
        for g in hom_space(M, D):
            for h in hom_space(D, M):
                composites.append(g.then(h))
    return bool(composites) and contains_map(composites, ModuleMap.identity(M))


@dataclass(frozen=True, eq=False)
class DSplitInstance:
    """X --f--> M --g--> Y together with generators of D."""

    X: LeftModule
    M: LeftModule
    Y: LeftModule
    f: ModuleMap
    g: ModuleMap
    category_D: Tuple[LeftModule, ...]
    label: str = ""


def check_D_split(inst: DSplitInstance) -> ValidationReport:
    """
    M ∈ D, f a left D-approximation, g a right D-approximation, f = ker g and
    g = coker f, all as rank identities.
    """
    report = ValidationReport(f"D-split {inst.label}".strip())
    f, g = inst.f, inst.g
    report.check(in_add(inst.M, inst.category_D), "add", "the middle term is not in D")
    for k, D in enumerate(inst.category_D):
        restricted = [f.then(h) for h in hom_space(inst.M, D)]
        report.check(span_rank(restricted) == hom_space(inst.X, D).dim, "left-approximation",
                     f"Hom(M, D_{k}) → Hom(X, D_{k}) is not onto", (k,))
        pushed = [h.then(g) for h in hom_space(D, inst.M)]
        report.check(span_rank(pushed) == hom_space(D, inst.Y).dim, "right-approximation",
                     f"Hom(D_{k}, M) → Hom(D_{k}, Y) is not onto", (k,))
    report.check(f.then(g).is_zero, "composite", "f then g is not zero")
    middle = f.rank + g.rank == inst.M.dim
    report.check(f.is_injective and middle, "kernel", "f is not a kernel of g")
    report.check(g.is_surjective and middle, "cokernel", "g is not a cokernel of f")
    return report


def gamma_split_instance(ring: BuiltRing) -> DSplitInstance:
    """0 → Λ → Γ → Γ/Λ → 0 over Λ with D = add(Λe_1), Γ = M_n(A) restricted to Λ."""
    Lam = ring.algebra
    gamma = build_full_matrix(ring.base, ring.size)
    iota = embed(ring, gamma)
    Gamma = restrict(regular_module(gamma.algebra), iota, Lam, "Gamma")
    Lam_reg = regular_module(Lam)
    lam = ModuleMap(Lam_reg, Gamma, iota, "inclusion")
    L, pi = cokernel(lam, "L")
    P1 = projective_module(ring, 0, f"P{ring.position_names[0]}")
    return DSplitInstance(Lam_reg, Gamma, L, lam, pi, (P1,),
                          "Lambda -> Gamma -> L")


def sequence_split_instance(ring: BuiltRing, seq: DefiningSequence) -> DSplitInstance:
    return DSplitInstance(seq.projective, seq.top_projective, seq.cokernel, seq.inclusion,
                          seq.projection, (seq.top_projective,), seq.label)


# =============================================================================
# ENDOMORPHISM ALGEBRAS
# =============================================================================

@dataclass(frozen=True, eq=False)
class EndomorphismAlgebra:
    """
    End(⊕T_a) with basis the union of Hom(T_a, T_b) bases, row-major in (a, b).

    Attributes:
        algebra: the algebra, product f·g = "f then g"
        summands: T_1..T_r
        homs: (a, b) -> HomSpace(T_a, T_b)
        offsets: (a, b) -> index of the first basis vector of that corner
    """

    algebra: FdAlgebra
    summands: Tuple[LeftModule, ...]
    homs: Dict[Tuple[int, int], object]
    offsets: Dict[Tuple[int, int], int]

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def corner_dims(self) -> List[List[int]]:
        r = len(self.summands)
        return [[self.homs[(a, b)].dim for b in range(r)] for a in range(r)]

    def element(self, f: ModuleMap, a: int, b: int) -> Vector:
        """Coordinates of f ∈ Hom(T_a, T_b)."""
        out = list(self.algebra.zero_vector)
        start = self.offsets[(a, b)]
        for k, c in enumerate(self.homs[(a, b)].coordinates(f)):
            out[start + k] = c
        return tuple(out)

    def map_of(self, v: Sequence, a: int, b: int) -> ModuleMap:
        H = self.homs[(a, b)]
        start = self.offsets[(a, b)]
        return H.combination(v[start:start + H.dim])


def endomorphism_algebra(summands: Sequence[LeftModule], name: str = "End(T)") -> EndomorphismAlgebra:
    """End of the direct sum, assembled from the Hom spaces between summands."""
    if isinstance(summands, TiltingBundle):
        summands = summands.summands
    summands = tuple(summands)
    r = len(summands)
    homs, offsets, basis = {}, {}, []
    labels = []
    for a in range(r):
        for b in range(r):
            H = hom_space(summands[a], summands[b])
            homs[(a, b)] = H
            offsets[(a, b)] = len(basis)
            for k, f in enumerate(H):
                basis.append((a, b, f))
                labels.append(f"h{a + 1}{b + 1}_{k}")
    field = summands[0].field
    dim = len(basis)

    triples = []
    for x, (a, b, f) in enumerate(basis):
        for y, (c, d, g) in enumerate(basis):
            if b != c:
                continue
            coords = homs[(a, d)].coordinates(f.then(g))
            start = offsets[(a, d)]
            triples.extend((x, y, start + k, c_) for k, c_ in enumerate(coords) if c_)
    frame = []
    unit = [field.zero] * dim
    for a in range(r):
        e = [field.zero] * dim
        start = offsets[(a, a)]
        for k, c in enumerate(homs[(a, a)].coordinates(ModuleMap.identity(summands[a]))):
            e[start + k] = c
        frame.append(tuple(e))
        unit = list(vec_add(unit, e))
    algebra = FdAlgebra.from_triples(field, dim, triples, unit, labels=tuple(labels),
                                     frame=tuple(frame), name=name)
    logger.debug("%s: dim %d, corners %s", name, dim,
                 [[homs[(a, b)].dim for b in range(r)] for a in range(r)])
    return EndomorphismAlgebra(algebra, summands, homs, offsets)


# =============================================================================
# THE ISOMORPHISM Σ → End(T)
# =============================================================================

@dataclass
class IsoCertificate:
    """
    φ as a dim End(T) × dim Σ matrix with the four ring-isomorphism checks.

    witness holds the first failing basis pair (k, l) of the multiplicativity
    check.
    """

    phi: object
    additive: bool = False
    multiplicative: bool = False
    unital: bool = False
    bijective: bool = False
    witness: Optional[Tuple[int, int]] = None
    rank: int = 0
    notes: List[str] = dc_field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.additive and self.multiplicative and self.unital and self.bijective

    def to_dict(self) -> Dict:
        return {
            "valid": self.valid,
            "additive": self.additive,
            "multiplicative": self.multiplicative,
            "unital": self.unital,
            "bijective": self.bijective,
            "rank": self.rank,
            "witness": list(self.witness) if self.witness else None,
            "notes": list(self.notes),
        }

    def summary(self) -> str:
        flags = ", ".join(f"{k}={v}" for k, v in self.to_dict().items()
                          if k in ("additive", "multiplicative", "unital", "bijective"))
        return f"phi certificate: {'valid' if self.valid else 'INVALID'} ({flags})"


def _phi_map(bundle: TiltingBundle, a: int, b: int, x: Sequence) -> ModuleMap:
    """The image of x ∈ A placed at Σ position (a, b)."""
    ring = bundle.ring
    r = len(bundle.summands)
    P1 = bundle.top_projective
    mu = right_multiplication(ring.algebra, ring.idems[0], ring.idems[0],
                              ring.element(0, 0, x), P1, P1)
    if a == r - 1 and b == r - 1:
        return mu
    if a == r - 1:
        return mu.then(bundle.sequences[b].projection)
    if b == r - 1:
        return ModuleMap.zero(bundle.summands[a], P1)
    return induced_map(mu, bundle.sequences[a].projection, bundle.sequences[b].projection)


def construct_phi(spec: LambdaSpec, bundle: TiltingBundle, end: EndomorphismAlgebra,
                  sigma: Optional[BuiltRing] = None, seed: int = DEFAULT_SEED) -> IsoCertificate:
    """
    φ on Σ's basis: right multiplication by the (1,1) matrix unit of each entry
    representative, descended to the cokernels for the L corners.
    """
    sigma = sigma if sigma is not None else build_sigma(spec)
    S = sigma.algebra
    E = end.algebra
    field = S.field
    r = sigma.size
    columns_: List[Vector] = [None] * S.dim
    cert = IsoCertificate(phi=None)
    well_defined = True
    for (a, b), entry in sigma.entry_map.items():
        start = sigma.offsets[(a, b)]
        for k, x in enumerate(entry.representatives()):
            try:
                f = _phi_map(bundle, a, b, x)
            except ValueError:
                well_defined = False
                cert.notes.append(f"no induced map at ({a + 1},{b + 1})")
                f = ModuleMap.zero(bundle.summands[a], bundle.summands[b])
            if not contains_map(list(end.homs[(a, b)].basis), f) and not f.is_zero:
                well_defined = False
                cert.notes.append(f"image at ({a + 1},{b + 1}) is not a homomorphism")
            columns_[start + k] = end.element(f, a, b)
    phi = matrix_from_columns(columns_, E.dim, field)
    cert.phi = phi

    def image(v: Sequence) -> Vector:
        out = [field.zero] * E.dim
        for c, col in zip(v, columns_):
            if c:
                for i, y in enumerate(col):
                    if y:
                        out[i] += c * y
        return tuple(out)

    # linearity on a seeded random element of each entry, evaluated directly
    rng = np.random.default_rng(seed)
    additive = well_defined
    for (a, b), entry in sigma.entry_map.items():
        if entry.dim == 0 or not additive:
            continue
        coeffs = field.random_vector(rng, entry.dim)
        x = entry.lift(coeffs)
        direct = end.element(_phi_map(bundle, a, b, x), a, b)
        v = list(S.zero_vector)
        for k, c in enumerate(coeffs):
            v[sigma.offsets[(a, b)] + k] = c
        additive = direct == image(v)
    cert.additive = additive

    cert.multiplicative = True
    for k in range(S.dim):
        for l in range(S.dim):
            lhs = image(S.structure_constant(k, l))
            rhs = E.multiply(columns_[k], columns_[l])
            if lhs != rhs:
                cert.multiplicative = False
                cert.witness = (k, l)
                break
        if not cert.multiplicative:
            break
    cert.unital = image(S.unit) == tuple(E.unit)
    cert.rank = matrix_rank(phi, field) if S.dim and E.dim else 0
    cert.bijective = cert.rank == S.dim == E.dim
    level = logging.INFO if cert.valid else logging.WARNING
    logger.log(level, "%s: %s", spec.name or "Lambda", cert.summary())
    return cert


# =============================================================================
# TILTING CONDITIONS
# =============================================================================

def tilting_conditions(bundle: TiltingBundle, summands: Optional[Sequence[LeftModule]] = None,
                       depth: int = DEFAULT_DEPTH) -> ValidationReport:
    """
    pd ≤ 1 for every summand, Ext¹(T, T) = 0, and a two-term add(T)
    resolution of every Λe_i.
    """
    summands = tuple(summands) if summands is not None else bundle.summands
    report = ValidationReport(f"tilting conditions for {bundle.ring.algebra.name}")
    for a, M in enumerate(summands):
        pd = proj_dim(M, depth)
        report.check(pd.is_finite and (pd.value is None or pd.value <= 1), "pd",
                     f"pd({M.name or a}) = {pd}, expected <= 1", (a,))
    for a, M in enumerate(summands):
        for b, N in enumerate(summands):
            e = ext_dim(M, N, 1, depth)
            report.check(e == 0, "self-orthogonal",
                         f"Ext^1({M.name or a}, {N.name or b}) has dimension {e}", (a, b))
    P1 = bundle.top_projective
    report.check(in_add(P1, summands), "generation", "Λe_1 is not in add(T)", (1,))
    for i, seq in enumerate(bundle.sequences, start=2):
        exact = seq.check().ok
        report.check(exact and in_add(seq.cokernel, summands), "generation",
                     f"Λe_{i} has no two-term add(T) resolution", (i,))
    return report


# =============================================================================
# HOM LATTICES
# =============================================================================

@dataclass(frozen=True)
class HomLatticeEntry:
    i: int
    j: int
    computed: int
    predicted: int

    @property
    def ok(self) -> bool:
        return self.computed == self.predicted


def hom_lattice(bundle: TiltingBundle, spec: LambdaSpec) -> List[HomLatticeEntry]:
    """dim Hom(L_i, L_j) against dim e_iΛe_j − dim I_j for 2 ≤ i, j ≤ n."""
    out = []
    ring = bundle.ring
    for a, Li in enumerate(bundle.Ls):
        for b, Lj in enumerate(bundle.Ls):
            i, j = a + 2, b + 2
            corner_dim = ring.entry(i - 1, j - 1).dim
            ideal_dim = spec.ideal(j).dim
            out.append(HomLatticeEntry(i, j, hom_space(Li, Lj).dim, corner_dim - ideal_dim))
    return out


def hom_vanishing(bundle: TiltingBundle) -> ValidationReport:
    """Hom(L_i, Λe_1) = 0 and Hom(L_i, Λe_i) = 0 for 2 ≤ i ≤ n."""
    report = ValidationReport(f"Hom vanishing over {bundle.ring.algebra.name}")
    P1 = bundle.top_projective
    for i, seq in enumerate(bundle.sequences, start=2):
        d1 = hom_space(seq.cokernel, P1).dim
        report.check(d1 == 0, "hom-to-top", f"Hom(L_{i}, Λe_1) has dimension {d1}", (i, 1))
        di = hom_space(seq.cokernel, seq.projective).dim
        report.check(di == 0, "hom-to-own", f"Hom(L_{i}, Λe_{i}) has dimension {di}", (i, i))
    return report


def block_hom_vanishing(sequences: Dict[Tuple[int, int], DefiningSequence]) -> ValidationReport:
    """Hom(L_(p,i), L_(q,j)) = 0 for blocks p < q, and for p = q with i < j."""
    report = ValidationReport("block Hom vanishing")
    for (p, i), s in sorted(sequences.items()):
        for (q, j), t in sorted(sequences.items()):
            if p < q or (p == q and i < j):
                d = hom_space(s.cokernel, t.cokernel).dim
                report.check(d == 0, "hom-vanishing",
                             f"Hom(L{p}.{i}, L{q}.{j}) has dimension {d}", (p, i, q, j))
    return report


# =============================================================================
# DERIVED INVARIANTS
# =============================================================================

@dataclass
class InvariantReport:
    """Derived invariants of two algebras side by side."""

    left: Dict[str, int]
    right: Dict[str, int]

    @property
    def matches(self) -> Dict[str, bool]:
        return {k: self.left[k] == self.right[k] for k in self.left}

    @property
    def ok(self) -> bool:
        return all(self.matches.values())

    def to_dict(self) -> Dict:
        return {"left": dict(self.left), "right": dict(self.right),
                "matches": self.matches, "ok": self.ok}

    def summary(self) -> str:
        parts = [f"{k}: {self.left[k]} vs {self.right[k]}" for k in self.left]
        return ("invariants agree" if self.ok else "invariants differ") + " (" + "; ".join(parts) + ")"


def _invariants(A: FdAlgebra) -> Dict[str, int]:
    return {
        "simples": len(primitive_decomposition(A).classes),
        "abs_cartan_det": abs(cartan_determinant(cartan_matrix(A))),
        "center_dim": center(A).dim,
    }


def derived_invariant_report(R1: FdAlgebra, R2: FdAlgebra) -> InvariantReport:
    """Number of simples, |det Cartan| and dim center of both algebras."""
    report = InvariantReport(_invariants(R1), _invariants(R2))
    logger.info(report.summary())
    return report


# =============================================================================
# THE WHOLE PIPELINE
# =============================================================================

@dataclass
class TheoremReport:
    """Everything checked for one LambdaSpec."""

    name: str
    lambda_dim: int
    sigma_dim: int
    end_dim: int
    certificate: IsoCertificate
    tilting: ValidationReport
    lattice: List[HomLatticeEntry]
    vanishing: ValidationReport
    dsplit: ValidationReport
    star_sequences: List[ValidationReport]
    invariants: InvariantReport

    @property
    def ok(self) -> bool:
        return (self.certificate.valid and self.tilting.ok and self.dsplit.ok
                and all(e.ok for e in self.lattice)
                and self.vanishing.ok
                and all(r.ok for r in self.star_sequences)
                and self.invariants.ok)

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "dims": {"lambda": self.lambda_dim, "sigma": self.sigma_dim, "end_T": self.end_dim},
            "phi": self.certificate.to_dict(),
            "tilting": self.tilting.to_dict(),
            "hom_lattice": [{"i": e.i, "j": e.j, "computed": e.computed,
                             "predicted": e.predicted} for e in self.lattice],
            "hom_vanishing": self.vanishing.to_dict(),
            "dsplit": self.dsplit.to_dict(),
            "star_sequences": [r.to_dict() for r in self.star_sequences],
            "invariants": self.invariants.to_dict(),
        }

    def summary(self) -> str:
        return (f"{self.name}: {'verified' if self.ok else 'FAILED'} "
                f"(dim Λ {self.lambda_dim}, dim Σ {self.sigma_dim}, dim End T {self.end_dim})")


def verify_theorem(spec: LambdaSpec, depth: int = DEFAULT_DEPTH,
                   seed: int = DEFAULT_SEED) -> TheoremReport:
    """Build Λ, Σ, T and End(T) and run every check."""
    ring = build_lambda(spec)
    sigma = build_sigma(spec)
    bundle = cokernel_modules(ring, spec)
    end = endomorphism_algebra(bundle.summands)
    cert = construct_phi(spec, bundle, end, sigma, seed)
    tilting = tilting_conditions(bundle, depth=depth)
    lattice = hom_lattice(bundle, spec)
    vanishing = hom_vanishing(bundle)
    dsplit = check_D_split(gamma_split_instance(ring))
    stars = [check_D_split(sequence_split_instance(ring, s)) for s in bundle.sequences]
    invariants = derived_invariant_report(ring.algebra, sigma.algebra)
    report = TheoremReport(spec.name or "Lambda", ring.dim, sigma.dim, end.dim, cert, tilting,
                           lattice, vanishing, dsplit, stars, invariants)
    logger.info(report.summary())
    return report
