#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab — Resolutions Module

Projective covers, minimal projective resolutions, projective dimension and
Ext dimensions.

A resolution stops in one of three ways:
- finite:   some syzygy is projective (or zero); pd is exact
- infinite: a syzygy is isomorphic to an earlier one, witnessed by an explicit
            isomorphism; the resolution is periodic from there on
- cutoff:   the depth ran out; pd is only bounded below

Infinity is never claimed without a periodicity witness, so a non-periodic
infinite resolution reports a cutoff.
"""

import itertools
import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .algebra import FdAlgebra, ValidationReport
from .constants import DEFAULT_DEPTH, DEFAULT_SEED, ISO_GRID_BASIS, ISO_TRIALS, RANDOM_COEFF_BOUND
from .errors import DimensionMismatchError
from .linalg import Subspace, apply, columns, combine, matrix_from_columns, zero_matrix
from .modules import (DirectSum, LeftModule, ModuleMap, direct_sum, hom_space, image_subspace,
                      kernel, projective_basis, projective_module, radical_subspace, span_rank,
                      top_module)
from .semisimple import primitive_decomposition

logger = logging.getLogger(__name__)

EXACT = "exact"
AT_LEAST = "at_least"
INFINITE = "infinite"
ZERO = "zero"

FINITE = "finite"
PERIODIC = "infinite"
CUTOFF = "cutoff"


# =============================================================================
# PROJECTIVE DIMENSION VALUES
# =============================================================================

@dataclass(frozen=True)
class PdValue:
    """
    A projective dimension as far as it is known.

    exact(k), at_least(k) (depth cutoff), infinite (periodic witness) or
    zero (the zero module, pd = −∞).
    """

    tag: str
    value: Optional[int] = None

    @classmethod
    def exact(cls, k: int) -> "PdValue":
        return cls(EXACT, k)

    @classmethod
    def at_least(cls, k: int) -> "PdValue":
        return cls(AT_LEAST, k)

    @classmethod
    def infinite(cls) -> "PdValue":
        return cls(INFINITE)

    @classmethod
    def zero_module(cls) -> "PdValue":
        return cls(ZERO)

    @property
    def is_exact(self) -> bool:
        return self.tag in (EXACT, ZERO)

    @property
    def is_finite(self) -> bool:
        return self.tag in (EXACT, ZERO)

    @property
    def interval(self) -> Tuple[float, float]:
        """[lower, upper] with ±inf for the open ends."""
        if self.tag == EXACT:
            return float(self.value), float(self.value)
        if self.tag == AT_LEAST:
            return float(self.value), float("inf")
        if self.tag == INFINITE:
            return float("inf"), float("inf")
        return float("-inf"), float("-inf")

    def to_dict(self) -> Dict:
        if self.tag in (EXACT, AT_LEAST):
            return {"tag": self.tag, "value": self.value}
        return {"tag": self.tag, "value": "inf" if self.tag == INFINITE else "-inf"}

    def __str__(self) -> str:
        if self.tag == EXACT:
            return str(self.value)
        if self.tag == AT_LEAST:
            return f">= {self.value}"
        return "inf" if self.tag == INFINITE else "-inf"


# =============================================================================
# PROJECTIVE COVERS
# =============================================================================

@dataclass(frozen=True, eq=False)
class ProjectiveCover:
    """
    top(M) and a projective cover P ↠ M.

    Attributes:
        module: M
        top: M / rad·M
        projective: the direct sum of indecomposable projectives
        cover: the surjection P → M
        multiplicities: number of copies of A·f_t per isoclass t
    """

    module: LeftModule
    top: LeftModule
    projective: DirectSum
    cover: ModuleMap
    multiplicities: Tuple[int, ...]

    @property
    def is_isomorphism(self) -> bool:
        return self.cover.is_isomorphism


def top_and_cover(M: LeftModule) -> ProjectiveCover:
    """
    Projective cover of M.

    For each isoclass t, the generators are lifts of a basis of f_t·top(M),
    multiplied by f_t; the summand A·f_t maps by u ↦ u·v.

    Raises:
        NonSplitError: A/rad A is not split over the field
    """
    A = M.algebra
    field = M.field
    decomposition = primitive_decomposition(A)
    reps = decomposition.representatives
    rad_M = radical_subspace(M)
    kept = [c for c in range(M.dim) if c not in set(rad_M.pivots)]
    top, _ = top_module(M)

    summands: List[LeftModule] = []
    images: List[List[Tuple]] = []
    multiplicities: List[int] = []
    for t, f in enumerate(reps):
        f_top = top.matrix_of(f)
        W = Subspace.span(field, top.dim, columns(f_top, field)) if top.dim else Subspace.zero(field, 0)
        multiplicities.append(W.dim)
        basis = projective_basis(A, f)
        Pf = projective_module(A, f)
        for w in W.rows:
            lifted = [field.zero] * M.dim
            for k, c in enumerate(kept):
                lifted[c] = w[k]
            v = M.act(f, lifted)
            orbit = [apply(rho, v, field) for rho in M.action]
            summands.append(Pf)
            images.append([combine(u, orbit, M.dim, field) for u in basis.rows])
    if not summands:
        P = _zero_sum(A)
        cover = ModuleMap(P.module, M, zero_matrix(M.dim, 0, field), "cover")
    else:
        P = direct_sum(summands, "P")
        cols = [col for block in images for col in block]
        cover = ModuleMap(P.module, M, matrix_from_columns(cols, M.dim, field), "cover")
    logger.debug("cover of %s: top dim %d, multiplicities %s, P dim %d",
                 M.name or "M", top.dim, multiplicities, P.module.dim)
    return ProjectiveCover(M, top, P, cover, tuple(multiplicities))


def _zero_sum(A: FdAlgebra) -> DirectSum:
    field = A.field
    Z = LeftModule(A, 0, tuple(zero_matrix(0, 0, field) for _ in range(A.dim)), (), "0")
    return DirectSum(Z, (), (), (), ())


def is_projective(M: LeftModule) -> bool:
    return top_and_cover(M).cover.is_injective


# =============================================================================
# MINIMAL RESOLUTIONS
# =============================================================================

@dataclass(eq=False)
class MinimalResolution:
    """
    P_k ↠ Ω^k M ↪ P_{k-1} for k = 0, 1, ...

    Attributes:
        module: M = Ω⁰M
        covers: the projective covers of Ω^0, Ω^1, ...
        syzygies: Ω^0 M, Ω^1 M, ...
        inclusions: Ω^k M ↪ P_{k-1}, for k ≥ 1
        status: finite, infinite or cutoff
        pd: the projective dimension as far as determined
        period: (s, t) with Ω^t ≅ Ω^s for an infinite resolution
        witness: the isomorphism Ω^t → Ω^s
    """

    module: LeftModule
    covers: List[ProjectiveCover] = dc_field(default_factory=list)
    syzygies: List[LeftModule] = dc_field(default_factory=list)
    inclusions: List[ModuleMap] = dc_field(default_factory=list)
    status: str = CUTOFF
    pd: PdValue = PdValue.at_least(0)
    period: Optional[Tuple[int, int]] = None
    witness: Optional[ModuleMap] = None
    depth: int = DEFAULT_DEPTH

    @property
    def projectives(self) -> List[LeftModule]:
        return [c.projective.module for c in self.covers]

    def differential(self, k: int) -> ModuleMap:
        """d_k: P_k → P_{k-1} for k ≥ 1."""
        return self.covers[k].cover.then(self.inclusions[k - 1])

    @property
    def differentials(self) -> List[ModuleMap]:
        return [self.differential(k) for k in range(1, len(self.covers))]

    def check_exactness(self) -> ValidationReport:
        """d_{k+1}·d_k = 0 and rank d_{k+1} + rank d_k = dim P_k at every stage."""
        report = ValidationReport(f"resolution of {self.module.name or 'M'}")
        ds = [self.covers[0].cover] + self.differentials if self.covers else []
        for k in range(len(ds) - 1):
            d_next, d_k = ds[k + 1], ds[k]
            report.check(d_next.then(d_k).is_zero, "composite",
                         f"d_{k + 1}·d_{k} != 0", (k,))
            report.check(d_next.rank + d_k.rank == d_k.source.dim, "exactness",
                         f"rank condition fails at P_{k}", (k,))
        for k, c in enumerate(self.covers):
            K = image_subspace(self.inclusions[k]) if k < len(self.inclusions) else None
            if K is not None:
                report.check(K.issubspace(radical_subspace(c.projective.module)), "minimality",
                             f"kernel of the cover of Ω^{k} is not in rad P_{k}", (k,))
        return report

    def summary(self) -> str:
        dims = [P.dim for P in self.projectives]
        return f"{self.module.name or 'M'}: {self.status}, pd {self.pd}, P dims {dims}"

    def to_dict(self) -> Dict:
        return {
            "status": self.status,
            "pd": self.pd.to_dict(),
            "projective_dims": [P.dim for P in self.projectives],
            "multiplicities": [list(c.multiplicities) for c in self.covers],
            "syzygy_dims": [S.dim for S in self.syzygies],
            "period": list(self.period) if self.period else None,
        }


def minimal_resolution(M: LeftModule, depth: int = DEFAULT_DEPTH,
                       seed: int = DEFAULT_SEED) -> MinimalResolution:
    """
    Iterated projective covers of the syzygies of M, at most depth + 1 of them.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    cache = vars(M).setdefault("_resolutions", {})
    if (depth, seed) in cache:
        return cache[(depth, seed)]
    # finished runs that stopped within depth + 1 stages are reusable
    for (d, s), res in cache.items():
        if s == seed and res.status != CUTOFF and len(res.covers) - 1 <= depth:
            return res
    res = MinimalResolution(M, depth=depth)
    res.syzygies.append(M)
    if M.dim == 0:
        res.status, res.pd = FINITE, PdValue.zero_module()
        cache[(depth, seed)] = res
        return res
    for k in range(depth + 1):
        omega = res.syzygies[k]
        cover = top_and_cover(omega)
        res.covers.append(cover)
        if cover.cover.is_injective:
            res.status, res.pd = FINITE, PdValue.exact(k)
            break
        nxt, inclusion = kernel(cover.cover, f"Ω^{k + 1}")
        res.syzygies.append(nxt)
        res.inclusions.append(inclusion)
        match = _earlier_isomorphic(res.syzygies, seed)
        if match is not None:
            s, witness = match
            res.status, res.pd = PERIODIC, PdValue.infinite()
            res.period, res.witness = (s, k + 1), witness
            break
    else:
        res.status, res.pd = CUTOFF, PdValue.at_least(depth + 1)
    logger.debug("resolution: %s", res.summary())
    cache[(depth, seed)] = res
    return res


def _earlier_isomorphic(syzygies: Sequence[LeftModule],
                        seed: int) -> Optional[Tuple[int, ModuleMap]]:
    last = syzygies[-1]
    for s in range(len(syzygies) - 1):
        if syzygies[s].dim != last.dim:
            continue
        verdict = is_isomorphic(last, syzygies[s], seed)
        if verdict.isomorphic:
            return s, verdict.witness
    return None


def proj_dim(M: LeftModule, depth: int = DEFAULT_DEPTH) -> PdValue:
    return minimal_resolution(M, depth).pd


# =============================================================================
# EXT
# =============================================================================

def ext_dim(M: LeftModule, N: LeftModule, k: int, depth: int = DEFAULT_DEPTH) -> Optional[int]:
    """
    dim Ext^k(M, N), or None when the resolution was cut off before stage k.

    Ext^k = Hom(Ω^k M, N) modulo the maps that extend to P_{k-1}. Past the
    computed stages of a periodic resolution the degree is read off the period.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if M.algebra is not N.algebra:
        raise DimensionMismatchError("modules over different algebras")
    if k == 0:
        return hom_space(M, N).dim
    res = minimal_resolution(M, max(depth, k))
    if res.status == FINITE and res.pd.tag == ZERO:
        return 0
    if res.status == FINITE and k > res.pd.value:
        return 0
    if res.status == PERIODIC:
        s, t = res.period
        while k - 1 >= t:
            k -= t - s
    if k >= len(res.syzygies):
        return None
    omega = res.syzygies[k]
    inclusion = res.inclusions[k - 1]
    hom_omega = hom_space(omega, N)
    restricted = [inclusion.then(h) for h in hom_space(inclusion.target, N)]
    return hom_omega.dim - span_rank(restricted)


# =============================================================================
# ISOMORPHISM TESTING
# =============================================================================

ISOMORPHIC = "isomorphic"
NOT_ISOMORPHIC = "not-isomorphic"
NOT_FOUND = "not-found"


@dataclass(frozen=True, eq=False)
class IsoResult:
    """Outcome of an isomorphism search; not-found means the budget ran out."""

    verdict: str
    witness: Optional[ModuleMap] = None
    reason: str = ""

    @property
    def isomorphic(self) -> bool:
        return self.verdict == ISOMORPHIC

    def __bool__(self) -> bool:
        return self.isomorphic

    def to_dict(self) -> Dict:
        return {"verdict": self.verdict, "reason": self.reason}


def is_isomorphic(M: LeftModule, N: LeftModule, seed: int = DEFAULT_SEED,
                  trials: int = ISO_TRIALS) -> IsoResult:
    """
    Search for an invertible element of Hom(M, N).

    Dimension and Hom-dimension mismatches prove non-isomorphism; otherwise
    seeded random combinations are tried, then a small coefficient grid.
    """
    if M.algebra is not N.algebra:
        raise DimensionMismatchError("modules over different algebras")
    if M.dim != N.dim:
        return IsoResult(NOT_ISOMORPHIC, reason="dimension")
    if M.dim == 0:
        return IsoResult(ISOMORPHIC, ModuleMap.zero(M, N), "zero")
    H = hom_space(M, N)
    if H.dim == 0:
        return IsoResult(NOT_ISOMORPHIC, reason="no homomorphisms")
    dims = (hom_space(M, M).dim, hom_space(N, N).dim, H.dim, hom_space(N, M).dim)
    if len(set(dims)) != 1:
        return IsoResult(NOT_ISOMORPHIC, reason=f"hom dimensions {dims}")
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        f = H.random_element(rng, RANDOM_COEFF_BOUND)
        if f.is_isomorphism:
            return IsoResult(ISOMORPHIC, f, "random")
    field = M.field
    grid_dim = min(H.dim, ISO_GRID_BASIS)
    for coeffs in itertools.product((0, 1, -1, 2), repeat=grid_dim):
        padded = [field.convert(c) for c in coeffs] + [field.zero] * (H.dim - grid_dim)
        f = H.combination(padded)
        if f.is_isomorphism:
            return IsoResult(ISOMORPHIC, f, "grid")
    logger.info("isomorphism search exhausted for %s and %s", M.name or "M", N.name or "N")
    return IsoResult(NOT_FOUND, reason="budget")


# =============================================================================
# SIMPLE MODULES
# =============================================================================

def simple_modules(A: FdAlgebra) -> Tuple[LeftModule, ...]:
    """One simple module per isoclass, as the top of A·f_t."""
    cache = vars(A)
    if "_simple_modules" not in cache:
        out = []
        for t, f in enumerate(primitive_decomposition(A).representatives):
            S, _ = top_module(projective_module(A, f))
            out.append(LeftModule(A, S.dim, S.action, S.degrees, f"S{t + 1}"))
        cache["_simple_modules"] = tuple(out)
    return cache["_simple_modules"]


def indecomposable_projectives(A: FdAlgebra) -> Tuple[LeftModule, ...]:
    return tuple(projective_module(A, f, f"P{t + 1}")
                 for t, f in enumerate(primitive_decomposition(A).representatives))


if __name__ == "__main__":
    from .algebra import lower_triangular, truncated_polynomial
    from .field import FieldSpec

    F = FieldSpec.rationals()
    print("=" * 70)
    print("MINIMAL RESOLUTIONS OF SIMPLE MODULES")
    print("=" * 70)
    for B in (truncated_polynomial(F, 2), lower_triangular(F, 2)):
        print(f"\n{B.summary()}")
        for S in simple_modules(B):
            res = minimal_resolution(S, depth=6)
            print(f"  {res.summary()}")
