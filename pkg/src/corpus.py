#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab — Bundled Corpus

The worked examples and small controls every command can be pointed at
with `corpus:<name>`. Entries are SpecFile values built in code; their
canonical text is what `serialize` writes and what the report digests.

    lambda-dual-numbers      Λ = [[A, rad], [A, A]], A = k[x]/(x^2)
    lambda-zero-ideal        Λ = [[A, 0], [A, A]], A = k[x]/(x^2)
    lambda-field             Λ = T_2(k)
    lambda-lower-triangular  A = T_2(k), I_2 = rad
    example-1                the 4×4 powers-of-ideal ring over k[x]/(x^4)
    example-1-cor33          the constant-column shape I_ij = I_j of it
    example-2-n2..n4         k[x]/(x^n): I_ij = A shape plus the rad^{j-i} tiling
    cor33-variant2           k[x]/(x^3), n = 3, I_ij = A
    tiled-cor413             tiled ring over T_2(k) with rad next to the diagonal
    full-matrix-2            M_2(k) as a tiled ring
    block-qf-dual            P(2) over k[x]/(x^2)
    example-3                P(3,2) over the two-vertex quiver algebra
"""

import logging
from typing import Callable, Dict, List

from .algebra import field_algebra, lower_triangular, radical, truncated_polynomial
from .field import RATIONAL_FIELD, FieldSpec
from .quiver import QuiverSpec, build_path_algebra
from .specfile import BlockDecl, LambdaDecl, SpecFile, TiledDecl

logger = logging.getLogger(__name__)

CORPUS_PREFIX = "corpus:"


def _rad_power(k: int) -> str:
    if k <= 0:
        return "full"
    return "rad" if k == 1 else f"rad^{k}"


def _powers_lambda(n: int, cross: str = "") -> LambdaDecl:
    """I_j = rad^{j-1}; I_ij = I_j unless `cross` names a constant entry."""
    ideals = {j: _rad_power(j - 1) for j in range(2, n + 1)}
    crosses = {(i, j): cross for i in range(3, n + 1) for j in range(2, i)} if cross else {}
    return LambdaDecl(n, ideals, {}, crosses, chain=True)


# =============================================================================
# ENTRIES
# =============================================================================

def lambda_dual_numbers(field: FieldSpec) -> SpecFile:
    A = truncated_polynomial(field, 2)
    return SpecFile("lambda-dual-numbers", field, A, lam=LambdaDecl(2, {2: "rad"}),
                    notes=["n = 2 over the dual numbers; dim Λ = 7, dim Σ = 4"])


def lambda_zero_ideal(field: FieldSpec) -> SpecFile:
    A = truncated_polynomial(field, 2)
    return SpecFile("lambda-zero-ideal", field, A, lam=LambdaDecl(2, {2: "zero"}),
                    notes=["I_2 = 0: Λ = [[A, 0], [A, A]]"])


def lambda_field(field: FieldSpec) -> SpecFile:
    return SpecFile("lambda-field", field, field_algebra(field), lam=LambdaDecl(2, {2: "zero"}),
                    notes=["A = k, I_2 = 0: Λ is the lower triangular ring T_2(k)"])


def lambda_lower_triangular(field: FieldSpec) -> SpecFile:
    return SpecFile("lambda-lower-triangular", field, lower_triangular(field, 2),
                    lam=LambdaDecl(2, {2: "rad"}),
                    notes=["A = T_2(k), I_2 = rad A"])


def example_1(field: FieldSpec) -> SpecFile:
    A = truncated_polynomial(field, 4)
    lam = _powers_lambda(4)
    lam.cross = {(i, j): "rad" for i in range(3, 5) for j in range(2, i)}
    return SpecFile("example-1", field, A, lam=lam,
                    notes=["Γ = [[A, I, I^2, I^3], [A, A, I^2, I^3], [A, I, A, I^3], "
                           "[A, I, I, A]] with A = k[x]/(x^4), I = (x)"])


def example_1_cor33(field: FieldSpec) -> SpecFile:
    lam = _powers_lambda(4)
    lam.chain = False
    return SpecFile("example-1-cor33", field, truncated_polynomial(field, 4), lam=lam,
                    notes=["constant columns I_ij = I_j over k[x]/(x^4)"])


def example_2(n: int) -> Callable[[FieldSpec], SpecFile]:
    def build(field: FieldSpec) -> SpecFile:
        A = truncated_polynomial(field, n)
        tiled = TiledDecl(4, {(i, j): _rad_power(j - i)
                              for i in range(1, 5) for j in range(i + 1, 5)})
        return SpecFile(f"example-2-n{n}", field, A, lam=_powers_lambda(4, cross="full"),
                        tiled=tiled,
                        notes=[f"A = k[x]/(x^{n}), I = rad A",
                               "the tiled entry (2,4) is I^2; the displayed I^3 is not closed "
                               "under I·I"])
    return build


def cor33_variant2(field: FieldSpec) -> SpecFile:
    return SpecFile("cor33-variant2", field, truncated_polynomial(field, 3),
                    lam=_powers_lambda(3, cross="full"),
                    notes=["I_ij = A with the chain rad^2 ⊆ rad"])


def tiled_cor413(field: FieldSpec) -> SpecFile:
    A = lower_triangular(field, 2)
    tiled = TiledDecl(3, {(1, 2): "rad", (2, 3): "rad", (1, 3): "J"})
    return SpecFile("tiled-cor413", field, A, subspaces={"J": radical(A)}, tiled=tiled,
                    notes=["I_{i,i+1} = rad A over T_2(k)"])


def full_matrix_2(field: FieldSpec) -> SpecFile:
    return SpecFile("full-matrix-2", field, field_algebra(field),
                    tiled=TiledDecl(2, {(1, 2): "full"}),
                    notes=["M_2(k) as the tiled ring with every entry full"])


def block_qf_dual(field: FieldSpec) -> SpecFile:
    return SpecFile("block-qf-dual", field, truncated_polynomial(field, 2),
                    block=BlockDecl((2,), basic=True),
                    notes=["P(2) = [[A, A], [rad A, A]] over the self-injective k[x]/(x^2)"])


EXAMPLE_3_QUIVER = QuiverSpec.from_lists(
    ["1", "2"],
    [("alpha", "1", "1"), ("beta", "1", "2"), ("delta", "2", "1")],
    ["alpha^3 - beta*delta", "alpha*beta", "delta*alpha"],
    bound=4, name="example-3")


def example_3(field: FieldSpec) -> SpecFile:
    A, _ = build_path_algebra(EXAMPLE_3_QUIVER, field)
    return SpecFile("example-3", field, A, quiver=EXAMPLE_3_QUIVER,
                    block=BlockDecl((3, 2), basic=True),
                    notes=["A = k[alpha]/(alpha^4) and kbeta in the first row, kdelta and "
                           "k[delta*beta]/((delta*beta)^2) in the second",
                           "unverified: the extended quiver of P(3,2) with e(alpha^3) "
                           "relations is not encoded; P(3,2) is built from the block recipe"])


ENTRIES: Dict[str, Callable[[FieldSpec], SpecFile]] = {
    "lambda-dual-numbers": lambda_dual_numbers,
    "lambda-zero-ideal": lambda_zero_ideal,
    "lambda-field": lambda_field,
    "lambda-lower-triangular": lambda_lower_triangular,
    "example-1": example_1,
    "example-1-cor33": example_1_cor33,
    "example-2-n2": example_2(2),
    "example-2-n3": example_2(3),
    "example-2-n4": example_2(4),
    "cor33-variant2": cor33_variant2,
    "tiled-cor413": tiled_cor413,
    "full-matrix-2": full_matrix_2,
    "block-qf-dual": block_qf_dual,
    "example-3": example_3,
}


def corpus_names() -> List[str]:
    return sorted(ENTRIES)


def corpus_entry(name: str, field: FieldSpec = RATIONAL_FIELD) -> SpecFile:
    if name.startswith(CORPUS_PREFIX):
        name = name[len(CORPUS_PREFIX):]
    if name not in ENTRIES:
        raise KeyError(f"no corpus entry {name!r} (have {', '.join(corpus_names())})")
    return ENTRIES[name](field)


def corpus(field: FieldSpec = RATIONAL_FIELD) -> List[SpecFile]:
    """Every bundled entry, ordered by name."""
    entries = [ENTRIES[name](field) for name in corpus_names()]
    logger.debug("corpus: %d entries over %s", len(entries), field)
    return entries
