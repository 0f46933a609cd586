#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab — Dimension Lab

Global dimension, self-injectivity, budgeted finitistic-dimension evidence,
and machine checks of the dimension inequalities relating A, Λ, Σ, block
extensions and tiled triangular rings.

Dimensions are carried as intervals over the extended integers:

    exact k    ->  [k, k]
    at_least k ->  [k, ∞]      (resolution cut off by the depth)
    infinite   ->  [∞, ∞]      (periodicity witness)
    zero       ->  [−∞, −∞]    (zero module or zero ring)

The finitistic dimension of an algebra is only ever known as an interval:
the lower end is the largest pd among the finite-pd modules of a seeded
search family, the upper end is certified by a finite global dimension
(fd = gldim) or by self-injectivity (fd = 0), and is ∞ otherwise.

Only the finitely generated analogue of the big finitistic dimension is
checked; every report says so.
"""

import logging
from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .algebra import FdAlgebra, quotient, radical_power, subalgebra
from .constants import (BRUTE_FORCE_MAX_DIM, BUDGET_DEPTH, BUDGET_MODULE_CAP, BUDGET_SAMPLES,
                        DEFAULT_DEPTH, DEFAULT_SEED, STATUS_FAIL, STATUS_INCONCLUSIVE,
                        STATUS_PASS)
from .errors import DimensionCapError, ZeroRingError
from .linalg import Subspace, columns, combine
from .modules import (LeftModule, cyclic_quotient, descend, generated_submodule,
                      image_subspace, quotient_module, radical_subspace, regular_module,
                      subquotient_module, submodule)
from .resolutions import (AT_LEAST, EXACT, INFINITE, ZERO, PdValue, ext_dim,
                          indecomposable_projectives, proj_dim, simple_modules)
from .rings import (BlockExtensionSpec, LambdaSpec, TiledTriangularSpec, build_block_extension,
                    build_lambda, build_sigma, build_tiled_triangular, sigma_triangular_parts)

logger = logging.getLogger(__name__)

INF = float("inf")
NEG_INF = float("-inf")

EXACT_KIND = "exact"
FINITISTIC_KIND = "finitistic"
IMPLICATION_KIND = "implication"

SKIPPED = "skipped"

FG_NOTE = "finitely generated analogue of the big finitistic dimension"


# =============================================================================
# INTERVALS OVER THE EXTENDED INTEGERS
# =============================================================================

def _ext_add(a: float, b: float) -> float:
    if a == NEG_INF or b == NEG_INF:
        return NEG_INF
    return a + b


def _ext_json(x: float):
    if x == INF:
        return "inf"
    if x == NEG_INF:
        return "-inf"
    return int(x)


@dataclass(frozen=True)
class Interval:
    """[lo, hi] with lo ≤ hi, endpoints integers or ±∞."""

    lo: float
    hi: float

    @classmethod
    def point(cls, k: float) -> "Interval":
        return cls(float(k), float(k))

    @classmethod
    def of_pd(cls, pd: PdValue) -> "Interval":
        return cls(*pd.interval)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def is_bounded(self) -> bool:
        return self.hi < INF

    def __add__(self, other) -> "Interval":
        if not isinstance(other, Interval):
            other = Interval.point(other)
        return Interval(_ext_add(self.lo, other.lo), _ext_add(self.hi, other.hi))

    __radd__ = __add__

    def __sub__(self, k: int) -> "Interval":
        return self + Interval.point(-k)

    def to_dict(self) -> Dict:
        return {"lo": _ext_json(self.lo), "hi": _ext_json(self.hi)}

    def __str__(self) -> str:
        if self.is_point:
            return str(_ext_json(self.lo))
        return f"[{_ext_json(self.lo)}, {_ext_json(self.hi)}]"


def interval_max(intervals: Sequence[Interval]) -> Interval:
    if not intervals:
        return Interval.point(NEG_INF)
    return Interval(max(i.lo for i in intervals), max(i.hi for i in intervals))


def interval_sum(intervals: Sequence[Interval]) -> Interval:
    total = Interval.point(0)
    for i in intervals:
        total = total + i
    return total


def pd_max(values: Sequence[PdValue]) -> PdValue:
    """Supremum of projective dimensions; zero modules are ignored."""
    values = [v for v in values if v.tag != ZERO]
    if not values:
        return PdValue.zero_module()
    if any(v.tag == INFINITE for v in values):
        return PdValue.infinite()
    top = max(v.value for v in values)
    if any(v.tag == AT_LEAST for v in values):
        return PdValue.at_least(top)
    return PdValue.exact(top)


# =============================================================================
# GLOBAL DIMENSION AND SELF-INJECTIVITY
# =============================================================================

def global_dimension(A: FdAlgebra, depth: int = DEFAULT_DEPTH) -> PdValue:
    """Maximum projective dimension of the simple modules."""
    cache = vars(A).setdefault("_gldim", {})
    if depth not in cache:
        values = [proj_dim(S, depth) for S in simple_modules(A)]
        cache[depth] = pd_max(values)
        logger.debug("gldim %s = %s (simples: %s)", A.name or "A", cache[depth],
                     ", ".join(str(v) for v in values))
    return cache[depth]


def is_self_injective(A: FdAlgebra, depth: int = DEFAULT_DEPTH) -> bool:
    """Ext¹(S, A) = 0 for every simple S, i.e. the regular module is injective."""
    cache = vars(A).setdefault("_self_injective", {})
    if depth not in cache:
        reg = regular_module(A)
        cache[depth] = all(ext_dim(S, reg, 1, depth) == 0 for S in simple_modules(A))
        logger.debug("%s self-injective: %s", A.name or "A", cache[depth])
    return cache[depth]


# =============================================================================
# FINITISTIC DIMENSION ESTIMATOR
# =============================================================================

@dataclass(frozen=True)
class Budget:
    """Search family limits: module dimension cap, samples per projective, resolution depth."""

    max_module_dim: int = BUDGET_MODULE_CAP
    samples: int = BUDGET_SAMPLES
    depth: int = BUDGET_DEPTH

    @staticmethod
    def _default_parameters() -> Dict[str, int]:
        return {
            "max_module_dim": BUDGET_MODULE_CAP,
            "samples": BUDGET_SAMPLES,
            "depth": BUDGET_DEPTH,
        }

    @classmethod
    def with_overrides(cls, **overrides) -> "Budget":
        params = cls._default_parameters()
        unknown = set(overrides) - set(params)
        if unknown:
            raise ValueError(f"unknown budget parameters: {sorted(unknown)}")
        params.update(overrides)
        return cls(**params)

    @classmethod
    def parse(cls, text: str) -> "Budget":
        """'cap,samples,depth', e.g. '24,6,6'."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"budget must be 'cap,samples,depth' (got {text!r})")
        try:
            cap, samples, depth = (int(p) for p in parts)
        except ValueError:
            raise ValueError(f"budget entries must be integers (got {text!r})") from None
        if cap < 1 or samples < 0 or depth < 0:
            raise ValueError(f"budget entries out of range (got {text!r})")
        return cls(cap, samples, depth)

    def to_dict(self) -> Dict[str, int]:
        return {"max_module_dim": self.max_module_dim, "samples": self.samples,
                "depth": self.depth}

    def __str__(self) -> str:
        return f"{self.max_module_dim},{self.samples},{self.depth}"


@dataclass(frozen=True)
class FamilyMember:
    """One module of the search family, replayable from its descriptor."""

    projective: str
    kind: str
    dim: int
    pd: PdValue
    parameter: Tuple = ()

    def to_dict(self) -> Dict:
        return {"projective": self.projective, "kind": self.kind, "dim": self.dim,
                "pd": self.pd.to_dict(), "parameter": list(self.parameter)}


UPPER_GLDIM = "gldim"
UPPER_SELF_INJECTIVE = "self-injective"
UPPER_UNKNOWN = "unknown"


@dataclass
class DimReport:
    """
    Global dimension and finitistic-dimension evidence for one algebra.

    Attributes:
        algebra: name of the algebra
        gldim: global dimension as far as resolved
        findim_lower: largest pd found among finite-pd family members
        findim_upper: certified upper bound, None when unknown
        upper_source: gldim, self-injective or unknown
        budget: the search budget used
        witnesses: family members attaining the lower bound
        members: number of family members evaluated
        cutoffs: members whose resolution ran past the budget depth
        seed: sampling seed
    """

    algebra: str
    gldim: PdValue
    findim_lower: int
    findim_upper: Optional[PdValue]
    upper_source: str
    budget: Budget
    witnesses: List[FamilyMember] = dc_field(default_factory=list)
    members: int = 0
    cutoffs: int = 0
    seed: int = DEFAULT_SEED

    @property
    def fd_certified(self) -> bool:
        return self.findim_upper is not None

    @property
    def fd_interval(self) -> Interval:
        hi = INF if self.findim_upper is None else Interval.of_pd(self.findim_upper).hi
        return Interval(float(self.findim_lower), max(float(self.findim_lower), hi))

    def to_dict(self) -> Dict:
        return {
            "algebra": self.algebra,
            "gldim": self.gldim.to_dict(),
            "findim_lower": self.findim_lower,
            "findim_upper": self.findim_upper.to_dict() if self.findim_upper else UPPER_UNKNOWN,
            "upper_source": self.upper_source,
            "budget": self.budget.to_dict(),
            "seed": self.seed,
            "members": self.members,
            "cutoffs": self.cutoffs,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "note": FG_NOTE,
        }

    def summary(self) -> str:
        upper = str(self.findim_upper) if self.findim_upper else UPPER_UNKNOWN
        return (f"{self.algebra}: gldim {self.gldim}, fd in [{self.findim_lower}, {upper}] "
                f"({self.members} modules, {self.cutoffs} cut off)")


def _radical_power_subspace(M: LeftModule, k: int) -> Subspace:
    field = M.field
    vectors = []
    for r in radical_power(M.algebra, k).rows:
        vectors.extend(columns(M.matrix_of(r), field))
    return Subspace.span(field, M.dim, vectors)


def _radical_layers(P: LeftModule) -> List[Tuple[int, Subspace]]:
    """(k, rad^k P) for k = 1, 2, ... while nonzero."""
    layers = []
    k = 1
    while True:
        S = _radical_power_subspace(P, k)
        if S.is_zero:
            return layers
        layers.append((k, S))
        k += 1


def _sample_generators(P: LeftModule, rng: np.random.Generator, samples: int) -> List[Tuple]:
    """Seeded elements of rad P, alternately generic and frame-homogeneous."""
    field = P.field
    rad_rows = radical_subspace(P).rows
    if not rad_rows:
        return []
    frame = P.algebra.frame
    out = []
    for s in range(samples):
        coeffs = field.random_vector(rng, len(rad_rows))
        v = combine(coeffs, rad_rows, P.dim, field)
        if s % 2 and len(frame) > 1:
            v = P.act(frame[(s // 2) % len(frame)], v)
        if any(v):
            out.append(v)
    return out


def _family(A: FdAlgebra, budget: Budget, seed: int):
    """Yield (projective name, kind, parameter, module) for the search family."""
    rng = np.random.default_rng(seed)
    for P in indecomposable_projectives(A):
        yield P.name, "projective", (), P
        seen = set()
        for k, S in _radical_layers(P):
            seen.add(tuple(S.rows))
            if P.dim - S.dim <= budget.max_module_dim:
                Q, _ = quotient_module(P, S, f"{P.name}/rad^{k}", check=False)
                yield P.name, "radical-power", (k,), Q
        gens = _sample_generators(P, rng, budget.samples)
        choices = [(g,) for g in gens] + [(g, h) for g, h in zip(gens, gens[1:])]
        for number, chosen in enumerate(choices):
            _, inclusion = generated_submodule(P, chosen)
            U = image_subspace(inclusion)
            key = tuple(U.rows)
            if key in seen or P.dim - U.dim > budget.max_module_dim:
                continue
            seen.add(key)
            Q, _ = quotient_module(P, U, f"{P.name}/U{number}", check=False)
            parameter = tuple(tuple(str(c) for c in g) for g in chosen)
            yield P.name, "cyclic" if len(chosen) == 1 else "two-generated", parameter, Q


def findim_estimate(A: FdAlgebra, budget: Optional[Budget] = None,
                    seed: int = DEFAULT_SEED, depth: int = DEFAULT_DEPTH) -> DimReport:
    """
    Budgeted evidence for fd(A).

    The family holds the indecomposable projectives P, every P/rad^k P and
    the quotients of P by submodules generated by one or two seeded
    elements of rad P. The lower bound is the largest pd among members of
    finite pd; the upper bound is gldim when finite, 0 when A is
    self-injective, unknown otherwise.
    """
    budget = budget or Budget()
    gldim = global_dimension(A, depth)
    lower = 0
    witnesses: List[FamilyMember] = []
    members = cutoffs = 0
    for pname, kind, parameter, Q in _family(A, budget, seed):
        members += 1
        pd = proj_dim(Q, budget.depth)
        member = FamilyMember(pname, kind, Q.dim, pd, parameter)
        if pd.tag == AT_LEAST:
            cutoffs += 1
        if pd.tag != EXACT:
            continue
        if pd.value > lower:
            lower, witnesses = pd.value, [member]
        elif pd.value == lower:
            witnesses.append(member)

    if gldim.tag == EXACT:
        upper, source = gldim, UPPER_GLDIM
        lower = max(lower, gldim.value)
    elif is_self_injective(A, depth):
        upper, source = PdValue.exact(0), UPPER_SELF_INJECTIVE
    else:
        upper, source = None, UPPER_UNKNOWN
    report = DimReport(A.name or "A", gldim, lower, upper, source, budget,
                       witnesses, members, cutoffs, seed)
    logger.debug("findim estimate: %s", report.summary())
    return report


def brute_force_gldim(A: FdAlgebra, depth: int = DEFAULT_DEPTH) -> Tuple[PdValue, int]:
    """
    Max pd over P itself, the cyclic quotients P/A·u (u a basis vector of P
    or a sum of two) and the radical-power quotients of every indecomposable
    projective P. Returns the value and the number of modules examined.

    Raises:
        DimensionCapError: A is too large for the exhaustive family
    """
    if A.dim > BRUTE_FORCE_MAX_DIM:
        raise DimensionCapError(f"brute-force gldim needs dim A <= {BRUTE_FORCE_MAX_DIM}")
    field = A.field
    values: List[PdValue] = []
    for P in indecomposable_projectives(A):
        quotients = [Subspace.zero(field, P.dim)] + [S for _, S in _radical_layers(P)]
        units = [field.unit_vector(P.dim, j) for j in range(P.dim)]
        elements = units + [tuple(a + b for a, b in zip(units[i], units[j]))
                            for i in range(P.dim) for j in range(i + 1, P.dim)]
        for u in elements:
            _, inclusion = generated_submodule(P, [u])
            quotients.append(image_subspace(inclusion))
        for U in {tuple(U.rows): U for U in quotients}.values():
            Q, _ = quotient_module(P, U, check=False)
            values.append(proj_dim(Q, depth))
    return pd_max(values), len(values)


# =============================================================================
# COMPONENT ALGEBRAS
# =============================================================================

def subring_quotient(base: FdAlgebra, B: Subspace, I: Subspace, unit: Sequence,
                     name: str = "") -> Optional[FdAlgebra]:
    """B/I for a subring B ⊆ A with identity `unit` and an ideal I of B; None for the zero ring."""
    if I == B:
        return None
    if B.is_full:
        return quotient(base, I, name).algebra
    view = subalgebra(base, B, unit, name=name)
    inner = Subspace.span(base.field, B.dim, [B.coords(v) for v in I.rows])
    return quotient(view.algebra, inner, name).algebra


def ideal_module(A: FdAlgebra, I: Subspace, name: str = "") -> LeftModule:
    """A left ideal I as a left A-module."""
    module, _ = submodule(regular_module(A), I, name, check=False)
    return module


# =============================================================================
# INEQUALITIES AND BOUND CHECKS
# =============================================================================

@dataclass
class Inequality:
    """
    lhs ≤ rhs over intervals.

    exact:       pass when lhs.hi ≤ rhs.lo, fail when lhs.lo > rhs.hi
    finitistic:  pass when consistent (lhs.lo ≤ rhs.hi), fail otherwise
    implication: status decided by the caller
    """

    label: str
    lhs: Interval
    rhs: Interval
    kind: str = EXACT_KIND
    status: str = ""
    note: str = ""

    def __post_init__(self):
        if self.status:
            return
        if self.kind == EXACT_KIND:
            if self.lhs.hi <= self.rhs.lo:
                self.status = STATUS_PASS
            elif self.lhs.lo > self.rhs.hi:
                self.status = STATUS_FAIL
            else:
                self.status = STATUS_INCONCLUSIVE
        elif self.kind == FINITISTIC_KIND:
            self.status = STATUS_PASS if self.lhs.lo <= self.rhs.hi else STATUS_FAIL
        else:
            self.status = STATUS_INCONCLUSIVE

    def to_dict(self) -> Dict:
        return {"label": self.label, "kind": self.kind, "status": self.status,
                "lhs": self.lhs.to_dict(), "rhs": self.rhs.to_dict(), "note": self.note}


@dataclass
class BoundCheck:
    """
    One dimension statement evaluated on one ring.

    Attributes:
        name: which statement (cor_1_2_fd, thm_4_6, ...)
        subject: name of the spec it was evaluated on
        inequalities: the individual inequalities with their statuses
        inputs: every computed dimension used, by label
        notes: hypotheses not met and substitutions made
    """

    name: str
    subject: str
    inequalities: List[Inequality] = dc_field(default_factory=list)
    inputs: Dict[str, Dict] = dc_field(default_factory=dict)
    notes: List[str] = dc_field(default_factory=list)

    @property
    def status(self) -> str:
        statuses = [i.status for i in self.inequalities if i.status != SKIPPED]
        if STATUS_FAIL in statuses:
            return STATUS_FAIL
        if not statuses or STATUS_INCONCLUSIVE in statuses:
            return STATUS_INCONCLUSIVE
        return STATUS_PASS

    @property
    def holds(self) -> bool:
        return self.status == STATUS_PASS

    @property
    def lhs(self) -> Optional[Interval]:
        return self.inequalities[0].lhs if self.inequalities else None

    @property
    def rhs(self) -> Optional[Interval]:
        return self.inequalities[0].rhs if self.inequalities else None

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "subject": self.subject,
            "status": self.status,
            "inequalities": [i.to_dict() for i in self.inequalities],
            "inputs": dict(sorted(self.inputs.items())),
            "notes": list(self.notes),
        }

    def summary(self) -> str:
        parts = ", ".join(f"{i.label}: {i.status}" for i in self.inequalities)
        return f"{self.name} on {self.subject}: {self.status} ({parts})"


class DimensionLab:
    """
    Evaluates dimensions of the algebras a check needs, once each.

    Example:
        >>> lab = DimensionLab({"depth": 8})
        >>> lab.gldim_interval(A, "gldim(A)")
    """

    def __init__(self, params: Optional[Dict] = None):
        self.parameters = self._default_parameters()
        if params:
            unknown = set(params) - set(self.parameters)
            if unknown:
                raise ValueError(f"unknown parameters: {sorted(unknown)}")
            self.parameters.update(params)
        self.inputs: Dict[str, Dict] = {}
        self.notes: List[str] = []

    @staticmethod
    def _default_parameters() -> Dict:
        return {
            "depth": DEFAULT_DEPTH,
            "budget": Budget(),
            "seed": DEFAULT_SEED,
        }

    @property
    def depth(self) -> int:
        return self.parameters["depth"]

    def gldim(self, A: Optional[FdAlgebra], label: str) -> PdValue:
        value = PdValue.zero_module() if A is None else global_dimension(A, self.depth)
        self.inputs[label] = value.to_dict()
        return value

    def gldim_interval(self, A: Optional[FdAlgebra], label: str) -> Interval:
        return Interval.of_pd(self.gldim(A, label))

    def fd(self, A: Optional[FdAlgebra], label: str) -> Optional[DimReport]:
        if A is None:
            self.inputs[label] = {"zero_ring": True}
            return None
        report = findim_estimate(A, self.parameters["budget"], self.parameters["seed"],
                                 self.depth)
        self.inputs[label] = report.to_dict()
        return report

    def fd_interval(self, A: Optional[FdAlgebra], label: str) -> Interval:
        report = self.fd(A, label)
        return Interval.point(NEG_INF) if report is None else report.fd_interval

    def pd(self, M: LeftModule, label: str) -> PdValue:
        value = proj_dim(M, self.depth)
        self.inputs[label] = value.to_dict()
        return value

    def finish(self, name: str, subject: str, inequalities: List[Inequality]) -> BoundCheck:
        check = BoundCheck(name, subject, inequalities, dict(self.inputs), list(self.notes))
        log = logger.warning if check.status == STATUS_FAIL else logger.info
        log("%s", check.summary())
        return check


def _lambda_components(spec: LambdaSpec) -> List[Optional[FdAlgebra]]:
    A = spec.base
    return [subring_quotient(A, spec.subring(i), spec.ideal(i), A.unit, f"A_{i}/I_{i}")
            for i in range(2, spec.n + 1)]


def _base_quotients(spec: LambdaSpec) -> List[Optional[FdAlgebra]]:
    A = spec.base
    full = Subspace.full(A.field, A.dim)
    return [subring_quotient(A, full, spec.ideal(i), A.unit, f"A/I_{i}")
            for i in range(2, spec.n + 1)]


def _name(spec) -> str:
    return spec.name or type(spec).__name__


def _cor_1_2_fd(spec: LambdaSpec, lab: DimensionLab) -> BoundCheck:
    lab.notes.append(FG_NOTE)
    fd_A = lab.fd_interval(spec.base, "fd(A)")
    fd_L = lab.fd_interval(build_lambda(spec).algebra, "fd(Lambda)")
    parts = [lab.fd_interval(B, f"fd(A_{i}/I_{i})")
             for i, B in enumerate(_lambda_components(spec), start=2)]
    return lab.finish("cor_1_2_fd", _name(spec), [
        Inequality("fd(A) - 1 <= fd(Lambda)", fd_A - 1, fd_L, FINITISTIC_KIND),
        Inequality("fd(Lambda) <= n + sum fd(A_i/I_i) + fd(A)", fd_L,
                   interval_sum(parts) + fd_A + spec.n, FINITISTIC_KIND),
    ])


def _cor_1_2_gld(spec: LambdaSpec, lab: DimensionLab) -> BoundCheck:
    gl_A = lab.gldim_interval(spec.base, "gldim(A)")
    gl_L = lab.gldim_interval(build_lambda(spec).algebra, "gldim(Lambda)")
    parts = [lab.gldim_interval(B, f"gldim(A_{i}/I_{i})")
             for i, B in enumerate(_lambda_components(spec), start=2)]
    quotients = [lab.gldim_interval(B, f"gldim(A/I_{i})")
                 for i, B in enumerate(_base_quotients(spec), start=2)]
    return lab.finish("cor_1_2_gld", _name(spec), [
        Inequality("max{gldim(A_i/I_i), gldim(A)} - 1 <= gldim(Lambda)",
                   interval_max(parts + [gl_A]) - 1, gl_L),
        Inequality("gldim(Lambda) <= sum gldim(A/I_i) + gldim(A) + n",
                   gl_L, interval_sum(quotients) + gl_A + spec.n),
    ])


def _is_constant_column_shape(spec: LambdaSpec) -> bool:
    full = Subspace.full(spec.base.field, spec.base.dim)
    return (all(spec.subring(i) == full for i in range(2, spec.n + 1))
            and all(S == spec.ideal(j) for (i, j), S in spec.cross_ideals.items()))


def _cor_4_11(spec: LambdaSpec, lab: DimensionLab) -> BoundCheck:
    if not _is_constant_column_shape(spec):
        lab.notes.append("hypothesis not met: needs A_i = A and I_ij = I_j")
        return lab.finish("cor_4_11", _name(spec), [
            Inequality("shape A_i = A, I_ij = I_j", Interval.point(0), Interval.point(0),
                       IMPLICATION_KIND, STATUS_INCONCLUSIVE, "hypothesis not met")])
    A = spec.base
    gl_A = lab.gldim_interval(A, "gldim(A)")
    gl_L = lab.gldim_interval(build_lambda(spec).algebra, "gldim(Lambda)")
    quotients = [lab.gldim_interval(B, f"gldim(A/I_{i})")
                 for i, B in enumerate(_base_quotients(spec), start=2)]
    ideals = [Interval.of_pd(lab.pd(ideal_module(A, spec.ideal(i), f"I_{i}"), f"pd(I_{i})"))
              for i in range(2, spec.n + 1)]
    lower = interval_max([q - 1 for q in quotients] + [gl_A - 1] + ideals)
    upper = interval_max([q + p + 3 for q in quotients for p in ideals] + [gl_A + 1])
    return lab.finish("cor_4_11", _name(spec), [
        Inequality("max{gldim(A/I_i) - 1, gldim(A) - 1, pd(I_i)} <= gldim(Lambda)", lower, gl_L),
        Inequality("gldim(Lambda) <= max{gldim(A/I_i) + pd(I_j) + 3, gldim(A) + 1}", gl_L, upper),
    ])


def _lemma_4_3_triangular(spec: LambdaSpec, lab: DimensionLab) -> BoundCheck:
    lab.notes.append(FG_NOTE)
    parts = sigma_triangular_parts(spec)
    R, S = parts.R.algebra, parts.S
    Sigma = build_sigma(spec).algebra
    pd_M = pd_max([lab.pd(cyclic_quotient(S, I, f"A/I_{i}"), f"pd(A/I_{i})")
                   for i, I in enumerate(parts.M_ideals, start=2)])
    lab.inputs["pd(M)"] = pd_M.to_dict()
    pdM = Interval.of_pd(pd_M)
    fd_R, fd_S = lab.fd_interval(R, "fd(R)"), lab.fd_interval(S, "fd(S)")
    fd_Sig = lab.fd_interval(Sigma, "fd(Sigma)")
    gl_R, gl_S = lab.gldim_interval(R, "gldim(R)"), lab.gldim_interval(S, "gldim(S)")
    gl_Sig = lab.gldim_interval(Sigma, "gldim(Sigma)")
    checks = [
        Inequality("fd(S) <= fd(Sigma)", fd_S, fd_Sig, FINITISTIC_KIND),
        Inequality("fd(Sigma) <= 1 + fd(R) + fd(S)", fd_Sig, fd_R + fd_S + 1, FINITISTIC_KIND),
    ]
    labels = ("pd(M) + 1 <= fd(Sigma)", "fd(Sigma) <= max{fd(R) + pd(M) + 1, fd(S)}")
    if pd_M.tag == INFINITE:
        checks += [Inequality(l, pdM + 1, fd_Sig, FINITISTIC_KIND, SKIPPED, "pd(M) is infinite")
                   for l in labels]
    elif pd_M.tag == AT_LEAST:
        checks += [Inequality(l, pdM + 1, fd_Sig, FINITISTIC_KIND, STATUS_INCONCLUSIVE,
                              "pd(M) not resolved") for l in labels]
    else:
        checks += [
            Inequality(labels[0], pdM + 1, fd_Sig, FINITISTIC_KIND),
            Inequality(labels[1], fd_Sig, interval_max([fd_R + pdM + 1, fd_S]), FINITISTIC_KIND),
        ]
    checks += [
        Inequality("max{gldim(R), gldim(S), pd(M) + 1} <= gldim(Sigma)",
                   interval_max([gl_R, gl_S, pdM + 1]), gl_Sig),
        Inequality("gldim(Sigma) <= max{gldim(R) + pd(M) + 1, gldim(S)}",
                   gl_Sig, interval_max([gl_R + pdM + 1, gl_S])),
    ]
    return lab.finish("lemma_4_3_triangular", _name(spec), checks)


def _tilting_shift(spec: LambdaSpec, lab: DimensionLab) -> BoundCheck:
    lab.notes.append(FG_NOTE)
    Lam, Sigma = build_lambda(spec).algebra, build_sigma(spec).algebra
    gl_L = lab.gldim_interval(Lam, "gldim(Lambda)")
    gl_S = lab.gldim_interval(Sigma, "gldim(Sigma)")
    fd_L = lab.fd_interval(Lam, "fd(Lambda)")
    fd_S = lab.fd_interval(Sigma, "fd(Sigma)")
    return lab.finish("tilting_shift", _name(spec), [
        Inequality("gldim(Lambda) - 1 <= gldim(Sigma)", gl_L - 1, gl_S),
        Inequality("gldim(Sigma) <= gldim(Lambda) + 1", gl_S, gl_L + 1),
        Inequality("fd(Lambda) - 1 <= fd(Sigma)", fd_L - 1, fd_S, FINITISTIC_KIND),
        Inequality("fd(Sigma) <= fd(Lambda) + 1", fd_S, fd_L + 1, FINITISTIC_KIND),
    ])


def _block_components(spec: BlockExtensionSpec) -> Dict[str, Optional[FdAlgebra]]:
    """B_jl/I_jl for every block j and row l ≥ 2."""
    out = {}
    for j, block in enumerate(spec.blocks, start=1):
        e = spec.idems[j - 1]
        for l, (B, I) in enumerate(zip(block.subrings, block.ideals), start=2):
            label = f"A_{j}/I_{j}{l}"
            out[label] = subring_quotient(spec.base, B, I, e, label)
    return out


def _thm_4_6(spec: BlockExtensionSpec, lab: DimensionLab) -> BoundCheck:
    lab.notes.append(FG_NOTE)
    fd_A = lab.fd_interval(spec.base, "fd(A)")
    fd_P = lab.fd_interval(build_block_extension(spec).algebra, "fd(P)")
    parts = [lab.fd_interval(B, f"fd({label})") for label, B in _block_components(spec).items()]
    shift = spec.total_size - spec.m
    return lab.finish("thm_4_6", _name(spec), [
        Inequality("fd(A) - 1 <= fd(P)", fd_A - 1, fd_P, FINITISTIC_KIND),
        Inequality("fd(P) <= fd(A) + sum fd(A_j/I_ji) + sum n_i - m", fd_P,
                   fd_A + interval_sum(parts) + shift, FINITISTIC_KIND),
    ])


def _implication(label: str, premise: bool, conclusion: bool, note: str) -> Inequality:
    if not premise:
        status = SKIPPED
    else:
        status = STATUS_PASS if conclusion else STATUS_INCONCLUSIVE
    return Inequality(label, Interval.point(0), Interval.point(0), IMPLICATION_KIND, status, note)


def _cor_4_9(spec: BlockExtensionSpec, lab: DimensionLab) -> BoundCheck:
    lab.notes.append("finiteness is certified by finite gldim or self-injectivity only")
    rep_A = lab.fd(spec.base, "fd(A)")
    rep_P = lab.fd(build_block_extension(spec).algebra, "fd(P)")
    parts = [(label, lab.fd(B, f"fd({label})")) for label, B in _block_components(spec).items()]
    parts_ok = all(r is None or r.fd_certified for _, r in parts)
    return lab.finish("cor_4_9", _name(spec), [
        _implication("fd(A), fd(A_j/I_ji) finite => fd(P) finite",
                     rep_A.fd_certified and parts_ok, rep_P.fd_certified,
                     "" if rep_P.fd_certified else "fd(P) predicted finite, not certified"),
        _implication("fd(P) finite => fd(A) finite", rep_P.fd_certified, rep_A.fd_certified,
                     "" if rep_A.fd_certified else "fd(A) not certified"),
    ])


def _cor_4_10(spec: BlockExtensionSpec, lab: DimensionLab) -> BoundCheck:
    lab.notes.append(FG_NOTE)
    qf = is_self_injective(spec.base, lab.depth)
    lab.inputs["self_injective(A)"] = {"value": qf}
    rhs = Interval.point(spec.total_size - spec.m)
    if not qf:
        lab.notes.append("hypothesis not met: A is not self-injective")
        return lab.finish("cor_4_10", _name(spec), [
            Inequality("fd(P) <= sum n_i - m", Interval(0, INF), rhs, FINITISTIC_KIND,
                       STATUS_INCONCLUSIVE, "hypothesis not met")])
    fd_P = lab.fd_interval(build_block_extension(spec).algebra, "fd(P)")
    return lab.finish("cor_4_10", _name(spec), [
        Inequality("fd(P) <= sum n_i - m", fd_P, rhs, FINITISTIC_KIND)])


LAMBDA_CHECKS: Dict[str, Callable[[LambdaSpec, DimensionLab], BoundCheck]] = {
    "cor_1_2_fd": _cor_1_2_fd,
    "cor_1_2_gld": _cor_1_2_gld,
    "cor_4_11": _cor_4_11,
    "lemma_4_3_triangular": _lemma_4_3_triangular,
    "tilting_shift": _tilting_shift,
}

BLOCK_CHECKS: Dict[str, Callable[[BlockExtensionSpec, DimensionLab], BoundCheck]] = {
    "thm_4_6": _thm_4_6,
    "cor_4_9": _cor_4_9,
    "cor_4_10": _cor_4_10,
}

BOUND_NAMES: Tuple[str, ...] = tuple(LAMBDA_CHECKS) + tuple(BLOCK_CHECKS)


def check_bound(name: str, spec, depth: int = DEFAULT_DEPTH,
                budget: Optional[Budget] = None, seed: int = DEFAULT_SEED) -> BoundCheck:
    """
    Evaluate one named dimension statement on a spec.

    LambdaSpec subjects: cor_1_2_fd, cor_1_2_gld, cor_4_11,
    lemma_4_3_triangular, tilting_shift. BlockExtensionSpec subjects:
    thm_4_6, cor_4_9, cor_4_10.

    Raises:
        KeyError: unknown check name
        TypeError: the spec is of the wrong kind for the check
    """
    lab = DimensionLab({"depth": depth, "budget": budget or Budget(), "seed": seed})
    if name in LAMBDA_CHECKS:
        if not isinstance(spec, LambdaSpec):
            raise TypeError(f"{name} needs a LambdaSpec")
        runner = LAMBDA_CHECKS[name]
    elif name in BLOCK_CHECKS:
        if not isinstance(spec, BlockExtensionSpec):
            raise TypeError(f"{name} needs a BlockExtensionSpec")
        runner = BLOCK_CHECKS[name]
    else:
        raise KeyError(f"unknown bound {name!r}; known: {', '.join(BOUND_NAMES)}")
    try:
        return runner(spec, lab)
    except ZeroRingError as exc:
        lab.notes.append(f"hypothesis not met: {exc}")
        return lab.finish(name, _name(spec), [
            Inequality("rings involved are defined", Interval.point(0), Interval.point(0),
                       IMPLICATION_KIND, STATUS_INCONCLUSIVE, str(exc))])


# =============================================================================
# TILED TRIANGULAR HYPOTHESES
# =============================================================================

VERIFIED = "verified"
REFUTED = "refuted"


@dataclass(frozen=True)
class HypothesisRecord:
    """pd of I_{i+1,j+1}/I_{i,j+1} over A/I_{i,i+1} (1-based i < j ≤ n − 1)."""

    i: int
    j: int
    module_dim: int
    pd: PdValue

    @property
    def status(self) -> str:
        if self.pd.is_finite:
            return STATUS_PASS
        return STATUS_FAIL if self.pd.tag == INFINITE else STATUS_INCONCLUSIVE

    def to_dict(self) -> Dict:
        return {"i": self.i, "j": self.j, "module_dim": self.module_dim,
                "pd": self.pd.to_dict(), "status": self.status}


@dataclass
class TiledHypothesisReport:
    """Screen of the finiteness hypotheses for a tiled triangular ring Φ."""

    subject: str
    hypotheses: List[HypothesisRecord] = dc_field(default_factory=list)
    screens: Dict[str, Dict] = dc_field(default_factory=dict)
    verdict: str = STATUS_INCONCLUSIVE
    phi: Optional[DimReport] = None
    phi_consistent: Optional[bool] = None

    @property
    def status(self) -> str:
        if self.verdict == REFUTED:
            return STATUS_FAIL
        if self.verdict == VERIFIED:
            return STATUS_PASS if self.phi_consistent else STATUS_FAIL
        return STATUS_INCONCLUSIVE

    def to_dict(self) -> Dict:
        return {
            "subject": self.subject,
            "verdict": self.verdict,
            "status": self.status,
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "screens": dict(sorted(self.screens.items())),
            "phi": self.phi.to_dict() if self.phi else None,
            "phi_consistent": self.phi_consistent,
        }

    def summary(self) -> str:
        return (f"{self.subject}: hypotheses {self.verdict}, "
                f"{sum(h.status == STATUS_PASS for h in self.hypotheses)}/{len(self.hypotheses)} "
                f"pd conditions finite")


def _fd_screen(A: Optional[FdAlgebra], budget: Budget, seed: int, depth: int) -> Tuple[bool, Dict]:
    if A is None:
        return True, {"zero_ring": True, "certified": True}
    report = findim_estimate(A, budget, seed, depth)
    return report.fd_certified, dict(report.to_dict(), certified=report.fd_certified)


def check_prop_4_12_hypotheses(spec: TiledTriangularSpec, depth: int = DEFAULT_DEPTH,
                               budget: Optional[Budget] = None,
                               seed: int = DEFAULT_SEED) -> TiledHypothesisReport:
    """
    For 1 ≤ i < j ≤ n − 1, pd of I_{i+1,j+1}/I_{i,j+1} over A/I_{i,i+1};
    fd screens for A and every A/I_{i,i+1}. When everything is verified,
    the estimator runs on Φ and its lower bound is compared with a finite
    gldim of Φ.
    """
    budget = budget or Budget()
    A = spec.base
    full = Subspace.full(A.field, A.dim)
    report = TiledHypothesisReport(_name(spec))
    reg = regular_module(A)
    for i in range(1, spec.n):
        I_step = spec.entry(i, i + 1)
        Q = None if I_step.is_full else quotient(A, I_step, f"A/I_{i}{i + 1}")
        for j in range(i + 1, spec.n):
            X, Y = spec.entry(i + 1, j + 1), spec.entry(i, j + 1)
            if Q is None or X.issubspace(Y):
                report.hypotheses.append(HypothesisRecord(i, j, 0, PdValue.zero_module()))
                continue
            M = subquotient_module(reg, X, Y, f"I_{i + 1}{j + 1}/I_{i}{j + 1}")
            over = descend(M, Q, M.name)
            report.hypotheses.append(HypothesisRecord(i, j, over.dim, proj_dim(over, depth)))

    certified, report.screens["fd(A)"] = _fd_screen(A, budget, seed, depth)
    all_certified = certified
    for i in range(1, spec.n):
        B = subring_quotient(A, full, spec.entry(i, i + 1), A.unit, f"A/I_{i}{i + 1}")
        certified, report.screens[f"fd(A/I_{i}{i + 1})"] = _fd_screen(B, budget, seed, depth)
        all_certified &= certified

    statuses = [h.status for h in report.hypotheses]
    if STATUS_FAIL in statuses:
        report.verdict = REFUTED
    elif STATUS_INCONCLUSIVE in statuses or not all_certified:
        report.verdict = STATUS_INCONCLUSIVE
    else:
        report.verdict = VERIFIED
        Phi = build_tiled_triangular(spec).algebra
        report.phi = findim_estimate(Phi, budget, seed, depth)
        gl = report.phi.gldim
        report.phi_consistent = gl.tag != EXACT or report.phi.findim_lower <= gl.value
    logger.info("%s", report.summary())
    return report


if __name__ == "__main__":
    from .algebra import lower_triangular, matrix_algebra, truncated_polynomial
    from .field import FieldSpec

    F = FieldSpec.rationals()
    print("=" * 70)
    print("GLOBAL AND FINITISTIC DIMENSIONS")
    print("=" * 70)
    for B in (truncated_polynomial(F, 2), lower_triangular(F, 2), matrix_algebra(F, 2)):
        rep = findim_estimate(B, Budget(8, 4, 4))
        print(f"  {rep.summary()}; self-injective: {is_self_injective(B)}")
