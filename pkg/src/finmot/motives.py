"""Concrete motive models built from Betti data.

A model is described by a `MotiveSpec`: a point, a power of the weight-2
line, a curve of genus g, a surface with irregularity q and second Betti
number b2 of which rho classes are algebraic, or an abelian variety of
dimension g.  Its realization is a graded space with parity = weight mod 2.

On top of the realization the module builds:

* Chow-Kunneth projector families (weight projectors, optionally
  conjugated by a seeded unit 1 + eps N to model non-canonical lifts);
* the surface projector relations (the transpose formula for the
  Albanese projector and the subtraction formula for the middle one);
* the three-step filtration on the zero-cycle model with graded pieces
  (Q, albanese part, kernel part);
* the splitting of the middle motive into rho weight-2 lines plus an
  evenly finite dimensional remainder;
* the antisymmetrized wedge of zero-cycle classes in the kernel part,
  and the resulting "kernel must vanish" conclusion for surfaces whose
  second cohomology is entirely algebraic;
* the multiplication-by-n eigenrelations on the abelian model.

The kernel dimension ``t`` is a free model parameter, not derived from
geometry; the theorems of the calculus constrain it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import SizeCapError
from .supercat import (
    SuperMorphism,
    SuperSpace,
    TruncatedScalar,
    exp_nilpotent,
    invert_unit,
)
from .karoubi import KaroubiObject
from .lifting import (
    ProjectorFamily,
    eps_perturbation,
    random_parity_matrix,
    seeded_rng,
)

KINDS = ("point", "lefschetz", "curve", "surface", "abelian")


@dataclass(frozen=True)
class MotiveSpec:
    """Betti-data description of a motive model.

    Fields not used by a kind are ignored for it.  For surfaces the model
    identifies "geometric genus zero" with b2 = rho, so ``pg`` must be 0
    exactly when every weight-2 class is algebraic.
    """

    kind: str
    g: int = 0
    q: int = 0
    pg: int = 0
    b2: int = 0
    rho: int = 0
    r: int = 0
    k: int = 1
    seed: int = 0
    t: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if self.k < 1:
            raise ValueError("truncation order k must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        if self.t < 0:
            raise ValueError("kernel dimension t must be nonnegative")
        if self.kind in ("curve", "abelian") and self.g < 0:
            raise ValueError("genus must be nonnegative")
        if self.kind == "surface":
            if self.q < 0:
                raise ValueError("irregularity q must be nonnegative")
            if not 1 <= self.rho <= self.b2:
                raise ValueError("need 1 <= rho <= b2 for a surface model")
            if (self.pg == 0) != (self.b2 == self.rho):
                raise ValueError("pg = 0 exactly when b2 = rho in this model")
            if self.pg < 0:
                raise ValueError("pg must be nonnegative")

    @property
    def motive_dimension(self) -> int:
        """Half the top weight of the realization."""
        if self.kind == "point":
            return 0
        if self.kind == "lefschetz":
            return self.r
        if self.kind == "curve":
            return 1
        if self.kind == "surface":
            return 2
        return self.g

    @property
    def d_param(self) -> int:
        """b2 - rho, the transcendental dimension of the surface model."""
        return self.b2 - self.rho


def build_realization(spec: MotiveSpec) -> SuperSpace:
    """The graded space of the model; parity is weight mod 2."""
    if spec.kind == "point":
        dims = {0: 1}
    elif spec.kind == "lefschetz":
        dims = {2 * spec.r: 1}
    elif spec.kind == "curve":
        dims = {0: 1, 1: 2 * spec.g, 2: 1}
    elif spec.kind == "surface":
        dims = {0: 1, 1: 2 * spec.q, 2: spec.b2, 3: 2 * spec.q, 4: 1}
    else:
        dims = {i: math.comb(2 * spec.g, i) for i in range(2 * spec.g + 1)}
    basis = []
    for w in sorted(dims):
        basis.extend(((w % 2, w),) * dims[w])
    return SuperSpace(tuple(basis), spec.k)


def weight_projector(space: SuperSpace, w: int) -> SuperMorphism:
    one = TruncatedScalar.one(space.k)
    rows = {i: {i: one} for i, wi in enumerate(space.weights) if wi == w}
    return SuperMorphism(space, space, rows, _trusted=True)


def _family_weights(spec: MotiveSpec) -> list[int]:
    if spec.kind == "point":
        return [0]
    if spec.kind == "lefschetz":
        return [2 * spec.r]
    return list(range(2 * spec.motive_dimension + 1))


def _transpose_partner(space: SuperSpace, top: int) -> list[int]:
    """Index map pairing the a-th vector of weight w with the a-th of top-w."""
    by_weight: dict[int, list[int]] = {}
    for i, w in enumerate(space.weights):
        by_weight.setdefault(w, []).append(i)
    partner = [0] * space.dim
    for w, idxs in by_weight.items():
        mates = by_weight.get(top - w, [])
        if len(mates) != len(idxs):
            raise ValueError(f"weights {w} and {top - w} have different multiplicities")
        for a, i in enumerate(idxs):
            partner[i] = mates[a]
    return partner


def weight_transpose(f: SuperMorphism, partner: Sequence[int]) -> SuperMorphism:
    """Adjoint of ``f`` under the pairing of weight w with weight top-w."""
    entries = {}
    for i, j, s in f.items():
        entries[(partner[j], partner[i])] = s
    return SuperMorphism.from_entries(f.source, f.target, entries, _trusted=True)


def _family_unit(spec: MotiveSpec, space: SuperSpace,
                 respect_pairing: bool) -> SuperMorphism | None:
    """The seeded unit conjugating the weight projectors; None when seed = 0.

    With ``respect_pairing`` the unit is exp(eps S) with S antisymmetric
    for the weight pairing, so conjugation commutes with the transpose and
    the surface projector relations transport to the perturbed family.
    """
    if spec.seed == 0 or spec.k == 1:
        return None
    rng = seeded_rng(spec.seed)
    if not respect_pairing:
        return SuperMorphism.identity(space) + eps_perturbation(space, rng)
    top = 2 * spec.motive_dimension
    partner = _transpose_partner(space, top)
    raw = random_parity_matrix(space, rng)
    n = SuperMorphism.from_entries(
        space, space,
        {(i, j): TruncatedScalar.eps(space.k, 1, v) for (i, j), v in raw.items()})
    s = n - weight_transpose(n, partner)
    return exp_nilpotent(s)


def chow_kunneth(spec: MotiveSpec, respect_pairing: bool = False) -> ProjectorFamily:
    """A complete orthogonal family lifting the weight projectors.

    Seed 0 gives the weight projectors themselves; any other seed
    conjugates them by a unit congruent to the identity mod eps, so all
    realizations are unchanged.
    """
    space = build_realization(spec)
    members = [weight_projector(space, w) for w in _family_weights(spec)]
    u = _family_unit(spec, space, respect_pairing)
    if u is not None:
        uinv = invert_unit(u)
        members = [uinv.compose(m).compose(u) for m in members]
    return ProjectorFamily(space, tuple(members))


# --- surface projector relations ---------------------------------------------------


@dataclass(frozen=True)
class RelationCheck:
    name: str
    passed: bool
    defect: SuperMorphism | None


@dataclass(frozen=True)
class SurfaceRelationsReport:
    spec: MotiveSpec
    checks: tuple[RelationCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def surface_projector_relations(spec: MotiveSpec,
                                family: ProjectorFamily | None = None
                                ) -> SurfaceRelationsReport:
    """Check the transpose and subtraction formulas on a surface family.

    The Albanese projector is rebuilt from the Picard one as
    pi1^t - pi1 . pi1^t and must be an idempotent orthogonal to the rest;
    the middle projector rebuilt by subtraction must be idempotent.
    Failures are reported with their defect matrices, not raised.
    """
    if spec.kind != "surface":
        raise ValueError("projector relations are a surface operation")
    if family is None:
        family = chow_kunneth(spec, respect_pairing=True)
    space = family.ambient
    p0, p1, p2, p3, p4 = family.members
    partner = _transpose_partner(space, 4)
    t1 = weight_transpose(p1, partner)
    albanese = t1 - p1.compose(t1)
    ident = SuperMorphism.identity(space)
    middle = ident - p0 - p1 - albanese - p4
    checks = []

    def record(name, lhs, rhs):
        defect = lhs - rhs
        checks.append(RelationCheck(name=name, passed=defect.is_zero(),
                                    defect=None if defect.is_zero() else defect))

    record("albanese_idempotent", albanese.compose(albanese), albanese)
    record("albanese_matches_family", albanese, p3)
    for i, other in ((0, p0), (1, p1), (4, p4)):
        record(f"albanese_orthogonal_left_{i}",
               albanese.compose(other), SuperMorphism.zero(space, space))
        record(f"albanese_orthogonal_right_{i}",
               other.compose(albanese), SuperMorphism.zero(space, space))
    record("middle_idempotent", middle.compose(middle), middle)
    record("middle_matches_family", middle, p2)
    return SurfaceRelationsReport(spec=spec, checks=tuple(checks))


# --- the zero-cycle model and its filtration ------------------------------------------


@dataclass(frozen=True)
class ChowModel:
    """Model of the surface's zero-cycle group: Q^(1 + q + t).

    Coordinates are blocked as [degree | albanese | kernel].  The top
    projector acts as the degree block, the Albanese projector as the
    albanese block, the middle projector as the kernel block; the
    filtration is literally the chain of kernels of those actions.
    """

    q: int
    t: int
    d_param: int

    @property
    def total_dim(self) -> int:
        return 1 + self.q + self.t

    def action_of_member(self, i: int) -> tuple[tuple[Fraction, ...], ...]:
        """Block projector matrix by which family member ``i`` acts."""
        blocks = {4: (0, 1), 3: (1, 1 + self.q), 2: (1 + self.q, self.total_dim)}
        lo, hi = blocks.get(i, (0, 0))
        n = self.total_dim
        return tuple(
            tuple(Fraction(1) if (r == c and lo <= r < hi) else Fraction(0)
                  for c in range(n))
            for r in range(n)
        )

    def filtration_dims(self) -> tuple[int, int, int, int]:
        """Dims of the kernel chain: full, ker(top), ker(top) ^ ker(alb), then 0."""
        dims = [self.total_dim]
        stacked: list[tuple[Fraction, ...]] = []
        for member in (4, 3, 2):
            stacked.extend(self.action_of_member(member))
            dims.append(self.total_dim - _rank(stacked))
        return tuple(dims)

    def graded_dims(self) -> tuple[int, int, int]:
        f0, f1, f2, f3 = self.filtration_dims()
        return (f0 - f1, f1 - f2, f2 - f3)


def _rank(rows: list[tuple[Fraction, ...]]) -> int:
    mat = [list(r) for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = Fraction(1) / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def murre_filtration(spec: MotiveSpec, t_param: int | None = None) -> ChowModel:
    """The zero-cycle model with its three-step filtration."""
    if spec.kind != "surface":
        raise ValueError("the filtration model is a surface operation")
    t = spec.t if t_param is None else t_param
    if t < 0:
        raise ValueError("t must be nonnegative")
    model = ChowModel(q=spec.q, t=t, d_param=spec.d_param)
    assert model.filtration_dims() == (1 + spec.q + t, spec.q + t, t, 0)
    assert model.graded_dims() == (1, spec.q, t)
    return model


def graded_action(spec: MotiveSpec, f: SuperMorphism) -> tuple:
    """Realization blocks of ``f`` in weights 4, 3, 2.

    The graded pieces of the zero-cycle model see a correspondence only
    through these blocks, so a homologically trivial correspondence acts
    as zero on every graded piece.
    """
    space = build_realization(spec)
    if f.source != space or f.target != space:
        raise ValueError("f must be an endomorphism of the surface realization")
    r = f.realization()
    out = []
    for w in (4, 3, 2):
        idxs = [i for i, wi in enumerate(space.weights) if wi == w]
        block = tuple(
            tuple(r.entry(i, j).realization() for j in idxs) for i in idxs
        )
        out.append(block)
    return tuple(out)


def acts_as_zero_on_gradeds(spec: MotiveSpec, f: SuperMorphism) -> bool:
    return all(
        all(not v for row in block for v in row) for block in graded_action(spec, f)
    )


# --- the middle motive splitting -------------------------------------------------------


@dataclass(frozen=True)
class MiddleSplit:
    """The middle motive split as rho weight-2 lines plus a remainder.

    ``kernel_in_ambient`` is the remainder as a summand of the full
    realization; ``kernel`` is the same object transported onto its
    natural (b2 - rho)-dimensional ambient through the explicit
    isomorphism pair (``embed``, ``project``), which satisfies
    project . embed = id and embed . project = the ambient idempotent.
    Classification runs on the compressed copy.
    """

    rho: int
    middle: KaroubiObject
    line_summands: tuple[KaroubiObject, ...]
    kernel: KaroubiObject
    kernel_in_ambient: KaroubiObject
    embed: SuperMorphism
    project: SuperMorphism


def split_middle(spec: MotiveSpec) -> MiddleSplit:
    """Split the middle motive as rho weight-2 lines plus a remainder.

    The remainder is evenly finite dimensional of dimension b2 - rho; the
    algebraic classes are modeled by the first rho weight-2 basis vectors
    (conjugated along with the family when the spec is seeded).
    """
    if spec.kind != "surface":
        raise ValueError("the middle splitting is a surface operation")
    family = chow_kunneth(spec)
    space = family.ambient
    u = _family_unit(spec, space, respect_pairing=False)
    uinv = invert_unit(u) if u is not None else None
    weight2 = [i for i, w in enumerate(space.weights) if w == 2]
    one = TruncatedScalar.one(spec.k)
    lines = []
    for a in range(spec.rho):
        idx = weight2[a]
        proj = SuperMorphism(space, space, {idx: {idx: one}}, _trusted=True)
        if u is not None:
            proj = uinv.compose(proj).compose(u)
        lines.append(KaroubiObject(space, proj, check=False))
    middle = KaroubiObject(space, family[2], check=False)
    total_lines = SuperMorphism.zero(space, space)
    for line in lines:
        total_lines = total_lines + line.idem
    kernel_in_ambient = KaroubiObject(space, family[2] - total_lines, check=False)
    rest = weight2[spec.rho:]
    small = SuperSpace(tuple(space.basis[i] for i in rest), spec.k)
    embed = SuperMorphism.from_entries(
        small, space, {(idx, a): one for a, idx in enumerate(rest)}, _trusted=True)
    project = SuperMorphism.from_entries(
        space, small, {(a, idx): one for a, idx in enumerate(rest)}, _trusted=True)
    if u is not None:
        embed = uinv.compose(embed)
        project = project.compose(u)
    assert project.compose(embed) == SuperMorphism.identity(small)
    assert embed.compose(project) == kernel_in_ambient.idem
    kernel = KaroubiObject.full(small)
    return MiddleSplit(rho=spec.rho, middle=middle,
                       line_summands=tuple(lines), kernel=kernel,
                       kernel_in_ambient=kernel_in_ambient,
                       embed=embed, project=project)


# --- the wedge of zero-cycles -----------------------------------------------------------


def albanese_wedge(cycles: Sequence[Sequence], t_dim: int | None = None
                   ) -> dict[tuple[int, ...], Fraction]:
    """Antisymmetrized tensor of vectors in the kernel part.

    Returns the element of the n-fold tensor power of Q^t as a sparse map
    from index tuples to coefficients (empty = zero).  The value is
    (1/n!) sum over permutations of sign times the reordered outer
    product, which vanishes whenever the cycles are linearly dependent,
    in particular whenever n exceeds the kernel dimension.
    """
    vectors = [tuple(Fraction(c) for c in cyc) for cyc in cycles]
    if not vectors:
        raise ValueError("need at least one cycle")
    t = len(vectors[0]) if t_dim is None else t_dim
    if any(len(v) != t for v in vectors):
        raise ValueError("cycles must all live in the same kernel part")
    n = len(vectors)
    nfact = math.factorial(n)
    out: dict[tuple[int, ...], Fraction] = {}
    for idx in itertools.product(range(t), repeat=n):
        total = Fraction(0)
        for perm in itertools.permutations(range(n)):
            sign = _perm_sign(perm)
            prod = Fraction(sign)
            for slot, which in enumerate(perm):
                prod *= vectors[which][idx[slot]]
                if not prod:
                    break
            total += prod
        if total:
            out[idx] = total / nfact
    return out


def _perm_sign(perm: tuple[int, ...]) -> int:
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


# --- conclusions for surfaces with all of weight 2 algebraic ----------------------------


@dataclass(frozen=True)
class KernelVanishingVerdict:
    consistent: bool | None
    t: int
    finite_dimensional: bool
    motive_shape: str | None
    notes: tuple[str, ...]


def pg_zero_conclusion(spec: MotiveSpec, t_param: int | None = None,
                       finite_dimensional: bool = True) -> KernelVanishingVerdict:
    """For a surface with b2 = rho: finite dimensionality forces t = 0.

    When b2 = rho the transcendental dimension d is 0, so the wedge of any
    single kernel class must vanish, i.e. the kernel part itself is zero.
    With q = 0 as well, the motive has the split shape
    1 + b2 copies of the weight-2 line + its square.
    """
    if spec.kind != "surface":
        raise ValueError("this conclusion is a surface operation")
    if spec.pg != 0:
        raise ValueError("outside hypotheses: the model requires pg = 0 (b2 = rho)")
    t = spec.t if t_param is None else t_param
    notes = []
    if not finite_dimensional:
        notes.append("no finite-dimensionality flag: the kernel is unconstrained")
        return KernelVanishingVerdict(consistent=None, t=t, finite_dimensional=False,
                                      motive_shape=None, notes=tuple(notes))
    consistent = t == 0
    if consistent:
        notes.append("d = b2 - rho = 0, and the kernel part is zero as required")
    else:
        notes.append(
            f"d = 0 forces every single kernel class to vanish, but t = {t} > 0"
        )
    shape = None
    if spec.q == 0 and consistent:
        shape = f"1 + {spec.b2}L + L^2"
        notes.append("q = 0: the motive splits as " + shape)
    return KernelVanishingVerdict(consistent=consistent, t=t,
                                  finite_dimensional=True,
                                  motive_shape=shape, notes=tuple(notes))


def trivial_shape_dims(spec: MotiveSpec) -> dict[int, int]:
    """Weight multiplicities of 1 + b2 L + L^2; must match the realization."""
    return {0: 1, 2: spec.b2, 4: 1}


# --- abelian eigenrelations --------------------------------------------------------------


@dataclass(frozen=True)
class AbelianActionReport:
    g: int
    n: int
    eigenvalues: tuple[int, ...]
    holds: bool
    failures: tuple[str, ...]


def abelian_multiplication_action(g: int, n: int, k: int = 1) -> AbelianActionReport:
    """Verify the multiplication-by-n eigenrelations on the abelian model.

    The realization is the exterior algebra on 2g odd weight-1 generators;
    multiplication by n acts as n^i on weight i, and must satisfy
    nstar . pi_i = pi_i . nstar = n^i pi_i for every weight projector.
    """
    if g > 3:
        raise SizeCapError(f"abelian dimension g = {g} exceeds the guard 3")
    if abs(n) > 5:
        raise ValueError(f"|n| = {abs(n)} exceeds the guard 5")
    spec = MotiveSpec(kind="abelian", g=g, k=k)
    space = build_realization(spec)
    nstar = SuperMorphism.diagonal(
        space, [TruncatedScalar.of(n**w, k) for w in space.weights]
    )
    failures = []
    eigen = tuple(n**i for i in range(2 * g + 1))
    for i in range(2 * g + 1):
        pi = weight_projector(space, i)
        scaled = pi.scale(eigen[i])
        if nstar.compose(pi) != scaled:
            failures.append(f"nstar . pi_{i} != n^{i} pi_{i}")
        if pi.compose(nstar) != scaled:
            failures.append(f"pi_{i} . nstar != n^{i} pi_{i}")
    return AbelianActionReport(g=g, n=n, eigenvalues=eigen,
                               holds=not failures, failures=tuple(failures))
