"""Idempotent lifting along Q[eps]/(eps^k) -> Q and the corner calculus.

The nilpotent ideal of the model is always the ideal (eps) of the scalar
ring, whose nilpotency index is exactly k.  Everything here is exact:

* Newton iteration e <- 3e^2 - 2e^3 lifts an endomorphism whose
  realization is idempotent to an exact idempotent in <= ceil(log2 k)
  rounds;
* complete orthogonal families are lifted member by member and
  re-orthogonalized sequentially, the last member absorbing the defect;
* for two idempotents with the same realization, the corner element
  e = pi . pi~ . pi is a unit of the corner algebra pi A pi, and from its
  corner inverse one assembles explicit mutually inverse morphisms between
  the two summands;
* homologically trivial endomorphisms are nilpotent of index <= k.

Seeded perturbations used throughout the package are produced here:
integer matrices with entries in {-2..2}, parity-preserving, multiplied
by a positive power of eps.  All randomness flows through
``random.Random(seed)`` (the stdlib Mersenne Twister), so runs are
reproducible from the seed alone.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .supercat import SuperMorphism, SuperSpace, TruncatedScalar


# --- seeded perturbations -----------------------------------------------------


def seeded_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_parity_matrix(space: SuperSpace, rng: random.Random,
                         lo: int = -2, hi: int = 2) -> dict[tuple[int, int], int]:
    """Integer entries in [lo, hi] on the parity-allowed positions."""
    parities = space.parities
    out = {}
    for i in range(space.dim):
        for j in range(space.dim):
            if parities[i] != parities[j]:
                continue
            v = rng.randint(lo, hi)
            if v:
                out[(i, j)] = v
    return out


def eps_perturbation(space: SuperSpace, rng: random.Random,
                     order: int = 1) -> SuperMorphism:
    """eps^order times a random parity-preserving integer matrix."""
    k = space.k
    entries = {
        (i, j): TruncatedScalar.eps(k, order, v)
        for (i, j), v in random_parity_matrix(space, rng).items()
    }
    return SuperMorphism.from_entries(space, space, entries)


def seeded_unit(space: SuperSpace, rng: random.Random) -> SuperMorphism:
    """id + eps * N for a seeded parity-preserving N; always invertible."""
    return SuperMorphism.identity(space) + eps_perturbation(space, rng)


def random_hom_trivial(space: SuperSpace, rng: random.Random) -> SuperMorphism:
    """A random endomorphism with entries in the ideal (eps)."""
    k = space.k
    parities = space.parities
    entries = {}
    for i in range(space.dim):
        for j in range(space.dim):
            if parities[i] != parities[j]:
                continue
            coeffs = [0] + [rng.randint(-2, 2) for _ in range(k - 1)]
            if any(coeffs):
                entries[(i, j)] = TruncatedScalar(coeffs)
    return SuperMorphism.from_entries(space, space, entries)


def random_endomorphism(space: SuperSpace, rng: random.Random,
                        lo: int = -2, hi: int = 2) -> SuperMorphism:
    """A random endomorphism valid at every eps order.

    The realization part is drawn on the parity- and weight-allowed
    positions, the higher orders on the parity-allowed ones.
    """
    k = space.k
    parities = space.parities
    weights = space.weights
    entries = {}
    for i in range(space.dim):
        for j in range(space.dim):
            if parities[i] != parities[j]:
                continue
            head = rng.randint(lo, hi) if weights[i] == weights[j] else 0
            coeffs = [head] + [rng.randint(lo, hi) for _ in range(k - 1)]
            if any(coeffs):
                entries[(i, j)] = TruncatedScalar(coeffs)
    return SuperMorphism.from_entries(space, space, entries)


# --- Newton lifting --------------------------------------------------------------


def lift_idempotent(start: SuperMorphism) -> SuperMorphism:
    """An exact idempotent congruent to ``start`` mod eps.

    Requires the realization of ``start`` to be idempotent.  Already
    idempotent input is returned unchanged.  The Newton step squares the
    eps-order of the defect, so convergence takes at most ceil(log2 k)
    rounds.
    """
    if not start.is_endomorphism():
        raise ValueError("can only lift endomorphisms")
    if not start.realization().is_idempotent():
        raise ValueError("realization is not idempotent")
    e = start
    k = start.k
    rounds = max(1, math.ceil(math.log2(k))) if k > 1 else 1
    for _ in range(rounds + 1):
        e2 = e.compose(e)
        if e2 == e:
            return e
        e3 = e2.compose(e)
        e = e2.scale(3) - e3.scale(2)
    if e.compose(e) == e:
        return e
    raise RuntimeError("Newton iteration failed to converge")


# --- complete orthogonal families --------------------------------------------------


@dataclass(frozen=True)
class ProjectorFamily:
    """An ordered complete family of pairwise orthogonal idempotents."""

    ambient: SuperSpace
    members: tuple[SuperMorphism, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def validate(self) -> None:
        total = SuperMorphism.zero(self.ambient, self.ambient)
        for i, m in enumerate(self.members):
            if m.source != self.ambient or m.target != self.ambient:
                raise ValueError(f"member {i} does not live on the ambient space")
            if not m.is_idempotent():
                raise ValueError(f"member {i} is not idempotent")
            total = total + m
        if total != SuperMorphism.identity(self.ambient):
            raise ValueError("members do not sum to the identity")
        for i, a in enumerate(self.members):
            for j, b in enumerate(self.members):
                if i != j and not a.compose(b).is_zero():
                    raise ValueError(f"members {i} and {j} are not orthogonal")

    def realizations(self) -> tuple[SuperMorphism, ...]:
        return tuple(m.realization() for m in self.members)


def lift_family(residues: ProjectorFamily, k: int, seed: int = 0) -> ProjectorFamily:
    """Lift a k=1 family to an exact complete orthogonal family over k.

    A seeded eps-perturbation is applied to each member before Newton
    lifting, modeling the non-canonical choice of lifts; sequential
    orthogonalization then restores exactness, and the last member is
    defined as the identity minus the rest so completeness is exact by
    construction.
    """
    if residues.ambient.k != 1:
        raise ValueError("residues must live at truncation order 1")
    residues.validate()
    if k == 1:
        return residues
    ambient = residues.ambient.with_k(k)
    rng = seeded_rng(seed)
    ident = SuperMorphism.identity(ambient)
    lifted: list[SuperMorphism] = []
    partial = SuperMorphism.zero(ambient, ambient)
    for res in residues.members[:-1]:
        start = res.promoted(k) + eps_perturbation(ambient, rng)
        e = lift_idempotent(start)
        corner = (ident - partial).compose(e).compose(ident - partial)
        e = lift_idempotent(corner)
        lifted.append(e)
        partial = partial + e
    lifted.append(ident - partial)
    family = ProjectorFamily(ambient, tuple(lifted))
    family.validate()
    return family


def conjugating_unit(fam: ProjectorFamily, fam2: ProjectorFamily) -> SuperMorphism:
    """The unit u = sum(pi~_i . pi_i); it intertwines u . pi_i = pi~_i . u.

    Both families must be complete and orthogonal with equal realizations
    member by member.  u is congruent to the identity mod eps, hence
    invertible via ``supercat.invert_unit``.
    """
    if fam.ambient != fam2.ambient:
        raise ValueError("families live on different spaces")
    if len(fam) != len(fam2):
        raise ValueError("families have different lengths")
    for i, (a, b) in enumerate(zip(fam.members, fam2.members)):
        if a.realization() != b.realization():
            raise ValueError(f"members {i} have different realizations")
    u = SuperMorphism.zero(fam.ambient, fam.ambient)
    for a, b in zip(fam.members, fam2.members):
        u = u + b.compose(a)
    assert u.realization().is_identity()
    return u


# --- corner calculus ------------------------------------------------------------------


@dataclass
class CornerReport:
    """Result of comparing matching members of two projector families.

    ``e - pi`` always has zero realization.  When the defect is nonzero,
    ``corner_inverse`` inverts e within the corner algebra pi A pi, and
    the pair (iso_to, iso_from) realizes the two summands as isomorphic:
    iso_from . iso_to = pi and iso_to . iso_from = pi~ exactly.
    """

    e: SuperMorphism
    defect: SuperMorphism
    exact_equality: bool
    corner_inverse: SuperMorphism | None
    iso_to: SuperMorphism
    iso_from: SuperMorphism


def corner_unit_check(pi: SuperMorphism, pi2: SuperMorphism) -> CornerReport:
    """Evaluate e = pi . pi~ . pi and assemble the summand isomorphism."""
    for name, m in (("pi", pi), ("pi~", pi2)):
        if not m.is_idempotent():
            raise ValueError(f"{name} is not idempotent")
    if pi.realization() != pi2.realization():
        raise ValueError("the two idempotents have different realizations")
    e = pi.compose(pi2).compose(pi)
    defect = e - pi
    assert defect.is_hom_trivial()
    exact = defect.is_zero()
    if exact:
        corner_inverse = None
        v = pi
    else:
        # e = pi + d with d nilpotent in the corner algebra; invert by the
        # finite alternating geometric series
        v = pi
        term = defect
        sign = -1
        while not term.is_zero():
            v = v + term.scale(sign)
            term = term.compose(defect)
            sign = -sign
        corner_inverse = v
    iso_to = pi2.compose(pi)
    iso_from = v.compose(pi).compose(pi2)
    assert iso_from.compose(iso_to) == pi
    assert iso_to.compose(iso_from) == pi2
    return CornerReport(e=e, defect=defect, exact_equality=exact,
                        corner_inverse=corner_inverse,
                        iso_to=iso_to, iso_from=iso_from)


# --- nilpotency -----------------------------------------------------------------------


def nilpotency_index(f: SuperMorphism) -> int:
    """Smallest m with f^m = 0, for homologically trivial f; always <= k."""
    if not f.is_endomorphism():
        raise ValueError("nilpotency index of a non-endomorphism")
    if not f.is_hom_trivial():
        raise ValueError("endomorphism is not homologically trivial")
    power = f
    m = 1
    while not power.is_zero():
        power = power.compose(f)
        m += 1
        if m > f.k:
            raise AssertionError("hom-trivial endomorphism not nilpotent within k")
    return m


# --- rigidity -------------------------------------------------------------------------


@dataclass(frozen=True)
class RigidityBlock:
    s: int
    t: int
    is_zero: bool
    reason: str


@dataclass(frozen=True)
class MurreRigidityReport:
    within_hypotheses: bool
    hom_trivial: bool
    certified_zero: bool
    violations: tuple[tuple[int, int, str], ...]
    blocks: tuple[RigidityBlock, ...]

    def __bool__(self):
        return self.within_hypotheses and self.certified_zero


def murre_rigidity(blocks: ProjectorFamily, q: SuperMorphism) -> MurreRigidityReport:
    """Blockwise rigidity check against a weight-homogeneous family.

    The structural hypotheses are: off-diagonal blocks pi_t . q . pi_s
    (s != t) vanish, and diagonal corners carry no eps part.  Under these
    hypotheses a homologically trivial q is certified zero block by block;
    violated hypotheses are reported as such, not as a failure of the
    rigidity statement.
    """
    blocks.validate()
    _check_weight_homogeneous(blocks)
    if q.source != blocks.ambient or q.target != blocks.ambient:
        raise ValueError("q must be an endomorphism of the family's ambient space")
    violations: list[tuple[int, int, str]] = []
    decomposition: dict[tuple[int, int], SuperMorphism] = {}
    for s, ps in enumerate(blocks.members):
        for t, pt in enumerate(blocks.members):
            b = pt.compose(q).compose(ps)
            decomposition[(s, t)] = b
            if s != t and not b.is_zero():
                violations.append((s, t, "nonzero off-diagonal block"))
            if s == t and any(not sc.eps_part_is_zero() for _, _, sc in b.items()):
                violations.append((s, t, "diagonal corner has an eps part"))
    hom_trivial = q.is_hom_trivial()
    if violations:
        return MurreRigidityReport(
            within_hypotheses=False, hom_trivial=hom_trivial,
            certified_zero=False, violations=tuple(violations), blocks=())
    report_blocks = []
    all_zero = True
    for (s, t), b in sorted(decomposition.items()):
        if s != t:
            reason = "off-diagonal hom group vanishes"
        elif hom_trivial:
            reason = "zero realization and eps-free corner"
        else:
            reason = "diagonal corner determined by its realization"
        is_zero = b.is_zero()
        all_zero = all_zero and is_zero
        report_blocks.append(RigidityBlock(s=s, t=t, is_zero=is_zero, reason=reason))
    certified = hom_trivial and all_zero
    if hom_trivial:
        assert all_zero and q.is_zero()
    return MurreRigidityReport(
        within_hypotheses=True, hom_trivial=hom_trivial,
        certified_zero=certified, violations=(),
        blocks=tuple(report_blocks))


def _check_weight_homogeneous(fam: ProjectorFamily) -> None:
    weights = fam.ambient.weights
    for i, m in enumerate(fam.members):
        support = {weights[r] for r, _c, _s in m.realization().items()}
        if len(support) > 1:
            raise ValueError(
                f"member {i} is not weight-homogeneous (weights {sorted(support)})"
            )
