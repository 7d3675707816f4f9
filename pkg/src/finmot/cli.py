"""Command-line harness.

Subcommands:

* ``chars N``            -- the character table of S_N
* ``schur``              -- dimension / rank / zero verdict of a Schur image
* ``verify SUITE``       -- run a named invariant suite over a parameter grid
* ``surface PATH``       -- full surface pipeline from a model description file

Reports are deterministic for a fixed (config, seed): checks are keyed and
sorted, no timestamps or floats enter the payload, and wall-clock timing is
written to stderr only.  Exit codes: 0 all checks passed, 1 verification
failure, 2 usage or parse error, 3 size-cap error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ModelFileError, SizeCapError
from .symgroup import (
    GroupAlgebraElement,
    Partition,
    all_permutations,
    character,
    conjugacy_class_size,
    hook_dimension,
    partitions,
    young_idempotent,
)
from .supercat import (
    SuperMorphism,
    SuperSpace,
    invert_unit,
    permutation_action,
    trace,
)
from . import karoubi
from .karoubi import (
    KaroubiObject,
    classify,
    s_wedge,
    schur_apply,
    schur_super_dimension,
    split_parity,
    sym,
    wedge,
)
from . import lifting
from .lifting import (
    ProjectorFamily,
    conjugating_unit,
    corner_unit_check,
    eps_perturbation,
    lift_family,
    lift_idempotent,
    murre_rigidity,
    nilpotency_index,
    random_hom_trivial,
    seeded_rng,
    seeded_unit,
)
from .motives import (
    MotiveSpec,
    abelian_multiplication_action,
    acts_as_zero_on_gradeds,
    albanese_wedge,
    build_realization,
    chow_kunneth,
    murre_filtration,
    pg_zero_conclusion,
    split_middle,
    surface_projector_relations,
)

SCHEMA = "finmot-report/1"


@dataclass
class Check:
    id: str
    passed: bool
    detail: str = ""


@dataclass
class RunConfig:
    command: str
    out_format: str = "pretty"
    seed: int = 0
    cap: int = karoubi.SCHUR_DIM_CAP
    k: int = 2
    grid: dict = field(default_factory=dict)
    file: str | None = None
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.cap <= 0:
            raise ValueError("--cap must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("--seed must be an unsigned 64-bit integer")


@dataclass
class Report:
    command: str
    config: dict
    results: dict
    checks: list[Check]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def sorted_checks(self) -> list[Check]:
        return sorted(self.checks, key=lambda c: c.id)

    def to_json(self) -> str:
        payload = {
            "schema": SCHEMA,
            "command": self.command,
            "config": self.config,
            "results": self.results,
            "checks": [
                {"id": c.id, "passed": c.passed, "detail": c.detail}
                for c in self.sorted_checks()
            ],
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["check_id", "passed", "detail"])
        for c in self.sorted_checks():
            writer.writerow([c.id, "pass" if c.passed else "fail", c.detail])
        return buf.getvalue()

    def to_pretty(self) -> str:
        lines = [f"command: {self.command}"]
        for key in sorted(self.config):
            lines.append(f"  {key} = {self.config[key]}")
        if self.results:
            lines.append("results:")
            lines.extend(_pretty_results(self.results, indent=2))
        if self.checks:
            lines.append("checks:")
            for c in self.sorted_checks():
                mark = "PASS" if c.passed else "FAIL"
                suffix = f": {c.detail}" if c.detail else ""
                lines.append(f"  [{mark}] {c.id}{suffix}")
            n_pass = sum(1 for c in self.checks if c.passed)
            lines.append(f"{n_pass}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_pretty()


def _pretty_results(obj, indent: int) -> list[str]:
    pad = " " * indent
    lines = []
    if isinstance(obj, dict):
        for key in obj:
            val = obj[key]
            if isinstance(val, dict) and val:
                lines.append(f"{pad}{key}:")
                lines.extend(_pretty_results(val, indent + 2))
            elif isinstance(val, list) and val and not _is_flat(val):
                lines.append(f"{pad}{key}:")
                lines.extend(_pretty_results(val, indent + 2))
            else:
                lines.append(f"{pad}{key} = {val}")
    elif isinstance(obj, list):
        for val in obj:
            if isinstance(val, dict):
                lines.extend(_pretty_results(val, indent))
            elif isinstance(val, list):
                lines.append(f"{pad}- {val}")
            else:
                lines.append(f"{pad}- {val}")
    return lines


def _is_flat(val) -> bool:
    if isinstance(val, list):
        return all(not isinstance(v, (dict, list)) for v in val)
    return False


def _plabel(lam: Partition) -> str:
    return ".".join(str(p) for p in lam.parts) if lam.parts else "0"


def _defect_string(m) -> str:
    """Compact deterministic rendering of a defect matrix's entries."""
    bits = [f"({i},{j})={s}" for i, j, s in sorted(m.items(), key=lambda t: t[:2])]
    return "defect " + "; ".join(bits) if bits else "defect 0"


# --- chars ---------------------------------------------------------------------


def cmd_chars(cfg: RunConfig) -> Report:
    n = cfg.params["n"]
    rows = partitions(n)
    cols = list(reversed(rows))  # identity class first
    table = [[character(lam, ct) for ct in cols] for lam in rows]
    results = {
        "n": n,
        "rows": [list(lam.parts) for lam in rows],
        "columns": [list(ct.parts) for ct in cols],
        "table": table,
    }
    checks = [
        Check(id=f"chars/row-count-n{n}", passed=len(table) == len(rows)),
        Check(
            id=f"chars/first-column-is-dimension-n{n}",
            passed=all(row[0] == hook_dimension(lam) for row, lam in zip(table, rows)),
        ),
    ]
    return Report("chars", _config_dict(cfg), results, checks)


# --- schur ---------------------------------------------------------------------


def _seeded_identity_object(p: int, q: int, k: int, seed: int) -> KaroubiObject:
    """The (p|q) object; any seeded eps-perturbation of the identity lifts
    back to the identity, which is asserted."""
    space = SuperSpace.standard(p, q, k)
    idem = SuperMorphism.identity(space)
    if seed and k > 1:
        start = idem + eps_perturbation(space, seeded_rng(seed))
        lifted = lift_idempotent(start)
        assert lifted == idem
        idem = lifted
    return KaroubiObject(space, idem, check=False)


def cmd_schur(cfg: RunConfig) -> Report:
    lam = cfg.params["lam"]
    p, q = cfg.params["p"], cfg.params["q"]
    obj = _seeded_identity_object(p, q, cfg.k, cfg.seed)
    image = schur_apply(lam, obj, cap=cfg.cap)
    super_dim = image.dimension()
    by_characters = schur_super_dimension(lam, obj)
    results = {
        "lam": list(lam.parts),
        "p": p,
        "q": q,
        "k": cfg.k,
        "seed": cfg.seed,
        "super_dimension": super_dim,
        "classical_rank": image.classical_rank(),
        "is_zero": image.is_zero(),
    }
    checks = [
        Check(
            id="schur/dimension-two-ways",
            passed=Fraction(super_dim) == by_characters,
            detail=f"trace {super_dim}, character sum {by_characters}",
        )
    ]
    return Report("schur", _config_dict(cfg), results, checks)


# --- verify suites ----------------------------------------------------------------


def _suite_symmetrizers(cfg: RunConfig) -> tuple[dict, list[Check]]:
    checks = []
    nmax = cfg.grid.get("n", 5)
    for n in range(nmax + 1):
        parts = partitions(n)
        idems = {lam: young_idempotent(lam) for lam in parts}
        total = GroupAlgebraElement(n)
        for d in idems.values():
            total = total + d
        checks.append(Check(f"symmetrizers/sum-to-identity-n{n}",
                            total == GroupAlgebraElement.identity(n)))
        for i, lam in enumerate(parts):
            for mu in parts[i:]:
                prod = idems[lam] * idems[mu]
                expected = idems[lam] if lam == mu else GroupAlgebraElement(n)
                checks.append(Check(
                    f"symmetrizers/orthogonality-n{n}-{_plabel(lam)}-{_plabel(mu)}",
                    prod == expected))
    for n in range(1, nmax + 1):
        parts = partitions(n)
        nfact = math.factorial(n)
        ok = True
        for i, lam in enumerate(parts):
            for mu in parts[i:]:
                total = sum(
                    conjugacy_class_size(ct) * character(lam, ct) * character(mu, ct)
                    for ct in parts
                )
                if total != (nfact if lam == mu else 0):
                    ok = False
        checks.append(Check(f"symmetrizers/column-orthogonality-n{n}", ok))
    for n in range(0, max(8, nmax) + 1):
        total = sum(hook_dimension(lam) ** 2 for lam in partitions(n))
        checks.append(Check(f"symmetrizers/sum-of-squares-n{n}",
                            total == math.factorial(n)))
    return {}, checks


def _suite_supertrace(cfg: RunConfig) -> tuple[dict, list[Check]]:
    checks = []
    nmax = cfg.grid.get("n", 4)
    pmax, qmax = cfg.grid.get("p", 2), cfg.grid.get("q", 2)
    for p in range(pmax + 1):
        for q in range(qmax + 1):
            if p == q == 0:
                continue
            space = SuperSpace.standard(p, q, 1)
            for n in range(1, nmax + 1):
                ok = True
                for sigma in all_permutations(n):
                    got = trace(permutation_action(sigma, space, n, cap=cfg.cap))
                    want = Fraction(p - q) ** len(sigma.cycles())
                    if got.realization() != want or not got.eps_part_is_zero():
                        ok = False
                        break
                checks.append(Check(f"supertrace/p{p}q{q}n{n}", ok))
    return {}, checks


def _suite_kimura_dim(cfg: RunConfig) -> tuple[dict, list[Check]]:
    checks = []
    pmax = cfg.grid.get("p", 3)
    qmax = cfg.grid.get("q", 3)
    kmax = cfg.grid.get("k", 3)
    seeds = cfg.grid.get("seeds", 25)
    for k in range(1, kmax + 1):
        for d in range(1, pmax + 1):
            ok = True
            for s in range(seeds):
                obj = _seeded_identity_object(d, 0, k, cfg.seed + s + 1)
                for n in range(1, d + 2):
                    if wedge(n, obj, cap=cfg.cap).dimension() != math.comb(d, n):
                        ok = False
                    if sym(n, obj, cap=cfg.cap).dimension() != math.comb(d + n - 1, n):
                        ok = False
            checks.append(Check(f"kimura-dim/even-d{d}-k{k}", ok,
                                detail=f"{seeds} seeds"))
        for q in range(1, qmax + 1):
            ok = True
            for s in range(seeds):
                obj = _seeded_identity_object(0, q, k, cfg.seed + s + 1)
                for n in range(1, q + 2):
                    # dim X = -q, so dim(S^n X) = C(-q+n-1, n) = (-1)^n C(q, n)
                    sm = sym(n, obj, cap=cfg.cap)
                    if sm.dimension() != (-1) ** n * math.comb(q, n):
                        ok = False
                    if sm.classical_rank() != math.comb(q, n):
                        ok = False
                    w = wedge(n, obj, cap=cfg.cap)
                    if w.dimension() != (-1) ** n * math.comb(q + n - 1, n):
                        ok = False
                    if w.classical_rank() != math.comb(q + n - 1, n):
                        ok = False
            checks.append(Check(f"kimura-dim/odd-q{q}-k{k}", ok,
                                detail=f"{seeds} seeds"))
    return {}, checks


def _suite_vanishing(cfg: RunConfig) -> tuple[dict, list[Check]]:
    checks = []
    pmax = cfg.grid.get("p", 2)
    qmax = cfg.grid.get("q", 2)
    kmax = cfg.grid.get("k", 3)
    seeds = cfg.grid.get("seeds", 25)
    for k in range(1, kmax + 1):
        for p in range(pmax + 1):
            for q in range(qmax + 1):
                ok = True
                for s in range(seeds):
                    obj = _seeded_identity_object(p, q, k, cfg.seed + s + 1)
                    split = split_parity(obj)
                    if not wedge(p + 1, split[0], cap=cfg.cap).is_zero():
                        ok = False
                    if not sym(q + 1, split[1], cap=cfg.cap).is_zero():
                        ok = False
                    if not s_wedge(p + q + 1, obj, split, cap=cfg.cap).is_zero():
                        ok = False
                    if s_wedge(p + q, obj, split, cap=cfg.cap).is_zero():
                        ok = False
                checks.append(Check(f"vanishing/p{p}q{q}k{k}", ok,
                                    detail=f"{seeds} seeds"))
    return {}, checks


def _suite_lifting(cfg: RunConfig) -> tuple[dict, list[Check]]:
    checks = []
    kmax = cfg.grid.get("k", 4)
    seeds = cfg.grid.get("seeds", 25)
    for k in range(1, kmax + 1):
        space = SuperSpace.standard(2, 1, k)
        ok_lift = True
        for s in range(seeds):
            rng = seeded_rng(cfg.seed + s + 1)
            base = SuperMorphism.diagonal(
                space, [1, 0, rng.randint(0, 1)])
            start = base + eps_perturbation(space, rng)
            e = lift_idempotent(start)
            if not e.is_idempotent() or e.realization() != base.realization():
                ok_lift = False
        checks.append(Check(f"lifting/newton-k{k}", ok_lift, detail=f"{seeds} seeds"))
        residues = ProjectorFamily(
            space.with_k(1),
            (SuperMorphism.diagonal(space.with_k(1), [1, 0, 0]),
             SuperMorphism.diagonal(space.with_k(1), [0, 1, 0]),
             SuperMorphism.diagonal(space.with_k(1), [0, 0, 1])))
        ok_family = True
        for s in range(min(seeds, 10)):
            fam = lift_family(residues, k, seed=cfg.seed + s + 1)
            try:
                fam.validate()
            except ValueError:
                ok_family = False
        checks.append(Check(f"lifting/family-k{k}", ok_family))
    return {}, checks


def _suite_uniqueness(cfg: RunConfig) -> tuple[dict, list[Check]]:
    checks = []
    kmax = cfg.grid.get("k", 4)
    seeds = cfg.grid.get("seeds", 25)
    stats = {}
    for k in range(2, kmax + 1):
        space = SuperSpace.standard(2, 2, k)
        base = ProjectorFamily(space, tuple(
            SuperMorphism.diagonal(space, [int(i == j) for j in range(4)])
            for i in range(4)))
        exact = 0
        ok = True
        for s in range(seeds):
            u = seeded_unit(space, seeded_rng(cfg.seed + s + 1))
            uinv = invert_unit(u)
            other = ProjectorFamily(space, tuple(
                uinv.compose(m).compose(u) for m in base.members))
            cu = conjugating_unit(base, other)
            for a, b in zip(base.members, other.members):
                if cu.compose(a) != b.compose(cu):
                    ok = False
                rep = corner_unit_check(a, b)
                if rep.exact_equality:
                    exact += 1
                if rep.iso_from.compose(rep.iso_to) != a:
                    ok = False
                if rep.iso_to.compose(rep.iso_from) != b:
                    ok = False
                if k == 2 and not rep.exact_equality:
                    ok = False
        stats[str(k)] = f"{exact}/{seeds * len(base.members)}"
        checks.append(Check(f"uniqueness/k{k}", ok, detail=f"{seeds} seeds"))
    return {"exact_equality_by_k": stats}, checks


def _suite_nilpotency(cfg: RunConfig) -> tuple[dict, list[Check]]:
    checks = []
    kmax = cfg.grid.get("k", 5)
    seeds = cfg.grid.get("seeds", 25)
    for k in range(2, kmax + 1):
        space = SuperSpace.standard(2, 1, k)
        ok = True
        for s in range(seeds):
            f = random_hom_trivial(space, seeded_rng(cfg.seed + s + 1))
            if not f.power(k).is_zero() or nilpotency_index(f) > k:
                ok = False
        checks.append(Check(f"nilpotency/k{k}", ok, detail=f"{seeds} seeds"))
    return {}, checks


def _suite_rigidity(cfg: RunConfig) -> tuple[dict, list[Check]]:
    checks = []
    seeds = cfg.grid.get("seeds", 25)
    spec = MotiveSpec(kind="surface", q=1, pg=1, b2=3, rho=2, k=3)
    family = chow_kunneth(spec)
    space = family.ambient
    ok_enforced = True
    ok_violation = True
    for s in range(seeds):
        rng = seeded_rng(cfg.seed + s + 1)
        raw = random_hom_trivial(space, rng)
        report = murre_rigidity(family, raw)
        if not raw.is_zero() and report.within_hypotheses:
            # a nonzero hom-trivial q can never satisfy the hypotheses
            ok_violation = False
        # enforcing the hypotheses keeps only the eps-free diagonal corners,
        # which a hom-trivial q cannot have: the enforcement collapses to 0
        enforced = SuperMorphism.zero(space, space)
        for member in family.members:
            block = member.compose(raw).compose(member)
            enforced = enforced + block.realization().promoted(spec.k)
        report2 = murre_rigidity(family, enforced)
        if not (report2.within_hypotheses and report2.certified_zero):
            ok_enforced = False
    checks.append(Check("rigidity/enforced-hom-trivial-is-zero", ok_enforced,
                        detail=f"{seeds} seeds"))
    checks.append(Check("rigidity/violations-reported", ok_violation))
    zero = SuperMorphism.zero(space, space)
    rep0 = murre_rigidity(family, zero)
    checks.append(Check("rigidity/zero-certified",
                        rep0.within_hypotheses and rep0.certified_zero))
    return {}, checks


def _suite_summand_assembly(cfg: RunConfig) -> tuple[dict, list[Check]]:
    checks = []
    seeds = cfg.grid.get("seeds", 25)
    k = cfg.k
    ok = True
    for s in range(seeds):
        rng = seeded_rng(cfg.seed + s + 1)
        f, g, e = _random_summand_instance(rng, k)
        if not e.is_idempotent():
            ok = False
    checks.append(Check("summand-assembly/identity-round-trip", ok,
                        detail=f"{seeds} seeds"))
    return {}, checks


def _random_summand_instance(rng, k: int, pieces: int = 3):
    space = SuperSpace.standard(2, 1, k)
    maps_in = []
    maps_out = []
    a1 = seeded_unit(space, rng)
    maps_in.append(a1)
    rest = SuperMorphism.zero(space, space)
    for _ in range(pieces - 1):
        a = lifting.random_endomorphism(space, rng)
        b = lifting.random_endomorphism(space, rng)
        maps_in.append(a)
        maps_out.append(b)
        rest = rest + b.compose(a)
    b1 = (SuperMorphism.identity(space) - rest).compose(invert_unit(a1))
    maps_out.insert(0, b1)
    return karoubi.assemble_summand(maps_in, maps_out)


def _suite_surface(cfg: RunConfig) -> tuple[dict, list[Check]]:
    checks = []
    rational = MotiveSpec(kind="surface", q=0, pg=0, b2=9, rho=9, k=cfg.k,
                          seed=cfg.seed, t=0)
    irregular = MotiveSpec(kind="surface", q=2, pg=1, b2=10, rho=8, k=cfg.k,
                           seed=cfg.seed, t=2)
    for name, spec in (("all-algebraic", rational), ("irregular", irregular)):
        fam = chow_kunneth(spec)
        try:
            fam.validate()
            checks.append(Check(f"surface/{name}/family-valid", True))
        except ValueError as exc:
            checks.append(Check(f"surface/{name}/family-valid", False, str(exc)))
        rel = surface_projector_relations(spec)
        checks.append(Check(f"surface/{name}/projector-relations", rel.all_passed))
        model = murre_filtration(spec)
        checks.append(Check(
            f"surface/{name}/graded-dims",
            model.graded_dims() == (1, spec.q, spec.t)))
        checks.append(Check(
            f"surface/{name}/filtration-ends-at-zero",
            model.filtration_dims()[3] == 0))
        splitting = split_middle(spec)
        rep = classify(splitting.kernel, cap=cfg.cap)
        checks.append(Check(
            f"surface/{name}/kernel-classification",
            rep.kind == "even" and rep.kim_plus == spec.d_param
            and rep.dim == spec.d_param))
        d = spec.d_param
        rng = seeded_rng(cfg.seed + 1)
        if spec.t <= d:
            cycles = [[rng.randint(-3, 3) for _ in range(spec.t)]
                      for _ in range(d + 1)]
            checks.append(Check(
                f"surface/{name}/wedge-vanishing",
                albanese_wedge(cycles, t_dim=spec.t) == {}))
    verdict = pg_zero_conclusion(rational)
    checks.append(Check("surface/all-algebraic/kernel-forced-zero",
                        verdict.consistent is True))
    checks.append(Check("surface/all-algebraic/split-shape",
                        verdict.motive_shape == "1 + 9L + L^2"))
    space = build_realization(irregular)
    f = random_hom_trivial(space, seeded_rng(cfg.seed + 2))
    checks.append(Check("surface/irregular/hom-trivial-acts-zero-on-gradeds",
                        acts_as_zero_on_gradeds(irregular, f)))
    return {"shape": verdict.motive_shape or ""}, checks


def _suite_abelian(cfg: RunConfig) -> tuple[dict, list[Check]]:
    checks = []
    gmax = cfg.grid.get("g", 3)
    for g in range(1, gmax + 1):
        ok = True
        for n in range(-2, 4):
            report = abelian_multiplication_action(g, n, k=cfg.k)
            if not report.holds:
                ok = False
        checks.append(Check(f"abelian/eigenrelations-g{g}", ok, detail="n in -2..3"))
    return {}, checks


SUITES = {
    "symmetrizers": _suite_symmetrizers,
    "supertrace": _suite_supertrace,
    "kimura-dim": _suite_kimura_dim,
    "vanishing": _suite_vanishing,
    "lifting": _suite_lifting,
    "uniqueness": _suite_uniqueness,
    "nilpotency": _suite_nilpotency,
    "rigidity": _suite_rigidity,
    "summand-assembly": _suite_summand_assembly,
    "surface": _suite_surface,
    "abelian": _suite_abelian,
}


def cmd_verify(cfg: RunConfig) -> Report:
    suite = cfg.params["suite"]
    results, checks = SUITES[suite](cfg)
    results = dict(results)
    results["suite"] = suite
    results["passed"] = all(c.passed for c in checks)
    return Report("verify", _config_dict(cfg), results, checks)


# --- surface pipeline from a model file ---------------------------------------------


_MODEL_KEYS = ("kind", "g", "q", "pg", "b2", "rho", "r", "k", "seed", "t")


def parse_model_file(path: str) -> MotiveSpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ModelFileError(f"cannot read {path}: {exc}") from exc
    return parse_model_text(text)


def parse_model_text(text: str) -> MotiveSpec:
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ModelFileError("expected 'key = value'", lineno)
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _MODEL_KEYS:
            raise ModelFileError(
                f"unknown key {key!r}; expected one of {_MODEL_KEYS}", lineno)
        if key == "kind":
            values[key] = value
        else:
            try:
                values[key] = int(value)
            except ValueError:
                raise ModelFileError(f"{key} needs an integer, got {value!r}", lineno)
    if "kind" not in values:
        raise ModelFileError("missing required key 'kind'")
    try:
        return MotiveSpec(**values)
    except ValueError as exc:
        raise ModelFileError(str(exc)) from exc


def cmd_surface(cfg: RunConfig) -> Report:
    spec = parse_model_file(cfg.params["path"])
    if spec.kind != "surface":
        raise ModelFileError(f"surface command needs kind = surface, got {spec.kind}")
    checks = []
    fam = chow_kunneth(spec)
    try:
        fam.validate()
        checks.append(Check("surface/family-valid", True))
    except ValueError as exc:
        checks.append(Check("surface/family-valid", False, str(exc)))
    rel = surface_projector_relations(spec)
    for c in rel.checks:
        detail = "" if c.passed else _defect_string(c.defect)
        checks.append(Check(f"surface/relation/{c.name}", c.passed, detail))
    model = murre_filtration(spec)
    checks.append(Check("surface/graded-dims",
                        model.graded_dims() == (1, spec.q, spec.t),
                        detail=str(model.graded_dims())))
    splitting = split_middle(spec)
    kernel_report = classify(splitting.kernel, cap=cfg.cap)
    checks.append(Check(
        "surface/kernel-evenly-finite-dimensional",
        kernel_report.kind == "even" and kernel_report.dim == spec.d_param))
    d = spec.d_param
    rng = seeded_rng(spec.seed + 1)
    if spec.t <= d:
        cycles = [[rng.randint(-3, 3) for _ in range(spec.t)]
                  for _ in range(d + 1)]
        checks.append(Check("surface/wedge-vanishing",
                            albanese_wedge(cycles, t_dim=spec.t) == {},
                            detail=f"{d + 1} cycles in a {spec.t}-dim kernel part"))
    else:
        checks.append(Check(
            "surface/kernel-within-bound", False,
            detail=f"t = {spec.t} exceeds d = {d}: inconsistent with a "
                   f"finite-dimensional motive"))
    results = {
        "spec": {key: getattr(spec, key) for key in _MODEL_KEYS},
        "family_members": len(fam),
        "filtration_dims": list(model.filtration_dims()),
        "graded_dims": list(model.graded_dims()),
        "kernel_dimension": kernel_report.dim,
        "line_summands": len(splitting.line_summands),
    }
    if spec.pg == 0:
        verdict = pg_zero_conclusion(spec)
        checks.append(Check("surface/kernel-forced-zero",
                            verdict.consistent is True,
                            detail="; ".join(verdict.notes)))
        results["pg_zero_verdict"] = "consistent" if verdict.consistent else "inconsistent"
        if verdict.motive_shape:
            results["motive_shape"] = verdict.motive_shape
    else:
        results["pg_zero_verdict"] = "not-applicable"
    return Report("surface", _config_dict(cfg), results, checks)


# --- plumbing ---------------------------------------------------------------------


def _config_dict(cfg: RunConfig) -> dict:
    out = {
        "command": cfg.command,
        "out": cfg.out_format,
        "seed": cfg.seed,
        "cap": cfg.cap,
        "k": cfg.k,
    }
    if cfg.grid:
        out["grid"] = dict(sorted(cfg.grid.items()))
    for key, val in cfg.params.items():
        out[key] = list(val.parts) if isinstance(val, Partition) else val
    return out


def _parse_grid(text: str) -> dict:
    grid = {}
    if not text:
        return grid
    for item in text.split(","):
        if not item.strip():
            continue
        key, _, value = item.partition("=")
        key, value = key.strip(), value.strip()
        if not key or not value:
            raise argparse.ArgumentTypeError(f"bad grid item {item!r}")
        try:
            grid[key] = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"grid value for {key!r} must be an int")
    return grid


def _parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text or text == "0":
        return Partition()
    try:
        return Partition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finmot",
        description="exact verification harness for the graded motive model")
    parser.add_argument("--out", choices=("json", "csv", "pretty"),
                        default="pretty", help="report format")
    parser.add_argument("--seed", type=int, default=0, help="base seed (u64)")
    parser.add_argument("--cap", type=int, default=karoubi.SCHUR_DIM_CAP,
                        help="ambient dimension cap for tensor powers")
    parser.add_argument("--k", type=int, default=2, choices=range(1, 7),
                        metavar="1..6", help="truncation order of the scalar ring")
    parser.add_argument("--file", default=None, help="write the report here")
    sub = parser.add_subparsers(dest="command", required=True)

    p_chars = sub.add_parser("chars", help="character table of S_n")
    p_chars.add_argument("n", type=int)

    p_schur = sub.add_parser("schur", help="Schur image of a (p|q) object")
    p_schur.add_argument("--lam", type=_parse_partition, required=True,
                         help="partition, e.g. 2,1")
    p_schur.add_argument("--p", type=int, default=0)
    p_schur.add_argument("--q", type=int, default=0)

    p_verify = sub.add_parser("verify", help="run an invariant suite")
    p_verify.add_argument("suite", choices=sorted(SUITES))
    p_verify.add_argument("--grid", type=_parse_grid, default={},
                          help="bounds, e.g. p=2,q=2,k=3,seeds=25")

    p_surface = sub.add_parser("surface", help="surface pipeline from a model file")
    p_surface.add_argument("path")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            out_format=args.out,
            seed=args.seed,
            cap=args.cap,
            k=args.k,
            grid=getattr(args, "grid", {}) or {},
            file=args.file,
        )
    except ValueError as exc:
        parser.error(str(exc))  # exits with code 2
    if args.command == "chars":
        cfg.params = {"n": args.n}
        runner = cmd_chars
    elif args.command == "schur":
        cfg.params = {"lam": args.lam, "p": args.p, "q": args.q}
        runner = cmd_schur
    elif args.command == "verify":
        cfg.params = {"suite": args.suite}
        runner = cmd_verify
    else:
        cfg.params = {"path": args.path}
        runner = cmd_surface
    started = time.monotonic()
    try:
        report = runner(cfg)
    except SizeCapError as exc:
        print(f"size cap exceeded: {exc}", file=sys.stderr)
        return 3
    except ModelFileError as exc:
        print(f"model file error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.monotonic() - started
    rendered = report.render(cfg.out_format)
    if cfg.file:
        with open(cfg.file, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
