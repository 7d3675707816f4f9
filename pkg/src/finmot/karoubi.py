"""Idempotent completion of the graded model category.

Objects are pairs (ambient space, idempotent endomorphism) plus an integer
twist.  Schur functors act by composing the central group-algebra
idempotents, realized as signed permutation operators on a tensor power,
with the tensor power of the object's idempotent.  Classification searches
for the largest nonvanishing exterior power of the even part and symmetric
power of the odd part.

The zero test for an object is "the idempotent matrix is exactly zero".
This is equivalent to the realization being zero: an idempotent all of
whose entries lie in the nilpotent ideal (eps) is zero, because e = e^(2^m)
has entries in (eps^(2^m)) for every m.

``twist`` records the accumulated Tate twist exponent.  Twisting by r
shifts every ambient weight by -2r, so the weight data always lives in the
ambient space; the field itself is bookkeeping for reports.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import SizeCapError
from .symgroup import (
    Partition,
    character,
    conjugacy_class_size,
    hook_dimension,
    partitions,
    young_idempotent,
)
from .supercat import (
    EVEN,
    ODD,
    SuperMorphism,
    SuperSpace,
    TruncatedScalar,
    tensor,
    tensor_power,
)
from . import lifting

#: dimension guard for ambient tensor powers
SCHUR_DIM_CAP = 4096


class KaroubiObject:
    """A direct summand of an ambient graded space, cut out by an idempotent."""

    __slots__ = ("ambient", "idem", "twist")

    def __init__(self, ambient: SuperSpace, idem: SuperMorphism, twist: int = 0,
                 check: bool = True):
        if idem.source != ambient or idem.target != ambient:
            raise ValueError("idempotent must be an endomorphism of the ambient space")
        self.ambient = ambient
        self.idem = idem
        self.twist = twist
        if check and not idem.is_idempotent():
            raise ValueError("defining endomorphism is not idempotent")
        tr = idem.supertrace()
        if not tr.eps_part_is_zero() or tr.realization().denominator != 1:
            raise ValueError(f"idempotent trace {tr} is not an integer constant")

    @classmethod
    def full(cls, space: SuperSpace, twist: int = 0) -> "KaroubiObject":
        return cls(space, SuperMorphism.identity(space), twist, check=False)

    @classmethod
    def unit(cls, k: int = 1) -> "KaroubiObject":
        return cls.full(SuperSpace.unit(k))

    @classmethod
    def zero(cls, k: int = 1) -> "KaroubiObject":
        return cls.full(SuperSpace.zero_space(k))

    @classmethod
    def lefschetz(cls, r: int, k: int = 1) -> "KaroubiObject":
        """The invertible weight-2r line (the r-th power of the weight-2 line)."""
        return cls.full(SuperSpace.line(EVEN, 2 * r, k), twist=-r)

    @property
    def k(self) -> int:
        return self.ambient.k

    def dimension(self) -> int:
        """Supertrace of the idempotent; always an exact integer."""
        tr = self.idem.supertrace()
        assert tr.eps_part_is_zero()
        r = tr.realization()
        assert r.denominator == 1
        return int(r)

    def classical_rank(self) -> int:
        """Rank of the realization, ignoring parity signs."""
        total = Fraction(0)
        for i, row in self.idem.rows.items():
            s = row.get(i)
            if s is not None:
                total += s.realization()
        assert total.denominator == 1
        return int(total)

    def is_zero(self) -> bool:
        return self.idem.is_zero()

    def validate(self) -> None:
        if not self.idem.is_idempotent():
            raise AssertionError("stored endomorphism is not idempotent")

    def fingerprint(self):
        return (self.idem.fingerprint(), self.twist)

    def __repr__(self):
        return (f"KaroubiObject(ambient={self.ambient.dim}d, k={self.k}, "
                f"dim={self.dimension()}, twist={self.twist})")


@dataclass(frozen=True)
class FiniteDimReport:
    """Outcome of the finite-dimensionality search.

    ``kim_plus`` is the largest n with a nonvanishing n-th exterior power
    of the even part, ``kim_minus`` the largest n with a nonvanishing
    symmetric power of the odd part.  ``kind`` is "even" when the odd part
    vanishes, "odd" when the even part vanishes, "mixed" otherwise.
    The zero object satisfies both vanishing conditions and is reported
    as "even" with both indices 0.
    """

    kind: str
    kim_plus: int
    kim_minus: int
    dim: int

    @property
    def evenly_finite_dimensional(self) -> bool:
        return self.kim_minus == 0

    @property
    def oddly_finite_dimensional(self) -> bool:
        return self.kim_plus == 0


# --- Schur functors ---------------------------------------------------------

# signed permutation sums are cached twice: once as rational row data
# independent of k, once promoted to a given k
_RATIONAL_CACHE: OrderedDict = OrderedDict()
_OPERATOR_CACHE: OrderedDict = OrderedDict()
_SCHUR_CACHE: OrderedDict = OrderedDict()
_RATIONAL_CACHE_MAX = 24
_OPERATOR_CACHE_MAX = 24
_SCHUR_CACHE_MAX = 64


def _cache_put(cache: OrderedDict, maxsize: int, key, value):
    cache[key] = value
    while len(cache) > maxsize:
        cache.popitem(last=False)


def _young_rows(parities: tuple[int, ...], n: int, lam: Partition):
    """Rows of the group-algebra idempotent acting on the tensor power,
    with plain Fraction entries."""
    key = (parities, n, lam.parts)
    if key in _RATIONAL_CACHE:
        _RATIONAL_CACHE.move_to_end(key)
        return _RATIONAL_CACHE[key]
    d = len(parities)
    elem = young_idempotent(lam)
    rows: dict[int, dict[int, Fraction]] = {}
    # enumerate source tuples once per permutation term
    tuples = [()]
    for _ in range(n):
        tuples = [t + (a,) for t in tuples for a in range(d)]
    for perm, coeff in elem.terms.items():
        img = perm.images
        for t in tuples:
            col = 0
            for a in t:
                col = col * d + a
            u = [0] * n
            for a in range(n):
                u[img[a]] = t[a]
            row = 0
            for a in u:
                row = row * d + a
            odd_slots = [a for a in range(n) if parities[t[a]] == ODD]
            inv = 0
            for ai in range(len(odd_slots)):
                sa = img[odd_slots[ai]]
                for bi in range(ai + 1, len(odd_slots)):
                    if sa > img[odd_slots[bi]]:
                        inv += 1
            v = -coeff if inv % 2 else coeff
            acc = rows.setdefault(row, {})
            cur = acc.get(col)
            total = v if cur is None else cur + v
            if total:
                acc[col] = total
            elif cur is not None:
                del acc[col]
    rows = {i: r for i, r in rows.items() if r}
    _cache_put(_RATIONAL_CACHE, _RATIONAL_CACHE_MAX, key, rows)
    return rows


def _young_operator(ambient: SuperSpace, n: int, lam: Partition) -> SuperMorphism:
    key = (ambient.basis, ambient.k, n, lam.parts)
    if key in _OPERATOR_CACHE:
        _OPERATOR_CACHE.move_to_end(key)
        return _OPERATOR_CACHE[key]
    raw = _young_rows(ambient.parities, n, lam)
    k = ambient.k
    xn = tensor_power(ambient, n)
    rows = {
        i: {j: TruncatedScalar.of(c, k) for j, c in row.items()}
        for i, row in raw.items()
    }
    op = SuperMorphism(xn, xn, rows, _trusted=True)
    _cache_put(_OPERATOR_CACHE, _OPERATOR_CACHE_MAX, key, op)
    return op


def schur_apply(lam: Partition, x: KaroubiObject,
                cap: int = SCHUR_DIM_CAP) -> KaroubiObject:
    """The image of the central idempotent attached to ``lam`` on x^(n)."""
    n = lam.n
    ambient = x.ambient
    if n == 0:
        return KaroubiObject.unit(x.k)
    if ambient.dim == 0:
        return KaroubiObject.full(tensor_power(ambient, n), twist=n * x.twist)
    if ambient.dim**n > cap:
        raise SizeCapError(
            f"ambient tensor power {ambient.dim}**{n} exceeds cap {cap}"
        )
    key = (x.fingerprint(), lam.parts)
    if key in _SCHUR_CACHE:
        _SCHUR_CACHE.move_to_end(key)
        return _SCHUR_CACHE[key]
    op = _young_operator(ambient, n, lam)
    if x.idem.is_identity():
        idem = op
    else:
        pn = x.idem
        for _ in range(n - 1):
            pn = pn.tensor(x.idem)
        idem = pn.compose(op).compose(pn)
    obj = KaroubiObject(op.source, idem, twist=n * x.twist, check=False)
    _cache_put(_SCHUR_CACHE, _SCHUR_CACHE_MAX, key, obj)
    return obj


def wedge(n: int, x: KaroubiObject, cap: int = SCHUR_DIM_CAP) -> KaroubiObject:
    return schur_apply(Partition((1,) * n), x, cap)


def sym(n: int, x: KaroubiObject, cap: int = SCHUR_DIM_CAP) -> KaroubiObject:
    return schur_apply(Partition((n,) if n else ()), x, cap)


def schur_super_dimension(lam: Partition, x: KaroubiObject) -> Fraction:
    """Supertrace of the Schur idempotent via the character sum.

    Uses the linearity of the trace over the group-algebra terms instead of
    materializing the operator; serves as the second route of the two-way
    dimension check.
    """
    n = lam.n
    if n == 0:
        return Fraction(1)
    d = x.ambient.dim
    if d == 0:
        return Fraction(0)
    dimv = hook_dimension(lam)
    nfact = factorial(n)
    total = Fraction(0)
    for ct in partitions(n):
        chi = character(lam, ct)
        if not chi:
            continue
        total += conjugacy_class_size(ct) * chi * _twisted_supertrace(ct, x)
    return Fraction(dimv, nfact) * total


def _twisted_supertrace(ct: Partition, x: KaroubiObject) -> Fraction:
    """Supertrace of (permutation action of a type-ct element) . idem^(n).

    The value only depends on the cycle type because the tensor power of a
    fixed idempotent commutes with every slot permutation.
    """
    from .symgroup import Permutation

    n = ct.n
    cycles = []
    start = 0
    for length in ct.parts:
        cycles.append(tuple(range(start, start + length)))
        start += length
    sigma = Permutation.from_cycles(n, cycles)
    img = sigma.images
    inv_img = sigma.inverse().images
    d = x.ambient.dim
    parities = x.ambient.parities
    p = x.idem
    total = Fraction(0)
    import itertools as _it

    for t in _it.product(range(d), repeat=n):
        s = tuple(t[inv_img[a]] for a in range(n))
        prod = Fraction(1)
        ok = True
        for a in range(n):
            e = p.entry(s[a], t[a]).realization()
            if not e:
                ok = False
                break
            prod *= e
        if not ok:
            continue
        odd_slots = [a for a in range(n) if parities[s[a]] == ODD]
        inv = 0
        for ai in range(len(odd_slots)):
            sa = img[odd_slots[ai]]
            for bi in range(ai + 1, len(odd_slots)):
                if sa > img[odd_slots[bi]]:
                    inv += 1
        parity_t = sum(parities[a] for a in t) % 2
        sign = -1 if (inv + parity_t) % 2 else 1
        total += sign * prod
    return total


# --- parity splitting and classification --------------------------------------


def parity_projector(space: SuperSpace, parity: int) -> SuperMorphism:
    one = TruncatedScalar.one(space.k)
    rows = {i: {i: one} for i, p in enumerate(space.parities) if p == parity}
    return SuperMorphism(space, space, rows, _trusted=True)


def split_parity(x: KaroubiObject) -> tuple[KaroubiObject, KaroubiObject]:
    """The even/odd summand pair cut out by the parity projectors.

    Every morphism of the model preserves parity, so the idempotent
    commutes with the parity projectors exactly; the lifting correction
    is kept as a safety net and is a no-op on commuting input.
    """
    ambient = x.ambient
    out = []
    for parity in (EVEN, ODD):
        proj = parity_projector(ambient, parity)
        cand = x.idem.compose(proj)
        if cand != proj.compose(x.idem):
            raise AssertionError("idempotent does not preserve parity blocks")
        if not cand.is_idempotent():
            cand = lifting.lift_idempotent(cand)
        out.append(KaroubiObject(ambient, cand, x.twist, check=False))
    plus, minus = out
    if plus.idem + minus.idem != x.idem:
        raise AssertionError("parity split does not sum back to the idempotent")
    return plus, minus


def classify(x: KaroubiObject, cap: int = SCHUR_DIM_CAP) -> FiniteDimReport:
    """Largest nonvanishing exterior/symmetric powers of the parity parts."""
    plus, minus = split_parity(x)
    kim_plus = _largest_nonvanishing(wedge, plus, cap)
    kim_minus = _largest_nonvanishing(sym, minus, cap)
    dimension = x.dimension()
    assert dimension == kim_plus - kim_minus
    if kim_minus == 0:
        kind = "even"
    elif kim_plus == 0:
        kind = "odd"
    else:
        kind = "mixed"
    return FiniteDimReport(kind=kind, kim_plus=kim_plus, kim_minus=kim_minus,
                           dim=dimension)


def _largest_nonvanishing(power, part: KaroubiObject, cap: int) -> int:
    bound = part.classical_rank()
    last = 0
    n = 1
    while True:
        obj = power(n, part, cap)
        if obj.is_zero():
            break
        last = n
        if n > bound:
            raise AssertionError("power search exceeded the rank bound")
        n += 1
    return last


# --- categorical operations -----------------------------------------------------


def direct_sum(x: KaroubiObject, y: KaroubiObject) -> KaroubiObject:
    if x.k != y.k:
        raise ValueError("truncation orders differ")
    ambient = SuperSpace(x.ambient.basis + y.ambient.basis, x.k)
    off = x.ambient.dim
    rows: dict[int, dict[int, TruncatedScalar]] = {
        i: dict(row) for i, row in x.idem.rows.items()
    }
    for i, row in y.idem.rows.items():
        rows[i + off] = {j + off: s for j, s in row.items()}
    idem = SuperMorphism(ambient, ambient, rows, _trusted=True)
    twist = x.twist if x.twist == y.twist else 0
    return KaroubiObject(ambient, idem, twist, check=False)


def direct_sum_many(objects) -> KaroubiObject:
    objects = list(objects)
    if not objects:
        raise ValueError("empty direct sum")
    out = objects[0]
    for obj in objects[1:]:
        out = direct_sum(out, obj)
    return out


def tensor_k(x: KaroubiObject, y: KaroubiObject) -> KaroubiObject:
    if x.k != y.k:
        raise ValueError("truncation orders differ")
    return KaroubiObject(tensor(x.ambient, y.ambient), x.idem.tensor(y.idem),
                         x.twist + y.twist, check=False)


def dual_k(x: KaroubiObject) -> KaroubiObject:
    idem = x.idem.dual()
    return KaroubiObject(idem.source, idem, -x.twist, check=False)


def tate_twist(x: KaroubiObject, r: int) -> KaroubiObject:
    """Shift every ambient weight by -2r and record the twist."""
    space = x.ambient.shift_weights(-2 * r)
    idem = SuperMorphism(space, space, x.idem.rows, _trusted=True)
    return KaroubiObject(space, idem, x.twist + r, check=False)


def s_wedge(n: int, x: KaroubiObject,
            parity_split: tuple[KaroubiObject, KaroubiObject] | None = None,
            cap: int = SCHUR_DIM_CAP) -> KaroubiObject:
    """Direct sum of wedge(i, even part) (x) sym(j, odd part) over i+j = n."""
    plus, minus = parity_split if parity_split is not None else split_parity(x)
    summands = [
        tensor_k(wedge(i, plus, cap), sym(n - i, minus, cap)) for i in range(n + 1)
    ]
    return direct_sum_many(summands)


# --- splitting through a family of factorizations --------------------------------


class SummandDefectError(ValueError):
    """Raised when the given factorizations do not sum to the identity."""

    def __init__(self, defect: SuperMorphism):
        super().__init__(
            "sum of round trips differs from the identity; see .defect"
        )
        self.defect = defect


def assemble_summand(maps_in, maps_out):
    """Exhibit X as a direct summand of the sum of intermediate objects.

    ``maps_in`` are morphisms a_i: X -> Y_i and ``maps_out`` are
    b_i: Y_i -> X with sum(b_i . a_i) = id_X.  Returns (f, g, e) where
    f: X -> (+)Y_i and g: (+)Y_i -> X satisfy g . f = id_X and e = f . g
    is idempotent.
    """
    maps_in = list(maps_in)
    maps_out = list(maps_out)
    if not maps_in or len(maps_in) != len(maps_out):
        raise ValueError("need matching nonempty lists of maps")
    x = maps_in[0].source
    for a, b in zip(maps_in, maps_out):
        if a.source != x or b.target != x or b.source != a.target:
            raise ValueError("maps do not form round trips on a common object")
    ident = SuperMorphism.identity(x)
    total = SuperMorphism.zero(x, x)
    for a, b in zip(maps_in, maps_out):
        total = total + b.compose(a)
    if total != ident:
        raise SummandDefectError(total - ident)
    sum_space = maps_in[0].target
    for a in maps_in[1:]:
        sum_space = SuperSpace(sum_space.basis + a.target.basis, x.k)
    f_rows: dict[int, dict[int, TruncatedScalar]] = {}
    g_rows: dict[int, dict[int, TruncatedScalar]] = {}
    off = 0
    for a, b in zip(maps_in, maps_out):
        for i, row in a.rows.items():
            f_rows[i + off] = dict(row)
        for i, row in b.rows.items():
            acc = g_rows.setdefault(i, {})
            for j, s in row.items():
                acc[j + off] = s
        off += a.target.dim
    f = SuperMorphism(x, sum_space, f_rows, _trusted=True)
    g = SuperMorphism(sum_space, x, g_rows, _trusted=True)
    e = f.compose(g)
    assert g.compose(f) == ident
    return f, g, e
