"""Parity- and weight-graded spaces over the truncated ring Q[eps]/(eps^k).

This is the concrete model tensor category.  Objects are finite graded
spaces whose basis vectors carry a parity (0 = even, 1 = odd) and an
integer weight.  Morphisms are matrices over Q[eps]/(eps^k) that preserve
parity in every eps order and preserve weight in the eps^0 layer; the
higher eps layers are weight-free.  The symmetry is Koszul-signed, so odd
lines anticommute.  Setting eps to 0 ("realization") is a tensor functor,
and a morphism is homologically trivial when its realization vanishes.

Conventions fixed here and relied on everywhere else:

* even basis vectors come before odd ones in directly constructed spaces;
* tensor product bases are ordered row-major, leftmost factor most
  significant;
* matrices are stored sparsely (absent entry = exact zero), but carry
  dense semantics: every entry of a valid morphism is defined.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import SizeCapError
from .symgroup import Permutation

#: dimension guard for tensor powers
TENSOR_DIM_CAP = 4096

EVEN = 0
ODD = 1

_ZERO_SCALARS: dict[int, "TruncatedScalar"] = {}
_ONE_SCALARS: dict[int, "TruncatedScalar"] = {}


class TruncatedScalar:
    """An element of Q[eps]/(eps^k) as its tuple of eps-coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int]):
        coeffs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        if not coeffs:
            raise ValueError("truncation order k must be >= 1")
        self.coeffs = coeffs

    @property
    def k(self) -> int:
        return len(self.coeffs)

    @classmethod
    def of(cls, value, k: int) -> "TruncatedScalar":
        return cls((Fraction(value),) + (Fraction(0),) * (k - 1))

    @classmethod
    def zero(cls, k: int) -> "TruncatedScalar":
        cached = _ZERO_SCALARS.get(k)
        if cached is None:
            cached = _ZERO_SCALARS[k] = cls((Fraction(0),) * k)
        return cached

    @classmethod
    def one(cls, k: int) -> "TruncatedScalar":
        cached = _ONE_SCALARS.get(k)
        if cached is None:
            cached = _ONE_SCALARS[k] = cls.of(1, k)
        return cached

    @classmethod
    def eps(cls, k: int, power: int = 1, coeff=1) -> "TruncatedScalar":
        if power < 1:
            raise ValueError("eps power must be >= 1")
        if power >= k:
            return cls.zero(k)
        coeffs = [Fraction(0)] * k
        coeffs[power] = Fraction(coeff)
        return cls(coeffs)

    def realization(self) -> Fraction:
        return self.coeffs[0]

    def eps_part_is_zero(self) -> bool:
        return not any(self.coeffs[1:])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_unit(self) -> bool:
        return bool(self.coeffs[0])

    def promoted(self, k: int) -> "TruncatedScalar":
        if k < self.k:
            raise ValueError("cannot demote a scalar")
        if k == self.k:
            return self
        return TruncatedScalar(self.coeffs + (Fraction(0),) * (k - self.k))

    def __add__(self, other: "TruncatedScalar") -> "TruncatedScalar":
        a, b = self.coeffs, other.coeffs
        if len(a) != len(b):
            raise ValueError("truncation orders differ")
        return TruncatedScalar(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "TruncatedScalar") -> "TruncatedScalar":
        a, b = self.coeffs, other.coeffs
        if len(a) != len(b):
            raise ValueError("truncation orders differ")
        return TruncatedScalar(tuple(x - y for x, y in zip(a, b)))

    def __neg__(self) -> "TruncatedScalar":
        return TruncatedScalar(tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return TruncatedScalar(tuple(x * f for x in self.coeffs))
        a, b = self.coeffs, other.coeffs
        k = len(a)
        if len(b) != k:
            raise ValueError("truncation orders differ")
        out = [Fraction(0)] * k
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(k - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedScalar(out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedScalar":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit")
        a0 = self.coeffs[0]
        # x = a0 (1 + m) with m nilpotent; invert by a finite geometric series
        neg_m = TruncatedScalar(
            (Fraction(0),) + tuple(-c / a0 for c in self.coeffs[1:])
        )
        acc = TruncatedScalar.one(self.k)
        term = TruncatedScalar.one(self.k)
        for _ in range(self.k - 1):
            term = term * neg_m
            if term.is_zero():
                break
            acc = acc + term
        return acc * (Fraction(1) / a0)

    def __eq__(self, other):
        return isinstance(other, TruncatedScalar) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        bits = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                bits.append(str(c))
            elif i == 1:
                bits.append(f"{c}*eps")
            else:
                bits.append(f"{c}*eps^{i}")
        return " + ".join(bits) if bits else "0"

    def __repr__(self):
        return f"TruncatedScalar({list(self.coeffs)!r})"


@dataclass(frozen=True)
class SuperSpace:
    """A graded space given by its ordered basis of (parity, weight) pairs."""

    basis: tuple[tuple[int, int], ...]
    k: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("truncation order k must be >= 1")
        for parity, _weight in self.basis:
            if parity not in (EVEN, ODD):
                raise ValueError(f"parity must be 0 or 1, got {parity}")

    @staticmethod
    def unit(k: int = 1) -> "SuperSpace":
        return SuperSpace(((EVEN, 0),), k)

    @staticmethod
    def zero_space(k: int = 1) -> "SuperSpace":
        return SuperSpace((), k)

    @staticmethod
    def standard(p: int, q: int, k: int = 1) -> "SuperSpace":
        """``p`` even vectors of weight 0 followed by ``q`` odd of weight 1."""
        return SuperSpace(((EVEN, 0),) * p + ((ODD, 1),) * q, k)

    @staticmethod
    def line(parity: int, weight: int, k: int = 1) -> "SuperSpace":
        return SuperSpace(((parity, weight),), k)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def p(self) -> int:
        return sum(1 for parity, _ in self.basis if parity == EVEN)

    @property
    def q(self) -> int:
        return sum(1 for parity, _ in self.basis if parity == ODD)

    @property
    def parities(self) -> tuple[int, ...]:
        return tuple(parity for parity, _ in self.basis)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(weight for _, weight in self.basis)

    def with_k(self, k: int) -> "SuperSpace":
        return SuperSpace(self.basis, k)

    def shift_weights(self, delta: int) -> "SuperSpace":
        return SuperSpace(tuple((p, w + delta) for p, w in self.basis), self.k)


def tensor(x: SuperSpace, y: SuperSpace) -> SuperSpace:
    """Ordered product basis; parity adds mod 2, weight adds."""
    if x.k != y.k:
        raise ValueError("truncation orders differ")
    basis = tuple(
        ((px + py) % 2, wx + wy) for (px, wx) in x.basis for (py, wy) in y.basis
    )
    return SuperSpace(basis, x.k)


def tensor_power(x: SuperSpace, n: int) -> SuperSpace:
    out = SuperSpace.unit(x.k)
    for _ in range(n):
        out = tensor(out, x)
    return out


def dual(x: SuperSpace) -> SuperSpace:
    """Same parities, negated weights, same basis order."""
    return SuperSpace(tuple((p, -w) for p, w in x.basis), x.k)


class SuperMorphism:
    """A parity-preserving matrix over Q[eps]/(eps^k) between graded spaces.

    Rows index the target basis, columns the source basis.  The eps^0
    layer must additionally preserve weight.  Instances are treated as
    immutable after construction.
    """

    __slots__ = ("source", "target", "rows", "_fp")

    def __init__(self, source: SuperSpace, target: SuperSpace,
                 rows: Mapping[int, Mapping[int, TruncatedScalar]],
                 _trusted: bool = False):
        if source.k != target.k:
            raise ValueError("truncation orders differ")
        self.source = source
        self.target = target
        self._fp = None
        if _trusted:
            self.rows = rows  # caller guarantees validity and zero-pruning
            return
        k = source.k
        tp, tw = target.parities, target.weights
        sp, sw = source.parities, source.weights
        clean: dict[int, dict[int, TruncatedScalar]] = {}
        for i, row in rows.items():
            if not 0 <= i < target.dim:
                raise ValueError(f"row index {i} out of range")
            crow: dict[int, TruncatedScalar] = {}
            for j, s in row.items():
                if not 0 <= j < source.dim:
                    raise ValueError(f"column index {j} out of range")
                if not isinstance(s, TruncatedScalar):
                    s = TruncatedScalar.of(s, k)
                if s.k != k:
                    raise ValueError("scalar truncation order differs from spaces")
                if s.is_zero():
                    continue
                if tp[i] != sp[j]:
                    raise ValueError(
                        f"entry ({i},{j}) violates parity: {tp[i]} != {sp[j]}"
                    )
                if s.realization() and tw[i] != sw[j]:
                    raise ValueError(
                        f"eps^0 entry ({i},{j}) violates weight: {tw[i]} != {sw[j]}"
                    )
                crow[j] = s
            if crow:
                clean[i] = crow
        self.rows = clean

    # --- constructors -------------------------------------------------------

    @classmethod
    def from_entries(cls, source, target, entries: Mapping[tuple[int, int], object],
                     _trusted: bool = False) -> "SuperMorphism":
        rows: dict[int, dict[int, TruncatedScalar]] = {}
        k = source.k
        for (i, j), s in entries.items():
            if not isinstance(s, TruncatedScalar):
                s = TruncatedScalar.of(s, k)
            if s.is_zero():
                continue
            rows.setdefault(i, {})[j] = s
        return cls(source, target, rows, _trusted=_trusted)

    @classmethod
    def from_dense(cls, source, target, matrix) -> "SuperMorphism":
        entries = {}
        for i, row in enumerate(matrix):
            for j, s in enumerate(row):
                entries[(i, j)] = s
        return cls.from_entries(source, target, entries)

    @classmethod
    def zero(cls, source, target=None) -> "SuperMorphism":
        return cls(source, target if target is not None else source, {}, _trusted=True)

    @classmethod
    def identity(cls, space: SuperSpace) -> "SuperMorphism":
        one = TruncatedScalar.one(space.k)
        return cls(space, space, {i: {i: one} for i in range(space.dim)}, _trusted=True)

    @classmethod
    def diagonal(cls, space: SuperSpace, scalars: Iterable) -> "SuperMorphism":
        return cls.from_entries(space, space,
                                {(i, i): s for i, s in enumerate(scalars)})

    # --- access ---------------------------------------------------------------

    @property
    def k(self) -> int:
        return self.source.k

    def entry(self, i: int, j: int) -> TruncatedScalar:
        row = self.rows.get(i)
        if row is None:
            return TruncatedScalar.zero(self.k)
        return row.get(j, TruncatedScalar.zero(self.k))

    def items(self) -> Iterator[tuple[int, int, TruncatedScalar]]:
        for i, row in self.rows.items():
            for j, s in row.items():
                yield i, j, s

    def dense(self) -> list[list[TruncatedScalar]]:
        zero = TruncatedScalar.zero(self.k)
        out = [[zero] * self.source.dim for _ in range(self.target.dim)]
        for i, j, s in self.items():
            out[i][j] = s
        return out

    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())

    def fingerprint(self):
        if self._fp is None:
            body = tuple(sorted((i, j, s.coeffs) for i, j, s in self.items()))
            self._fp = (self.source.basis, self.target.basis, self.k, body)
        return self._fp

    # --- linear structure ------------------------------------------------------

    def _check_parallel(self, other: "SuperMorphism"):
        if self.source != other.source or self.target != other.target:
            raise ValueError("morphisms are not parallel")

    def __add__(self, other: "SuperMorphism") -> "SuperMorphism":
        self._check_parallel(other)
        rows: dict[int, dict[int, TruncatedScalar]] = {
            i: dict(row) for i, row in self.rows.items()
        }
        for i, row in other.rows.items():
            acc = rows.setdefault(i, {})
            for j, s in row.items():
                cur = acc.get(j)
                val = s if cur is None else cur + s
                if val.is_zero():
                    acc.pop(j, None)
                else:
                    acc[j] = val
            if not acc:
                del rows[i]
        return SuperMorphism(self.source, self.target, rows, _trusted=True)

    def __sub__(self, other: "SuperMorphism") -> "SuperMorphism":
        return self + (-other)

    def __neg__(self) -> "SuperMorphism":
        rows = {i: {j: -s for j, s in row.items()} for i, row in self.rows.items()}
        return SuperMorphism(self.source, self.target, rows, _trusted=True)

    def scale(self, c) -> "SuperMorphism":
        if not isinstance(c, TruncatedScalar):
            c = TruncatedScalar.of(c, self.k)
        if c.is_zero():
            return SuperMorphism.zero(self.source, self.target)
        rows: dict[int, dict[int, TruncatedScalar]] = {}
        for i, row in self.rows.items():
            acc = {}
            for j, s in row.items():
                v = c * s
                if not v.is_zero():
                    acc[j] = v
            if acc:
                rows[i] = acc
        return SuperMorphism(self.source, self.target, rows, _trusted=True)

    def compose(self, other: "SuperMorphism") -> "SuperMorphism":
        """``self`` after ``other`` (matrix product self . other)."""
        if other.target != self.source:
            raise ValueError("composition mismatch")
        orows = other.rows
        rows: dict[int, dict[int, TruncatedScalar]] = {}
        for i, srow in self.rows.items():
            acc: dict[int, TruncatedScalar] = {}
            for m, a in srow.items():
                orow = orows.get(m)
                if not orow:
                    continue
                for j, b in orow.items():
                    v = a * b
                    cur = acc.get(j)
                    acc[j] = v if cur is None else cur + v
            acc = {j: v for j, v in acc.items() if not v.is_zero()}
            if acc:
                rows[i] = acc
        return SuperMorphism(other.source, self.target, rows, _trusted=True)

    def __matmul__(self, other: "SuperMorphism") -> "SuperMorphism":
        return self.compose(other)

    def power(self, m: int) -> "SuperMorphism":
        if self.source != self.target:
            raise ValueError("power of a non-endomorphism")
        if m < 0:
            raise ValueError("negative power")
        out = SuperMorphism.identity(self.source)
        for _ in range(m):
            out = out.compose(self)
        return out

    def tensor(self, other: "SuperMorphism") -> "SuperMorphism":
        """Kronecker product.

        All morphisms here are parity-preserving (parity-even), so the
        Koszul sign in the tensor of morphisms is always +1.
        """
        if self.k != other.k:
            raise ValueError("truncation orders differ")
        src = tensor(self.source, other.source)
        dst = tensor(self.target, other.target)
        scols = other.source.dim
        dcols = other.target.dim
        rows: dict[int, dict[int, TruncatedScalar]] = {}
        for i1, row1 in self.rows.items():
            for i2, row2 in other.rows.items():
                acc: dict[int, TruncatedScalar] = {}
                for j1, a in row1.items():
                    for j2, b in row2.items():
                        v = a * b
                        if not v.is_zero():
                            acc[j1 * scols + j2] = v
                if acc:
                    rows[i1 * dcols + i2] = acc
        return SuperMorphism(src, dst, rows, _trusted=True)

    def dual(self) -> "SuperMorphism":
        """The transpose, as a map between the dual spaces."""
        rows: dict[int, dict[int, TruncatedScalar]] = {}
        for i, row in self.rows.items():
            for j, s in row.items():
                rows.setdefault(j, {})[i] = s
        return SuperMorphism(dual(self.target), dual(self.source), rows, _trusted=True)

    # --- predicates -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.rows

    def is_identity(self) -> bool:
        if self.source != self.target:
            return False
        if len(self.rows) != self.source.dim:
            return self.source.dim == 0 and not self.rows
        one = TruncatedScalar.one(self.k)
        for i, row in self.rows.items():
            if len(row) != 1 or row.get(i) != one:
                return False
        return True

    def is_endomorphism(self) -> bool:
        return self.source == self.target

    def is_idempotent(self) -> bool:
        return self.is_endomorphism() and self.compose(self) == self

    def supertrace(self) -> TruncatedScalar:
        if not self.is_endomorphism():
            raise ValueError("trace of a non-endomorphism")
        total = TruncatedScalar.zero(self.k)
        parities = self.source.parities
        for i, row in self.rows.items():
            s = row.get(i)
            if s is not None:
                total = total - s if parities[i] == ODD else total + s
        return total

    def realization(self) -> "SuperMorphism":
        src = self.source.with_k(1)
        dst = self.target.with_k(1)
        rows: dict[int, dict[int, TruncatedScalar]] = {}
        for i, row in self.rows.items():
            acc = {}
            for j, s in row.items():
                r = s.realization()
                if r:
                    acc[j] = TruncatedScalar((r,))
            if acc:
                rows[i] = acc
        return SuperMorphism(src, dst, rows, _trusted=True)

    def is_hom_trivial(self) -> bool:
        return all(not s.realization() for _, _, s in self.items())

    def promoted(self, k: int) -> "SuperMorphism":
        rows = {
            i: {j: s.promoted(k) for j, s in row.items()}
            for i, row in self.rows.items()
        }
        return SuperMorphism(self.source.with_k(k), self.target.with_k(k), rows,
                             _trusted=True)

    def __eq__(self, other):
        return (
            isinstance(other, SuperMorphism)
            and self.source == other.source
            and self.target == other.target
            and self.rows == other.rows
        )

    def __repr__(self):
        return (f"SuperMorphism({self.source.dim}d -> {self.target.dim}d, "
                f"k={self.k}, nnz={self.nnz()})")


# --- categorical operations ---------------------------------------------------


def tensor_mor(f: SuperMorphism, g: SuperMorphism) -> SuperMorphism:
    return f.tensor(g)


def braiding(x: SuperSpace, y: SuperSpace) -> SuperMorphism:
    """The Koszul-signed swap X (x) Y -> Y (x) X."""
    if x.k != y.k:
        raise ValueError("truncation orders differ")
    src = tensor(x, y)
    dst = tensor(y, x)
    k = x.k
    one = TruncatedScalar.one(k)
    minus = TruncatedScalar.of(-1, k)
    rows: dict[int, dict[int, TruncatedScalar]] = {}
    for i in range(x.dim):
        pi = x.parities[i]
        for j in range(y.dim):
            sign = minus if (pi and y.parities[j]) else one
            rows[j * x.dim + i] = {i * y.dim + j: sign}
    return SuperMorphism(src, dst, rows, _trusted=True)


def permutation_action(sigma: Permutation, x: SuperSpace, n: int,
                       cap: int = TENSOR_DIM_CAP) -> SuperMorphism:
    """The signed action of ``sigma`` on the n-fold tensor power of ``x``.

    The content of slot ``a`` moves to slot ``sigma(a)``; the sign is
    (-1) to the number of inversions of ``sigma`` among the odd slots,
    which is the composite-of-braidings sign.
    """
    if sigma.degree != n:
        raise ValueError(f"permutation degree {sigma.degree} != {n}")
    d = x.dim
    if d**n > cap:
        raise SizeCapError(f"tensor power dimension {d}**{n} exceeds cap {cap}")
    xn = tensor_power(x, n)
    parities = x.parities
    img = sigma.images
    k = x.k
    one = TruncatedScalar.one(k)
    minus = TruncatedScalar.of(-1, k)
    rows: dict[int, dict[int, TruncatedScalar]] = {}
    for t in itertools.product(range(d), repeat=n):
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
        rows.setdefault(row, {})[col] = minus if inv % 2 else one
    return SuperMorphism(xn, xn, rows, _trusted=True)


def evaluation(x: SuperSpace) -> SuperMorphism:
    """X (x) X* -> 1, pairing each basis vector with its dual."""
    src = tensor(x, dual(x))
    one = TruncatedScalar.one(x.k)
    d = x.dim
    rows = {0: {i * d + i: one for i in range(d)}} if d else {}
    return SuperMorphism(src, SuperSpace.unit(x.k), rows, _trusted=True)


def coevaluation(x: SuperSpace) -> SuperMorphism:
    """1 -> X* (x) X, the sum of e^i (x) e_i."""
    dst = tensor(dual(x), x)
    one = TruncatedScalar.one(x.k)
    d = x.dim
    rows = {i * d + i: {0: one} for i in range(d)}
    return SuperMorphism(SuperSpace.unit(x.k), dst, rows, _trusted=True)


def trace(f: SuperMorphism) -> TruncatedScalar:
    """The categorical trace, computed as the supertrace."""
    return f.supertrace()


def dim(x: SuperSpace) -> TruncatedScalar:
    """trace(id) = p - q."""
    return TruncatedScalar.of(x.p - x.q, x.k)


def realization(f: SuperMorphism) -> SuperMorphism:
    """Set eps to 0.  A tensor functor onto the k = 1 layer."""
    return f.realization()


def is_hom_trivial(f: SuperMorphism) -> bool:
    return f.is_hom_trivial()


# --- exact inversion utilities --------------------------------------------------


def _rational_inverse(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [list(row) + [Fraction(int(i == r)) for i in range(n)]
           for r, row in enumerate(mat)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def invert_unit(f: SuperMorphism) -> SuperMorphism:
    """Exact inverse of an endomorphism whose realization is invertible.

    The realization is inverted over Q by Gauss-Jordan; the nilpotent
    correction is a finite geometric series.
    """
    if not f.is_endomorphism():
        raise ValueError("only endomorphisms are inverted")
    n = f.source.dim
    dense = [[f.entry(i, j).realization() for j in range(n)] for i in range(n)]
    rinv = _rational_inverse(dense)
    k = f.k
    g0 = SuperMorphism.from_entries(
        f.source, f.source,
        {(i, j): TruncatedScalar.of(v, k) for i, row in enumerate(rinv)
         for j, v in enumerate(row) if v},
        _trusted=True)
    ident = SuperMorphism.identity(f.source)
    resid = ident - f.compose(g0)
    acc = ident
    term = ident
    for _ in range(k - 1):
        term = term.compose(resid)
        if term.is_zero():
            break
        acc = acc + term
    return g0.compose(acc)


def exp_nilpotent(f: SuperMorphism) -> SuperMorphism:
    """exp of a homologically trivial endomorphism (a finite sum)."""
    if not f.is_endomorphism():
        raise ValueError("exp of a non-endomorphism")
    if not f.is_hom_trivial():
        raise ValueError("exp is only defined here for hom-trivial morphisms")
    acc = SuperMorphism.identity(f.source)
    term = SuperMorphism.identity(f.source)
    for m in range(1, f.k):
        term = term.compose(f)
        if term.is_zero():
            break
        acc = acc + term.scale(Fraction(1, math.factorial(m)))
    return acc
