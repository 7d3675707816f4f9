"""Symmetric-group combinatorics.

Partitions, permutations, irreducible characters (Murnaghan-Nakayama),
and the central idempotents of the rational group algebra Q[S_n].
All arithmetic is exact; coefficients are `fractions.Fraction`.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import SizeCapError

#: degree guard for partition / character enumeration
PARTITION_BOUND = 12
#: degree guard for group-algebra work (elements carry up to n! terms)
CONVOLUTION_BOUND = 7


class Partition:
    """A weakly decreasing tuple of positive integers summing to ``n``."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        self.parts = parts

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({self.parts!r})"

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def hook_lengths(self) -> list[list[int]]:
        conj = self.conjugate().parts
        return [
            [(row - j) + (conj[j] - i) - 1 for j in range(row)]
            for i, row in enumerate(self.parts)
        ]


#: a cycle type is itself a partition of n
CycleType = Partition


@lru_cache(maxsize=None)
def _partition_tuples(n: int, maxpart: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int, bound: int = PARTITION_BOUND) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, (n) first."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > bound:
        raise SizeCapError(f"partition degree {n} exceeds bound {bound}")
    return [Partition(p) for p in _partition_tuples(n, n)]


def hook_dimension(lam: Partition) -> int:
    """Dimension of the irreducible S_n representation attached to ``lam``."""
    d = math.factorial(lam.n)
    for row in lam.hook_lengths():
        for h in row:
            assert d % h == 0
            d //= h
    return d


class Permutation:
    """A bijection of ``{0, ..., n-1}`` stored as its tuple of images."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _make(cls, images: tuple[int, ...]) -> "Permutation":
        # internal fast path: caller guarantees validity
        self = object.__new__(cls)
        self.images = images
        self._hash = hash(images)
        return self

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._make(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(n))
        images[i], images[j] = images[j], images[i]
        return cls(images)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        images = list(range(n))
        for cycle in cycles:
            cycle = list(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Compose, ``other`` applied first: ``(a * b)(i) == a(b(i))``."""
        a, b = self.images, other.images
        if len(a) != len(b):
            raise ValueError("degrees differ")
        return Permutation._make(tuple(a[b[i]] for i in range(len(a))))

    def inverse(self) -> "Permutation":
        images = [0] * len(self.images)
        for i, j in enumerate(self.images):
            images[j] = i
        return Permutation._make(tuple(images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> Partition:
        return Partition(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        return -1 if (len(self.images) - len(self.cycles())) % 2 else 1

    def is_identity(self) -> bool:
        return self.images == tuple(range(len(self.images)))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Permutation({self.images!r})"


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(n)):
        yield Permutation._make(images)


def conjugacy_class_size(ct: Partition) -> int:
    """Number of permutations of cycle type ``ct``."""
    z = 1
    for length, mult in _multiplicities(ct.parts).items():
        z *= length**mult * math.factorial(mult)
    return math.factorial(ct.n) // z


def _multiplicities(parts: tuple[int, ...]) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in parts:
        out[p] = out.get(p, 0) + 1
    return out


# --- characters ------------------------------------------------------------


def character(lam: Partition, ct: CycleType) -> int:
    """Character of the irreducible attached to ``lam`` on class ``ct``."""
    if lam.n != ct.n:
        raise ValueError(f"degree mismatch: |{lam.parts}| = {lam.n}, |{ct.parts}| = {ct.n}")
    return _mn(lam.parts, ct.parts)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    m, rest = rho[0], rho[1:]
    total = 0
    for mu, height in _border_strip_removals(lam, m):
        total += (-1) ** height * _mn(mu, rest)
    return total


def _border_strip_removals(lam: tuple[int, ...], m: int):
    """All ways to remove a connected border strip of ``m`` cells."""
    out = []
    L = len(lam)
    for s in range(L):
        for e in range(s, L):
            tail = lam[e + 1] if e + 1 < L else 0
            last = lam[s] + (e - s) - m
            if not (tail <= last <= lam[e] - 1):
                continue
            mu = list(lam[:s])
            mu.extend(lam[i + 1] - 1 for i in range(s, e))
            mu.append(last)
            mu.extend(lam[e + 1:])
            while mu and mu[-1] == 0:
                mu.pop()
            out.append((tuple(mu), e - s))
    return out


# --- group algebra ----------------------------------------------------------


class GroupAlgebraElement:
    """A finite Q-linear combination of degree-``n`` permutations.

    Zero coefficients are never stored.  ``*`` is convolution, guarded by
    ``CONVOLUTION_BOUND`` because elements carry up to n! terms.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean: dict[Permutation, Fraction] = {}
        for perm, c in (terms or {}).items():
            if perm.degree != n:
                raise ValueError(f"term degree {perm.degree} != {n}")
            c = Fraction(c)
            if c:
                clean[perm] = c
        self.terms = clean

    @classmethod
    def identity(cls, n: int) -> "GroupAlgebraElement":
        return cls(n, {Permutation.identity(n): Fraction(1)})

    def coefficient(self, perm: Permutation) -> Fraction:
        return self.terms.get(perm, Fraction(0))

    def __add__(self, other):
        self._check_degree(other)
        terms = dict(self.terms)
        for perm, c in other.terms.items():
            terms[perm] = terms.get(perm, Fraction(0)) + c
        return GroupAlgebraElement(self.n, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GroupAlgebraElement(self.n, {p: -c for p, c in self.terms.items()})

    def scaled(self, c) -> "GroupAlgebraElement":
        c = Fraction(c)
        return GroupAlgebraElement(self.n, {p: c * v for p, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scaled(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        self._check_degree(other)
        if self.n > CONVOLUTION_BOUND:
            raise SizeCapError(
                f"convolution degree {self.n} exceeds bound {CONVOLUTION_BOUND}"
            )
        n = self.n
        acc: dict[tuple[int, ...], Fraction] = {}
        for pa, ca in self.terms.items():
            a = pa.images
            for pb, cb in other.terms.items():
                b = pb.images
                key = tuple(a[b[i]] for i in range(n))
                prev = acc.get(key)
                acc[key] = ca * cb if prev is None else prev + ca * cb
        return GroupAlgebraElement(
            n, {Permutation._make(k): c for k, c in acc.items() if c}
        )

    def __eq__(self, other):
        return (
            isinstance(other, GroupAlgebraElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return f"GroupAlgebraElement({self.n}, 0)"
        bits = [
            f"{c}*{p.images}" for p, c in sorted(self.terms.items(), key=lambda t: t[0].images)
        ]
        return f"GroupAlgebraElement({self.n}, {' + '.join(bits)})"

    def _check_degree(self, other):
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} != {other.n}")


def young_idempotent(lam: Partition, bound: int = CONVOLUTION_BOUND) -> GroupAlgebraElement:
    """The central idempotent of Q[S_n] attached to ``lam``.

    Coefficient of a permutation with cycle type ``ct`` is
    ``dim * character(lam, ct) / n!`` where ``dim = hook_dimension(lam)``.
    """
    n = lam.n
    if n > bound:
        raise SizeCapError(f"group algebra degree {n} exceeds bound {bound}")
    dim = hook_dimension(lam)
    nfact = math.factorial(n)
    chi_by_type: dict[tuple[int, ...], int] = {}
    terms: dict[Permutation, Fraction] = {}
    for perm in all_permutations(n):
        ct = perm.cycle_type()
        chi = chi_by_type.get(ct.parts)
        if chi is None:
            chi = character(lam, ct)
            chi_by_type[ct.parts] = chi
        if chi:
            terms[perm] = Fraction(dim * chi, nfact)
    return GroupAlgebraElement(n, terms)
