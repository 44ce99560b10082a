"""Ideals of a finite ring: enumeration, arithmetic and classification.

An ideal is identified by its element set.  Ideals are ordered canonically by
``(cardinality, sorted elements)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .errors import RingMismatch
from .ring import INDEX, FiniteRing, nilradical


def _mask(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << int(x)
    return m


@dataclass(frozen=True, eq=False)
class Ideal:
    ring: FiniteRing = field(repr=False)
    elements: tuple[int, ...]
    mask: int = field(repr=False)

    @classmethod
    def from_indices(cls, ring: FiniteRing, indices) -> "Ideal":
        elems = tuple(sorted({int(x) for x in indices}))
        return cls(ring, elems, _mask(elems))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.mask == other.mask and self.ring.label == other.ring.label

    def __hash__(self) -> int:
        return hash((self.ring.label, self.mask))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return isinstance(x, (int, np.integer)) and bool(self.mask >> int(x) & 1)

    def __le__(self, other: "Ideal") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Ideal") -> bool:
        return self <= other and self.mask != other.mask

    @property
    def sort_key(self) -> tuple:
        return (len(self.elements), self.elements)

    @cached_property
    def indices(self) -> np.ndarray:
        arr = np.asarray(self.elements, dtype=INDEX)
        arr.setflags(write=False)
        return arr

    @property
    def is_zero(self) -> bool:
        return len(self.elements) == 1

    @property
    def is_whole(self) -> bool:
        return len(self.elements) == self.ring.order

    def describe(self) -> str:
        return "{" + ",".join(str(x) for x in self.elements) + "}"

    def describe_named(self) -> str:
        return "{" + ", ".join(self.ring.names[x] for x in self.elements) + "}"


def _check_same(a: Ideal, b: Ideal) -> None:
    if not a.ring.same_as(b.ring):
        raise RingMismatch(f"ideals of {a.ring.label} and {b.ring.label}")


def zero_ideal(ring: FiniteRing) -> Ideal:
    return Ideal.from_indices(ring, [ring.zero])


def whole_ideal(ring: FiniteRing) -> Ideal:
    return Ideal.from_indices(ring, range(ring.order))


def principal_ideal(ring: FiniteRing, x: int) -> Ideal:
    return Ideal.from_indices(ring, np.unique(ring.mul[:, int(x)]))


def generated_ideal(ring: FiniteRing, generators: Iterable[int]) -> Ideal:
    gens = np.asarray(sorted({int(g) for g in generators}), dtype=INDEX)
    if gens.size == 0:
        return zero_ideal(ring)
    multiples = np.unique(ring.mul[:, gens]).astype(INDEX)
    return Ideal.from_indices(ring, kernels.additive_closure(ring.add, multiples, ring.zero))


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    _check_same(a, b)
    return Ideal.from_indices(a.ring, kernels.sumset(a.ring.add, a.indices, b.indices))


def ideal_intersection(a: Ideal, b: Ideal) -> Ideal:
    _check_same(a, b)
    m = a.mask & b.mask
    return Ideal(a.ring, tuple(x for x in a.elements if m >> x & 1), m)


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    """Ideal generated by all products ``x*y`` with ``x`` in ``a`` and ``y`` in ``b``."""
    _check_same(a, b)
    ring = a.ring
    prods = kernels.prodset(ring.mul, a.indices, b.indices)
    return Ideal.from_indices(ring, kernels.additive_closure(ring.add, prods, ring.zero))


def ideal_power(a: Ideal, k: int) -> Ideal:
    if k < 1:
        raise ValueError(f"ideal power needs k >= 1, got {k}")
    result = a
    for _ in range(k - 1):
        result = ideal_product(result, a)
    return result


def annihilator(a: Ideal) -> Ideal:
    ring = a.ring
    return Ideal.from_indices(ring, kernels.annihilator(ring.mul, a.indices, ring.zero))


class IdealLattice:
    """All ideals of a ring in canonical order, with lookup by element set."""

    def __init__(self, ring: FiniteRing, ideals: Iterable[Ideal]):
        self.ring = ring
        self.ideals: tuple[Ideal, ...] = tuple(sorted(ideals, key=lambda i: i.sort_key))
        self._position = {i.mask: k for k, i in enumerate(self.ideals)}

    def __len__(self) -> int:
        return len(self.ideals)

    def __iter__(self) -> Iterator[Ideal]:
        return iter(self.ideals)

    def __getitem__(self, k: int) -> Ideal:
        return self.ideals[k]

    def __contains__(self, ideal: object) -> bool:
        return isinstance(ideal, Ideal) and ideal.mask in self._position

    def position(self, ideal: Ideal) -> int:
        return self._position[ideal.mask]

    def lookup(self, elements: Iterable[int]) -> Ideal | None:
        k = self._position.get(_mask(elements))
        return None if k is None else self.ideals[k]

    @property
    def zero(self) -> Ideal:
        return self.ideals[0]

    @property
    def whole(self) -> Ideal:
        return self.ideals[-1]

    @cached_property
    def maximal(self) -> tuple[Ideal, ...]:
        proper = [i for i in self.ideals if not i.is_whole]
        return tuple(i for i in proper if not any(i < j for j in proper))

    @cached_property
    def minimal(self) -> tuple[Ideal, ...]:
        nonzero = [i for i in self.ideals if not i.is_zero]
        return tuple(i for i in nonzero if not any(j < i for j in nonzero))


def enumerate_ideals(ring: FiniteRing) -> IdealLattice:
    """Every ideal, as the closure of the principal ideals under sums."""
    cached = ring._cache.get("lattice")
    if cached is not None:
        return cached
    principals: dict[int, Ideal] = {}
    for x in range(ring.order):
        p = principal_ideal(ring, x)
        principals.setdefault(p.mask, p)
    found = dict(principals)
    frontier = list(principals.values())
    gens = list(principals.values())
    while frontier:
        fresh = []
        for i in frontier:
            for p in gens:
                if p <= i:
                    continue
                s = ideal_sum(i, p)
                if s.mask not in found:
                    found[s.mask] = s
                    fresh.append(s)
        frontier = fresh
    lattice = IdealLattice(ring, found.values())
    ring._cache["lattice"] = lattice
    return lattice


def annihilating_ideal_vertices(ring: FiniteRing) -> list[Ideal]:
    """Non-zero ideals with non-zero annihilator, in canonical order."""
    return [i for i in enumerate_ideals(ring) if not i.is_zero and not annihilator(i).is_zero]


def nilradical_ideal(ring: FiniteRing) -> Ideal:
    return Ideal.from_indices(ring, nilradical(ring).elements)


def is_prime_ideal(ring: FiniteRing, ideal: Ideal) -> bool:
    if ideal.is_whole:
        return False
    inside = np.zeros(ring.order, dtype=bool)
    inside[ideal.indices] = True
    lands = inside[ring.mul]
    escapes = lands & ~inside[:, None] & ~inside[None, :]
    return not bool(escapes.any())


def prime_ideals(ring: FiniteRing) -> list[Ideal]:
    return [i for i in enumerate_ideals(ring) if is_prime_ideal(ring, i)]


def minimal_primes(ring: FiniteRing) -> list[Ideal]:
    primes = prime_ideals(ring)
    return [p for p in primes if not any(q < p for q in primes)]


def maximal_ideals(ring: FiniteRing) -> list[Ideal]:
    return list(enumerate_ideals(ring).maximal)


def minimal_ideals(ring: FiniteRing) -> list[Ideal]:
    return list(enumerate_ideals(ring).minimal)


def is_minimal_ideal(ring: FiniteRing, ideal: Ideal) -> bool:
    return ideal in enumerate_ideals(ring).minimal


def is_nilpotent_ideal(ideal: Ideal) -> bool:
    """Whether some power of ``ideal`` is zero; powers are tried up to the lattice size."""
    cap = len(enumerate_ideals(ideal.ring))
    power = ideal
    for _ in range(cap):
        if power.is_zero:
            return True
        nxt = ideal_product(power, ideal)
        if nxt == power:
            return False
        power = nxt
    return power.is_zero


def is_principal_ideal_ring(ring: FiniteRing) -> bool:
    principals = {principal_ideal(ring, x).mask for x in range(ring.order)}
    return all(i.mask in principals for i in enumerate_ideals(ring))


def is_local(ring: FiniteRing) -> bool:
    return len(enumerate_ideals(ring).maximal) == 1


def has_unique_nontrivial_ideal(ring: FiniteRing) -> bool:
    return len(enumerate_ideals(ring)) == 3
