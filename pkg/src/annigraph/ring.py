"""Finite commutative unital rings given by explicit operation tables.

Elements are the integers ``0 .. n-1``.  Every constructor in this module
builds dense ``n x n`` addition and multiplication tables; all higher layers
consume only those tables.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .errors import (
    AxiomViolation,
    InvalidCharacteristic,
    InvalidModulus,
    InvalidOrder,
    ZeroRingError,
)

INDEX = kernels.INDEX

DEFAULT_VALIDATION_BOUND = 256
_SAMPLED_TRIPLES = 20000


def validation_bound() -> int:
    """Largest order whose axioms are checked exhaustively.

    ``ANNIGRAPH_MAX_VALIDATE`` overrides the default of 256.
    """
    raw = os.environ.get("ANNIGRAPH_MAX_VALIDATE")
    if raw is None or raw.strip() == "":
        return DEFAULT_VALIDATION_BOUND
    return int(raw)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class FiniteRing:
    """A finite commutative ring with identity.

    Instances are immutable: the tables are read-only arrays, and the only
    state added after construction is a private memo of derived structures
    (ideal lattice, graphs) that are pure functions of the tables.
    """

    __slots__ = ("order", "add", "mul", "zero", "one", "label", "names", "_cache")

    def __init__(
        self,
        add: np.ndarray,
        mul: np.ndarray,
        zero: int,
        one: int,
        label: str,
        names: Sequence[str] | None = None,
        *,
        validate: bool = True,
        allow_zero_ring: bool = False,
    ):
        add = np.ascontiguousarray(add, dtype=INDEX)
        mul = np.ascontiguousarray(mul, dtype=INDEX)
        add.setflags(write=False)
        mul.setflags(write=False)
        self.order = int(add.shape[0])
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.one = int(one)
        self.label = label
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(self.order))
        self._cache: dict = {}
        if self.order < 2 and not allow_zero_ring:
            raise ZeroRingError(f"{label}: ring of order {self.order} rejected")
        if validate:
            self.validate()

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.order))

    def same_as(self, other: "FiniteRing") -> bool:
        if self is other:
            return True
        return (
            self.label == other.label
            and self.order == other.order
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.mul, other.mul)
        )

    def name(self, x: int) -> str:
        return self.names[x]

    def neg(self, x: int) -> int:
        return int(np.flatnonzero(self.add[x] == self.zero)[0])

    def power(self, x: int, k: int) -> int:
        result = self.one
        for _ in range(k):
            result = int(self.mul[result, x])
        return result

    def validate(self) -> None:
        """Raise :class:`AxiomViolation` unless the tables form a commutative unital ring."""
        n = self.order
        add, mul = self.add, self.mul
        if add.shape != (n, n) or mul.shape != (n, n):
            raise AxiomViolation(f"{self.label}: tables must be {n}x{n}")
        if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
            raise AxiomViolation(f"{self.label}: table entry out of range")
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise AxiomViolation(f"{self.label}: identity index out of range")
        if not np.array_equal(add, add.T):
            raise AxiomViolation(f"{self.label}: addition not commutative")
        if not np.array_equal(mul, mul.T):
            raise AxiomViolation(f"{self.label}: multiplication not commutative")
        ident = np.arange(n, dtype=INDEX)
        if not np.array_equal(add[self.zero], ident):
            raise AxiomViolation(f"{self.label}: zero is not an additive identity")
        if not np.array_equal(mul[self.one], ident):
            raise AxiomViolation(f"{self.label}: one is not a multiplicative identity")
        if not np.all(np.any(add == self.zero, axis=1)):
            raise AxiomViolation(f"{self.label}: missing additive inverse")
        if n >= 2 and self.zero == self.one:
            raise AxiomViolation(f"{self.label}: zero equals one")
        if n <= validation_bound():
            bad = kernels.axiom_violation(add, mul)
        else:
            bad = _sampled_violation(add, mul)
        if bad is not None:
            law, a, b, c = bad
            raise AxiomViolation(f"{self.label}: {law} fails at ({a}, {b}, {c})")


def _sampled_violation(add: np.ndarray, mul: np.ndarray):
    n = add.shape[0]
    rng = np.random.default_rng(0)
    a, b, c = rng.integers(0, n, size=(3, _SAMPLED_TRIPLES))
    checks = (
        ("add-assoc", add[add[a, b], c], add[a, add[b, c]]),
        ("mul-assoc", mul[mul[a, b], c], mul[a, mul[b, c]]),
        ("distributive", mul[a, add[b, c]], add[mul[a, b], mul[a, c]]),
    )
    for law, lhs, rhs in checks:
        bad = np.flatnonzero(lhs != rhs)
        if bad.size:
            k = bad[0]
            return (law, int(a[k]), int(b[k]), int(c[k]))
    return None


@dataclass(frozen=True)
class ElementSet:
    """A sorted set of element indices of one ring."""

    ring_label: str
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements


# -- constructors ------------------------------------------------------------

def cyclic_ring(n: int) -> FiniteRing:
    """The ring of integers modulo ``n``."""
    if n < 2:
        raise InvalidOrder(f"Z_n needs n >= 2, got {n}")
    r = np.arange(n, dtype=np.int64)
    add = np.add.outer(r, r) % n
    mul = np.multiply.outer(r, r) % n
    return FiniteRing(add, mul, 0, 1 % n, f"Z{n}")


def render_poly(coeffs: Sequence[int]) -> str:
    """Render an ascending coefficient list as ``x^2+x+1``."""
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        if deg == 0:
            terms.append(str(c))
            continue
        lead = "" if c == 1 else str(c)
        terms.append(lead + ("x" if deg == 1 else f"x^{deg}"))
    return "+".join(terms) if terms else "0"


def _encode(vectors: np.ndarray, base: int) -> np.ndarray:
    weights = base ** np.arange(vectors.shape[-1], dtype=np.int64)
    return vectors @ weights


def poly_quotient_ring(p: int, modulus: Sequence[int]) -> FiniteRing:
    """``Z_p[x]/(f)`` for a monic ``f`` given as ascending coefficients.

    Elements are residues of degree below ``deg f``; the index of
    ``c0 + c1 x + ...`` is ``c0 + c1 p + c2 p^2 + ...``.
    """
    if not is_prime(p):
        raise InvalidCharacteristic(f"characteristic {p} is not prime")
    f = [int(c) for c in modulus]
    d = len(f) - 1
    if d < 1:
        raise InvalidModulus(f"modulus {f} has degree < 1")
    if any(c < 0 or c >= p for c in f):
        raise InvalidModulus(f"modulus coefficients must lie in 0..{p - 1}: {f}")
    if f[-1] != 1:
        raise InvalidModulus(f"modulus {render_poly(f)} is not monic")

    # reduction of x^k for k < 2d-1 back into degree < d
    reduce = np.zeros((2 * d - 1, d), dtype=np.int64)
    for k in range(d):
        reduce[k, k] = 1
    for k in range(d, 2 * d - 1):
        prev = reduce[k - 1]
        shifted = np.concatenate([[0], prev[:-1]])
        top = prev[-1]
        shifted = (shifted - top * np.asarray(f[:d], dtype=np.int64)) % p
        reduce[k] = shifted

    elems = np.array(list(itertools.product(range(p), repeat=d)), dtype=np.int64)[:, ::-1]
    conv = np.zeros((len(elems), len(elems), 2 * d - 1), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            conv[:, :, i + j] += np.multiply.outer(elems[:, i], elems[:, j])
    prod = (conv % p) @ reduce % p
    add = _encode((elems[:, None, :] + elems[None, :, :]) % p, p)
    mul = _encode(prod, p)
    names = [render_poly(list(v)) for v in elems]
    one = 1
    return FiniteRing(add, mul, 0, one, f"Z{p}[x]/({render_poly(f)})", names)


def null_square_local_ring(p: int, d: int) -> FiniteRing:
    """Trivial extension ``F_p ⋉ F_p^d``: ``(a, v)(b, w) = (ab, aw + bv)``.

    The maximal ideal ``{(0, v)}`` squares to zero.  The index of ``(a, v)`` is
    ``a + p * code(v)``.
    """
    if not is_prime(p):
        raise InvalidCharacteristic(f"characteristic {p} is not prime")
    if d < 1:
        raise InvalidOrder(f"null-square extension needs d >= 1, got {d}")
    elems = np.array(list(itertools.product(range(p), repeat=d + 1)), dtype=np.int64)[:, ::-1]
    a = elems[:, 0]
    v = elems[:, 1:]
    add = _encode((elems[:, None, :] + elems[None, :, :]) % p, p)
    top = np.multiply.outer(a, a) % p
    tail = (a[None, :, None] * v[:, None, :] + a[:, None, None] * v[None, :, :]) % p
    mul = _encode(np.concatenate([top[:, :, None], tail], axis=2), p)
    names = [f"({row[0]};{','.join(str(x) for x in row[1:])})" for row in elems]
    return FiniteRing(add, mul, 0, 1, f"N({p},{d})", names)


def product_ring(r1: FiniteRing, r2: FiniteRing) -> FiniteRing:
    """Direct product; the pair ``(i, j)`` has index ``i * |R2| + j``."""
    n1, n2 = r1.order, r2.order

    def combine(t1, t2):
        t = t1.astype(np.int64)[:, None, :, None] * n2 + t2.astype(np.int64)[None, :, None, :]
        return t.reshape(n1 * n2, n1 * n2)

    names = [f"({a},{b})" for a in r1.names for b in r2.names]
    return FiniteRing(
        combine(r1.add, r2.add),
        combine(r1.mul, r2.mul),
        r1.zero * n2 + r2.zero,
        r1.one * n2 + r2.one,
        f"{r1.label} x {r2.label}",
        names,
    )


def quotient_ring(ring: FiniteRing, ideal, *, allow_zero_ring: bool = False) -> FiniteRing:
    """``R/I`` on cosets, each represented by its smallest element.

    ``ideal`` is an :class:`~annigraph.ideals.Ideal` (or any object exposing
    ``elements``); the caller is responsible for it being an ideal of ``ring``.
    """
    members = np.asarray(ideal.elements, dtype=INDEX)
    reps = ring.add[:, members].min(axis=1)
    distinct = np.unique(reps)
    if distinct.size < 2 and not allow_zero_ring:
        raise ZeroRingError(f"{ring.label}: quotient by the whole ring is the zero ring")
    coset = np.empty(ring.order, dtype=np.int64)
    position = {int(r): k for k, r in enumerate(distinct)}
    for x in range(ring.order):
        coset[x] = position[int(reps[x])]
    add = coset[ring.add[np.ix_(distinct, distinct)]]
    mul = coset[ring.mul[np.ix_(distinct, distinct)]]
    body = ",".join(str(x) for x in ideal.elements)
    return FiniteRing(
        add,
        mul,
        int(coset[ring.zero]),
        int(coset[ring.one]),
        f"({ring.label})/{{{body}}}",
        [f"{ring.names[int(r)]}+I" for r in distinct],
        allow_zero_ring=allow_zero_ring,
    )


def corner_ring(ring: FiniteRing, e: int) -> FiniteRing:
    """The ring ``Re`` with identity ``e``, for an idempotent ``e``."""
    if int(ring.mul[e, e]) != e:
        raise ValueError(f"{ring.label}: element {e} is not idempotent")
    members = np.unique(ring.mul[:, e])
    position = np.full(ring.order, -1, dtype=np.int64)
    position[members] = np.arange(members.size)
    add = position[ring.add[np.ix_(members, members)]]
    mul = position[ring.mul[np.ix_(members, members)]]
    return FiniteRing(
        add,
        mul,
        int(position[ring.zero]),
        int(position[e]),
        f"{ring.label}*{ring.names[e]}",
        [ring.names[int(x)] for x in members],
        allow_zero_ring=True,
    )


# -- element-level predicates -------------------------------------------------

def nilradical(ring: FiniteRing) -> ElementSet:
    """Nilpotent elements (exponent search capped at the ring order)."""
    if "nil" not in ring._cache:
        nil = kernels.nilpotent_elements(ring.mul, ring.zero)
        ring._cache["nil"] = ElementSet(ring.label, tuple(int(x) for x in nil))
    return ring._cache["nil"]


def zero_divisor_set(ring: FiniteRing) -> ElementSet:
    """Zero divisors, including 0 itself."""
    if "zd" not in ring._cache:
        hits = ring.mul == ring.zero
        hits[:, ring.zero] = False
        zd = np.flatnonzero(hits.any(axis=1))
        ring._cache["zd"] = ElementSet(ring.label, tuple(int(x) for x in zd))
    return ring._cache["zd"]


def units(ring: FiniteRing) -> ElementSet:
    found = np.flatnonzero(np.any(ring.mul == ring.one, axis=1))
    return ElementSet(ring.label, tuple(int(x) for x in found))


def idempotents(ring: FiniteRing) -> ElementSet:
    diag = ring.mul[np.arange(ring.order), np.arange(ring.order)]
    found = np.flatnonzero(diag == np.arange(ring.order))
    return ElementSet(ring.label, tuple(int(x) for x in found))


def is_reduced(ring: FiniteRing) -> bool:
    return nilradical(ring).elements == (ring.zero,)


def is_zr_ideal(ring: FiniteRing) -> bool:
    """True iff the zero-divisor set is closed under addition."""
    zd = np.asarray(zero_divisor_set(ring).elements, dtype=INDEX)
    inside = np.zeros(ring.order, dtype=bool)
    inside[zd] = True
    return bool(inside[ring.add[np.ix_(zd, zd)]].all())


def nontrivial_idempotents(ring: FiniteRing) -> list[int]:
    return [e for e in idempotents(ring) if e not in (ring.zero, ring.one)]


def is_decomposable(ring: FiniteRing) -> bool:
    return bool(nontrivial_idempotents(ring))


def is_field(ring: FiniteRing) -> bool:
    return len(units(ring)) == ring.order - 1
