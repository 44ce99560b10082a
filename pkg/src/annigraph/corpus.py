"""Exhaustive corpora of small rings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InvalidOrder
from .ring import FiniteRing, is_prime
from .spec import Cyclic, NullSquare, PolyQuot, Product, RingSpec, build, render, spec_order

FAMILIES = frozenset({"cyclic", "polyquot", "nullsquare", "products"})


@dataclass(frozen=True)
class CorpusConfig:
    max_order: int
    families: frozenset[str] = FAMILIES
    max_poly_degree: int | None = None

    def __post_init__(self):
        if self.max_order < 2:
            raise InvalidOrder(f"max_order must be at least 2, got {self.max_order}")
        unknown = set(self.families) - FAMILIES
        if unknown:
            raise ValueError(f"unknown corpus families: {sorted(unknown)}")
        object.__setattr__(self, "families", frozenset(self.families))


def _key(spec: RingSpec) -> tuple[int, str]:
    return (spec_order(spec), render(spec))


def _atoms(cfg: CorpusConfig) -> list[RingSpec]:
    m = cfg.max_order
    atoms: list[RingSpec] = []
    if "cyclic" in cfg.families:
        atoms.extend(Cyclic(n) for n in range(2, m + 1))
    primes = [p for p in range(2, m + 1) if is_prime(p)]
    if "polyquot" in cfg.families:
        for p in primes:
            d = 2
            while p ** d <= m and (cfg.max_poly_degree is None or d <= cfg.max_poly_degree):
                for low in itertools.product(range(p), repeat=d):
                    atoms.append(PolyQuot(p, tuple(reversed(low)) + (1,)))
                d += 1
    if "nullsquare" in cfg.families:
        for p in primes:
            d = 1
            while p ** (d + 1) <= m:
                atoms.append(NullSquare(p, d))
                d += 1
    return sorted(atoms, key=_key)


def corpus_specs(cfg: CorpusConfig) -> list[RingSpec]:
    """Ring specifications of the corpus, in canonical ``(order, label)`` order.

    Products are all multisets of at least two atoms (factors in canonical
    order, left-associated) whose order fits.
    """
    atoms = _atoms(cfg)
    specs = list(atoms)
    if "products" in cfg.families:
        sizes = [spec_order(a) for a in atoms]

        def extend(prefix: RingSpec, order: int, start: int, depth: int):
            for k in range(start, len(atoms)):
                if order * sizes[k] > cfg.max_order:
                    break
                node = Product(prefix, atoms[k])
                specs.append(node)
                extend(node, order * sizes[k], k, depth + 1)

        for k, a in enumerate(atoms):
            if sizes[k] * sizes[k] > cfg.max_order:
                break
            extend(a, sizes[k], k, 1)
    return sorted(specs, key=_key)


def generate_corpus(cfg: CorpusConfig) -> list[FiniteRing]:
    return [build(s) for s in corpus_specs(cfg)]
