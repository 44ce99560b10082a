"""Executable checks of the structural theorems relating AG(R) and A_I(R).

Each theorem is a guard (when does the statement apply to ``R``) plus a set of
named clauses.  A clause is a predicate over a :class:`RingFacts` and zero or
more vertex indices; the check runs it over every relevant index tuple and
stops at the first tuple where it is false.  That tuple, as element sets,
becomes the witness, and :func:`replay_witness` re-evaluates the same clause
from scratch to confirm it.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Callable, Iterable, Sequence

import numpy as np

from .graphs import (
    INF,
    GraphKind,
    IdealGraph,
    bipartition,
    build_graph,
    diameter,
    distances,
    girth,
    is_complete,
    is_connected,
    is_cycle,
    is_path,
    star_centers,
)
from .ideals import (
    Ideal,
    annihilator,
    enumerate_ideals,
    ideal_intersection,
    ideal_power,
    ideal_product,
    is_nilpotent_ideal,
    is_prime_ideal,
    is_principal_ideal_ring,
    minimal_primes,
    nilradical_ideal,
)
from .ring import (
    FiniteRing,
    corner_ring,
    is_field,
    is_reduced,
    is_zr_ideal,
    nontrivial_idempotents,
    zero_divisor_set,
)


class TheoremId(str, Enum):
    L2_1 = "L2.1"
    T2_2 = "T2.2"
    THH1 = "T-thh1"
    GIRT = "T-girt"
    NONEQ = "C-noneq"
    COG13 = "C-cog13"
    REDUCED = "L-reduced"
    RED1 = "C-red1"
    COMPLETE = "T-complete"
    MIN = "T-Min"
    IDENTICAL = "T-indentical"
    STAR = "T-star"
    ST123 = "T-st123"
    FINAL = "C-final"
    T1 = "T-t1"
    TH2 = "T-th2"
    NON1 = "L-non1"
    PRIN = "T-prin"
    MINI = "L-mini"
    SALEHI = "T-salehi-refutation"
    GRITH = "T-grith"
    THM8 = "T-thm8"
    ARTINIAN = "T-Artinian"
    REMA123 = "R-rema123"
    INFINITY = "T-infinity"


THEOREM_ORDER = {t: k for k, t in enumerate(TheoremId)}


class Status(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Witness:
    clause: str
    vertices: tuple[tuple[int, ...], ...] = ()
    values: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "clause": self.clause,
            "vertices": [list(v) for v in self.vertices],
            "values": self.values,
        }


@dataclass(frozen=True)
class VerificationReport:
    theorem: TheoremId
    ring: str
    status: Status
    witness: Witness | None = None
    elapsed: float = 0.0
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem.value,
            "ring": self.ring,
            "status": self.status.value,
            "elapsed": round(self.elapsed, 6),
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.notes:
            out["notes"] = list(self.notes)
        return out


# -- per-ring facts -------------------------------------------------------------

@dataclass(frozen=True)
class Split:
    """A decomposition ``R = Re x R(1-e)`` found through the idempotent ``e``."""

    idempotent: int
    first: FiniteRing
    second: FiniteRing


class RingFacts:
    """Everything the checks need about one ring, computed once.

    ``ag`` and ``ai`` may be supplied to evaluate the theorems against
    substitute adjacency data (this is how witness replay is tested).
    """

    def __init__(self, ring: FiniteRing, *, ag: IdealGraph | None = None,
                 ai: IdealGraph | None = None):
        self.ring = ring
        self.lattice = enumerate_ideals(ring)
        self.ag = ag if ag is not None else build_graph(ring, GraphKind.AG)
        self.ai = ai if ai is not None else build_graph(ring, GraphKind.AI)
        self.vertices: tuple[Ideal, ...] = self.ai.vertices
        self.v = len(self.vertices)
        self._index = {x.mask: k for k, x in enumerate(self.vertices)}

    def index_of(self, elements: Sequence[int]) -> int | None:
        mask = 0
        for x in elements:
            mask |= 1 << int(x)
        return self._index.get(mask)

    @cached_property
    def ann(self) -> list[Ideal]:
        return [annihilator(x) for x in self.vertices]

    @cached_property
    def products(self) -> dict[tuple[int, int], Ideal]:
        out = {}
        for i in range(self.v):
            for j in range(i, self.v):
                out[i, j] = out[j, i] = ideal_product(self.vertices[i], self.vertices[j])
        return out

    def ann_of_product(self, i: int, j: int) -> Ideal:
        return annihilator(self.products[i, j])

    @cached_property
    def ag_dist(self) -> np.ndarray:
        return distances(self.ag)

    @cached_property
    def girth_ai(self) -> float:
        return girth(self.ai)

    @cached_property
    def girth_ag(self) -> float:
        return girth(self.ag)

    @cached_property
    def same(self) -> bool:
        return bool(np.array_equal(self.ai.adjacency, self.ag.adjacency))

    @cached_property
    def extra(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in self.ai.edges() if not self.ag.has_edge(a, b)]

    @cached_property
    def reduced(self) -> bool:
        return is_reduced(self.ring)

    @cached_property
    def nil(self) -> Ideal:
        return nilradical_ideal(self.ring)

    @cached_property
    def nil_square_zero(self) -> bool:
        return ideal_power(self.nil, 2).is_zero

    @cached_property
    def zd_mask(self) -> int:
        m = 0
        for x in zero_divisor_set(self.ring):
            m |= 1 << x
        return m

    @cached_property
    def zr_ideal(self) -> bool:
        return is_zr_ideal(self.ring)

    @cached_property
    def pir(self) -> bool:
        return is_principal_ideal_ring(self.ring)

    @cached_property
    def n_min(self) -> int:
        return len(minimal_primes(self.ring))

    @cached_property
    def splits(self) -> list[Split]:
        out = []
        ring = self.ring
        for e in nontrivial_idempotents(ring):
            f = int(ring.add[ring.one, ring.neg(e)])
            out.append(Split(e, corner_ring(ring, e), corner_ring(ring, f)))
        return out

    @cached_property
    def field_times_simple(self) -> Split | None:
        """A split ``F x S`` with ``F`` a field and ``S`` having exactly three ideals."""
        for s in self.splits:
            if is_field(s.first) and len(enumerate_ideals(s.second)) == 3:
                return s
        return None

    @cached_property
    def two_fields(self) -> bool:
        return any(is_field(s.first) and is_field(s.second) for s in self.splits)

    @cached_property
    def nilpotent(self) -> list[bool]:
        return [is_nilpotent_ideal(x) for x in self.vertices]

    @cached_property
    def minimal(self) -> list[bool]:
        mins = {x.mask for x in self.lattice.minimal}
        return [x.mask in mins for x in self.vertices]

    @cached_property
    def ag_centers(self) -> list[int]:
        return star_centers(self.ag)

    @property
    def ag_star(self) -> bool:
        return bool(self.ag_centers)

    @cached_property
    def ai_star(self) -> bool:
        return bool(star_centers(self.ai))

    def snapshot(self) -> dict:
        return {
            "vertices": self.v,
            "ai_edges": self.ai.edge_count,
            "ag_edges": self.ag.edge_count,
            "girth_ai": _fmt(self.girth_ai),
            "girth_ag": _fmt(self.girth_ag),
            "ai_equals_ag": self.same,
        }


def _fmt(x):
    return "inf" if x == INF else x


def _facts(ring_or_facts) -> RingFacts:
    return ring_or_facts if isinstance(ring_or_facts, RingFacts) else RingFacts(ring_or_facts)


def _pairs(f: RingFacts) -> Iterable[tuple[int, int]]:
    return itertools.combinations(range(f.v), 2)


def _subset(a: Ideal, b: Ideal) -> bool:
    return a.mask & ~b.mask == 0


def _comparable(f: RingFacts, i: int, j: int) -> bool:
    return _subset(f.ann[i], f.ann[j]) or _subset(f.ann[j], f.ann[i])


def _is_kmn_both_ge2(g: IdealGraph) -> bool:
    parts = bipartition(g)
    return parts is not None and min(len(p) for p in parts) >= 2


def _is_k11(g: IdealGraph) -> bool:
    return g.order == 2 and g.edge_count == 1


# -- clause registry ------------------------------------------------------------

Predicate = Callable[..., bool]
_CLAUSES: dict[tuple[TheoremId, str], Predicate] = {}


def clause(theorem: TheoremId, name: str):
    def register(fn: Predicate) -> Predicate:
        _CLAUSES[theorem, name] = fn
        return fn
    return register


def _all_equal(*values: bool) -> bool:
    return len(set(values)) <= 1


# L2.1 ---------------------------------------------------------------------------

@clause(TheoremId.L2_1, "1")
def _l21_1(f, i, j):
    ann_ij = f.ann_of_product(i, j)
    collapses = ann_ij == f.ann[i] or ann_ij == f.ann[j]
    return (not f.ai.has_edge(i, j)) == collapses


@clause(TheoremId.L2_1, "2")
def _l21_2(f, i, j):
    return not f.ag.has_edge(i, j) or f.ai.has_edge(i, j)


@clause(TheoremId.L2_1, "3")
def _l21_3(f, i, j):
    return f.ai.has_edge(i, j) or _comparable(f, i, j)


@clause(TheoremId.L2_1, "4")
def _l21_4(f, i, j):
    return _comparable(f, i, j) or f.ai.has_edge(i, j)


@clause(TheoremId.L2_1, "5")
def _l21_5(f, i, j):
    return f.ag_dist[i, j] != 3 or f.ai.has_edge(i, j)


@clause(TheoremId.L2_1, "6")
def _l21_6(f, i, j):
    if f.ai.has_edge(i, j):
        return True
    common = f.ag.adjacency[i] & f.ag.adjacency[j]
    common[[i, j]] = False
    return bool(common.any())


# T2.2, C-cog13 ------------------------------------------------------------------

@clause(TheoremId.T2_2, "connected")
def _t22_connected(f):
    return is_connected(f.ai)


@clause(TheoremId.T2_2, "diameter")
def _t22_diam(f):
    d = diameter(f.ai)
    return d is not None and d <= 2


@clause(TheoremId.T2_2, "girth")
def _t22_girth(f):
    return f.girth_ai == INF or f.girth_ai <= 4


@clause(TheoremId.T2_2, "ag-bounds")
def _t22_ag(f):
    d = diameter(f.ag)
    return is_connected(f.ag) and d is not None and d <= 3 and (f.girth_ag == INF or f.girth_ag <= 4)


@clause(TheoremId.COG13, "girth")
def _cog13(f):
    return f.girth_ai in (3, 4)


# T-thh1 -------------------------------------------------------------------------

@clause(TheoremId.THH1, "girth")
def _thh1_girth(f):
    return f.girth_ai == 3


def _extra_triangle(f) -> tuple[int, int, int] | None:
    extra = np.zeros((f.v, f.v), dtype=bool)
    for a, b in f.extra:
        extra[a, b] = extra[b, a] = True
    for a, b in f.extra:
        common = np.flatnonzero(extra[a] & extra[b])
        if common.size:
            return (a, b, int(common[0]))
    return None


@clause(TheoremId.THH1, "triangle")
def _thh1_triangle(f):
    return _extra_triangle(f) is not None


# T-girt, C-noneq ----------------------------------------------------------------

def _has_two_path(f, i, j) -> bool:
    return bool((f.ai.adjacency[i] & f.ai.adjacency[j]).any())


def _girt_clauses(f) -> dict[str, bool]:
    return {
        "(1) girth=4": f.girth_ai == 4,
        "(2) no extra edge has a 2-path": all(not _has_two_path(f, a, b) for a, b in f.extra),
        "(3) some extra edge has no 2-path": any(not _has_two_path(f, a, b) for a, b in f.extra),
        "(4) R = F x S": f.field_times_simple is not None,
    }


@clause(TheoremId.GIRT, "equivalence")
def _girt_equiv(f):
    return _all_equal(*_girt_clauses(f).values())


@clause(TheoremId.GIRT, "ll1")
def _girt_ll1(f, i, j, k):
    # k inside Ann(IJ), kI != 0 and kJ != 0 forces an all-extra triangle i-k-j
    if k in (i, j) or not f.ai.has_edge(i, j) or f.ag.has_edge(i, j):
        return True
    if not _subset(f.vertices[k], f.ann_of_product(i, j)):
        return True
    if f.products[k, i].is_zero or f.products[k, j].is_zero:
        return True
    return (f.ai.has_edge(i, k) and f.ai.has_edge(k, j)
            and not f.ag.has_edge(i, k) and not f.ag.has_edge(k, j))


@clause(TheoremId.NONEQ, "triangle")
def _noneq(f, i, j):
    return _has_two_path(f, i, j)


# reduced rings -------------------------------------------------------------------

@clause(TheoremId.REDUCED, "forward")
def _reduced_fwd(f, i, j):
    if not f.ai.has_edge(i, j):
        return True
    return (not ideal_intersection(f.vertices[i], f.ann[j]).is_zero
            and not ideal_intersection(f.vertices[j], f.ann[i]).is_zero)


@clause(TheoremId.REDUCED, "converse")
def _reduced_conv(f, i, j):
    meets = (not ideal_intersection(f.vertices[i], f.ann[j]).is_zero
             and not ideal_intersection(f.vertices[j], f.ann[i]).is_zero)
    return not meets or f.ai.has_edge(i, j)


@clause(TheoremId.RED1, "forward")
def _red1_fwd(f, i, j):
    return _comparable(f, i, j) or f.ai.has_edge(i, j)


@clause(TheoremId.RED1, "converse")
def _red1_conv(f, i, j):
    return not f.ai.has_edge(i, j) or not _comparable(f, i, j)


@clause(TheoremId.COMPLETE, "equivalence")
def _complete(f):
    return _all_equal(is_complete(f.ai), is_complete(f.ag), f.two_fields)


@clause(TheoremId.MIN, "distinct")
def _min_distinct(f):
    return not f.same


@clause(TheoremId.MIN, "girth")
def _min_girth(f):
    return f.girth_ai == 3


@clause(TheoremId.MIN, "ag-diameter")
def _min_ag_diam(f):
    return diameter(f.ag) == 3


@clause(TheoremId.IDENTICAL, "equivalence")
def _identical(f):
    return f.same == (f.n_min == 2)


def _star_clauses(f) -> dict[str, bool]:
    return {
        "(1)": f.girth_ai == 4,
        "(2)": f.same and f.girth_ag == 4,
        "(3)": f.girth_ag == 4,
        "(5)": _is_kmn_both_ge2(f.ag),
        "(6)": _is_kmn_both_ge2(f.ai),
    }


@clause(TheoremId.STAR, "equivalence")
def _star_equiv(f):
    return _all_equal(*_star_clauses(f).values())


@clause(TheoremId.STAR, "(3)=>(4)")
def _star_3_4(f):
    return f.girth_ag != 4 or f.n_min == 2


def _st123_clauses(f) -> dict[str, bool]:
    return {
        "(1)": f.girth_ai == INF,
        "(2)": f.same and f.girth_ag == INF,
        "(3)": f.girth_ag == INF,
        "(4)": f.n_min == 2 and f.ag_star,
        "(5)": f.two_fields,
        "(6)": f.ai_star,
    }


@clause(TheoremId.ST123, "equivalence")
def _st123(f):
    return _all_equal(*_st123_clauses(f).values())


@clause(TheoremId.FINAL, "equivalence")
def _final(f):
    return f.same == (f.girth_ai == f.girth_ag and f.girth_ai in (4, INF))


# non-reduced rings -----------------------------------------------------------------

@clause(TheoremId.T1, "distinct")
def _t1_distinct(f):
    return not f.same


@clause(TheoremId.T1, "ag-diameter")
def _t1_diam(f):
    return diameter(f.ag) == 3


@clause(TheoremId.TH2, "complete")
def _th2(f, i, j):
    return not (f.nilpotent[i] and f.nilpotent[j]) or f.ai.has_edge(i, j)


def _nil_ag_complete(f) -> bool:
    nil = [k for k in range(f.v) if f.nilpotent[k]]
    return all(f.ag.has_edge(a, b) for a, b in itertools.combinations(nil, 2))


@clause(TheoremId.NON1, "forward")
def _non1_fwd(f):
    return not f.nil_square_zero or _nil_ag_complete(f)


@clause(TheoremId.NON1, "converse")
def _non1_conv(f):
    return f.pir or not _nil_ag_complete(f) or f.nil_square_zero


@clause(TheoremId.PRIN, "distinct")
def _prin_distinct(f):
    return not f.same


@clause(TheoremId.PRIN, "girth")
def _prin_girth(f):
    return f.girth_ai == 3


def _good_center(f, c: int) -> bool:
    if not f.minimal[c]:
        return False
    return f.reduced or f.products[c, c].is_zero


@clause(TheoremId.REMA123, "center")
def _rema(f):
    return any(_good_center(f, c) for c in f.ag_centers)


@clause(TheoremId.MINI, "neighbourhoods")
def _mini(f, k):
    if not f.minimal[k]:
        return True
    return bool(np.array_equal(f.ag.adjacency[k], f.ai.adjacency[k]))


@clause(TheoremId.MINI, "minimal-are-vertices")
def _mini_vertices(f):
    return all(f.index_of(m.elements) is not None for m in f.lattice.minimal)


def _salehi_ring(f) -> bool:
    s = f.field_times_simple
    return s is not None and f.ring.order == 8 and s.first.order == 2 and s.second.order == 4


@clause(TheoremId.SALEHI, "four-vertices")
def _salehi_four(f):
    return f.v == 4


@clause(TheoremId.SALEHI, "ai-is-c4")
def _salehi_c4(f):
    return f.v == 4 and is_cycle(f.ai)


@clause(TheoremId.SALEHI, "ai-not-k23")
def _salehi_not_k23(f):
    return not (f.v == 5 and _kmn_sizes(f.ai) == [2, 3])


@clause(TheoremId.SALEHI, "ag-is-p4")
def _salehi_p4(f):
    return f.v == 4 and is_path(f.ag)


def _kmn_sizes(g: IdealGraph) -> list[int] | None:
    parts = bipartition(g)
    return None if parts is None else sorted(len(p) for p in parts)


def _grith_clauses(f) -> dict[str, bool]:
    return {
        "(1)": f.girth_ai == 4,
        "(2)": not f.same and f.girth_ai == 4,
        "(3)": f.field_times_simple is not None,
        "(4)": f.v == 4 and is_path(f.ag),
        "(5)": f.v == 4 and is_cycle(f.ai),
    }


@clause(TheoremId.GRITH, "equivalence")
def _grith(f):
    return _all_equal(*_grith_clauses(f).values())


@clause(TheoremId.THM8, "indecomposable")
def _thm8_indec(f):
    return not f.splits


@clause(TheoremId.THM8, "complete")
def _thm8_complete(f):
    return is_complete(f.ai)


@clause(TheoremId.ARTINIAN, "complete")
def _artinian(f):
    return is_complete(f.ai)


def _infinity_clauses(f) -> dict[str, bool]:
    nil_prime = is_prime_ideal(f.ring, f.nil)
    z_is_nil = f.zd_mask == f.nil.mask
    nil_minimal = f.nil in f.lattice.minimal
    return {
        "(1)": f.ai_star,
        "(2)": f.girth_ai == INF,
        "(3)": f.same and f.girth_ag == INF,
        "(4)": nil_prime and ((z_is_nil and f.v == 2) or (not z_is_nil and nil_minimal)),
        "(5)": _is_k11(f.ai),
        "(6)": _is_k11(f.ag),
    }


@clause(TheoremId.INFINITY, "equivalence")
def _infinity(f):
    return _all_equal(*_infinity_clauses(f).values())


_DETAILS: dict[TheoremId, Callable[[RingFacts], dict]] = {
    TheoremId.GIRT: _girt_clauses,
    TheoremId.STAR: _star_clauses,
    TheoremId.ST123: _st123_clauses,
    TheoremId.GRITH: _grith_clauses,
    TheoremId.INFINITY: _infinity_clauses,
}


# -- theorem table -----------------------------------------------------------------

Plan = list[tuple[str, Iterable[tuple[int, ...]]]]


@dataclass(frozen=True)
class Theorem:
    id: TheoremId
    guard: Callable[[RingFacts], bool]
    plan: Callable[[RingFacts], Plan]
    notes: tuple[str, ...] = ()


def _global(*names: str) -> Callable[[RingFacts], Plan]:
    return lambda f: [(n, [()]) for n in names]


def _pairwise(*names: str) -> Callable[[RingFacts], Plan]:
    return lambda f: [(n, list(_pairs(f))) for n in names]


def _nonreduced(f):
    return not f.reduced


def _reduced_nonfield(f):
    return f.reduced and f.v >= 1


THEOREMS: dict[TheoremId, Theorem] = {
    t.id: t
    for t in [
        Theorem(TheoremId.L2_1, lambda f: f.v >= 2, _pairwise("1", "2", "3", "4", "5", "6")),
        Theorem(TheoremId.T2_2, lambda f: f.v >= 2,
                _global("connected", "diameter", "girth", "ag-bounds")),
        Theorem(TheoremId.THH1, lambda f: f.reduced and not f.same, _global("girth", "triangle")),
        Theorem(
            TheoremId.GIRT,
            lambda f: not f.same,
            lambda f: [("equivalence", [()]),
                       ("ll1", [(a, b, k) for a, b in f.extra for k in range(f.v)])],
        ),
        Theorem(TheoremId.NONEQ, lambda f: not f.same and f.field_times_simple is None,
                lambda f: [("triangle", list(f.extra))]),
        Theorem(TheoremId.COG13, lambda f: not f.same, _global("girth")),
        Theorem(
            TheoremId.REDUCED,
            lambda f: f.v >= 2,
            lambda f: [("forward", list(_pairs(f)))]
            + ([("converse", list(_pairs(f)))] if f.reduced else []),
        ),
        Theorem(
            TheoremId.RED1,
            lambda f: f.v >= 2,
            lambda f: [("forward", list(_pairs(f)))]
            + ([("converse", list(_pairs(f)))] if f.reduced else []),
        ),
        Theorem(TheoremId.COMPLETE, _reduced_nonfield, _global("equivalence")),
        Theorem(TheoremId.MIN, lambda f: f.reduced and f.n_min >= 3,
                _global("distinct", "girth", "ag-diameter")),
        Theorem(TheoremId.IDENTICAL, _reduced_nonfield, _global("equivalence")),
        Theorem(
            TheoremId.STAR,
            _reduced_nonfield,
            _global("equivalence", "(3)=>(4)"),
            notes=(
                "(5)/(6) K_{m,n} with m,n >= 2 is not realizable by a finite reduced ring",
                "(4)=>(5) is not checked: a finite reduced ring with two minimal primes is "
                "F1 x F2, whose graph is K_{1,1}",
            ),
        ),
        Theorem(TheoremId.ST123, _reduced_nonfield, _global("equivalence")),
        Theorem(TheoremId.FINAL, _reduced_nonfield, _global("equivalence")),
        Theorem(TheoremId.T1, lambda f: not f.reduced and not f.zr_ideal,
                _global("distinct", "ag-diameter")),
        Theorem(TheoremId.TH2, _nonreduced, _pairwise("complete")),
        Theorem(
            TheoremId.NON1,
            _nonreduced,
            _global("forward", "converse"),
        ),
        Theorem(TheoremId.PRIN, lambda f: not f.reduced and not f.pir and not f.nil_square_zero,
                _global("distinct", "girth")),
        Theorem(
            TheoremId.MINI,
            lambda f: f.v >= 1,
            lambda f: [("neighbourhoods", [(k,) for k in range(f.v)]),
                       ("minimal-are-vertices", [()])],
        ),
        Theorem(TheoremId.SALEHI, _salehi_ring,
                _global("four-vertices", "ai-is-c4", "ai-not-k23", "ag-is-p4")),
        Theorem(TheoremId.GRITH, _nonreduced, _global("equivalence")),
        Theorem(TheoremId.THM8, lambda f: not f.same and f.ag_star,
                _global("indecomposable", "complete")),
        Theorem(TheoremId.ARTINIAN, lambda f: f.ag_star, _global("complete")),
        Theorem(TheoremId.REMA123, lambda f: f.ag_star, _global("center")),
        Theorem(
            TheoremId.INFINITY,
            lambda f: not f.reduced and f.v >= 2,
            _global("equivalence"),
            notes=(
                "K_{1,inf} in (5)/(6) is not realizable by a finite ring",
                "(4) branch 'Z(R) != Nil(R), Nil(R) minimal' cannot hold in a finite ring; "
                "it enters only as a disjunct",
            ),
        ),
    ]
}


def check_theorem(ring_or_facts, theorem: TheoremId | str) -> VerificationReport:
    f = _facts(ring_or_facts)
    spec = THEOREMS[TheoremId(theorem)]
    start = time.perf_counter()
    if not spec.guard(f):
        return VerificationReport(spec.id, f.ring.label, Status.NOT_APPLICABLE,
                                  elapsed=time.perf_counter() - start)
    witness = None
    for name, tuples in spec.plan(f):
        predicate = _CLAUSES[spec.id, name]
        for idx in tuples:
            if not predicate(f, *idx):
                witness = _make_witness(f, spec.id, name, idx)
                break
        if witness is not None:
            break
    status = Status.HOLDS if witness is None else Status.FAILS
    return VerificationReport(spec.id, f.ring.label, status, witness,
                              time.perf_counter() - start, spec.notes)


def _make_witness(f: RingFacts, theorem: TheoremId, name: str, idx: tuple[int, ...]) -> Witness:
    values = f.snapshot()
    detail = _DETAILS.get(theorem)
    if detail is not None and not idx:
        values["clauses"] = detail(f)
    return Witness(name, tuple(f.vertices[k].elements for k in idx), values)


def replay_witness(ring_or_facts, report: VerificationReport) -> bool:
    """True iff the report's witness still violates its clause on the given data."""
    if report.witness is None:
        return False
    f = _facts(ring_or_facts)
    idx = []
    for elements in report.witness.vertices:
        k = f.index_of(elements)
        if k is None:
            return False
        idx.append(k)
    return not _CLAUSES[report.theorem, report.witness.clause](f, *idx)


# -- suites ----------------------------------------------------------------------------

def _suite(*ids: TheoremId) -> Callable[..., list[VerificationReport]]:
    def run(ring_or_facts) -> list[VerificationReport]:
        f = _facts(ring_or_facts)
        return [check_theorem(f, t) for t in ids]
    return run


check_edge_lemma = _suite(TheoremId.L2_1)
check_global_bounds = _suite(TheoremId.T2_2, TheoremId.COG13)
check_reduced_suite = _suite(
    TheoremId.THH1, TheoremId.REDUCED, TheoremId.RED1, TheoremId.COMPLETE, TheoremId.MIN,
    TheoremId.IDENTICAL, TheoremId.STAR, TheoremId.ST123, TheoremId.FINAL,
)
check_girth4_characterization = _suite(TheoremId.GIRT, TheoremId.NONEQ, TheoremId.GRITH)
check_nonreduced_suite = _suite(
    TheoremId.T1, TheoremId.TH2, TheoremId.NON1, TheoremId.PRIN, TheoremId.REMA123,
)
check_minimal_neighborhoods = _suite(TheoremId.MINI)
check_star_suite = _suite(TheoremId.THM8, TheoremId.ARTINIAN, TheoremId.INFINITY)
check_salehi_refutation = _suite(TheoremId.SALEHI)


def run_all(ring_or_facts, theorems: Iterable[TheoremId | str] | None = None) -> list[VerificationReport]:
    """Every requested check on one ring, in theorem-id order."""
    f = _facts(ring_or_facts)
    ids = list(TheoremId) if theorems is None else sorted(
        {TheoremId(t) for t in theorems}, key=THEOREM_ORDER.__getitem__)
    return [check_theorem(f, t) for t in ids]


@dataclass
class CorpusSummary:
    reports: list[VerificationReport]
    labels: list[str]
    orders: list[int]

    @property
    def counts(self) -> dict[str, dict[str, int]]:
        table: dict[str, Counter] = {t.value: Counter() for t in TheoremId}
        for r in self.reports:
            table[r.theorem.value][r.status.value] += 1
        return {t: {s.value: c[s.value] for s in Status} for t, c in table.items()}

    @property
    def failures(self) -> list[VerificationReport]:
        return [r for r in self.reports if r.status is Status.FAILS]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "corpus": [{"label": lab, "order": n} for lab, n in zip(self.labels, self.orders)],
            "summary": self.counts,
            "failures": [
                {"ring": r.ring, "theorem": r.theorem.value,
                 "witness": r.witness.to_dict() if r.witness else None}
                for r in self.failures
            ],
        }


def _run_one(ring: FiniteRing) -> list[VerificationReport]:
    return run_all(ring)


def run_corpus(corpus: Sequence[FiniteRing], jobs: int = 1) -> CorpusSummary:
    """Verify every theorem on every ring; report order is (ring label, theorem id)."""
    rings = sorted(corpus, key=lambda r: r.label)
    if jobs > 1 and len(rings) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_ring = list(pool.map(_run_one, rings, chunksize=4))
    else:
        per_ring = [_run_one(r) for r in rings]
    reports = [rep for batch in per_ring for rep in batch]
    return CorpusSummary(reports, [r.label for r in rings], [r.order for r in rings])
