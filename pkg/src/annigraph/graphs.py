"""The annihilating-ideal graph AG(R) and the annihilator-ideal graph A_I(R).

Both graphs live on the non-zero ideals with non-zero annihilator.  ``I`` and
``J`` are adjacent in AG(R) when ``IJ = 0``, and in A_I(R) when
``Ann(IJ)`` is strictly larger than the set union ``Ann(I) ∪ Ann(J)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import NotDistinct, UnknownVertex
from .ideals import (
    Ideal,
    annihilating_ideal_vertices,
    annihilator,
    ideal_product,
    is_nilpotent_ideal,
)
from .ring import FiniteRing

INF = math.inf


class GraphKind(str, Enum):
    AG = "AG"
    AI = "AI"

    @property
    def title(self) -> str:
        return "AG(R)" if self is GraphKind.AG else "A_I(R)"


@dataclass(frozen=True, eq=False)
class IdealGraph:
    """Simple undirected graph on ideals, stored as a boolean adjacency matrix."""

    ring: FiniteRing
    kind: GraphKind
    vertices: tuple[Ideal, ...]
    adjacency: np.ndarray

    def __post_init__(self):
        adj = np.ascontiguousarray(self.adjacency, dtype=bool)
        adj.setflags(write=False)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "_index", {v.mask: k for k, v in enumerate(self.vertices)})

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def index(self, ideal: Ideal) -> int:
        try:
            return self._index[ideal.mask]
        except KeyError:
            raise UnknownVertex(f"{ideal.describe()} is not a vertex of {self.kind.title} "
                                f"for {self.ring.label}") from None

    def has_vertex(self, ideal: Ideal) -> bool:
        return ideal.mask in self._index

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adjacency[a, b])

    def edges(self) -> list[tuple[int, int]]:
        rows, cols = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(a), int(b)) for a, b in zip(rows, cols)]

    @property
    def edge_count(self) -> int:
        return int(np.triu(self.adjacency, 1).sum())

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def neighbours(self, k: int) -> list[int]:
        return [int(x) for x in np.flatnonzero(self.adjacency[k])]

    def same_edges(self, other: "IdealGraph") -> bool:
        return (
            [v.mask for v in self.vertices] == [v.mask for v in other.vertices]
            and np.array_equal(self.adjacency, other.adjacency)
        )

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.order))
        g.add_edges_from(self.edges())
        return g


# -- adjacency ----------------------------------------------------------------

def _distinct(a: Ideal, b: Ideal) -> None:
    if a == b:
        raise NotDistinct(f"{a.describe()} given twice")


def ag_adjacent(a: Ideal, b: Ideal) -> bool:
    _distinct(a, b)
    return ideal_product(a, b).is_zero


def ai_witness(a: Ideal, b: Ideal) -> int | None:
    """An element ``r`` with ``r*a*b = 0``, ``r*a != 0`` and ``r*b != 0``, if one exists."""
    _distinct(a, b)
    ring = a.ring
    prods = kernels.prodset(ring.mul, a.indices, b.indices)
    r = kernels.ai_witness(ring.mul, ring.zero, a.indices, b.indices, prods)
    return None if r < 0 else int(r)


def ai_adjacent(a: Ideal, b: Ideal) -> bool:
    return ai_witness(a, b) is not None


def ai_adjacent_by_definition(a: Ideal, b: Ideal) -> bool:
    """``Ann(ab) != Ann(a) ∪ Ann(b)``, comparing materialised element sets."""
    _distinct(a, b)
    ann_ab = set(annihilator(ideal_product(a, b)).elements)
    union = set(annihilator(a).elements) | set(annihilator(b).elements)
    return ann_ab != union


def build_graph(ring: FiniteRing, kind: GraphKind | str) -> IdealGraph:
    """AG(R) or A_I(R) on the annihilating ideals, in canonical vertex order."""
    kind = GraphKind(kind)
    key = ("graph", kind)
    if key in ring._cache:
        return ring._cache[key]
    verts = tuple(annihilating_ideal_vertices(ring))
    v = len(verts)
    adj = np.zeros((v, v), dtype=bool)
    for i in range(v):
        for j in range(i + 1, v):
            if kind is GraphKind.AG:
                hit = ag_adjacent(verts[i], verts[j])
            else:
                hit = ai_adjacent(verts[i], verts[j])
            adj[i, j] = adj[j, i] = hit
    graph = IdealGraph(ring, kind, verts, adj)
    ring._cache[key] = graph
    return graph


# -- invariants ---------------------------------------------------------------

def distances(g: IdealGraph) -> np.ndarray:
    """Hop distances with -1 for unreachable pairs."""
    return kernels.bfs_distances(g.adjacency.view(np.uint8))


def is_connected(g: IdealGraph) -> bool:
    if g.order == 0:
        return True
    return bool((distances(g)[0] >= 0).all())


def diameter(g: IdealGraph) -> float | None:
    """Largest distance; ``inf`` if disconnected, 0 for one vertex, ``None`` for no vertices."""
    if g.order == 0:
        return None
    d = distances(g)
    if (d < 0).any():
        return INF
    return int(d.max())


def girth(g: IdealGraph) -> float:
    """Length of a shortest cycle; ``inf`` if there is none."""
    found = kernels.girth(g.adjacency.view(np.uint8))
    return INF if found < 0 else int(found)


def neighborhood(g: IdealGraph, ideal: Ideal) -> frozenset[Ideal]:
    k = g.index(ideal)
    return frozenset(g.vertices[j] for j in g.neighbours(k))


def induced_subgraph(g: IdealGraph, keep: Iterable[int]) -> IdealGraph:
    keep = sorted(set(keep))
    sub = g.adjacency[np.ix_(keep, keep)] if keep else np.zeros((0, 0), dtype=bool)
    return IdealGraph(g.ring, g.kind, tuple(g.vertices[k] for k in keep), sub)


def induced_on_nilpotent(g: IdealGraph) -> IdealGraph:
    return induced_subgraph(g, [k for k, v in enumerate(g.vertices) if is_nilpotent_ideal(v)])


def extra_edges(ring: FiniteRing) -> list[tuple[Ideal, Ideal]]:
    """Edges of A_I(R) that are not edges of AG(R), in canonical order."""
    ag = build_graph(ring, GraphKind.AG)
    ai = build_graph(ring, GraphKind.AI)
    return [(ai.vertices[a], ai.vertices[b]) for a, b in ai.edges() if not ag.has_edge(a, b)]


# -- shape recognition ----------------------------------------------------------

@dataclass(frozen=True)
class GraphShape:
    tag: str
    sizes: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.tag == "Complete":
            return f"K{self.sizes[0]}"
        if self.tag == "Star":
            return f"K1,{self.sizes[0]}"
        if self.tag == "CompleteBipartite":
            return f"K{self.sizes[0]},{self.sizes[1]}"
        if self.tag == "Path":
            return f"P{self.sizes[0]}"
        if self.tag == "Cycle":
            return f"C{self.sizes[0]}"
        return "other"


def is_complete(g: IdealGraph) -> bool:
    return g.edge_count == g.order * (g.order - 1) // 2


def star_centers(g: IdealGraph) -> list[int]:
    """Vertices that can serve as the centre of ``g`` viewed as ``K_{1,n}`` (n >= 1)."""
    v = g.order
    if v < 2 or g.edge_count != v - 1:
        return []
    deg = g.degrees()
    return [int(k) for k in np.flatnonzero(deg == v - 1)]


def is_star(g: IdealGraph) -> bool:
    return bool(star_centers(g))


def bipartition(g: IdealGraph) -> tuple[list[int], list[int]] | None:
    """Parts of ``g`` as a complete bipartite graph, smaller part first, or ``None``."""
    v = g.order
    if v < 2:
        return None
    comp = ~g.adjacency
    np.fill_diagonal(comp, False)
    d = kernels.bfs_distances(comp.view(np.uint8))
    first = [k for k in range(v) if d[0, k] >= 0]
    second = [k for k in range(v) if d[0, k] < 0]
    if not second:
        return None
    anchor = second[0]
    if any(d[anchor, k] < 0 for k in second):
        return None
    for part in (first, second):
        block = comp[np.ix_(part, part)]
        if int(block.sum()) != len(part) * (len(part) - 1):
            return None
    return (first, second) if len(first) <= len(second) else (second, first)


def is_complete_bipartite(g: IdealGraph, m: int | None = None, n: int | None = None) -> bool:
    parts = bipartition(g)
    if parts is None:
        return False
    sizes = sorted(len(p) for p in parts)
    if m is None and n is None:
        return True
    return sizes == sorted([m, n])


def is_cycle(g: IdealGraph) -> bool:
    return g.order >= 3 and bool((g.degrees() == 2).all()) and is_connected(g)


def is_path(g: IdealGraph) -> bool:
    v = g.order
    if v < 2 or g.edge_count != v - 1 or not is_connected(g):
        return False
    return int(g.degrees().max()) <= 2


def classify_shape(g: IdealGraph) -> GraphShape:
    """Most specific named family, by precedence Complete > Cycle > Path > Star > K_{m,n}.

    ``P3 = K_{1,2}`` is reported as a star; Path is only used from four vertices.
    """
    v = g.order
    if is_complete(g):
        return GraphShape("Complete", (v,))
    if is_cycle(g):
        return GraphShape("Cycle", (v,))
    if v >= 4 and is_path(g):
        return GraphShape("Path", (v,))
    if is_star(g):
        return GraphShape("Star", (v - 1,))
    parts = bipartition(g)
    if parts is not None:
        return GraphShape("CompleteBipartite", (len(parts[0]), len(parts[1])))
    return GraphShape("Other")


# -- DOT export -------------------------------------------------------------------

def to_dot(g: IdealGraph) -> str:
    """Graphviz ``graph`` block; A_I edges absent from AG are dashed."""
    header = f"// {g.kind.title} of {g.ring.label}: {g.order} vertices, {g.edge_count} edges\n"
    if g.order == 0:
        return header + "graph { }\n"
    dashed: set[tuple[int, int]] = set()
    if g.kind is GraphKind.AI:
        ag = build_graph(g.ring, GraphKind.AG)
        for a, b in g.edges():
            va, vb = g.vertices[a], g.vertices[b]
            if ag.has_vertex(va) and ag.has_vertex(vb) and not ag.has_edge(ag.index(va), ag.index(vb)):
                dashed.add((a, b))
    lines = [header.rstrip("\n"), "graph {"]
    names = [f'"{v.describe()}"' for v in g.vertices]
    lines.extend(f"  {name};" for name in names)
    for a, b in g.edges():
        style = " [style=dashed]" if (a, b) in dashed else ""
        lines.append(f"  {names[a]} -- {names[b]}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def shape_summary(g: IdealGraph) -> str:
    """One line ``shape=K3 girth=3 diam=1``."""
    return f"shape={classify_shape(g)} girth={format_measure(girth(g))} diam={format_measure(diameter(g))}"


def format_measure(value: float | None) -> str:
    if value is None:
        return "n/a"
    if value == INF:
        return "inf"
    return str(int(value))


def vertex_labels(vertices: Sequence[Ideal]) -> list[str]:
    return [v.describe() for v in vertices]
