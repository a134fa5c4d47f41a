"""Coloured bit-shift graphs of the positive generators, and DOT export."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bitcore import BasisState
from .opalgebra import SparseOperator
from .spinodd import B

# pink, blue, green, orange
BASE_PALETTE = ("#D65CD6", "#5C5CD6", "#5CD65C", "#D6995C")


def colour(k: int) -> str:
    """Colour of generator k; beyond four the base colours repeat, darkened per cycle."""
    cycle, idx = divmod(k - 1, len(BASE_PALETTE))
    if cycle == 0:
        return BASE_PALETTE[idx]
    rgb = [int(BASE_PALETTE[idx][i : i + 2], 16) for i in (1, 3, 5)]
    factor = 0.75**cycle
    return "#" + "".join(f"{int(c * factor):02X}" for c in rgb)


@dataclass(frozen=True)
class Edge:
    source: BasisState
    target: BasisState
    k: int

    @property
    def colour(self) -> str:
        return colour(self.k)


@dataclass(frozen=True)
class ColouredGraph:
    width: int
    nodes: tuple[BasisState, ...]
    edges: tuple[Edge, ...]

    def edges_of(self, k: int) -> list[Edge]:
        return [e for e in self.edges if e.k == k]

    def colour_class_sizes(self) -> list[int]:
        return [len(self.edges_of(k)) for k in range(1, self.width + 1)]

    def operator(self, k: int, transpose: bool = False) -> SparseOperator:
        """Adjacency of the k-coloured edges as an operator (target <- source)."""
        entries = {}
        for e in self.edges_of(k):
            rc = (e.source.value, e.target.value) if transpose else (e.target.value, e.source.value)
            entries[rc] = 1
        return SparseOperator(self.width, entries)

    def restrict_top_bit_zero(self) -> "ColouredGraph":
        """Induced subgraph on states whose top bit is 0, relabelled at width N-1."""
        if self.width < 2:
            raise ValueError("need width >= 2")
        w = self.width - 1
        keep = 1 << w
        edges = tuple(
            Edge(BasisState(w, e.source.value), BasisState(w, e.target.value), e.k)
            for e in self.edges
            if e.source.value < keep and e.target.value < keep
        )
        return ColouredGraph(w, tuple(BasisState(w, m) for m in range(keep)), edges)


def shift_graph(n: int) -> ColouredGraph:
    if n < 1:
        raise ValueError("N must be at least 1")
    nodes = tuple(BasisState.all(n))
    edges = []
    for k in range(1, n + 1):
        for r, c, v in sorted(B(k, 1, n).entries(), key=lambda e: e[1]):
            if v != 1:
                raise AssertionError("generator coefficient is not 1")
            edges.append(Edge(BasisState(n, c), BasisState(n, r), k))
    return ColouredGraph(n, nodes, tuple(edges))


def to_dot(g: ColouredGraph, name: str | None = None) -> str:
    name = name or f"spin{2 * g.width + 1}"
    lines = [f'digraph "{name}" {{']
    lines.extend(f'  "{s}";' for s in g.nodes)
    for e in sorted(g.edges, key=lambda e: (e.k, e.source.value)):
        lines.append(f'  "{e.source}" -> "{e.target}" [color="{e.colour}", label="B{e.k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: ColouredGraph) -> str:
    edges = [{"from": str(e.source), "to": str(e.target), "k": e.k} for e in g.edges]
    return json.dumps({"edges": edges})
