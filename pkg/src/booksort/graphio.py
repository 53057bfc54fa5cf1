"""Layered transport graphs built from admissible trees.

Every non-root node contributes one edge toward its parent.  The edge
weight is the full mass that travels across it (the subtree mass of its
source) and the edge length is the sum of the gaps it spans; the graph cost
is the sum of weight + length over all edges, which coincides with the tree
cost.  Vertices carry their generation number as a layer and their original
line coordinate, so the graph renders as a layered drawing in which
admissible trees never produce crossing edges.
"""

from dataclasses import dataclass
from fractions import Fraction

from .rational import format_rational
from .series import Instance
from .trees import ParentFunction, generation, is_admissible


@dataclass(frozen=True)
class GraphVertex:
    id: int
    layer: int
    position: Fraction
    mass: Fraction


@dataclass(frozen=True)
class GraphEdge:
    source: int
    target: int
    weight: Fraction
    length: Fraction


@dataclass(frozen=True)
class TransportGraph:
    vertices: tuple
    edges: tuple


def build_graph(parent: ParentFunction, inst: Instance) -> TransportGraph:
    """Materialize the layered graph for an admissible tree on an instance.

    Subtree masses accumulate in one ascending pass (children precede
    parents by index), positions are the cumulative mass+gap coordinates in
    the instance's native units, and layers are generation numbers.
    """
    if not is_admissible(parent):
        raise ValueError("parent map is not admissible")
    if parent.n != inst.n:
        raise ValueError(
            f"instance has {inst.n} nodes but parent map has {parent.n}"
        )
    n = inst.n
    subtree = list(inst.a)
    for i in range(1, n):
        subtree[parent.p[i - 1] - 1] += subtree[i - 1]
    positions = [Fraction(0)]
    for i in range(1, n):
        positions.append(positions[-1] + inst.a[i - 1] + inst.b[i - 1])
    depth = generation(parent).d
    vertices = tuple(
        GraphVertex(id=i, layer=depth[i - 1], position=positions[i - 1], mass=subtree[i - 1])
        for i in range(1, n + 1)
    )
    edges = []
    for i in range(1, n):
        target = parent.p[i - 1]
        length = sum(inst.b[i - 1 : target - 1], Fraction(0))
        edges.append(GraphEdge(source=i, target=target, weight=subtree[i - 1], length=length))
    return TransportGraph(vertices, tuple(edges))


def kirchhoff_check(graph: TransportGraph, inst: Instance) -> bool:
    """Flow balance at every vertex, computed from the edge list alone.

    Outflow minus inflow must equal the node's own mass, except at the sink,
    where the full white mass is absorbed.
    """
    n = inst.n
    total = sum(inst.a, Fraction(0))
    balance = {v.id: Fraction(0) for v in graph.vertices}
    for edge in graph.edges:
        balance[edge.source] += edge.weight
        balance[edge.target] -= edge.weight
    for i in range(1, n + 1):
        expected = inst.a[i - 1] - (total if i == n else 0)
        if balance.get(i, Fraction(0)) != expected:
            return False
    return True


def graph_cost(graph: TransportGraph) -> Fraction:
    """Sum over edges of weight + length."""
    return sum((e.weight + e.length for e in graph.edges), Fraction(0))


def crossing_free(graph: TransportGraph) -> bool:
    """No two edges cross in the layered drawing.

    Edges (i -> p) and (j -> q) cross exactly when i < j < p < q.
    """
    spans = sorted((e.source, e.target) for e in graph.edges)
    for idx, (i, p) in enumerate(spans):
        for j, q in spans[idx + 1 :]:
            if j >= p:
                break
            if i < j < p < q:
                return False
    return True


def to_dot(graph: TransportGraph) -> str:
    """Deterministic DOT text: one rank per layer, sorted ids, w/d edge labels."""
    lines = ["digraph transport {"]
    layers = {}
    for vertex in graph.vertices:
        layers.setdefault(vertex.layer, []).append(vertex.id)
    for layer in sorted(layers):
        names = " ".join(f'"a{vid}";' for vid in sorted(layers[layer]))
        lines.append(f"  {{ rank=same; {names} }}")
    for vertex in sorted(graph.vertices, key=lambda v: v.id):
        label = f"a_{vertex.id} ({format_rational(vertex.mass)})"
        lines.append(f'  "a{vertex.id}" [label="{label}"];')
    for edge in sorted(graph.edges, key=lambda e: (e.source, e.target)):
        label = f"{format_rational(edge.weight)}/{format_rational(edge.length)}"
        lines.append(f'  "a{edge.source}" -> "a{edge.target}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
