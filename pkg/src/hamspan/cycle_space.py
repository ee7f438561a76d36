"""The cycle space Z_1(G; F_2): fundamental bases, membership, quotients."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from hamspan.gf2 import DimensionError, EdgeVector, Gf2Basis, rank_bits
from hamspan.graph import Graph


class NotACycleError(ValueError):
    pass


@dataclass
class CycleBasis:
    graph: Graph
    fundamental_cycles: list[EdgeVector]
    components: int

    @property
    def dim(self) -> int:
        return len(self.fundamental_cycles)

    def basis(self) -> Gf2Basis:
        b = Gf2Basis(self.graph.m)
        for c in self.fundamental_cycles:
            b.insert_bits(c.bits)
        return b


def spanning_forest(g: Graph, order: Optional[Iterable[int]] = None):
    """BFS forest; roots and neighbor visits follow ``order`` (default 0..n-1).

    Returns ``(parent, depth, tree_edge_bits, components)``.
    """
    order = list(range(g.n)) if order is None else list(order)
    rank = {v: i for i, v in enumerate(order)}
    parent = [-1] * g.n
    depth = [-1] * g.n
    tree = 0
    comps = 0
    for root in order:
        if depth[root] >= 0:
            continue
        comps += 1
        depth[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(g.neighbors[x], key=rank.__getitem__):
                if depth[y] < 0:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    tree |= 1 << g.edge_id(x, y)
                    queue.append(y)
    return parent, depth, tree, comps


def fundamental_cycle_basis(g: Graph, order: Optional[Iterable[int]] = None) -> CycleBasis:
    parent, depth, tree, comps = spanning_forest(g, order)
    cycles = []
    for k, (u, v) in enumerate(g.edges):
        if tree >> k & 1:
            continue
        bits = 1 << k
        a, b = u, v
        while depth[a] > depth[b]:
            bits ^= 1 << g.edge_id(a, parent[a])
            a = parent[a]
        while depth[b] > depth[a]:
            bits ^= 1 << g.edge_id(b, parent[b])
            b = parent[b]
        while a != b:
            bits ^= 1 << g.edge_id(a, parent[a])
            bits ^= 1 << g.edge_id(b, parent[b])
            a, b = parent[a], parent[b]
        cycles.append(EdgeVector(g.m, bits))
    return CycleBasis(g, cycles, comps)


def cycle_space_dim(g: Graph) -> int:
    _, _, _, comps = spanning_forest(g)
    return g.m - g.n + comps


def vertex_parities(g: Graph, bits: int) -> int:
    """Bitmask of vertices with odd degree in the edge set ``bits``."""
    odd = 0
    edges = g.edges
    while bits:
        low = bits & -bits
        u, v = edges[low.bit_length() - 1]
        odd ^= (1 << u) | (1 << v)
        bits ^= low
    return odd


def has_even_degrees(g: Graph, bits: int) -> bool:
    return vertex_parities(g, bits) == 0


def is_cycle(g: Graph, v: EdgeVector, basis: Optional[CycleBasis] = None) -> bool:
    """Even-degree test, cross-checked against the fundamental span."""
    if v.dimension != g.m:
        raise DimensionError(f"vector has dimension {v.dimension}, graph has {g.m} edges")
    even = has_even_degrees(g, v.bits)
    basis = basis or fundamental_cycle_basis(g)
    spanned = basis.basis().contains_bits(v.bits)
    if even != spanned:
        raise AssertionError("even-degree test and fundamental span disagree")
    return even


def quotient_dim(g: Graph, generators: list[EdgeVector]) -> int:
    """dim Z_1 minus the rank of ``generators``; every generator must be a cycle."""
    for i, v in enumerate(generators):
        if v.dimension != g.m:
            raise DimensionError(f"generator {i} has dimension {v.dimension}, graph has {g.m}")
        if not has_even_degrees(g, v.bits):
            raise NotACycleError(f"generator {i} is not an element of the cycle space")
    return cycle_space_dim(g) - rank_bits(v.bits for v in generators)


def even_cycle_subspace_dim(g: Graph) -> int:
    """Dimension of the cycles with even support size.

    Parity is a linear functional on Z_1; it vanishes identically exactly when
    every circuit is even, i.e. when the graph is bipartite.
    """
    cb = fundamental_cycle_basis(g)
    odd = any(c.parity() for c in cb.fundamental_cycles)
    return cb.dim - (1 if odd else 0)
