"""Simple undirected graphs with a canonical lexicographic edge order.

Vertices are ``0..n-1``.  Edges are stored as pairs ``(u, v)`` with ``u < v``
sorted lexicographically; the position of a pair in that order is its edge
index, which is the coordinate system for every GF(2) vector in the package.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

RNG_ALGORITHM = "Philox4x64-10 (numpy.random.Philox), float64 via Generator.random"

# C(n,2) above which gen_gnp switches to geometric skipping under method="auto"
PAIRWISE_LIMIT = 1 << 25


class GraphError(ValueError):
    pass


class Graph:
    """Immutable simple graph.

    ``edge_array`` is an ``(m, 2)`` integer array in canonical order.  Bitset
    adjacency, neighbor lists and the edge index are derived lazily, so a
    sampled graph with 10^5 vertices only pays for what is used on it.
    """

    def __init__(self, n: int, edges: Iterable = ()):
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        pairs = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            if (u, v) in pairs:
                raise GraphError(f"duplicate edge ({u}, {v})")
            pairs.add((u, v))
        arr = np.array(sorted(pairs), dtype=np.int64).reshape(-1, 2)
        self._init(n, arr)

    def _init(self, n, arr):
        arr.setflags(write=False)
        self.n = n
        self.edge_array = arr
        self.m = len(arr)

    @classmethod
    def _from_sorted(cls, n: int, us: np.ndarray, vs: np.ndarray) -> "Graph":
        # caller guarantees u < v and lexicographic order without duplicates
        g = cls.__new__(cls)
        g._init(n, np.stack([us, vs], axis=1).astype(np.int64, copy=False).reshape(-1, 2))
        return g

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self.edge_array]

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    @cached_property
    def adj(self) -> list[int]:
        """Neighbor bitsets: bit ``w`` of ``adj[v]`` is set iff ``{v, w}`` is an edge."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    @cached_property
    def neighbors(self) -> list[list[int]]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        for lst in nbrs:
            lst.sort()
        return nbrs

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.bincount(self.edge_array.ravel(), minlength=self.n)
        deg.setflags(write=False)
        return deg

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_id(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self.edge_index[(u, v)]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def edge_bits(self, pairs: Iterable[tuple[int, int]]) -> int:
        """Edge set as an int bitmask over edge indices."""
        bits = 0
        for u, v in pairs:
            bits ^= 1 << self.edge_id(u, v)
        return bits

    def circuit_bits(self, walk: list[int]) -> int:
        """Bitmask of a closed vertex sequence; the last vertex may repeat the first."""
        if len(walk) > 1 and walk[0] == walk[-1]:
            walk = walk[:-1]
        return self.edge_bits(zip(walk, walk[1:] + walk[:1]))

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges + [(u, v)])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edge_array, other.edge_array)

    def __hash__(self):
        return hash((self.n, self.edge_array.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# generators


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a circuit needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def gen_k_hat(s: int) -> Graph:
    """K_{s,s-1} on odd class {1,3,..,2s-1} and even class {2,..,2s-2},
    plus vertex 0 joined to 1 and 2s-1."""
    if s < 3:
        raise GraphError(f"gen_k_hat needs s >= 3, got {s}")
    odd = range(1, 2 * s, 2)
    even = range(2, 2 * s - 1, 2)
    edges = [(a, b) for a in odd for b in even]
    edges += [(0, 1), (0, 2 * s - 1)]
    return Graph(2 * s, edges)


def gen_square_cycle(n: int) -> Graph:
    """Square of the n-circuit: i joined to i+1 and i+2 (mod n)."""
    if n < 5:
        raise GraphError(f"gen_square_cycle needs n >= 5, got {n}")
    edges = set()
    for i in range(n):
        for d in (1, 2):
            j = (i + d) % n
            edges.add((min(i, j), max(i, j)))
    return Graph(n, edges)


def _pair_from_flat(n: int, k: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # row u starts at flat index u*(2n-u-1)/2
    u_all = np.arange(n, dtype=np.int64)
    starts = u_all * (2 * n - u_all - 1) // 2
    u = np.searchsorted(starts, k, side="right") - 1
    v = k - starts[u] + u + 1
    return u, v


def gen_gnp(n: int, p: float, seed: int, method: str = "auto") -> Graph:
    """Binomial random graph G(n, p), deterministic in ``(n, p, seed)``.

    ``method="pairwise"`` draws exactly one uniform per vertex pair, in
    lexicographic pair order, and keeps the pair iff the variate is ``< p``;
    two calls with the same seed and ``p1 < p2`` therefore give nested edge
    sets.  ``method="skip"`` draws geometric gaps between successive edges
    instead, which samples the same distribution in O(m) time but is not
    coupled across ``p``.  ``"auto"`` picks ``pairwise`` up to
    ``PAIRWISE_LIMIT`` pairs.
    """
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"p must lie in [0, 1], got {p}")
    if n < 0:
        raise GraphError(f"vertex count must be >= 0, got {n}")
    total = n * (n - 1) // 2
    if method == "auto":
        method = "pairwise" if total <= PAIRWISE_LIMIT else "skip"
    rng = np.random.Generator(np.random.Philox(seed & 0xFFFFFFFFFFFFFFFF))
    if total == 0 or p == 0.0:
        flat = np.empty(0, dtype=np.int64)
    elif method == "pairwise":
        chunk = 1 << 22
        parts = []
        for lo in range(0, total, chunk):
            hi = min(total, lo + chunk)
            parts.append(np.flatnonzero(rng.random(hi - lo) < p) + lo)
        flat = np.concatenate(parts)
    elif method == "skip":
        if p == 1.0:
            flat = np.arange(total, dtype=np.int64)
        else:
            parts = []
            pos = -1
            batch = int(total * p * 1.05) + 64
            while True:
                gaps = rng.geometric(p, size=batch)
                steps = pos + np.cumsum(gaps)
                parts.append(steps[steps < total])
                if steps[-1] >= total:
                    break
                pos = int(steps[-1])
            flat = np.concatenate(parts)
    else:
        raise GraphError(f"unknown sampling method {method!r}")
    u, v = _pair_from_flat(n, flat.astype(np.int64))
    return Graph._from_sorted(n, u, v)


# ---------------------------------------------------------------------------
# structure


@dataclass
class Structure:
    n: int
    m: int
    min_degree: int
    components: int
    is_connected: bool
    is_forest: bool
    is_circuit: bool
    is_bipartite: bool
    has_triangle: bool
    degree2_vertices: list[int]
    coloring: Optional[list[int]] = field(default=None, repr=False)
    odd_cycle: Optional[list[int]] = None


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbors[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def two_coloring(g: Graph) -> tuple[Optional[list[int]], Optional[list[int]]]:
    """Return ``(coloring, None)`` if bipartite, else ``(None, odd_cycle)``.

    The odd cycle is a vertex sequence (not repeating the first vertex).
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbors[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    return None, _odd_cycle(parent, x, y)
    return color, None


def _odd_cycle(parent, x, y):
    # x and y are adjacent with equal BFS colour; join their tree paths
    anc_x = [x]
    while parent[anc_x[-1]] >= 0:
        anc_x.append(parent[anc_x[-1]])
    pos = {v: i for i, v in enumerate(anc_x)}
    path_y = [y]
    while path_y[-1] not in pos:
        path_y.append(parent[path_y[-1]])
    meet = path_y[-1]
    return anc_x[: pos[meet] + 1] + path_y[-2::-1]


def has_triangle(g: Graph) -> bool:
    adj = g.adj
    return any(adj[u] & adj[v] for u, v in g.edges)


def structural_predicates(g: Graph) -> Structure:
    if g.n == 0:
        raise GraphError("structural predicates are undefined on the empty graph")
    deg = g.degrees
    comps = components(g)
    c = len(comps)
    coloring, odd = two_coloring(g)
    connected = c == 1
    return Structure(
        n=g.n,
        m=g.m,
        min_degree=int(deg.min()),
        components=c,
        is_connected=connected,
        is_forest=g.m == g.n - c,
        is_circuit=connected and g.n >= 3 and bool(np.all(deg == 2)),
        is_bipartite=coloring is not None,
        has_triangle=has_triangle(g),
        degree2_vertices=[int(v) for v in np.flatnonzero(deg == 2)],
        coloring=coloring,
        odd_cycle=odd,
    )


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v`` and relabel the survivors ``0..n-2`` preserving order."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    a = g.edge_array
    keep = (a[:, 0] != v) & (a[:, 1] != v)
    kept = a[keep]
    kept = kept - (kept > v)
    # relabelling is monotone, so lexicographic order survives
    return Graph._from_sorted(g.n - 1, kept[:, 0], kept[:, 1])


# ---------------------------------------------------------------------------
# text format: "n m" then m lines "u v", u < v, lexicographic


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("graph file must start with a line 'n m'")
    n, m = int(rows[0][0]), int(rows[0][1])
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header declares {m} edges, found {len(body)}")
    edges = []
    for r in body:
        if len(r) != 2:
            raise GraphError(f"malformed edge line {' '.join(r)!r}")
        u, v = int(r[0]), int(r[1])
        if u >= v:
            raise GraphError(f"edge line '{u} {v}' must have u < v")
        edges.append((u, v))
    if edges != sorted(edges):
        raise GraphError("edge lines must be sorted lexicographically")
    return Graph(n, edges)


def read_graph(path: str | os.PathLike) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_graph(g))
