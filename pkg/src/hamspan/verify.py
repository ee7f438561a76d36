"""Reproduction checks for the K^{s^,s-1} family and the degree-2 lemma."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from hamspan.cycle_space import cycle_space_dim
from hamspan.gf2 import rank_bits
from hamspan.graph import Graph, GraphError, delete_vertex, gen_k_hat, structural_predicates
from hamspan.hamilton import (
    DEFAULT_CAP,
    FULL,
    HamStatus,
    enumerate_circuits_of_length,
    hamilton_circuit_bits,
    hamilton_generated_status,
)

# the seven Hamilton circuits of K^{4^,3}, as closed vertex sequences
K43_CIRCUITS = [
    [0, 1, 4, 5, 2, 3, 6, 7, 0],
    [0, 1, 6, 3, 4, 5, 2, 7, 0],
    [0, 1, 4, 3, 2, 5, 6, 7, 0],
    [0, 1, 2, 5, 4, 3, 6, 7, 0],
    [0, 1, 6, 5, 2, 3, 4, 7, 0],
    [0, 1, 2, 3, 6, 5, 4, 7, 0],
    [0, 1, 2, 5, 6, 3, 4, 7, 0],
]

# golden copy of the K^{4^,3} incidence matrix: row label, then C_1..C_7
K43_GOLDEN_ROWS = [
    ((0, 1), "1111111"),
    ((0, 7), "1111111"),
    ((1, 2), "0001011"),
    ((1, 4), "1010000"),
    ((1, 6), "0100100"),
    ((2, 3), "1010110"),
    ((2, 5), "1111101"),
    ((2, 7), "0100000"),
    ((3, 4), "0111101"),
    ((3, 6), "1101011"),
    ((4, 5), "1101010"),
    ((4, 7), "0000111"),
    ((5, 6), "0010111"),
    ((6, 7), "1011000"),
]


def is_hamilton_walk(g: Graph, walk: list[int]) -> bool:
    """Closed walk (first vertex repeated at the end) visiting every vertex once."""
    if len(walk) != g.n + 1 or walk[0] != walk[-1]:
        return False
    if sorted(walk[:-1]) != list(range(g.n)):
        return False
    return all(g.has_edge(a, b) for a, b in zip(walk, walk[1:]))


def incidence_matrix(g: Graph, circuits: list[int]) -> list[list[int]]:
    """Rows are edges in canonical order, columns the given edge bitmasks."""
    return [[c >> k & 1 for c in circuits] for k in range(g.m)]


def format_matrix(g: Graph, matrix: list[list[int]], names: list[str]) -> str:
    lines = ["edge " + " ".join(names)]
    for (u, v), row in zip(g.edges, matrix):
        lines.append(f"{u},{v} " + " ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


@dataclass
class Prop4Report:
    seven_circuits_valid: bool
    matrix: list[list[int]]
    matrix_matches_paper: bool
    rank: int
    cycle_dim: int
    total_hamilton_circuits: int
    quotient_dim: int
    full_span: bool
    edge_labels: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.seven_circuits_valid
            and self.matrix_matches_paper
            and self.rank == 7
            and self.total_hamilton_circuits == 12
            and self.quotient_dim == 0
            and self.full_span
        )


def verify_proposition4() -> Prop4Report:
    g = gen_k_hat(4)
    valid = all(is_hamilton_walk(g, w) for w in K43_CIRCUITS)
    if valid:
        cols = [g.circuit_bits(w) for w in K43_CIRCUITS]
    else:
        cols = [0] * len(K43_CIRCUITS)
    matrix = incidence_matrix(g, cols)
    golden_labels = [e for e, _ in K43_GOLDEN_ROWS]
    golden = [[int(ch) for ch in bits] for _, bits in K43_GOLDEN_ROWS]
    matches = golden_labels == g.edges and golden == matrix
    rank = rank_bits(cols)
    every = hamilton_circuit_bits(g)
    dim = cycle_space_dim(g)
    quotient = dim - rank_bits(every)
    return Prop4Report(
        seven_circuits_valid=valid,
        matrix=matrix,
        matrix_matches_paper=matches,
        rank=rank,
        cycle_dim=dim,
        total_hamilton_circuits=len(every),
        quotient_dim=quotient,
        full_span=quotient == 0,
        edge_labels=[f"{u},{v}" for u, v in g.edges],
    )


@dataclass
class ConjectureResult:
    s: int
    n: int
    m: int
    status: HamStatus
    total_hamilton_circuits: Optional[int]
    wall_ms: float

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "n": self.n,
            "m": self.m,
            "status": self.status.to_dict(),
            "total_hamilton_circuits": self.total_hamilton_circuits,
            "wall_ms": self.wall_ms,
        }


def test_conjecture5(s: int, cap: Optional[int] = DEFAULT_CAP, count_all: bool = True) -> ConjectureResult:
    """Hamilton-generation status of K^{s^,s-1}; with ``count_all`` the full
    circuit count is also enumerated (it is (s-2)!(s-1)! for these graphs)."""
    t0 = time.perf_counter()
    g = gen_k_hat(s)
    status = hamilton_generated_status(g, cap=cap)
    total = None
    if count_all:
        total = len(hamilton_circuit_bits(g, cap=cap)) if status.kind != "unknown" else None
    wall = (time.perf_counter() - t0) * 1000.0
    return ConjectureResult(s, g.n, g.m, status, total, wall)


# keep pytest from collecting the function above as a test
test_conjecture5.__test__ = False


PASS = "pass"
INAPPLICABLE = "inapplicable"
COUNTEREXAMPLE = "counterexample"


def check_lemma3(g: Graph, cap: Optional[int] = DEFAULT_CAP) -> tuple[str, Optional[int]]:
    """Degree-2 lemma: if g is neither forest nor circuit, Hamilton-generated,
    and has a degree-2 vertex, then deleting any degree-2 vertex leaves a
    bipartite graph.  Returns ``(verdict, vertex)``."""
    if g.n == 0:
        return INAPPLICABLE, None
    st = structural_predicates(g)
    if st.is_forest or st.is_circuit or not st.degree2_vertices:
        return INAPPLICABLE, None
    status = hamilton_generated_status(g, cap=cap)
    if status.kind == "unknown":
        raise RuntimeError("Hamilton enumeration capped; lemma check inconclusive")
    if status.kind != FULL:
        return INAPPLICABLE, None
    for v in st.degree2_vertices:
        if not structural_predicates(delete_vertex(g, v)).is_bipartite:
            return COUNTEREXAMPLE, v
    return PASS, None


def degree2_chain(g: Graph, v: int) -> list[tuple[int, int]]:
    """Edges of the maximal run of degree-2 vertices through ``v``, extended
    on both sides to the first vertices of degree other than 2."""
    if g.degree(v) != 2:
        raise GraphError(f"vertex {v} has degree {g.degree(v)}, not 2")
    chain = []
    seen = {v}
    for start in g.neighbors[v]:
        prev, cur = v, start
        chain.append((min(prev, cur), max(prev, cur)))
        while g.degree(cur) == 2 and cur not in seen:
            seen.add(cur)
            nxt = [w for w in g.neighbors[cur] if w != prev][0]
            prev, cur = cur, nxt
            e = (min(prev, cur), max(prev, cur))
            if e in chain:
                break
            chain.append(e)
    return sorted(set(chain))


def check_all_or_none(g: Graph, v: int) -> bool:
    """Every circuit of g contains all or none of the degree-2 chain through v."""
    chain = 0
    for u, w in degree2_chain(g, v):
        chain |= 1 << g.edge_id(u, w)
    for length in range(3, g.n + 1):
        for c in enumerate_circuits_of_length(g, length, cap=None):
            hit = c.bits & chain
            if hit and hit != chain:
                return False
    return True
