"""Hamilton circuits and paths by pruned backtracking over bitset adjacency,
and the Hamilton-generation status of a graph's cycle space.

Circuits are reported once each in canonical form: the walk starts at the
smallest vertex and, of its two directions, the one whose second vertex is
smaller than its last.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Callable, Optional

from hamspan.cycle_space import cycle_space_dim, even_cycle_subspace_dim
from hamspan.gf2 import EdgeVector, Gf2Basis
from hamspan.graph import Graph, GraphError, components

DEFAULT_CAP = 10_000_000
EXACT_MAX_N = 40

VACUOUS = "vacuous_no_cycle"
FULL = "full"
DEFICIENT = "deficient"
NO_HAMILTON = "no_hamilton_circuit"
UNKNOWN = "unknown"


class CapExceeded(RuntimeError):
    """An enumeration hit its cap before a definite answer was reached."""


@dataclass
class Enumeration:
    count: int
    completed: bool
    capped: bool = False


@dataclass
class HamStatus:
    kind: str
    cycle_dim: int
    rank: int
    circuits_examined: int = 0
    early_stopped: bool = False
    capped: bool = False

    @property
    def quotient_dim(self) -> Optional[int]:
        if self.kind == UNKNOWN:
            return None
        return self.cycle_dim - self.rank

    @property
    def is_full(self) -> bool:
        return self.kind == FULL

    def to_dict(self) -> dict:
        d = asdict(self)
        d["quotient_dim"] = self.quotient_dim
        return d


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _edge_ids(g: Graph) -> list[dict[int, int]]:
    eid: list[dict[int, int]] = [{} for _ in range(g.n)]
    for k, (u, v) in enumerate(g.edges):
        eid[u][v] = k
        eid[v][u] = k
    return eid


def _connected(adj: list[int], region: int) -> bool:
    if not region:
        return True
    reach = region & -region
    frontier = reach
    while frontier:
        nxt = 0
        for x in _bits(frontier):
            nxt |= adj[x]
        frontier = nxt & region & ~reach
        reach |= frontier
    return reach == region


def _search(adj, eid, cover: int, s: int, t: int, emit, strong: bool = False,
            probe: Optional[int] = None) -> bool:
    """Backtracking over paths from ``s`` that visit every vertex of ``cover``.

    With ``t == s`` the paths are closed into circuits (canonical direction
    only); otherwise they must end at ``t``.  ``emit(path, bits)`` gets the
    vertex list and the edge bitmask and returns False to stop; the return
    value is False iff the search was stopped.

    With ``probe=D`` only the first completion below each prefix of ``D``
    edges is emitted.  Successive probe depths spread early circuits over
    the whole search tree instead of varying only its last few steps.
    """
    circuit = s == t
    tbit = 1 << t
    path = [s]
    found = [False]

    def rec(cur: int, unvisited: int, bits: int) -> bool:
        if not unvisited:
            if not adj[cur] & tbit:
                return True
            if circuit:
                if len(path) < 3 or cur < path[1]:
                    return True
                found[0] = True
                return emit(path, bits ^ (1 << eid[cur][s]))
            found[0] = True
            return emit(path, bits)

        curbit = 1 << cur
        if not adj[cur] & unvisited:
            return True
        closers = adj[t] & unvisited
        if circuit and len(path) > 1:
            # canonical direction: the closing neighbour exceeds the second vertex
            closers &= ~((2 << path[1]) - 1)
        if not closers:
            return True
        forced = -1
        ends = unvisited | curbit | tbit
        fresh = cur == t
        n_cur = n_t = 0
        for u in _bits(unvisited):
            av = adj[u] & ends
            k = av.bit_count()
            if k < 2:
                return True
            if k == 2 and not fresh:
                if av & curbit:
                    n_cur += 1
                    forced = u
                if av & tbit:
                    n_t += 1
        if n_cur > 1 or n_t > 1:
            return True
        if not _connected(adj, unvisited):
            return True
        if strong and not fresh:
            # the rest of the path plus a virtual cur-t edge is a Hamilton
            # circuit of unvisited+{cur,t}, so that set has no cut vertex
            sadj = {cur: adj[cur] | tbit, t: adj[t] | curbit}
            view = [sadj.get(i, a) for i, a in enumerate(adj)]
            for x in _bits(unvisited):
                if not _connected(view, ends & ~(1 << x)):
                    return True

        cands = (1 << forced) if forced >= 0 else adj[cur] & unvisited
        for nxt in _bits(cands):
            if circuit and len(path) == 1 and not (adj[s] & unvisited & ~((2 << nxt) - 1)):
                continue
            if probe is not None and len(path) <= probe:
                found[0] = False
            path.append(nxt)
            ok = rec(nxt, unvisited & ~(1 << nxt), bits ^ (1 << eid[cur][nxt]))
            path.pop()
            if not ok:
                return False
            if probe is not None and found[0] and len(path) > probe:
                return True
        return True

    start_unvisited = cover & ~(1 << s)
    if not circuit:
        start_unvisited &= ~tbit
        if not cover >> t & 1:
            return True
        if start_unvisited == 0:
            return emit(path + [t], 1 << eid[s][t]) if adj[s] & tbit else True

        def emit_closed(p, b, _emit=emit):
            return _emit(p + [t], b ^ (1 << eid[p[-1]][t]))

        emit = emit_closed
    return rec(s, start_unvisited, 0)


def _circuit_stream(g: Graph, cover: int, on_bits, cap: Optional[int], strong: bool, eid=None,
                    probe: Optional[int] = None):
    """Run circuit search on the vertex set ``cover``; returns Enumeration."""
    eid = eid or _edge_ids(g)
    adj = g.adj
    state = {"count": 0, "capped": False}

    def emit(path, bits):
        if cap is not None and state["count"] >= cap:
            state["capped"] = True
            return False
        state["count"] += 1
        return on_bits(bits) is not False

    start = (cover & -cover).bit_length() - 1
    done = _search(adj, eid, cover, start, start, emit, strong, probe)
    return Enumeration(state["count"], done, state["capped"])


def enumerate_hamilton_circuits(
    g: Graph,
    visitor: Optional[Callable[[EdgeVector], object]] = None,
    cap: Optional[int] = DEFAULT_CAP,
    strong: bool = False,
) -> Enumeration:
    """Visit each Hamilton circuit once as an EdgeVector.

    The visitor may return False to stop.  ``completed`` is True only when
    the search space was exhausted.
    """
    if g.n < 3:
        raise GraphError(f"Hamilton circuits need n >= 3, got {g.n}")
    m = g.m
    cb = (lambda b: visitor(EdgeVector(m, b))) if visitor else (lambda b: True)
    return _circuit_stream(g, (1 << g.n) - 1, cb, cap, strong)


def hamilton_circuit_bits(g: Graph, cap: Optional[int] = DEFAULT_CAP) -> list[int]:
    out: list[int] = []
    res = _circuit_stream(g, (1 << g.n) - 1, out.append, cap, False)
    if res.capped:
        raise CapExceeded(f"more than {cap} Hamilton circuits")
    return out


def enumerate_circuits_of_length(
    g: Graph,
    length: int,
    visitor: Optional[Callable[[EdgeVector], object]] = None,
    cap: Optional[int] = DEFAULT_CAP,
):
    """All circuits on exactly ``length`` vertices, each once.

    Without a visitor the circuits are returned as a list; with one, the
    Enumeration record is returned instead.
    """
    if not 3 <= length <= g.n:
        raise GraphError(f"circuit length must lie in [3, {g.n}], got {length}")
    out: list[EdgeVector] = []
    collect = visitor is None
    if collect:
        visitor = out.append
    m = g.m
    eid = _edge_ids(g)
    total = 0
    for verts in combinations(range(g.n), length):
        cover = 0
        for v in verts:
            cover |= 1 << v
        left = None if cap is None else cap - total
        res = _circuit_stream(
            g, cover, lambda b: visitor(EdgeVector(m, b)), left, False, eid
        )
        total += res.count
        if not res.completed:
            return out if collect else Enumeration(total, False, res.capped)
    return out if collect else Enumeration(total, True)


def _span_status(g: Graph, covers, cap, target=None, strong=False) -> HamStatus:
    """Stream circuits on each vertex set in ``covers`` into one basis.

    The search stops as soon as the rank reaches ``target`` (default: the
    cycle space dimension), which must be a proven upper bound on the rank.
    Probe passes come first; only if they fall short is every circuit
    enumerated.  Both phases yield genuine circuits, so the verdict is exact.
    """
    dim = cycle_space_dim(g)
    target = dim if target is None else target
    basis = Gf2Basis(g.m)
    eid = _edge_ids(g)
    seen: set[int] = set()
    examined = 0
    probing = True

    def feed(bits):
        nonlocal examined
        if probing:
            if bits in seen:
                return True
            seen.add(bits)
        elif bits in seen:
            return True
        examined += 1
        basis.insert_bits(bits)
        return basis.rank < target

    def done_status():
        if basis.rank == dim:
            return HamStatus(FULL, dim, dim, examined, True, False)
        return HamStatus(DEFICIENT, dim, basis.rank, examined, True, False)

    visits = 0
    empty = set()
    for cover in covers:
        size = cover.bit_count()
        for depth in range(1, max(1, size // 2) + 1):
            left = None if cap is None else cap - visits
            res = _circuit_stream(g, cover, feed, left, strong, eid, probe=depth)
            visits += res.count
            if res.capped:
                return HamStatus(UNKNOWN, dim, basis.rank, examined, False, True)
            if basis.rank == target:
                return done_status()
            if res.count == 0:
                # a probe finds a circuit whenever one exists
                empty.add(cover)
                break
    probing = False
    for cover in covers:
        if cover in empty:
            continue
        left = None if cap is None else cap - visits
        res = _circuit_stream(g, cover, feed, left, strong, eid)
        visits += res.count
        if res.capped:
            return HamStatus(UNKNOWN, dim, basis.rank, examined, False, True)
        if basis.rank == target:
            return done_status()
    if examined == 0:
        return HamStatus(NO_HAMILTON, dim, 0, 0)
    return HamStatus(DEFICIENT, dim, basis.rank, examined)


def parity_rank_bound(g: Graph) -> int:
    """Upper bound on the rank of the Hamilton circuits.

    For even n every Hamilton circuit has even size, so it lies in the
    even-cycle subspace, which has codimension 1 unless g is bipartite.
    """
    if g.n % 2:
        return cycle_space_dim(g)
    return even_cycle_subspace_dim(g)


def hamilton_generated_status(
    g: Graph, cap: Optional[int] = DEFAULT_CAP, max_n: int = EXACT_MAX_N, strong: bool = False
) -> HamStatus:
    """Classify whether the Hamilton circuits of ``g`` span its cycle space."""
    c = len(components(g)) if g.n else 0
    dim = g.m - g.n + c
    if dim == 0:
        return HamStatus(VACUOUS, 0, 0)
    if c > 1 or int(g.degrees.min()) < 2:
        return HamStatus(NO_HAMILTON, dim, 0)
    if g.n > max_n:
        return HamStatus(UNKNOWN, dim, 0)
    return _span_status(g, [(1 << g.n) - 1], cap, parity_rank_bound(g), strong)


def near_hamilton_status(g: Graph, cap: Optional[int] = DEFAULT_CAP) -> HamStatus:
    """Span of the circuits of length n and n-1, as a HamStatus.

    Circuits of length n-1 are the Hamilton circuits of the n vertex-deleted
    subgraphs, so the search reuses the pruned Hamilton routine.
    """
    c = len(components(g)) if g.n else 0
    dim = g.m - g.n + c
    if dim == 0:
        return HamStatus(VACUOUS, 0, 0)
    full = (1 << g.n) - 1
    covers = [full] + [full & ~(1 << w) for w in range(g.n)] if g.n > 3 else [full]
    return _span_status(g, covers, cap)


def near_hamilton_span_full(g: Graph, cap: Optional[int] = DEFAULT_CAP) -> bool:
    st = near_hamilton_status(g, cap)
    if st.kind == UNKNOWN:
        raise CapExceeded(f"near-Hamilton enumeration exceeded cap {cap}")
    return st.kind in (FULL, VACUOUS)


def has_hamilton_path(g: Graph, u: int, v: int, cover: Optional[int] = None) -> bool:
    """Is there a u-v path through every vertex of ``cover`` (default: all)?"""
    if cover is None:
        cover = (1 << g.n) - 1
    if u == v:
        return cover == 1 << u
    found = []

    def emit(path, bits):
        found.append(path)
        return False

    _search(g.adj, _edge_ids(g), cover, u, v, emit)
    return bool(found)


def has_hamilton_circuit(g: Graph) -> bool:
    if g.n < 3 or int(g.degrees.min()) < 2:
        return False
    res = enumerate_hamilton_circuits(g, lambda _: False, cap=None)
    return res.count > 0


def is_hamilton_connected(g: Graph) -> bool:
    if g.n < 2:
        raise GraphError(f"Hamilton-connectedness needs n >= 2, got {g.n}")
    return all(has_hamilton_path(g, u, v) for u, v in combinations(range(g.n), 2))


def long_path_connected(g: Graph) -> bool:
    """Every pair is joined by a path on at least n-1 vertices."""
    if g.n < 2:
        raise GraphError(f"long-path connectivity needs n >= 2, got {g.n}")
    full = (1 << g.n) - 1
    for u, v in combinations(range(g.n), 2):
        if has_hamilton_path(g, u, v):
            continue
        if not any(
            has_hamilton_path(g, u, v, full & ~(1 << w))
            for w in range(g.n)
            if w not in (u, v)
        ):
            return False
    return True


@dataclass
class MClasses:
    in_M_ham_0: bool
    in_M_ham_1: bool
    in_M_near_0: bool


def m_class_membership(g: Graph, cap: Optional[int] = DEFAULT_CAP) -> MClasses:
    if g.n < 2:
        return MClasses(False, False, False)
    ham_0 = ham_1 = near_0 = False
    if is_hamilton_connected(g):
        st = hamilton_generated_status(g, cap)
        if st.kind == UNKNOWN:
            raise CapExceeded(f"Hamilton enumeration exceeded cap {cap}")
        ham_0 = st.kind == FULL
        ham_1 = st.kind == DEFICIENT and st.quotient_dim == 1
    if long_path_connected(g):
        near_0 = near_hamilton_span_full(g, cap)
    return MClasses(ham_0, ham_1, near_0)
