"""Brute-force reference implementations, deliberately naive and independent
of the package's search and elimination code."""

from itertools import combinations, permutations, product


def edge_list(n, edges):
    return sorted((min(u, v), max(u, v)) for u, v in edges)


def walk_edges(walk):
    return {tuple(sorted(e)) for e in zip(walk, walk[1:] + walk[:1])}


def hamilton_circuits(n, edges):
    """Edge sets (frozensets of pairs) of all Hamilton circuits."""
    es = set(edge_list(n, edges))
    out = set()
    for perm in permutations(range(1, n)):
        walk = (0,) + perm
        ed = walk_edges(list(walk))
        if len(walk) >= 3 and ed <= es:
            out.add(frozenset(ed))
    return out


def circuits_of_length(n, edges, length):
    es = set(edge_list(n, edges))
    out = set()
    for verts in combinations(range(n), length):
        first, rest = verts[0], verts[1:]
        for perm in permutations(rest):
            walk = [first, *perm]
            ed = walk_edges(walk)
            if ed <= es:
                out.add(frozenset(ed))
    return out


def span_size(vectors):
    """Number of distinct XORs over all subsets."""
    vals = {0}
    for v in vectors:
        vals |= {x ^ v for x in vals}
    return len(vals)


def subset_xor_rank(vectors):
    size = span_size(vectors)
    return size.bit_length() - 1


def subset_witness(vectors, target):
    for r in range(len(vectors) + 1):
        for sub in combinations(range(len(vectors)), r):
            acc = 0
            for i in sub:
                acc ^= vectors[i]
            if acc == target:
                return list(sub)
    return None


def bipartite_brute(n, edges):
    for colors in product((0, 1), repeat=n):
        if all(colors[u] != colors[v] for u, v in edges):
            return True
    return n == 0


def even_degree_vectors(n, edges):
    """All edge subsets (as bitmasks over the given edge order) with even degrees."""
    m = len(edges)
    out = []
    for mask in range(1 << m):
        deg = [0] * n
        for k in range(m):
            if mask >> k & 1:
                u, v = edges[k]
                deg[u] += 1
                deg[v] += 1
        if all(d % 2 == 0 for d in deg):
            out.append(mask)
    return out


def component_count(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(x) for x in range(n)})


def has_spanning_path(n, edges, u, v, vertices=None):
    es = set(edge_list(n, edges))
    verts = list(range(n)) if vertices is None else list(vertices)
    inner = [x for x in verts if x not in (u, v)]
    for perm in permutations(inner):
        walk = [u, *perm, v]
        if all(tuple(sorted(e)) in es for e in zip(walk, walk[1:])):
            return True
    return False
