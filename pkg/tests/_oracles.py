"""Independent reference implementations the engine is tested against.

Nothing here calls into the package beyond the Graph container: automorphisms
by filtering all vertex bijections, girth by exhaustive path search, graph6 by
direct bit-string packing, and the classical LCF and Kneser constructions.
"""

from __future__ import annotations

import math
import random
from itertools import combinations, permutations

from bicayley.graphs import Graph


def brute_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """Every vertex bijection mapping edges to edges, as image tuples."""
    adj = [set(a) for a in g.adjacency]
    edges = g.edges
    out = []
    for perm in permutations(range(g.n)):
        for u, v in edges:
            if perm[v] not in adj[perm[u]]:
                break
        else:
            out.append(perm)
    return out


def exhaustive_girth(g: Graph) -> int | float:
    """Shortest cycle by depth-first enumeration of all simple paths."""
    best = math.inf

    def extend(start: int, v: int, on_path: set[int], length: int) -> None:
        nonlocal best
        for w in g.adjacency[v]:
            if w == start and length >= 3:
                best = min(best, length)
            elif w > start and w not in on_path and length + 1 < best:
                on_path.add(w)
                extend(start, w, on_path, length + 1)
                on_path.discard(w)

    for s in range(g.n):
        extend(s, s, {s}, 1)
    return best


def graph6_reference(g: Graph) -> str:
    """graph6 text assembled from an explicit bit string."""
    bits = "".join(
        "1" if g.has_edge(i, j) else "0" for j in range(1, g.n) for i in range(j)
    )
    bits += "0" * (-len(bits) % 6)
    data = "".join(chr(int(bits[i : i + 6], 2) + 63) for i in range(0, len(bits), 6))
    if g.n <= 62:
        return chr(g.n + 63) + data
    size = format(g.n, "018b")
    head = "~" + "".join(chr(int(size[i : i + 6], 2) + 63) for i in range(0, 18, 6))
    return head + data


def lcf_graph(shifts: list[int], repeats: int) -> Graph:
    """Hamiltonian cubic graph from LCF notation: an n-cycle plus chords."""
    seq = shifts * repeats
    n = len(seq)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, (i + seq[i]) % n) for i in range(n)]
    return Graph.from_edges(n, edges)


def kneser_petersen() -> Graph:
    """The Petersen graph as the Kneser graph on 2-subsets of a 5-set."""
    pairs = list(combinations(range(5), 2))
    edges = [
        (i, j)
        for i in range(10)
        for j in range(i + 1, 10)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return Graph.from_edges(10, edges)


def hypercube() -> Graph:
    """Q3 with 3-bit vertices joined at Hamming distance one."""
    edges = [
        (x, x ^ (1 << b)) for x in range(8) for b in range(3) if x < x ^ (1 << b)
    ]
    return Graph.from_edges(8, edges)


def complete_bipartite_33() -> Graph:
    return Graph.from_edges(6, [(i, 3 + j) for i in range(3) for j in range(3)])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def small_corpus(count: int, max_n: int = 8, seed: int = 2024) -> list[Graph]:
    """A fixed mixed corpus: named small graphs first, then seeded random ones."""
    k4 = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    k5 = Graph.from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    named = [
        Graph.from_edges(1, []),
        Graph.from_edges(5, []),
        Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]),
        Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)]),
        Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)]),
        Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]),
        Graph.from_edges(7, [(0, i) for i in range(1, 7)]),
        k4,
        k5,
        complete_bipartite_33(),
        hypercube(),
    ]
    rng = random.Random(seed)
    graphs = [g for g in named if g.n <= max_n]
    while len(graphs) < count:
        n = rng.randint(4, max_n)
        graphs.append(random_graph(rng, n, rng.uniform(0.15, 0.7)))
    return graphs
