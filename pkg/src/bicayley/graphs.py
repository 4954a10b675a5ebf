"""Simple undirected graphs with sorted adjacency, plus a graph6 codec.

Vertex labels are a sidecar annotation: equality and every structural
algorithm see only the integer vertices and the edge set.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

__all__ = [
    "Graph",
    "Graph6ParseError",
    "girth",
    "bipartition",
    "is_connected",
    "encode_graph6",
    "decode_graph6",
    "quotient_by_partition",
]


class Graph6ParseError(ValueError):
    """Malformed graph6 text; carries the byte offset of the offense."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph on vertices 0..n-1."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple | None = field(default=None, compare=False)

    @staticmethod
    def from_edges(n: int, edges, labels=None) -> "Graph":
        if n < 0:
            raise ValueError(f"vertex count {n} is negative")
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError(f"{len(labels)} labels for {n} vertices")
        return Graph(n, adjacency, labels)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_regular(self, d: int) -> bool:
        return all(len(a) == d for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def relabel(self, perm) -> "Graph":
        """Image graph under the vertex map v -> perm[v]."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or math.inf for forests.

    One BFS per root; a non-tree edge closing at depths d(u), d(w) witnesses a
    cycle of length d(u)+d(w)+1, and the minimum over all roots is exact.
    """
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best - 1:
                break
            for w in g.adjacency[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cycle = dist[u] + dist[w] + 1
                    if cycle < best:
                        best = cycle
    return best


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two-coloring as a sorted vertex pair, or None if an odd cycle exists.

    Components are colored in order of their smallest vertex; the class
    containing that vertex joins side 0, so the output is deterministic.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side0 = tuple(v for v in range(g.n) if color[v] == 0)
    side1 = tuple(v for v in range(g.n) if color[v] == 1)
    return side0, side1


# --- graph6 ----------------------------------------------------------------


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"graph too large for this codec: n={n}")


def encode_graph6(g: Graph) -> str:
    """Standard graph6: size header, then the upper triangle column-major."""
    bits = []
    for j in range(1, g.n):
        row = g.adjacency[j]
        row_set = set(row)
        for i in range(j):
            bits.append(1 if i in row_set else 0)
    out = [_encode_size(g.n)]
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    """Inverse of :func:`encode_graph6`; strict about padding and length."""
    if not text:
        raise Graph6ParseError("empty input", 0)
    for off, ch in enumerate(text):
        if not (63 <= ord(ch) <= 126):
            raise Graph6ParseError(f"byte {ord(ch)} outside graph6 range", off)
    pos = 0
    if text[0] == "~":
        if len(text) < 4:
            raise Graph6ParseError("truncated size header", len(text))
        if text[1] == "~":
            raise Graph6ParseError("8-byte size form not supported here", 1)
        n = 0
        for off in range(1, 4):
            n = (n << 6) | (ord(text[off]) - 63)
        pos = 4
    else:
        n = ord(text[0]) - 63
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(text) - pos < nbytes:
        raise Graph6ParseError(
            f"need {nbytes} data bytes for n={n}, found {len(text) - pos}", len(text)
        )
    if len(text) - pos > nbytes:
        raise Graph6ParseError("trailing bytes after graph data", pos + nbytes)
    bits = []
    for off in range(pos, pos + nbytes):
        val = ord(text[off]) - 63
        for s in (5, 4, 3, 2, 1, 0):
            bits.append((val >> s) & 1)
    for extra in range(nbits, len(bits)):
        if bits[extra]:
            raise Graph6ParseError("nonzero padding bits", pos + extra // 6)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


def quotient_by_partition(g: Graph, blocks) -> Graph:
    """Contract each block to one vertex; blocks are ordered by least member.

    Loops produced by intra-block edges are dropped; parallel edges collapse.
    """
    blocks = [tuple(sorted(b)) for b in blocks]
    blocks.sort(key=lambda b: b[0])
    where = {}
    for i, b in enumerate(blocks):
        for v in b:
            if v in where:
                raise ValueError(f"vertex {v} appears in two blocks")
            where[v] = i
    if len(where) != g.n:
        raise ValueError("blocks do not cover the vertex set")
    edges = set()
    for u, v in g.edges:
        bu, bv = where[u], where[v]
        if bu != bv:
            edges.add((min(bu, bv), max(bu, bv)))
    return Graph.from_edges(len(blocks), sorted(edges))
