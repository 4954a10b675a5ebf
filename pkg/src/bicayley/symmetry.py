"""Permutation groups and graph symmetry.

The automorphism and canonical-form engine is a backtracking search over
equitable ordered partitions (individualization-refinement).  Group order and
membership go through a deterministic Schreier-Sims stabilizer chain;
subgroup-level operations (cores, normalizers, conjugacy, semiregular
enumeration) work by explicit element enumeration, bounded by
BICAYLEY_MAX_AUT (default 100000).
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from bicayley.abelian import AbelianGroup, make_group
from bicayley.graphs import Graph, encode_graph6, is_connected

__all__ = [
    "Permutation",
    "PermGroup",
    "automorphism_group",
    "canonical_form",
    "certificate",
    "k_arcs",
    "k_arc_regularity",
    "core_of",
    "normalizer",
    "setwise_stabilizer",
    "block_system_and_kernel",
    "regular_normal_subgroups",
    "is_generalized_dihedral",
    "enumerate_semiregular",
    "are_conjugate",
    "max_enumeration_bound",
]

_DEFAULT_MAX_ENUM = 100_000
_MAX_SEARCH_VERTICES = 512


def max_enumeration_bound() -> int:
    """Element-enumeration cutoff; override with the BICAYLEY_MAX_AUT env var."""
    raw = os.environ.get("BICAYLEY_MAX_AUT", "")
    return int(raw) if raw else _DEFAULT_MAX_ENUM


@dataclass(frozen=True)
class Permutation:
    """A permutation of 0..n-1; composition acts left-to-right (v^(pq) = (v^p)^q)."""

    images: tuple[int, ...]

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self.images) != len(other.images):
            raise ValueError("permutations of different degrees")
        o = other.images
        return Permutation(tuple(o[v] for v in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def order(self) -> int:
        result = 1
        for c in self.cycles():
            result = lcm(result, len(c))
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            v = self.images[start]
            while v != start:
                seen[v] = True
                cyc.append(v)
                v = self.images[v]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def _orbit_transversal(point: int, gens, degree: int) -> dict[int, Permutation]:
    trans = {point: Permutation.identity(degree)}
    queue = deque([point])
    while queue:
        p = queue.popleft()
        rep = trans[p]
        for s in gens:
            q = s.images[p]
            if q not in trans:
                trans[q] = rep * s
                queue.append(q)
    return trans


@dataclass
class _ChainLevel:
    point: int
    gens: list[Permutation]
    transversal: dict[int, Permutation]


def _build_chain(gens, degree: int) -> list[_ChainLevel]:
    """Deterministic Schreier-Sims; base points taken greedily from largest orbits."""
    levels: list[_ChainLevel] = []
    current = [g for g in gens if not g.is_identity]
    while current:
        assigned: set[int] = set()
        best_orbit: set[int] | None = None
        for v in range(degree):
            if v in assigned:
                continue
            orb = {v}
            queue = deque([v])
            while queue:
                p = queue.popleft()
                for s in current:
                    q = s.images[p]
                    if q not in orb:
                        orb.add(q)
                        queue.append(q)
            assigned |= orb
            if len(orb) > 1 and (best_orbit is None or len(orb) > len(best_orbit)):
                best_orbit = orb
        if best_orbit is None:
            break
        beta = min(best_orbit)
        trans = _orbit_transversal(beta, current, degree)
        schreier: list[Permutation] = []
        seen: set[tuple[int, ...]] = set()
        for p in sorted(trans):
            rep = trans[p]
            for s in current:
                q = s.images[p]
                sg = rep * s * trans[q].inverse()
                if not sg.is_identity and sg.images not in seen:
                    seen.add(sg.images)
                    schreier.append(sg)
        levels.append(_ChainLevel(beta, current, trans))
        current = schreier
    return levels


class PermGroup:
    """Permutation group on 0..degree-1 with a lazily built stabilizer chain."""

    def __init__(self, degree: int, generators=()):
        self.degree = degree
        seen: set[tuple[int, ...]] = set()
        gens = []
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != group degree {degree}")
            if not g.is_identity and g.images not in seen:
                seen.add(g.images)
                gens.append(g)
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._chain: list[_ChainLevel] | None = None
        self._elements: list[Permutation] | None = None

    @staticmethod
    def trivial(degree: int) -> "PermGroup":
        return PermGroup(degree, ())

    @staticmethod
    def from_elements(degree: int, elements) -> "PermGroup":
        """Group generated by the given elements, with a thinned generating set."""
        group = PermGroup.trivial(degree)
        gens: list[Permutation] = []
        for e in sorted(elements, key=lambda p: p.images):
            if not group.contains(e):
                gens.append(e)
                group = PermGroup(degree, gens)
        return group

    def chain(self) -> list[_ChainLevel]:
        if self._chain is None:
            self._chain = _build_chain(self.generators, self.degree)
        return self._chain

    def order(self) -> int:
        result = 1
        for level in self.chain():
            result *= len(level.transversal)
        return result

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        for level in self.chain():
            q = p.images[level.point]
            if q not in level.transversal:
                return False
            p = p * level.transversal[q].inverse()
        return p.is_identity

    def elements(self) -> list[Permutation]:
        """Every element; refuses when the order exceeds the enumeration bound."""
        if self._elements is None:
            bound = max_enumeration_bound()
            if self.order() > bound:
                raise RuntimeError(
                    f"group of order {self.order()} exceeds the enumeration bound "
                    f"{bound}; raise BICAYLEY_MAX_AUT to override"
                )
            elems = [Permutation.identity(self.degree)]
            for level in reversed(self.chain()):
                reps = [level.transversal[q] for q in sorted(level.transversal)]
                elems = [h * t for h in elems for t in reps]
            self._elements = elems
        return self._elements

    def orbit(self, v: int) -> frozenset[int]:
        orb = {v}
        queue = deque([v])
        while queue:
            p = queue.popleft()
            for s in self.generators:
                q = s.images[p]
                if q not in orb:
                    orb.add(q)
                    queue.append(q)
        return frozenset(orb)

    def orbits(self, points=None) -> list[frozenset[int]]:
        """Orbit partition, ordered by least point."""
        domain = range(self.degree) if points is None else sorted(points)
        seen: set[int] = set()
        out = []
        for v in domain:
            if v not in seen:
                orb = self.orbit(v)
                seen |= orb
                out.append(orb)
        return out

    def is_transitive_on(self, points) -> bool:
        points = frozenset(points)
        if not points:
            return True
        return points <= self.orbit(min(points))

    def is_semiregular(self, points=None) -> bool:
        """True when only the identity fixes a point (all orbits of full size)."""
        o = self.order()
        return all(len(orb) == o for orb in self.orbits(points))

    def semiregular_with_orbits(self, parts) -> bool:
        """Semiregular with orbit partition exactly ``parts``."""
        want = sorted((frozenset(p) for p in parts), key=min)
        have = sorted(self.orbits(), key=min)
        return want == have and self.is_semiregular()

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1 :])

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"


def _mul_close(perms, degree: int, limit: int | None = None) -> set[Permutation] | None:
    """Closure under multiplication; None when ``limit`` is exceeded."""
    closed = {Permutation.identity(degree)}
    closed.update(perms)
    if limit is not None and len(closed) > limit:
        return None
    frontier = list(closed)
    gens = [p for p in perms if not p.is_identity]
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = x * s
            if y not in closed:
                if limit is not None and len(closed) >= limit:
                    return None
                closed.add(y)
                frontier.append(y)
    return closed


# --- individualization-refinement search ------------------------------------


class _Search:
    """One pass computes automorphism generators and a canonical labeling.

    The ordered-partition refinement is relabeling-equivariant: cells split by
    neighbor counts against a splitter cell, fragments ordered by count, and
    the splitter worklist is a FIFO seeded in partition order.  Branching
    explores the first non-singleton cell, skipping vertices equivalent to an
    explored sibling under automorphisms that fix the branch prefix.
    """

    def __init__(self, graph: Graph):
        self.n = graph.n
        self.adj = graph.adjacency
        self.autos: list[Permutation] = []
        self.first: tuple[bytes, list[int]] | None = None
        self.best: tuple[bytes, list[int]] | None = None

    def run(self) -> None:
        if self.n == 0:
            self.best = (b"", [])
            return
        cells = self.refine([list(range(self.n))])
        self.descend(cells, [])

    def refine(self, cells: list[list[int]]) -> list[list[int]]:
        cells = [sorted(c) for c in cells]
        queue = deque(cells)
        live = {id(c) for c in cells}
        cnt = [0] * self.n
        while queue:
            splitter = queue.popleft()
            if id(splitter) not in live:
                continue
            touched: list[int] = []
            for w in splitter:
                for v in self.adj[w]:
                    if cnt[v] == 0:
                        touched.append(v)
                    cnt[v] += 1
            for idx in range(len(cells) - 1, -1, -1):
                cell = cells[idx]
                if len(cell) == 1:
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(cnt[v], []).append(v)
                if len(groups) == 1:
                    continue
                fragments = [groups[c] for c in sorted(groups)]
                live.discard(id(cell))
                cells[idx : idx + 1] = fragments
                for frag in fragments:
                    live.add(id(frag))
                    queue.append(frag)
            for v in touched:
                cnt[v] = 0
        return cells

    def individualize(self, cells: list[list[int]], tc: int, v: int) -> list[list[int]]:
        rest = [u for u in cells[tc] if u != v]
        return self.refine(cells[:tc] + [[v], rest] + cells[tc + 1 :])

    def leaf_certificate(self, cells: list[list[int]]) -> tuple[bytes, list[int]]:
        position = [0] * self.n
        for i, cell in enumerate(cells):
            position[cell[0]] = i
        mask = 0
        for u in range(self.n):
            pu = position[u]
            for w in self.adj[u]:
                if u < w:
                    pw = position[w]
                    i, j = (pu, pw) if pu < pw else (pw, pu)
                    mask |= 1 << (j * (j - 1) // 2 + i)
        nbits = self.n * (self.n - 1) // 2
        return mask.to_bytes((nbits + 7) // 8 or 1, "big"), position

    def descend(self, cells: list[list[int]], prefix: list[int]) -> None:
        tc = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if tc is None:
            self.handle_leaf(cells)
            return
        done: list[int] = []
        for v in cells[tc]:
            if self.equivalent_to_done(v, done, prefix):
                continue
            done.append(v)
            self.descend(self.individualize(cells, tc, v), prefix + [v])

    def equivalent_to_done(self, v: int, done: list[int], prefix: list[int]) -> bool:
        if not done:
            return False
        fixing = [a for a in self.autos if all(a.images[p] == p for p in prefix)]
        if not fixing:
            return False
        reach = set(done)
        queue = deque(done)
        while queue:
            u = queue.popleft()
            for a in fixing:
                w = a.images[u]
                if w == v:
                    return True
                if w not in reach:
                    reach.add(w)
                    queue.append(w)
        return False

    def handle_leaf(self, cells: list[list[int]]) -> None:
        cert, position = self.leaf_certificate(cells)
        if self.first is None:
            self.first = (cert, position)
            self.best = (cert, position)
            return
        self.record_if_automorphism(cert, position, self.first)
        assert self.best is not None
        if cert < self.best[0]:
            self.best = (cert, position)
        elif self.best is not self.first:
            self.record_if_automorphism(cert, position, self.best)

    def record_if_automorphism(self, cert: bytes, position: list[int], other) -> None:
        if cert != other[0]:
            return
        # two labelings onto the same canonical graph compose to an automorphism
        opos = other[1]
        inv = [0] * self.n
        for vertex, pos in enumerate(position):
            inv[pos] = vertex
        perm = Permutation(tuple(inv[opos[v]] for v in range(self.n)))
        if not perm.is_identity and perm not in self.autos:
            self.autos.append(perm)


@lru_cache(maxsize=4096)
def _analyzed(graph: Graph) -> tuple[tuple[Permutation, ...], Permutation, str]:
    if graph.n > _MAX_SEARCH_VERTICES:
        raise ValueError(
            f"graph on {graph.n} vertices exceeds the search bound {_MAX_SEARCH_VERTICES}"
        )
    search = _Search(graph)
    search.run()
    assert search.best is not None
    labeling = Permutation(tuple(search.best[1]))
    cert = encode_graph6(graph.relabel(labeling.images))
    return tuple(search.autos), labeling, cert


def automorphism_group(graph: Graph) -> PermGroup:
    """Full automorphism group of the graph."""
    autos, _, _ = _analyzed(graph)
    return PermGroup(graph.n, autos)


def canonical_form(graph: Graph) -> tuple[Permutation, str]:
    """A canonical relabeling and its graph6 certificate.

    Isomorphic graphs receive equal certificates; the labeling maps each
    vertex to its canonical position.
    """
    _, labeling, cert = _analyzed(graph)
    return labeling, cert


def certificate(graph: Graph) -> str:
    return _analyzed(graph)[2]


# --- k-arc machinery ---------------------------------------------------------


def k_arcs(graph: Graph, k: int) -> list[tuple[int, ...]]:
    """All walks (v_0..v_k) with consecutive adjacency and no immediate backtrack."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    arcs: list[tuple[int, ...]] = [(v,) for v in range(graph.n)]
    for _ in range(k):
        nxt = []
        for walk in arcs:
            tail = walk[-1]
            back = walk[-2] if len(walk) > 1 else None
            for w in graph.adjacency[tail]:
                if w != back:
                    nxt.append(walk + (w,))
        arcs = nxt
    return arcs


def _tuple_orbit_size(group: PermGroup, start: tuple[int, ...]) -> int:
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for s in group.generators:
            img = tuple(s.images[v] for v in t)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return len(seen)


def k_arc_regularity(graph: Graph) -> tuple[int | None, bool]:
    """(k, True) when Aut acts regularly on k-arcs; (None, False) if not arc-transitive.

    For a connected cubic graph with arc-transitive automorphism group of
    order a, the unique candidate is the k with a = n*3*2^(k-1); regularity is
    then equivalent to transitivity on k-arcs, verified by an explicit orbit
    computation.
    """
    if not graph.is_regular(3):
        raise ValueError("k-arc-regularity analysis requires a cubic graph")
    if not is_connected(graph):
        raise ValueError("k-arc-regularity analysis requires a connected graph")
    aut = automorphism_group(graph)
    one_arcs = k_arcs(graph, 1)
    if _tuple_orbit_size(aut, one_arcs[0]) != len(one_arcs):
        return None, False
    a = aut.order()
    n = graph.n
    for k in range(1, 6):
        if a == n * 3 * 2 ** (k - 1):
            total = n * 3 * 2 ** (k - 1)
            start = k_arcs(graph, k)[0]
            if _tuple_orbit_size(aut, start) != total:
                raise RuntimeError(
                    f"automorphism order {a} matches k={k} but the action is not "
                    f"transitive on {k}-arcs"
                )
            return k, True
    raise RuntimeError(
        f"arc-transitive cubic graph with |Aut|={a} on {n} vertices fits no k <= 5"
    )


# --- subgroup-level operations ----------------------------------------------


def core_of(sub: PermGroup, group: PermGroup) -> PermGroup:
    """Largest subgroup of ``sub`` normal in ``group``.

    Fixed point of intersecting with conjugates under the generators; only
    ``sub`` is enumerated.
    """
    current = set(sub.elements())
    gens = group.generators
    while True:
        kept = {h for h in current if all(s.inverse() * h * s in current for s in gens)}
        if len(kept) == len(current):
            break
        current = kept
    return PermGroup.from_elements(sub.degree, current)


def normalizer(sub: PermGroup, group: PermGroup) -> PermGroup:
    """Elements of ``group`` whose conjugation preserves ``sub``."""
    sub_elems = frozenset(p.images for p in sub.elements())
    sub_gens = sub.generators if sub.generators else (Permutation.identity(sub.degree),)
    keep = [
        x
        for x in group.elements()
        if all((x.inverse() * h * x).images in sub_elems for h in sub_gens)
    ]
    return PermGroup.from_elements(group.degree, keep)


def setwise_stabilizer(group: PermGroup, points) -> PermGroup:
    """Subgroup of ``group`` preserving the point set."""
    target = frozenset(points)
    keep = [x for x in group.elements() if {x.images[v] for v in target} == target]
    return PermGroup.from_elements(group.degree, keep)


def block_system_and_kernel(
    group: PermGroup, normal_sub: PermGroup
) -> tuple[list[frozenset[int]], PermGroup]:
    """Orbits of a normal subgroup as blocks, plus the kernel of the block action."""
    blocks = normal_sub.orbits()
    if len(blocks) < 2:
        raise ValueError("subgroup is transitive; its orbits form no proper block system")
    kernel = [
        x for x in group.elements() if all({x.images[v] for v in b} == b for b in blocks)
    ]
    return blocks, PermGroup.from_elements(group.degree, kernel)


def _conjugacy_classes(elements, gens) -> list[list[Permutation]]:
    remaining = {p.images: p for p in elements}
    classes = []
    inv_pairs = [(s, s.inverse()) for s in gens]
    while remaining:
        start = remaining.pop(min(remaining))
        cls = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for s, s_inv in inv_pairs:
                y = s_inv * x * s
                if y.images in remaining:
                    del remaining[y.images]
                    cls.append(y)
                    queue.append(y)
        classes.append(cls)
    return classes


def regular_normal_subgroups(group: PermGroup) -> list[PermGroup]:
    """All normal subgroups acting regularly on the whole domain.

    Every normal subgroup is a join of normal closures of conjugacy classes,
    so the join-closure of those closures is the full normal subgroup lattice.
    """
    degree = group.degree
    elems = group.elements()
    classes = _conjugacy_classes(elems, group.generators)
    closures = []
    for cls in classes:
        closed = _mul_close(cls, degree)
        assert closed is not None
        closures.append(frozenset(closed))
    normals: set[frozenset[Permutation]] = {frozenset({Permutation.identity(degree)})}
    frontier = list(normals)
    while frontier:
        cur = frontier.pop()
        for clo in closures:
            if clo <= cur:
                continue
            joined = _mul_close(cur | clo, degree)
            assert joined is not None
            fs = frozenset(joined)
            if fs not in normals:
                normals.add(fs)
                frontier.append(fs)
    out = []
    for nset in normals:
        if len(nset) != degree:
            continue
        cand = PermGroup.from_elements(degree, nset)
        if cand.is_transitive_on(range(degree)) and cand.is_semiregular():
            out.append(cand)
    out.sort(key=lambda g: sorted(p.images for p in g.elements()))
    return out


def _abelian_type_from_elements(elements) -> AbelianGroup:
    """Invariant factors of an abelian permutation group from element orders."""
    size = len(elements)
    orders = [p.order() for p in elements]
    primes = []
    s = size
    d = 2
    while d * d <= s:
        if s % d == 0:
            primes.append(d)
            while s % d == 0:
                s //= d
        d += 1
    if s > 1:
        primes.append(s)

    per_prime: list[tuple[int, list[int]]] = []
    for p in primes:
        # sigma_j = log_p #{x : order(x) divides p^j}; the differences are the
        # conjugate partition of the exponent multiset of the p-part
        sigmas = [0]
        j = 1
        while True:
            count = sum(1 for o in orders if p**j % o == 0)
            sigma = 0
            c = count
            while c > 1:
                c //= p
                sigma += 1
            sigmas.append(sigma)
            if sigmas[j] == sigmas[j - 1]:
                sigmas.pop()
                break
            j += 1
        counts_ge = [sigmas[i] - sigmas[i - 1] for i in range(1, len(sigmas))]
        part = []
        for e in range(1, len(counts_ge) + 1):
            nxt = counts_ge[e] if e < len(counts_ge) else 0
            part.extend([e] * (counts_ge[e - 1] - nxt))
        part.sort(reverse=True)
        per_prime.append((p, part))

    depth = max((len(part) for _, part in per_prime), default=0)
    if depth == 0:
        return make_group([1])
    factors = []
    for i in range(depth):
        f = 1
        for p, part in per_prime:
            if i < len(part):
                f *= p ** part[i]
        factors.append(f)
    return make_group(factors)


def is_generalized_dihedral(group: PermGroup) -> AbelianGroup | None:
    """The abelian index-2 subgroup inverted by outside elements, or None.

    Only non-abelian groups qualify: the degenerate "dihedral over an
    elementary abelian 2-group" (which is abelian) reports None.
    """
    elems = group.elements()
    n = len(elems)
    if n % 2 != 0:
        return None
    if all(a * b == b * a for i, a in enumerate(elems) for b in elems[i + 1 :]):
        return None
    degree = group.degree
    # every index-2 subgroup contains <squares, commutators>
    seeds = [x * x for x in elems]
    seeds += [
        a.inverse() * b.inverse() * a * b
        for a in group.generators
        for b in group.generators
    ]
    base = _mul_close(seeds, degree)
    assert base is not None
    if len(base) * 2 > n:
        return None
    base_set = frozenset(base)
    # greedy F2-basis of the (elementary abelian) coset group
    basis: list[Permutation] = []
    span = set(base_set)
    for x in sorted(elems, key=lambda p: p.images):
        if len(span) == n:
            break
        if x not in span:
            basis.append(x)
            grown = _mul_close(span | {x}, degree)
            assert grown is not None
            span = grown
    r = len(basis)
    for mask in range(1, 2**r):
        # kernel of the functional sending basis[i] to bit i of mask
        gens = list(base_set)
        ones = [basis[i] for i in range(r) if (mask >> i) & 1]
        zeros = [basis[i] for i in range(r) if not (mask >> i) & 1]
        gens.extend(zeros)
        gens.extend(ones[i] * ones[j] for i in range(len(ones)) for j in range(i + 1, len(ones)))
        kernel = _mul_close(gens, degree)
        assert kernel is not None
        if len(kernel) * 2 != n:
            continue
        sub = sorted(kernel, key=lambda p: p.images)
        if not all(a * b == b * a for i, a in enumerate(sub) for b in sub[i + 1 :]):
            continue
        kernel_set = frozenset(kernel)
        eta = next(x for x in sorted(elems, key=lambda p: p.images) if x not in kernel_set)
        eta_inv = eta.inverse()
        if all(eta_inv * x * eta == x.inverse() for x in sub):
            return _abelian_type_from_elements(sub)
    return None


def enumerate_semiregular(group: PermGroup, parts, m: int) -> list[PermGroup]:
    """Subgroups of order m, semiregular, whose orbits are exactly the two parts.

    Candidate elements must preserve both parts and be fixed-point-free; a
    group of such elements is semiregular, and at order m = |part| its orbits
    are forced to be the parts themselves.
    """
    part0, part1 = (frozenset(p) for p in parts)
    if len(part0) != m or len(part1) != m:
        raise ValueError(
            f"parts of sizes {len(part0)},{len(part1)} cannot be the orbits of an order-{m} group"
        )
    degree = group.degree
    ident = Permutation.identity(degree)
    candidates = []
    for x in group.elements():
        if x.is_identity:
            continue
        if any(x.images[v] == v for v in range(degree)):
            continue
        if any(x.images[v] not in part0 for v in part0):
            continue
        candidates.append(x)
    cand_set = frozenset(candidates)
    start = frozenset({ident})
    seen: set[frozenset[Permutation]] = {start}
    frontier = [start]
    found: set[frozenset[Permutation]] = set()
    while frontier:
        cur = frontier.pop()
        for x in candidates:
            if x in cur:
                continue
            closed = _mul_close(cur | {x}, degree, limit=m)
            if closed is None:
                continue
            fs = frozenset(closed)
            if fs in seen:
                continue
            seen.add(fs)
            if any(p not in cand_set for p in fs if not p.is_identity):
                continue
            if len(fs) == m:
                found.add(fs)
            else:
                frontier.append(fs)
    out = [
        PermGroup.from_elements(degree, s)
        for s in sorted(found, key=lambda s: sorted(p.images for p in s))
    ]
    return out


def are_conjugate(group: PermGroup, a: PermGroup, b: PermGroup) -> Permutation | None:
    """A conjugating element of ``group`` mapping subgroup a onto b, or None."""
    a_elems = frozenset(p.images for p in a.elements())
    b_elems = frozenset(p.images for p in b.elements())
    if len(a_elems) != len(b_elems):
        return None
    a_gens = a.generators if a.generators else (Permutation.identity(a.degree),)
    for x in group.elements():
        x_inv = x.inverse()
        if all((x_inv * h * x).images in b_elems for h in a_gens):
            return x
    return None
