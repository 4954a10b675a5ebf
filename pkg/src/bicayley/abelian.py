"""Finite abelian groups as direct products of cyclic factors.

Elements are exponent vectors reduced mod the factor orders.  Quotients are
computed through an integer Smith normal form so that the returned group comes
with an explicit isomorphism, not just an abstract type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as _cartesian
from math import gcd, lcm, prod

__all__ = [
    "AbelianGroup",
    "GroupElement",
    "Subgroup",
    "GroupAutomorphism",
    "QuotientMap",
    "make_group",
    "element_order",
    "subgroup_generated",
    "quotient_group",
    "automorphism_group_of",
    "invariant_factors",
    "order_histogram",
    "abelian_isomorphism_types",
]


@dataclass(frozen=True)
class AbelianGroup:
    """Direct product of cyclic groups Z_d for d in ``orders``."""

    orders: tuple[int, ...]

    @property
    def size(self) -> int:
        return prod(self.orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    def element(self, exponents) -> "GroupElement":
        if isinstance(exponents, int):
            exponents = (exponents,)
        exponents = tuple(exponents)
        if len(exponents) != len(self.orders):
            raise ValueError(
                f"exponent vector {exponents} has length {len(exponents)}, "
                f"group has rank {len(self.orders)}"
            )
        reduced = tuple(e % d for e, d in zip(exponents, self.orders))
        return GroupElement(self, reduced)

    @property
    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self.orders))

    def generators(self) -> tuple["GroupElement", ...]:
        """Standard generators, one per cyclic factor; order-1 factors give 1."""
        n = len(self.orders)
        return tuple(
            GroupElement(
                self, tuple((1 if j == i else 0) % self.orders[j] for j in range(n))
            )
            for i in range(n)
        )

    def elements(self) -> list["GroupElement"]:
        """All elements in lexicographic exponent order."""
        return [
            GroupElement(self, exps)
            for exps in _cartesian(*(range(d) for d in self.orders))
        ]

    def __repr__(self) -> str:
        return "Z" + "xZ".join(str(d) for d in self.orders)


@dataclass(frozen=True)
class GroupElement:
    """An element of an :class:`AbelianGroup`, stored as a reduced exponent vector."""

    group: AbelianGroup
    exponents: tuple[int, ...]

    def _check_same_group(self, other: "GroupElement") -> None:
        if self.group != other.group:
            raise ValueError(f"elements of different groups: {self.group} vs {other.group}")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        self._check_same_group(other)
        return self.group.element(
            tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    def inverse(self) -> "GroupElement":
        return self.group.element(tuple(-e for e in self.exponents))

    def __pow__(self, k: int) -> "GroupElement":
        return self.group.element(tuple(k * e for e in self.exponents))

    @property
    def is_identity(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def __lt__(self, other: "GroupElement") -> bool:
        return self.exponents < other.exponents

    def __repr__(self) -> str:
        return f"{self.exponents}"


def make_group(orders) -> AbelianGroup:
    """Build Z_d1 x ... x Z_dk.  The trivial group is make_group([1])."""
    orders = tuple(int(d) for d in orders)
    if not orders:
        raise ValueError("orders must be a nonempty sequence; use [1] for the trivial group")
    for d in orders:
        if d < 1:
            raise ValueError(f"factor order {d} is not a positive integer")
    return AbelianGroup(orders)


def element_order(g: GroupElement) -> int:
    """Multiplicative order, computed per cyclic factor."""
    result = 1
    for e, d in zip(g.exponents, g.group.orders):
        result = lcm(result, d // gcd(d, e))
    return result


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``parent`` carrying its full (closed) element set."""

    parent: AbelianGroup
    generators: tuple[GroupElement, ...]
    elements: frozenset[GroupElement]

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def is_whole_group(self) -> bool:
        return len(self.elements) == self.parent.size

    def sorted_elements(self) -> list[GroupElement]:
        return sorted(self.elements, key=lambda g: g.exponents)

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.elements

    def __repr__(self) -> str:
        return f"Subgroup(order {self.size} of {self.parent})"


def subgroup_generated(group: AbelianGroup, gens) -> Subgroup:
    """Closure of ``gens`` under multiplication and inversion."""
    gens = tuple(gens)
    for g in gens:
        if g.group != group:
            raise ValueError(f"generator {g} does not belong to {group}")
    closed = {group.identity}
    frontier = [group.identity]
    step = list(gens) + [g.inverse() for g in gens]
    while frontier:
        x = frontier.pop()
        for s in step:
            y = x * s
            if y not in closed:
                closed.add(y)
                frontier.append(y)
    return Subgroup(group, gens, frozenset(closed))


# --- Smith normal form over the integers, tracking the right transform -----


def _smith_normal_form(rows: list[list[int]], ncols: int) -> tuple[list[int], list[list[int]]]:
    """Diagonalize the integer matrix with unimodular row/column operations.

    Returns (diag, V) where V is the ncols x ncols right transform: for the
    input matrix A one has U*A*V diagonal for some unimodular U (not tracked),
    with diag[0] | diag[1] | ... .  The lattice spanned by the rows of A maps
    onto the lattice spanned by diag under x -> x*V.
    """
    a = [list(r) for r in rows]
    m = len(a)
    v = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_col(src, dst, c):
        # column dst += c * column src
        for r in a:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]

    def add_row(src, dst, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]

    t = 0
    while t < min(m, ncols):
        # locate a pivot of minimal absolute value in the remaining block
        pivot = None
        for i in range(t, m):
            for j in range(t, ncols):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        # clear row and column t; restart if a remainder creates a smaller pivot
        dirty = False
        for i in range(t + 1, m):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                add_row(t, i, -q)
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, ncols):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                add_col(t, j, -q)
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # enforce the divisibility chain: a[t][t] must divide the rest
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, ncols):
                if a[i][j] % a[t][t] != 0:
                    offender = (i, j)
                    break
            if offender:
                break
        if offender:
            add_col(offender[1], t, 1)
            continue
        if a[t][t] < 0:
            for r in a:
                r[t] = -r[t]
            for r in v:
                r[t] = -r[t]
        t += 1

    diag = [a[i][i] if i < m else 0 for i in range(ncols)]
    return diag, v


@dataclass(frozen=True)
class QuotientMap:
    """Projection H -> H/K with an explicit coordinate isomorphism."""

    source: AbelianGroup
    kernel: Subgroup
    quotient: AbelianGroup
    # column i of _transform gives the i-th coordinate form; _kept maps
    # quotient coordinates back to transform columns
    _transform: tuple[tuple[int, ...], ...]
    _kept: tuple[tuple[int, int], ...]  # (column index, modulus) per quotient factor

    def image(self, h: GroupElement) -> GroupElement:
        if h.group != self.source:
            raise ValueError(f"{h} is not an element of {self.source}")
        x = h.exponents
        coords = []
        for col, mod in self._kept:
            s = sum(x[j] * self._transform[j][col] for j in range(len(x)))
            coords.append(s % mod)
        return self.quotient.element(tuple(coords))

    def coset_representative(self, h: GroupElement) -> GroupElement:
        """Lexicographically least element of the coset h*K."""
        if h.group != self.source:
            raise ValueError(f"{h} is not an element of {self.source}")
        return min((h * k for k in self.kernel.elements), key=lambda g: g.exponents)


def quotient_group(group: AbelianGroup, kernel: Subgroup) -> tuple[AbelianGroup, QuotientMap]:
    """Quotient H/K as a new group in invariant-factor form, plus the projection.

    The relation lattice of H/K in the exponent coordinates is spanned by the
    factor-order rows together with the kernel generators; its Smith normal
    form yields both the abstract type and the change of coordinates.
    """
    if kernel.parent != group:
        raise ValueError(f"kernel {kernel} is not a subgroup of {group}")
    k = group.rank
    rows = [[group.orders[i] if j == i else 0 for j in range(k)] for i in range(k)]
    for g in kernel.generators:
        rows.append(list(g.exponents))
    diag, v = _smith_normal_form(rows, k)
    # keep nontrivial cyclic factors, largest first
    kept = [(i, d) for i, d in enumerate(diag) if d > 1]
    kept.sort(key=lambda t: -t[1])
    if kept:
        q = make_group([d for _, d in kept])
        kept_cols = tuple((i, d) for i, d in kept)
    else:
        q = make_group([1])
        kept_cols = ((0, 1),)
    qmap = QuotientMap(
        source=group,
        kernel=kernel,
        quotient=q,
        _transform=tuple(tuple(r) for r in v),
        _kept=kept_cols,
    )
    return q, qmap


def invariant_factors(group: AbelianGroup) -> tuple[int, ...]:
    """Canonical invariant factors, largest first; (1,) for the trivial group."""
    trivial = subgroup_generated(group, [])
    q, _ = quotient_group(group, trivial)
    return q.orders


@dataclass(frozen=True)
class GroupAutomorphism:
    """An automorphism, stored by its images of the standard generators."""

    group: AbelianGroup
    images: tuple[GroupElement, ...]

    def apply(self, g: GroupElement) -> GroupElement:
        if g.group != self.group:
            raise ValueError(f"{g} is not an element of {self.group}")
        acc = self.group.identity
        for e, img in zip(g.exponents, self.images):
            acc = acc * img**e
        return acc

    def __call__(self, g: GroupElement) -> GroupElement:
        return self.apply(g)

    def apply_set(self, elems) -> frozenset[GroupElement]:
        return frozenset(self.apply(g) for g in elems)

    def compose(self, other: "GroupAutomorphism") -> "GroupAutomorphism":
        """self followed by other."""
        return GroupAutomorphism(
            self.group, tuple(other.apply(img) for img in self.images)
        )

    @property
    def is_identity(self) -> bool:
        return self.images == self.group.generators()


def automorphism_group_of(group: AbelianGroup, max_size: int = 64) -> list[GroupAutomorphism]:
    """Every automorphism, by exhaustive choice of generator images.

    An endomorphism is determined by images x_i of the standard generators and
    is well-defined iff order(x_i) divides the i-th factor order; it is an
    automorphism iff the images generate the whole group.
    """
    if group.size > max_size:
        raise ValueError(f"group of order {group.size} too large for exhaustive Aut (max {max_size})")
    orders = group.orders
    all_elems = group.elements()
    candidates = [
        [g for g in all_elems if orders[i] % element_order(g) == 0]
        for i in range(group.rank)
    ]
    suffix_bound = [1] * (group.rank + 1)
    for i in range(group.rank - 1, -1, -1):
        suffix_bound[i] = suffix_bound[i + 1] * orders[i]

    result: list[GroupAutomorphism] = []
    chosen: list[GroupElement] = []

    def extend(i: int, span: Subgroup) -> None:
        if i == group.rank:
            if span.is_whole_group:
                result.append(GroupAutomorphism(group, tuple(chosen)))
            return
        for x in candidates[i]:
            # images chosen so far plus everything the rest could add must
            # still be able to cover the group
            new_span = subgroup_generated(group, list(chosen) + [x])
            if new_span.size * suffix_bound[i + 1] < group.size:
                continue
            chosen.append(x)
            extend(i + 1, new_span)
            chosen.pop()

    extend(0, subgroup_generated(group, []))
    return result


def order_histogram(group_or_elements) -> dict[int, int]:
    """Map each element order to its multiplicity; a complete abelian invariant."""
    if isinstance(group_or_elements, AbelianGroup):
        elems = group_or_elements.elements()
    else:
        elems = list(group_or_elements)
    hist: dict[int, int] = {}
    for g in elems:
        o = element_order(g)
        hist[o] = hist.get(o, 0) + 1
    return hist


def abelian_isomorphism_types(max_order: int) -> list[tuple[int, ...]]:
    """One invariant-factor tuple per isomorphism type of order 2..max_order."""

    def partitions(n: int, cap: int) -> list[list[int]]:
        if n == 0:
            return [[]]
        out = []
        for first in range(min(n, cap), 0, -1):
            for rest in partitions(n - first, first):
                out.append([first] + rest)
        return out

    def prime_factorization(n: int) -> dict[int, int]:
        fac: dict[int, int] = {}
        d = 2
        while d * d <= n:
            while n % d == 0:
                fac[d] = fac.get(d, 0) + 1
                n //= d
            d += 1
        if n > 1:
            fac[n] = fac.get(n, 0) + 1
        return fac

    types: list[tuple[int, ...]] = []
    for n in range(2, max_order + 1):
        fac = prime_factorization(n)
        per_prime = []
        for p, e in sorted(fac.items()):
            per_prime.append([(p, part) for part in partitions(e, e)])
        for combo in _cartesian(*per_prime):
            # combine prime partitions into invariant factors, largest first
            depth = max(len(part) for _, part in combo)
            factors = []
            for i in range(depth):
                f = 1
                for p, part in combo:
                    if i < len(part):
                        f *= p ** part[i]
                factors.append(f)
            types.append(tuple(factors))
    types.sort(key=lambda t: (prod(t), t))
    return types
