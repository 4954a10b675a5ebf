"""Bi-Cayley graphs over finite abelian groups.

Vertices are two copies of the group: part 0 carries the right connection set,
part 1 the left one, and the spoke set joins the parts.  Part-0 vertex ids are
0..|H|-1 in lexicographic element order; part 1 follows.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass

from bicayley.abelian import (
    AbelianGroup,
    GroupElement,
    Subgroup,
    make_group,
    quotient_group,
    subgroup_generated,
)
from bicayley.graphs import Graph
from bicayley.symmetry import PermGroup, Permutation

__all__ = [
    "BiCayleySpec",
    "BiCayleyGraph",
    "build",
    "right_translation",
    "right_translations",
    "iota",
    "tau_for",
    "generalized_petersen",
    "quotient_bicayley",
    "classify_type",
    "predicted_connected",
    "parse_spec",
    "format_spec",
]


def _sorted_elements(elems) -> tuple[GroupElement, ...]:
    return tuple(sorted(elems, key=lambda g: g.exponents))


@dataclass(frozen=True)
class BiCayleySpec:
    """Connection data (group, right set, left set, spoke set).

    The right and left sets must be inverse-closed and identity-free; the
    spoke set is unrestricted (it may contain the identity).
    """

    group: AbelianGroup
    right: tuple[GroupElement, ...]
    left: tuple[GroupElement, ...]
    spokes: tuple[GroupElement, ...]

    @staticmethod
    def create(group: AbelianGroup, right=(), left=(), spokes=()) -> "BiCayleySpec":
        right = _sorted_elements(right)
        left = _sorted_elements(left)
        spokes = _sorted_elements(spokes)
        for name, elems in (("R", right), ("L", left), ("S", spokes)):
            for g in elems:
                if g.group != group:
                    raise ValueError(f"element {g} of {name} does not belong to {group}")
            if len(set(elems)) != len(elems):
                raise ValueError(f"duplicate element in {name}")
        for name, elems in (("R", right), ("L", left)):
            for g in elems:
                if g.is_identity:
                    raise ValueError(f"identity element in {name} would create a loop")
                if g.inverse() not in elems:
                    raise ValueError(
                        f"element {g.exponents} of {name} lacks its inverse "
                        f"{g.inverse().exponents}"
                    )
        return BiCayleySpec(group, right, left, spokes)

    @staticmethod
    def zero_type(group: AbelianGroup, spokes) -> "BiCayleySpec":
        return BiCayleySpec.create(group, (), (), spokes)

    @property
    def degree(self) -> int:
        return len(self.right) + len(self.spokes)


def classify_type(spec: BiCayleySpec) -> int | None:
    """s for an s-type spec (|R| = |L| = s); None when the sizes differ."""
    if len(spec.right) == len(spec.left):
        return len(spec.right)
    return None


@dataclass(frozen=True)
class BiCayleyGraph:
    """A built bi-Cayley graph: the spec, the plain graph, and the vertex maps."""

    spec: BiCayleySpec
    graph: Graph

    @property
    def group(self) -> AbelianGroup:
        return self.spec.group

    @property
    def group_size(self) -> int:
        return self.spec.group.size

    def vertex(self, element: GroupElement, part: int) -> int:
        if part not in (0, 1):
            raise ValueError(f"part must be 0 or 1, got {part}")
        idx = 0
        stride = 1
        for e, d in zip(reversed(element.exponents), reversed(self.group.orders)):
            idx += e * stride
            stride *= d
        return idx + part * self.group.size

    def element_at(self, v: int) -> tuple[GroupElement, int]:
        size = self.group.size
        if not 0 <= v < 2 * size:
            raise ValueError(f"vertex {v} out of range")
        part, idx = divmod(v, size)
        exps = []
        for d in reversed(self.group.orders):
            idx, e = divmod(idx, d)
            exps.append(e)
        return self.group.element(tuple(reversed(exps))), part

    @property
    def parts(self) -> tuple[frozenset[int], frozenset[int]]:
        size = self.group.size
        return frozenset(range(size)), frozenset(range(size, 2 * size))


def build(spec: BiCayleySpec) -> BiCayleyGraph:
    """Materialize the graph: right edges in part 0, left in part 1, spokes across."""
    group = spec.group
    elems = group.elements()
    index = {g: i for i, g in enumerate(elems)}
    size = group.size
    edges = []
    for h in elems:
        h_idx = index[h]
        for r in spec.right:
            edges.append((h_idx, index[r * h]))
        for l_elem in spec.left:
            edges.append((size + h_idx, size + index[l_elem * h]))
        for s in spec.spokes:
            edges.append((h_idx, size + index[s * h]))
    labels = [(g.exponents, 0) for g in elems] + [(g.exponents, 1) for g in elems]
    graph = Graph.from_edges(2 * size, edges, labels)
    return BiCayleyGraph(spec, graph)


def predicted_connected(spec: BiCayleySpec) -> bool:
    """Connectivity from the connection data alone.

    Walks reach, within part 0, exactly the subgroup generated by R, L and the
    spoke differences; the spokes must be nonempty to reach part 1 at all.
    """
    if not spec.spokes:
        return False
    gens = list(spec.right) + list(spec.left)
    s0 = spec.spokes[0]
    gens += [s * s0.inverse() for s in spec.spokes]
    return subgroup_generated(spec.group, gens).is_whole_group


def right_translation(b: BiCayleyGraph, h: GroupElement) -> Permutation:
    """The permutation (x_i) -> (xh)_i."""
    size = b.group_size
    images = [0] * (2 * size)
    for v in range(2 * size):
        x, part = b.element_at(v)
        images[v] = b.vertex(x * h, part)
    return Permutation(tuple(images))


def right_translations(b: BiCayleyGraph) -> PermGroup:
    """The group of all right translations, acting with the parts as orbits."""
    gens = [right_translation(b, g) for g in b.group.generators()]
    return PermGroup(2 * b.group_size, gens)


def iota(b: BiCayleyGraph) -> Permutation:
    """The involution (x_0) -> (x^-1)_1, (x_1) -> (x^-1)_0.

    Together with the right translations it generates a group regular on the
    vertices; it is a graph automorphism whenever R = L.
    """
    size = b.group_size
    images = [0] * (2 * size)
    for v in range(2 * size):
        x, part = b.element_at(v)
        images[v] = b.vertex(x.inverse(), 1 - part)
    return Permutation(tuple(images))


def tau_for(b: BiCayleyGraph) -> Permutation:
    """The part-swapping involution normalizing every right translation.

    Defined for 0-type graphs only; conjugation satisfies
    tau^-1 R(y) tau = R(y^-1).
    """
    if classify_type(b.spec) != 0:
        raise ValueError("tau is defined for 0-type bi-Cayley graphs only")
    return iota(b)


def generalized_petersen(n: int, k: int) -> BiCayleyGraph:
    """GP(n, k) as a 2-type bi-Cayley graph over Z_n."""
    if n < 3:
        raise ValueError(f"GP({n},{k}): need n >= 3")
    if not 1 <= k or not 2 * k < n:
        raise ValueError(f"GP({n},{k}): need 1 <= k < n/2")
    group = make_group([n])
    spec = BiCayleySpec.create(
        group,
        right=[group.element(1), group.element(-1)],
        left=[group.element(k), group.element(-k)],
        spokes=[group.identity],
    )
    return build(spec)


def quotient_bicayley(b: BiCayleyGraph, kernel: Subgroup) -> BiCayleyGraph:
    """The bi-Cayley graph over H/K with the projected connection sets.

    Refuses kernels that would fuse connection elements or create loops, since
    the quotient is then no longer a simple graph of the same degree.
    """
    if kernel.parent != b.group:
        raise ValueError(f"kernel is a subgroup of {kernel.parent}, not {b.group}")
    if kernel.is_whole_group:
        raise ValueError("quotient by the whole group collapses both parts")
    quotient, qmap = quotient_group(b.group, kernel)
    new_sets = []
    for name, elems in (("R", b.spec.right), ("L", b.spec.left), ("S", b.spec.spokes)):
        images = [qmap.image(g) for g in elems]
        if name in ("R", "L"):
            for g, img in zip(elems, images):
                if img.is_identity:
                    raise ValueError(
                        f"non-simple quotient: {name} element {g.exponents} lies in the kernel"
                    )
        if len(set(images)) != len(images):
            seen: dict[GroupElement, GroupElement] = {}
            for g, img in zip(elems, images):
                if img in seen:
                    raise ValueError(
                        f"non-simple quotient: {name} elements {seen[img].exponents} "
                        f"and {g.exponents} fall into the same coset"
                    )
                seen[img] = g
        new_sets.append(images)
    spec = BiCayleySpec.create(quotient, *new_sets)
    return build(spec)


# --- textual spec format ------------------------------------------------------

_SPEC_KEY = re.compile(r"^\s*([HRLS])\s*=\s*(.*?)\s*$")


def parse_spec(text: str) -> BiCayleySpec:
    """Parse 'H=[6,2]; R={...}; L={...}; S={(0,0),(1,0)}'.

    Connection elements are exponent tuples (bare ints allowed for rank 1);
    R, L, S default to empty when omitted.
    """
    fields: dict[str, str] = {}
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        m = _SPEC_KEY.match(chunk)
        if not m:
            raise ValueError(f"unparseable spec fragment: {chunk.strip()!r}")
        key, value = m.group(1), m.group(2)
        if key in fields:
            raise ValueError(f"duplicate field {key}")
        fields[key] = value
    if "H" not in fields:
        raise ValueError("spec needs an H=[...] field")
    try:
        orders = ast.literal_eval(fields["H"])
    except (ValueError, SyntaxError) as exc:
        raise ValueError(f"bad group orders {fields['H']!r}: {exc}") from None
    if isinstance(orders, int):
        orders = [orders]
    group = make_group(orders)

    def parse_set(raw: str) -> list[GroupElement]:
        raw = raw.strip()
        if raw in ("{}", "set()", ""):
            return []
        try:
            parsed = ast.literal_eval(raw)
        except (ValueError, SyntaxError) as exc:
            raise ValueError(f"bad connection set {raw!r}: {exc}") from None
        if isinstance(parsed, (int, tuple)):
            parsed = {parsed}
        out = []
        for item in parsed:
            if isinstance(item, int):
                item = (item,)
            out.append(group.element(tuple(item)))
        return out

    right = parse_set(fields.get("R", "{}"))
    left = parse_set(fields.get("L", "{}"))
    spokes = parse_set(fields.get("S", "{}"))
    return BiCayleySpec.create(group, right, left, spokes)


def format_spec(spec: BiCayleySpec) -> str:
    """Inverse of :func:`parse_spec`, with sorted elements."""

    def fmt(elems) -> str:
        if not elems:
            return "{}"
        return "{" + ",".join(str(g.exponents).replace(" ", "") for g in elems) + "}"

    orders = "[" + ",".join(str(d) for d in spec.group.orders) + "]"
    return f"H={orders}; R={fmt(spec.right)}; L={fmt(spec.left)}; S={fmt(spec.spokes)}"
