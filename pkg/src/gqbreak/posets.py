"""Subgroup posets C(G), L(G), the class poset of cyclic subgroups, and
breaking-point detection.

A breaking point of a poset is a node other than the designated bottom and
top nodes that is comparable with every node.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import CapExceeded, NotAPartialOrder, TrivialGroup
from .group import GroupTable, SubgroupSet, _close, conjugate_subgroup

LATTICE_CAP = 10**6
LATTICE_ORDER_CAP = 4096


def _bits(mask: int) -> list[int]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True, eq=False)
class Poset:
    """Finite poset with the order relation stored as bitmask rows.

    ``up[i]`` has bit ``j`` set iff ``i <= j``; ``down[j]`` is the transpose.
    """

    nodes: tuple
    up: tuple[int, ...]
    down: tuple[int, ...]
    labels: tuple[str, ...]

    def __len__(self):
        return len(self.nodes)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def relation(self) -> list[list[bool]]:
        n = len(self.nodes)
        return [[self.leq(i, j) for j in range(n)] for i in range(n)]


def build_poset(
    nodes: Sequence,
    containment_test: Callable[[int, int], bool],
    labels: Sequence[str] | None = None,
) -> Poset:
    """Tabulate ``containment_test`` over all node pairs and check that it is a
    partial order.  Raises ``NotAPartialOrder`` with a witness otherwise."""
    n = len(nodes)
    if n == 0:
        raise ValueError("a poset needs at least one node")
    up = [0] * n
    down = [0] * n
    for i in range(n):
        for j in range(n):
            if containment_test(i, j):
                up[i] |= 1 << j
                down[j] |= 1 << i
    for i in range(n):
        if not up[i] >> i & 1:
            raise NotAPartialOrder("not reflexive", (i,))
        both = up[i] & down[i] & ~(1 << i)
        if both:
            raise NotAPartialOrder("not antisymmetric", (i, _bits(both)[0]))
        for j in _bits(up[i]):
            missing = up[j] & ~up[i]
            if missing:
                raise NotAPartialOrder("not transitive", (i, j, _bits(missing)[0]))
    if labels is None:
        labels = [str(x) for x in nodes]
    return Poset(tuple(nodes), tuple(up), tuple(down), tuple(labels))


def _sorted_unique(subgroups) -> list[SubgroupSet]:
    return sorted(set(subgroups), key=SubgroupSet.sort_key)


def cyclic_subgroups(G: GroupTable) -> list[SubgroupSet]:
    """All subgroups <x>, deduplicated and sorted by (size, mask)."""
    return _sorted_unique(_close(G, [x]) for x in range(G.order))


def subgroup_lattice(G: GroupTable, cap: int = LATTICE_CAP) -> list[SubgroupSet]:
    """All subgroups of G, as the join closure of the cyclic subgroups.

    Every subgroup is a join of cyclic ones, so it suffices to keep joining
    known subgroups with cyclic subgroups until nothing new appears.
    """
    if G.order > LATTICE_ORDER_CAP:
        raise CapExceeded(LATTICE_ORDER_CAP, "group elements")
    cyclic = {}
    for x in range(G.order):
        H = _close(G, [x])
        cyclic.setdefault(H.mask, (H, x))
    found: dict[int, tuple[SubgroupSet, tuple[int, ...]]] = {
        mask: (H, (x,)) for mask, (H, x) in cyclic.items()
    }
    frontier = list(found.values())
    while frontier:
        new = []
        for H, gens in frontier:
            for C, x in cyclic.values():
                if C.mask & ~H.mask == 0:
                    continue
                J = _close(G, gens + (x,))
                if J.mask not in found:
                    found[J.mask] = (J, gens + (x,))
                    new.append(found[J.mask])
                    if len(found) > cap:
                        raise CapExceeded(cap, "subgroups")
        frontier = new
    return _sorted_unique(H for H, _ in found.values())


def minimal_subgroups(G: GroupTable) -> list[SubgroupSet]:
    """Subgroups of prime order, i.e. the atoms of the subgroup lattice."""
    if G.order == 1:
        raise TrivialGroup("the trivial group has no minimal subgroups")
    return [H for H in cyclic_subgroups(G) if H.size > 1 and _is_prime(H.size)]


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def subgroup_label(H: SubgroupSet) -> str:
    return f"order={H.size}"


def subgroup_poset(subgroups: Sequence[SubgroupSet]) -> Poset:
    return build_poset(
        subgroups,
        lambda i, j: subgroups[i].issubset(subgroups[j]),
        [subgroup_label(H) for H in subgroups],
    )


@dataclass(frozen=True)
class ConjClass:
    representative: SubgroupSet
    members: tuple[SubgroupSet, ...]

    @property
    def size(self) -> int:
        return self.representative.size

    def __len__(self):
        return len(self.members)


def conjugacy_classes_of_cyclic(G: GroupTable) -> tuple[list[ConjClass], Poset]:
    """Partition C(G) into conjugacy classes and order the classes by
    [H1] <= [H2] iff H1 lies in some conjugate of H2."""
    remaining = cyclic_subgroups(G)
    placed: set[int] = set()
    classes = []
    for H in remaining:
        if H.mask in placed:
            continue
        orbit = _sorted_unique(conjugate_subgroup(G, H, g) for g in range(G.order))
        placed.update(K.mask for K in orbit)
        classes.append(ConjClass(orbit[0], tuple(orbit)))
    classes.sort(key=lambda c: c.representative.sort_key())

    def below(i, j):
        A = classes[i].representative
        return any(A.issubset(B) for B in classes[j].members)

    labels = [
        f"order={c.size}" + (f" ×{len(c)}" if len(c) > 1 else "") for c in classes
    ]
    return classes, build_poset(classes, below, labels)


@dataclass(frozen=True)
class BreakingReport:
    poset_kind: str
    breaking_nodes: tuple[int, ...]
    labels: tuple[str, ...]

    @property
    def count(self) -> int:
        return len(self.breaking_nodes)

    def as_dict(self) -> dict:
        return {
            "poset_kind": self.poset_kind,
            "count": self.count,
            "breaking_nodes": [
                {"id": i, "label": lab} for i, lab in zip(self.breaking_nodes, self.labels)
            ],
        }


def breaking_points(
    P: Poset,
    minimum_node: int | None,
    maximum_nodes: Sequence[int] = (),
    kind: str = "cyclic",
) -> BreakingReport:
    """Nodes comparable with every node, excluding the given bottom and tops."""
    everything = (1 << len(P)) - 1
    excluded = set(maximum_nodes)
    if minimum_node is not None:
        excluded.add(minimum_node)
    hits = [
        i for i in range(len(P))
        if i not in excluded and P.up[i] | P.down[i] == everything
    ]
    return BreakingReport(kind, tuple(hits), tuple(P.labels[i] for i in hits))


def hasse_edges(P: Poset) -> list[tuple[int, int]]:
    """Covering pairs (lower, upper)."""
    edges = []
    for i in range(len(P)):
        for j in _bits(P.up[i] & ~(1 << i)):
            between = P.up[i] & P.down[j] & ~(1 << i) & ~(1 << j)
            if not between:
                edges.append((i, j))
    return sorted(edges)


POSET_KINDS = ("cyclic", "lattice", "classes")


@dataclass
class Analysis:
    """A subgroup poset of G together with its breaking points."""

    kind: str
    poset: Poset
    report: BreakingReport
    classes: list[ConjClass] = field(default_factory=list)


def analyze(G: GroupTable, kind: str = "cyclic") -> Analysis:
    """Build the requested poset of G and detect its breaking points.

    The trivial subgroup (or its class) is the excluded bottom; the node equal
    to G (or [G]) is the excluded top when present.
    """
    full = (1 << G.order) - 1
    if kind in ("cyclic", "lattice"):
        subgroups = cyclic_subgroups(G) if kind == "cyclic" else subgroup_lattice(G)
        P = subgroup_poset(subgroups)
        tops = [i for i, H in enumerate(subgroups) if H.mask == full]
        report = breaking_points(P, 0, tops, kind)
        return Analysis(kind, P, report)
    if kind == "classes":
        classes, P = conjugacy_classes_of_cyclic(G)
        tops = [i for i, c in enumerate(classes) if c.representative.mask == full]
        report = breaking_points(P, 0, tops, kind)
        return Analysis(kind, P, report, classes)
    raise ValueError(f"unknown poset kind {kind!r}; choose from {POSET_KINDS}")


def to_dot(P: Poset, report: BreakingReport | None = None, name: str = "poset") -> str:
    """Graphviz DOT text: nodes n0, n1, ... in canonical order, Hasse edges,
    breaking points drawn double-circled."""
    breaking = set(report.breaking_nodes) if report else set()
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for i, label in enumerate(P.labels):
        shape = "doublecircle" if i in breaking else "circle"
        lines.append(f'  n{i} [label="{label}", shape={shape}];')
    for i, j in hasse_edges(P):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
