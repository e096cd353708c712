"""Finite groups as explicit multiplication tables.

Elements are dense indices ``0..n-1``.  Products follow the left-to-right
convention used throughout the package: ``product[x][y]`` is "x then y", which
for permutations means ``(x*y)[i] = y[x[i]]``.  This matches the way words in a
presentation act on cosets, so ``b^-1*a*b`` means exactly what it says.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import CapExceeded, EmptyDomain, IndexOutOfRange, NotClosed

DEFAULT_CLOSURE_CAP = 10**6


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> Permutation:
        """Build a permutation of ``0..degree-1`` from disjoint cycles."""
        images = list(range(degree))
        for cycle in cycles:
            for i, x in enumerate(cycle):
                images[x] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        # self first, then other
        o = other.images
        return Permutation(tuple(o[i] for i in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(q[i] for i in p)


def closure_from_generators(
    gens: Sequence[Permutation],
    degree: int | None = None,
    cap: int = DEFAULT_CLOSURE_CAP,
) -> list[Permutation]:
    """Return every element of the group generated by ``gens``.

    The identity comes first; the remaining elements appear in breadth-first
    order of right multiplication by the generators, so the output is
    deterministic for a given generator list.  ``degree`` is only needed when
    ``gens`` is empty.
    """
    if gens:
        degrees = {g.degree for g in gens}
        if len(degrees) != 1:
            raise ValueError(f"generators act on different domains: {sorted(degrees)}")
        d = degrees.pop()
    else:
        d = degree if degree is not None else 0
    if d == 0:
        raise EmptyDomain("permutation domain is empty")

    gen_images = [g.images for g in gens]
    e = tuple(range(d))
    seen = {e}
    out = [e]
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gen_images:
            y = _compose(x, g)
            if y not in seen:
                seen.add(y)
                out.append(y)
                if len(out) > cap:
                    raise CapExceeded(cap)
                queue.append(y)
    return [Permutation(p) for p in out]


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group given by its full Cayley table.

    ``generators`` optionally names distinguished elements (for example ``a``
    and ``b`` of a presentation); it plays no role in the algebra.
    """

    product: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    element_order: tuple[int, ...]
    name: str = "G"
    generators: Mapping[str, int] = field(default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.product)

    def __len__(self):
        return len(self.product)

    def __repr__(self):
        return f"GroupTable({self.name!r}, order={self.order})"

    def mul(self, x: int, y: int) -> int:
        return self.product[x][y]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverse[x], -k
        result = self.identity
        for _ in range(k):
            result = self.product[result][x]
        return result

    def is_abelian(self) -> bool:
        p = self.product
        n = len(p)
        return all(p[i][j] == p[j][i] for i in range(n) for j in range(i + 1, n))

    @classmethod
    def from_product(
        cls,
        product: Sequence[Sequence[int]],
        name: str = "G",
        generators: Mapping[str, int] | None = None,
    ) -> GroupTable:
        """Derive identity, inverses and element orders from a product table.

        Raises ``NotClosed`` if the table has no two-sided identity or some
        element has no inverse.
        """
        prod = tuple(tuple(row) for row in product)
        n = len(prod)
        identity = next(
            (e for e in range(n) if all(prod[e][x] == x == prod[x][e] for x in range(n))),
            None,
        )
        if identity is None:
            raise NotClosed("table has no identity element")
        inverse = []
        for x in range(n):
            try:
                inverse.append(prod[x].index(identity))
            except ValueError:
                raise NotClosed(f"element {x} has no inverse") from None
        orders = []
        for x in range(n):
            k, y = 1, x
            while y != identity:
                y = prod[y][x]
                k += 1
                if k > n:
                    raise NotClosed(f"element {x} has no finite order within the table")
            orders.append(k)
        return cls(prod, identity, tuple(inverse), tuple(orders), name, dict(generators or {}))


def cayley_from_elements(
    elems: Sequence[Permutation],
    name: str = "G",
    generators: Mapping[str, Permutation] | None = None,
) -> GroupTable:
    """Turn a closed list of permutations into a ``GroupTable``.

    Element ``i`` of the table is ``elems[i]``.
    """
    index = {p.images: i for i, p in enumerate(elems)}
    if len(index) != len(elems):
        raise NotClosed("element list contains duplicates")
    images = [p.images for p in elems]
    product = []
    for i, p in enumerate(images):
        row = []
        for q in images:
            r = index.get(_compose(p, q))
            if r is None:
                raise NotClosed(f"product of elements {i} and {len(row)} is not in the list")
            row.append(r)
        product.append(row)
    named = {}
    for label, g in (generators or {}).items():
        if g.images not in index:
            raise NotClosed(f"generator {label} is not among the elements")
        named[label] = index[g.images]
    return GroupTable.from_product(product, name=name, generators=named)


def _check_index(G: GroupTable, x: int) -> None:
    if not 0 <= x < G.order:
        raise IndexOutOfRange(f"element index {x} out of range for order {G.order}")


def element_order(G: GroupTable, x: int) -> int:
    _check_index(G, x)
    return G.element_order[x]


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup stored as a bitmask over element indices (bit i = element i)."""

    mask: int
    size: int

    @classmethod
    def from_members(cls, members: Iterable[int]) -> SubgroupSet:
        mask = 0
        for x in members:
            mask |= 1 << x
        return cls(mask, bin(mask).count("1"))

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __len__(self):
        return self.size

    def members(self) -> list[int]:
        out, m, i = [], self.mask, 0
        while m:
            if m & 1:
                out.append(i)
            m >>= 1
            i += 1
        return out

    def issubset(self, other: SubgroupSet) -> bool:
        return self.mask & ~other.mask == 0

    def sort_key(self) -> tuple[int, int]:
        return (self.size, self.mask)


def _close(G: GroupTable, gens: Iterable[int]) -> SubgroupSet:
    gens = sorted(set(gens))
    prod = G.product
    mask = 1 << G.identity
    elems = [G.identity]
    i = 0
    while i < len(elems):
        x = elems[i]
        i += 1
        row = prod[x]
        for g in gens:
            y = row[g]
            if not mask >> y & 1:
                mask |= 1 << y
                elems.append(y)
    return SubgroupSet(mask, len(elems))


def generated_subgroup(G: GroupTable, seed: Iterable[int]) -> SubgroupSet:
    """Smallest subgroup containing ``seed`` (closure under right multiplication)."""
    seed = list(seed)
    for x in seed:
        _check_index(G, x)
    return _close(G, seed)


def cyclic_subgroup(G: GroupTable, x: int) -> SubgroupSet:
    return generated_subgroup(G, [x])


def conjugate_subgroup(G: GroupTable, H: SubgroupSet, g: int) -> SubgroupSet:
    """Return ``{g^-1 h g : h in H}``."""
    _check_index(G, g)
    prod = G.product
    row = prod[G.inverse[g]]
    mask = 0
    for h in H.members():
        mask |= 1 << prod[row[h]][g]
    return SubgroupSet(mask, H.size)


@dataclass
class ValidationResult:
    violations: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def validate_table(G: GroupTable, max_violations: int = 100) -> ValidationResult:
    """Check every ``GroupTable`` invariant and report violations with witnesses.

    Each violation is ``(kind, witness)``.  Associativity is checked by brute
    force, which is O(n^3); the search stops after ``max_violations`` hits.
    """
    result = ValidationResult()
    bad = result.violations
    p = G.product
    n = len(p)
    full = set(range(n))

    def report(kind, *witness):
        bad.append((kind, witness))
        return len(bad) >= max_violations

    if n == 0:
        report("empty")
        return result
    for i, row in enumerate(p):
        if len(row) != n or set(row) != full:
            if report("latin-row", i):
                return result
    for j in range(n):
        col = {p[i][j] for i in range(n) if j < len(p[i])}
        if col != full:
            if report("latin-column", j):
                return result
    if any(len(row) != n or not all(0 <= v < n for v in row) for row in p):
        # the remaining checks index into the table
        return result

    e = G.identity
    if not 0 <= e < n:
        report("identity", e)
        return result
    for x in range(n):
        if p[e][x] != x or p[x][e] != x:
            if report("identity", x):
                return result
    if len(G.inverse) != n:
        report("inverse-length", len(G.inverse))
    else:
        for x in range(n):
            if p[x][G.inverse[x]] != e:
                if report("inverse", x):
                    return result
    for a in range(n):
        pa = p[a]
        for b in range(n):
            pab = p[pa[b]]
            pb = p[b]
            for c in range(n):
                if pab[c] != pa[pb[c]]:
                    if report("associativity", a, b, c):
                        return result
    if len(G.element_order) != n:
        report("order-length", len(G.element_order))
    else:
        for x in range(n):
            k, y = 1, x
            while y != e and k <= n:
                y = p[y][x]
                k += 1
            if k != G.element_order[x] or n % k:
                if report("element-order", x):
                    return result
    return result
