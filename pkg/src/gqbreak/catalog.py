"""Named group families and the verification corpus."""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from itertools import product as cartesian

from .errors import BadParameter, CapExceeded
from .group import (
    GroupTable,
    Permutation,
    cayley_from_elements,
    closure_from_generators,
)
from .presentation import parse_presentation, todd_coxeter

DEFAULT_TABLE_CAP = 4096
MAX_CORPUS_ORDER = 64


@dataclass(frozen=True)
class Fingerprint:
    order: int
    order_histogram: tuple[tuple[int, int], ...]
    class_sizes: tuple[int, ...]
    abelian: bool

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "order_histogram": {str(k): v for k, v in self.order_histogram},
            "class_sizes": list(self.class_sizes),
            "abelian": self.abelian,
        }


def conjugacy_classes(G: GroupTable) -> list[list[int]]:
    """Conjugacy classes of elements, each sorted, listed by least member."""
    p, inv = G.product, G.inverse
    seen = [False] * G.order
    classes = []
    for x in range(G.order):
        if seen[x]:
            continue
        cls = {p[p[inv[g]][x]][g] for g in range(G.order)}
        for y in cls:
            seen[y] = True
        classes.append(sorted(cls))
    return classes


def fingerprint(G: GroupTable) -> Fingerprint:
    hist = Counter(G.element_order)
    return Fingerprint(
        order=G.order,
        order_histogram=tuple(sorted(hist.items())),
        class_sizes=tuple(sorted(len(c) for c in conjugacy_classes(G))),
        abelian=G.is_abelian(),
    )


def _check(cond, message):
    if not cond:
        raise BadParameter(message)


def _is_power_of_two(n):
    return n >= 1 and n & (n - 1) == 0


def cyclic(n: int) -> GroupTable:
    _check(isinstance(n, int) and n >= 1, f"cyclic(n) needs n >= 1, got {n}")
    product = [[(i + j) % n for j in range(n)] for i in range(n)]
    return GroupTable.from_product(product, name=f"Z{n}", generators={"a": 1 % n})


def _metacyclic_permutations(N, r, t):
    """Right-regular permutations of a and b in <a, b | a^N, b^2 = a^t, b^-1 a b = a^r>.

    Elements a^i b^j are indexed i + N*j, and
    a^i b^j * a^k b^l = a^(i + k r^j + t [j + l = 2]) b^((j + l) mod 2).
    """
    def index(i, j):
        return i % N + N * j

    def mul(i, j, k, l):
        s = i + k * (r if j else 1) + (t if j + l == 2 else 0)
        return index(s, (j + l) % 2)

    elems = [(i, j) for j in (0, 1) for i in range(N)]
    a = Permutation(tuple(mul(i, j, 1, 0) for i, j in elems))
    b = Permutation(tuple(mul(i, j, 0, 1) for i, j in elems))
    return a, b


def _from_permutations(gens: dict[str, Permutation], name: str) -> GroupTable:
    elems = closure_from_generators(list(gens.values()))
    return cayley_from_elements(elems, name=name, generators=gens)


def dihedral(order: int) -> GroupTable:
    _check(order >= 2 and order % 2 == 0, f"dihedral(2n) needs an even order >= 2, got {order}")
    n = order // 2
    a, b = _metacyclic_permutations(n, -1, 0)
    return _from_permutations({"a": a, "b": b}, f"D{order}")


def quaternion_presentation(order: int) -> str:
    """The defining presentation of the generalized quaternion group of ``order``."""
    _check(_is_power_of_two(order) and order >= 8,
           f"generalized_quaternion(2^n) needs n >= 3, got order {order}")
    n = order.bit_length() - 1
    return f"< a, b | a^{2 ** (n - 2)} = b^2, a^{2 ** (n - 1)} = 1, b^-1*a*b = a^-1 >"


def quaternion_by_permutations(order: int) -> GroupTable:
    _check(_is_power_of_two(order) and order >= 8,
           f"generalized_quaternion(2^n) needs n >= 3, got order {order}")
    N = order // 2
    a, b = _metacyclic_permutations(N, -1, N // 2)
    return _from_permutations({"a": a, "b": b}, f"Q{order}")


def generalized_quaternion(order: int) -> GroupTable:
    """Build Q_order from its presentation and cross-check a permutation model.

    The returned table is the coset-enumeration one, with ``a`` and ``b``
    recorded as named generators.
    """
    G = todd_coxeter(parse_presentation(quaternion_presentation(order)), name=f"Q{order}")
    H = quaternion_by_permutations(order)
    if G.order != order or fingerprint(G) != fingerprint(H):
        raise AssertionError(f"the two constructions of Q{order} disagree")
    return G


def dicyclic(order: int) -> GroupTable:
    _check(order >= 8 and order % 4 == 0, f"dicyclic(4m) needs m >= 2, got order {order}")
    m = order // 4
    a, b = _metacyclic_permutations(2 * m, -1, m)
    return _from_permutations({"a": a, "b": b}, f"Dic{m}")


def semidihedral(order: int) -> GroupTable:
    _check(_is_power_of_two(order) and order >= 16,
           f"semidihedral(2^n) needs n >= 4, got order {order}")
    N = order // 2
    a, b = _metacyclic_permutations(N, N // 2 - 1, 0)
    return _from_permutations({"a": a, "b": b}, f"SD{order}")


def modular(order: int) -> GroupTable:
    _check(_is_power_of_two(order) and order >= 16,
           f"modular(2^n) needs n >= 4, got order {order}")
    N = order // 2
    a, b = _metacyclic_permutations(N, N // 2 + 1, 0)
    return _from_permutations({"a": a, "b": b}, f"M{order}")


def symmetric(n: int) -> GroupTable:
    _check(1 <= n <= 6, f"symmetric(n) needs 1 <= n <= 6, got {n}")
    gens = {}
    if n >= 2:
        gens["s"] = Permutation.from_cycles(n, (0, 1))
    if n >= 3:
        gens["c"] = Permutation.from_cycles(n, tuple(range(n)))
    if not gens:
        return cayley_from_elements(closure_from_generators([], degree=n), name="S1")
    return _from_permutations(gens, f"S{n}")


def alternating(n: int) -> GroupTable:
    _check(1 <= n <= 6, f"alternating(n) needs 1 <= n <= 6, got {n}")
    gens = {f"t{k}": Permutation.from_cycles(n, (0, 1, k)) for k in range(2, n)}
    if not gens:
        return cayley_from_elements(closure_from_generators([], degree=n), name=f"A{n}")
    return _from_permutations(gens, f"A{n}")


def direct_product(G: GroupTable, H: GroupTable, cap: int = DEFAULT_TABLE_CAP) -> GroupTable:
    """Componentwise product; the pair (x, y) gets index ``x * |H| + y``."""
    m = H.order
    n = G.order * m
    if n > cap:
        raise CapExceeded(cap, "table elements")
    gp, hp = G.product, H.product
    product = [
        [gp[x1][x2] * m + hp[y1][y2] for x2 in range(G.order) for y2 in range(m)]
        for x1 in range(G.order)
        for y1 in range(m)
    ]
    return GroupTable.from_product(product, name=f"{G.name} x {H.name}")


def abelian_name(factors) -> str:
    factors = [f for f in factors if f > 1] or [1]
    return " x ".join(f"Z{f}" for f in factors)


def abelian(factors, cap: int = DEFAULT_TABLE_CAP) -> GroupTable:
    """Direct product of cyclic groups of the given orders."""
    factors = list(factors)
    _check(all(isinstance(f, int) and f >= 1 for f in factors),
           f"abelian(partition) needs positive integer factors, got {factors}")
    _check(math.prod(factors) <= cap, f"abelian group of order {math.prod(factors)} exceeds cap {cap}")
    nontrivial = [f for f in factors if f > 1] or [1]
    G = cyclic(nontrivial[0])
    for f in nontrivial[1:]:
        G = direct_product(G, cyclic(f), cap=cap)
    return GroupTable(G.product, G.identity, G.inverse, G.element_order,
                      abelian_name(factors), G.generators)


def _factorize(n):
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def abelian_invariants(n: int) -> list[tuple[int, ...]]:
    """Invariant factors (d1 >= d2 >= ..., each divisible by the next) of
    every abelian group of order ``n``, cyclic first."""
    primes = sorted(_factorize(n).items())
    if not primes:
        return [(1,)]
    result = []
    for choice in cartesian(*[list(_partitions(e)) for _, e in primes]):
        length = max(len(c) for c in choice)
        factors = []
        for i in range(length):
            d = 1
            for (p, _), part in zip(primes, choice):
                if i < len(part):
                    d *= p ** part[i]
            factors.append(d)
        result.append(tuple(factors))
    return sorted(result, key=lambda f: (len(f), [-x for x in f]))


FAMILIES = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "generalized_quaternion": generalized_quaternion,
    "dicyclic": dicyclic,
    "semidihedral": semidihedral,
    "modular": modular,
    "symmetric": symmetric,
    "alternating": alternating,
    "abelian": abelian,
}


def make(family: str, param) -> GroupTable:
    """Build a member of a named family, e.g. ``make("dihedral", 8)``.

    Orders are given as group orders (``dihedral(8)`` has order 8), except
    ``symmetric``/``alternating`` which take the degree and ``abelian`` which
    takes a sequence of cyclic factor orders.
    """
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise BadParameter(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    return builder(param)


_SPEC_RE = re.compile(r"^(SD|Dic|Z|D|Q|M|S|A)_?(\d+)(?:\^(\d+))?$")
_SPEC_FAMILY = {
    "Z": "cyclic",
    "D": "dihedral",
    "Q": "generalized_quaternion",
    "SD": "semidihedral",
    "M": "modular",
    "Dic": "dicyclic",
    "S": "symmetric",
    "A": "alternating",
}


def parse_group_spec(text: str) -> tuple[str, object]:
    """Translate a family string such as ``Q16``, ``Q_2^4``, ``D_8``,
    ``Dic_3`` or ``Z_4 x Z_2`` into ``(family, param)`` for :func:`make`.

    ``Dic_m`` denotes the dicyclic group of order 4m.
    """
    text = text.strip()
    parts = [p.strip() for p in re.split(r"\s*[xX×]\s*", text)]
    if len(parts) > 1:
        factors = []
        for part in parts:
            m = re.fullmatch(r"Z_?(\d+)", part)
            if not m:
                raise BadParameter(f"bad factor {part!r} in abelian spec {text!r}")
            factors.append(int(m.group(1)))
        return "abelian", tuple(factors)
    m = _SPEC_RE.match(text)
    if not m:
        raise BadParameter(f"unrecognized group spec {text!r}")
    prefix, base, exp = m.group(1), int(m.group(2)), m.group(3)
    value = base ** int(exp) if exp is not None else base
    family = _SPEC_FAMILY[prefix]
    if family == "dicyclic":
        value *= 4
    return family, value


def make_from_spec(text: str, max_cosets: int | None = None) -> GroupTable:
    """Build a group from a family string or a ``pres:`` inline presentation."""
    text = text.strip()
    if text.startswith("pres:"):
        P = parse_presentation(text[len("pres:"):])
        kwargs = {} if max_cosets is None else {"max_cosets": max_cosets}
        return todd_coxeter(P, **kwargs)
    family, param = parse_group_spec(text)
    return make(family, param)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    group: GroupTable
    source: str


# nonabelian groups of order <= 15; all abelian ones come from abelian_invariants
_SMALL_NONABELIAN = {
    6: [("symmetric", 3)],
    8: [("dihedral", 8), ("generalized_quaternion", 8)],
    10: [("dihedral", 10)],
    12: [("dihedral", 12), ("alternating", 4), ("dicyclic", 12)],
    14: [("dihedral", 14)],
}


def _describe(family, param):
    if isinstance(param, tuple):
        return f"{family}({', '.join(map(str, param))})"
    return f"{family}({param})"


def corpus_plan(max_order: int) -> list[tuple[str, object]]:
    """The ``(family, param)`` list behind :func:`corpus`, in corpus order."""
    if not 1 <= max_order <= MAX_CORPUS_ORDER:
        raise BadParameter(f"corpus max_order must be in 1..{MAX_CORPUS_ORDER}, got {max_order}")
    plan = []
    for n in range(1, max_order + 1):
        plan.extend(("abelian", f) for f in abelian_invariants(n))
        if n <= 15:
            plan.extend(_SMALL_NONABELIAN.get(n, []))
            continue
        if _is_power_of_two(n):
            plan.extend((fam, n) for fam in
                        ("dihedral", "generalized_quaternion", "semidihedral", "modular"))
        elif n % 4 == 0:
            plan.append(("dicyclic", n))
        if n == 24:
            plan.append(("symmetric", 4))
        if n == 60:
            plan.append(("alternating", 5))
    return plan


def corpus(max_order: int) -> list[CorpusEntry]:
    """Verification corpus: every group of order <= 15 plus named families up
    to ``max_order`` (at most 64), in increasing order."""
    entries = []
    for family, param in corpus_plan(max_order):
        G = make(family, param)
        entries.append(CorpusEntry(G.name, G, _describe(family, param)))
    return entries
