from collections import Counter
from itertools import permutations
from math import lcm

import pytest

from gqbreak.catalog import (
    abelian_invariants,
    conjugacy_classes,
    corpus,
    direct_product,
    fingerprint,
    make,
    make_from_spec,
    parse_group_spec,
    quaternion_by_permutations,
)
from gqbreak.errors import BadParameter, CapExceeded
from gqbreak.group import validate_table
from gqbreak.presentation import parse_presentation, todd_coxeter
from gqbreak.verify import is_cyclic

from .oracles import perm_order


def square_symmetries():
    """Vertex permutations of a square that preserve adjacency."""
    edges = {frozenset((i, (i + 1) % 4)) for i in range(4)}
    return [
        p for p in permutations(range(4))
        if {frozenset((p[a], p[b])) for a, b in map(tuple, edges)} == edges
    ]


def quaternion_units():
    """Q8 as unit quaternions (w, x, y, z) with integer coordinates."""
    def mul(q, r):
        a1, b1, c1, d1 = q
        a2, b2, c2, d2 = r
        return (a1*a2 - b1*b2 - c1*c2 - d1*d2, a1*b2 + b1*a2 + c1*d2 - d1*c2,
                a1*c2 - b1*d2 + c1*a2 + d1*b2, a1*d2 + b1*c2 - c1*b2 + d1*a2)
    units = [tuple(s if k == i else 0 for k in range(4)) for i in range(4) for s in (1, -1)]
    one = (1, 0, 0, 0)

    def order(q):
        k, r = 1, q
        while r != one:
            r = mul(r, q)
            k += 1
        return k
    return Counter(order(q) for q in units)


class TestMake:
    def test_trivial(self):
        G = make("cyclic", 1)
        assert G.order == 1 and fingerprint(G).order_histogram == ((1, 1),)

    def test_q8_has_one_involution(self):
        G = make("generalized_quaternion", 8)
        assert G.order == 8 and G.element_order.count(2) == 1

    def test_d8_involutions(self):
        expected = sum(1 for p in square_symmetries() if perm_order(p) == 2)
        assert expected == 5
        assert make("dihedral", 8).element_order.count(2) == expected

    @pytest.mark.parametrize("family, param, order", [
        ("cyclic", 12, 12), ("dihedral", 12, 12), ("dicyclic", 12, 12),
        ("semidihedral", 16, 16), ("modular", 32, 32), ("symmetric", 4, 24),
        ("alternating", 5, 60), ("symmetric", 6, 720), ("alternating", 6, 360),
        ("abelian", (4, 2, 2), 16), ("symmetric", 1, 1), ("alternating", 2, 1),
    ])
    def test_orders_and_validity(self, family, param, order):
        G = make(family, param)
        assert G.order == order
        if order <= 64:
            assert validate_table(G).ok

    @pytest.mark.parametrize("family, param", [
        ("cyclic", 0), ("dihedral", 7), ("generalized_quaternion", 4),
        ("generalized_quaternion", 12), ("semidihedral", 8), ("modular", 8),
        ("dicyclic", 6), ("symmetric", 7), ("alternating", 0), ("abelian", (0,)),
        ("nonsense", 3),
    ])
    def test_bad_parameters(self, family, param):
        with pytest.raises(BadParameter):
            make(family, param)

    def test_semidihedral_and_modular_structure(self):
        # SD16: 5 involutions, M16: 3 involutions and nonabelian
        assert make("semidihedral", 16).element_order.count(2) == 5
        M = make("modular", 16)
        assert M.element_order.count(2) == 3 and not M.is_abelian()

    def test_quaternion_generators_named(self):
        G = make("generalized_quaternion", 32)
        assert G.element_order[G.generators["a"]] == 16
        assert G.element_order[G.generators["b"]] == 4


class TestDirectProduct:
    def test_with_trivial(self):
        G = make("dihedral", 10)
        assert fingerprint(direct_product(G, make("cyclic", 1))) == fingerprint(G)

    def test_klein(self):
        V = direct_product(make("cyclic", 2), make("cyclic", 2))
        assert V.order == 4 and V.element_order.count(2) == 3

    def test_coprime_cyclic(self):
        G = direct_product(make("cyclic", 3), make("cyclic", 5))
        assert G.order == 15 and 15 in G.element_order

    def test_orders_are_lcm(self):
        G, H = make("cyclic", 4), make("cyclic", 6)
        P = direct_product(G, H)
        for x in range(4):
            for y in range(6):
                assert P.element_order[x * 6 + y] == lcm(G.element_order[x], H.element_order[y])

    def test_cap(self):
        with pytest.raises(CapExceeded):
            direct_product(make("cyclic", 64), make("cyclic", 65))


class TestFingerprint:
    def test_trivial(self):
        fp = fingerprint(make("cyclic", 1))
        assert fp.order == 1 and fp.class_sizes == (1,) and fp.abelian

    def test_q8(self):
        expected = quaternion_units()
        assert dict(fingerprint(make("generalized_quaternion", 8)).order_histogram) == expected
        assert expected == {1: 1, 2: 1, 4: 6}

    def test_s3(self):
        perms = list(permutations(range(3)))

        def conj(g, x):
            ginv = tuple(sorted(range(3), key=lambda i: g[i]))
            return tuple(g[x[ginv[i]]] for i in range(3))
        classes = {frozenset(conj(g, x) for g in perms) for x in perms}
        expected = tuple(sorted(len(c) for c in classes))
        fp = fingerprint(make("symmetric", 3))
        assert fp.class_sizes == expected == (1, 2, 3)
        assert not fp.abelian

    @pytest.mark.parametrize("G", [make("symmetric", 4), make("dicyclic", 20)], ids=str)
    def test_sums(self, G):
        fp = fingerprint(G)
        assert sum(c for _, c in fp.order_histogram) == G.order
        assert sum(fp.class_sizes) == G.order
        assert sum(len(c) for c in conjugacy_classes(G)) == G.order

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_two_quaternion_constructions_agree(self, n):
        text = f"< a, b | a^{2 ** (n - 2)} = b^2, a^{2 ** (n - 1)} = 1, b^-1*a*b = a^-1 >"
        by_presentation = todd_coxeter(parse_presentation(text))
        assert fingerprint(by_presentation) == fingerprint(quaternion_by_permutations(2**n))


class TestCorpus:
    def test_trivial_only(self):
        entries = corpus(1)
        assert len(entries) == 1 and entries[0].group.order == 1

    def test_order_8(self):
        eights = [e for e in corpus(8) if e.group.order == 8]
        assert len(eights) == 5
        assert len({fingerprint(e.group) for e in eights}) == 5

    def test_order_le_15(self):
        entries = corpus(15)
        counts = Counter(e.group.order for e in entries)
        assert [counts[n] for n in range(1, 16)] == [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1]
        assert len(entries) == 28

    def test_bounds(self):
        with pytest.raises(BadParameter):
            corpus(65)
        with pytest.raises(BadParameter):
            corpus(0)

    def test_entries_valid(self, corpus64):
        for e in corpus64:
            assert validate_table(e.group).ok, e.name

    def test_equal_order_fingerprints_distinct(self, corpus64):
        by_order = {}
        for e in corpus64:
            by_order.setdefault(e.group.order, []).append(fingerprint(e.group))
        for n, fps in by_order.items():
            assert len(set(fps)) == len(fps), n

    def test_extended_families_present(self, corpus64):
        names = {e.name for e in corpus64}
        for k in (16, 32, 64):
            assert {f"D{k}", f"Q{k}", f"SD{k}", f"M{k}"} <= names
        assert {"S4", "A5", "Z25", "Z27", "Dic5"} <= names

    def test_order8_unique_noncyclic_with_one_involution(self):
        hits = [e.name for e in corpus(8) if e.group.order == 8
                and not is_cyclic(e.group) and e.group.element_order.count(2) == 1]
        assert hits == ["Q8"]


def test_abelian_invariants_counts():
    # counts of abelian groups: a(16)=5, a(72)=6, a(64)=11, a(p)=1
    assert len(abelian_invariants(16)) == 5
    assert len(abelian_invariants(64)) == 11
    assert len(abelian_invariants(72)) == 6
    assert abelian_invariants(12) == [(12,), (6, 2)]


@pytest.mark.parametrize("text, expected", [
    ("Z12", ("cyclic", 12)), ("Z_12", ("cyclic", 12)), ("D_8", ("dihedral", 8)),
    ("Q16", ("generalized_quaternion", 16)), ("Q_2^5", ("generalized_quaternion", 32)),
    ("SD_2^4", ("semidihedral", 16)), ("M16", ("modular", 16)), ("Dic_3", ("dicyclic", 12)),
    ("S4", ("symmetric", 4)), ("A_5", ("alternating", 5)),
    ("Z_4 x Z_2", ("abelian", (4, 2))), ("Z2 x Z2 x Z2", ("abelian", (2, 2, 2))),
])
def test_parse_group_spec(text, expected):
    assert parse_group_spec(text) == expected


@pytest.mark.parametrize("text", ["Q", "X12", "Z4 x D8", ""])
def test_parse_group_spec_rejects(text):
    with pytest.raises(BadParameter):
        parse_group_spec(text)


def test_make_from_inline_presentation():
    assert make_from_spec("pres:< a, b | a^3, b^2, (a*b)^2 >").order == 6
