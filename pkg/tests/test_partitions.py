import itertools

import pytest

from wmfock import partitions as P
from wmfock.algebra import catalan
from wmfock.partitions import LabeledPartition, Partition


def set_partitions(n):
    """All set partitions of [n] via restricted growth strings."""
    def rec(i, rgs, k):
        if i == n:
            yield rgs
            return
        for b in range(k + 1):
            yield from rec(i + 1, rgs + [b], max(k, b + 1))

    for rgs in rec(0, [], 0):
        blocks = {}
        for x, b in enumerate(rgs, start=1):
            blocks.setdefault(b, []).append(x)
        yield Partition(blocks.values())


def brute_force_class(m, n, monotone):
    out = set()
    for p in set_partitions(n):
        if any(len(b) > 2 for b in p.blocks) or not P.is_noncrossing(p):
            continue
        if P.has_outer_singleton(p):
            continue
        for labels in itertools.product(range(1, m + 1), repeat=len(p.blocks)):
            lp = LabeledPartition(p, labels)
            if not P.is_NCLP_s(lp):
                continue
            ok = P.is_monotone(lp) if monotone else P.is_weakly_monotone(lp)
            if ok:
                out.add(lp)
    return out


@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_equals_filtered_brute_force(m, n):
    assert set(P.enumerate_ANC_wm(m, n)) == brute_force_class(m, n, monotone=False)
    assert set(P.enumerate_ANC_m(m, n)) == brute_force_class(m, n, monotone=True)


def test_enumeration_has_no_duplicates():
    for m, n in [(2, 8), (3, 7)]:
        for enum in (P.enumerate_ANC_wm, P.enumerate_ANC_m):
            lps = enum(m, n)
            assert len(lps) == len(set(lps))


@pytest.mark.parametrize("n", range(1, 9))
def test_noncrossing_count_is_catalan(n):
    assert sum(P.is_noncrossing(p) for p in set_partitions(n)) == catalan(n)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        Partition([(1,), (3,)])
    assert Partition([(3, 1), (2,)]).blocks == ((1, 3), (2,))
    with pytest.raises(ValueError):
        LabeledPartition(Partition([(1, 2)]), (1, 2))


def test_crossing_partitions_are_rejected():
    crossing = Partition([(1, 3), (2, 4)])
    assert not P.is_noncrossing(crossing)
    with pytest.raises(P.CrossingError):
        P.nesting_order(crossing)
    with pytest.raises(P.CrossingError):
        P.irreducible_factors(crossing)


def test_nesting_order():
    p = Partition([(1, 6), (2, 5), (3,), (4,)])
    order = P.nesting_order(p)
    assert order.parent == [None, 0, 1, 1]
    assert order.outer == [True, False, False, False]
    assert order.leq(0, 2) and not order.leq(2, 0)
    assert order.covers() == {(0, 1), (1, 2), (1, 3)}


def test_irreducible_factors():
    p = Partition([(1, 2), (3, 6), (4,), (5,), (7, 8)])
    factors = P.irreducible_factors(p)
    assert [f.blocks for f in factors] == [((1, 2),), ((1, 4), (2,), (3,)), ((1, 2),)]
    assert all(P.is_irreducible(f) for f in factors)
    assert not P.is_irreducible(p)


def test_label_predicates():
    p = Partition([(1, 4), (2, 3)])
    assert P.is_weakly_monotone(LabeledPartition(p, (1, 1)))
    assert not P.is_monotone(LabeledPartition(p, (1, 1)))
    assert P.is_monotone(LabeledPartition(p, (1, 2)))
    assert not P.is_weakly_monotone(LabeledPartition(p, (2, 1)))
    q = Partition([(1, 3), (2,)])
    assert P.is_NCLP_s(LabeledPartition(q, (2, 2)))
    assert not P.is_NCLP_s(LabeledPartition(q, (2, 1)))


def test_weighted_sums():
    assert P.weighted_sum(P.enumerate_ANC_wm(2, 4)).to_json() == [7, 0, 2]
    assert P.weighted_sum(P.enumerate_ANC_m(2, 4)).to_json() == [5, 0, 2]
    assert P.weighted_sum([]).is_zero()


def test_labeled_json_round_trip():
    for lp in P.enumerate_ANC_wm(2, 5):
        assert LabeledPartition.from_json(lp.to_json()) == lp


def test_interval_partitions():
    parts = P.enumerate_interval_partitions(4)
    assert len(parts) == 8
    assert parts[0].blocks == ((1, 2, 3, 4),)
    assert len(P.enumerate_interval_partitions(6, min_part=2)) == 5
    assert P.compositions(5, 2) == [(5,), (3, 2), (2, 3)]


def test_enumeration_cap():
    with pytest.raises(ValueError):
        P.enumerate_ANC_wm(1, P.ENUMERATION_CAP + 1)


@pytest.fixture
def two_tree_example():
    # colours of the drawing mapped to labels 1..7
    blue, red, orange, yellow, auburn, green, aqua = range(1, 8)
    blocks = [
        ((1, 10), blue), ((2,), blue), ((3, 5), red), ((4,), red),
        ((6, 9), orange), ((7, 8), yellow),
        ((11, 18), auburn), ((12, 13), green), ((14,), auburn),
        ((15, 16), aqua), ((17,), auburn),
    ]
    p = Partition([b for b, _ in blocks])
    lab = dict(blocks)
    return LabeledPartition(p, tuple(lab[b] for b in p.blocks))


def test_example_is_in_the_weakly_monotone_class(two_tree_example):
    lp = two_tree_example
    assert lp.partition.n == 18
    assert P.is_noncrossing(lp) and not P.has_outer_singleton(lp)
    assert P.is_NCLP_s(lp) and P.is_weakly_monotone(lp)
    assert lp.weight().to_json() == [0, 0, 0, 0, 1]


def test_example_forest(two_tree_example):
    roots = P.nesting_forest(two_tree_example)
    assert [r.block for r in roots] == [(1, 10), (11, 18)]
    assert [r.depth() for r in roots] == [3, 2]
    assert [c.block for c in roots[0].children] == [(2,), (3, 5), (6, 9)]
    assert [c.label for c in roots[1].children] == [6, 5, 7, 5]
    text = P.forest_to_text(roots)
    assert text.splitlines()[0] == "{1,10} [1]"
    assert "    {7,8} [4]" in text.splitlines()
    dot = P.forest_to_dot(roots)
    assert dot.startswith("digraph") and "b11_18 -> b15_16;" in dot


def test_forest_roots_are_irreducible_factors(two_tree_example):
    assert len(P.irreducible_factors(two_tree_example)) == len(P.nesting_forest(two_tree_example))
