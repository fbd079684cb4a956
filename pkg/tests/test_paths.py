import itertools

import pytest

from wmfock import paths
from wmfock.algebra import LambdaPoly, binomial, catalan
from wmfock.paths import DOWN, LEVEL, UP, SizeError


def brute_force(n):
    return [w for w in itertools.product((UP, LEVEL, DOWN), repeat=n) if paths.is_motzkin(w)]


@pytest.mark.parametrize("n", range(0, 9))
def test_enumeration_matches_brute_force_in_order(n):
    assert paths.enumerate_motzkin(n) == brute_force(n)
    assert paths.enumerate_riordan(n) == [w for w in brute_force(n) if paths.is_riordan(w)]


def test_small_words():
    assert [paths.word_to_string(w) for w in paths.enumerate_motzkin(3)] == ["ULD", "UDL", "LUD", "LLL"]
    assert [paths.word_to_string(w) for w in paths.enumerate_riordan(4)] == ["UUDD", "ULLD", "UDUD"]


def test_known_numbers():
    assert [paths.motzkin_number(n) for n in range(10)] == [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]
    assert [paths.riordan_number(n) for n in range(10)] == [1, 0, 1, 1, 3, 6, 15, 36, 91, 232]


@pytest.mark.parametrize("n", range(0, 17))
def test_motzkin_riordan_identities(n):
    M = paths.motzkin_number(n)
    assert M == paths.riordan_number(n) + paths.riordan_number(n + 1)
    assert M == sum(binomial(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


@pytest.mark.parametrize("n", range(0, 11))
def test_dp_equals_weighted_enumeration(n):
    assert paths.weighted_count_motzkin(n) == paths.weighted_enumeration(paths.enumerate_motzkin(n))
    assert paths.weighted_count_riordan(n) == paths.weighted_enumeration(paths.enumerate_riordan(n))


def test_weighted_riordan_list():
    l = LambdaPoly.var()
    want = [1, 0, 1, l, l**2 + 2, l**3 + 5 * l]
    assert [paths.weighted_count_riordan(n) for n in range(6)] == want


def test_level_weighted_motzkin_is_binomial_convolution():
    # M_n(l) = sum_k binom(n, 2k) C_k l^(n-2k)
    for n in range(12):
        want = sum(
            (LambdaPoly.monomial(n - 2 * k, binomial(n, 2 * k) * catalan(k)) for k in range(n // 2 + 1)),
            LambdaPoly.zero(),
        )
        assert paths.weighted_count_motzkin(n) == want


def test_heights_and_predicates():
    w = paths.word_from_string("ULDUD")
    assert paths.heights(w) == [0, 1, 1, 0, 1, 0]
    assert paths.is_motzkin(w) and paths.is_riordan(w)
    assert not paths.is_riordan(paths.word_from_string("LUD"))
    assert not paths.is_motzkin(paths.word_from_string("DU"))
    assert paths.count_level(w) == 1


def test_bad_letter():
    with pytest.raises(ValueError):
        paths.word_from_string("UXD")


def test_decompose_irreducible():
    w = paths.word_from_string("ULDLUUDD")
    parts = [paths.word_to_string(p) for p in paths.decompose_irreducible(w)]
    assert parts == ["ULD", "L", "UUDD"]
    assert paths.is_irreducible(paths.word_from_string("UUDLD"))
    assert not paths.is_irreducible(w)


def test_word_to_partition_up_opens_block():
    p = paths.word_to_partition(paths.word_from_string("UULDD"))
    assert p.blocks == ((1, 5), (2, 4), (3,))
    assert paths.path_to_pair_partition(paths.word_from_string("UDUD")).blocks == ((1, 2), (3, 4))
    with pytest.raises(ValueError):
        paths.path_to_pair_partition(paths.word_from_string("ULD"))


def test_caps():
    with pytest.raises(SizeError):
        paths.enumerate_motzkin(paths.ENUMERATION_CAP + 1)
    # the DP has no cap
    assert paths.motzkin_number(40) == 66368199913921497
