from fractions import Fraction

import pytest

from wmfock import fock, moments
from wmfock.algebra import LambdaPoly


def test_basic_operators():
    assert fock.create(2, (1,), "wm") == (2, 1)
    assert fock.create(1, (1,), "wm") == (1, 1)
    assert fock.create(1, (1,), "mono") is None
    assert fock.create(1, (2,), "wm") is None
    assert fock.annihilate(2, (2, 1)) == (1,)
    assert fock.annihilate(1, (2, 1)) is None
    assert fock.annihilate(1, ()) is None
    assert fock.preserve(2, (2, 1)) == (2, 1)
    assert fock.preserve(1, ()) is None
    with pytest.raises(ValueError):
        fock.create(0, ())


def test_basis_states_are_admissible():
    for space in ("wm", "mono"):
        states = fock.basis_states(space, 3, 4)
        assert len(states) == len(set(states))
        assert all(fock.is_basis_state(s, space) for s in states)
    assert len(fock.basis_states("mono", 3, 5)) == 8  # subsets of {1,2,3}


@pytest.mark.parametrize("space", ["wm", "mono"])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_oracle_matches_recursion(space, m):
    got = fock.vacuum_moments(space, m, None, 10)
    assert got == [moments.moment_poly(space, m, n) for n in range(11)]


def test_oracle_numeric_and_exact_values():
    assert fock.vacuum_moment("wm", 1, 2, 5) == 18
    assert fock.vacuum_moment("wm", 1, Fraction(1, 2), 5) == Fraction(21, 8)
    assert fock.vacuum_moments("mono", 1, 1, 8) == [1, 0, 1, 1, 2, 3, 5, 8, 13]
    assert fock.vacuum_moment("wm", 2, 1.0, 4) == pytest.approx(9.0)


def test_identity_variant_gives_motzkin_polynomials():
    got = fock.vacuum_moments("wm", 1, None, 10, variant="identity")
    assert got == [moments.motzkin_poly_recursive(n) for n in range(11)]


def test_caps():
    with pytest.raises(fock.CapError):
        fock.vacuum_moments("wm", 1, None, fock.EXACT_N_CAP + 1)
    with pytest.raises(fock.CapError):
        fock.vacuum_moments("wm", fock.M_CAP + 1, 1, 4)
    assert len(fock.vacuum_moments("wm", 1, None, 14, enforce_caps=False)) == 15
    with pytest.raises(ValueError):
        fock.vacuum_moments("full", 1, 1, 2)


@pytest.mark.parametrize("space", ["wm", "mono"])
def test_commutation_relations_hold(space):
    results = fock.check_relations(3, 5, space)
    assert results
    bad = [r for r in results if not r.ok]
    assert bad == []
    assert all(r.checked > 0 for r in results)


def test_relations_as_typeset_fail_with_witness():
    results = fock.check_relations(3, 4, "mono", fock.printed_monotone_identities(3))
    failed = [r for r in results if not r.ok]
    assert failed
    for r in failed:
        lhs, state, left, right = r.witness
        assert left != right
        assert fock.apply_word(lhs, state, "mono") == left


def test_relation_depth_cap():
    with pytest.raises(fock.CapError):
        fock.check_relations(2, 7)


def test_apply_word_right_to_left():
    word = [("-", 2), ("+", 2)]
    assert fock.apply_word(word, (1,), "wm") == (1,)
    assert fock.apply_word([("+", 2), ("-", 2)], (1,), "wm") is None


def test_adjointness_on_basis():
    # <A+_i u, v> = <u, A_i v> on every pair of basis tensors
    states = fock.basis_states("wm", 2, 3)
    for i in (1, 2):
        for u in states:
            for v in states:
                lhs = fock.create(i, u) == v
                rhs = fock.annihilate(i, v) == u
                assert lhs == rhs


def test_inner_product():
    one = LambdaPoly.one()
    assert fock.inner_product({(): 2, (1,): 3}, {(1,): 5}) == 15
    v = fock.FockVector.vacuum("wm", one)
    assert v.inner_vacuum() == one and len(v) == 1
