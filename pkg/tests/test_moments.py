from fractions import Fraction

import pytest

from wmfock import moments, partitions, paths
from wmfock.algebra import LambdaPoly, fibonacci, poly_sum

l = LambdaPoly.var()


def test_single_operator_moment_list():
    want = [1, 0, 1, l, l**2 + 2, l**3 + 5 * l, l**4 + 9 * l**2 + 5, l**5 + 14 * l**3 + 21 * l]
    assert [moments.b1_moment(n) for n in range(8)] == want
    assert [moments.b_mn(1, n) for n in range(8)] == want


@pytest.mark.parametrize("n", range(0, 13))
def test_recursions_match_path_dp(n):
    assert moments.motzkin_poly_recursive(n) == paths.weighted_count_motzkin(n)
    assert moments.b1_moment(n) == paths.weighted_count_riordan(n)
    assert moments.vacuum_moments_shifted(n) == paths.weighted_count_motzkin(n)


def test_zero_seed_breaks_the_recursion():
    assert moments.motzkin_poly_recursive(1, paper_seed=True).is_zero()
    assert moments.b1_moment(3, paper_seed=True).is_zero()
    assert moments.b1_moment(3) == l


def test_monotone_single_operator_is_fibonacci():
    assert [moments.g_mn(1, n)(1) for n in range(1, 21)] == [fibonacci(n - 1) for n in range(1, 21)]


def test_two_operators_order_four():
    assert moments.b_mn(2, 4) == 2 * l**2 + 7
    assert moments.g_mn(2, 4) == 2 * l**2 + 5
    assert moments.b_mn(5, 2) == LambdaPoly([5])


@pytest.mark.parametrize("space,enum", [("wm", partitions.enumerate_ANC_wm), ("mono", partitions.enumerate_ANC_m)])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_recursion_equals_enumeration(space, enum, m):
    for n in range(1, 10):
        assert moments.moment_poly(space, m, n) == partitions.weighted_sum(enum(m, n))


def test_refined_counts_sum_to_moment():
    for space in moments.SPACES:
        for n in range(9):
            parts = [moments.refined_moment(space, 3, n, r) for r in range(n + 1)]
            assert poly_sum(parts) == moments.moment_poly(space, 3, n)


def test_refined_counts_match_factor_histogram():
    lps = partitions.enumerate_ANC_wm(2, 8)
    for r in range(5):
        sub = [lp for lp in lps if len(partitions.irreducible_factors(lp)) == r]
        assert moments.refined_moment("wm", 2, 8, r) == partitions.weighted_sum(sub)


def test_printed_recursion_witness():
    for n in range(7):
        assert moments.printed_recursion(1, n) == moments.b_mn(1, n)
    assert moments.printed_recursion(1, 7) == l**5 + 17 * l**3 + 26 * l
    assert moments.printed_recursion(1, 7) != moments.b_mn(1, 7)
    # read as the monotone moment it is already wrong at n = 4
    assert moments.printed_recursion(1, 4) != moments.g_mn(1, 4)


def test_bad_arguments():
    with pytest.raises(ValueError):
        moments.moment_poly("full", 1, 2)
    with pytest.raises(ValueError):
        moments.b_mn(0, 2)
    with pytest.raises(ValueError):
        moments.b1_moment(-1)


@pytest.mark.parametrize("space", moments.SPACES)
def test_scaled_matches_exact_polynomial(space):
    for m in (1, 3, 20):
        for n in range(9):
            a = moments.scaled_moment(m, n, 0.7, space)
            b = moments.scaled_moment_exact(m, n, 0.7, space)
            assert a == pytest.approx(b, rel=1e-12, abs=1e-12)


def test_scaled_low_orders_are_exact():
    for m in (10, 1000):
        assert moments.scaled_moment(m, 2, 1.3) == pytest.approx(1.0)
        assert moments.scaled_moment(m, 3, 1.3) == pytest.approx(1.3)
        assert moments.scaled_moment(m, 1, 1.3) == 0.0


def test_scaled_order_four_error():
    for m in (100, 1000):
        v = moments.scaled_moment(m, 4, 1.0)
        assert v - 2.5 == pytest.approx(1 / (2 * m), rel=1e-6)


def test_limit_moments_exact():
    lam = Fraction(1)
    assert moments.limit_moment_combinatorial(2, lam) == 1
    assert moments.limit_moment_combinatorial(3, lam) == 1
    assert moments.limit_moment_combinatorial(4, lam) == Fraction(5, 2)
    lam = Fraction(1, 3)
    assert moments.limit_moment_combinatorial(4, lam) == lam**2 + Fraction(3, 2)
    assert moments.limit_moment_combinatorial(0, 2.0) == 1.0


def test_limit_kernel_coefficients():
    from wmfock.measures import limit_kernel, taylor_coefficients

    lam = 0.8
    coeffs = taylor_coefficients(lambda z: limit_kernel(z, lam), 10, r=0.2)
    want = moments.limit_kernel_coeffs(8, lam)
    assert coeffs[:2] == pytest.approx([0, 0], abs=1e-12)
    assert coeffs[2:] == pytest.approx(want, rel=1e-9)


def test_limit_moments_follow_from_kernel():
    from wmfock.measures import limit_kernel, taylor_coefficients

    lam = 1.5
    M = taylor_coefficients(lambda z: 1 / (1 - limit_kernel(z, lam)), 10, r=0.2)
    want = [moments.limit_moment_combinatorial(n, lam) for n in range(11)]
    assert M == pytest.approx(want, rel=1e-9)


@pytest.mark.parametrize("space", moments.SPACES)
def test_moment_value_matches_polynomial(space):
    for m in (1, 2, 4):
        for n in range(10):
            p = moments.moment_poly(space, m, n)
            assert moments.moment_value(space, m, n, 3) == p(3)
            assert moments.moment_value(space, m, n, Fraction(2, 3)) == p(Fraction(2, 3))
    with pytest.raises(TypeError):
        moments.moment_value("wm", 1, 2, 0.5)


def test_scaled_moment_against_exact_at_large_m():
    # lam * sqrt(m) = 200 is an integer, so the exact value is available
    exact = Fraction(moments.moment_value("wm", 10_000, 8, 200), 10_000**4)
    assert moments.scaled_moment(10_000, 8, 2.0) == pytest.approx(float(exact), rel=1e-12)
