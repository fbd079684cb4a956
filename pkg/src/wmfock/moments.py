"""Moment recursions.

Notation used throughout:

* ``b_mn(m, n)``  vacuum moment of T_m = sum_{k<=m} (G_k + l A0_k) on the
  weakly monotone Fock space, as a polynomial in the intensity ``l``;
* ``g_mn(m, n)``  the same on the monotone Fock space;
* ``scaled_moment(m, n, lam)``  b_mn evaluated at l = lam*sqrt(m) and divided
  by m**(n/2), computed in floating point without ever forming the huge
  unscaled numbers.

Both moment tables come from one decomposition.  A labeled partition splits
into its first irreducible factor and the rest.  The first factor is an outer
pair with label ``l``; what sits inside it is a run of ``j`` singletons (all
labeled ``l``) interleaved with the ``r`` irreducible factors of a smaller
labeled partition, which can happen in ``binom(r + j, j)`` ways.  Tracking
``r`` explicitly is what makes the recursion exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from wmfock.algebra import LambdaPoly, arcsine_moment, poly_sum
from wmfock.partitions import compositions

WM = "wm"
MONO = "mono"
SPACES = (WM, MONO)

_ONE = LambdaPoly.one()
_ZERO = LambdaPoly.zero()


def _check_space(space: str):
    if space not in SPACES:
        raise ValueError(f"space must be one of {SPACES}, got {space!r}")


# -- single operator ---------------------------------------------------------


@lru_cache(maxsize=None)
def _motzkin_polys(n_max: int, paper_seed: bool) -> tuple:
    lam = LambdaPoly.var()
    M = [_ONE, _ZERO if paper_seed else lam]
    for n in range(2, n_max + 1):
        total = lam**n
        for k in range(0, n - 1):
            inner = poly_sum(M[n - l] * M[l - k - 2] for l in range(k + 2, n + 1))
            total = total + inner.shift(k)
        M.append(total)
    return tuple(M[: n_max + 1])


def motzkin_poly_recursive(n: int, paper_seed: bool = False) -> LambdaPoly:
    """Level-weighted Motzkin polynomial from the level-run decomposition.

    ``paper_seed=True`` starts the recursion from M_1 = 0 instead of M_1 = l,
    which is only useful to show what goes wrong with that seed.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return _motzkin_polys(max(n, 1), paper_seed)[n]


def vacuum_moments_shifted(n: int) -> LambdaPoly:
    """Vacuum moments of A + A^dag + l*I: the level-weighted Motzkin polynomials."""
    return motzkin_poly_recursive(n)


@lru_cache(maxsize=None)
def _b1_table(n_max: int, paper_seed: bool) -> tuple:
    b = [_ONE, _ZERO]
    for n in range(2, n_max + 1):
        b.append(
            poly_sum(
                b[n - k] * motzkin_poly_recursive(k - 2, paper_seed) for k in range(2, n + 1)
            )
        )
    return tuple(b[: n_max + 1])


def b1_moment(n: int, paper_seed: bool = False) -> LambdaPoly:
    """b_{1,n}: first irreducible Riordan factor of length k wraps a Motzkin
    path of length k - 2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _b1_table(max(n, 1), paper_seed)[n]


# -- sums of m operators, exact ----------------------------------------------


@lru_cache(maxsize=None)
def _refined_table(m: int, n: int, space: str):
    """c[m'][q][r]: weighted sum over labeled partitions of [q] with labels in
    [m'] having exactly r irreducible factors.  Row m' = 0 is the empty label
    set, needed by the monotone case where an inner pair needs a label
    strictly above its parent's."""
    c = [[[_ZERO] * (n + 1) for _ in range(n + 1)] for _ in range(m + 1)]
    for mm in range(m + 1):
        c[mm][0][0] = _ONE
    # S[mm][k]: everything that can sit inside an outer pair of length k,
    # once the label set of the inner pairs has mm elements
    S = [[_ZERO] * (n + 1) for _ in range(m + 1)]

    def fill_S(mm, k):
        terms = []
        for j in range(0, k - 1):
            q = k - 2 - j
            for r in range(0, q // 2 + 1):
                v = c[mm][q][r]
                if v:
                    terms.append((v * comb(r + j, j)).shift(j))
        S[mm][k] = poly_sum(terms)

    # I[mm][k]: weight of an irreducible factor of length k, labels in [mm]
    I = [[_ZERO] * (n + 1) for _ in range(m + 1)]
    for q in range(1, n + 1):
        if q >= 2:
            for mm in range(m + 1):
                fill_S(mm, q)
            for mm in range(1, m + 1):
                src = range(1, mm + 1) if space == WM else range(0, mm)
                I[mm][q] = poly_sum(S[s][q] for s in src)
        for mm in range(1, m + 1):
            for r in range(1, q // 2 + 1):
                c[mm][q][r] = poly_sum(
                    I[mm][k] * c[mm][q - k][r - 1]
                    for k in range(2, q + 1)
                    if c[mm][q - k][r - 1]
                )
    return c


def _moment(m: int, n: int, space: str) -> LambdaPoly:
    _check_space(space)
    if m < 1:
        raise ValueError("m must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    c = _refined_table(m, n, space)
    return poly_sum(c[m][n])


def b_mn(m: int, n: int) -> LambdaPoly:
    """Weakly monotone vacuum moment of order n for m summands."""
    return _moment(m, n, WM)


def g_mn(m: int, n: int) -> LambdaPoly:
    """Monotone vacuum moment of order n for m summands."""
    return _moment(m, n, MONO)


def moment_poly(space: str, m: int, n: int) -> LambdaPoly:
    return _moment(m, n, space)


def refined_moment(space: str, m: int, n: int, r: int) -> LambdaPoly:
    """Contribution of labeled partitions with exactly r irreducible factors."""
    c = _refined_table(m, n, space)
    return c[m][n][r] if 0 <= r <= n else _ZERO


@lru_cache(maxsize=None)
def _printed_table(m: int, n: int):
    # the recursion exactly as typeset: the singleton-insertion factor is
    # sum_{r=1}^{floor(q/2)} binom(r+j, j) applied to the whole moment
    b = [[_ZERO] * (n + 1) for _ in range(m + 1)]
    for mm in range(1, m + 1):
        b[mm][0] = _ONE
    for q in range(2, n + 1):
        for mm in range(1, m + 1):
            total = []
            for k in range(2, q + 1):
                inner = []
                for l in range(1, mm + 1):
                    src = mm - l + 1
                    inner.append(b[src][k - 2])
                    if k >= 3:
                        for j in range(1, k - 1):
                            qq = k - 2 - j
                            h = qq // 2
                            factor = sum(comb(r + j, j) for r in range(1, h + 1)) if h >= 1 else 1
                            inner.append((b[src][qq] * factor).shift(j))
                total.append(b[mm][q - k] * poly_sum(inner))
            b[mm][q] = poly_sum(total)
    return b


def printed_recursion(m: int, n: int) -> LambdaPoly:
    """The b/g recursion as typeset, without factor-count tracking.

    Kept as a witness: it agrees with the true moments for n <= 6 in the
    weakly monotone case and fails from n = 7 on; read as the monotone
    recursion it already fails at n = 4 (for m = 1 it gives Riordan numbers
    instead of Fibonacci numbers at l = 1).
    """
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    return _printed_table(m, n)[m][n]


def moment_value(space: str, m: int, n: int, lam) -> int | Fraction:
    """Exact moment at a given int or Fraction intensity.

    Same recursion as the polynomial tables, but on numbers, with the label
    sets summed as running totals; large m (ten thousand and more) is fine.
    """
    _check_space(space)
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    if not isinstance(lam, (int, Fraction)):
        raise TypeError("lam must be int or Fraction for exact evaluation")
    h = n // 2 + 1
    c = [[[0] * h for _ in range(n + 1)] for _ in range(m + 1)]
    for mm in range(m + 1):
        c[mm][0][0] = 1
    S = [[0] * (n + 1) for _ in range(m + 1)]
    I = [[0] * (n + 1) for _ in range(m + 1)]
    for q in range(1, n + 1):
        if q >= 2:
            for mm in range(m + 1):
                S[mm][q] = sum(
                    comb(r + j, j) * lam**j * c[mm][q - 2 - j][r]
                    for j in range(q - 1)
                    for r in range((q - 2 - j) // 2 + 1)
                )
            run = 0
            for mm in range(1, m + 1):
                run += S[mm][q] if space == WM else S[mm - 1][q]
                I[mm][q] = run
        for mm in range(1, m + 1):
            for r in range(1, q // 2 + 1):
                c[mm][q][r] = sum(I[mm][k] * c[mm][q - k][r - 1] for k in range(2, q + 1))
    return sum(c[m][n])


# -- scaled floating-point variant ---------------------------------------------


@lru_cache(maxsize=64)
def _scaled_table(m: int, n: int, lam: float, space: str) -> np.ndarray:
    """chat[m', q, r] = c[m'][q][r](lam*sqrt(m)) / m**(q/2) for m' = 0..m.

    In these variables an outer pair with j singletons contributes
    lam**j / m, so nothing grows with m.
    """
    chat = np.zeros((m + 1, n + 1, n // 2 + 1))
    chat[:, 0, 0] = 1.0
    S = np.zeros((m + 1, n + 1))
    inv_m = 1.0 / m
    for q in range(1, n + 1):
        if q >= 2:
            acc = np.zeros(m + 1)
            for j in range(0, q - 1):
                qq = q - 2 - j
                for r in range(0, qq // 2 + 1):
                    acc += (comb(r + j, j) * lam**j) * chat[:, qq, r]
            S[:, q] = acc
        # I[m', k] = (1/m) * sum over the admissible inner label-set sizes
        cums = np.cumsum(S, axis=0)
        if space == WM:
            irr = (cums - cums[0]) * inv_m  # rows 1..m'
        else:
            irr = np.vstack([np.zeros((1, n + 1)), cums[:-1]]) * inv_m  # rows 0..m'-1
        for r in range(1, q // 2 + 1):
            col = np.zeros(m + 1)
            for k in range(2, q + 1):
                col += irr[:, k] * chat[:, q - k, r - 1]
            chat[1:, q, r] = col[1:]
    return chat


def scaled_moment(m: int, n: int, lam: float, space: str = WM) -> float:
    """b_{m,n}(lam*sqrt(m)) / m**(n/2) (or the monotone analogue) in floats."""
    _check_space(space)
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    chat = _scaled_table(int(m), int(n), float(lam), space)
    return float(chat[m, n].sum())


def scaled_moment_exact(m: int, n: int, lam, space: str = WM) -> float:
    """Reference value from the exact polynomial; only feasible for small m."""
    p = moment_poly(space, m, n)
    lam_m = float(lam) * np.sqrt(m)
    return float(sum(float(c) * lam_m**k for k, c in enumerate(p.coeffs))) / m ** (n / 2)


# -- limit law -----------------------------------------------------------------


def irreducible_limit_weight(q: int, lam):
    """Limit contribution of one irreducible block of length q >= 2."""
    exact = isinstance(lam, (int, Fraction))
    total = Fraction(0) if exact else 0.0
    for k in range(0, (q - 2) // 2 + 1):
        a = arcsine_moment(k) / (k + 1)
        term = comb(q - 2, 2 * k) * (lam ** (q - 2 - 2 * k))
        total += term * (a if exact else float(a))
    return total


def limit_moment_combinatorial(n: int, lam):
    """n-th moment of the limit law, summed over compositions of n into parts
    of size at least 2.  Exact (Fraction) for int or Fraction ``lam``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    exact = isinstance(lam, (int, Fraction))
    if n == 0:
        return Fraction(1) if exact else 1.0
    weights = {q: irreducible_limit_weight(q, lam) for q in range(2, n + 1)}
    total = Fraction(0) if exact else 0.0
    for comp in compositions(n, min_part=2):
        prod = Fraction(1) if exact else 1.0
        for q in comp:
            prod *= weights[q]
        total += prod
    return total


def limit_kernel_coeffs(r_max: int, lam) -> list:
    """Coefficients of z**(r+2) in K(z), whose geometric series 1/(1-K) is
    the limit moment generating function."""
    return [irreducible_limit_weight(r + 2, lam) for r in range(r_max + 1)]
