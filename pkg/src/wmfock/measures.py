"""Free Meixner laws, Cauchy transforms and the analytic side of the checks.

A free Meixner law with parameters (a, b, c, alpha) orthogonalizes
P_0 = c, P_1 = x - alpha, P_{n+1} = (x - a) P_n - b P_{n-1}.  Its Jacobi
parameters are diag (alpha, a, a, ...) and squared off-diagonals
(c*b, b, b, ...), which is what :func:`jacobi_from_fm` returns.

The laws used in this package:

* ``mu1(l)``              single nonsymmetric position operator, (l, 1, 1, 0)
* ``shifted_semicircle(l)``  A + A^dag + l*I, (l, 1, 1, l)
* ``nu(l)``               limit law of the rescaled sums, (l, 1/2, 2, 0)
* ``rho(l)``              single monotone position operator, a two-point law
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from functools import lru_cache

import numpy as np

from wmfock.algebra import LambdaPoly


@dataclass(frozen=True)
class FMParams:
    a: float
    b: float
    c: float
    alpha: float

    def __post_init__(self):
        if self.b < 0 or self.c < 0:
            raise ValueError("free Meixner parameters need b >= 0 and c >= 0")

    def f(self, x):
        a, b, c, al = self.a, self.b, self.c, self.alpha
        t = x - a
        return (1 - c) * t * t + (c - 2) * (al - a) * t + (al - a) ** 2 + b * c * c


@dataclass(frozen=True)
class JacobiParams:
    """Tridiagonal data: ``diag`` are level weights by height, ``offdiag``
    are the squared off-diagonal entries beta_1, beta_2, ...; past the listed
    entries the values repeat ``tail = (diag, beta)``, or the matrix ends
    there when ``tail`` is None."""

    diag: tuple
    offdiag: tuple
    tail: tuple | None = None

    @property
    def size(self) -> int | None:
        return None if self.tail is not None else len(self.diag)

    def diag_at(self, h: int):
        if h < len(self.diag):
            return self.diag[h]
        if self.tail is None:
            return 0
        return self.tail[0]

    def beta_at(self, h: int):
        """Weight of the down step from height h to h - 1 (h >= 1)."""
        if h - 1 < len(self.offdiag):
            return self.offdiag[h - 1]
        if self.tail is None:
            return 0
        return self.tail[1]


@dataclass
class Measure:
    """Atoms plus an absolutely continuous part on one interval."""

    atoms: list
    support: tuple | None
    density: Callable | None
    cauchy: Callable
    jacobi: JacobiParams | None = None
    params: FMParams | None = None
    name: str = ""
    extras: dict = field(default_factory=dict)

    def atom_mass(self) -> float:
        return float(sum(w for _, w in self.atoms))

    def spectral_radius_bound(self) -> float:
        r = 0.0
        if self.support is not None:
            r = max(abs(self.support[0]), abs(self.support[1]))
        for x, _ in self.atoms:
            r = max(r, abs(x))
        return r


def _sqrt_branch(z, a, b):
    """sqrt((z - a)^2 - 4b) with the cut on [a - 2 sqrt(b), a + 2 sqrt(b)],
    behaving like z - a at infinity."""
    r = 2.0 * math.sqrt(b)
    return np.sqrt(z - a - r) * np.sqrt(z - a + r)


def cauchy_closed_form(p: FMParams, z):
    """Cauchy transform of the free Meixner law at ``z`` (scalar or array).

    Of the two square-root signs in the closed form, the one kept is the
    branch analytic off the support and asymptotic to 1/z; that is the
    branch with Im G < 0 on the upper half-plane.
    """
    z = np.asarray(z, dtype=complex)
    a, b, c, al = p.a, p.b, p.c, p.alpha
    if b == 0 or c == 0:
        return 1.0 / (z - al)
    s = _sqrt_branch(z, a, b)
    num = (c - 2) * z + (2 * al - a * c) + c * s
    return num / (-2.0 * p.f(z))


def _fm_atoms(p: FMParams) -> list:
    a, b, c, al = p.a, p.b, p.c, p.alpha
    if b == 0 or c == 0:
        return [(float(al), 1.0)]
    atoms = []
    if c == 1:
        if al != a:
            x1 = al + b / (al - a)
            w = 1 - b / (al - a) ** 2
            if w > 0:
                atoms.append((x1, w))
        return atoms
    D = (al - a) ** 2 - 4 * b * (1 - c)
    if D <= 0:
        return atoms
    sd = math.sqrt(D)
    for sign in (-1, 1):
        t = (-(c - 2) * (al - a) + sign * c * sd) / (2 * (1 - c))
        x = a + t
        d = abs(x - al)
        w = (b * c / d - d / c) / sd
        if w > 0:
            atoms.append((x, w))
    atoms.sort()
    return atoms


def free_meixner_measure(p: FMParams) -> Measure:
    a, b, c = p.a, p.b, p.c
    atoms = _fm_atoms(p)
    if b == 0 or c == 0:
        return Measure(
            atoms=atoms,
            support=None,
            density=None,
            cauchy=lambda z: cauchy_closed_form(p, z),
            jacobi=JacobiParams((p.alpha,), (), None),
            params=p,
        )
    r = 2 * math.sqrt(b)
    lo, hi = a - r, a + r

    def density(x):
        x = np.asarray(x, dtype=float)
        inside = (x > lo) & (x < hi)
        out = np.zeros_like(x)
        xi = x[inside]
        out[inside] = c * np.sqrt(np.maximum(4 * b - (xi - a) ** 2, 0.0)) / (2 * np.pi * p.f(xi))
        return out if out.ndim else float(out)

    return Measure(
        atoms=atoms,
        support=(lo, hi),
        density=density,
        cauchy=lambda z: cauchy_closed_form(p, z),
        jacobi=jacobi_from_fm(p),
        params=p,
    )


def jacobi_from_fm(p: FMParams) -> JacobiParams:
    return JacobiParams(diag=(p.alpha,), offdiag=(p.c * p.b,), tail=(p.a, p.b))


def moments_from_jacobi(j: JacobiParams, n: int):
    """n-th moment as the (0, 0) entry of J^n, summed as weighted Motzkin
    paths: level steps at height h weigh diag_h, an up/down pair between
    heights h-1 and h weighs beta_h."""
    if n < 0 or n > 40:
        raise ValueError("n must be in 0..40")
    top = n // 2 + 1
    if j.size is not None:
        top = min(top, j.size - 1)
    w = [1] + [0] * top
    for step in range(n):
        new = [0] * (top + 1)
        for h, val in enumerate(w):
            if not val:
                continue
            new[h] = new[h] + val * j.diag_at(h)
            if h + 1 <= top:
                new[h + 1] = new[h + 1] + val
            if h >= 1:
                new[h - 1] = new[h - 1] + val * j.beta_at(h)
        w = new
    return w[0]


@lru_cache(maxsize=8)
def _leggauss(k: int):
    return np.polynomial.legendre.leggauss(k)


def measure_moment_quadrature(
    mu: Measure, n: int, nodes: int = 200, tol: float = 1e-10, max_nodes: int = 3200
) -> float:
    """Atoms plus Gauss-Legendre on the a.c. part after x = c + R sin(theta).

    The substitution turns the square-root edge behaviour of these densities
    into something smooth; nodes double until two estimates agree to ``tol``
    relative to max(1, |estimate|).
    """
    if n < 0 or n > 20:
        raise ValueError("n must be in 0..20")
    total = sum(w * x**n for x, w in mu.atoms)
    if mu.support is None:
        return float(total)
    lo, hi = mu.support
    center, radius = (lo + hi) / 2, (hi - lo) / 2

    def integral(k):
        t, w = _leggauss(k)
        theta = t * (np.pi / 2)
        x = center + radius * np.sin(theta)
        vals = x**n * mu.density(x) * radius * np.cos(theta)
        return float(np.dot(w, vals) * (np.pi / 2))

    prev = integral(nodes)
    k = nodes
    while k < max_nodes:
        k *= 2
        cur = integral(k)
        if abs(cur - prev) < tol * max(1.0, abs(cur)):
            return float(total + cur)
        prev = cur
    raise RuntimeError(f"quadrature did not converge for moment {n}")


def stieltjes_invert(G: Callable, x, y: float):
    """-(1/pi) Im G(x + iy); tends to the density as y -> 0+."""
    return -np.imag(G(np.asarray(x) + 1j * y)) / np.pi


def moments_from_cauchy_contour(G: Callable, n: int, R: float, N: int = 4096) -> float:
    """(1/2 pi i) * contour integral of z^n G(z) over |z| = R, trapezoid rule."""
    theta = 2 * np.pi * np.arange(N) / N
    z = R * np.exp(1j * theta)
    g = G(z)
    m0 = np.mean(z * g)
    if abs(m0 - 1) > 1e-6:
        raise ValueError(f"radius {R} does not enclose the support (moment 0 = {m0})")
    return float(np.real(np.mean(z ** (n + 1) * g)))


def contour_moments(G: Callable, n_max: int, R: float, N: int = 4096) -> list:
    theta = 2 * np.pi * np.arange(N) / N
    z = R * np.exp(1j * theta)
    g = G(z)
    m0 = np.mean(z * g)
    if abs(m0 - 1) > 1e-6:
        raise ValueError(f"radius {R} does not enclose the support (moment 0 = {m0})")
    return [float(np.real(np.mean(z ** (k + 1) * g))) for k in range(n_max + 1)]


def default_radius(mu: Measure) -> float:
    return mu.spectral_radius_bound() + 1.0


def atom_residue(G: Callable, x0: float, radius: float, N: int = 1024) -> float:
    """Residue of G at x0 from a small circle that avoids the rest of the support."""
    theta = 2 * np.pi * np.arange(N) / N
    dz = radius * np.exp(1j * theta)
    return float(np.real(np.mean(dz * G(x0 + dz))))


def monotone_convolve(G: Callable, m: int, tol: float = 1e-12) -> Callable:
    """Cauchy transform of the m-fold monotone convolution power: with
    F = 1/G, the result is 1/F(F(...F(z)))."""
    if m < 1:
        raise ValueError("m must be >= 1")

    def H(z):
        z = np.asarray(z, dtype=complex)
        lower = z.imag < 0
        w = np.where(lower, np.conj(z), z)
        for _ in range(m):
            w_new = 1.0 / G(w)
            bad = (w.imag > 0) & (w_new.imag < -tol * np.maximum(1.0, np.abs(w_new)))
            if np.any(bad):
                raise ValueError("reciprocal Cauchy transform left the upper half-plane")
            w = w_new
        out = 1.0 / w
        return np.where(lower, np.conj(out), out)

    return H


# -- named laws ---------------------------------------------------------------------


def mu1(lam: float) -> Measure:
    mu = free_meixner_measure(FMParams(lam, 1.0, 1.0, 0.0))
    mu.name = f"mu1({lam})"
    return mu


def shifted_semicircle(lam: float) -> Measure:
    mu = free_meixner_measure(FMParams(lam, 1.0, 1.0, lam))
    mu.name = f"semicircle({lam})"
    return mu


def nu(lam: float) -> Measure:
    mu = free_meixner_measure(FMParams(lam, 0.5, 2.0, 0.0))
    mu.name = f"nu({lam})"
    return mu


def rho(lam: float) -> Measure:
    s = math.sqrt(lam * lam + 4)
    atoms = [
        ((lam - s) / 2, 0.5 + lam / (2 * s)),
        ((lam + s) / 2, 0.5 - lam / (2 * s)),
    ]

    def cauchy(z):
        z = np.asarray(z, dtype=complex)
        return (z - lam) / (z * z - lam * z - 1)

    return Measure(
        atoms=atoms,
        support=None,
        density=None,
        cauchy=cauchy,
        jacobi=JacobiParams(diag=(0, lam), offdiag=(1,), tail=None),
        name=f"rho({lam})",
    )


LAWS = {
    "mu1": mu1,
    "semicircle-shifted": shifted_semicircle,
    "nu": nu,
    "rho": rho,
}


def rho_moment_exact(n: int) -> LambdaPoly:
    """Moments of rho(l) as polynomials in l, read off the two-atom form.

    The atoms x+, x- are the roots of x^2 - l x - 1 and the weights are
    1/2 -+ l/(2s) with s = x+ - x-.  With p_n = x+^n + x-^n and
    q_n = (x+^n - x-^n)/s, both integer polynomials in l obeying
    u_n = l u_{n-1} + u_{n-2}, the moment is (p_n - l q_n)/2.
    """
    lam = LambdaPoly.var()
    p = [LambdaPoly([2]), lam]
    q = [LambdaPoly.zero(), LambdaPoly.one()]
    for k in range(2, n + 1):
        p.append(lam * p[k - 1] + p[k - 2])
        q.append(lam * q[k - 1] + q[k - 2])
    num = p[n] - lam * q[n]
    if any(c % 2 for c in num.coeffs):
        raise ArithmeticError("moment polynomial is not integral")
    return LambdaPoly(c // 2 for c in num.coeffs)


# -- moment generating functions as printed in closed form -----------------------


def mgf_mu1(z, lam):
    z = np.asarray(z, dtype=complex)
    return ((1 + lam * z) - np.sqrt((1 - lam * z) ** 2 - 4 * z * z)) / (2 * (lam * z + z * z))


def mgf_shifted_semicircle(z, lam):
    z = np.asarray(z, dtype=complex)
    return (1 - lam * z - np.sqrt((1 - lam * z) ** 2 - 4 * z * z)) / (2 * z * z)


def mgf_nu(z, lam):
    z = np.asarray(z, dtype=complex)
    return 1.0 / (lam * z + np.sqrt((1 - lam * z) ** 2 - 2 * z * z))


def limit_kernel(z, lam):
    """K(z) = (1 - l z) - sqrt((1 - l z)^2 - 2 z^2), so that M = 1/(1 - K)."""
    z = np.asarray(z, dtype=complex)
    return (1 - lam * z) - np.sqrt((1 - lam * z) ** 2 - 2 * z * z)


def taylor_coefficients(f: Callable, n_max: int, r: float = 0.05, N: int = 256) -> list:
    """Taylor coefficients at 0 by the trapezoid rule on |z| = r."""
    theta = 2 * np.pi * np.arange(N) / N
    z = r * np.exp(1j * theta)
    vals = f(z)
    return [float(np.real(np.mean(vals * z ** (-k)))) for k in range(n_max + 1)]


def density_grid(mu: Measure, n_points: int) -> tuple:
    """Cell midpoints on the a.c. support, and the density there."""
    if mu.support is None:
        return np.zeros(0), np.zeros(0)
    lo, hi = mu.support
    x = lo + (np.arange(n_points) + 0.5) * (hi - lo) / n_points
    return x, mu.density(x)

