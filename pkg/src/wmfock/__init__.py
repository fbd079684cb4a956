"""Vacuum distributions of nonsymmetric position operators on weakly monotone
and monotone Fock spaces: exact moment polynomials, a direct operator oracle,
and the free Meixner measures they converge to."""

from wmfock.algebra import LambdaPoly
from wmfock.moments import (
    b1_moment,
    b_mn,
    g_mn,
    limit_moment_combinatorial,
    scaled_moment,
)
from wmfock.fock import vacuum_moment
from wmfock.measures import FMParams, free_meixner_measure, mu1, nu, rho

__all__ = [
    "LambdaPoly",
    "b1_moment",
    "b_mn",
    "g_mn",
    "limit_moment_combinatorial",
    "scaled_moment",
    "vacuum_moment",
    "FMParams",
    "free_meixner_measure",
    "mu1",
    "nu",
    "rho",
]

__version__ = "0.1.0"
