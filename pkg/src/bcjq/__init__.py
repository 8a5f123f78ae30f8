"""Exact arithmetic for bicomplex third-order Jacobsthal quaternions."""

from .bicomplex import Bicomplex, NotInvertibleError, ProjectionError, parse, render
from .bcq import bcj, bcj_binet, bcj_norm, bcj_sum, bcu, bcv
from .detmat import bcj_via_det, build_matrix, det_exact
from .identities import IdentityReport, prove_unary, run_identities
from .scalars import OMEGA1, OMEGA2, Cyclo
from .sequences import j3, j3_binet, j3_matpow, j3_sum, u3, v3

__version__ = "0.1.0"

__all__ = [
    "Bicomplex",
    "Cyclo",
    "IdentityReport",
    "NotInvertibleError",
    "OMEGA1",
    "OMEGA2",
    "ProjectionError",
    "bcj",
    "bcj_binet",
    "bcj_norm",
    "bcj_sum",
    "bcj_via_det",
    "bcu",
    "bcv",
    "build_matrix",
    "det_exact",
    "j3",
    "j3_binet",
    "j3_matpow",
    "j3_sum",
    "parse",
    "prove_unary",
    "render",
    "run_identities",
    "u3",
    "v3",
]
