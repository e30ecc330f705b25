"""Exact algebra for L-functions of twisted Carlitz tensor powers."""

from .algebra import QQ, ZZ, CharPoly, MultiPoly, PrimeField, parse_poly
from .census import (
    RankCensus,
    SupportSet,
    analytic_rank,
    l_function,
    rank_census,
    support_equality_check,
    support_points,
)
from .charpoly import char_poly_rev, det, det_oracle_cofactor, principal_minor_sums
from .coefficients import DFamily, HTable, d_family, h_table
from .identities import Report
from .matrices import PolyMatrix, TwistSpec, build_B, build_M, build_M_nt
from .membership import Certificate, ideal_membership_linear

__version__ = "0.1.0"

__all__ = [
    "QQ", "ZZ", "CharPoly", "MultiPoly", "PrimeField", "parse_poly",
    "RankCensus", "SupportSet", "analytic_rank", "l_function", "rank_census",
    "support_equality_check", "support_points",
    "char_poly_rev", "det", "det_oracle_cofactor", "principal_minor_sums",
    "DFamily", "HTable", "d_family", "h_table", "Report",
    "PolyMatrix", "TwistSpec", "build_B", "build_M", "build_M_nt",
    "Certificate", "ideal_membership_linear",
]
