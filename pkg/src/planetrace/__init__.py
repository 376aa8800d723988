"""Exact q-series toolkit for partitions, plane partitions and their traces."""

from .identities import (
    GnTable,
    HnTable,
    IdentityViolation,
    TruncationError,
    VerificationReport,
    euler_inverse_product,
    euler_partition_series,
    euler_plus_product,
    g_polynomials,
    h_polynomials,
    macmahon_series,
    stanley_lhs,
    trace_table,
    verify_new,
    verify_stanley,
)
from .polycore import ASeries, IntPoly, XSeries, format_poly, parse_poly
from .qseries import bracket, bracket_factorial, gauss_binom, gauss_binom_pascal

__version__ = "0.1.0"
