"""
Symmetric-polynomial valuation invariants of totally ramified extensions
of local fields: KR transition coefficients, indices of inseparability,
the function g_h(r) and higher differents.
"""

from .config import RunConfig
from .exceptions import (BoundExceededError, DimensionMismatchError, InsepError,
                         InsufficientPrecisionError, InseparableInputError, NotUniformizerError,
                         PolynomialParseError, ResidueFieldTooSmallError, UnknownSuiteError)
from .inseparability import InsepProfile, GValue, g_exact, gamma_lower_bound, profile, trace_ideal
from .kr_coefficients import CycleDigraph, d_coefficient, eta
from .local_fields import EisensteinExtension, ExtElement, LaurentField, PadicField
from .parsing import parse_base, parse_extension
from .partitions import Partition, enumerate_partitions
from .symmetric_functions import brute_force_psi, psi_by_elimination, rk_membership
from .verification import Report, cmd_example, run_suite

__all__ = [
    'RunConfig',
    'InsepError',
    'DimensionMismatchError',
    'BoundExceededError',
    'InsufficientPrecisionError',
    'InseparableInputError',
    'NotUniformizerError',
    'ResidueFieldTooSmallError',
    'PolynomialParseError',
    'UnknownSuiteError',
    'InsepProfile',
    'GValue',
    'profile',
    'g_exact',
    'gamma_lower_bound',
    'trace_ideal',
    'CycleDigraph',
    'd_coefficient',
    'eta',
    'EisensteinExtension',
    'ExtElement',
    'LaurentField',
    'PadicField',
    'parse_base',
    'parse_extension',
    'Partition',
    'enumerate_partitions',
    'brute_force_psi',
    'psi_by_elimination',
    'rk_membership',
    'Report',
    'cmd_example',
    'run_suite',
]
