"""Exact partition numbers via partial Bell polynomials and the pentagonal number theorem."""

from ._combinat import binomial, factorial
from .errors import CapExceededError, ExactnessError, BellArgumentError
from .pentagonal import (
    theta_coeff,
    lambda_coeff,
    euler_series,
    euler_power_series,
    convolve,
)
from .bell import BellTable, bell_recurrence, bell_nested, bell_definition
from .partition import (
    METHODS,
    MethodReport,
    faa_at_zero,
    p_bell,
    p_theta,
    p_euler,
    p_naive,
    pr_bell,
    bell_from_powers,
    p_corollary,
    partition_numbers,
    compute,
    clear_caches,
)

__version__ = "0.1.0"
