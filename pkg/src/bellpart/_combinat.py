"""Shared factorial and binomial caches."""

import threading
from functools import lru_cache
from math import comb

_fact = [1]
_fact_lock = threading.Lock()


def factorial(n):
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    if n < len(_fact):
        return _fact[n]
    with _fact_lock:
        # monotone growth; readers only index below len(_fact)
        while len(_fact) <= n:
            _fact.append(_fact[-1] * len(_fact))
        return _fact[n]


def binomial(n, k):
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=512)
def pascal_row(n):
    """Row ``n`` of Pascal's triangle as a tuple."""
    row = [1] * (n + 1)
    for k in range(1, n // 2 + 1):
        row[k] = row[n - k] = row[k - 1] * (n - k + 1) // k
    return tuple(row)
