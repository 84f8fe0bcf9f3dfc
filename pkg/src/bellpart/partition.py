"""The partition function p(n) by five routes.

``bell``, ``theta`` and ``corollary`` evaluate the Bell-polynomial formulas;
``euler`` (pentagonal recurrence) and ``naive`` (direct enumeration) are
independent oracles.
"""

import threading
import time
from dataclasses import dataclass

from ._combinat import binomial, factorial
from .bell import BellTable, bell_nested, bell_recurrence, _table_for
from .errors import CapExceededError, exact_div
from .pentagonal import iter_euler_powers, lambda_args, theta_coeff

THETA_CAP = 24
NAIVE_CAP = 30

METHODS = ("bell", "theta", "corollary", "euler", "naive")


@dataclass(frozen=True)
class MethodReport:
    n: int
    method: str
    value: int
    elapsed_ns: int
    agrees_with_oracle: bool


_lambda_lock = threading.Lock()
_lambda_table = BellTable(())


def lambda_table(n):
    """Shared Bell table over ``lambda_1 .. lambda_n`` (grown by doubling)."""
    global _lambda_table
    table = _lambda_table
    if len(table.args) >= n:
        return table
    with _lambda_lock:
        if len(_lambda_table.args) < n:
            _lambda_table = BellTable(lambda_args(max(n, 2 * len(_lambda_table.args))))
        return _lambda_table


def clear_caches():
    """Drop memoized Bell tables (the factorial cache is value-stable and kept)."""
    global _lambda_table
    with _lambda_lock:
        _lambda_table = BellTable(())
    _table_for.cache_clear()


def faa_at_zero(n, f_derivs, g_derivs):
    """n-th derivative at 0 of ``f(g(q))`` by Faa di Bruno's formula.

    ``f_derivs[k]`` is ``f^(k)`` at ``g(0)``; ``g_derivs[i-1]`` is ``g^(i)(0)``.
    """
    if len(f_derivs) < n + 1:
        raise ValueError(f"faa_at_zero needs {n + 1} outer derivatives, got {len(f_derivs)}")
    return sum(f_derivs[k] * bell_recurrence(n, k, g_derivs) for k in range(n + 1))


def _lambda_row(n, algo="rec"):
    if algo == "rec":
        return lambda_table(n).row(n)
    if algo == "nested":
        lam = lambda_args(n)
        return [1 if n == 0 else 0] + [bell_nested(n, k, lam) for k in range(1, n + 1)]
    raise ValueError(f"unknown Bell algorithm {algo!r} (expected 'rec' or 'nested')")


def p_bell(n, algo="rec"):
    """p(n) = (1/n!) sum_k (-1)^k k! B_{n,k}(lambda)."""
    if n < 0:
        raise ValueError(f"p(n) needs n >= 0, got {n}")
    row = _lambda_row(n, algo)
    total = sum((-1) ** k * factorial(k) * row[k] for k in range(n + 1))
    return exact_div(total, factorial(n), f"p_bell(n={n})")


def p_theta(n, cap=THETA_CAP):
    """p(n) from the nested sum of theta products (cost ~ 2^(n-1) chains)."""
    if n < 1:
        raise ValueError(f"p_theta needs n >= 1, got {n}")
    if cap is not None and n > cap:
        raise CapExceededError("p_theta", n, cap)
    theta = [theta_coeff(m) for m in range(n + 1)]

    def chains(prev, depth, k):
        # sum over a_depth .. a_k of the theta products, tail theta_{a_k}
        if depth > k:
            return theta[prev]
        total = 0
        for a in range(k - depth + 1, prev):
            t = theta[prev - a]
            if t:
                total += t * chains(a, depth + 1, k)
        return total

    total = -theta[n]
    for k in range(1, n):
        s = chains(n, 1, k)
        total += s if k % 2 else -s
    return total


def partition_numbers(N):
    """``[p(0), ..., p(N)]`` by Euler's pentagonal recurrence.

    Walks ``j(3j-1)/2`` and ``j(3j+1)/2`` with sign ``(-1)^(j+1)`` directly,
    sharing no code with :func:`theta_coeff`.
    """
    if N < 0:
        raise ValueError(f"p(n) needs n >= 0, got {N}")
    p = [1] + [0] * N
    for n in range(1, N + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            g2 = g1 + j
            term = p[n - g1] + (p[n - g2] if g2 <= n else 0)
            total += term if j % 2 else -term
            j += 1
        p[n] = total
    return p


def p_euler(n):
    return partition_numbers(n)[n]


def iter_partitions(n, largest=None):
    """Yield partitions of ``n`` as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in iter_partitions(n - first, first):
            yield (first,) + rest


def p_naive(n, cap=NAIVE_CAP):
    if n < 0:
        raise ValueError(f"p(n) needs n >= 0, got {n}")
    if cap is not None and n > cap:
        raise CapExceededError("p_naive", n, cap)
    return sum(1 for _ in iter_partitions(n))


def pr_bell(l, n):
    """p_l(n), the q^n coefficient of E(q)^l, via Bell polynomials at lambda."""
    if l < 0 or n < 0:
        raise ValueError(f"need l, n >= 0, got l={l}, n={n}")
    row = lambda_table(n).row(n)
    total = sum(binomial(l, k) * factorial(k) * row[k] for k in range(min(l, n) + 1))
    return exact_div(total, factorial(n), f"pr_bell(l={l}, n={n})")


def bell_from_powers(n, k):
    """``B_{n,k}(lambda)`` recovered from the coefficients of ``E(q)^r``, r <= k."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    s = 0
    for r, series in zip(range(k + 1), iter_euler_powers(n)):
        term = binomial(k, r) * series[n]
        s += -term if (k - r) % 2 else term
    return exact_div(factorial(n) * s, factorial(k), f"bell_from_powers(n={n}, k={k})")


def p_corollary(n, via="series"):
    """p(n) = sum_r (-1)^r C(n+1, r+1) p_r(n).

    ``via="series"`` takes p_r(n) from convolution powers of E(q),
    ``via="bell"`` from :func:`pr_bell`.
    """
    if n < 0:
        raise ValueError(f"p(n) needs n >= 0, got {n}")
    if via == "series":
        prs = [s[n] for _, s in zip(range(n + 1), iter_euler_powers(n))]
    elif via == "bell":
        prs = [pr_bell(r, n) for r in range(n + 1)]
    else:
        raise ValueError(f"unknown p_r source {via!r}")
    total = 0
    for r, pr in enumerate(prs):
        term = binomial(n + 1, r + 1) * pr
        total += -term if r % 2 else term
    return total


def compute(n, method, unsafe=False, algo="rec"):
    """Dispatch p(n) to a method by tag; ``unsafe`` lifts the oracle caps."""
    if method == "bell":
        return p_bell(n, algo=algo)
    if method == "theta":
        if n == 0:
            return 1  # formula starts at n = 1; p(0) = 1 by the empty partition
        return p_theta(n, cap=None if unsafe else THETA_CAP)
    if method == "corollary":
        return p_corollary(n)
    if method == "euler":
        return p_euler(n)
    if method == "naive":
        return p_naive(n, cap=None if unsafe else NAIVE_CAP)
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def timed_report(n, method, unsafe=False, algo="rec", oracle=None):
    start = time.perf_counter_ns()
    value = compute(n, method, unsafe=unsafe, algo=algo)
    elapsed = time.perf_counter_ns() - start
    if oracle is None:
        oracle = p_euler(n)
    return MethodReport(n, method, value, elapsed, value == oracle)
