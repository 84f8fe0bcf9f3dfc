"""Partial Bell polynomials ``B_{n,k}(x_1, ..., x_{n-k+1})`` at integer arguments.

Three independent evaluators:

* :func:`bell_recurrence` -- triangular recurrence
  ``B_{n,k} = sum_i C(n-1, i-1) x_i B_{n-i,k-1}``, memoized in a :class:`BellTable`;
* :func:`bell_nested` -- Cvijovic's nested sum over decreasing index chains;
* :func:`bell_definition` -- the defining sum over multiplicity vectors (oracle).

Arguments are 1-based: ``args[0]`` is ``x_1``.
"""

import threading
from functools import lru_cache

from ._combinat import binomial, factorial, pascal_row
from .errors import BellArgumentError, CapExceededError, exact_div

DEFINITION_CAP = 14


def _check(n, k, args):
    if n < 0 or k < 0:
        raise ValueError(f"need n, k >= 0, got n={n}, k={k}")
    if 1 <= k <= n and len(args) < n - k + 1:
        raise BellArgumentError(
            f"B_{{{n},{k}}} needs at least {n - k + 1} arguments, got {len(args)}"
        )


class BellTable:
    """Lazily grown triangle of ``B_{m,j}`` for one argument list.

    Cell ``(m, j)`` with ``j >= 1`` only depends on ``x_1 .. x_{m-j+1}``, so
    cells with ``m - j + 1 > len(args)`` are left as ``None``. Growth is
    serialized by a lock; finished rows are never mutated.
    """

    def __init__(self, args):
        self.args = tuple(args)
        self._rows = [[1]]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._rows)

    def _cell(self, m, j):
        x, rows = self.args, self._rows
        row_binom = pascal_row(m - 1)
        total = 0
        for i in range(1, m - j + 2):
            xi = x[i - 1]
            total += row_binom[i - 1] * xi * rows[m - i][j - 1]
        return total

    def ensure(self, n):
        if n < len(self._rows):
            return
        with self._lock:
            L = len(self.args)
            for m in range(len(self._rows), n + 1):
                row = [0] * (m + 1)
                for j in range(1, m + 1):
                    row[j] = self._cell(m, j) if m - j + 1 <= L else None
                self._rows.append(row)

    def value(self, n, k):
        _check(n, k, self.args)
        if k > n:
            return 0
        self.ensure(n)
        return self._rows[n][k]

    def row(self, n):
        """``[B_{n,0}, ..., B_{n,n}]`` (requires ``len(args) >= n`` when n >= 1)."""
        if n >= 1 and len(self.args) < n:
            raise BellArgumentError(
                f"full row {n} needs at least {n} arguments, got {len(self.args)}"
            )
        self.ensure(n)
        return list(self._rows[n])


@lru_cache(maxsize=64)
def _table_for(args):
    return BellTable(args)


def bell_recurrence(n, k, args):
    """``B_{n,k}(args)`` by the triangular recurrence, memoized per argument list."""
    _check(n, k, args)
    if k > n:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    return _table_for(tuple(args)).value(n, k)


def bell_nested(n, k_plus_1, args):
    """``B_{n,K}(args)`` by the nested-sum formula with ``K = k_plus_1``.

    For ``K >= 2`` the sum runs over chains ``n > a_1 > ... > a_k >= 1``
    (``k = K - 1``), each term being ``C(n,a_1) C(a_1,a_2) ... C(a_{k-1},a_k)``
    times ``x_{n-a_1} x_{a_1-a_2} ... x_{a_{k-1}-a_k} x_{a_k}``; the total is
    divided exactly by ``K!``.
    """
    K = k_plus_1
    if K < 1 or K > n:
        raise ValueError(f"bell_nested needs 1 <= K <= n, got n={n}, K={K}")
    _check(n, K, args)
    if K == 1:
        return args[n - 1]
    k = K - 1
    x = args

    def walk(prev, depth, acc):
        # choose a_depth in [k - depth + 1, prev - 1]
        if depth > k:
            return acc * x[prev - 1]
        row = pascal_row(prev)
        total = 0
        for a in range(k - depth + 1, prev):
            xv = x[prev - a - 1]
            if xv:
                total += walk(a, depth + 1, acc * row[a] * xv)
        return total

    return exact_div(walk(n, 1, 1), factorial(K), f"bell_nested(n={n}, K={K})")


def _multiplicities(n, k, largest):
    """Partitions of ``n`` into exactly ``k`` parts each <= ``largest``.

    Yields dicts ``{part: multiplicity}``.
    """
    if k == 0:
        if n == 0:
            yield {}
        return
    for part in range(min(n - k + 1, largest), 0, -1):
        for c in range(1, k + 1):
            if c * part > n:
                break
            for rest in _multiplicities(n - c * part, k - c, part - 1):
                out = dict(rest)
                out[part] = c
                yield out


def _set_partition_count(n, mult):
    """Set partitions of an n-set with block-size multiplicities ``mult``.

    ``n! / prod(l_i! (i!)^l_i)`` as a product of binomials: pick the
    elements for all size-``i`` blocks, then split them into unordered
    blocks by always placing the smallest remaining element.
    """
    count = 1
    remaining = n
    for size, l in mult.items():
        pool = size * l
        count *= binomial(remaining, pool)
        remaining -= pool
        for t in range(l):
            count *= binomial(pool - t * size - 1, size - 1)
    return count


def bell_definition(n, k, args, cap=DEFINITION_CAP):
    """``B_{n,k}(args)`` straight from the defining multi-index sum (oracle).

    ``cap=None`` disables the size guard.
    """
    if cap is not None and n > cap:
        raise CapExceededError("bell_definition", n, cap)
    _check(n, k, args)
    if k > n:
        return 0
    total = 0
    for mult in _multiplicities(n, k, n):
        term = _set_partition_count(n, mult)
        for size, l in mult.items():
            term *= args[size - 1] ** l
        total += term
    return total
