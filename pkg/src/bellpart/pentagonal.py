"""Euler's pentagonal number theorem.

The product ``E(q) = prod_{j>=1} (1 - q^j)`` has coefficients ``theta_m``
in {-1, 0, +1}: nonzero exactly at the generalized pentagonal numbers
``j(3j-1)/2`` and ``j(3j+1)/2``, with sign ``(-1)^j``. Series here are
plain lists of ints truncated at ``q^N``.
"""

from math import isqrt

from ._combinat import factorial


def _pentagonal_cases(m):
    """Which of the two integrality cases fires for ``m``.

    Returns ``(first, second)`` where each is the exponent ``e`` of
    ``(-1)^e`` or ``None``. ``first`` is ``(1 + sqrt(24m+1)) / 6``,
    ``second`` is ``(1 - sqrt(24m+1)) / 6``.
    """
    d = 24 * m + 1
    s = isqrt(d)
    if s * s != d:
        return None, None
    first = (1 + s) // 6 if (1 + s) % 6 == 0 else None
    second = (1 - s) // 6 if (1 - s) % 6 == 0 else None
    return first, second


def theta_coeff(m):
    """Coefficient of ``q^m`` in ``E(q)``; exact integer test, no floats."""
    if m < 0:
        raise ValueError(f"theta_coeff needs m >= 0, got {m}")
    first, second = _pentagonal_cases(m)
    e = first if first is not None else second
    if e is None:
        return 0
    return -1 if abs(e) % 2 else 1


def lambda_coeff(m):
    """m-th derivative of ``E`` at 0, i.e. ``theta_m * m!``."""
    if m < 1:
        raise ValueError(f"lambda_coeff needs m >= 1, got {m}")
    t = theta_coeff(m)
    return t * factorial(m) if t else 0


def lambda_args(n):
    """``[lambda_1, ..., lambda_n]`` as a dense argument list."""
    return [lambda_coeff(m) for m in range(1, n + 1)]


def euler_series(N):
    if N < 0:
        raise ValueError(f"truncation bound must be >= 0, got {N}")
    return [theta_coeff(m) for m in range(N + 1)]


def convolve(a, b, N=None):
    """Product of two series truncated at ``q^N`` (schoolbook)."""
    if N is None:
        N = min(len(a), len(b)) - 1
    out = [0] * (N + 1)
    for i, ai in enumerate(a[: N + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: N + 1 - i]):
            out[i + j] += ai * bj
    return out


def iter_euler_powers(N):
    """Yield ``E(q)^0, E(q)^1, ...`` truncated at ``q^N``, forever."""
    e = euler_series(N)
    cur = [1] + [0] * N
    while True:
        yield cur
        cur = convolve(cur, e, N)


def euler_power_series(r, N):
    """Coefficients ``p_r(0..N)`` of ``E(q)^r`` by repeated convolution."""
    if r < 0 or N < 0:
        raise ValueError(f"need r >= 0 and N >= 0, got r={r}, N={N}")
    for i, s in enumerate(iter_euler_powers(N)):
        if i == r:
            return s
