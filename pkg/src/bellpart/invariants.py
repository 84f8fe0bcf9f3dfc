"""Named invariant checks driven by ``bellpart verify``.

Each check takes a size bound and returns ``None`` on success or a short
failure description. Bounds passed in by the CLI are ``min(default, max_n)``.
"""

import random
from dataclasses import dataclass

from . import bell, partition, pentagonal
from ._combinat import binomial, factorial
from .errors import ExactnessError


@dataclass
class Outcome:
    name: str
    passed: bool
    detail: str = ""


def stirling2_by_enumeration(n, k):
    """S(n, k) by walking every restricted growth string of length n."""
    if n == 0:
        return 1 if k == 0 else 0
    count = 0

    def grow(i, blocks):
        nonlocal count
        if blocks > k or blocks + (n - i) < k:
            return
        if i == n:
            count += 1
            return
        for b in range(blocks + 1):
            grow(i + 1, max(blocks, b + 1))

    grow(1, 1)
    return count


def check_p1(bound):
    pent = set()
    j = 0
    while j * (3 * j - 1) // 2 <= bound:
        pent.add(j * (3 * j - 1) // 2)
        pent.add(j * (3 * j + 1) // 2)
        j += 1
    for m in range(bound + 1):
        if (pentagonal.theta_coeff(m) != 0) != (m in pent):
            return f"m={m}"


def check_p2(bound):
    for m in range(bound + 1):
        first, second = pentagonal._pentagonal_cases(m)
        if first is not None and second is not None:
            return f"both cases fire at m={m}"


def check_p3(bound):
    for r in range(min(bound, 10) + 1):
        for N in (0, bound):
            if pentagonal.euler_power_series(r, N)[0] != 1:
                return f"r={r}, N={N}"


def check_p4(bound):
    N = min(bound, 100)
    e = pentagonal.euler_series(N)
    prev = pentagonal.euler_power_series(0, N)
    for r in range(1, min(bound, 10) + 1):
        cur = pentagonal.euler_power_series(r, N)
        if cur != pentagonal.convolve(prev, e, N):
            return f"r={r}"
        prev = cur


def check_b1(bound, vectors=20, seed=0):
    rng = random.Random(seed)
    nmax = min(bound, 12)
    for _ in range(vectors):
        x = [rng.randint(-9, 9) for _ in range(max(nmax, 1))]
        for n in range(nmax + 1):
            for k in range(n + 1):
                a = bell.bell_recurrence(n, k, x)
                c = bell.bell_definition(n, k, x)
                b = bell.bell_nested(n, k, x) if k >= 1 else a
                if not a == b == c:
                    return f"n={n}, k={k}, x={x}: rec={a} nested={b} def={c}"


def check_b2(bound):
    nmax = min(bound, 10)
    ones = [1] * max(nmax, 1)
    for n in range(nmax + 1):
        for k in range(n + 1):
            if bell.bell_recurrence(n, k, ones) != stirling2_by_enumeration(n, k):
                return f"n={n}, k={k}"


def check_b3(bound, seed=1):
    rng = random.Random(seed)
    nmax = min(bound, 10)
    x = [rng.randint(-9, 9) for _ in range(max(nmax, 1))]
    for c in (-2, 3):
        cx = [c * v for v in x]
        for n in range(nmax + 1):
            for k in range(n + 1):
                if bell.bell_recurrence(n, k, cx) != c**k * bell.bell_recurrence(n, k, x):
                    return f"c={c}, n={n}, k={k}"


def check_b4(bound, seed=2):
    rng = random.Random(seed)
    nmax = min(bound, 12)
    lam = pentagonal.lambda_args(max(nmax, 1))
    vectors = [lam] + [[rng.randint(-9, 9) for _ in range(max(nmax, 1))] for _ in range(5)]
    try:
        for x in vectors:
            for n in range(1, nmax + 1):
                for K in range(1, n + 1):
                    bell.bell_nested(n, K, x)
    except ExactnessError as exc:
        return str(exc)


def check_b5(bound):
    nmax = min(bound, 40)
    lam = pentagonal.lambda_args(max(nmax, 1))
    e_minus_1 = pentagonal.euler_series(nmax)
    e_minus_1[0] = 0
    power = [1] + [0] * nmax
    for k in range(min(bound, 8) + 1):
        # n! * [q^n](E-1)^k == k! * B_{n,k}(lambda)
        for n in range(k, nmax + 1):
            if factorial(n) * power[n] != factorial(k) * bell.bell_recurrence(n, k, lam):
                return f"n={n}, k={k}"
        power = pentagonal.convolve(power, e_minus_1, nmax)


def check_i1(bound):
    nmax = min(bound, 100)
    oracle = partition.partition_numbers(nmax)
    for n in range(nmax + 1):
        got = {
            "bell": partition.p_bell(n),
            "corollary": partition.p_corollary(n),
            "euler": oracle[n],
        }
        if n <= partition.THETA_CAP:
            if n >= 1:
                got["theta"] = partition.p_theta(n)
            got["naive"] = partition.p_naive(n)
        if len(set(got.values())) != 1:
            return f"n={n}: {got}"


def check_i2(bound):
    nmax = min(bound, 100)
    table = partition.lambda_table(nmax)
    for n in range(nmax + 1):
        row = table.row(n)
        total = sum((-1) ** k * factorial(k) * row[k] for k in range(n + 1))
        if total % factorial(n):
            return f"n={n}"


def check_i3(bound):
    nmax = min(bound, 200)
    p = partition.partition_numbers(nmax)
    for n in range(nmax + 1):
        s = sum(pentagonal.theta_coeff(m) * p[n - m] for m in range(n + 1))
        if s != (1 if n == 0 else 0):
            return f"n={n}: sum={s}"


def check_i4(bound):
    nmax = min(bound, 40)
    for l in range(min(bound, 8) + 1):
        series = pentagonal.euler_power_series(l, nmax)
        for n in range(nmax + 1):
            if partition.pr_bell(l, n) != series[n]:
                return f"l={l}, n={n}"


def check_i5(bound):
    nmax = min(bound, 60)
    lam = pentagonal.lambda_args(max(nmax, 1))
    p = partition.partition_numbers(nmax)
    for n in range(nmax + 1):
        f = [(-1) ** k * factorial(k) for k in range(n + 1)]
        if partition.faa_at_zero(n, f, lam) != factorial(n) * p[n]:
            return f"theorem specialization, n={n}"
    for l in range(min(bound, 5) + 1):
        for n in range(min(bound, 30) + 1):
            f = [binomial(l, k) * factorial(k) for k in range(n + 1)]
            if partition.faa_at_zero(n, f, lam) != factorial(n) * partition.pr_bell(l, n):
                return f"power specialization, l={l}, n={n}"


def check_i6(bound):
    nmax = min(bound, 40)
    lam = pentagonal.lambda_args(max(nmax, 1))
    for n in range(nmax + 1):
        for k in range(n + 1):
            if partition.bell_from_powers(n, k) != bell.bell_recurrence(n, k, lam):
                return f"n={n}, k={k}"


def check_i7(bound):
    for n in range(min(bound, 50) + 1):
        for r in range(n + 1):
            if sum(binomial(k, r) for k in range(r, n + 1)) != binomial(n + 1, r + 1):
                return f"r={r}, n={n}"


CHECKS = {
    "P-1": (check_p1, 10**6),
    "P-2": (check_p2, 10**5),
    "P-3": (check_p3, 100),
    "P-4": (check_p4, 100),
    "B-1": (check_b1, 12),
    "B-2": (check_b2, 10),
    "B-3": (check_b3, 10),
    "B-4": (check_b4, 12),
    "B-5": (check_b5, 40),
    "I-1": (check_i1, 100),
    "I-2": (check_i2, 100),
    "I-3": (check_i3, 200),
    "I-4": (check_i4, 40),
    "I-5": (check_i5, 60),
    "I-6": (check_i6, 40),
    "I-7": (check_i7, 50),
}


def run_all(max_n):
    """Run every check at ``min(default bound, max_n)``."""
    outcomes = []
    for name, (check, default) in CHECKS.items():
        try:
            detail = check(min(default, max_n))
        except Exception as exc:  # a crash is a failure of that invariant
            detail = f"{type(exc).__name__}: {exc}"
        outcomes.append(Outcome(name, detail is None, detail or ""))
    return outcomes
