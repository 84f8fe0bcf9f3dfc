class CapExceededError(ValueError):
    """An oracle or exponential-cost method was asked for n above its cap."""

    def __init__(self, what, n, cap):
        super().__init__(
            f"{what}: n={n} exceeds cap {cap} (use --unsafe-cap or "
            f"BELLPART_CAP_OVERRIDE to lift it)"
        )
        self.n = n
        self.cap = cap


class ExactnessError(ArithmeticError):
    """An exact integer division left a nonzero remainder (internal bug)."""


class BellArgumentError(ValueError):
    """Argument list too short for the requested partial Bell polynomial."""


def exact_div(num, den, context=""):
    q, r = divmod(num, den)
    if r:
        raise ExactnessError(f"{context}: {den} does not divide {num} (remainder {r})")
    return q
