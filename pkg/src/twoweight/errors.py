"""Exception types shared across the package."""


class TwoWeightError(Exception):
    """Base class for all package-specific errors."""


class NotPrimeError(TwoWeightError, ValueError):
    """The characteristic passed to a tower constructor is not prime."""


class TowerTooLargeError(TwoWeightError, ValueError):
    """r = p^(m0*k) exceeds the configured table cap."""


class BaseNotCoprimeError(TwoWeightError, ValueError):
    """Cyclotomic coset base shares a factor with the modulus."""


class BudgetExceededError(TwoWeightError, RuntimeError):
    """An enumeration would exceed the configured compute budget."""


class ZeroPairError(TwoWeightError, ValueError):
    """(a, b) = (0, 0) passed where a nonzero message pair is required."""


class NonconformingSpecError(TwoWeightError, ValueError):
    """An exact divisibility value fell outside its two-element target set."""


class PrincipalCharacterError(TwoWeightError, ValueError):
    """s = 0 mod v*delta selects the principal character."""


class DegenerateTowerError(TwoWeightError, ValueError):
    """k < 2: the quotient group F_r*/F_q* degenerates."""


class NotCoprimeError(TwoWeightError, ValueError):
    """Exponent shares a factor with the group order delta."""


class NotPowerCongruentError(TwoWeightError, ValueError):
    """w is not congruent to p^j mod delta for the claimed j."""


class DivisibleByRMinusOneError(TwoWeightError, ValueError):
    """Digit-sum input is divisible by r - 1 (no least positive residue)."""


class PreconditionViolatedError(TwoWeightError, ValueError):
    """A checker's hard precondition fails; carries the violated clause."""

    def __init__(self, clause: str):
        super().__init__(clause)
        self.clause = clause
