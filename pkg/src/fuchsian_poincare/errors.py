"""Exception hierarchy shared by all modules."""


class FuchsianError(Exception):
    """Base class for every error raised by this package."""


class DenominatorVanishesAtZero(FuchsianError, ZeroDivisionError):
    pass


class OrderMismatch(FuchsianError, ValueError):
    pass


class DimensionMismatch(FuchsianError, ValueError):
    pass


class InvalidLattice(FuchsianError, ValueError):
    pass


class NotARoot(FuchsianError, ValueError):
    pass


class NotIsotropic(FuchsianError, ValueError):
    pass


class NotOrthogonal(FuchsianError, ValueError):
    pass


class NotAnIsometry(FuchsianError, ValueError):
    pass


class LatticeMismatch(FuchsianError, ValueError):
    pass


class NotUnimodular(FuchsianError, ValueError):
    pass


class InvalidBasis(FuchsianError, ValueError):
    pass


class InvalidAlpha(FuchsianError, ValueError):
    pass


class ValidationFailed(FuchsianError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InternalCheckFailed(FuchsianError, AssertionError):
    """An identity that must hold by construction did not."""


class RiemannRochRegimeViolated(InternalCheckFailed):
    pass


class NonIntegralCoefficient(InternalCheckFailed):
    pass


class NegativeCoefficient(InternalCheckFailed):
    pass
