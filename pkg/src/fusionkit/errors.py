"""Exceptions raised when computed data fails a consistency requirement."""


class FusionKitError(Exception):
    pass


class IntegralityViolation(FusionKitError):
    """A quantity that must be a non-negative integer is not one.

    ``entry`` is the offending index tuple, ``deviation`` the distance to the
    nearest admissible integer (or the value itself when it rounds negative).
    """

    def __init__(self, entry, deviation, value=None):
        self.entry = entry
        self.deviation = deviation
        self.value = value
        super().__init__(f"entry {entry} deviates from a non-negative integer by "
                         f"{deviation:.3g} (value {value})")


class DegenerateGaussSum(FusionKitError):
    def __init__(self, modulus, expected):
        self.modulus = modulus
        self.expected = expected
        super().__init__(f"|a| = {modulus!r} but sqrt(sum d^2) = {expected!r}")


class LengthMismatch(FusionKitError, ValueError):
    pass


class NoSolution(FusionKitError):
    pass


class NotPositiveDefinite(FusionKitError):
    pass


class NotADE(FusionKitError):
    pass


class EigenvalueMismatch(FusionKitError):
    pass


class SpectrumMismatch(FusionKitError):
    pass


class DegenerateSpectrum(FusionKitError):
    pass
