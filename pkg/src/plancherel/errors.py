"""Exception hierarchy shared by all modules."""


class SpectralError(Exception):
    """Base class for every error raised by this package."""


class GridMismatch(SpectralError, ValueError):
    pass


class ResolutionError(SpectralError, ValueError):
    """A grid is too coarse or too narrow for the requested object."""


class PoleError(SpectralError, ValueError):
    """Argument lies within the pole-proximity threshold of a Gamma pole."""

    def __init__(self, message, pole_index):
        super().__init__(message)
        self.pole_index = pole_index


class DomainError(SpectralError, ValueError):
    pass


class TailError(SpectralError, ValueError):
    """Samples have not decayed at the ends of their grid."""

    def __init__(self, message, tail_mass):
        super().__init__(message)
        self.tail_mass = tail_mass


class ParityError(SpectralError, ValueError):
    pass


class WeightError(SpectralError, ValueError):
    pass


class NotEigenfunctionError(SpectralError, ValueError):
    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual
