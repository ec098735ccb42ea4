"""Exception hierarchy shared by every module of the package."""


class ParalieError(ValueError):
    """Base class for all errors raised by paralie."""


class JacobiError(ParalieError):
    """Structure constants do not satisfy the Jacobi identity."""

    def __init__(self, residual):
        self.residual = residual
        super().__init__(
            "Jacobi identity violated on triple (E0,E1,E2): residual "
            + "(" + ", ".join(str(c) for c in residual) + ")"
        )


class DegenerateDenominatorError(ParalieError):
    """A denominator of the Jacobi completion formula vanishes."""

    def __init__(self, names):
        self.names = tuple(names)
        super().__init__("degenerate denominator: " + ", ".join(self.names) + " = 0")


class ParameterError(ParalieError):
    """Missing, unexpected, or malformed family parameters."""


class SymmetryError(ParalieError):
    """A tensor lacks the symmetries required by the operation."""


class ClassificationError(ParalieError):
    """The fundamental tensor is not reproduced by its class components."""
