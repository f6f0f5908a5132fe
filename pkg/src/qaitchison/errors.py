"""Exception types raised across the package."""

import numpy as np


class DimensionMismatchError(ValueError):
    pass


class NotHermitianError(ValueError):
    pass


class NotPositiveDefiniteError(ValueError):
    pass


class TraceError(ValueError):
    """A density state whose trace is not one within tolerance."""


class NotUnitaryError(ValueError):
    pass


class InvalidLabelError(ValueError):
    pass


class OutsideBallError(ValueError):
    """A Bloch vector on or outside the unit sphere."""


class ExpRangeError(OverflowError):
    """A matrix exponential whose spectrum leaves the double-precision range."""


class ConvergenceError(np.linalg.LinAlgError):
    pass
