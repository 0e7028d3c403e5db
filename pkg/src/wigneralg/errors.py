"""Exception types shared across the package."""

from __future__ import annotations


class NegativeRadicandError(ValueError):
    """A radicand evaluated to a negative number at the requested nu."""


class DimensionMismatchError(ValueError):
    """Two operators do not act on the same labeled space."""


class InvalidDimensionError(ValueError):
    """A truncated Fock space needs dimension >= 2."""


class InvalidSpinError(ValueError):
    """Spin representations need 2j >= 1."""


class DimensionTooSmallError(ValueError):
    """The ambient two-mode space cannot hold the requested spin block."""


class NonInvariantSubspaceError(RuntimeError):
    """A composite operator leaked out of the fixed-2j block (internal consistency failure)."""


class OddTwoJNotClosedError(ValueError):
    """The single-mode square-root realization does not close on a (2j+1)-dim space for odd 2j.

    Carries the leakage amplitude by which J- maps the bottom-weight state
    out of the space.
    """

    def __init__(self, two_j: int, leakage) -> None:
        self.two_j = two_j
        self.leakage = leakage
        super().__init__(
            f"two_j={two_j} is odd: J- maps |2j> outside the (2j+1)-dim space "
            f"with amplitude {leakage}"
        )
