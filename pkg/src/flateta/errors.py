"""Exception hierarchy shared across the package.

Library code raises these instead of bare ValueError so the CLI can map
each failure class onto its exit code (usage 1, domain/validation 2,
obstruction 3).
"""

from __future__ import annotations


class FlatEtaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(FlatEtaError, ValueError):
    """Input is outside the mathematical domain of the operation."""


class ValidationError(DomainError):
    """A Seifert datum violates a structural invariant.

    The message names the offending field.
    """


class PoleError(DomainError):
    """Cotangent requested at a pole (angle an integer multiple of pi)."""


class NotFlatError(DomainError):
    """Seifert data does not describe a flat manifold (e != 0 or chi_orb != 0)."""


class CertificationError(FlatEtaError, ArithmeticError):
    """A cyclotomic element expected to be rational is not.

    Carries the index of the first offending coefficient in the reduced
    representation.
    """

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class ObstructionError(FlatEtaError):
    """A signature prediction was requested but the eta-invariant is not
    an integer, so no geometric filler exists."""


class NoLatticePointError(DomainError):
    """No integer Euler characteristic matches the volume within tolerance."""


class AmbiguousToleranceError(DomainError):
    """Tolerance admits more than one integer Euler characteristic."""


class DescriptorSyntaxError(FlatEtaError, ValueError):
    """Seifert descriptor text does not match the grammar.

    ``offset`` is the byte offset of the first unusable character.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class UsageError(FlatEtaError):
    """Command line could not be parsed."""
