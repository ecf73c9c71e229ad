"""Exception types shared across the package.

Everything deriving from :class:`Empty4Error` is a *domain* error: the CLI
maps these to exit code 1, while genuine usage errors (bad flags, malformed
command lines) exit 2.
"""


class Empty4Error(Exception):
    """Base class for all domain errors raised by this package."""


class SumNotZero(Empty4Error):
    """Tuple entries do not sum to 0 modulo the volume."""


class NotGenerator(Empty4Error):
    """Residues do not generate the cyclic group of order V."""


class NotAUnit(Empty4Error):
    """Multiplier is not invertible modulo V."""


class NoUnitEntry(Empty4Error):
    """Tuple has no entry coprime to V, so the unimodular-facet placement
    used by :func:`empty4.geometry.realize` does not apply."""


class Degenerate(Empty4Error):
    """Vertex set is affinely dependent (zero volume)."""


class NotEmpty(Empty4Error):
    """Operation requires an empty simplex."""


class NotHollow(Empty4Error):
    """Operation requires a hollow simplex."""


class IndexMismatch(Empty4Error):
    """Family index does not divide the requested volume."""


class InvalidParams(Empty4Error):
    """Family parameters violate the family's coprimality constraints."""


class VolumeTooLarge(Empty4Error):
    """Requested volume exceeds the configured cap for this operation."""


class CheckpointError(Empty4Error):
    """Checkpoint file is unreadable, corrupt, or belongs to a different
    search configuration."""


class InvariantViolation(Empty4Error):
    """Census content breaks a structural invariant (ordering, canonical
    form, emptiness, duplicates)."""


class NotCyclic(Empty4Error):
    """Vertex lattice quotient is not cyclic.

    Carries the invariant-factor profile (the factors > 1) so callers can
    report e.g. Z2 + Z2.
    """

    def __init__(self, invariant_factors):
        self.invariant_factors = tuple(invariant_factors)
        profile = " + ".join(f"Z{f}" for f in self.invariant_factors)
        super().__init__(f"quotient group is not cyclic: {profile}")


class ParseError(Empty4Error):
    """Malformed textual input. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
