"""Exception types shared across the package."""


class DpcoverError(Exception):
    """Base class for all library errors."""


class DuplicateVertexError(DpcoverError):
    """A partial map was given two entries for the same vertex."""


class DuplicateMapError(DpcoverError):
    """A family was given the same partial map twice; duplicates are rejected, not merged."""


class OutOfUniverseError(DpcoverError):
    """A map or vertex set mentions a vertex outside the coloring's universe."""


class UniverseOverlapError(DpcoverError):
    """Two families that must live on disjoint vertex sets share a vertex."""


class NotUnaryError(DpcoverError):
    """An operation requiring pairwise-distinct domains got a family with a repeated domain."""


class OverlappingTriplesError(DpcoverError):
    """Source and destination triples of a copy gadget share a vertex."""


class PartnerCollisionError(DpcoverError):
    """Uniformization would assign a vertex that the map already constrains."""


class OddRError(DpcoverError):
    """Construction is defined for even uniformity only."""


class EmptyMapPresentError(DpcoverError):
    """CNF export is undefined for families containing the empty map."""


class UniverseTooLargeError(DpcoverError):
    """Exhaustive enumeration refused: the universe exceeds the configured limit."""


class SearchSpaceTooLargeError(DpcoverError):
    """Minimality search refused: the candidate space exceeds the guard."""
