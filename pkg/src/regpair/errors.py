"""Exception types raised by regpair."""


class RegpairError(Exception):
    """Base class for every error raised by this package."""


class NearZeroSymbol(RegpairError):
    """A symbol that must be nowhere vanishing comes within ``vanish_tol`` of zero."""


class AliasedArgument(RegpairError):
    """Consecutive samples differ in argument by at least pi/2; the grid is too coarse."""


class UnderResolved(RegpairError):
    """The Nyquist (or band-edge) Fourier coefficient is too large to trust the samples."""


class GridMismatch(RegpairError):
    """Binary operation between circle functions sampled on different grids."""


class ParseError(RegpairError):
    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class DivisorCollision(RegpairError):
    def __init__(self, points, distance):
        self.points = tuple(points)
        self.distance = distance
        listed = ", ".join(f"{p:.6g}" for p in self.points)
        super().__init__(f"loop passes within {distance:.3g} of divisor point(s) {listed}")


class NotDiffeomorphism(RegpairError):
    """A reparameterization whose derivative is not strictly positive."""


class RootOnContour(RegpairError):
    """A polynomial has a root on the unit circle."""


class SingularTruncation(RegpairError):
    """An LU pivot of a truncated operator fell below the singularity threshold."""


class PaddingTooSmall(RegpairError):
    """The internal dimension does not leave enough room for edge corruption."""
