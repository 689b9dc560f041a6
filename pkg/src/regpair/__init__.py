"""Regulator pairings of Steinberg symbols on the circle.

Three independent evaluations of the pairing ``R{p, q}`` of two
nowhere-vanishing circle functions: a closed form in Fourier coefficients,
a monodromy contour integral, and a Fredholm determinant of truncated
Toeplitz block operators.
"""

from .circle import (
    CircleFunction,
    LogDecomposition,
    continuous_log,
    fourier_coefficients,
    periodic_integral,
    spectral_derivative,
    winding_number,
    z_power,
)
from .errors import (
    AliasedArgument,
    DivisorCollision,
    GridMismatch,
    NearZeroSymbol,
    NotDiffeomorphism,
    PaddingTooSmall,
    ParseError,
    RegpairError,
    RootOnContour,
    SingularTruncation,
    UnderResolved,
)
from .loops import Diffeomorphism, Loop, compose, deform, reparameterize
from .parser import parse_fourier, parse_loop, parse_rational
from .rational import Divisor, RationalFunction, divisor, order_at, tame_symbol
from .regulator import (
    RegulatorValue,
    beilinson_pairing,
    mahler_measure,
    real_regulator,
    regulator_fourier,
    regulator_integral,
)
from .toeplitz import (
    BlockOperator,
    DeterminantResult,
    commutator_determinant,
    grothendieck_det,
    h_block,
    helton_howe_value,
    hs_commutator_norm_sq,
    j_block,
    steinberg_operator_determinant,
    toeplitz_matrix,
)

__version__ = "0.1.0"
