"""Exception hierarchy and warnings shared across the package."""


class PoleBoundsError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PoleBoundsError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SphereArithmeticError(PoleBoundsError, ArithmeticError):
    """An undefined Riemann-sphere form was requested (0/0, inf - inf, 0 * inf)."""


class DegenerateMapError(PoleBoundsError, ValueError):
    """Moebius coefficients satisfy ad - bc = 0."""


class DegenerateGeometryError(PoleBoundsError):
    """A geometric configuration is tangential or otherwise ill-posed."""


class HypothesisViolationError(PoleBoundsError):
    """A standing hypothesis of a verification routine does not hold."""


class PoleProximityError(PoleBoundsError):
    """A curve passes too close to the pole of the map being integrated."""


class QuadratureError(PoleBoundsError):
    """Adaptive quadrature failed to converge within the depth limit."""


class MinimizationError(PoleBoundsError):
    """The one-dimensional minimizer could not certify an interior minimum."""


class UnsupportedDomainError(PoleBoundsError, ValueError):
    """The requested domain is not one of the exactly-computable test domains."""


class NumericalConditionWarning(UserWarning):
    """Emitted when an evaluation enters a badly conditioned regime."""
