"""
Custom exceptions for the mixed tilt stability toolkit

Every exception carries an ``error_name`` which the command line front end
reports verbatim in its machine-readable error documents.
"""


class ToolkitError(Exception):
    """Base exception for all toolkit errors"""
    error_name = "toolkit-error"


class ValidationError(ToolkitError):
    """Raised when input validation fails"""
    error_name = "validation-error"


class ParseError(ValidationError):
    """Raised when a rational number token cannot be parsed"""
    error_name = "parse-error"

    def __init__(self, token: str, reason: str = "not a rational number"):
        self.token = token
        super().__init__(f"cannot parse {token!r}: {reason}")


class ConfigurationError(ToolkitError):
    """Raised when configuration is invalid or missing"""
    error_name = "configuration-error"


class DataError(ToolkitError):
    """Raised when a geometry, class or lattice document is malformed"""
    error_name = "data-error"


class LatticeError(DataError):
    """Raised when a subobject lattice violates its structural invariants"""
    error_name = "invalid-lattice"


class GeometryError(ToolkitError):
    """Base class for geometry failures"""
    error_name = "geometry-error"


class UnsupportedGeometryError(GeometryError):
    """Raised when an operation needs the full Chow ring of a projective bundle"""
    error_name = "unsupported-geometry"


class StabilityError(ToolkitError):
    """Base class for failures of slope, wall and coefficient computations"""
    error_name = "stability-error"


class InconsistentHintError(StabilityError):
    """Raised when a C-torsion hint contradicts the class data"""
    error_name = "inconsistent-hint"


class NotAFiltrationError(StabilityError):
    """Raised when a lattice admits no strictly decreasing filtration"""
    error_name = "not-a-filtration"


class EmptyAmbientError(StabilityError):
    """Raised when a class has no room for destabilizing subclasses"""
    error_name = "empty-ambient"


class ThresholdError(StabilityError):
    """Raised when the t-stability threshold is undefined"""
    error_name = "undefined-threshold"


class InconsistentIdentityError(StabilityError):
    """Raised when the Riemann-Roch coefficient system has no exact solution"""
    error_name = "inconsistent-identity"


class InvalidCoefficientsError(StabilityError):
    """Raised when conjecture coefficients violate a1 > 0"""
    error_name = "invalid-coefficients"


class PoleError(StabilityError):
    """Raised when a closed-form slope is evaluated at its pole"""
    error_name = "pole-at-beta"
