"""
Numerical and formatting constants for the mixed tilt stability toolkit

This module centralizes all constants to eliminate magic numbers and
keep the document formats in one place.
"""

from fractions import Fraction

# ============================================================================
# RATIONAL CONSTANTS
# ============================================================================

HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)
TWELFTH = Fraction(1, 12)

# ============================================================================
# CONTRACTED CLASS LAYOUT
# ============================================================================

# (ch0, H^2.ch1, HF.ch1, H.ch2, F.ch2, ch3)
COMPONENT_NAMES = ("ch0", "h2_ch1", "hf_ch1", "h_ch2", "f_ch2", "ch3")

# Denominators of the integral lattice Z + Z + Z + 1/2 Z + 1/2 Z + 1/6 Z
LATTICE_DENOMINATORS = (1, 1, 1, 2, 2, 6)

# ============================================================================
# GEOMETRY KINDS
# ============================================================================

KIND_PROJECTIVE_BUNDLE = "projective_bundle"
KIND_GENERIC = "generic"

# ============================================================================
# SLOPES, CHARGES AND WALLS
# ============================================================================

PLUS_INFINITY_TOKEN = "+inf"

SLOPE_MU_HF = "mu_hf"
SLOPE_MU_C = "mu_c"
SLOPE_NU_RELATIVE = "nu_relative"
SLOPE_NU_MIXED = "nu_mixed"
SLOPE_NAMES = (SLOPE_MU_HF, SLOPE_MU_C, SLOPE_NU_RELATIVE, SLOPE_NU_MIXED)

# --kind values of the charge and slope commands
CHARGE_KIND_RELATIVE = "relative"
CHARGE_KIND_MIXED = "mixed"
CHARGE_KIND_BASE = "base"
CHARGE_KIND_BASE_TORSION = "base-torsion"
CHARGE_KINDS = (CHARGE_KIND_RELATIVE, CHARGE_KIND_MIXED, CHARGE_KIND_BASE, CHARGE_KIND_BASE_TORSION)

WALL_DIRECTION_BELOW = "below"
WALL_DIRECTION_ABOVE = "above"
WALL_DIRECTIONS = (WALL_DIRECTION_BELOW, WALL_DIRECTION_ABOVE)

# ============================================================================
# CONJECTURE COEFFICIENT SOURCES
# ============================================================================

COEFFS_SOURCE_CONJECTURE = "conjecture"
COEFFS_SOURCE_RIEMANN_ROCH = "riemann_roch"

# ============================================================================
# DEFAULTS
# ============================================================================

DEFAULT_SEED = 20240229
DEFAULT_SAMPLES = 1000
DEFAULT_MAX_NUMERATOR = 12
DEFAULT_MAX_DENOMINATOR = 6
DEFAULT_ENUMERATION_MAX_ABS = "1"
DEFAULT_SCAN_PRECISION = 6
DEFAULT_T0 = "0"
DEFAULT_SLOW_CALL_SECONDS = 1.0
DEFAULT_LOG_LEVEL = "WARNING"

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# CLI exit codes
EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2
