"""
Projective bundles P(E) over a curve

Riemann-Roch coefficients of the ch3 inequality, the conjecture margin, the
parameter region where O(H) and O(K_X + H)[1] sit on opposite sides of
slope zero, and the charge z_l built from the conjecture coefficients.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

import sympy

from ..core.chern import ContractedClass, euler_char, tensor_contracted, twist
from ..core.constants import (
    COEFFS_SOURCE_CONJECTURE, COEFFS_SOURCE_RIEMANN_ROCH, HALF,
)
from ..core.exceptions import InconsistentIdentityError, InvalidCoefficientsError, PoleError
from ..core.geometry import (
    ChernContractions, DivisorClass, FibredGeometry, canonical_class, chern_contractions,
    new_projective_bundle, require_projective_bundle,
)
from ..core.logger import logger, log_function_call
from ..core.rationals import ChargeValue, RationalLike
from ..core.validators import Validator
from .tilt import TiltParams

__all__ = [
    "BmtCoefficients", "ChernContractions", "ConjectureCoefficients", "PositivityReport",
    "RegionReport", "bmt_coefficients", "canonical_class", "chern_contractions",
    "conjecture_margin", "corollary_window_check", "oh_positivity_threshold",
    "positivity_sign_check", "region_check", "region_threshold", "slope_of_OH",
    "slope_of_shifted_canonical_twist", "z_l",
]

MINUS_H = DivisorClass(-1, 0)


@dataclass(frozen=True)
class BmtCoefficients:
    """
    a0, a1, a2 with, for every class v,

        chi(v(-H)) = ch3^b + (b + 1/2) H.ch2^b + b(b+1)/2 H^2.ch1^b
                     - a2 F.ch2^b - a1 HF.ch1^b - a0 ch0
    """
    beta: Fraction
    a0: Fraction
    a1: Fraction
    a2: Fraction

    def rhs(self, v: ContractedClass, geom: FibredGeometry) -> Fraction:
        tw = twist(v, self.beta, geom)
        b = self.beta
        return (tw.ch3b + (b + HALF) * tw.h_ch2b + b * (b + 1) * HALF * tw.h2_ch1b
                - self.a2 * tw.f_ch2b - self.a1 * tw.hf_ch1b - self.a0 * tw.ch0)

    def to_json(self) -> Dict[str, str]:
        return {"beta": str(self.beta), "a0": str(self.a0), "a1": str(self.a1), "a2": str(self.a2)}


def _to_fraction(value) -> Fraction:
    if not value.is_Rational:
        raise InconsistentIdentityError(f"non-rational solution component {value}")
    return Fraction(int(value.p), int(value.q))


@lru_cache(maxsize=256)
def _solve_coefficients(beta: Fraction, genus: int, deg_e: int) -> Tuple[Fraction, Fraction, Fraction]:
    geom = new_projective_bundle(genus, deg_e)
    b = beta
    rows = []
    targets = []
    for i in range(6):
        basis = ContractedClass(*(1 if j == i else 0 for j in range(6)))
        chi = euler_char(tensor_contracted(basis, MINUS_H, geom), geom)
        tw = twist(basis, b, geom)
        known = tw.ch3b + (b + HALF) * tw.h_ch2b + b * (b + 1) * HALF * tw.h2_ch1b
        # unknowns (a0, a1, a2) enter as -a0 ch0 - a1 HF.ch1^b - a2 F.ch2^b
        rows.append([-sympy.Rational(tw.ch0.numerator, tw.ch0.denominator),
                     -sympy.Rational(tw.hf_ch1b.numerator, tw.hf_ch1b.denominator),
                     -sympy.Rational(tw.f_ch2b.numerator, tw.f_ch2b.denominator)])
        residual = chi - known
        targets.append(sympy.Rational(residual.numerator, residual.denominator))

    matrix = sympy.Matrix(rows)
    rhs = sympy.Matrix(targets)
    try:
        solution, free = matrix.gauss_jordan_solve(rhs)
    except ValueError as e:
        raise InconsistentIdentityError(
            f"no exact (a0, a1, a2) at beta={beta}, g={genus}, e={deg_e}: {e}"
        ) from e
    if free.shape[0] != 0:
        raise InconsistentIdentityError(
            f"(a0, a1, a2) not determined at beta={beta}, g={genus}, e={deg_e}"
        )
    a0, a1, a2 = (_to_fraction(solution[k]) for k in range(3))
    return a0, a1, a2


@log_function_call
def bmt_coefficients(beta: RationalLike, geom: FibredGeometry,
                     alpha_sq: Optional[RationalLike] = None) -> BmtCoefficients:
    """
    Solve for (a0, a1, a2) from Riemann-Roch on the six basis classes.

    ``alpha_sq`` is accepted and ignored: the coefficients do not depend on it.
    """
    require_projective_bundle(geom, "bmt_coefficients")
    beta = Validator.validate_rational(beta, "beta")
    if alpha_sq is not None:
        logger.debug(f"bmt_coefficients ignores alpha_sq={alpha_sq}")
    a0, a1, a2 = _solve_coefficients(beta, geom.base_genus, geom.deg_e)
    return BmtCoefficients(beta, a0, a1, a2)


@dataclass(frozen=True)
class ConjectureCoefficients:
    """
    (a1, b1, a2, b2, c) of the bound
    ch3^b <= (a1 H^2 + b1 HF) ch1^b + (a2 H + b2 F) ch2^b + c ch0.

    ``source`` is ``conjecture`` for free coefficients, which need a1 > 0, or
    ``riemann_roch`` for the P(E) specialization built by ``from_riemann_roch``.
    """
    a1: Fraction
    b1: Fraction
    a2: Fraction
    b2: Fraction
    c: Fraction
    source: str = COEFFS_SOURCE_CONJECTURE

    def __post_init__(self):
        for name in ("a1", "b1", "a2", "b2", "c"):
            object.__setattr__(self, name, Validator.validate_rational(getattr(self, name), name))
        Validator.validate_choice(
            self.source, (COEFFS_SOURCE_CONJECTURE, COEFFS_SOURCE_RIEMANN_ROCH), "source"
        )

    def validate(self) -> 'ConjectureCoefficients':
        if self.a1 > 0:
            return self
        if self.source == COEFFS_SOURCE_CONJECTURE:
            raise InvalidCoefficientsError(f"a1 must be positive, got {self.a1}")
        logger.warning(f"H^2.ch1 coefficient {self.a1} <= 0: beta is outside the window -1 < beta < 0")
        return self

    @classmethod
    def from_riemann_roch(cls, beta: RationalLike, geom: FibredGeometry) -> 'ConjectureCoefficients':
        """(-b(b+1)/2, a1, -(b + 1/2), a2, a0) from ``bmt_coefficients``"""
        coeffs = bmt_coefficients(beta, geom)
        b = coeffs.beta
        return cls(
            a1=-b * (b + 1) * HALF,
            b1=coeffs.a1,
            a2=-(b + HALF),
            b2=coeffs.a2,
            c=coeffs.a0,
            source=COEFFS_SOURCE_RIEMANN_ROCH,
        )

    def to_json(self) -> Dict[str, str]:
        return {
            "a1": str(self.a1), "b1": str(self.b1), "a2": str(self.a2),
            "b2": str(self.b2), "c": str(self.c), "source": self.source,
        }


def conjecture_margin(v: ContractedClass, params: TiltParams, coeffs: ConjectureCoefficients,
                      geom: FibredGeometry) -> Fraction:
    """Right side minus left side of the ch3 bound; >= 0 means it holds for v"""
    coeffs.validate()
    tw = twist(v, params.beta, geom)
    return (coeffs.a1 * tw.h2_ch1b + coeffs.b1 * tw.hf_ch1b + coeffs.a2 * tw.h_ch2b
            + coeffs.b2 * tw.f_ch2b + coeffs.c * tw.ch0 - tw.ch3b)


# ============================================================================
# PARAMETER REGION
# ============================================================================

@dataclass(frozen=True)
class RegionReport:
    passed: bool
    diagnostics: Dict[str, object] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"passed": self.passed, "diagnostics": self.diagnostics}


def region_threshold(params: TiltParams, geom: FibredGeometry) -> Optional[Fraction]:
    """
    (-b(b+2)H^3 + 4(b+2)(g-1) + alpha^2) / ((b+2)^2 - alpha^2); None when the
    denominator is not positive.
    """
    b, a = params.beta, params.alpha_sq
    denominator = (b + 2) ** 2 - a
    if denominator <= 0:
        return None
    numerator = -b * (b + 2) * geom.h3 + 4 * (b + 2) * (geom.base_genus - 1) + a
    return numerator / denominator


def oh_positivity_threshold(params: TiltParams, geom: FibredGeometry) -> Optional[Fraction]:
    """
    The t above which nu_{a,b,t}(O(H)) > 0, i.e.
    (alpha^2 - H^3(1-b)^2) / ((1-b)^2 - alpha^2); None unless 1 - b > alpha.
    """
    b, a = params.beta, params.alpha_sq
    if 1 - b <= 0 or (1 - b) ** 2 - a <= 0:
        return None
    return (a - geom.h3 * (1 - b) ** 2) / ((1 - b) ** 2 - a)


def region_check(params: TiltParams, t0: RationalLike, geom: FibredGeometry) -> RegionReport:
    """
    Conditions alpha - 2 < beta < 1 - alpha and t > max(threshold, t0),
    with alpha handled through alpha^2 exactly. Failures are reported in the
    diagnostics, never raised.
    """
    t0 = Fraction(t0)
    b, a, t = params.beta, params.alpha_sq, params.t
    diagnostics: Dict[str, object] = {}

    diagnostics["alpha_sq_positive"] = a > 0
    diagnostics["t_non_negative"] = t >= 0
    diagnostics["t0_non_negative"] = t0 >= 0
    if t0 == 0:
        diagnostics["t0_note"] = "t0 = 0 is optimistic; the t-stability bound of the object may be larger"
        logger.info("region_check with default t0 = 0")

    condition_1 = (b + 2 > 0 and 1 - b > 0 and a < (b + 2) ** 2 and a < (1 - b) ** 2)
    diagnostics["condition_1"] = condition_1

    threshold = region_threshold(params, geom)
    diagnostics["threshold"] = None if threshold is None else str(threshold)
    condition_2 = threshold is not None and t > threshold and t > t0
    diagnostics["condition_2"] = condition_2

    oh_threshold = oh_positivity_threshold(params, geom)
    diagnostics["oh_positivity_threshold"] = None if oh_threshold is None else str(oh_threshold)
    diagnostics["oh_positive"] = oh_threshold is not None and t > oh_threshold

    passed = (diagnostics["alpha_sq_positive"] and diagnostics["t_non_negative"]
              and diagnostics["t0_non_negative"] and condition_1 and condition_2)
    return RegionReport(bool(passed), diagnostics)


# ============================================================================
# CLOSED-FORM SLOPES
# ============================================================================

def slope_of_OH(params: TiltParams, geom: FibredGeometry) -> Fraction:
    """nu_{a,b,t}(O(H))"""
    require_projective_bundle(geom, "slope_of_OH")
    b, a, t = params.beta, params.alpha_sq, params.t
    if b == 1:
        raise PoleError("nu(O(H)) has a pole at beta = 1")
    s = 1 - b
    return (geom.h3 * s * s - a) / (2 * s) + t * (s * s - a) / (2 * s)


def slope_of_shifted_canonical_twist(params: TiltParams, geom: FibredGeometry) -> Fraction:
    """nu_{a,b,t}(O(K_X + H)[1])"""
    require_projective_bundle(geom, "slope_of_shifted_canonical_twist")
    b, a, t = params.beta, params.alpha_sq, params.t
    if b == -2:
        raise PoleError("nu(O(K_X + H)[1]) has a pole at beta = -2")
    s = b + 2
    k = geom.canonical_degree
    return (geom.h3 * s * s - 2 * s * k - a) / (2 * -s) + t * (s * s - a) / (2 * -s)


# ============================================================================
# z_l AND THE POSITIVITY SIGN LOGIC
# ============================================================================

def z_l(v: ContractedClass, params: TiltParams, l: RationalLike,
        coeffs: ConjectureCoefficients, geom: FibredGeometry) -> ChargeValue:
    l = Fraction(l)
    if l <= max(coeffs.b1, 0):
        logger.warning(f"l = {l} <= max(b1, 0) = {max(coeffs.b1, 0)}; positivity is not guaranteed")
    tw = twist(v, params.beta, geom)
    re = (coeffs.a1 * tw.h2_ch1b + l * tw.hf_ch1b + coeffs.a2 * tw.h_ch2b
          + coeffs.b2 * tw.f_ch2b + coeffs.c * tw.ch0 - tw.ch3b)
    im = (tw.h_ch2b + params.t * tw.f_ch2b
          - (params.t + 1) * HALF * params.alpha_sq * geom.h2f * tw.ch0)
    return ChargeValue(re, im)


def corollary_window_check(beta: RationalLike) -> bool:
    """-b(b+1)/2 > 0, i.e. -1 < beta < 0"""
    b = Fraction(beta)
    return -b * (b + 1) * HALF > 0


@dataclass(frozen=True)
class PositivityReport:
    """
    Sign bookkeeping for E = [K[1] -> E -> G] with Im z_l(E) = 0:
    Re z_l(E) = Re z_l(G) - Re z_l(K).
    """
    g_pattern: bool
    k_pattern: bool
    l_admissible: bool
    re_g: Fraction
    re_k: Fraction
    re_e: Fraction

    @property
    def hypotheses_hold(self) -> bool:
        return self.g_pattern and self.k_pattern and self.l_admissible

    @property
    def conclusion_holds(self) -> bool:
        return self.re_g < 0 < self.re_k and self.re_e < 0

    def to_json(self) -> dict:
        return {
            "g_pattern": self.g_pattern, "k_pattern": self.k_pattern,
            "l_admissible": self.l_admissible, "re_g": str(self.re_g),
            "re_k": str(self.re_k), "re_e": str(self.re_e),
            "hypotheses_hold": self.hypotheses_hold, "conclusion_holds": self.conclusion_holds,
        }


def positivity_sign_check(g_class: ContractedClass, k_class: ContractedClass, params: TiltParams,
                          coeffs: ConjectureCoefficients, l: RationalLike,
                          geom: FibredGeometry) -> PositivityReport:
    """
    G must have HF.ch1^b = H.ch2^b = F.ch2^b = ch0 = 0, ch3^b >= 0 and
    H^2.ch1^b < 0; K must have mixed slope 0, HF.ch1^b > 0 and a
    non-negative conjecture margin. Under l > max(b1, 0) this forces
    Re z_l(G) < 0 < Re z_l(K), hence Re z_l(G - K) < 0.
    """
    l = Fraction(l)
    tg = twist(g_class, params.beta, geom)
    tk = twist(k_class, params.beta, geom)

    g_pattern = (tg.hf_ch1b == 0 and tg.h_ch2b == 0 and tg.f_ch2b == 0 and tg.ch0 == 0
                 and tg.ch3b >= 0 and tg.h2_ch1b < 0)
    k_im = z_l(k_class, params, l, coeffs, geom).im
    k_pattern = (k_im == 0 and tk.hf_ch1b > 0
                 and conjecture_margin(k_class, params, coeffs, geom) >= 0)

    re_g = z_l(g_class, params, l, coeffs, geom).re
    re_k = z_l(k_class, params, l, coeffs, geom).re
    re_e = z_l(g_class - k_class, params, l, coeffs, geom).re
    return PositivityReport(g_pattern, k_pattern, l > max(coeffs.b1, 0), re_g, re_k, re_e)
