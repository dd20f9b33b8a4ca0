"""
Relative and mixed tilt charges, slopes, discriminants and quadratic forms

Every charge here is evaluated through ``twist`` so one code path carries the
binomial expansion of e^{-beta H}. Slope comparisons are exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from ..core.chern import ContractedClass, twist
from ..core.constants import (
    HALF, SLOPE_MU_C, SLOPE_MU_HF, SLOPE_NAMES, SLOPE_NU_MIXED, SLOPE_NU_RELATIVE,
)
from ..core.exceptions import ThresholdError, ValidationError
from ..core.geometry import DivisorClass, FibredGeometry
from ..core.logger import logger, log_function_call, log_performance
from ..core.rationals import ChargeValue, PLUS_INFINITY, RationalLike, Slope
from ..core.validators import Validator
from .slopes import CSlope, RelativeSlope, SlopeFunction, SubobjectLattice, _torsion_branch
from ..utils.sampling import RationalSampler


@dataclass(frozen=True)
class TiltParams:
    """(alpha^2, beta, t); alpha is carried as its square"""
    alpha_sq: Fraction
    beta: Fraction
    t: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'alpha_sq', Validator.validate_rational(self.alpha_sq, "alpha_sq"))
        object.__setattr__(self, 'beta', Validator.validate_rational(self.beta, "beta"))
        object.__setattr__(self, 't', Validator.validate_rational(self.t, "t"))

    def validate(self) -> 'TiltParams':
        """
        Raises:
            ValidationError: unless alpha^2 > 0 and t >= 0
        """
        Validator.validate_positive(self.alpha_sq, "alpha_sq")
        Validator.validate_positive(self.t, "t", allow_zero=True)
        return self

    def with_t(self, t: RationalLike) -> 'TiltParams':
        return TiltParams(self.alpha_sq, self.beta, Fraction(t))


@dataclass(frozen=True)
class MembershipReport:
    """
    Outcome of the necessary numerical conditions for the tilted heart.

    ``verdict`` is one of ``violates``, ``consistent``, ``consistent_degenerate``.
    A consistent verdict only means the class is not numerically excluded.
    """
    verdict: str
    reason: Optional[str] = None
    flags: Tuple[str, ...] = ()

    VIOLATES = "violates"
    CONSISTENT = "consistent"
    CONSISTENT_DEGENERATE = "consistent_degenerate"

    @property
    def is_violation(self) -> bool:
        return self.verdict == self.VIOLATES

    def to_json(self) -> dict:
        doc = {"verdict": self.verdict, "flags": list(self.flags)}
        if self.reason is not None:
            doc["reason"] = self.reason
        return doc


def _flag_alpha(alpha_sq: Fraction, where: str):
    if alpha_sq <= 0:
        logger.warning(f"{where} evaluated at alpha^2 = {alpha_sq}; only alpha^2 > 0 defines a stability function")


# ============================================================================
# CHARGES AND SLOPES
# ============================================================================

def z_relative(v: ContractedClass, alpha_sq: RationalLike, beta: RationalLike,
               geom: FibredGeometry) -> ChargeValue:
    a = Fraction(alpha_sq)
    _flag_alpha(a, "z_relative")
    tw = twist(v, beta, geom)
    return ChargeValue(a * HALF * geom.h2f * tw.ch0 - tw.f_ch2b, tw.hf_ch1b)


def nu_relative(v: ContractedClass, alpha_sq: RationalLike, beta: RationalLike,
                geom: FibredGeometry) -> Slope:
    tw = twist(v, beta, geom)
    if tw.hf_ch1b == 0:
        return PLUS_INFINITY
    a = Fraction(alpha_sq)
    return Slope((tw.f_ch2b - a * HALF * geom.h2f * tw.ch0) / tw.hf_ch1b)


def z_relative_torsion(v: ContractedClass, alpha_sq: RationalLike, beta: RationalLike,
                       geom: FibredGeometry) -> ChargeValue:
    """Z^{alpha,beta}_{C-tor} = alpha^2/2 H^2.ch1^b - ch3^b + i H.ch2^b"""
    a = Fraction(alpha_sq)
    tw = twist(v, beta, geom)
    return ChargeValue(a * HALF * tw.h2_ch1b - tw.ch3b, tw.h_ch2b)


def _mixed_numerator(v: ContractedClass, params: TiltParams, geom: FibredGeometry):
    """(H + tF).ch2^b - (t+1)/2 alpha^2 H^2F.ch0, and the twist it came from"""
    tw = twist(v, params.beta, geom)
    numerator = (tw.h_ch2b + params.t * tw.f_ch2b
                 - (params.t + 1) * HALF * params.alpha_sq * geom.h2f * tw.ch0)
    return numerator, tw


def z_mixed(v: ContractedClass, params: TiltParams, geom: FibredGeometry) -> ChargeValue:
    _flag_alpha(params.alpha_sq, "z_mixed")
    numerator, tw = _mixed_numerator(v, params, geom)
    return ChargeValue(-numerator, tw.hf_ch1b)


def nu_mixed(v: ContractedClass, params: TiltParams, geom: FibredGeometry) -> Slope:
    numerator, tw = _mixed_numerator(v, params, geom)
    if tw.hf_ch1b == 0:
        return PLUS_INFINITY
    return Slope(numerator / tw.hf_ch1b)


def nu_c_alpha_beta(v: ContractedClass, params: TiltParams, geom: FibredGeometry,
                    c_torsion_hint: Optional[bool] = None) -> Slope:
    """nu_C^{alpha,beta}; t is ignored"""
    torsion = _torsion_branch(v, c_torsion_hint)
    tw = twist(v, params.beta, geom)
    if tw.hf_ch1b != 0:
        return nu_relative(v, params.alpha_sq, params.beta, geom)
    if torsion and tw.h_ch2b != 0:
        return Slope((tw.ch3b - params.alpha_sq * HALF * tw.h2_ch1b) / tw.h_ch2b)
    return PLUS_INFINITY


# ============================================================================
# HEART MEMBERSHIP
# ============================================================================

def heart_membership_necessary(v: ContractedClass, beta: RationalLike,
                               geom: FibredGeometry) -> MembershipReport:
    tw = twist(v, beta, geom)
    if tw.hf_ch1b < 0:
        return MembershipReport(MembershipReport.VIOLATES, "clause 1: HF.ch1^b < 0")
    if tw.hf_ch1b > 0:
        return MembershipReport(MembershipReport.CONSISTENT)

    if tw.h_ch2b < 0:
        return MembershipReport(MembershipReport.VIOLATES, "clause 2: H.ch2^b < 0")
    if tw.f_ch2b < 0:
        return MembershipReport(MembershipReport.VIOLATES, "clause 2: F.ch2^b < 0")
    if tw.ch0 > 0:
        return MembershipReport(MembershipReport.VIOLATES, "clause 2: ch0 > 0")

    flags = ["hf_ch1b_zero"]
    if tw.ch0 == 0:
        flags.append("ch0_zero")
    if tw.h_ch2b == 0:
        flags.append("h_ch2b_zero")
    if tw.f_ch2b == 0:
        flags.append("f_ch2b_zero")
    if tw.ch0 == 0 and tw.h_ch2b == 0 and tw.ch3b < 0:
        return MembershipReport(MembershipReport.VIOLATES, "clause 3: ch3^b < 0", tuple(flags))
    return MembershipReport(MembershipReport.CONSISTENT_DEGENERATE, None, tuple(flags))


# ============================================================================
# DISCRIMINANTS
# ============================================================================

def delta_bar(v: ContractedClass, beta: RationalLike, geom: FibredGeometry) -> Fraction:
    tw = twist(v, beta, geom)
    return tw.hf_ch1b ** 2 - 2 * geom.h2f * tw.ch0 * tw.f_ch2b


def support_q_form(v: ContractedClass, beta: RationalLike, geom: FibredGeometry) -> Fraction:
    """The support-property form Q; same value as ``delta_bar``"""
    return delta_bar(v, beta, geom)


def delta_tilde(v: ContractedClass, beta: RationalLike, geom: FibredGeometry) -> Fraction:
    tw = twist(v, beta, geom)
    return tw.hf_ch1b * tw.h2_ch1b - geom.h2f * tw.ch0 * tw.h_ch2b


def delta_tilde_t(v: ContractedClass, beta: RationalLike, t: RationalLike,
                  geom: FibredGeometry) -> Fraction:
    """Discriminant against H_t = H + tF"""
    t = Fraction(t)
    tw = twist(v, beta, geom)
    return (tw.hf_ch1b * (tw.h2_ch1b + t * tw.hf_ch1b)
            - geom.h2f * tw.ch0 * (tw.h_ch2b + t * tw.f_ch2b))


def bogomolov_f_delta(v: ContractedClass, geom: FibredGeometry) -> Fraction:
    """F.(ch1^2 - 2 ch0 ch2) with ch1 taken in the {H, F} span"""
    x = v.hf_ch1 / geom.h2f
    return x * x * geom.h2f - 2 * v.ch0 * v.f_ch2


def bogomolov_h_delta(v: ContractedClass, geom: FibredGeometry) -> Fraction:
    """H.(ch1^2 - 2 ch0 ch2) with ch1 taken in the {H, F} span"""
    x = v.hf_ch1 / geom.h2f
    return x * (2 * v.h2_ch1 - geom.h3 * x) - 2 * v.ch0 * v.h_ch2


# ============================================================================
# QUADRATIC FORM q_t
# ============================================================================

def q_form(r: RationalLike, c: DivisorClass, d: RationalLike, t: RationalLike,
           geom: FibredGeometry) -> Fraction:
    """q_t(r, c, d) = (H_t.H.c)(F.H.c) - r d"""
    t = Fraction(t)
    h_h_c = c.x * geom.h3 + c.y * geom.h2f
    f_h_c = c.x * geom.h2f
    return (h_h_c + t * f_h_c) * f_h_c - Fraction(r) * Fraction(d)


def tilt_vector(v: ContractedClass, beta: RationalLike, t: RationalLike,
                geom: FibredGeometry) -> Tuple[Fraction, DivisorClass, Fraction]:
    """(H^2F.ch0, ch1^b, H_t.ch2^b), the point where q_t evaluates to delta_tilde_t"""
    t = Fraction(t)
    tw = twist(v, beta, geom)
    x = tw.hf_ch1b / geom.h2f
    y = (tw.h2_ch1b - x * geom.h3) / geom.h2f
    return geom.h2f * tw.ch0, DivisorClass(x, y), tw.h_ch2b + t * tw.f_ch2b


@log_performance("Kernel semi-negativity check")
def kernel_seminegativity_check(alpha_sq: RationalLike, t: RationalLike, geom: FibredGeometry,
                                samples: int, seed: Optional[int] = None) -> bool:
    """
    Sample (r, y) on the kernel of Z(r, c, d) = (t+1)/2 alpha^2 r - d + i F.H.c
    and check q_t <= 0 at every sample.
    """
    a = Validator.validate_positive(alpha_sq, "alpha_sq")
    t = Validator.validate_positive(t, "t", allow_zero=True)
    Validator.validate_non_negative_int(samples, "samples")
    sampler = RationalSampler.from_config(seed=seed)

    for _ in range(samples):
        r = sampler.rational()
        y = sampler.rational()
        d = (t + 1) * HALF * a * r
        q = q_form(r, DivisorClass(0, y), d, t, geom)
        if q > 0:
            logger.error(f"q_t = {q} > 0 on the kernel at r={r}, y={y}")
            return False
    return True


# ============================================================================
# t-STABILITY THRESHOLD
# ============================================================================

def t_stability_threshold(nu1: Slope, nu0_e: Slope, nu_rel_e: Slope,
                          nu2: Optional[Slope]) -> Fraction:
    """
    (nu1 - nu_{a,b,0}(E)) / (nu_{H,F}(E) - nu2), clamped at 0.

    ``nu2`` is None when no subobject has smaller HF.ch1^b; then every t works.
    """
    if nu2 is None:
        return Fraction(0)
    for name, s in (("nu1", nu1), ("nu0(E)", nu0_e), ("nu_HF(E)", nu_rel_e), ("nu2", nu2)):
        if s.is_infinite:
            raise ThresholdError(f"{name} is +inf; threshold undefined")
    if nu_rel_e.value <= nu2.value:
        raise ThresholdError(
            f"nu_HF(E) = {nu_rel_e} must exceed nu2 = {nu2}; E is not nu_HF-stable on this lattice"
        )
    return max(Fraction(0), (nu1.value - nu0_e.value) / (nu_rel_e.value - nu2.value))


@log_function_call
def t_stability_threshold_from_lattice(lat: SubobjectLattice, alpha_sq: RationalLike,
                                       beta: RationalLike, geom: FibredGeometry) -> Fraction:
    """Threshold with nu1 and nu2 read off the lattice nodes"""
    params = TiltParams(alpha_sq, beta, 0)
    e = lat.root_class
    hf_e = twist(e, beta, geom).hf_ch1b

    nu1 = max(nu_mixed(w, params, geom) for w in lat.nodes.values())
    smaller = [
        nu_relative(w, alpha_sq, beta, geom)
        for node_id, w in lat.nodes.items()
        if node_id != lat.root and twist(w, beta, geom).hf_ch1b < hf_e
    ]
    nu2 = max(smaller) if smaller else None
    return t_stability_threshold(
        nu1, nu_mixed(e, params, geom), nu_relative(e, alpha_sq, beta, geom), nu2,
    )


# ============================================================================
# SLOPE FUNCTIONS FOR HN
# ============================================================================

class RelativeTilt(SlopeFunction):
    """nu^{alpha,beta}_{H,F} with charge z^{alpha,beta}_{H,F}"""

    name = SLOPE_NU_RELATIVE

    def __init__(self, geom: FibredGeometry, alpha_sq: RationalLike, beta: RationalLike):
        super().__init__(geom)
        self.alpha_sq = Fraction(alpha_sq)
        self.beta = Fraction(beta)

    def slope(self, v):
        return nu_relative(v, self.alpha_sq, self.beta, self.geom)

    def charge(self, v):
        return z_relative(v, self.alpha_sq, self.beta, self.geom)


class MixedTilt(SlopeFunction):
    """nu_{alpha,beta,t} with charge z_{alpha,beta,t}"""

    name = SLOPE_NU_MIXED

    def __init__(self, geom: FibredGeometry, params: TiltParams):
        super().__init__(geom)
        self.params = params

    def slope(self, v):
        return nu_mixed(v, self.params, self.geom)

    def charge(self, v):
        return z_mixed(v, self.params, self.geom)


def slope_function_by_name(name: str, geom: FibredGeometry,
                           params: Optional[TiltParams] = None,
                           c_torsion_hint: Optional[bool] = None) -> SlopeFunction:
    """
    Build the slope function ``name`` (one of mu_hf, mu_c, nu_relative, nu_mixed)

    Raises:
        ValidationError: unknown name, or tilt parameters missing
    """
    Validator.validate_choice(name, SLOPE_NAMES, "slope function")
    if name == SLOPE_MU_HF:
        return RelativeSlope(geom)
    if name == SLOPE_MU_C:
        return CSlope(geom, c_torsion_hint)
    if params is None:
        raise ValidationError(f"{name} needs alpha_sq, beta and t")
    params.validate()
    if name == SLOPE_NU_RELATIVE:
        return RelativeTilt(geom, params.alpha_sq, params.beta)
    return MixedTilt(geom, params)
