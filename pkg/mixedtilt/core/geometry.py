"""
Numerical intersection theory of a fibred threefold f: X -> C

Divisors live in the rational span of {H, F} and curves in the span of
{H^2, HF}. F.F = 0 holds identically, so every product below is expanded
with that relation built in.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .constants import KIND_GENERIC, KIND_PROJECTIVE_BUNDLE
from .exceptions import UnsupportedGeometryError, ValidationError
from .logger import logger
from .rationals import RationalLike
from .validators import Validator


@dataclass(frozen=True)
class FibredGeometry:
    """
    Intersection data (g, H^3, H^2F) of X -> C.

    ``deg_e`` is set exactly for projective bundles P(E) over C, where
    H^3 = deg E and H^2F = 1.
    """
    base_genus: int
    h3: Fraction
    h2f: Fraction
    deg_e: Optional[int] = None

    def __post_init__(self):
        Validator.validate_non_negative_int(self.base_genus, "base_genus")
        object.__setattr__(self, 'h3', Validator.validate_rational(self.h3, "h3"))
        object.__setattr__(self, 'h2f', Validator.validate_positive(self.h2f, "h2f"))
        if self.deg_e is not None:
            Validator.validate_int(self.deg_e, "deg_e")
            if self.h3 != self.deg_e or self.h2f != 1:
                raise ValidationError(
                    f"projective bundle needs h3 = deg_e and h2f = 1, got h3={self.h3}, h2f={self.h2f}"
                )

    @property
    def kind(self) -> str:
        return KIND_GENERIC if self.deg_e is None else KIND_PROJECTIVE_BUNDLE

    @property
    def is_projective_bundle(self) -> bool:
        return self.deg_e is not None

    @property
    def canonical_degree(self) -> Fraction:
        """2g - 2 + H^3, the F-coefficient of K_X on P(E)"""
        return 2 * self.base_genus - 2 + self.h3

    def __str__(self):
        if self.is_projective_bundle:
            return f"P(E) over genus {self.base_genus}, deg E = {self.deg_e}"
        return f"generic fibration over genus {self.base_genus}, H^3 = {self.h3}, H^2F = {self.h2f}"


@dataclass(frozen=True)
class DivisorClass:
    """D = x*H + y*F"""
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'x', Fraction(self.x))
        object.__setattr__(self, 'y', Fraction(self.y))

    def __add__(self, other: 'DivisorClass') -> 'DivisorClass':
        return DivisorClass(self.x + other.x, self.y + other.y)

    def __sub__(self, other: 'DivisorClass') -> 'DivisorClass':
        return DivisorClass(self.x - other.x, self.y - other.y)

    def __neg__(self) -> 'DivisorClass':
        return DivisorClass(-self.x, -self.y)

    def scale(self, k: RationalLike) -> 'DivisorClass':
        k = Fraction(k)
        return DivisorClass(k * self.x, k * self.y)


def new_projective_bundle(g: int, deg_e: int) -> FibredGeometry:
    """Geometry of P(E) for a rank 3 bundle E of degree ``deg_e`` on a genus ``g`` curve"""
    Validator.validate_non_negative_int(g, "genus")
    Validator.validate_int(deg_e, "deg_e")
    if deg_e <= 0:
        logger.warning(f"projective bundle with H^3 = {deg_e} <= 0: H is not ample")
    return FibredGeometry(base_genus=g, h3=Fraction(deg_e), h2f=Fraction(1), deg_e=deg_e)


def new_generic(g: int, h3: RationalLike, h2f: RationalLike) -> FibredGeometry:
    """Geometry known only through (g, H^3, H^2F)"""
    Validator.validate_non_negative_int(g, "genus")
    return FibredGeometry(
        base_genus=g,
        h3=Validator.validate_rational(h3, "h3"),
        h2f=Validator.validate_rational(h2f, "h2f"),
    )


def require_projective_bundle(geom: FibredGeometry, operation: str):
    """Raise unsupported-geometry unless ``geom`` is a projective bundle"""
    if not geom.is_projective_bundle:
        raise UnsupportedGeometryError(
            f"{operation} needs the Chow ring of a projective bundle, got {geom.kind} geometry"
        )


# ============================================================================
# CONTRACTIONS ON THE {H, F} SPAN
# ============================================================================

def h2_dot(geom: FibredGeometry, d: DivisorClass) -> Fraction:
    """H^2.D"""
    return d.x * geom.h3 + d.y * geom.h2f


def hf_dot(geom: FibredGeometry, d: DivisorClass) -> Fraction:
    """HF.D"""
    return d.x * geom.h2f


def h_dot_square(geom: FibredGeometry, d: DivisorClass) -> Fraction:
    """H.D^2"""
    return d.x * d.x * geom.h3 + 2 * d.x * d.y * geom.h2f


def f_dot_square(geom: FibredGeometry, d: DivisorClass) -> Fraction:
    """F.D^2"""
    return d.x * d.x * geom.h2f


def cube(geom: FibredGeometry, d: DivisorClass) -> Fraction:
    """D^3"""
    return d.x ** 3 * geom.h3 + 3 * d.x * d.x * d.y * geom.h2f


def hodge_sides_1(geom: FibredGeometry, d: DivisorClass) -> Tuple[Fraction, Fraction]:
    """(H^2F)(F.D^2) and (HF.D)^2"""
    return geom.h2f * f_dot_square(geom, d), hf_dot(geom, d) ** 2


def hodge_sides_2(geom: FibredGeometry, d: DivisorClass) -> Tuple[Fraction, Fraction]:
    """(H^2F)(H.D^2) and 2(H^2.D)(HF.D)"""
    return geom.h2f * h_dot_square(geom, d), 2 * h2_dot(geom, d) * hf_dot(geom, d)


def hodge_check_1(geom: FibredGeometry, d: DivisorClass) -> bool:
    lhs, rhs = hodge_sides_1(geom, d)
    return lhs <= rhs


def hodge_check_2(geom: FibredGeometry, d: DivisorClass) -> bool:
    lhs, rhs = hodge_sides_2(geom, d)
    return lhs <= rhs


# ============================================================================
# CHERN CLASSES OF P(E)
# ============================================================================

def canonical_class(geom: FibredGeometry) -> DivisorClass:
    """K_X = -3H + (2g - 2 + deg E)F"""
    require_projective_bundle(geom, "canonical_class")
    return DivisorClass(Fraction(-3), geom.canonical_degree)


@dataclass(frozen=True)
class ChernContractions:
    """
    Contractions of c1(T_X) and c1^2 + c2 against divisors on P(E).

    The ``*_against`` forms take the two numbers (D.H^2, D.HF) directly,
    which is what a contracted class stores.
    """
    geom: FibredGeometry

    @property
    def chi_o(self) -> Fraction:
        """chi(O_X) = 1 - g"""
        return Fraction(1 - self.geom.base_genus)

    def c1_against(self, d_h2: Fraction, d_hf: Fraction) -> Fraction:
        return 3 * d_h2 - self.geom.canonical_degree * d_hf

    def c1c1_plus_c2_against(self, d_h2: Fraction, d_hf: Fraction) -> Fraction:
        e = self.geom.h3
        g = self.geom.base_genus
        return 12 * d_h2 - (18 * g - 18 + 8 * e) * d_hf

    def c1_with(self, d: DivisorClass) -> Fraction:
        """D.H.c1(T_X) = 3DH^2 - (2g - 2 + e)DHF"""
        return self.c1_against(h2_dot(self.geom, d), hf_dot(self.geom, d))

    def c1_fiber_with(self, d: DivisorClass) -> Fraction:
        """D.F.c1(T_X) = 3DHF"""
        return 3 * hf_dot(self.geom, d)

    def c1c1_plus_c2_with(self, d: DivisorClass) -> Fraction:
        """D.(c1^2 + c2) = 12DH^2 - (18g - 18 + 8e)DHF"""
        return self.c1c1_plus_c2_against(h2_dot(self.geom, d), hf_dot(self.geom, d))


def chern_contractions(geom: FibredGeometry) -> ChernContractions:
    require_projective_bundle(geom, "chern_contractions")
    return ChernContractions(geom)
