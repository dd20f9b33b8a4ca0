"""
Numerical classes of objects on a fibred threefold

A ContractedClass is the six-number vector
(ch0, H^2.ch1, HF.ch1, H.ch2, F.ch2, ch3) every charge in the toolkit is
built from. On P(E) the full Chow class is also available and converts to
and from the contracted vector exactly.
"""

from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Iterable, Tuple

from .constants import HALF, LATTICE_DENOMINATORS, SIXTH, TWELFTH
from .geometry import (
    DivisorClass, FibredGeometry, chern_contractions, cube, require_projective_bundle,
)
from .rationals import RationalLike


class _ClassArithmetic:
    """Componentwise vector arithmetic over the dataclass fields"""

    def components(self) -> Tuple[Fraction, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))

    def __add__(self, other):
        return type(self)(*(a + b for a, b in zip(self.components(), other.components())))

    def __sub__(self, other):
        return type(self)(*(a - b for a, b in zip(self.components(), other.components())))

    def __neg__(self):
        return type(self)(*(-a for a in self.components()))

    def scale(self, k: RationalLike):
        k = Fraction(k)
        return type(self)(*(k * a for a in self.components()))

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.components())

    def _coerce(self):
        for f in fields(self):
            object.__setattr__(self, f.name, Fraction(getattr(self, f.name)))


@dataclass(frozen=True)
class ContractedClass(_ClassArithmetic):
    """(ch0, H^2.ch1, HF.ch1, H.ch2, F.ch2, ch3)"""
    ch0: Fraction = Fraction(0)
    h2_ch1: Fraction = Fraction(0)
    hf_ch1: Fraction = Fraction(0)
    h_ch2: Fraction = Fraction(0)
    f_ch2: Fraction = Fraction(0)
    ch3: Fraction = Fraction(0)

    def __post_init__(self):
        self._coerce()

    @classmethod
    def of(cls, *values: RationalLike) -> 'ContractedClass':
        """Build from six positional rationals (ints, Fractions or 'p/q' strings)"""
        if len(values) != 6:
            raise ValueError(f"a contracted class has 6 components, got {len(values)}")
        return cls(*(Fraction(v) for v in values))

    def sort_key(self) -> Tuple[Fraction, ...]:
        return self.components()

    def __str__(self):
        return "(" + ", ".join(str(a) for a in self.components()) + ")"


@dataclass(frozen=True)
class ChowClass(_ClassArithmetic):
    """
    ch = ch0 + (c1_h H + c1_f F) + (c2_h2 H^2 + c2_hf HF) + ch3 pt on P(E).
    """
    ch0: Fraction = Fraction(0)
    c1_h: Fraction = Fraction(0)
    c1_f: Fraction = Fraction(0)
    c2_h2: Fraction = Fraction(0)
    c2_hf: Fraction = Fraction(0)
    ch3: Fraction = Fraction(0)

    def __post_init__(self):
        self._coerce()

    @property
    def ch1(self) -> DivisorClass:
        return DivisorClass(self.c1_h, self.c1_f)


@dataclass(frozen=True)
class TwistedComponents:
    """Contractions of ch^{beta H} = e^{-beta H} ch"""
    beta: Fraction
    ch0: Fraction
    h2_ch1b: Fraction
    hf_ch1b: Fraction
    h_ch2b: Fraction
    f_ch2b: Fraction
    ch3b: Fraction


ZERO_CLASS = ContractedClass()


def twist(v: ContractedClass, beta: RationalLike, geom: FibredGeometry) -> TwistedComponents:
    b = Fraction(beta)
    e, h2f = geom.h3, geom.h2f
    return TwistedComponents(
        beta=b,
        ch0=v.ch0,
        h2_ch1b=v.h2_ch1 - b * e * v.ch0,
        hf_ch1b=v.hf_ch1 - b * h2f * v.ch0,
        h_ch2b=v.h_ch2 - b * v.h2_ch1 + b * b * HALF * e * v.ch0,
        f_ch2b=v.f_ch2 - b * v.hf_ch1 + b * b * HALF * h2f * v.ch0,
        ch3b=v.ch3 - b * v.h_ch2 + b * b * HALF * v.h2_ch1 - b ** 3 * SIXTH * e * v.ch0,
    )


def tensor_by_divisor(V: ChowClass, d: DivisorClass, geom: FibredGeometry) -> ChowClass:
    """ch(E(D)) = ch(E).e^D on P(E)"""
    require_projective_bundle(geom, "tensor_by_divisor")
    e = geom.h3
    x, y = d.x, d.y
    r, a, b, c, f = V.ch0, V.c1_h, V.c1_f, V.c2_h2, V.c2_hf

    # D.ch2, (D^2/2).ch1 and D^3 as degrees
    d_ch2 = x * c * e + x * f + y * c
    half_d2_ch1 = HALF * (x * x * a * e + x * x * b + 2 * x * y * a)
    d3 = cube(geom, d)

    return ChowClass(
        ch0=r,
        c1_h=a + r * x,
        c1_f=b + r * y,
        c2_h2=c + x * a + HALF * r * x * x,
        c2_hf=f + x * b + y * a + r * x * y,
        ch3=V.ch3 + d_ch2 + half_d2_ch1 + SIXTH * r * d3,
    )


def contract(V: ChowClass, geom: FibredGeometry) -> ContractedClass:
    require_projective_bundle(geom, "contract")
    e = geom.h3
    return ContractedClass(
        ch0=V.ch0,
        h2_ch1=V.c1_h * e + V.c1_f,
        hf_ch1=V.c1_h,
        h_ch2=V.c2_h2 * e + V.c2_hf,
        f_ch2=V.c2_h2,
        ch3=V.ch3,
    )


def lift(v: ContractedClass, geom: FibredGeometry) -> ChowClass:
    """Inverse of ``contract``; the pairing [[e, 1], [1, 0]] is unimodular"""
    require_projective_bundle(geom, "lift")
    e = geom.h3
    return ChowClass(
        ch0=v.ch0,
        c1_h=v.hf_ch1,
        c1_f=v.h2_ch1 - e * v.hf_ch1,
        c2_h2=v.f_ch2,
        c2_hf=v.h_ch2 - e * v.f_ch2,
        ch3=v.ch3,
    )


def tensor_contracted(v: ContractedClass, d: DivisorClass, geom: FibredGeometry) -> ContractedClass:
    """Contracted class of E(D)"""
    return contract(tensor_by_divisor(lift(v, geom), d, geom), geom)


def dual_class(v: ContractedClass) -> ContractedClass:
    """Class of RHom(E, O)[1]"""
    return ContractedClass(-v.ch0, v.h2_ch1, v.hf_ch1, -v.h_ch2, -v.f_ch2, v.ch3)


def dual_sheaf_class(v: ContractedClass) -> ContractedClass:
    """Class of RHom(E, O) without the shift: (ch0, -ch1, ch2, -ch3)"""
    return ContractedClass(v.ch0, -v.h2_ch1, -v.hf_ch1, v.h_ch2, v.f_ch2, -v.ch3)


def dual_sheaf_chow(V: ChowClass) -> ChowClass:
    return ChowClass(V.ch0, -V.c1_h, -V.c1_f, V.c2_h2, V.c2_hf, -V.ch3)


def shift_class(v: ContractedClass, k: int) -> ContractedClass:
    return -v if k % 2 else v


def pushforward_fiber_class(geom: FibredGeometry, r: RationalLike, d: RationalLike,
                            l: RationalLike) -> ContractedClass:
    """
    Class of a sheaf on one fiber with rank r, ch1-degree d and ch2-length l.
    """
    return ContractedClass(0, Fraction(r) * geom.h2f, 0, Fraction(d), 0, Fraction(l))


def fiber_restriction_class(v: ContractedClass, geom: FibredGeometry) -> ContractedClass:
    """Class of E restricted to a fiber and pushed forward, i.e. F.ch(E)"""
    return ContractedClass(0, geom.h2f * v.ch0, 0, v.hf_ch1, 0, v.f_ch2)


def euler_char(v: ContractedClass, geom: FibredGeometry) -> Fraction:
    """chi(E) by Riemann-Roch with td(X) = 1 + c1/2 + (c1^2 + c2)/12 + chi(O_X) pt"""
    cc = chern_contractions(geom)
    return (
        v.ch3
        + HALF * cc.c1_against(v.h_ch2, v.f_ch2)
        + TWELFTH * cc.c1c1_plus_c2_against(v.h2_ch1, v.hf_ch1)
        + cc.chi_o * v.ch0
    )


def validate_integrality(v: ContractedClass) -> bool:
    """True iff v lies in Z + Z + Z + 1/2 Z + 1/2 Z + 1/6 Z"""
    return all(
        (value * denominator).denominator == 1
        for value, denominator in zip(v.components(), LATTICE_DENOMINATORS)
    )


# ============================================================================
# STANDARD CLASSES
# ============================================================================

def structure_sheaf_chow() -> ChowClass:
    return ChowClass(ch0=1)


def structure_sheaf_class() -> ContractedClass:
    return ContractedClass(ch0=1)


def line_bundle_chow(geom: FibredGeometry, d: DivisorClass) -> ChowClass:
    return tensor_by_divisor(structure_sheaf_chow(), d, geom)


def line_bundle_class(geom: FibredGeometry, d: DivisorClass) -> ContractedClass:
    """Contracted class of O(D) on P(E)"""
    return contract(line_bundle_chow(geom, d), geom)


def point_class() -> ContractedClass:
    return ContractedClass(ch3=1)


def ideal_sheaf_of_point_class() -> ContractedClass:
    return ContractedClass(ch0=1, ch3=-1)


def sum_classes(classes: Iterable[ContractedClass]) -> ContractedClass:
    total = ZERO_CLASS
    for v in classes:
        total = total + v
    return total
