"""
Mixed Tilt Toolkit

Exact rational numerics for tilt stability and mixed tilt stability on
threefolds fibred over a curve, with the projective bundle P(E) as the
fully supported case.
"""

__version__ = "1.0.0"

from .core.rationals import ChargeValue, Slope, parse_rational, format_rational
from .core.geometry import FibredGeometry, DivisorClass, new_projective_bundle, new_generic
from .core.chern import ContractedClass, ChowClass, twist, euler_char
from .stability.tilt import TiltParams
from .stability.slopes import SubobjectLattice, hn_filtration

__all__ = [
    'ChargeValue', 'Slope', 'parse_rational', 'format_rational',
    'FibredGeometry', 'DivisorClass', 'new_projective_bundle', 'new_generic',
    'ContractedClass', 'ChowClass', 'twist', 'euler_char',
    'TiltParams', 'SubobjectLattice', 'hn_filtration',
]
