"""Exact numbers, geometry, Chern classes and the ambient infrastructure."""

from .rationals import ChargeValue, Slope, PLUS_INFINITY, parse_rational, format_rational
from .geometry import FibredGeometry, DivisorClass
from .chern import ContractedClass, ChowClass, TwistedComponents

__all__ = [
    'ChargeValue', 'Slope', 'PLUS_INFINITY', 'parse_rational', 'format_rational',
    'FibredGeometry', 'DivisorClass',
    'ContractedClass', 'ChowClass', 'TwistedComponents',
]
