"""Slope functions, Harder-Narasimhan filtrations, walls and the P(E) layer."""

from .slopes import SlopeFunction, SubobjectLattice, HNFiltration, hn_filtration
from .tilt import TiltParams, MembershipReport, RelativeTilt, MixedTilt
from .walls import WallSolution, EnumerationBounds, wall_alpha_sq, first_wall

__all__ = [
    'SlopeFunction', 'SubobjectLattice', 'HNFiltration', 'hn_filtration',
    'TiltParams', 'MembershipReport', 'RelativeTilt', 'MixedTilt',
    'WallSolution', 'EnumerationBounds', 'wall_alpha_sq', 'first_wall',
]
