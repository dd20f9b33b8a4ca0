"""
Seeded random rationals, classes and geometries

All draws come from a numpy Generator so a given seed reproduces the same
sequence of exact values.
"""

from fractions import Fraction
from typing import Optional

import numpy as np

from ..core.chern import ChowClass, ContractedClass
from ..core.config import SamplingConfig, get_config
from ..core.constants import LATTICE_DENOMINATORS
from ..core.geometry import DivisorClass, FibredGeometry, new_generic, new_projective_bundle


class RationalSampler:
    """Draws p/q with |p| <= max_numerator and 1 <= q <= max_denominator"""

    def __init__(self, seed: Optional[int] = None, max_numerator: int = 12,
                 max_denominator: int = 6):
        self.seed = seed
        self.max_numerator = max_numerator
        self.max_denominator = max_denominator
        self.rng = np.random.default_rng(seed)

    @classmethod
    def from_config(cls, config: Optional[SamplingConfig] = None,
                    seed: Optional[int] = None) -> 'RationalSampler':
        """Sampler with bounds from ``config`` (global config by default); ``seed`` overrides"""
        config = config or get_config().sampling
        return cls(
            seed=config.seed if seed is None else seed,
            max_numerator=config.max_numerator,
            max_denominator=config.max_denominator,
        )

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]"""
        return int(self.rng.integers(lo, hi + 1))

    def rational(self) -> Fraction:
        p = self.integer(-self.max_numerator, self.max_numerator)
        q = self.integer(1, self.max_denominator)
        return Fraction(p, q)

    def positive(self) -> Fraction:
        p = self.integer(1, self.max_numerator)
        q = self.integer(1, self.max_denominator)
        return Fraction(p, q)

    def non_negative(self) -> Fraction:
        p = self.integer(0, self.max_numerator)
        q = self.integer(1, self.max_denominator)
        return Fraction(p, q)

    def divisor(self) -> DivisorClass:
        return DivisorClass(self.rational(), self.rational())

    def contracted_class(self) -> ContractedClass:
        return ContractedClass(*(self.rational() for _ in range(6)))

    def integral_class(self, bound: int = 5) -> ContractedClass:
        """Random point of the lattice Z^3 + (1/2 Z)^2 + 1/6 Z with |component| <= bound"""
        return ContractedClass(*(
            Fraction(self.integer(-bound * d, bound * d), d) for d in LATTICE_DENOMINATORS
        ))

    def chow_class(self) -> ChowClass:
        return ChowClass(*(self.rational() for _ in range(6)))

    def projective_bundle(self, max_genus: int = 3, max_abs_degree: int = 3) -> FibredGeometry:
        return new_projective_bundle(
            self.integer(0, max_genus), self.integer(-max_abs_degree, max_abs_degree)
        )

    def generic_geometry(self, max_genus: int = 3) -> FibredGeometry:
        """Generic geometry with H^3 >= 0 and H^2F > 0"""
        return new_generic(self.integer(0, max_genus), self.non_negative(), self.positive())
