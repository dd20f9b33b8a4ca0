"""
Walls for the mixed tilt slope

A wall between v and w is a value of alpha^2 at which their mixed charges
align. Both real parts are affine in alpha^2 and the imaginary parts do not
depend on it, so each wall is the root of one linear equation.
"""

import itertools
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from tqdm import tqdm

from ..core.chern import ContractedClass, twist
from ..core.constants import (
    HALF, LATTICE_DENOMINATORS, WALL_DIRECTION_ABOVE, WALL_DIRECTION_BELOW, WALL_DIRECTIONS,
)
from ..core.exceptions import EmptyAmbientError, ValidationError
from ..core.geometry import FibredGeometry
from ..core.logger import logger, log_function_call, log_performance
from ..core.rationals import RationalLike
from ..core.validators import Validator
from .tilt import delta_tilde_t, heart_membership_necessary


@dataclass(frozen=True)
class WallSolution:
    """One of all_alpha, no_wall or at_alpha_sq(value > 0)"""
    kind: str
    value: Optional[Fraction] = None

    ALL_ALPHA = "all_alpha"
    NO_WALL = "no_wall"
    AT_ALPHA_SQ = "at_alpha_sq"

    @classmethod
    def at(cls, value: Fraction) -> 'WallSolution':
        return cls(cls.AT_ALPHA_SQ, Fraction(value))

    @property
    def is_wall(self) -> bool:
        return self.kind == self.AT_ALPHA_SQ

    def to_json(self) -> dict:
        if self.is_wall:
            return {self.AT_ALPHA_SQ: str(self.value)}
        return {self.kind: True}


ALL_ALPHA = WallSolution(WallSolution.ALL_ALPHA)
NO_WALL = WallSolution(WallSolution.NO_WALL)


@dataclass(frozen=True)
class FirstWall:
    alpha_sq: Fraction
    witnesses: Tuple[ContractedClass, ...]


@dataclass(frozen=True)
class EnumerationBounds:
    """
    Per-component bounds |ch0|, |H^2.ch1|, ... <= max_abs[i].

    With ``lattice`` the grid follows the denominators (1, 1, 1, 2, 2, 6);
    otherwise every component runs over multiples of 1/``grid``.
    """
    max_abs: Tuple[Fraction, ...]
    lattice: bool = True
    grid: int = 6

    def __post_init__(self):
        if len(self.max_abs) != 6:
            raise ValidationError(f"bounds need 6 components, got {len(self.max_abs)}")
        object.__setattr__(self, 'max_abs', tuple(
            Validator.validate_positive(m, "max_abs", allow_zero=True) for m in self.max_abs
        ))
        if self.grid < 1:
            raise ValidationError(f"grid must be positive, got {self.grid}")

    @classmethod
    def uniform(cls, max_abs: RationalLike, lattice: bool = True, grid: int = 6) -> 'EnumerationBounds':
        return cls((Fraction(max_abs),) * 6, lattice, grid)

    def values(self, index: int) -> List[Fraction]:
        """Grid points of component ``index`` inside its bound, ascending"""
        denominator = LATTICE_DENOMINATORS[index] if self.lattice else self.grid
        limit = int(self.max_abs[index] * denominator)  # floor, bounds are non-negative
        return [Fraction(k, denominator) for k in range(-limit, limit + 1)]


def _affine_parts(v: ContractedClass, beta: Fraction, t: Fraction, geom: FibredGeometry):
    """Re z_mixed = A alpha^2 + B and Im z_mixed = I"""
    tw = twist(v, beta, geom)
    a = (t + 1) * HALF * geom.h2f * tw.ch0
    b = -(tw.h_ch2b + t * tw.f_ch2b)
    return a, b, tw.hf_ch1b


def wall_alpha_sq(v: ContractedClass, w: ContractedClass, beta: RationalLike, t: RationalLike,
                  geom: FibredGeometry) -> WallSolution:
    beta = Fraction(beta)
    t = Validator.validate_positive(t, "t", allow_zero=True)
    a_v, b_v, i_v = _affine_parts(v, beta, t, geom)
    a_w, b_w, i_w = _affine_parts(w, beta, t, geom)

    # (A_v x + B_v) I_w = (A_w x + B_w) I_v with x = alpha^2
    coef = a_v * i_w - a_w * i_v
    rhs = b_w * i_v - b_v * i_w

    if i_v == 0 and i_w == 0:
        return ALL_ALPHA if a_v * b_w == a_w * b_v else NO_WALL
    if coef == 0:
        return ALL_ALPHA if rhs == 0 else NO_WALL
    alpha_sq = rhs / coef
    return WallSolution.at(alpha_sq) if alpha_sq > 0 else NO_WALL


def first_wall(v: ContractedClass, candidates: Sequence[ContractedClass], beta: RationalLike,
               t: RationalLike, alpha_sq_start: RationalLike, geom: FibredGeometry,
               direction: str = WALL_DIRECTION_BELOW) -> Union[FirstWall, WallSolution]:
    """
    First wall met when alpha^2 moves from ``alpha_sq_start``.

    ``below`` returns the largest wall under the start, ``above`` the smallest
    one over it. Witnesses keep duplicates and come back sorted.
    """
    start = Validator.validate_positive(alpha_sq_start, "alpha_sq_start")
    Validator.validate_choice(direction, WALL_DIRECTIONS, "direction")

    walls = []
    for w in candidates:
        solution = wall_alpha_sq(v, w, beta, t, geom)
        if not solution.is_wall:
            continue
        if direction == WALL_DIRECTION_BELOW and solution.value < start:
            walls.append((solution.value, w))
        elif direction == WALL_DIRECTION_ABOVE and solution.value > start:
            walls.append((solution.value, w))

    if not walls:
        return NO_WALL
    pick = max if direction == WALL_DIRECTION_BELOW else min
    alpha_sq = pick(value for value, _ in walls)
    witnesses = sorted((w for value, w in walls if value == alpha_sq), key=ContractedClass.sort_key)
    return FirstWall(alpha_sq, tuple(witnesses))


def _discriminants_pass(w: ContractedClass, v: ContractedClass, beta: Fraction, t: Fraction,
                        geom: FibredGeometry) -> bool:
    return delta_tilde_t(w, beta, t, geom) >= 0 and delta_tilde_t(v - w, beta, t, geom) >= 0


def _passes_filters(w: ContractedClass, v: ContractedClass, beta: Fraction, t: Fraction,
                    geom: FibredGeometry) -> bool:
    if w.is_zero or w == v:
        return False
    rest = v - w
    if not _discriminants_pass(w, v, beta, t, geom):
        return False
    if heart_membership_necessary(w, beta, geom).is_violation:
        return False
    return not heart_membership_necessary(rest, beta, geom).is_violation


@log_performance("Destabilizer enumeration")
@log_function_call
def enumerate_destabilizer_classes(v: ContractedClass, beta: RationalLike, t: RationalLike,
                                   geom: FibredGeometry, bounds: EnumerationBounds,
                                   show_progress: bool = False) -> List[ContractedClass]:
    """
    Lattice classes w inside ``bounds`` that pass the numerical filters of a
    destabilizing subobject of v: 0 <= HF.ch1^b(w) <= HF.ch1^b(v), both w and
    v - w satisfy delta_tilde_t >= 0 and the heart conditions, w not in {0, v}.
    """
    beta = Fraction(beta)
    t = Validator.validate_positive(t, "t", allow_zero=True)
    hf_v = twist(v, beta, geom).hf_ch1b
    if hf_v <= 0:
        raise EmptyAmbientError(f"HF.ch1^b(v) = {hf_v} <= 0 leaves no room for subobjects")

    grids = [bounds.values(i) for i in range(6)]

    # ch0 and HF.ch1 fix HF.ch1^b, so prune on them first
    heads = [
        (ch0, hf) for ch0 in grids[0] for hf in grids[2]
        if 0 <= hf - beta * geom.h2f * ch0 <= hf_v
    ]

    found: List[ContractedClass] = []
    for ch0, hf in tqdm(heads, desc="enumerate", disable=not show_progress, file=sys.stderr):
        for h2, h_ch2, f_ch2 in itertools.product(grids[1], grids[3], grids[4]):
            base = ContractedClass(ch0, h2, hf, h_ch2, f_ch2, 0)
            # ch3 only enters through clause 3 of the heart conditions
            if not _discriminants_pass(base, v, beta, t, geom):
                continue
            for ch3 in grids[5]:
                w = ContractedClass(ch0, h2, hf, h_ch2, f_ch2, ch3)
                if _passes_filters(w, v, beta, t, geom):
                    found.append(w)

    found.sort(key=ContractedClass.sort_key)
    logger.info(f"Enumerated {len(found)} candidate destabilizers of {v}")
    return found


@dataclass(frozen=True)
class WallCurve:
    points: Tuple[Tuple[Fraction, Fraction], ...]
    all_alpha_betas: Tuple[Fraction, ...]


def beta_grid(beta_lo: Fraction, beta_hi: Fraction, steps: int) -> List[Fraction]:
    """``steps`` equally spaced exact values from lo to hi inclusive"""
    if steps == 1:
        return [beta_lo]
    width = (beta_hi - beta_lo) / (steps - 1)
    return [beta_lo + i * width for i in range(steps)]


@log_performance("Wall curve sampling")
def wall_curve_sample(v: ContractedClass, w: ContractedClass, t: RationalLike,
                      beta_lo: RationalLike, beta_hi: RationalLike, steps: int,
                      geom: FibredGeometry) -> WallCurve:
    lo = Validator.validate_rational(beta_lo, "beta_lo")
    hi = Validator.validate_rational(beta_hi, "beta_hi")
    if lo > hi:
        raise ValidationError(f"beta range is empty: {lo} > {hi}")
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 1:
        raise ValidationError(f"steps must be a positive integer, got {steps!r}")

    points = []
    all_alpha = []
    for beta in beta_grid(lo, hi, steps):
        solution = wall_alpha_sq(v, w, beta, t, geom)
        if solution.is_wall:
            points.append((beta, solution.value))
        elif solution.kind == WallSolution.ALL_ALPHA:
            all_alpha.append(beta)

    if all_alpha:
        logger.info(f"charges aligned for every alpha at {len(all_alpha)} beta values")
    return WallCurve(tuple(points), tuple(all_alpha))
