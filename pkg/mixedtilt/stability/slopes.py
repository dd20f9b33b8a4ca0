"""
Sheaf-level slopes, base-direction charges and Harder-Narasimhan filtrations

The slope functions are pluggable: anything implementing ``SlopeFunction``
can drive ``hn_filtration`` over a finite subobject lattice.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..core.chern import ContractedClass, ZERO_CLASS
from ..core.constants import SLOPE_MU_C, SLOPE_MU_HF
from ..core.exceptions import InconsistentHintError, LatticeError, NotAFiltrationError
from ..core.geometry import FibredGeometry
from ..core.logger import logger, log_function_call
from ..core.rationals import ChargeValue, PLUS_INFINITY, Slope


def z_base(v: ContractedClass, geom: FibredGeometry) -> ChargeValue:
    """Z_{K(C)} = -HF.ch1 + i H^2F.ch0"""
    return ChargeValue(-v.hf_ch1, geom.h2f * v.ch0)


def z_base_torsion(v: ContractedClass) -> ChargeValue:
    """Z_{C-tor} = -H.ch2 + i H^2.ch1"""
    return ChargeValue(-v.h_ch2, v.h2_ch1)


def mu_hf(v: ContractedClass, geom: FibredGeometry) -> Slope:
    if v.ch0 == 0:
        return PLUS_INFINITY
    return Slope(v.hf_ch1 / (geom.h2f * v.ch0))


def _torsion_branch(v: ContractedClass, hint: Optional[bool]) -> bool:
    """
    Decide whether v is treated as C-torsion.

    Without a hint the numerical proxy ch0 = 0 and HF.ch1 = 0 is used. It is
    necessary but not sufficient for E_{K(C)} = 0.
    """
    if hint is True:
        if v.ch0 != 0 or v.hf_ch1 != 0:
            raise InconsistentHintError(
                f"class {v} marked C-torsion but ch0={v.ch0}, HF.ch1={v.hf_ch1}"
            )
        return True
    if hint is False:
        return False
    return v.ch0 == 0 and v.hf_ch1 == 0


def mu_c(v: ContractedClass, geom: FibredGeometry,
         c_torsion_hint: Optional[bool] = None) -> Slope:
    torsion = _torsion_branch(v, c_torsion_hint)
    if v.ch0 != 0:
        return Slope(v.hf_ch1 / (geom.h2f * v.ch0))
    if torsion and v.h2_ch1 != 0:
        return Slope(v.h_ch2 / v.h2_ch1)
    return PLUS_INFINITY


class SlopeFunction(ABC):
    """
    Abstract base for slope functions used by the HN algorithm.

    ``charge`` must return the charge whose -Re/Im is ``slope`` whenever
    its imaginary part is non-zero; HN uses its imaginary part to break ties.
    """

    name: str = ""

    def __init__(self, geom: FibredGeometry):
        self.geom = geom

    @abstractmethod
    def slope(self, v: ContractedClass) -> Slope:
        pass

    @abstractmethod
    def charge(self, v: ContractedClass) -> ChargeValue:
        pass

    def __call__(self, v: ContractedClass) -> Slope:
        return self.slope(v)


class RelativeSlope(SlopeFunction):
    """mu_{H,F} with charge Z_{K(C)}"""

    name = SLOPE_MU_HF

    def slope(self, v):
        return mu_hf(v, self.geom)

    def charge(self, v):
        return z_base(v, self.geom)


class CSlope(SlopeFunction):
    """mu_C with charge Z_{K(C)} or Z_{C-tor} according to the branch taken"""

    name = SLOPE_MU_C

    def __init__(self, geom: FibredGeometry, c_torsion_hint: Optional[bool] = None):
        super().__init__(geom)
        self.c_torsion_hint = c_torsion_hint

    def slope(self, v):
        return mu_c(v, self.geom, self.c_torsion_hint)

    def charge(self, v):
        if v.ch0 == 0 and _torsion_branch(v, self.c_torsion_hint):
            return z_base_torsion(v)
        return z_base(v, self.geom)


# ============================================================================
# SUBOBJECT LATTICES
# ============================================================================

@dataclass(frozen=True)
class SubobjectLattice:
    """
    Finite proxy for the subobjects of one object.

    An edge (a, b) says node a is a subobject of node b; the relation used by
    the HN algorithm is the transitive closure. Every node must lie below
    ``root`` and every inclusion must induce a non-zero quotient class.

    The quotients must also be consistent: for incomparable nodes a and b
    the lattice has to hold their join j and, unless they meet in zero,
    their meet m, with class(j) - class(a) == class(b) - class(m).
    """
    nodes: Mapping[str, ContractedClass]
    edges: Tuple[Tuple[str, str], ...]
    root: str
    below: Mapping[str, FrozenSet[str]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'nodes', dict(self.nodes))
        object.__setattr__(self, 'edges', tuple((a, b) for a, b in self.edges))
        self._check_structure()
        object.__setattr__(self, 'below', self._closure())
        for node_id in self.nodes:
            if node_id != self.root and node_id not in self.below[self.root]:
                raise LatticeError(f"node {node_id!r} does not lie below the root {self.root!r}")
        self._check_quotients()
        logger.debug(f"Validated subobject lattice with {len(self.nodes)} nodes")

    def _check_structure(self):
        if self.root not in self.nodes:
            raise LatticeError(f"root {self.root!r} is not a node")
        for node_id, v in self.nodes.items():
            if v.is_zero:
                raise LatticeError(f"node {node_id!r} has the zero class")
        for a, b in self.edges:
            for end in (a, b):
                if end not in self.nodes:
                    raise LatticeError(f"edge ({a!r}, {b!r}) names unknown node {end!r}")
            if a == b:
                raise LatticeError(f"self-loop on node {a!r}")
            if (self.nodes[b] - self.nodes[a]).is_zero:
                raise LatticeError(f"edge ({a!r}, {b!r}) induces a zero quotient class")

    def _closure(self) -> Dict[str, FrozenSet[str]]:
        """below[b] = all nodes strictly below b; rejects cycles"""
        direct: Dict[str, List[str]] = {node_id: [] for node_id in self.nodes}
        for a, b in self.edges:
            direct[b].append(a)

        below: Dict[str, FrozenSet[str]] = {}
        visiting = set()

        def visit(node_id: str) -> FrozenSet[str]:
            if node_id in below:
                return below[node_id]
            if node_id in visiting:
                raise LatticeError(f"inclusion cycle through node {node_id!r}")
            visiting.add(node_id)
            result = set()
            for sub in direct[node_id]:
                result.add(sub)
                result |= visit(sub)
            visiting.discard(node_id)
            below[node_id] = frozenset(result)
            return below[node_id]

        for node_id in sorted(self.nodes):
            visit(node_id)
        return below

    def _extremal(self, candidates: List[str], pick_top: bool) -> Optional[str]:
        """The unique least (or greatest) node of ``candidates``, if any"""
        for c in candidates:
            others = (o for o in candidates if o != c)
            if all((o in self.below[c]) if pick_top else (c in self.below[o]) for o in others):
                return c
        return None

    def _check_quotients(self):
        ids = sorted(self.nodes)
        for b in ids:
            for a in self.below[b]:
                if (self.nodes[b] - self.nodes[a]).is_zero:
                    raise LatticeError(f"inclusion {a!r} < {b!r} induces a zero quotient class")
        for i, a in enumerate(ids):
            for b in ids[i + 1:]:
                if self.is_below(a, b) or self.is_below(b, a):
                    continue
                upper = [n for n in ids if a in self.below[n] and b in self.below[n]]
                join = self._extremal(upper, pick_top=False)
                if join is None:
                    raise LatticeError(f"nodes {a!r} and {b!r} have no least common upper node")
                lower = sorted(self.below[a] & self.below[b])
                meet = self._extremal(lower, pick_top=True) if lower else None
                if lower and meet is None:
                    raise LatticeError(f"nodes {a!r} and {b!r} have no greatest common lower node")
                meet_class = self.nodes[meet] if meet is not None else ZERO_CLASS
                if self.nodes[join] - self.nodes[a] != self.nodes[b] - meet_class:
                    raise LatticeError(
                        f"quotient {join!r}/{a!r} and quotient {b!r}/{meet or '0'!r} have different classes"
                    )

    def is_below(self, a: str, b: str) -> bool:
        """a strictly below b"""
        return a in self.below[b]

    def above(self, a: Optional[str]) -> List[str]:
        """Nodes strictly above ``a``; every node when ``a`` is None (the zero object)"""
        if a is None:
            return sorted(self.nodes)
        return sorted(n for n in self.nodes if a in self.below[n])

    @property
    def root_class(self) -> ContractedClass:
        return self.nodes[self.root]


@dataclass(frozen=True)
class HNFiltration:
    """Quotient classes G_i with slopes, and the chain of lattice nodes producing them"""
    factors: Tuple[Tuple[ContractedClass, Slope], ...]
    chain: Tuple[str, ...]

    @property
    def mu_plus(self) -> Slope:
        return self.factors[0][1]

    @property
    def mu_minus(self) -> Slope:
        return self.factors[-1][1]


def _is_strictly_decreasing(slopes: Sequence[Slope]) -> bool:
    return all(a > b for a, b in zip(slopes, slopes[1:]))


@log_function_call
def hn_filtration(lat: SubobjectLattice, slope_of: SlopeFunction) -> HNFiltration:
    """
    Greedy Harder-Narasimhan filtration over ``lat``.

    From the current node S pick the node N above S maximizing the slope of
    class(N) - class(S); ties go to the larger imaginary charge, then to the
    inclusion-maximal node, then to the smaller id.
    """
    current: Optional[str] = None
    current_class = ZERO_CLASS
    factors: List[Tuple[ContractedClass, Slope]] = []
    chain: List[str] = []

    while current != lat.root:
        best = None
        for node_id in lat.above(current):
            quotient = lat.nodes[node_id] - current_class
            key = (slope_of.slope(quotient), slope_of.charge(quotient).im)
            if best is None or key > best[0]:
                best = (key, node_id, quotient)
            elif key == best[0] and lat.is_below(best[1], node_id):
                best = (key, node_id, quotient)
        key, node_id, quotient = best
        factors.append((quotient, key[0]))
        chain.append(node_id)
        current, current_class = node_id, lat.nodes[node_id]

    slopes = [s for _, s in factors]
    if not _is_strictly_decreasing(slopes):
        raise NotAFiltrationError(
            f"greedy chain {chain} has slopes {[str(s) for s in slopes]}, not strictly decreasing"
        )
    logger.debug(f"HN filtration with {len(factors)} factors via {slope_of.name}")
    return HNFiltration(tuple(factors), tuple(chain))


def all_chains(lat: SubobjectLattice) -> List[Tuple[str, ...]]:
    """Every chain 0 < N_1 < ... < root of lattice nodes"""
    chains: List[Tuple[str, ...]] = []

    def extend(prefix: Tuple[str, ...]):
        last = prefix[-1] if prefix else None
        if last == lat.root:
            chains.append(prefix)
            return
        for node_id in lat.above(last):
            extend(prefix + (node_id,))

    extend(())
    return chains


def chain_factors(lat: SubobjectLattice, chain: Iterable[str],
                  slope_of: SlopeFunction) -> List[Tuple[ContractedClass, Slope]]:
    factors = []
    previous = ZERO_CLASS
    for node_id in chain:
        quotient = lat.nodes[node_id] - previous
        factors.append((quotient, slope_of.slope(quotient)))
        previous = lat.nodes[node_id]
    return factors
