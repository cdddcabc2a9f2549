'''
Created on: 17 Oct 2026
@desc
    This module implements the problem instance data model: the coupling graph of an Ising spin glass,
    its commuting-bond decomposition (edge coloring) and the bond subsets used by restricted cluster updates.

    Energy convention: H_P = sum_b J_b s_i s_j, so a ferromagnetic bond has J_b < 0.
'''

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Tuple

import numpy as np

from src.sim.simexceptions import ConfigException


@dataclass(frozen=True)
class CouplingGraph:
    '''
    Sites 0..nSites-1 with weighted bonds (i, j, J_ij).
    Repeated unordered pairs are rejected unless allowParallelBonds is set; lattices with a periodic dimension of length 2 need it.
    '''
    nSites: int
    bonds: Tuple[Tuple[int, int, float], ...]
    allowParallelBonds: bool = False

    def __post_init__(self) -> None:
        if int(self.nSites) != self.nSites or self.nSites < 1:
            raise ConfigException(f"Number of sites must be a positive integer. Got {self.nSites}")
        _normalized = []
        _pairs = set()
        for _bond in self.bonds:
            if len(_bond) != 3:
                raise ConfigException(f"A bond must be (i, j, J). Got {_bond}")
            _i, _j, _coupling = int(_bond[0]), int(_bond[1]), float(_bond[2])
            if not (0 <= _i < self.nSites and 0 <= _j < self.nSites):
                raise ConfigException(f"Bond ({_i}, {_j}) refers to a site outside [0, {self.nSites})")
            if _i == _j:
                raise ConfigException(f"Self-loop on site {_i} is not allowed")
            if not np.isfinite(_coupling):
                raise ConfigException(f"Coupling of bond ({_i}, {_j}) is not finite")
            _pair = (min(_i, _j), max(_i, _j))
            if _pair in _pairs and not self.allowParallelBonds:
                raise ConfigException(f"Duplicate bond between sites {_pair}")
            _pairs.add(_pair)
            _normalized.append((_i, _j, _coupling))
        object.__setattr__(self, "bonds", tuple(_normalized))

    @property
    def nBonds(self) -> int:
        return len(self.bonds)

    @cached_property
    def bondSitesI(self) -> np.ndarray:
        return np.array([_b[0] for _b in self.bonds], dtype=np.int64)

    @cached_property
    def bondSitesJ(self) -> np.ndarray:
        return np.array([_b[1] for _b in self.bonds], dtype=np.int64)

    @cached_property
    def couplings(self) -> np.ndarray:
        return np.array([_b[2] for _b in self.bonds], dtype=np.float64)

    def get_Degrees(self) -> np.ndarray:
        '''
        @desc
            Number of bonds incident to each site (K_i). Parallel bonds count separately.
        @return
            Integer array of length nSites
        '''
        _degrees = np.zeros(self.nSites, dtype=np.int64)
        np.add.at(_degrees, self.bondSitesI, 1)
        np.add.at(_degrees, self.bondSitesJ, 1)
        return _degrees

    def get_IsolatedSites(self) -> np.ndarray:
        return np.flatnonzero(self.get_Degrees() == 0)

    def get_MaxAbsCoupling(self) -> float:
        if self.nBonds == 0:
            return 0.0
        return float(np.max(np.abs(self.couplings)))

    def compute_Energy(self, _spins: np.ndarray) -> float:
        '''
        @desc
            Classical energy sum_b J_b s_i s_j of one configuration
        @param[in]  _spins
            +1/-1 vector of length nSites
        '''
        _spins = np.asarray(_spins)
        return float(np.dot(self.couplings, _spins[self.bondSitesI] * _spins[self.bondSitesJ]))


@dataclass(frozen=True)
class EdgeColoring:
    '''
    Proper edge coloring: bonds of one color never share a site, so their bond Hamiltonians commute.
    '''
    nColors: int
    colorOfBond: Tuple[int, ...]

    def get_ColorClasses(self) -> 'list[list[int]]':
        _classes = [[] for _ in range(self.nColors)]
        for _bond, _color in enumerate(self.colorOfBond):
            _classes[_color].append(_bond)
        return _classes

    def is_Proper(self, _graph: CouplingGraph) -> bool:
        '''
        @desc
            Scans every color class for a shared site
        '''
        if len(self.colorOfBond) != _graph.nBonds:
            return False
        for _colorClass in self.get_ColorClasses():
            _seen = set()
            for _bond in _colorClass:
                _i, _j, _ = _graph.bonds[_bond]
                if _i in _seen or _j in _seen:
                    return False
                _seen.update((_i, _j))
        return True


@dataclass(frozen=True)
class BondSubsets:
    '''
    Bond subsets B_m inside which restricted clusters grow.
    '''
    subsets: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "subsets", tuple(tuple(int(_b) for _b in _s) for _s in self.subsets))
        if len(self.subsets) == 0:
            raise ConfigException("At least one bond subset is needed")
        for _subset in self.subsets:
            if len(_subset) == 0:
                raise ConfigException("Bond subsets can't be empty")

    @property
    def nSubsets(self) -> int:
        return len(self.subsets)

    def check_Against(self, _graph: CouplingGraph) -> None:
        '''
        @desc
            Verifies that the subsets index existing bonds, cover every bond and are each connected
        @param[in]  _graph
            Graph the subsets refer to
        '''
        _covered = set()
        for _m, _subset in enumerate(self.subsets):
            for _bond in _subset:
                if not 0 <= _bond < _graph.nBonds:
                    raise ConfigException(f"Subset {_m} refers to bond {_bond}, the graph has {_graph.nBonds} bonds")
            _covered.update(_subset)
            if not _is_Connected([_graph.bonds[_b] for _b in _subset]):
                raise ConfigException(f"Subset {_m} is not connected")
        if len(_covered) != _graph.nBonds:
            raise ConfigException(f"Bond subsets cover {len(_covered)} out of {_graph.nBonds} bonds")

    def get_SiteSets(self, _graph: CouplingGraph) -> 'list[set[int]]':
        return [{_site for _b in _subset for _site in _graph.bonds[_b][:2]} for _subset in self.subsets]


@dataclass(frozen=True)
class SquareLattice:
    width: int
    height: int
    periodic: bool


@dataclass(frozen=True)
class SpinGlassInstance:
    '''
    A problem instance with its (optional) exact classical ground-state energy E_0.
    '''
    graph: CouplingGraph
    groundEnergy: Optional[float] = None
    seed: Optional[int] = None
    name: str = "instance"
    lattice: Optional[SquareLattice] = field(default=None, compare=False)

    def with_GroundEnergy(self, _groundEnergy: float) -> 'SpinGlassInstance':
        return SpinGlassInstance(self.graph, float(_groundEnergy), self.seed, self.name, self.lattice)


def _is_Connected(_bonds) -> bool:
    if len(_bonds) == 0:
        return True
    _adjacency = {}
    for _i, _j, _ in _bonds:
        _adjacency.setdefault(_i, set()).add(_j)
        _adjacency.setdefault(_j, set()).add(_i)
    _start = next(iter(_adjacency))
    _visited = {_start}
    _stack = [_start]
    while _stack:
        for _next in _adjacency[_stack.pop()]:
            if _next not in _visited:
                _visited.add(_next)
                _stack.append(_next)
    return len(_visited) == len(_adjacency)


def color_Edges(_graph: CouplingGraph) -> EdgeColoring:
    '''
    @desc
        Greedy edge coloring in bond-index order: each bond takes the smallest color not used at either endpoint.
        The result is proper and uses at most 2*max_degree - 1 colors.
    @param[in]  _graph
        Coupling graph
    @return
        EdgeColoring with nColors >= 1 (a bond-free graph gets one empty color)
    '''
    _usedAtSite = [set() for _ in range(_graph.nSites)]
    _colors = []
    for _i, _j, _ in _graph.bonds:
        _blocked = _usedAtSite[_i] | _usedAtSite[_j]
        _color = 0
        while _color in _blocked:
            _color += 1
        _colors.append(_color)
        _usedAtSite[_i].add(_color)
        _usedAtSite[_j].add(_color)
    _nColors = max(_colors) + 1 if len(_colors) > 0 else 1
    return EdgeColoring(_nColors, tuple(_colors))
