'''
Created on: 17 Oct 2026
@desc
    Trotter discretization parameters and the shaded-plaquette layout of the extended spacetime lattice.

    The lattice has M*K time slices. Bond b with color c owns the plaquettes at base slices l = ell*K + c, ell = 0..M-1,
    spanning slices l and l+1 (periodic). At a step l where site i has no bond of color l mod K the site's
    worldline is carried straight up (identity step). Sites without any bond carry a bare transverse-field leg at
    the steps with l mod K = 0.
'''

from dataclasses import dataclass

import numpy as np

from src.problem.couplinggraph import CouplingGraph, EdgeColoring
from src.sim.simexceptions import ConfigException

LEG_IDENTITY = -1
LEG_FREE = -2


@dataclass(frozen=True)
class TrotterParams:
    '''
    beta: inverse temperature, mSlices: Trotter number M, nColors: number of commuting bond classes K
    '''
    beta: float
    mSlices: int
    nColors: int

    def __post_init__(self) -> None:
        if not self.beta > 0:
            raise ConfigException(f"beta must be positive. Got {self.beta}")
        if int(self.mSlices) != self.mSlices or self.mSlices < 1:
            raise ConfigException(f"Trotter number must be an integer >= 1. Got {self.mSlices}")
        if int(self.nColors) != self.nColors or self.nColors < 1:
            raise ConfigException(f"Number of colors must be an integer >= 1. Got {self.nColors}")

    @property
    def delta(self) -> float:
        return self.beta / self.mSlices

    @property
    def nTimeSlices(self) -> int:
        return self.mSlices * self.nColors

    def check_Weights(
            self,
            _maxAbsCoupling: float,
            _lambda: float) -> None:
        '''
        @desc
            First-order plaquette weights stay positive only when delta*max|J| < 1 and delta*Lambda < 1
        '''
        if _lambda < 0:
            raise ConfigException(f"Lambda must be non-negative. Got {_lambda}")
        if self.delta * _maxAbsCoupling >= 1.0:
            raise ConfigException(f"delta*max|J| = {self.delta * _maxAbsCoupling:.6g} must be below 1. Increase M")
        if self.delta * _lambda >= 1.0:
            raise ConfigException(f"delta*Lambda = {self.delta * _lambda:.6g} must be below 1. Increase M")


@dataclass(frozen=True)
class ShadedPlaquette:
    bond: int
    baseSlice: int
    siteI: int
    siteJ: int
    topSlice: int


class PlaquetteLayout:
    '''
    Static geometry of the extended lattice: which bond (if any) each site's worldline meets at each Trotter step.
    '''
    __graph: CouplingGraph
    __coloring: EdgeColoring
    __params: TrotterParams
    __legKinds: np.ndarray
    __legDegrees: np.ndarray

    def __init__(
            self,
            _graph: CouplingGraph,
            _coloring: EdgeColoring,
            _params: TrotterParams) -> None:
        '''
        @desc
            Constructor of the class.
        @param[in]  _graph
            Coupling graph
        @param[in]  _coloring
            Proper edge coloring of the graph
        @param[in]  _params
            Trotter parameters. nColors must equal the coloring's number of colors.
        '''
        if _params.nColors != _coloring.nColors:
            raise ConfigException(f"Trotter parameters have K = {_params.nColors}, the coloring has {_coloring.nColors} colors")
        if not _coloring.is_Proper(_graph):
            raise ConfigException("The edge coloring is not proper for this graph")

        self.__graph = _graph
        self.__coloring = _coloring
        self.__params = _params

        # leg kind per (color, site): bond index, identity or a bare transverse-field leg
        _legKinds = np.full((_coloring.nColors, _graph.nSites), LEG_IDENTITY, dtype=np.int64)
        for _bond, (_i, _j, _) in enumerate(_graph.bonds):
            _color = _coloring.colorOfBond[_bond]
            _legKinds[_color, _i] = _bond
            _legKinds[_color, _j] = _bond
        _degrees = _graph.get_Degrees()
        _isolated = _degrees == 0
        _legKinds[0, _isolated] = LEG_FREE
        self.__legKinds = _legKinds
        self.__legDegrees = np.where(_isolated, 1, _degrees)

    @property
    def graph(self) -> CouplingGraph:
        return self.__graph

    @property
    def coloring(self) -> EdgeColoring:
        return self.__coloring

    @property
    def params(self) -> TrotterParams:
        return self.__params

    @property
    def nSites(self) -> int:
        return self.__graph.nSites

    @property
    def nTimeSlices(self) -> int:
        return self.__params.nTimeSlices

    @property
    def legKinds(self) -> np.ndarray:
        '''
        @type
            (K, N) integer array
        @desc
            Entry [c, i] is the bond met by site i at steps l with l mod K = c, LEG_IDENTITY or LEG_FREE
        '''
        return self.__legKinds

    @property
    def legDegrees(self) -> np.ndarray:
        '''
        @desc
            K_i used in the transverse-field stop probability. Isolated sites take 1.
        '''
        return self.__legDegrees

    def get_LegKind(self, _step: int, _site: int) -> int:
        return int(self.__legKinds[_step % self.__params.nColors, _site])

    def get_PlaquetteSteps(self, _bond: int) -> np.ndarray:
        '''
        @desc
            Base slices of the M shaded plaquettes of a bond
        '''
        _color = self.__coloring.colorOfBond[_bond]
        return np.arange(self.__params.mSlices, dtype=np.int64) * self.__params.nColors + _color

    def get_StepBonds(self, _step: int) -> 'list[int]':
        '''
        @desc
            Bonds whose plaquettes sit at a given step
        '''
        _color = _step % self.__params.nColors
        return [_b for _b, _c in enumerate(self.__coloring.colorOfBond) if _c == _color]

    def get_ShadedPlaquettes(self) -> 'list[ShadedPlaquette]':
        _plaquettes = []
        _nTimeSlices = self.nTimeSlices
        for _bond, (_i, _j, _) in enumerate(self.__graph.bonds):
            for _step in self.get_PlaquetteSteps(_bond):
                _plaquettes.append(ShadedPlaquette(_bond, int(_step), _i, _j, int((_step + 1) % _nTimeSlices)))
        return _plaquettes


def make_TrotterParams(
        _coloring: EdgeColoring,
        _beta: float,
        _mSlices: int) -> TrotterParams:
    return TrotterParams(float(_beta), int(_mSlices), _coloring.nColors)
