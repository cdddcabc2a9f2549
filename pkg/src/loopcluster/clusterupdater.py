'''
Created on: 17 Oct 2026
@desc
    Single-cluster loop update of the worldline configuration with a multi-spin driver.

    The growth walks over two kinds of nodes:
        real spins R(l, i) -> l*N + i
        plaquette upper corners V(l, i) -> N*M*K + l*N + i, joined to R(l+1, i) by the worldline leg (l, i)
    A leg is cut when it carries a label or when a transverse-field stop is drawn on it. Plaquettes of bonds in the
    active subset are crossed along a sampled breakup, the others are crossed vertically and weighed at flip time.
    Stops are drawn on every plaquette leg the loop reaches, inside or outside the active subset.
    Flipping a node V whose leg is cut toggles the label on that leg.

    The walk itself runs in the compiled kernels of loopkernels. This class holds the per-chain tables and buffers.
'''

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from src.loopcluster.breakuptable import BreakupTable, build_BreakupTable
from src.loopcluster.cluster import Cluster
from src.loopcluster.loopkernels import (
    LoopWorkspace, apply_LoopFlip, clear_Loop, compute_LoopAcceptance, grow_Loop, pack_BreakupTables,
    run_LoopUpdates, select_Seed, set_ActiveBonds)
from src.loopcluster.tfstops import compute_TFStopProbabilities
from src.loopcluster.updatemode import UpdateMode
from src.sim.simexceptions import ConfigException, SQAException
from src.worldline.plaquette import get_PlaquetteWeights
from src.worldline.trotter import PlaquetteLayout
from src.worldline.worldlineconfig import WorldlineConfig


class ETFStops(Enum):
    '''
    PLAQUETTE skips the stop draw on legs above T3/T4 plaquettes. EXACT draws on every leg.
    '''
    PLAQUETTE = "plaquette"
    EXACT = "exact"


@dataclass
class SweepStatistics:
    nUpdates: int = 0
    nAccepted: int = 0
    totalClusterSize: int = 0

    @property
    def meanClusterSize(self) -> float:
        return self.totalClusterSize / self.nUpdates if self.nUpdates > 0 else 0.0

    @property
    def acceptanceRate(self) -> float:
        return self.nAccepted / self.nUpdates if self.nUpdates > 0 else 0.0

    def add_Cluster(self, _cluster: Cluster) -> None:
        self.nUpdates += 1
        self.totalClusterSize += _cluster.size
        if _cluster.accepted:
            self.nAccepted += 1

    def merge(self, _other: 'SweepStatistics') -> None:
        self.nUpdates += _other.nUpdates
        self.nAccepted += _other.nAccepted
        self.totalClusterSize += _other.totalClusterSize


class LoopClusterUpdater:
    '''
    Grows and flips loop clusters on the configuration of one Markov chain.
    The updater owns the chain's random generator; call set_Parameters whenever (Gamma, Lambda) change.
    '''
    __layout: PlaquetteLayout
    __mode: UpdateMode
    __rng: np.random.Generator
    __tfStops: ETFStops
    __tableCouplingScale: float
    __legKinds: np.ndarray
    __bondSites: np.ndarray
    __colorOfBond: np.ndarray
    __isolatedSites: np.ndarray
    __subsetBonds: np.ndarray
    __subsetOffsets: np.ndarray
    __workspace: LoopWorkspace
    __tables: 'list[BreakupTable]'
    __breakupWeights: np.ndarray
    __cumulative: np.ndarray
    __rowWeights: np.ndarray
    __plaquetteWeights: np.ndarray
    __stopProbabilities: np.ndarray
    __gamma: Optional[float]
    __lambda: Optional[float]

    def __init__(
            self,
            _layout: PlaquetteLayout,
            _mode: UpdateMode,
            _rng: np.random.Generator,
            _tfStops: ETFStops = ETFStops.PLAQUETTE,
            _tableCouplingScale: float = 1.0) -> None:
        '''
        @desc
            Constructor of the class.
        @param[in]  _layout
            Plaquette layout of the chain's lattice
        @param[in]  _mode
            GLOBAL or SEMI_LOCAL update mode
        @param[in]  _rng
            Random generator of the chain
        @param[in]  _tfStops
            Stop rule of the transverse-field legs
        @param[in]  _tableCouplingScale
            Factor applied to the couplings when the breakup tables are built. Anything other than 1 breaks detailed
            balance and only serves as a negative control of the validation.
        '''
        _graph = _layout.graph
        self.__layout = _layout
        self.__mode = _mode
        self.__rng = _rng
        self.__tfStops = ETFStops(_tfStops)
        self.__tableCouplingScale = float(_tableCouplingScale)

        _subsets = _mode.get_Subsets(_graph)
        self.__subsetBonds = np.array([_b for _s in _subsets for _b in _s], dtype=np.int64)
        self.__subsetOffsets = np.cumsum([0] + [len(_s) for _s in _subsets]).astype(np.int64)
        self.__isolatedSites = np.asarray(_graph.get_IsolatedSites(), dtype=np.int64)
        self.__legKinds = np.ascontiguousarray(_layout.legKinds, dtype=np.int64)
        self.__bondSites = np.array([(_i, _j) for _i, _j, _ in _graph.bonds], dtype=np.int64).reshape(-1, 2)
        self.__colorOfBond = np.asarray(_layout.coloring.colorOfBond, dtype=np.int64)
        self.__workspace = LoopWorkspace(_graph.nSites, _layout.nTimeSlices, _graph.nBonds)

        self.__tables = []
        self.__gamma = None
        self.__lambda = None

    @property
    def layout(self) -> PlaquetteLayout:
        return self.__layout

    @property
    def mode(self) -> UpdateMode:
        return self.__mode

    @property
    def tfStops(self) -> ETFStops:
        return self.__tfStops

    @property
    def gamma(self) -> Optional[float]:
        return self.__gamma

    @property
    def lambda_(self) -> Optional[float]:
        return self.__lambda

    @property
    def tables(self) -> 'list[BreakupTable]':
        return self.__tables

    @property
    def stopProbabilities(self) -> 'list[float]':
        return self.__stopProbabilities.tolist() if self.__gamma is not None else []

    def set_Parameters(
            self,
            _gamma: float,
            _lambda: float) -> None:
        '''
        @desc
            Rebuilds the breakup tables and stop probabilities for new driver strengths
        @param[in]  _gamma
            Transverse field Gamma >= 0
        @param[in]  _lambda
            Transverse two-spin coupling Lambda >= 0
        '''
        if _gamma < 0:
            raise ConfigException(f"Gamma must be non-negative. Got {_gamma}")
        _graph = self.__layout.graph
        _params = self.__layout.params
        _params.check_Weights(_graph.get_MaxAbsCoupling(), _lambda)
        _delta = _params.delta
        self.__tables = [build_BreakupTable(-_coupling * self.__tableCouplingScale, _lambda, _delta)
                         for _, _, _coupling in _graph.bonds]
        self.__breakupWeights, self.__cumulative, self.__rowWeights = pack_BreakupTables(self.__tables)
        _weights = [get_PlaquetteWeights(_coupling, _lambda, _delta) for _, _, _coupling in _graph.bonds]
        self.__plaquetteWeights = np.array(_weights).reshape(-1, 5) if _weights else np.zeros((1, 5))
        self.__stopProbabilities = np.asarray(
            compute_TFStopProbabilities(_gamma, _delta, self.__layout.legDegrees), dtype=np.float64)
        self.__gamma = float(_gamma)
        self.__lambda = float(_lambda)

    def __check_Ready(self) -> None:
        if self.__gamma is None:
            raise SQAException("set_Parameters must be called before growing clusters")

    def __clear_Workspace(self) -> None:
        _ws = self.__workspace
        clear_Loop(_ws.nodeMark, _ws.members, _ws.legState, _ws.legKeys, _ws.breakupOf, _ws.breakupKeys,
                   _ws.externalMark, _ws.externals, _ws.counts)
        _ws.bondActive[:] = 0

    def grow_Cluster(self, _config: WorldlineConfig) -> Cluster:
        '''
        @desc
            Picks a seed and grows its cluster. The configuration is not modified.
        @param[in]  _config
            Current configuration of the chain
        @return
            Cluster with its members, the external plaquettes it touches and the legs whose label toggles on a flip
        '''
        self.__check_Ready()
        _ws = self.__workspace
        _params = self.__layout.params
        _nSites = self.__layout.nSites
        _nTimeSlices = self.__layout.nTimeSlices
        _spins = _config.spins.reshape(-1)
        _labels = _config.xLabels.reshape(-1)

        _seedNode, _subsetIndex = select_Seed(
            _nSites, _params.mSlices, _params.nColors, self.__isolatedSites, self.__subsetBonds,
            self.__subsetOffsets, self.__bondSites, self.__colorOfBond, self.__rng)
        set_ActiveBonds(_ws.bondActive, self.__subsetBonds, self.__subsetOffsets, _subsetIndex, 1)
        try:
            _size = grow_Loop(
                _seedNode, _spins, _labels, _nSites, _nTimeSlices, _params.nColors, self.__legKinds, self.__bondSites,
                self.__breakupWeights, self.__cumulative, self.__rowWeights, self.__stopProbabilities,
                self.__tfStops == ETFStops.PLAQUETTE, _ws.bondActive, _ws.nodeMark, _ws.members, _ws.legState,
                _ws.legKeys, _ws.toggledLegs, _ws.positionMark, _ws.breakupOf, _ws.breakupKeys, _ws.externalMark,
                _ws.externals, _ws.counts, self.__rng)
        except ValueError as e:
            self.__clear_Workspace()
            raise SQAException(f"Cluster growth failed: {e}")
        finally:
            set_ActiveBonds(_ws.bondActive, self.__subsetBonds, self.__subsetOffsets, _subsetIndex, 0)

        _nMembers, _, _, _nExternals, _nToggled = (int(_c) for _c in _ws.counts)
        _externals = _ws.externals[:_nExternals]
        _toggled = _ws.toggledLegs[:_nToggled].tolist()
        _cluster = Cluster(
            int(_seedNode), None if _subsetIndex < 0 else int(_subsetIndex),
            set(_ws.members[:_nMembers].tolist()),
            [(int(_k // _nTimeSlices), int(_k % _nTimeSlices)) for _k in _externals],
            _toggled)
        for _key in _toggled:
            _step, _site = divmod(_key, _nSites)
            (_cluster.removedLabels if _labels[_key] else _cluster.newLabels).append((_site, _step))
        _cluster.size = int(_size)
        self.__clear_Workspace()
        return _cluster

    def compute_AcceptanceRatio(
            self,
            _config: WorldlineConfig,
            _cluster: Cluster) -> float:
        '''
        @desc
            Product of W(after)/W(before) over the external plaquettes touched by the cluster
        '''
        self.__check_Ready()
        if len(_cluster.externalPlaquettes) == 0:
            return 1.0
        _ws = self.__workspace
        _nTimeSlices = self.__layout.nTimeSlices
        _members = np.fromiter(_cluster.members, dtype=np.int64, count=len(_cluster.members))
        _externals = np.array([_bond * _nTimeSlices + _step for _bond, _step in _cluster.externalPlaquettes],
                              dtype=np.int64)
        _ws.nodeMark[_members] = 1
        try:
            return float(compute_LoopAcceptance(
                _config.spins.reshape(-1), _config.xLabels.reshape(-1), self.__layout.nSites, _nTimeSlices,
                self.__bondSites, self.__plaquetteWeights, _ws.nodeMark, _externals, len(_externals)))
        except ValueError as e:
            raise SQAException(f"Acceptance test failed: {e}")
        finally:
            _ws.nodeMark[_members] = 0

    def flip_Cluster(
            self,
            _config: WorldlineConfig,
            _cluster: Cluster) -> bool:
        '''
        @desc
            Accepts the flip with probability min(1, R) and applies it in place. GLOBAL clusters are always flipped.
        @param[in]  _config
            Configuration the cluster was grown on
        @param[in]  _cluster
            Output of grow_Cluster
        @return
            True if the cluster was flipped
        '''
        _accepted = True
        if not self.__mode.isGlobal and len(_cluster.externalPlaquettes) > 0:
            _ratio = self.compute_AcceptanceRatio(_config, _cluster)
            _accepted = _ratio >= 1.0 or self.__rng.random() < _ratio
        if _accepted:
            _members = np.fromiter(_cluster.members, dtype=np.int64, count=len(_cluster.members))
            _toggled = np.array(_cluster.toggledLegs, dtype=np.int64)
            apply_LoopFlip(_config.spins.reshape(-1), _config.xLabels.reshape(-1), self.__layout.nSites,
                           self.__layout.nTimeSlices, _members, len(_members), _toggled, len(_toggled))
        _cluster.accepted = _accepted
        return _accepted

    def run_Sweep(
            self,
            _config: WorldlineConfig,
            _nUpdates: Optional[int] = None) -> SweepStatistics:
        '''
        @desc
            Performs _nUpdates grow+flip updates in the compiled loop, N by default
        '''
        self.__check_Ready()
        _nUpdates = self.__layout.nSites if _nUpdates is None else int(_nUpdates)
        if _nUpdates <= 0:
            return SweepStatistics()
        _ws = self.__workspace
        _params = self.__layout.params
        try:
            _totalSize, _nAccepted = run_LoopUpdates(
                _nUpdates, self.__mode.isGlobal, _config.spins.reshape(-1), _config.xLabels.reshape(-1),
                self.__layout.nSites, _params.mSlices, _params.nColors, self.__legKinds, self.__bondSites,
                self.__colorOfBond, self.__isolatedSites, self.__subsetBonds, self.__subsetOffsets,
                self.__breakupWeights, self.__cumulative, self.__rowWeights, self.__plaquetteWeights,
                self.__stopProbabilities, self.__tfStops == ETFStops.PLAQUETTE, _ws.bondActive, _ws.nodeMark,
                _ws.members, _ws.legState, _ws.legKeys, _ws.toggledLegs, _ws.positionMark, _ws.breakupOf,
                _ws.breakupKeys, _ws.externalMark, _ws.externals, _ws.counts, self.__rng)
        except ValueError as e:
            self.__clear_Workspace()
            raise SQAException(f"Loop update failed: {e}")
        return SweepStatistics(_nUpdates, int(_nAccepted), int(_totalSize))

    def run_Update(self, _config: WorldlineConfig) -> SweepStatistics:
        return self.run_Sweep(_config, 1)
