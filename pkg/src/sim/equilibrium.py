'''
Created on: 17 Oct 2026
@desc
    Fixed-parameter Monte Carlo runs and binning error analysis.
'''

from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.loopcluster.clusterupdater import ETFStops, LoopClusterUpdater, SweepStatistics
from src.loopcluster.updatemode import UpdateMode
from src.problem.couplinggraph import CouplingGraph, EdgeColoring, color_Edges
from src.sim.simexceptions import ConfigException
from src.utils import create_Generator
from src.worldline.observables import measure_ZZ
from src.worldline.trotter import PlaquetteLayout, TrotterParams
from src.worldline.worldlineconfig import WorldlineConfig

MIN_BINS = 16
# consecutive levels agreeing within this many of their own standard errors count as a plateau
PLATEAU_TOLERANCE = 1.0


@dataclass(frozen=True)
class BinningResult:
    '''
    error is the standard error of the mean, tauInt the integrated autocorrelation time in sweeps
    (1/2 for independent samples). converged is False when the block errors were still growing at the
    largest block size, in which case error is a lower bound.
    '''
    error: float
    tauInt: float
    converged: bool
    levels: 'tuple[float, ...]' = ()


def analyze_Binning(_series: np.ndarray) -> BinningResult:
    '''
    @desc
        Blocking analysis of a correlated series. The block size doubles from 1 while at least MIN_BINS blocks
        remain. The error is read at the first level whose error agrees with the next two levels within their
        statistical uncertainty, sigma/sqrt(2(n_blocks-1)). Without such a plateau the largest error is reported.
    @param[in]  _series
        Per-sweep measurements
    @return
        BinningResult, NaN error for fewer than two samples
    '''
    _series = np.asarray(_series, dtype=np.float64)
    if len(_series) < 2:
        return BinningResult(float("nan"), float("nan"), False)

    _levels = []
    _uncertainties = []
    _blockSize = 1
    while len(_series) // _blockSize >= min(MIN_BINS, len(_series)):
        _nBlocks = len(_series) // _blockSize
        if _nBlocks < 2:
            break
        _blocks = _series[:_nBlocks * _blockSize].reshape(_nBlocks, _blockSize).mean(axis=1)
        _error = float(np.std(_blocks, ddof=1) / np.sqrt(_nBlocks))
        _levels.append(_error)
        _uncertainties.append(_error / np.sqrt(2.0 * (_nBlocks - 1)))
        _blockSize *= 2

    _naive = _levels[0]
    if _naive == 0.0:
        return BinningResult(0.0, 0.5, True, tuple(_levels))

    _error, _converged = max(_levels), False
    for _level in range(len(_levels) - 2):
        _window = _levels[_level:_level + 3]
        _spread = PLATEAU_TOLERANCE * max(_uncertainties[_level:_level + 3])
        if max(_window) - min(_window) <= 2.0 * _spread:
            _error, _converged = max(_window), True
            break
    return BinningResult(_error, 0.5 * (_error / _naive) ** 2, _converged, tuple(_levels))


def compute_BinningError(_series: np.ndarray) -> float:
    '''
    @return
        Standard error of the mean from analyze_Binning
    '''
    return analyze_Binning(_series).error


@dataclass
class EquilibriumSeries:
    series: np.ndarray
    statistics: SweepStatistics

    @property
    def mean(self) -> float:
        return float(np.mean(self.series))

    @property
    def binning(self) -> BinningResult:
        return analyze_Binning(self.series)

    @property
    def stderr(self) -> float:
        return self.binning.error

    @property
    def tauInt(self) -> float:
        return self.binning.tauInt


def run_Equilibrium(
        _graph: CouplingGraph,
        _params: TrotterParams,
        _gamma: float,
        _lambda: float,
        _mode: UpdateMode,
        _nThermalize: int,
        _nMeasure: int,
        _seed: int,
        _streamId: int = 0,
        _tfStops: ETFStops = ETFStops.PLAQUETTE,
        _tableCouplingScale: float = 1.0,
        _coloring: Optional[EdgeColoring] = None) -> EquilibriumSeries:
    '''
    @desc
        Thermalizes a chain at fixed (Gamma, Lambda) and records <sz sz> after every sweep
    @param[in]  _graph
        Coupling graph
    @param[in]  _params
        Trotter parameters
    @param[in]  _gamma
        Transverse field
    @param[in]  _lambda
        Transverse two-spin coupling
    @param[in]  _mode
        Update mode
    @param[in]  _nThermalize
        Sweeps discarded before measuring
    @param[in]  _nMeasure
        Measured sweeps
    @param[in]  _seed
        Run seed
    @param[in]  _streamId
        Second seed component, e.g., the index of a grid point
    @param[in]  _tfStops
        Stop rule of the transverse-field legs
    @param[in]  _tableCouplingScale
        Coupling factor of the breakup tables (1 except for negative controls)
    @param[in]  _coloring
        Edge coloring, the greedy coloring when None
    @return
        EquilibriumSeries with the per-sweep series and the accumulated update statistics
    '''
    if _nThermalize < 0 or _nMeasure < 1:
        raise ConfigException(f"Need n_thermalize >= 0 and n_measure >= 1. Got {_nThermalize}, {_nMeasure}")
    _layout = PlaquetteLayout(_graph, color_Edges(_graph) if _coloring is None else _coloring, _params)
    _rng = create_Generator(_seed, _streamId)
    _config = WorldlineConfig.create_Random(_graph.nSites, _layout.nTimeSlices, _rng)
    _updater = LoopClusterUpdater(_layout, _mode, _rng, _tfStops, _tableCouplingScale)
    _updater.set_Parameters(_gamma, _lambda)

    for _ in range(_nThermalize):
        _updater.run_Sweep(_config)
    _statistics = SweepStatistics()
    _series = np.empty(_nMeasure)
    for _sweep in range(_nMeasure):
        _statistics.merge(_updater.run_Sweep(_config))
        _series[_sweep] = measure_ZZ(_config, _graph)
    return EquilibriumSeries(_series, _statistics)
