'''
Created on: 17 Oct 2026
@desc
    Simulated quantum annealing runs: linear schedules of the driver strengths (Gamma, Lambda), residual energies
    and the cost model C = t_final * nbar.

    Time t counts loop-cluster updates. Breakup tables follow the schedule once every N updates.
'''

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from src.loopcluster.clusterupdater import ETFStops, LoopClusterUpdater
from src.loopcluster.updatemode import UpdateMode
from src.problem.couplinggraph import SpinGlassInstance, color_Edges
from src.problem.groundstate import MAX_EXHAUSTIVE_SITES, find_GroundStateExhaustive
from src.sim.loggerinits import create_Logger
from src.sim.simexceptions import ConfigException
from src.simlogging.ilogger import ELogType, ILogger
from src.utils import create_Generator
from src.worldline.observables import measure_SliceEnergies
from src.worldline.trotter import PlaquetteLayout, TrotterParams
from src.worldline.worldlineconfig import WorldlineConfig

N_CHECKPOINTS = 32
LOG_MODEL_NAME = "Annealer"

RESULT_COLUMNS = ["instance", "driver", "mode", "beta", "M", "t_final", "seed",
                  "e_min", "e_mean", "e_residual", "nbar", "cost"]


class EDriver(Enum):
    '''
    TF: transverse field only, FI: transverse field plus two-spin coupling, PURE_XX: two-spin coupling only
    '''
    TF = "tf"
    FI = "fi"
    PURE_XX = "xx"


DEFAULT_DRIVER_PARAMETERS = {
    EDriver.TF: (2.0, 0.0),
    EDriver.FI: (1.0, 1.0),
    EDriver.PURE_XX: (0.0, 1.0),
}


@dataclass(frozen=True)
class LinearSchedule:
    '''
    Gamma(t) = gamma0 (1 - t/tFinal), Lambda(t) = lambda0 (1 - t/tFinal), both exactly 0 from t = tFinal on
    '''
    gamma0: float
    lambda0: float
    tFinal: int

    def __post_init__(self) -> None:
        if self.gamma0 < 0 or self.lambda0 < 0:
            raise ConfigException(f"Schedule amplitudes must be non-negative. Got gamma0={self.gamma0}, lambda0={self.lambda0}")
        if int(self.tFinal) != self.tFinal or self.tFinal < 0:
            raise ConfigException(f"t_final must be a non-negative integer. Got {self.tFinal}")

    def get_Parameters(self, _t: int) -> 'tuple[float, float]':
        '''
        @return
            (Gamma(t), Lambda(t))
        '''
        if _t >= self.tFinal:
            return 0.0, 0.0
        _remaining = 1.0 - _t / self.tFinal
        return self.gamma0 * _remaining, self.lambda0 * _remaining

    def check_Driver(self, _driver: EDriver) -> None:
        if _driver == EDriver.TF and self.lambda0 != 0:
            raise ConfigException(f"The tf driver has no two-spin term, lambda0 must be 0. Got {self.lambda0}")
        if _driver == EDriver.PURE_XX and self.gamma0 != 0:
            raise ConfigException(f"The xx driver has no transverse field, gamma0 must be 0. Got {self.gamma0}")


def make_Schedule(
        _driver: EDriver,
        _tFinal: int,
        _gamma0: Optional[float] = None,
        _lambda0: Optional[float] = None) -> LinearSchedule:
    '''
    @desc
        Schedule of a driver. Missing amplitudes take the driver defaults.
    '''
    _defaultGamma, _defaultLambda = DEFAULT_DRIVER_PARAMETERS[_driver]
    _schedule = LinearSchedule(
        float(_defaultGamma if _gamma0 is None else _gamma0),
        float(_defaultLambda if _lambda0 is None else _lambda0),
        int(_tFinal))
    _schedule.check_Driver(_driver)
    return _schedule


@dataclass(frozen=True)
class AnnealCheckpoint:
    t: int
    gamma: float
    lambda_: float
    eMin: float
    eMean: float
    nbar: float


@dataclass
class AnnealResult:
    instance: str
    driver: str
    mode: str
    beta: float
    mSlices: int
    tFinal: int
    seed: int
    eMin: float
    eMean: float
    eResidual: float
    eResidualMean: float
    nbar: float
    cost: float
    trace: 'list[AnnealCheckpoint]' = field(default_factory=list)

    def to_Row(self) -> dict:
        '''
        @desc
            Row of the result table, keys as in RESULT_COLUMNS
        '''
        return {
            "instance": self.instance,
            "driver": self.driver,
            "mode": self.mode,
            "beta": self.beta,
            "M": self.mSlices,
            "t_final": self.tFinal,
            "seed": self.seed,
            "e_min": self.eMin,
            "e_mean": self.eMean,
            "e_residual": self.eResidual,
            "nbar": self.nbar,
            "cost": self.cost,
        }


def compute_Cost(_tFinal: int, _nbar: float) -> float:
    return float(_tFinal) * float(_nbar)


def get_CheckpointTimes(_tFinal: int) -> 'list[int]':
    '''
    @desc
        t = 0 plus N_CHECKPOINTS distinct update counts log-spaced on [1, tFinal] (all counts when tFinal is smaller)
    '''
    if _tFinal <= N_CHECKPOINTS:
        return list(range(_tFinal + 1))
    _times = [0]
    for _k in range(N_CHECKPOINTS):
        _ideal = int(round(_tFinal ** (_k / (N_CHECKPOINTS - 1))))
        _times.append(min(max(_ideal, _times[-1] + 1), _tFinal - (N_CHECKPOINTS - 1 - _k)))
    return _times


def resolve_GroundEnergy(_instance: SpinGlassInstance) -> float:
    '''
    @desc
        E_0 of the instance, enumerated when missing and small enough, NaN otherwise
    '''
    if _instance.groundEnergy is not None:
        return float(_instance.groundEnergy)
    if _instance.graph.nSites <= MAX_EXHAUSTIVE_SITES:
        return find_GroundStateExhaustive(_instance.graph)[0]
    return float("nan")


def run_Annealing(
        _instance: SpinGlassInstance,
        _params: TrotterParams,
        _schedule: LinearSchedule,
        _mode: UpdateMode,
        _driver: EDriver,
        _seed: int,
        _logger: Optional[ILogger] = None,
        _tfStops: ETFStops = ETFStops.PLAQUETTE) -> AnnealResult:
    '''
    @desc
        Runs one annealing chain from a random time-constant configuration
    @param[in]  _instance
        Problem instance. Its seed (0 when absent) and _seed form the chain's random stream.
    @param[in]  _params
        Trotter parameters, nColors must match the greedy coloring of the instance
    @param[in]  _schedule
        Linear schedule consistent with the driver
    @param[in]  _mode
        Update mode
    @param[in]  _driver
        Driver Hamiltonian family
    @param[in]  _seed
        Chain seed
    @param[in]  _logger
        Logger for provenance and checkpoint lines. A default command-line logger is used when None.
    @param[in]  _tfStops
        Stop rule of the transverse-field legs
    @return
        AnnealResult with the energies at t_final and the checkpoint trace
    '''
    _schedule.check_Driver(_driver)
    _graph = _instance.graph
    _layout = PlaquetteLayout(_graph, color_Edges(_graph), _params)
    _params.check_Weights(_graph.get_MaxAbsCoupling(), _schedule.lambda0)
    if _logger is None:
        _logger = create_Logger(None, f"anneal_{_instance.name}_{_seed}")
    _groundEnergy = resolve_GroundEnergy(_instance)

    _logger.write_Log(
        f"AnnealStart. instance: [{_instance.name}] driver: [{_driver.value}] mode: [{_mode.modeType.value}] "
        f"beta: [{_params.beta}] M: [{_params.mSlices}] K: [{_params.nColors}] tFinal: [{_schedule.tFinal}] "
        f"gamma0: [{_schedule.gamma0}] lambda0: [{_schedule.lambda0}] seed: [{_seed}] tfStops: [{ETFStops(_tfStops).value}]",
        ELogType.LOGINFO, 0, LOG_MODEL_NAME)

    _rng = create_Generator(_instance.seed if _instance.seed is not None else 0, _seed)
    _config = WorldlineConfig.create_Random(_graph.nSites, _layout.nTimeSlices, _rng)
    _updater = LoopClusterUpdater(_layout, _mode, _rng, _tfStops)
    _checkpointTimes = set(get_CheckpointTimes(_schedule.tFinal))
    _trace = []
    _totalSize = 0

    def record_Checkpoint(_t: int) -> None:
        _energies = measure_SliceEnergies(_config, _graph)
        _gamma, _lambda = _schedule.get_Parameters(_t)
        _checkpoint = AnnealCheckpoint(_t, _gamma, _lambda, float(np.min(_energies)), float(np.mean(_energies)),
                                       _totalSize / _t if _t > 0 else 0.0)
        _trace.append(_checkpoint)
        _logger.write_Log(
            f"AnnealCheckpoint. t: [{_t}] gamma: [{_checkpoint.gamma:.10g}] lambda: [{_checkpoint.lambda_:.10g}] "
            f"emin: [{_checkpoint.eMin:.10g}] emean: [{_checkpoint.eMean:.10g}] nbar: [{_checkpoint.nbar:.10g}]",
            ELogType.LOGINFO, _t, LOG_MODEL_NAME)

    record_Checkpoint(0)
    # Parameters refresh every N updates. A chunk never crosses a refresh or a checkpoint.
    _nSites = _graph.nSites
    _stops = sorted(_checkpointTimes)
    _t = 0
    while _t < _schedule.tFinal:
        if _t % _nSites == 0:
            _updater.set_Parameters(*_schedule.get_Parameters(_t))
        _nextStop = min((_c for _c in _stops if _c > _t), default=_schedule.tFinal)
        _chunkEnd = min(_t - _t % _nSites + _nSites, _nextStop, _schedule.tFinal)
        _totalSize += _updater.run_Sweep(_config, _chunkEnd - _t).totalClusterSize
        _t = _chunkEnd
        if _t in _checkpointTimes:
            record_Checkpoint(_t)

    _energies = measure_SliceEnergies(_config, _graph)
    _eMin = float(np.min(_energies))
    _eMean = float(np.mean(_energies))
    _nbar = _totalSize / _schedule.tFinal if _schedule.tFinal > 0 else 0.0
    _result = AnnealResult(
        _instance.name, _driver.value, _mode.modeType.value, float(_params.beta), int(_params.mSlices),
        int(_schedule.tFinal), int(_seed), _eMin, _eMean, _eMin - _groundEnergy, _eMean - _groundEnergy,
        _nbar, compute_Cost(_schedule.tFinal, _nbar), _trace)

    _logger.write_Log(
        f"AnnealDone. emin: [{_eMin:.10g}] emean: [{_eMean:.10g}] e0: [{_groundEnergy:.10g}] "
        f"nbar: [{_nbar:.10g}] cost: [{_result.cost:.10g}]",
        ELogType.LOGINFO, _schedule.tFinal, LOG_MODEL_NAME)
    return _result
