'''
Created on: 17 Oct 2026
@desc
    Ensemble harness: every (instance, configuration, seed) combination becomes one annealing task.
    Tasks run through the parallel manager; each yields one result row or one failure row.
'''

from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd

from src.loopcluster.clusterupdater import ETFStops
from src.loopcluster.updatemode import EUpdateMode, UpdateMode, make_GlobalMode, make_SemiLocalMode
from src.problem.couplinggraph import BondSubsets, SpinGlassInstance, color_Edges
from src.problem.squarelattice import default_SquareSubsets
from src.sim.annealer import RESULT_COLUMNS, EDriver, make_Schedule, resolve_GroundEnergy, run_Annealing
from src.sim.imanager import EManagerReqType
from src.sim.loggerinits import create_Logger
from src.sim.managerparallel import ManagerParallel
from src.sim.simexceptions import ConfigException
from src.simlogging.ilogger import ILogger
from src.utils import derive_TrotterNumber
from src.worldline.trotter import make_TrotterParams

FAILURE_COLUMNS = ["instance", "config_index", "seed", "error"]


@dataclass(frozen=True)
class DriverSetting:
    '''
    Driver family with its schedule amplitudes. None takes the driver default.
    '''
    driver: EDriver
    gamma0: Optional[float] = None
    lambda0: Optional[float] = None


@dataclass(frozen=True)
class AnnealConfig:
    driverSetting: DriverSetting
    beta: float
    mSlices: int
    mode: EUpdateMode
    tFinal: int


@dataclass(frozen=True)
class SweepMatrix:
    '''
    Cartesian product drivers x betas x modes x tFinals. The Trotter number comes from mSlices or from trotterStep.
    '''
    drivers: 'tuple[DriverSetting, ...]'
    betas: 'tuple[float, ...]'
    modes: 'tuple[EUpdateMode, ...]'
    tFinals: 'tuple[int, ...]'
    trotterStep: Optional[float] = None
    mSlices: Optional[int] = None
    tfStops: ETFStops = ETFStops.PLAQUETTE

    def __post_init__(self) -> None:
        if (self.trotterStep is None) == (self.mSlices is None):
            raise ConfigException("Give exactly one of trotterStep and mSlices")
        for _name in ("drivers", "betas", "modes", "tFinals"):
            if len(getattr(self, _name)) == 0:
                raise ConfigException(f"The sweep matrix needs at least one entry in {_name}")

    def get_TrotterNumber(self, _beta: float) -> int:
        if self.mSlices is not None:
            return int(self.mSlices)
        return derive_TrotterNumber(_beta, self.trotterStep)

    def get_Configs(self) -> 'list[AnnealConfig]':
        return [AnnealConfig(_driver, float(_beta), self.get_TrotterNumber(_beta), _mode, int(_tFinal))
                for _driver in self.drivers
                for _beta in self.betas
                for _mode in self.modes
                for _tFinal in self.tFinals]


@dataclass(frozen=True)
class AnnealTask:
    instance: SpinGlassInstance
    configIndex: int
    config: AnnealConfig
    seed: int
    subsets: Optional[BondSubsets] = None
    tfStops: ETFStops = ETFStops.PLAQUETTE
    logSetup: Optional[dict] = None


def resolve_UpdateMode(
        _mode: EUpdateMode,
        _instance: SpinGlassInstance,
        _subsets: Optional[BondSubsets]) -> UpdateMode:
    '''
    @desc
        Semi-local runs use the given subsets or, on square lattices, one subset per elementary plaquette
    '''
    if _mode == EUpdateMode.GLOBAL:
        return make_GlobalMode()
    if _subsets is None:
        if _instance.lattice is None:
            raise ConfigException(f"Instance {_instance.name} is not a square lattice. Semi-local mode needs a subset file")
        _subsets = default_SquareSubsets(_instance.graph, _instance.lattice.width, _instance.lattice.height)
    return make_SemiLocalMode(_subsets)


def execute_AnnealTask(_task: AnnealTask) -> dict:
    '''
    @desc
        Worker of the batch. Runs one annealing chain and returns its result row.
    '''
    _config = _task.config
    _setting = _config.driverSetting
    _graph = _task.instance.graph
    _params = make_TrotterParams(color_Edges(_graph), _config.beta, _config.mSlices)
    _schedule = make_Schedule(_setting.driver, _config.tFinal, _setting.gamma0, _setting.lambda0)
    _mode = resolve_UpdateMode(_config.mode, _task.instance, _task.subsets)
    _logger = create_Logger(_task.logSetup, f"{_task.instance.name}_c{_task.configIndex}_s{_task.seed}")
    try:
        _result = run_Annealing(_task.instance, _params, _schedule, _mode, _setting.driver, _task.seed, _logger, _task.tfStops)
    finally:
        _logger.close_Log()
    return _result.to_Row()


def build_AnnealTasks(
        _instances: 'list[SpinGlassInstance]',
        _matrix: SweepMatrix,
        _nSeeds: int,
        _seedBase: int = 0,
        _subsets: Optional[BondSubsets] = None,
        _logSetup: Optional[dict] = None) -> 'list[AnnealTask]':
    '''
    @desc
        One task per (instance, configuration, seed) in this nesting order. Missing ground energies are enumerated once here.
    '''
    if _nSeeds < 1:
        raise ConfigException(f"nSeeds must be >= 1. Got {_nSeeds}")
    _tasks = []
    _configs = _matrix.get_Configs()
    for _instance in _instances:
        _groundEnergy = resolve_GroundEnergy(_instance)
        if _instance.groundEnergy is None and np.isfinite(_groundEnergy):
            _instance = _instance.with_GroundEnergy(_groundEnergy)
        for _configIndex, _config in enumerate(_configs):
            for _seedOffset in range(_nSeeds):
                _tasks.append(AnnealTask(_instance, _configIndex, _config, _seedBase + _seedOffset,
                                         _subsets, _matrix.tfStops, _logSetup))
    return _tasks


def collect_BatchTables(
        _tasks: 'list[AnnealTask]',
        _manager: ManagerParallel) -> 'tuple[pd.DataFrame, pd.DataFrame]':
    '''
    @return
        (result table in task order, failure table)
    '''
    _rows = [_row for _, _row in _manager.req_Manager(EManagerReqType.GET_RESULTS)]
    _results = pd.DataFrame(_rows, columns=RESULT_COLUMNS)
    _failureRows = [{"instance": _tasks[_index].instance.name,
                     "config_index": _tasks[_index].configIndex,
                     "seed": _tasks[_index].seed,
                     "error": _error}
                    for _index, _error in _manager.req_Manager(EManagerReqType.GET_FAILURES)]
    return _results, pd.DataFrame(_failureRows, columns=FAILURE_COLUMNS)


def batch_run(
        _instances: 'list[SpinGlassInstance]',
        _matrix: SweepMatrix,
        _nSeeds: int,
        _seedBase: int = 0,
        _numOfWorkers: int = 1,
        _subsets: Optional[BondSubsets] = None,
        _logSetup: Optional[dict] = None,
        _logger: Optional[ILogger] = None,
        _showProgress: bool = True) -> 'tuple[pd.DataFrame, pd.DataFrame]':
    '''
    @desc
        Runs every combination of the matrix on every instance for _nSeeds seeds
    @param[in]  _instances
        Problem instances
    @param[in]  _matrix
        Configuration matrix
    @param[in]  _nSeeds
        Number of chain seeds per (instance, configuration)
    @param[in]  _seedBase
        First chain seed
    @param[in]  _numOfWorkers
        Worker processes
    @param[in]  _subsets
        Bond subsets for semi-local runs on non-square graphs
    @param[in]  _logSetup
        Log setup of the individual runs
    @param[in]  _logger
        Logger of the batch, receives the failures
    @param[in]  _showProgress
        Progress bar switch
    @return
        (result table, failure table)
    '''
    _tasks = build_AnnealTasks(_instances, _matrix, _nSeeds, _seedBase, _subsets, _logSetup)
    _manager = ManagerParallel(
        tasks=_tasks,
        worker=execute_AnnealTask,
        numOfWorkers=_numOfWorkers,
        logger=_logger,
        description="Anneal runs",
        showProgress=_showProgress)
    _manager.run_Sim()
    return collect_BatchTables(_tasks, _manager)
