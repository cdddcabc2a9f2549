'''
Created on: 17 Oct 2026
@desc
    Equilibrium <sz sz> over a (Lambda, Gamma) grid at fixed beta and the ordered/disordered boundary read off it.
'''

from dataclasses import dataclass

import numpy as np
import pandas as pd

from src.loopcluster.clusterupdater import ETFStops
from src.loopcluster.updatemode import UpdateMode
from src.problem.couplinggraph import CouplingGraph, color_Edges
from src.sim.equilibrium import run_Equilibrium
from src.sim.imanager import EManagerReqType
from src.sim.managerparallel import ManagerParallel
from src.sim.simexceptions import ConfigException, SQAException
from src.sim.validation import get_ValidTrotterNumber
from src.worldline.trotter import make_TrotterParams

PHASE_COLUMNS = ["lambda", "gamma", "M", "zz", "zz_err", "zz_norm"]
BOUNDARY_LEVEL = 0.5


@dataclass(frozen=True)
class PhasePoint:
    graph: CouplingGraph
    beta: float
    lambda_: float
    gamma: float
    mSlices: int
    mode: UpdateMode
    nThermalize: int
    nMeasure: int
    seed: int
    pointIndex: int
    tfStops: ETFStops


def execute_PhasePoint(_point: PhasePoint) -> dict:
    _params = make_TrotterParams(color_Edges(_point.graph), _point.beta, _point.mSlices)
    _series = run_Equilibrium(
        _point.graph, _params, _point.gamma, _point.lambda_, _point.mode,
        _point.nThermalize, _point.nMeasure, _point.seed, _point.pointIndex, _point.tfStops)
    return {"lambda": _point.lambda_, "gamma": _point.gamma, "M": _point.mSlices,
            "zz": _series.mean, "zz_err": _series.stderr}


def normalize_Correlation(_zz: pd.Series) -> pd.Series:
    '''
    @desc
        (zz - min zz) / (max zz - min zz), all zeros for a flat grid
    '''
    _span = float(_zz.max() - _zz.min())
    if _span <= 0.0:
        return pd.Series(np.zeros(len(_zz)), index=_zz.index)
    return (_zz - _zz.min()) / _span


def run_PhaseScan(
        _graph: CouplingGraph,
        _beta: float,
        _lambdas: 'list[float]',
        _gammas: 'list[float]',
        _trotterStep: float,
        _mode: UpdateMode,
        _nThermalize: int,
        _nMeasure: int,
        _seed: int,
        _tfStops: ETFStops = ETFStops.PLAQUETTE,
        _numOfWorkers: int = 1,
        _showProgress: bool = True) -> pd.DataFrame:
    '''
    @desc
        Equilibrium correlation at every grid point
    @param[in]  _graph
        Coupling graph
    @param[in]  _beta
        Inverse temperature
    @param[in]  _lambdas
        Lambda values of the grid
    @param[in]  _gammas
        Gamma values of the grid
    @param[in]  _trotterStep
        Requested imaginary time step
    @param[in]  _mode
        Update mode
    @param[in]  _nThermalize
        Discarded sweeps per point
    @param[in]  _nMeasure
        Measured sweeps per point
    @param[in]  _seed
        Run seed. Point k uses the stream (seed, k).
    @param[in]  _tfStops
        Stop rule of the transverse-field legs
    @param[in]  _numOfWorkers
        Worker processes
    @param[in]  _showProgress
        Progress bar switch
    @return
        DataFrame with PHASE_COLUMNS, gamma-major order
    '''
    if len(_lambdas) == 0 or len(_gammas) == 0:
        raise ConfigException("The phase scan grid is empty")
    _grid = [(float(_l), float(_g)) for _g in _gammas for _l in _lambdas]
    _points = [PhasePoint(
        _graph, float(_beta), _lambda, _gamma,
        get_ValidTrotterNumber(_beta, _trotterStep, _graph.get_MaxAbsCoupling(), _lambda),
        _mode, _nThermalize, _nMeasure, _seed, _index, ETFStops(_tfStops))
        for _index, (_lambda, _gamma) in enumerate(_grid)]

    _manager = ManagerParallel(
        tasks=_points,
        worker=execute_PhasePoint,
        numOfWorkers=_numOfWorkers,
        description="Phase scan points",
        showProgress=_showProgress)
    _manager.run_Sim()
    _failures = _manager.req_Manager(EManagerReqType.GET_FAILURES)
    if len(_failures) > 0:
        _index, _error = _failures[0]
        raise SQAException(f"Phase scan point {_index} failed: {_error}")

    _table = pd.DataFrame([_row for _, _row in _manager.req_Manager(EManagerReqType.GET_RESULTS)])
    _table["zz_norm"] = normalize_Correlation(_table["zz"])
    return _table[PHASE_COLUMNS]


def extract_PhaseBoundary(
        _table: pd.DataFrame,
        _level: float = BOUNDARY_LEVEL) -> pd.DataFrame:
    '''
    @desc
        For every gamma, the Lambda where zz_norm first crosses _level, by linear interpolation between the
        bracketing grid points
    @param[in]  _table
        Output of run_PhaseScan
    @param[in]  _level
        Crossing level of the normalized correlation
    @return
        DataFrame with columns gamma, lambda_cross (NaN when the row never crosses)
    '''
    _rows = []
    for _gamma, _group in _table.groupby("gamma", sort=True):
        _group = _group.sort_values("lambda")
        _lambdas = _group["lambda"].to_numpy()
        _values = _group["zz_norm"].to_numpy() - _level
        _crossing = float("nan")
        for _k in range(len(_values) - 1):
            if _values[_k] == 0.0:
                _crossing = float(_lambdas[_k])
                break
            if _values[_k] * _values[_k + 1] < 0.0:
                _fraction = _values[_k] / (_values[_k] - _values[_k + 1])
                _crossing = float(_lambdas[_k] + _fraction * (_lambdas[_k + 1] - _lambdas[_k]))
                break
        else:
            if len(_values) > 0 and _values[-1] == 0.0:
                _crossing = float(_lambdas[-1])
        _rows.append({"gamma": float(_gamma), "lambda_cross": _crossing})
    return pd.DataFrame(_rows, columns=["gamma", "lambda_cross"])
