'''
Created on: 17 Oct 2026
@desc
    Comparison of equilibrium Monte Carlo <sz sz> with exact diagonalization over a grid of (beta, Lambda, Gamma).

    A point passes when |qmc - ed| <= nSigma * sqrt(qmc_err^2 + absTolerance^2). The tolerance floor keeps a
    chain that sits in a single state (zero binning error) from failing on round-off.
'''

from dataclasses import dataclass

import numpy as np
import pandas as pd

from src.loopcluster.clusterupdater import ETFStops
from src.loopcluster.updatemode import UpdateMode
from src.oracle.exactdiag import MAX_ED_SITES, compute_EDThermalExpectation, compute_ZZDiagonal
from src.oracle.worldlineenum import MAX_TRANSFER_SITES, compute_SliceAveragedExpectation
from src.problem.couplinggraph import CouplingGraph, color_Edges
from src.sim.equilibrium import run_Equilibrium
from src.sim.imanager import EManagerReqType
from src.sim.managerparallel import ManagerParallel
from src.sim.simexceptions import CapacityException, ConfigException, SQAException
from src.utils import derive_TrotterNumber
from src.worldline.trotter import PlaquetteLayout, make_TrotterParams

VALIDATION_COLUMNS = ["beta", "lambda", "gamma", "M", "ed", "discretized", "qmc", "qmc_err", "tau_int",
                      "binning_converged", "pass"]
DEFAULT_ABS_TOLERANCE = 1e-3
DEFAULT_N_SIGMA = 3.0


def make_ProductGrid(
        _betas: 'list[float]',
        _lambdas: 'list[float]',
        _gammas: 'list[float]') -> 'list[tuple[float, float, float]]':
    '''
    @return
        List of (beta, Lambda, Gamma)
    '''
    return [(float(_b), float(_l), float(_g)) for _b in _betas for _l in _lambdas for _g in _gammas]


def make_LambdaGrid(
        _betas: 'list[float]',
        _zValues: 'list[float]',
        _lambdaFractions: 'list[float]') -> 'list[tuple[float, float, float]]':
    '''
    @desc
        Lambda = f*Z, Gamma = (1-f)*Z for every driver scale Z and fraction f in [0, 1]
    '''
    for _fraction in _lambdaFractions:
        if not 0.0 <= _fraction <= 1.0:
            raise ConfigException(f"Lambda fractions must lie in [0, 1]. Got {_fraction}")
    return [(float(_b), float(_f * _z), float((1.0 - _f) * _z))
            for _b in _betas for _z in _zValues for _f in _lambdaFractions]


def get_ValidTrotterNumber(
        _beta: float,
        _trotterStep: float,
        _maxAbsCoupling: float,
        _lambda: float) -> int:
    '''
    @desc
        Trotter number from the requested step, raised until delta*max(|J|, Lambda) < 1
    '''
    _mSlices = derive_TrotterNumber(_beta, _trotterStep)
    return max(_mSlices, int(np.floor(_beta * max(_maxAbsCoupling, _lambda))) + 1)


@dataclass(frozen=True)
class ValidationPoint:
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
    tableCouplingScale: float


def execute_ValidationPoint(_point: ValidationPoint) -> dict:
    '''
    @desc
        Worker of the validation grid. Next to ED, small graphs also get the exact value of the discretized
        measure at the same M, so a gap between qmc and ed splits into sampler error and Trotter error.
    '''
    _coloring = color_Edges(_point.graph)
    _params = make_TrotterParams(_coloring, _point.beta, _point.mSlices)
    _series = run_Equilibrium(
        _point.graph, _params, _point.gamma, _point.lambda_, _point.mode,
        _point.nThermalize, _point.nMeasure, _point.seed, _point.pointIndex,
        _point.tfStops, _point.tableCouplingScale, _coloring)
    _exact = compute_EDThermalExpectation(_point.graph, _point.gamma, _point.lambda_, _point.beta, "zz_nn")
    _discretized = float("nan")
    if _point.graph.nSites <= MAX_TRANSFER_SITES:
        _discretized = compute_SliceAveragedExpectation(
            PlaquetteLayout(_point.graph, _coloring, _params), _point.gamma, _point.lambda_,
            compute_ZZDiagonal(_point.graph))
    _binning = _series.binning
    return {"beta": _point.beta, "lambda": _point.lambda_, "gamma": _point.gamma, "M": _point.mSlices,
            "ed": _exact, "discretized": _discretized, "qmc": _series.mean, "qmc_err": _binning.error,
            "tau_int": _binning.tauInt, "binning_converged": _binning.converged}


def judge_Agreement(
        _report: pd.DataFrame,
        _nSigma: float = DEFAULT_N_SIGMA,
        _absTolerance: float = DEFAULT_ABS_TOLERANCE) -> pd.Series:
    _error = np.sqrt(_report["qmc_err"].fillna(0.0) ** 2 + _absTolerance ** 2)
    return (_report["qmc"] - _report["ed"]).abs() <= _nSigma * _error


def run_Validation(
        _graph: CouplingGraph,
        _grid: 'list[tuple[float, float, float]]',
        _trotterStep: float,
        _mode: UpdateMode,
        _nThermalize: int,
        _nMeasure: int,
        _seed: int,
        _tfStops: ETFStops = ETFStops.PLAQUETTE,
        _tableCouplingScale: float = 1.0,
        _nSigma: float = DEFAULT_N_SIGMA,
        _absTolerance: float = DEFAULT_ABS_TOLERANCE,
        _numOfWorkers: int = 1,
        _showProgress: bool = True) -> pd.DataFrame:
    '''
    @desc
        Runs the Monte Carlo chain and the exact oracle at every grid point
    @param[in]  _graph
        Coupling graph small enough for exact diagonalization
    @param[in]  _grid
        List of (beta, Lambda, Gamma)
    @param[in]  _trotterStep
        Requested imaginary time step beta/M
    @param[in]  _mode
        Update mode of the chains
    @param[in]  _nThermalize
        Discarded sweeps per point
    @param[in]  _nMeasure
        Measured sweeps per point
    @param[in]  _seed
        Run seed. Point k uses the stream (seed, k).
    @param[in]  _tfStops
        Stop rule of the transverse-field legs
    @param[in]  _tableCouplingScale
        Coupling factor of the breakup tables (negative control when != 1)
    @param[in]  _nSigma
        Number of combined standard errors allowed
    @param[in]  _absTolerance
        Floor of the combined error
    @param[in]  _numOfWorkers
        Worker processes
    @param[in]  _showProgress
        Progress bar switch
    @return
        DataFrame with the columns of VALIDATION_COLUMNS, one row per grid point in grid order
    '''
    if len(_grid) == 0:
        raise ConfigException("The validation grid is empty")
    if _graph.nSites > MAX_ED_SITES:
        raise CapacityException(f"Validation needs exact diagonalization, which supports up to {MAX_ED_SITES} sites. Got {_graph.nSites}")
    _points = [ValidationPoint(
        _graph, _beta, _lambda, _gamma,
        get_ValidTrotterNumber(_beta, _trotterStep, _graph.get_MaxAbsCoupling() * max(1.0, abs(_tableCouplingScale)), _lambda),
        _mode, _nThermalize, _nMeasure, _seed, _index, ETFStops(_tfStops), _tableCouplingScale)
        for _index, (_beta, _lambda, _gamma) in enumerate(_grid)]

    _manager = ManagerParallel(
        tasks=_points,
        worker=execute_ValidationPoint,
        numOfWorkers=_numOfWorkers,
        description="Validation points",
        showProgress=_showProgress)
    _manager.run_Sim()
    _failures = _manager.req_Manager(EManagerReqType.GET_FAILURES)
    if len(_failures) > 0:
        _index, _error = _failures[0]
        raise SQAException(f"Validation point {_index} failed: {_error}")

    _report = pd.DataFrame([_row for _, _row in _manager.req_Manager(EManagerReqType.GET_RESULTS)])
    _report["pass"] = judge_Agreement(_report, _nSigma, _absTolerance)
    return _report[VALIDATION_COLUMNS]
