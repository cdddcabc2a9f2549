'''
Created on: 17 Oct 2026
@desc
    Command line surface: gen-instance, validate, anneal, sweep, phase-scan and summarize.
    Every output file carries the version and the full parameter record of the command that wrote it.

    Exit codes: 0 success, 1 internal error, 2 usage or configuration error, 3 capacity exceeded,
    4 validation failure, 5 unreadable or unwritable path.
'''

import argparse
import dataclasses
import os
import sys
import time
from typing import Optional

import numpy as np
import pandas as pd

from src import __version__
from src.analytics.smas.smaannealtrace import init_SMAAnnealTrace
from src.analytics.smas.smaresulttable import init_SMAResultTable
from src.analytics.summarizers.summarizeranneal import init_SummarizerAnneal
from src.analytics.summarizers.summarizertrace import init_SummarizerTrace
from src.loopcluster.clusterupdater import ETFStops
from src.loopcluster.updatemode import EUpdateMode
from src.problem.couplinggraph import SpinGlassInstance, color_Edges
from src.problem.groundstate import find_GroundStateExhaustive
from src.problem.instanceio import read_Instance, read_Subsets, write_Instance, write_Subsets
from src.problem.squarelattice import build_FerroChain, build_FerroSquare, default_SquareSubsets, generate_Instance
from src.sim.annealer import EDriver, make_Schedule, run_Annealing
from src.sim.batchrun import resolve_UpdateMode
from src.sim.loggerinits import create_Logger, loggerInitDictionary, loggerTypeDictionary
from src.sim.phasescan import extract_PhaseBoundary, run_PhaseScan
from src.sim.runconfig import RunConfig, write_ResultCSV
from src.sim.simexceptions import ConfigException, SQAException, ValidationFailure
from src.sim.simulator import Simulator
from src.sim.validation import DEFAULT_ABS_TOLERANCE, DEFAULT_N_SIGMA, make_LambdaGrid, make_ProductGrid, run_Validation
from src.simlogging.ilogger import ELogType, ILogger
from src.utils import derive_TrotterNumber, parse_FloatList
from src.worldline.trotter import make_TrotterParams

JOBS_ENV_VARIABLE = "SQA_JOBS"
CORRUPT_TABLE_SCALE = 2.0
CLI_MODEL_NAME = "CLI"
DEFAULT_LATTICE_SIZE = 10


def resolve_Jobs(_jobs: int) -> int:
    '''
    @desc
        Worker count from --jobs, overridden by the SQA_JOBS environment variable
    '''
    _override = os.environ.get(JOBS_ENV_VARIABLE)
    if _override is not None and _override.strip() != "":
        try:
            _jobs = int(_override)
        except ValueError:
            raise ConfigException(f"{JOBS_ENV_VARIABLE} must be an integer. Got {_override}")
    if _jobs < 1:
        raise ConfigException(f"The number of jobs must be >= 1. Got {_jobs}")
    return _jobs


def _parse_Count(_text: str) -> int:
    '''
    @desc
        argparse type of update counts, accepts 1e4
    '''
    _value = float(_text)
    if _value != int(_value):
        raise ValueError(f"not an integer: {_text}")
    return int(_value)


def _get_LogSetup(_args: argparse.Namespace) -> dict:
    return {"loghandler": _args.log_handler, "loglevel": _args.log_level, "logfolder": _args.log_dir}


def _get_RunConfig(_args: argparse.Namespace) -> RunConfig:
    _params = {_k: _v for _k, _v in vars(_args).items() if _k not in ("func", "command")}
    return RunConfig(_args.command, _params)


def _load_Model(_args: argparse.Namespace) -> SpinGlassInstance:
    '''
    @desc
        Instance from exactly one of --instance, --ferro-chain and --ferro-square
    '''
    _sources = [_s for _s in (_args.instance, _args.ferro_chain, _args.ferro_square) if _s is not None]
    if len(_sources) != 1:
        raise ConfigException("Give exactly one of --instance, --ferro-chain and --ferro-square")
    if _args.instance is not None:
        return read_Instance(_args.instance)
    if _args.ferro_chain is not None:
        return build_FerroChain(_args.ferro_chain, True, -abs(_args.coupling))
    return build_FerroSquare(_args.ferro_square, _args.ferro_square, True, -abs(_args.coupling))


def _load_AnnealInstance(_args: argparse.Namespace) -> SpinGlassInstance:
    if _args.instance is not None:
        if _args.width is not None or _args.height is not None:
            raise ConfigException("Give either --instance or --width/--height, not both")
        return read_Instance(_args.instance)
    # a random DEFAULT_LATTICE_SIZE square instance when no lattice is named
    _width = DEFAULT_LATTICE_SIZE if _args.width is None else _args.width
    _height = DEFAULT_LATTICE_SIZE if _args.height is None else _args.height
    return generate_Instance(_width, _height, _args.periodic, _args.instance_seed)


def _get_TrotterNumber(_args: argparse.Namespace, _beta: float) -> int:
    if (_args.trotter_step is None) == (_args.m_slices is None):
        raise ConfigException("Give exactly one of --trotter-step and --m-slices")
    if _args.m_slices is not None:
        return _args.m_slices
    return derive_TrotterNumber(_beta, _args.trotter_step)


def cmd_GenInstance(_args: argparse.Namespace, _logger: ILogger) -> int:
    '''
    @desc
        Writes a random square-lattice instance, optionally with its exact ground-state energy and plaquette subsets
    '''
    _instance = generate_Instance(_args.width, _args.height, _args.periodic, _args.seed)
    if _args.ground_energy:
        _instance = _instance.with_GroundEnergy(find_GroundStateExhaustive(_instance.graph)[0])
    _runConfig = _get_RunConfig(_args)
    write_Instance(_instance, _args.out, [f"version: {__version__}", f"config: {_runConfig.to_JSON()}"])
    if _args.subsets_out is not None:
        write_Subsets(default_SquareSubsets(_instance.graph, _args.width, _args.height), _args.subsets_out)
    _logger.write_Log(f"InstanceWritten. path: [{_args.out}] N: [{_instance.graph.nSites}] B: [{_instance.graph.nBonds}]",
                      ELogType.LOGINFO, None, CLI_MODEL_NAME)
    return 0


def cmd_Validate(_args: argparse.Namespace, _logger: ILogger) -> int:
    '''
    @desc
        Monte Carlo against exact diagonalization. Writes the report, then fails when a point disagrees.
    '''
    _instance = _load_Model(_args)
    _betas = parse_FloatList(_args.betas)
    _explicit = _args.lambdas is not None or _args.gammas is not None
    _parametrized = _args.z_values is not None or _args.lambda_fracs is not None
    if _explicit == _parametrized:
        raise ConfigException("Give either --lambdas and --gammas, or --z-values and --lambda-fracs")
    if _explicit:
        if _args.lambdas is None or _args.gammas is None:
            raise ConfigException("--lambdas and --gammas go together")
        _grid = make_ProductGrid(_betas, parse_FloatList(_args.lambdas), parse_FloatList(_args.gammas))
    else:
        if _args.z_values is None or _args.lambda_fracs is None:
            raise ConfigException("--z-values and --lambda-fracs go together")
        _grid = make_LambdaGrid(_betas, parse_FloatList(_args.z_values), parse_FloatList(_args.lambda_fracs))

    _mode = resolve_UpdateMode(EUpdateMode(_args.mode), _instance,
                               None if _args.subsets is None else read_Subsets(_args.subsets))
    _report = run_Validation(
        _instance.graph, _grid, _args.trotter_step, _mode, _args.n_thermalize, _args.n_measure, _args.seed,
        ETFStops(_args.tf_stops), CORRUPT_TABLE_SCALE if _args.corrupt_tables else 1.0,
        _args.n_sigma, _args.abs_tol, resolve_Jobs(_args.jobs), not _args.no_progress)
    if _args.out is not None:
        write_ResultCSV(_report, _args.out, _get_RunConfig(_args))
    else:
        print(_report.to_string(index=False))

    _nFailed = int((~_report["pass"]).sum())
    _logger.write_Log(f"ValidationDone. points: [{len(_report)}] failed: [{_nFailed}]",
                      ELogType.LOGINFO if _nFailed == 0 else ELogType.LOGERROR, None, CLI_MODEL_NAME)
    if _nFailed > 0:
        raise ValidationFailure(f"{_nFailed} of {len(_report)} validation points disagree with exact diagonalization")
    return 0


def cmd_Anneal(_args: argparse.Namespace, _logger: ILogger) -> int:
    '''
    @desc
        One annealing run, one result row
    '''
    _driver = EDriver(_args.driver)
    _schedule = make_Schedule(_driver, _args.t_final, _args.gamma0, _args.lambda0)
    _instance = _load_AnnealInstance(_args)
    _params = make_TrotterParams(color_Edges(_instance.graph), _args.beta, _get_TrotterNumber(_args, _args.beta))
    _mode = resolve_UpdateMode(EUpdateMode(_args.mode), _instance,
                               None if _args.subsets is None else read_Subsets(_args.subsets))
    _runLogger = create_Logger(_get_LogSetup(_args), f"anneal_{_instance.name}_s{_args.seed}")
    try:
        _result = run_Annealing(_instance, _params, _schedule, _mode, _driver, _args.seed, _runLogger,
                                ETFStops(_args.tf_stops))
    finally:
        _runLogger.close_Log()

    _runConfig = _get_RunConfig(_args)
    _table = pd.DataFrame([_result.to_Row()])
    if _args.out is not None:
        write_ResultCSV(_table, _args.out, _runConfig)
    else:
        print(_table.to_string(index=False))
    if _args.trace_out is not None:
        _trace = pd.DataFrame([dataclasses.asdict(_c) for _c in _result.trace]).rename(
            columns={"lambda_": "lambda", "eMin": "emin", "eMean": "emean"})
        write_ResultCSV(_trace, _args.trace_out, _runConfig)
    return 0


def cmd_Sweep(_args: argparse.Namespace, _logger: ILogger) -> int:
    '''
    @desc
        Runs a sweep config. Failed runs go to the failure table and do not fail the command.
    '''
    _sim = Simulator(_args.config, resolve_Jobs(_args.jobs), _logger, not _args.no_progress)
    _startTime = time.perf_counter()
    _sim.execute()
    _results, _failures = _sim.get_Results()
    _logger.write_Log(f"SweepDone. runs: [{len(_results)}] failed: [{len(_failures)}] "
                      f"seconds: [{time.perf_counter() - _startTime:.3f}]", ELogType.LOGINFO, None, CLI_MODEL_NAME)

    _runConfig = RunConfig(_args.command, {"configPath": _args.config, "config": _sim.simEnv["config"],
                                           "jobs": _args.jobs})
    write_ResultCSV(_results, _args.out, _runConfig)
    if _args.failures_out is not None:
        write_ResultCSV(_failures, _args.failures_out, _runConfig)
    elif len(_failures) > 0:
        print(_failures.to_string(index=False), file=sys.stderr)
    return 0


def _get_Axis(_values: Optional[str], _maxValue: float, _nPoints: int) -> 'list[float]':
    if _values is not None:
        return parse_FloatList(_values)
    if _nPoints < 2:
        raise ConfigException(f"The grid needs at least two points per axis. Got {_nPoints}")
    return [float(_v) for _v in np.linspace(0.0, _maxValue, _nPoints)]


def cmd_PhaseScan(_args: argparse.Namespace, _logger: ILogger) -> int:
    '''
    @desc
        Equilibrium correlation over a (Lambda, Gamma) grid and its 0.5 crossing per Gamma
    '''
    _instance = _load_Model(_args)
    _mode = resolve_UpdateMode(EUpdateMode(_args.mode), _instance,
                               None if _args.subsets is None else read_Subsets(_args.subsets))
    _lambdas = _get_Axis(_args.lambdas, _args.lambda_max, _args.grid_size)
    _gammas = _get_Axis(_args.gammas, _args.gamma_max, _args.grid_size)
    _table = run_PhaseScan(_instance.graph, _args.beta, _lambdas, _gammas, _args.trotter_step, _mode,
                           _args.n_thermalize, _args.n_measure, _args.seed, ETFStops(_args.tf_stops),
                           resolve_Jobs(_args.jobs), not _args.no_progress)
    _runConfig = _get_RunConfig(_args)
    if _args.out is not None:
        write_ResultCSV(_table, _args.out, _runConfig)
    else:
        print(_table.to_string(index=False))
    if _args.boundary_out is not None:
        write_ResultCSV(extract_PhaseBoundary(_table), _args.boundary_out, _runConfig)
    return 0


def cmd_Summarize(_args: argparse.Namespace, _logger: ILogger) -> int:
    '''
    @desc
        Ensemble statistics of result tables and, optionally, checkpoint traces of run logs
    '''
    _runConfig = _get_RunConfig(_args)
    _outputs = {}
    if _args.results is not None:
        _sma = init_SMAResultTable(resultPaths=_args.results)
        _sma.Execute()
        if _sma.nDropped > 0:
            _logger.write_Log(f"RowsDropped. reason: [unknown ground energy] rows: [{_sma.nDropped}]",
                              ELogType.LOGWARN, None, CLI_MODEL_NAME)
        _summarizer = init_SummarizerAnneal(resultTableSMA=_sma, significance=_args.significance)
        _summarizer.Execute()
        _outputs.update(_summarizer.get_Results())
    if _args.logs is not None:
        _smas = [init_SMAAnnealTrace(modelLogPath=_path) for _path in _args.logs]
        for _sma in _smas:
            _sma.Execute()
        _summarizer = init_SummarizerTrace(traceSMAs=_smas)
        _summarizer.Execute()
        _outputs.update(_summarizer.get_Results())
    if len(_outputs) == 0:
        raise ConfigException("Give --results and/or --logs")

    for _name, _table in _outputs.items():
        if _args.out_dir is not None:
            os.makedirs(_args.out_dir, exist_ok=True)
            write_ResultCSV(_table, os.path.join(_args.out_dir, f"{_name}.csv"), _runConfig)
        else:
            print(f"== {_name}")
            print(_table.to_string(index=False))
    return 0


def _add_LogArguments(_parser: argparse.ArgumentParser) -> None:
    _parser.add_argument("--log-handler", choices=list(loggerInitDictionary), default="LoggerCmd")
    _parser.add_argument("--log-level", choices=list(loggerTypeDictionary), default="warn")
    _parser.add_argument("--log-dir", default="logs")


def _add_ModelArguments(_parser: argparse.ArgumentParser) -> None:
    _parser.add_argument("--instance", default=None, help="Instance file")
    _parser.add_argument("--ferro-chain", type=int, default=None, metavar="L", help="Periodic ferromagnetic chain of L sites")
    _parser.add_argument("--ferro-square", type=int, default=None, metavar="L", help="Periodic ferromagnetic L x L lattice")
    _parser.add_argument("--coupling", type=float, default=1.0, help="|J| of the ferromagnetic builders")


def _add_ChainArguments(_parser: argparse.ArgumentParser, _defaultStep: float) -> None:
    _parser.add_argument("--trotter-step", type=float, default=_defaultStep, help="Imaginary time step beta/M")
    _parser.add_argument("--mode", choices=[_m.value for _m in EUpdateMode], default=EUpdateMode.GLOBAL.value)
    _parser.add_argument("--subsets", default=None, help="Bond subset file for semilocal mode")
    _parser.add_argument("--n-thermalize", type=int, default=1000)
    _parser.add_argument("--n-measure", type=int, default=10000)
    _parser.add_argument("--seed", type=int, required=True)
    _parser.add_argument("--tf-stops", choices=[_s.value for _s in ETFStops], default=ETFStops.PLAQUETTE.value)
    _parser.add_argument("--jobs", type=int, default=1)
    _parser.add_argument("--no-progress", action="store_true")


def build_Parser() -> argparse.ArgumentParser:
    _parser = argparse.ArgumentParser(prog="sqa", description="Loop-cluster simulated quantum annealing")
    _parser.add_argument("--version", action="version", version=__version__)
    _subparsers = _parser.add_subparsers(dest="command", required=True)

    _gen = _subparsers.add_parser("gen-instance", help="Random square-lattice spin glass")
    _gen.add_argument("--width", type=int, required=True)
    _gen.add_argument("--height", type=int, required=True)
    _gen.add_argument("--periodic", action="store_true")
    _gen.add_argument("--seed", type=int, required=True)
    _gen.add_argument("--out", required=True)
    _gen.add_argument("--ground-energy", action="store_true", help="Enumerate E0 and store it in the file")
    _gen.add_argument("--subsets-out", default=None, help="Also write the plaquette bond subsets")
    _add_LogArguments(_gen)
    _gen.set_defaults(func=cmd_GenInstance)

    _validate = _subparsers.add_parser("validate", help="Monte Carlo against exact diagonalization")
    _add_ModelArguments(_validate)
    _validate.add_argument("--betas", required=True)
    _validate.add_argument("--lambdas", default=None)
    _validate.add_argument("--gammas", default=None)
    _validate.add_argument("--z-values", default=None)
    _validate.add_argument("--lambda-fracs", default=None)
    _validate.add_argument("--n-sigma", type=float, default=DEFAULT_N_SIGMA)
    _validate.add_argument("--abs-tol", type=float, default=DEFAULT_ABS_TOLERANCE)
    _validate.add_argument("--corrupt-tables", action="store_true", help=argparse.SUPPRESS)
    _validate.add_argument("--out", default=None)
    _add_ChainArguments(_validate, 0.05)
    _add_LogArguments(_validate)
    _validate.set_defaults(func=cmd_Validate)

    _anneal = _subparsers.add_parser("anneal", help="Single annealing run")
    _anneal.add_argument("--instance", default=None)
    _anneal.add_argument("--width", type=int, default=None)
    _anneal.add_argument("--height", type=int, default=None)
    _anneal.add_argument("--periodic", action="store_true")
    _anneal.add_argument("--instance-seed", type=int, default=0)
    _anneal.add_argument("--driver", choices=[_d.value for _d in EDriver], required=True)
    _anneal.add_argument("--gamma0", type=float, default=None)
    _anneal.add_argument("--lambda0", type=float, default=None)
    _anneal.add_argument("--beta", type=float, required=True)
    _anneal.add_argument("--trotter-step", type=float, default=None)
    _anneal.add_argument("--m-slices", type=int, default=None)
    _anneal.add_argument("--mode", choices=[_m.value for _m in EUpdateMode], default=EUpdateMode.GLOBAL.value)
    _anneal.add_argument("--subsets", default=None)
    _anneal.add_argument("--t-final", type=_parse_Count, default=10000)
    _anneal.add_argument("--seed", type=int, default=0)
    _anneal.add_argument("--tf-stops", choices=[_s.value for _s in ETFStops], default=ETFStops.PLAQUETTE.value)
    _anneal.add_argument("--out", default=None)
    _anneal.add_argument("--trace-out", default=None)
    _add_LogArguments(_anneal)
    _anneal.set_defaults(func=cmd_Anneal)

    _sweep = _subparsers.add_parser("sweep", help="Batch of annealing runs from a JSON config")
    _sweep.add_argument("--config", required=True)
    _sweep.add_argument("--out", required=True)
    _sweep.add_argument("--failures-out", default=None)
    _sweep.add_argument("--jobs", type=int, default=1)
    _sweep.add_argument("--no-progress", action="store_true")
    _add_LogArguments(_sweep)
    _sweep.set_defaults(func=cmd_Sweep)

    _scan = _subparsers.add_parser("phase-scan", help="Equilibrium correlation over a (Lambda, Gamma) grid")
    _add_ModelArguments(_scan)
    _scan.add_argument("--beta", type=float, required=True)
    _scan.add_argument("--lambdas", default=None)
    _scan.add_argument("--gammas", default=None)
    _scan.add_argument("--lambda-max", type=float, default=1.9)
    _scan.add_argument("--gamma-max", type=float, default=1.9)
    _scan.add_argument("--grid-size", type=int, default=20)
    _scan.add_argument("--out", default=None)
    _scan.add_argument("--boundary-out", default=None)
    _add_ChainArguments(_scan, 0.1)
    _add_LogArguments(_scan)
    _scan.set_defaults(func=cmd_PhaseScan)

    _summarize = _subparsers.add_parser("summarize", help="Statistics of result tables and run logs")
    _summarize.add_argument("--results", nargs="+", default=None)
    _summarize.add_argument("--logs", nargs="+", default=None)
    _summarize.add_argument("--significance", type=float, default=0.05)
    _summarize.add_argument("--out-dir", default=None)
    _add_LogArguments(_summarize)
    _summarize.set_defaults(func=cmd_Summarize)
    return _parser


def run_Main(_argv: 'list[str] | None' = None) -> int:
    '''
    @desc
        Parses the arguments, runs the command and maps errors to exit codes
    @return
        Process exit code
    '''
    _parser = build_Parser()
    try:
        _args = _parser.parse_args(_argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    try:
        _logger = create_Logger(_get_LogSetup(_args), f"cli_{_args.command}")
        try:
            return _args.func(_args, _logger)
        finally:
            _logger.close_Log()
    except SQAException as e:
        print(str(e), file=sys.stderr)
        return e.exitCode
    except Exception as e:
        print(f"[SQA Exception] Internal error: {e!r}", file=sys.stderr)
        return 1
