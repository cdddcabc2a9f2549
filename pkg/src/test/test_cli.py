'''
Created on: 17 Oct 2026
@desc
    We conduct the unit test here for the command line surface and its exit codes
'''

import os
import shutil
import unittest

import pandas as pd

from src.cli import resolve_Jobs, run_Main
from src.sim.annealer import RESULT_COLUMNS
from src.sim.phasescan import PHASE_COLUMNS
from src.sim.runconfig import read_ResultCSV
from src.sim.simexceptions import ConfigException


def read_DataLines(_filePath: str) -> 'list[str]':
    with open(_filePath) as _file:
        return [_line for _line in _file if not _line.startswith("#")]


class TestExitCodes(unittest.TestCase):

    def setUp(self):
        self.__instancePath = os.path.join(os.getcwd(), "test_cli_instance.txt")

    def test_Usage(self):
        self.assertEqual(run_Main(["gen-instance", "--width", "3"]), 2)
        self.assertEqual(run_Main(["no-such-command"]), 2)
        self.assertEqual(run_Main(["--version"]), 0)

    def test_Config(self):
        self.assertEqual(run_Main(["gen-instance", "--width", "1", "--height", "3", "--seed", "0",
                                   "--out", self.__instancePath]), 2)
        self.assertFalse(os.path.isfile(self.__instancePath))
        self.assertEqual(run_Main(["anneal", "--width", "3", "--height", "3", "--instance-seed", "1",
                                   "--driver", "tf", "--lambda0", "1", "--beta", "2", "--m-slices", "8",
                                   "--t-final", "10", "--seed", "0"]), 2)
        self.assertEqual(run_Main(["anneal", "--width", "3", "--height", "3", "--instance-seed", "1",
                                   "--driver", "fi", "--beta", "2", "--m-slices", "8", "--trotter-step", "0.25",
                                   "--t-final", "10", "--seed", "0"]), 2)
        self.assertEqual(run_Main(["validate", "--ferro-chain", "3", "--betas", "1", "--lambdas", "0.5",
                                   "--gammas", "0.5", "--z-values", "1", "--seed", "0"]), 2)

    def test_SemiLocalNeedsSubsets(self):
        self.assertEqual(run_Main(["anneal", "--instance", "configs/testconfigs/instance_ferrochain4.txt",
                                   "--driver", "fi", "--beta", "2", "--m-slices", "8", "--mode", "semilocal",
                                   "--t-final", "10", "--seed", "0"]), 2)

    def test_Capacity(self):
        self.assertEqual(run_Main(["validate", "--ferro-square", "4", "--betas", "1", "--lambdas", "0.5",
                                   "--gammas", "0.5", "--seed", "0", "--no-progress"]), 3)

    def test_MissingPath(self):
        self.assertEqual(run_Main(["anneal", "--instance", "does_not_exist.txt", "--driver", "fi", "--beta", "2",
                                   "--m-slices", "8", "--t-final", "10", "--seed", "0"]), 5)
        self.assertEqual(run_Main(["sweep", "--config", "does_not_exist.json", "--out", "x.csv"]), 5)

    def test_Jobs(self):
        _saved = os.environ.pop("SQA_JOBS", None)
        try:
            self.assertEqual(resolve_Jobs(3), 3)
            os.environ["SQA_JOBS"] = "2"
            self.assertEqual(resolve_Jobs(3), 2)
            os.environ["SQA_JOBS"] = "two"
            with self.assertRaises(ConfigException):
                resolve_Jobs(1)
            os.environ["SQA_JOBS"] = "0"
            with self.assertRaises(ConfigException):
                resolve_Jobs(1)
        finally:
            os.environ.pop("SQA_JOBS", None)
            if _saved is not None:
                os.environ["SQA_JOBS"] = _saved

    def tearDown(self) -> None:
        if os.path.isfile(self.__instancePath):
            os.remove(self.__instancePath)


class TestCommands(unittest.TestCase):

    def setUp(self):
        self.__folder = os.path.join(os.getcwd(), "test_cli_outputs")
        os.makedirs(self.__folder, exist_ok=True)

    def __path(self, _name: str) -> str:
        return os.path.join(self.__folder, _name)

    def test_GenInstanceIsDeterministic(self):
        for _name in ("a.txt", "b.txt"):
            self.assertEqual(run_Main(["gen-instance", "--width", "3", "--height", "3", "--periodic", "--seed", "5",
                                       "--out", self.__path(_name)]), 0)
        self.assertEqual(read_DataLines(self.__path("a.txt")), read_DataLines(self.__path("b.txt")))

    def test_GenerateAnnealSummarize(self):
        self.assertEqual(run_Main(["gen-instance", "--width", "3", "--height", "3", "--periodic", "--seed", "2",
                                   "--ground-energy", "--subsets-out", self.__path("subsets.txt"),
                                   "--out", self.__path("instance.txt")]), 0)
        for _mode in ("global", "semilocal"):
            self.assertEqual(run_Main(["anneal", "--instance", self.__path("instance.txt"), "--driver", "fi",
                                       "--beta", "4", "--m-slices", "8", "--mode", _mode,
                                       "--subsets", self.__path("subsets.txt"), "--t-final", "1e3", "--seed", "1",
                                       "--out", self.__path(f"result_{_mode}.csv"),
                                       "--trace-out", self.__path(f"trace_{_mode}.csv")]), 0)

        _result, _config = read_ResultCSV(self.__path("result_global.csv"))
        self.assertEqual(list(_result.columns), RESULT_COLUMNS)
        self.assertEqual(_result.loc[0, "t_final"], 1000)
        self.assertGreaterEqual(_result.loc[0, "e_residual"], 0.0)
        self.assertEqual(_config.command, "anneal")
        self.assertEqual(_config.params["seed"], 1)
        _trace, _ = read_ResultCSV(self.__path("trace_global.csv"))
        self.assertEqual(list(_trace.columns), ["t", "gamma", "lambda", "emin", "emean", "nbar"])
        self.assertEqual(len(_trace), 33)

        self.assertEqual(run_Main(["summarize", "--results", self.__path("result_global.csv"),
                                   self.__path("result_semilocal.csv"), "--out-dir", self.__folder]), 0)
        _groups, _ = read_ResultCSV(self.__path("groups.csv"))
        self.assertEqual(sorted(_groups["mode"]), ["global", "semilocal"])
        self.assertTrue(os.path.isfile(self.__path("monotonicity.csv")))
        self.assertEqual(run_Main(["summarize"]), 2)

    def test_AnnealDefaults(self):
        # no instance and no seed: a random 10x10 instance from instance seed 0, chain seed 0
        self.assertEqual(run_Main(["anneal", "--driver", "fi", "--gamma0", "1", "--lambda0", "1", "--beta", "20",
                                   "--trotter-step", "0.3125", "--t-final", "200",
                                   "--out", self.__path("defaults.csv")]), 0)
        _result, _config = read_ResultCSV(self.__path("defaults.csv"))
        self.assertEqual(len(_result), 1)
        self.assertEqual(_result.loc[0, "instance"], "sq10x10o_s0")
        self.assertEqual(_result.loc[0, "M"], 64)
        self.assertEqual(_config.params["seed"], 0)

    def test_Sweep(self):
        self.assertEqual(run_Main(["sweep", "--config", "configs/testconfigs/config_testsweepinstances.json",
                                   "--out", self.__path("sweep.csv"), "--failures-out", self.__path("failures.csv"),
                                   "--no-progress"]), 0)
        _results, _config = read_ResultCSV(self.__path("sweep.csv"))
        self.assertEqual(len(_results), 3)
        self.assertEqual(_config.command, "sweep")
        _failures, _ = read_ResultCSV(self.__path("failures.csv"))
        self.assertEqual(len(_failures), 0)

    def test_PhaseScan(self):
        self.assertEqual(run_Main(["phase-scan", "--ferro-chain", "4", "--beta", "1", "--lambdas", "0.2,0.6",
                                   "--gammas", "0.5", "--n-thermalize", "20", "--n-measure", "50", "--seed", "3",
                                   "--no-progress", "--out", self.__path("scan.csv"),
                                   "--boundary-out", self.__path("boundary.csv")]), 0)
        _scan, _ = read_ResultCSV(self.__path("scan.csv"))
        self.assertEqual(list(_scan.columns), PHASE_COLUMNS)
        self.assertEqual(list(_scan["lambda"]), [0.2, 0.6])
        self.assertTrue(os.path.isfile(self.__path("boundary.csv")))

    def tearDown(self) -> None:
        shutil.rmtree(self.__folder, ignore_errors=True)
