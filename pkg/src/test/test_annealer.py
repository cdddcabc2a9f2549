'''
Created on: 17 Oct 2026
@desc
    We conduct the unit test here for the annealing schedules and annealing runs
'''

import unittest

from src.loopcluster.updatemode import make_GlobalMode, make_SemiLocalMode
from src.problem.couplinggraph import color_Edges
from src.problem.squarelattice import build_FerroChain, default_SquareSubsets, generate_Instance
from src.sim.annealer import N_CHECKPOINTS, RESULT_COLUMNS, EDriver, LinearSchedule, compute_Cost, \
    get_CheckpointTimes, make_Schedule, resolve_GroundEnergy, run_Annealing
from src.sim.loggerinits import create_Logger
from src.sim.simexceptions import ConfigException
from src.worldline.trotter import make_TrotterParams


class TestSchedule(unittest.TestCase):

    def test_Linear(self):
        _schedule = make_Schedule(EDriver.FI, 100)
        self.assertEqual(_schedule.get_Parameters(0), (1.0, 1.0))
        self.assertEqual(_schedule.get_Parameters(25), (0.75, 0.75))
        self.assertEqual(_schedule.get_Parameters(100), (0.0, 0.0))
        self.assertEqual(_schedule.get_Parameters(150), (0.0, 0.0))
        self.assertEqual(make_Schedule(EDriver.TF, 10, 3.0).get_Parameters(0), (3.0, 0.0))
        self.assertEqual(make_Schedule(EDriver.PURE_XX, 10).get_Parameters(5), (0.0, 0.5))

    def test_DriverConsistency(self):
        with self.assertRaises(ConfigException):
            make_Schedule(EDriver.TF, 10, _lambda0=1.0)
        with self.assertRaises(ConfigException):
            make_Schedule(EDriver.PURE_XX, 10, _gamma0=0.5)
        with self.assertRaises(ConfigException):
            LinearSchedule(1.0, 0.0, -1)
        with self.assertRaises(ConfigException):
            LinearSchedule(-1.0, 0.0, 10)
        with self.assertRaises(ValueError):
            EDriver("yy")

    def test_CheckpointTimes(self):
        self.assertListEqual(get_CheckpointTimes(5), [0, 1, 2, 3, 4, 5])
        _times = get_CheckpointTimes(100000)
        self.assertEqual(len(_times), N_CHECKPOINTS + 1)
        self.assertEqual(_times[:2], [0, 1])
        self.assertEqual(_times[-1], 100000)
        self.assertTrue(all(_a < _b for _a, _b in zip(_times[:-1], _times[1:])))
        _short = get_CheckpointTimes(40)
        self.assertEqual(len(_short), N_CHECKPOINTS + 1)
        self.assertTrue(all(_a < _b for _a, _b in zip(_short[:-1], _short[1:])))


class TestAnnealer(unittest.TestCase):

    def setUp(self):
        self.__instance = generate_Instance(3, 3, True, 6)
        self.__params = make_TrotterParams(color_Edges(self.__instance.graph), 4.0, 8)
        self.__logger = create_Logger(None, "TestAnnealer")

    def test_ZeroLengthRun(self):
        _result = run_Annealing(self.__instance, self.__params, make_Schedule(EDriver.FI, 0), make_GlobalMode(),
                                EDriver.FI, 1, self.__logger)
        self.assertEqual(_result.nbar, 0.0)
        self.assertEqual(_result.cost, 0.0)
        self.assertEqual(len(_result.trace), 1)
        self.assertEqual(_result.trace[0].t, 0)
        self.assertGreaterEqual(_result.eResidual, -1e-9)

    def test_ResultRow(self):
        _result = run_Annealing(self.__instance, self.__params, make_Schedule(EDriver.TF, 200), make_GlobalMode(),
                                EDriver.TF, 3, self.__logger)
        _row = _result.to_Row()
        self.assertListEqual(list(_row.keys()), RESULT_COLUMNS)
        self.assertEqual(_row["instance"], "sq3x3p_s6")
        self.assertEqual(_row["driver"], "tf")
        self.assertEqual(_row["mode"], "global")
        self.assertEqual(_row["M"], 8)
        self.assertAlmostEqual(_result.cost, compute_Cost(200, _result.nbar))
        self.assertGreater(_result.nbar, 0.0)
        self.assertGreaterEqual(_result.eResidual, -1e-9)
        self.assertGreaterEqual(_result.eResidualMean, _result.eResidual - 1e-9)
        self.assertAlmostEqual(_result.eResidual, _result.eMin - resolve_GroundEnergy(self.__instance))
        self.assertListEqual([_c.t for _c in _result.trace], get_CheckpointTimes(200))

    def test_Deterministic(self):
        _runs = [run_Annealing(self.__instance, self.__params, make_Schedule(EDriver.FI, 300),
                               make_SemiLocalMode(default_SquareSubsets(self.__instance.graph, 3, 3)),
                               EDriver.FI, 9, self.__logger).to_Row() for _ in range(2)]
        self.assertDictEqual(_runs[0], _runs[1])

    def test_FerroChainReachesGroundState(self):
        _instance = build_FerroChain(4)
        _params = make_TrotterParams(color_Edges(_instance.graph), 4.0, 8)
        _result = run_Annealing(_instance, _params, make_Schedule(EDriver.TF, 2000), make_GlobalMode(),
                                EDriver.TF, 0, self.__logger)
        self.assertEqual(resolve_GroundEnergy(_instance), -4.0)
        self.assertAlmostEqual(_result.eResidual, 0.0)

    def test_InvalidRuns(self):
        with self.assertRaises(ConfigException):
            run_Annealing(self.__instance, self.__params, make_Schedule(EDriver.FI, 10), make_GlobalMode(),
                          EDriver.TF, 0, self.__logger)
        # delta*Lambda = 1
        with self.assertRaises(ConfigException):
            run_Annealing(self.__instance, self.__params, make_Schedule(EDriver.PURE_XX, 10, _lambda0=2.0),
                          make_GlobalMode(), EDriver.PURE_XX, 0, self.__logger)

    def test_GroundEnergyFromFile(self):
        self.assertEqual(resolve_GroundEnergy(self.__instance.with_GroundEnergy(-7.5)), -7.5)
