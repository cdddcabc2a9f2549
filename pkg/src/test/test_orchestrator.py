'''
Created on: 17 Oct 2026
@desc
    We conduct the unit test here for the Orchestrator class
'''

import unittest

from src.loopcluster.updatemode import EUpdateMode
from src.sim.annealer import EDriver
from src.sim.orchestrator import Orchestrator
from src.sim.simexceptions import ConfigException, SQAIOException


class TestOrchestrator(unittest.TestCase):

    def setUp(self):
        self.__orchestrator = Orchestrator("configs/testconfigs/config_testorchestrator.json")

    def test_GetBeforeCreate(self):
        with self.assertRaises(ConfigException):
            self.__orchestrator.get_SimEnv()

    def test_CreateSimEnv(self):
        self.__orchestrator.create_SimEnv()
        _simEnv = self.__orchestrator.get_SimEnv()

        self.assertListEqual([_i.name for _i in _simEnv["instances"]], ["sq3x2o_s1", "sq3x2o_s2"])
        _matrix = _simEnv["matrix"]
        self.assertEqual(len(_matrix.get_Configs()), 8)
        self.assertEqual(_matrix.drivers[0].driver, EDriver.TF)
        self.assertIsNone(_matrix.drivers[0].gamma0)
        self.assertEqual(_matrix.drivers[1].lambda0, 1.0)
        self.assertTupleEqual(_matrix.modes, (EUpdateMode.GLOBAL, EUpdateMode.SEMI_LOCAL))

        _tasks = _simEnv["tasks"]
        self.assertEqual(len(_tasks), 32)
        self.assertListEqual([_t.seed for _t in _tasks[:4]], [10, 11, 10, 11])
        self.assertListEqual([_t.configIndex for _t in _tasks[:4]], [0, 0, 1, 1])
        self.assertTrue(all(_t.config.mSlices == 8 for _t in _tasks))
        # ground energies are enumerated once while building the tasks
        self.assertTrue(all(_t.instance.groundEnergy is not None for _t in _tasks))
        self.assertEqual(_simEnv["logSetup"]["loglevel"], "error")
        self.assertEqual(_simEnv["config"]["generate"]["width"], 3)

    def test_BadConfigs(self):
        for _path in ("configs/testconfigs/config_testsweepbad.json",
                      "configs/testconfigs/config_testsweepbadmode.json"):
            with self.assertRaises(ConfigException):
                Orchestrator(_path).create_SimEnv()
        with self.assertRaises(SQAIOException):
            Orchestrator("configs/testconfigs/does_not_exist.json").create_SimEnv()
