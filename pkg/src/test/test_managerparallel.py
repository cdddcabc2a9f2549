'''
Created on: 17 Oct 2026
@desc
    We conduct the unit test here for the ManagerParallel class
'''

import unittest

from src.sim.imanager import EManagerReqType
from src.sim.managerparallel import ManagerParallel
from src.sim.simexceptions import ConfigException


def square_Task(_task: int) -> int:
    if _task < 0:
        raise ConfigException(f"Negative task {_task}")
    return _task * _task


class TestManagerParallel(unittest.TestCase):

    def test_Inline(self):
        _manager = ManagerParallel(tasks=[3, -1, 2], worker=square_Task, numOfWorkers=1, showProgress=False)
        _manager.run_Sim()
        self.assertListEqual(_manager.req_Manager(EManagerReqType.GET_RESULTS), [(0, 9), (2, 4)])
        _failures = _manager.req_Manager(EManagerReqType.GET_FAILURES)
        self.assertEqual(len(_failures), 1)
        self.assertEqual(_failures[0][0], 1)
        self.assertIn("Negative task -1", _failures[0][1])

    def test_Pool(self):
        _tasks = list(range(12)) + [-5]
        _manager = ManagerParallel(tasks=_tasks, worker=square_Task, numOfWorkers=3, showProgress=False)
        _manager.run_Sim()
        self.assertListEqual(_manager.req_Manager(EManagerReqType.GET_RESULTS), [(_i, _i * _i) for _i in range(12)])
        self.assertListEqual([_f[0] for _f in _manager.req_Manager(EManagerReqType.GET_FAILURES)], [12])
