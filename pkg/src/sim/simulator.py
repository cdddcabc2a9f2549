'''
Created on: 17 Oct 2026
@desc
    This module implements the simulator class. It's the face of the batch pipeline.
'''

from typing import Optional

import pandas as pd

from src.sim.batchrun import AnnealTask, collect_BatchTables, execute_AnnealTask
from src.sim.imanager import EManagerReqType
from src.sim.managerparallel import ManagerParallel
from src.sim.orchestrator import Orchestrator
from src.sim.simexceptions import SQAException
from src.simlogging.ilogger import ILogger


class Simulator():
    '''
    This is the entry class of the sweep pipeline.
    It invokes the orchestrator and hands over the task list to the manager.
    '''
    __configFilePath: str
    __orchestrator: Orchestrator
    __manager: ManagerParallel
    __tasks: 'list[AnnealTask]'
    __simEnv: dict
    __executed: bool

    def __init__(
            self,
            _configfilepath: str,
            _numWorkers: int = 1,
            _logger: Optional[ILogger] = None,
            _showProgress: bool = True) -> None:
        '''
        @desc
            Constructor of the simulator class.
        @param[in]  _configfilepath
            File path to the sweep configuration file
        @param[in]  _numWorkers
            Number of workers to be used for parallel execution
        @param[in]  _logger
            Logger of the batch, receives the failed runs
        @param[in]  _showProgress
            Progress bar switch
        '''
        self.__configFilePath = _configfilepath

        #  invoke the orchestrator to create the batch environment
        self.__orchestrator = Orchestrator(self.__configFilePath)
        self.__orchestrator.create_SimEnv()
        self.__simEnv = self.__orchestrator.get_SimEnv()
        self.__tasks = self.__simEnv["tasks"]

        # hand over the tasks to the manager
        self.__manager = ManagerParallel(
            tasks=self.__tasks,
            worker=execute_AnnealTask,
            numOfWorkers=_numWorkers,
            logger=_logger,
            description="Anneal runs",
            showProgress=_showProgress)
        self.__executed = False

    @property
    def simEnv(self) -> dict:
        return self.__simEnv

    def execute(self):
        '''
        @desc
            Executes every run of the sweep
        '''
        self.__manager.run_Sim()
        self.__executed = True

    def get_Results(self) -> 'tuple[pd.DataFrame, pd.DataFrame]':
        '''
        @return
            (result table, failure table)
        '''
        if not self.__executed:
            raise SQAException("The sweep has not been executed yet")
        return collect_BatchTables(self.__tasks, self.__manager)

    def req_Manager(
            self,
            _reqType: EManagerReqType,
            **_kwargs):
        '''
        @desc
            Forwards a request to the manager
        '''
        return self.__manager.req_Manager(_reqType, **_kwargs)
