'''
Created on: 17 Oct 2026
@desc
    This module implements the ManagerParallel class.
    It runs independent tasks on a pool of worker processes, or inline when a single worker is asked for.
'''

import concurrent.futures
from typing import Any, Callable, Optional

from tqdm import tqdm

from src.sim.imanager import EManagerReqType, IManager
from src.simlogging.ilogger import ELogType, ILogger


class ManagerParallel(IManager):
    '''
    @desc
    Executes every task with the worker function. A failing task is recorded and the others go on.
    Results are kept in task order whatever the completion order is.
    '''
    __tasks: 'list[Any]'
    __worker: Callable
    __numOfWorkers: int
    __logger: Optional[ILogger]
    __description: str
    __showProgress: bool
    __results: 'list[Any]'
    __failures: 'list[tuple[int, str]]'

    def __get_Results(self, **_kwargs) -> 'list[tuple[int, Any]]':
        '''
        @desc
            Outcomes of the successful tasks in task order
        @return
            List of (task index, worker return)
        '''
        _failed = {_f[0] for _f in self.__failures}
        return [(_i, _r) for _i, _r in enumerate(self.__results) if _i not in _failed]

    def __get_Failures(self, **_kwargs) -> 'list[tuple[int, str]]':
        '''
        @return
            List of (task index, error message)
        '''
        return list(self.__failures)

    __reqHandlerDictionary = {
        EManagerReqType.GET_RESULTS: __get_Results,
        EManagerReqType.GET_FAILURES: __get_Failures
    }

    def req_Manager(
            self,
            _reqType: EManagerReqType,
            **_kwargs):
        '''
        @desc
           Send a request to the manager through this method
        @param[in]  _reqType
            Type of the request
        @param[in]  _kwargs
            Keyworded arguments that are passed to the handler function
        @return
            Returns the results (if any)
        '''
        return self.__reqHandlerDictionary[_reqType](self, **_kwargs)

    def __record_Failure(self, _index: int, _error: BaseException) -> None:
        self.__failures.append((_index, str(_error)))
        if self.__logger is not None:
            self.__logger.write_Log(f"TaskFailed. task: [{_index}] error: [{_error}]", ELogType.LOGERROR, None, "ManagerParallel")

    def __init__(
            self,
            **_simEnv):
        '''
        @desc
            Constructor of the class.
        @param[in]  _simEnv
            Run environment embedded in keyworded arguments as follows
                @key    tasks
                    List of picklable task records
                @key    worker
                    Top-level function called with one task, returns its outcome
                @key    numOfWorkers
                    Number of worker processes. 1 runs the tasks in this process.
                @key    logger
                    Optional logger for failed tasks
                @key    description
                    Optional label of the progress bar
                @key    showProgress
                    Optional, False hides the progress bar
        '''
        self.__tasks = list(_simEnv["tasks"])
        self.__worker = _simEnv["worker"]
        self.__numOfWorkers = max(1, int(_simEnv.get("numOfWorkers", 1)))
        self.__logger = _simEnv.get("logger", None)
        self.__description = _simEnv.get("description", "Run")
        self.__showProgress = bool(_simEnv.get("showProgress", True))
        self.__results = [None] * len(self.__tasks)
        self.__failures = []

    def run_Sim(self):
        '''
        @desc
            Executes all the tasks
        '''
        _progressBar = tqdm(total=len(self.__tasks), desc=self.__description, disable=not self.__showProgress)
        if self.__numOfWorkers > 1 and len(self.__tasks) > 1:
            with concurrent.futures.ProcessPoolExecutor(max_workers=self.__numOfWorkers) as executor:
                _futures = {executor.submit(self.__worker, _task): _index for _index, _task in enumerate(self.__tasks)}
                for _future in concurrent.futures.as_completed(_futures):
                    _index = _futures[_future]
                    try:
                        self.__results[_index] = _future.result()
                    except Exception as e:
                        self.__record_Failure(_index, e)
                    _progressBar.update(1)
        else:
            for _index, _task in enumerate(self.__tasks):
                try:
                    self.__results[_index] = self.__worker(_task)
                except Exception as e:
                    self.__record_Failure(_index, e)
                _progressBar.update(1)
        self.__failures.sort()
        _progressBar.close()
