'''
Created on: 17 Oct 2026
@desc
    Base class of the run managers that execute a batch of independent annealing jobs
'''

from abc import ABC, abstractmethod
from enum import Enum


class EManagerReqType(Enum):
    '''
    What can be asked of a manager after the batch has run
    '''
    GET_RESULTS = 0
    GET_FAILURES = 1


class IManager(ABC):
    '''
    A manager owns a list of jobs. run_Sim() executes all of them and keeps
    the result rows and the failures apart.
    '''
    @abstractmethod
    def req_Manager(
            self,
            _reqType: EManagerReqType,
            **_kwargs):
        '''
        @param[in]  _reqType
            Which collection to return
        @return
            The result rows or the failure records, in job order
        '''
        pass

    @abstractmethod
    def run_Sim(self):
        '''
        @desc
            Runs every job. A failing job is recorded, it doesn't stop the batch.
        '''
        pass
