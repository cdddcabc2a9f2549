'''
Created on: 17 Oct 2026
@desc
    This is the implementation of the Single Model Analyzer (SMA) for the checkpoint trace of annealing runs
    (src file: sim/annealer.py).

    The SMA generates a dataframe with the following columns:

    1. chain
    2. t
    3. gamma
    4. lambda
    5. emin
    6. emean
    7. nbar

    The SMA is specifically interested in the following string:
    "AnnealCheckpoint. t: [int] gamma: [float] lambda: [float] emin: [float] emean: [float] nbar: [float]"
    (Note: The brackets in the log message are included as part of the string.)
    Every chain starts with its t = 0 checkpoint, which is how consecutive chains in one log file are told apart.
'''

import dask.dataframe as dd
import pandas as pd
from pandas import DataFrame

from src.analytics.smas.isma import ISMA
from src.sim.annealer import LOG_MODEL_NAME
from src.sim.simexceptions import ConfigException, SQAException

TRACE_COLUMNS = ['t', 'gamma', 'lambda', 'emin', 'emean', 'nbar']


class SMAAnnealTrace(ISMA):
    '''
    This class implements the SMA for the annealer. It takes the log of one or more annealing chains and
    returns the checkpoint trace of each chain.
    '''

    __supportedSMANames = []
    __supportedModelNames = [LOG_MODEL_NAME]

    @property
    def iName(self) -> str:
        """
        @type
            str
        @desc
            A string representing the name of the SMA class.
        """
        return self.__class__.__name__

    @property
    def supportedModelNames(self) -> 'list[str]':
        return self.__supportedModelNames

    @property
    def supportedSMANames(self) -> 'list[str]':
        return self.__supportedSMANames

    def __get_ChainTrace(self, **_kwargs) -> DataFrame:
        '''
        @desc
            Trace of a single chain
        @param[in]  _kwargs
            @key chain
                Index of the chain in the log file
        '''
        _trace = self.get_Results()
        return _trace[_trace['chain'] == int(_kwargs['chain'])].reset_index(drop=True)

    __apiHandlerDictionary = {
        "get_ChainTrace": __get_ChainTrace
    }

    def call_APIs(
            self,
            _apiName: str,
            **_kwargs):
        '''
        This method acts as an API interface of the SMA.
        An API offered by the SMA can be invoked through this method.
        @param[in] _apiName
            Name of the API. Each SMA should have a list of the API names.
        @param[in]  _kwargs
            Keyworded arguments that are passed to the corresponding API handler
        @return
            The API return
        '''
        if _apiName not in self.__apiHandlerDictionary:
            raise ConfigException(f"API {_apiName} is not supported by {self.iName}")
        return self.__apiHandlerDictionary[_apiName](self, **_kwargs)

    def Execute(self):
        """
        This method executes the tasks that needed to be performed by the SMA.
        """
        # log files of long runs are large, read them with dask
        _logData = dd.read_csv(self.__logFile, quotechar='"', delimiter=',', skipinitialspace=True, dtype=str)
        _annealData = _logData[_logData['modelName'] == LOG_MODEL_NAME]
        _interestingLogs = _annealData[_annealData['message'].str.contains('AnnealCheckpoint', regex=False)]

        _regex = r"\[(.*?)\]"
        _df = _interestingLogs['message'].str.extractall(_regex).compute()

        if len(_df) == 0:
            self.__result = pd.DataFrame(columns=['chain'] + TRACE_COLUMNS)
            return

        _results = _df.unstack().reset_index(drop=True)
        _results.columns = TRACE_COLUMNS
        _results = _results.apply(pd.to_numeric)
        _results['t'] = _results['t'].astype(int)
        _results.insert(0, 'chain', (_results['t'] == 0).cumsum() - 1)
        self.__result = _results

    def get_Results(self) -> DataFrame:
        '''
        @desc
            This method returns the results of the SMA in the form of a DataFrame table once it is executed.
        @return
            A DataFrame table containing the results of the SMA.
        '''
        if self.__result is None:
            raise SQAException('The SMA has not been executed yet')
        return self.__result

    def __init__(self,
                 _modelLogPath: str):
        '''
        @desc
            Constructor
        @param[in] _modelLogPath
            Path to the log file written by a file logger
        '''
        self.__logFile = _modelLogPath
        self.__result = None


def init_SMAAnnealTrace(**_kwargs) -> ISMA:
    '''
    @desc
        Initializes the SMAAnnealTrace class
    @param[in] _kwargs
        Keyworded arguments that are passed to the constructor of the SMAAnnealTrace class.
        It should have the following (key, value) pairs:
        @key modelLogPath
            Path to the log file
    @return
        An instance of the SMAAnnealTrace class
    '''
    if 'modelLogPath' not in _kwargs:
        raise ConfigException('The keyworded argument modelLogPath is missing')
    return SMAAnnealTrace(_kwargs['modelLogPath'])
