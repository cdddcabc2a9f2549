'''
Created on: 17 Oct 2026
@desc
    This is the implementation of the Single Model Analyzer (SMA) for the result tables of anneal and sweep runs
    (src file: sim/batchrun.py).

    The SMA returns the result rows with the columns
    instance, driver, mode, beta, M, t_final, seed, e_min, e_mean, e_residual, nbar, cost
    Rows whose residual energy is unknown (no exact ground-state energy) are dropped.
'''

import dask.dataframe as dd
from pandas import DataFrame

from src.analytics.smas.isma import ISMA
from src.sim.annealer import RESULT_COLUMNS
from src.sim.simexceptions import ConfigException, SQAException


class SMAResultTable(ISMA):
    '''
    Reads one or more result CSV files (the provenance comment lines are skipped) into one table
    '''

    __supportedSMANames = []
    __supportedModelNames = ['batch_run']

    @property
    def iName(self) -> str:
        return self.__class__.__name__

    @property
    def supportedModelNames(self) -> 'list[str]':
        return self.__supportedModelNames

    @property
    def supportedSMANames(self) -> 'list[str]':
        return self.__supportedSMANames

    def call_APIs(
            self,
            _apiName: str,
            **_kwargs):
        '''
        This SMA has no API
        '''
        raise ConfigException(f"API {_apiName} is not supported by {self.iName}")

    def Execute(self):
        """
        This method executes the tasks that needed to be performed by the SMA.
        """
        _data = dd.read_csv(self.__resultFiles, comment='#', skipinitialspace=True,
                            dtype={'instance': str, 'driver': str, 'mode': str})
        _missing = [_c for _c in RESULT_COLUMNS if _c not in _data.columns]
        if len(_missing) > 0:
            raise ConfigException(f"The result files lack the columns {_missing}")
        _results = _data[RESULT_COLUMNS].compute().reset_index(drop=True)
        self.__nDropped = int(_results['e_residual'].isna().sum())
        self.__result = _results.dropna(subset=['e_residual']).reset_index(drop=True)

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

    @property
    def nDropped(self) -> int:
        return self.__nDropped

    def __init__(self,
                 _resultFiles: 'list[str]'):
        '''
        @desc
            Constructor
        @param[in] _resultFiles
            Paths to result CSV files
        '''
        self.__resultFiles = list(_resultFiles)
        self.__result = None
        self.__nDropped = 0


def init_SMAResultTable(**_kwargs) -> ISMA:
    '''
    @desc
        Initializes the SMAResultTable class
    @param[in] _kwargs
        @key resultPaths
            Path or list of paths to result CSV files
    @return
        An instance of the SMAResultTable class
    '''
    if 'resultPaths' not in _kwargs:
        raise ConfigException('The keyworded argument resultPaths is missing')
    _paths = _kwargs['resultPaths']
    if isinstance(_paths, str):
        _paths = [_paths]
    return SMAResultTable(_paths)
