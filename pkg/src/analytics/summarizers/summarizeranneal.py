'''
Created on: 17 Oct 2026
@desc
    This module implements the summarizer of annealing result tables. For the input, see smaresulttable.py.
    It provides summaries for the following metrics:

        1. groups: per (driver, mode, beta, M, t_final) the number of runs and the median, first and third quartile
           of the residual energy and of the cost.
        2. monotonicity: for consecutive t_final values of every (driver, mode, beta, M), a paired sign test of
           "the residual energy increases with t_final". Pairs are matched by instance and seed; ties are dropped.
        3. driverComparison: at the largest t_final shared by two drivers, a one-sided paired sign test in each direction.
'''

import itertools

import numpy as np
import pandas as pd
from scipy.stats import binomtest

from src.analytics.smas.isma import ISMA
from src.analytics.summarizers.isummarizers import ISummarizer
from src.sim.simexceptions import ConfigException, SQAException

GROUP_KEYS = ['driver', 'mode', 'beta', 'M', 't_final']
SERIES_KEYS = ['driver', 'mode', 'beta', 'M']
PAIR_KEYS = ['instance', 'seed']
DEFAULT_SIGNIFICANCE = 0.05


def compute_SignTest(_nPositive: int, _nNegative: int) -> float:
    '''
    @desc
        One-sided sign test, p-value of seeing at least _nPositive positive signs under no effect
    '''
    _n = int(_nPositive) + int(_nNegative)
    if _n == 0:
        return 1.0
    return float(binomtest(int(_nPositive), _n, 0.5, alternative='greater').pvalue)


def _quartiles(_values: pd.Series) -> 'tuple[float, float, float]':
    _q = np.quantile(_values.to_numpy(dtype=float), [0.25, 0.5, 0.75])
    return float(_q[0]), float(_q[1]), float(_q[2])


def _pair_Runs(
        _left: pd.DataFrame,
        _right: pd.DataFrame) -> 'tuple[int, int]':
    '''
    @return
        (runs where right < left, runs where right > left) on the residual energy of matched pairs
    '''
    _merged = _left[PAIR_KEYS + ['e_residual']].merge(
        _right[PAIR_KEYS + ['e_residual']], on=PAIR_KEYS, suffixes=('_left', '_right'))
    _difference = _merged['e_residual_right'] - _merged['e_residual_left']
    return int((_difference < 0).sum()), int((_difference > 0).sum())


class SummarizerAnneal(ISummarizer):
    @property
    def iName(self) -> 'str':
        return self.__class__.__name__

    @property
    def supportedSMANames(self) -> 'list[str]':
        return ['SMAResultTable']

    @property
    def supportedSummarizerNames(self) -> 'list[str]':
        return []

    def __summarize_Groups(self, _table: pd.DataFrame) -> pd.DataFrame:
        _rows = []
        for _key, _group in _table.groupby(GROUP_KEYS, sort=True):
            _eQ1, _eMedian, _eQ3 = _quartiles(_group['e_residual'])
            _cQ1, _cMedian, _cQ3 = _quartiles(_group['cost'])
            _rows.append(dict(zip(GROUP_KEYS, _key),
                              count=len(_group),
                              e_residual_q1=_eQ1, e_residual_median=_eMedian, e_residual_q3=_eQ3,
                              cost_q1=_cQ1, cost_median=_cMedian, cost_q3=_cQ3,
                              nbar_median=float(_group['nbar'].median())))
        return pd.DataFrame(_rows)

    def __test_Monotonicity(self, _table: pd.DataFrame) -> pd.DataFrame:
        '''
        @desc
            The residual energy is called monotone between two t_final values unless the sign test finds a significant increase
        '''
        _rows = []
        for _key, _series in _table.groupby(SERIES_KEYS, sort=True):
            _tFinals = sorted(_series['t_final'].unique())
            for _tFrom, _tTo in zip(_tFinals[:-1], _tFinals[1:]):
                _nDecrease, _nIncrease = _pair_Runs(_series[_series['t_final'] == _tFrom],
                                                    _series[_series['t_final'] == _tTo])
                _pValue = compute_SignTest(_nIncrease, _nDecrease)
                _rows.append(dict(zip(SERIES_KEYS, _key),
                                  t_from=int(_tFrom), t_to=int(_tTo),
                                  n_pairs=_nDecrease + _nIncrease,
                                  n_decrease=_nDecrease, n_increase=_nIncrease,
                                  p_increase=_pValue,
                                  monotone=_pValue >= self.__significance))
        return pd.DataFrame(_rows, columns=SERIES_KEYS + ['t_from', 't_to', 'n_pairs', 'n_decrease',
                                                          'n_increase', 'p_increase', 'monotone'])

    def __compare_Drivers(self, **_kwargs) -> pd.DataFrame:
        '''
        @desc
            Paired comparison of two drivers at the largest t_final both of them ran
        @param[in]  _kwargs
            @key driverA
                Name of the first driver, e.g., fi
            @key driverB
                Name of the second driver, e.g., tf
        @return
            One row per (mode, beta, M) with the counts of pairs where each driver ended lower and the one-sided p-values
        '''
        _table = self.__table
        _driverA, _driverB = str(_kwargs['driverA']), str(_kwargs['driverB'])
        _rows = []
        for _key, _group in _table.groupby(['mode', 'beta', 'M'], sort=True):
            _runsA = _group[_group['driver'] == _driverA]
            _runsB = _group[_group['driver'] == _driverB]
            _shared = set(_runsA['t_final']) & set(_runsB['t_final'])
            if len(_shared) == 0:
                continue
            _tFinal = max(_shared)
            _runsA = _runsA[_runsA['t_final'] == _tFinal]
            _runsB = _runsB[_runsB['t_final'] == _tFinal]
            _nABetter, _nBBetter = _pair_Runs(_runsB, _runsA)
            _rows.append({
                'mode': _key[0], 'beta': _key[1], 'M': _key[2], 't_final': int(_tFinal),
                'driver_a': _driverA, 'driver_b': _driverB,
                'n_pairs': _nABetter + _nBBetter, 'n_a_better': _nABetter, 'n_b_better': _nBBetter,
                'median_a': float(_runsA['e_residual'].median()),
                'median_b': float(_runsB['e_residual'].median()),
                'p_a_better': compute_SignTest(_nABetter, _nBBetter),
                'p_b_better': compute_SignTest(_nBBetter, _nABetter)})
        return pd.DataFrame(_rows, columns=['mode', 'beta', 'M', 't_final', 'driver_a', 'driver_b', 'n_pairs',
                                            'n_a_better', 'n_b_better', 'median_a', 'median_b',
                                            'p_a_better', 'p_b_better'])

    __apiHandlerDictionary = {
        "compare_Drivers": __compare_Drivers
    }

    def call_APIs(
            self,
            _apiName: str,
            **_kwargs):
        '''
        This method acts as an API interface of the summarizer.
        @param[in] _apiName
            compare_Drivers
        @param[in]  _kwargs
            Keyworded arguments that are passed to the corresponding API handler
        @return
            The API return
        '''
        if self.__table is None:
            raise SQAException('The summarizer has not been executed yet')
        if _apiName not in self.__apiHandlerDictionary:
            raise ConfigException(f"API {_apiName} is not supported by {self.iName}")
        return self.__apiHandlerDictionary[_apiName](self, **_kwargs)

    def Execute(self):
        """
        This method executes the tasks that needed to be performed by the summarizer.
        """
        self.__table = self.__smaResultTable.get_Results()
        _dict = {}
        _dict['groups'] = self.__summarize_Groups(self.__table)
        _dict['monotonicity'] = self.__test_Monotonicity(self.__table)

        _comparisons = [self.__compare_Drivers(driverA=_a, driverB=_b)
                        for _a, _b in itertools.combinations(sorted(self.__table['driver'].unique()), 2)]
        _dict['driverComparison'] = pd.concat(_comparisons, ignore_index=True) if len(_comparisons) > 0 else pd.DataFrame()
        self.__results = _dict

    def get_Results(self) -> 'dict':
        '''
        @desc
            This method returns the results in the form of a dictionary where the key is the name of the metric and the value is the results.
        @return
            Dictionary with the DataFrames groups, monotonicity and driverComparison
        '''
        return self.__results

    def __init__(self,
                 _smaResultTable: ISMA,
                 _significance: float = DEFAULT_SIGNIFICANCE):
        '''
        @desc
            Constructor of the class
        @param[in] _smaResultTable
            Executed SMAResultTable
        @param[in] _significance
            Level of the monotonicity sign test
        '''
        self.__smaResultTable = _smaResultTable
        self.__significance = float(_significance)
        self.__table = None
        self.__results = {}


def init_SummarizerAnneal(**_kwargs) -> ISummarizer:
    """
    @desc
        Initializes the SummarizerAnneal class
    @param[in] _kwargs
        Keyworded arguments that are passed to the constructor of the SummarizerAnneal class
        @key resultTableSMA
            The executed SMAResultTable
        @key significance
            Optional level of the monotonicity test, 0.05 by default
    @return
        An instance of the SummarizerAnneal class
    """
    if 'resultTableSMA' not in _kwargs:
        raise ConfigException('SummarizerAnneal: No resultTableSMA provided')
    return SummarizerAnneal(_kwargs['resultTableSMA'], _kwargs.get('significance', DEFAULT_SIGNIFICANCE))
