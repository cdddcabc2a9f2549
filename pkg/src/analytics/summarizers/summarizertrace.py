'''
Created on: 17 Oct 2026
@desc
    This module implements the summarizer of checkpoint traces (see smaannealtrace.py).
    It provides:

        1. trace: per checkpoint time, the number of chains and the median and quartiles of emin and emean.
        2. finalEnergies: emin and emean of every chain at its last checkpoint.
'''

import pandas as pd

from src.analytics.smas.isma import ISMA
from src.analytics.summarizers.isummarizers import ISummarizer
from src.sim.simexceptions import ConfigException


class SummarizerTrace(ISummarizer):
    @property
    def iName(self) -> 'str':
        return self.__class__.__name__

    @property
    def supportedSMANames(self) -> 'list[str]':
        return ['SMAAnnealTrace']

    @property
    def supportedSummarizerNames(self) -> 'list[str]':
        return []

    def call_APIs(
            self,
            _apiName: str,
            **_kwargs):
        raise ConfigException(f"API {_apiName} is not supported by {self.iName}")

    def Execute(self):
        """
        This method executes the tasks that needed to be performed by the summarizer.
        """
        _traces = pd.concat([_sma.get_Results() for _sma in self.__smaTraces], ignore_index=True)
        _grouped = _traces.groupby('t', sort=True)
        _trace = pd.DataFrame({
            'chains': _grouped.size(),
            'gamma': _grouped['gamma'].first(),
            'lambda': _grouped['lambda'].first(),
            'emin_q1': _grouped['emin'].quantile(0.25),
            'emin_median': _grouped['emin'].median(),
            'emin_q3': _grouped['emin'].quantile(0.75),
            'emean_median': _grouped['emean'].median(),
        }).reset_index()

        # chain indices restart in every log file
        _finals = []
        for _fileIndex, _sma in enumerate(self.__smaTraces):
            _last = _sma.get_Results().groupby('chain', sort=True).tail(1)
            _finals.append(_last.assign(file=_fileIndex)[['file', 'chain', 't', 'emin', 'emean']])
        self.__results = {
            'trace': _trace,
            'finalEnergies': pd.concat(_finals, ignore_index=True),
        }

    def get_Results(self) -> 'dict':
        return self.__results

    def __init__(self,
                 _smaTraces: 'list[ISMA]'):
        '''
        @param[in] _smaTraces
            Executed SMAAnnealTrace instances, e.g., one per run log
        '''
        self.__smaTraces = list(_smaTraces)
        self.__results = {}


def init_SummarizerTrace(**_kwargs) -> ISummarizer:
    """
    @desc
        Initializes the SummarizerTrace class
    @param[in] _kwargs
        @key traceSMAs
            List of executed SMAAnnealTrace instances
    @return
        An instance of the SummarizerTrace class
    """
    if 'traceSMAs' not in _kwargs or len(_kwargs['traceSMAs']) == 0:
        raise ConfigException('SummarizerTrace: No traceSMAs provided')
    return SummarizerTrace(_kwargs['traceSMAs'])
