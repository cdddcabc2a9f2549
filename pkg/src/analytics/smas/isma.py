'''
Created on: 17 Oct 2026
@desc
    Base class of the single model analyzers (SMAs). An SMA turns the output of one
    producer, a run log or a result table, into a pandas table.
'''

from abc import ABC, abstractmethod
from pandas import DataFrame


class ISMA(ABC):
    '''
    Every analyzer of a single producer derives from this class.
    Construction only records the inputs. Parsing happens in Execute(),
    and afterwards get_Results() hands out the parsed table.
    '''

    @property
    @abstractmethod
    def iName(self) -> str:
        """
        @desc
            Class name of the analyzer, used as its key in the analytics pipeline
        """
        pass

    @property
    @abstractmethod
    def supportedModelNames(self) -> 'list[str]':
        '''
        @desc
            Names of the producers (e.g., ModelAnnealer) whose log lines the analyzer understands
        '''
        pass

    @property
    @abstractmethod
    def supportedSMANames(self) -> 'list[str]':
        '''
        @desc
            Names of other analyzers whose tables can be fed into this one. Usually empty.
        '''
        pass

    @abstractmethod
    def call_APIs(
            self,
            _apiName: str,
            **_kwargs):
        '''
        @desc
            Dispatches a named query on the parsed table, e.g., the trace of one chain
        @param[in] _apiName
            Query name, one of the keys of the analyzer's API dictionary
        @param[in] _kwargs
            Arguments forwarded to the query handler
        @return
            Whatever the handler returns
        '''
        pass

    @abstractmethod
    def Execute(self):
        """
        Reads and parses the inputs.
        """
        pass

    @abstractmethod
    def get_Results(self) -> DataFrame:
        '''
        @return
            The parsed table. Empty before Execute() has run.
        '''
        pass
