'''
Created on: 17 Oct 2026
@desc
    Base class of the summarizers. A summarizer reduces the tables of one or more
    SMAs to ensemble statistics.
'''

from abc import ABC, abstractmethod


class ISummarizer(ABC):
    '''
    Summarizers consume executed SMAs (or other summarizers) and publish
    named statistics tables, e.g., per-group medians or sign-test p-values.
    '''

    @property
    @abstractmethod
    def iName(self) -> 'str':
        """
        @desc
            Class name of the summarizer
        """
        pass

    @property
    @abstractmethod
    def supportedSMANames(self) -> 'list[str]':
        '''
        @desc
            Analyzers whose tables this summarizer accepts
        '''
        pass

    @property
    @abstractmethod
    def supportedSummarizerNames(self) -> 'list[str]':
        '''
        @desc
            Summarizers whose results this summarizer accepts. Usually empty.
        '''
        pass

    @abstractmethod
    def call_APIs(
            self,
            _apiName: str,
            **_kwargs):
        '''
        @desc
            Dispatches a named query on the computed statistics
        @param[in] _apiName
            Query name
        @param[in] _kwargs
            Arguments forwarded to the query handler
        @return
            Whatever the handler returns
        '''
        pass

    @abstractmethod
    def Execute(self):
        """
        Computes the statistics from the input tables.
        """
        pass

    @abstractmethod
    def get_Results(self) -> 'dict':
        '''
        @return
            Statistic name mapped to its table
        '''
        pass
