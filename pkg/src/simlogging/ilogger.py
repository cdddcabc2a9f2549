"""
Created on: 17 Oct 2026

Log levels, the line format shared by all loggers and the logger base class.
Chains stamp their lines with the cluster update counter, so the file loggers
double as the checkpoint record that SMAAnnealTrace reads back.
"""

from enum import Enum
from abc import ABC, abstractmethod


class ELogType(Enum):
    '''
    Message severity. A lower value is more severe.
    '''
    LOGERROR = 0
    LOGWARN = 1
    LOGINFO = 2
    LOGDEBUG = 3
    LOGALL = 4


def is_LogTypeHandled(_logTypeLevel: ELogType, _logType: ELogType) -> bool:
    '''
    @desc
        Whether a logger at level _logTypeLevel handles a message of type _logType
    '''
    return _logTypeLevel == ELogType.LOGALL or _logTypeLevel.value >= _logType.value


def build_LogLine(
        _message: str,
        _logType: ELogType,
        _timeStamp: 'int | None',
        _modelName: 'str | None') -> str:
    '''
    @desc
        Formats a log line as [ELogType.X], timestamp, modelName, "message"
    @param[in]  _timeStamp
        Monte Carlo update counter of the emitting chain. None outside a chain.
    '''
    return "".join(["[", str(_logType), "]", ", ",
                    (str(_timeStamp) if _timeStamp is not None else "-"), ", ",
                    (_modelName if _modelName is not None else "-"), ", \"",
                    _message, "\"\n"])


class ILogger(ABC):
    '''
    Sink for the messages of one run.
    '''
    @property
    @abstractmethod
    def logTypeLevel(self) -> ELogType:
        '''
        @desc
            Most verbose severity that still gets written. LOGINFO drops debug lines.
        '''
        pass

    @abstractmethod
    def write_Log(
            self,
            _message: str,
            _logType: ELogType,
            _timeStamp: 'int | None' = None,
            _modelName: 'str | None' = None) -> bool:
        '''
        @param[in]  _message
            Message text. Checkpoint lines carry comma separated key=value pairs.
        @param[in]  _logType
            Severity of the message
        @param[in]  _timeStamp
            Update counter of the chain writing the message
        @param[in]  _modelName
            Emitting component, e.g., ModelAnnealer
        @return
            False when the severity was filtered out
        '''
        pass

    def close_Log(self) -> None:
        '''
        @desc
            Flushes whatever the logger still holds. Loggers that write immediately have nothing to do.
        '''
        pass
