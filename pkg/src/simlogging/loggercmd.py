"""
Created on: 17 Oct 2026

Console logger. The default sink of the command line when no log handler is chosen.
"""

from src.simlogging.ilogger import ELogType, ILogger, is_LogTypeHandled


class LoggerCmd(ILogger):
    '''
    Prints each accepted message on one line, prefixed with the run name.
    '''
    __logGeneratorName: str
    __logTypeLevel: ELogType

    def write_Log(
            self,
            _message: str,
            _logType: ELogType,
            _timeStamp: 'int | None' = None,
            _modelName: 'str | None' = None) -> bool:
        if not is_LogTypeHandled(self.__logTypeLevel, _logType):
            return False
        print("".join(["[", str(_logType), "]", ", ",
                       self.__logGeneratorName, ", ",
                       (str(_timeStamp) if _timeStamp is not None else "-"), ", ",
                       (_modelName if _modelName is not None else "-"), ": ",
                       _message]))
        return True

    def __init__(
            self,
            _logLevel: ELogType,
            _logGeneratorName: str) -> None:
        '''
        @param[in]  _logGeneratorName
            Run name printed in front of every line, e.g., anneal_sq4x4p_s1_s0
        '''
        self.__logTypeLevel = _logLevel
        self.__logGeneratorName = _logGeneratorName

    @property
    def logTypeLevel(self) -> ELogType:
        return self.__logTypeLevel


def init_LoggerCmd(
        _loglevel: ELogType,
        _logGeneratorName: str,
        _logSetupDetails) -> ILogger:
    '''
    @desc
        Builds a LoggerCmd. The log setup carries no field for it.
    '''
    assert _loglevel is not None
    assert _logGeneratorName != ""

    return LoggerCmd(_loglevel, _logGeneratorName)
