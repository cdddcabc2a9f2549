"""
Created on: 17 Oct 2026

File logger. Each run gets its own Log_<run name>.log, which SMAAnnealTrace can parse later.
"""

import os

from src.simlogging.ilogger import ELogType, ILogger, build_LogLine, is_LogTypeHandled
from src.sim.simexceptions import SQAIOException


class LoggerFile(ILogger):
    '''
    Opens the file in append mode for every message, so a crashed run keeps
    all lines written before the crash.
    '''
    __fileExtension = '.log'
    __filePath: str
    __logTypeLevel: ELogType

    def write_Log(
            self,
            _message: str,
            _logType: ELogType,
            _timeStamp: 'int | None' = None,
            _modelName: 'str | None' = None) -> bool:
        '''
        @desc
            Appends one line. Double quotes in the message become single quotes
            since the line format quotes the message.
        @exception
            SQAIOException when the file vanished or can't be opened
        '''
        if not is_LogTypeHandled(self.__logTypeLevel, _logType):
            return False
        if not os.path.isfile(self.__filePath):
            raise SQAIOException(f"Couldn't find the log file at {self.__filePath}")
        try:
            with open(self.__filePath, "a") as _file:
                _file.write(build_LogLine(_message.replace("\"", "'"), _logType, _timeStamp, _modelName))
        except OSError:
            raise SQAIOException(f"Couldn't open the log file at {self.__filePath}")
        return True

    def __init__(
            self,
            _logLevel: ELogType,
            _logGeneratorName: str,
            _logDir: str) -> None:
        '''
        @desc
            Creates the folder if needed and starts the file with the column header.
            An existing file of the same run is overwritten.
        @param[in]  _logGeneratorName
            Run name, e.g., anneal_sq4x4p_s1_s0
        @param[in]  _logDir
            Folder of the log files
        '''
        self.__logTypeLevel = _logLevel
        self.__filePath = os.path.join(_logDir, "Log_" + _logGeneratorName + self.__fileExtension)

        try:
            os.makedirs(_logDir, exist_ok=True)
            with open(self.__filePath, "w") as _file:
                _file.write("logType, timestamp, modelName, message\n")
        except OSError:
            raise SQAIOException(f"Couldn't create the log file at {self.__filePath}")

    @property
    def logTypeLevel(self) -> ELogType:
        return self.__logTypeLevel

    @property
    def filePath(self) -> str:
        return self.__filePath


def init_LoggerFile(
        _loglevel: ELogType,
        _logGeneratorName: str,
        _logSetupDetails) -> ILogger:
    '''
    @desc
        Builds a LoggerFile from the "logsetup" section, which must name the folder, e.g.,
        {
            "logfolder": "logs"
        }
    '''
    assert _loglevel is not None
    assert _logGeneratorName != ""
    assert _logSetupDetails is not None
    assert _logSetupDetails.logfolder != ""

    return LoggerFile(
        _loglevel,
        _logGeneratorName,
        _logSetupDetails.logfolder)
