"""
Created on: 17 Oct 2026

Buffered file logger for long runs at debug level. Lines collect in memory and go to
Log_<run name>.log once the buffer holds logchunksize characters, and at close.
"""

import atexit
import os
import shutil
from io import StringIO

from src.simlogging.ilogger import ELogType, ILogger, build_LogLine, is_LogTypeHandled
from src.sim.simexceptions import ConfigException, SQAIOException


class LoggerFileChunkwise(ILogger):
    '''
    Same file layout as LoggerFile, written in chunks.
    '''
    __fileExtension = '.log'
    __filePath: str
    __logTypeLevel: ELogType
    __currentChunkSize: int  # in characters
    __maxChunkSize: int  # in characters
    __currentLogChunkBuffer: StringIO

    def write_Log(
            self,
            _message: str,
            _logType: ELogType,
            _timeStamp: 'int | None' = None,
            _modelName: 'str | None' = None) -> bool:
        '''
        @desc
            Buffers one line and flushes when the chunk is full
        @exception
            ConfigException for a message with a double quote, which would break the line format
        @return
            True if the buffer was dumped to the file during this call
        '''
        if not is_LogTypeHandled(self.__logTypeLevel, _logType):
            return False

        if "\"" in _message:
            raise ConfigException("Log message can't contain double quote (\") character.")

        self.__currentLogChunkBuffer.write(build_LogLine(_message, _logType, _timeStamp, _modelName))
        self.__currentChunkSize = self.__currentLogChunkBuffer.tell()

        if self.__currentChunkSize >= self.__maxChunkSize:
            self.__dump_Buffer()
            return True
        return False

    def __dump_Buffer(self) -> None:
        try:
            with open(self.__filePath, "a") as _file:
                self.__currentLogChunkBuffer.seek(0)
                shutil.copyfileobj(self.__currentLogChunkBuffer, _file, -1)
        except OSError as e:
            raise SQAIOException(f"Couldn't open the log file at {self.__filePath}: {e}")
        self.__currentLogChunkBuffer = StringIO()
        self.__currentChunkSize = 0

    @property
    def logTypeLevel(self) -> ELogType:
        return self.__logTypeLevel

    @property
    def filePath(self) -> str:
        return self.__filePath

    def close_Log(self) -> None:
        '''
        @desc
            Dumps the current log chunk in the file. Called explicitly at the end of a run and again at interpreter exit.
        '''
        if self.__currentChunkSize > 0:
            self.__dump_Buffer()

    def __init__(
            self,
            _logLevel: ELogType,
            _logGeneratorName: str,
            _logDir: str,
            _logChunkSize: int) -> None:
        '''
        @desc
            Starts the file with the column header and registers the final flush at exit
        @param[in]  _logChunkSize
            Flush threshold in characters
        '''
        self.__logTypeLevel = _logLevel
        self.__maxChunkSize = _logChunkSize
        self.__currentChunkSize = 0
        self.__currentLogChunkBuffer = StringIO()
        self.__filePath = os.path.join(_logDir, "Log_" + _logGeneratorName + self.__fileExtension)

        try:
            os.makedirs(_logDir, exist_ok=True)
            with open(self.__filePath, "w") as _file:
                _file.write("logType, timestamp, modelName, message\n")
        except OSError:
            raise SQAIOException(f"Couldn't create the log file at {self.__filePath}")

        atexit.register(self.close_Log)


def init_LoggerFileChunkwise(
        _loglevel: ELogType,
        _logGeneratorName: str,
        _logSetupDetails) -> ILogger:
    '''
    @desc
        Builds a LoggerFileChunkwise from the "logsetup" section, e.g.,
        {
            "logfolder": "logs",
            "logchunksize": 65536
        }
    '''
    assert _loglevel is not None
    assert _logGeneratorName != ""
    assert _logSetupDetails is not None
    assert _logSetupDetails.logfolder != ""
    assert _logSetupDetails.logchunksize > 0

    return LoggerFileChunkwise(
        _loglevel,
        _logGeneratorName,
        _logSetupDetails.logfolder,
        _logSetupDetails.logchunksize)
