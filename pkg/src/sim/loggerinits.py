'''
Created on: 17 Oct 2026
@desc
    Maps the "loghandler" and "loglevel" strings of a run config to logger factories and log levels.
    Every factory has the signature
        init_<ClassName>(_loglevel: ELogType, _logGeneratorName: str, _logSetupDetails) -> ILogger
    where _logSetupDetails is the logsetup section as a namespace.
'''

from argparse import Namespace

from src.simlogging.ilogger import ELogType, ILogger
from src.sim.simexceptions import ConfigException

# import the logger classes here
from src.simlogging.loggercmd import init_LoggerCmd
from src.simlogging.loggerfile import init_LoggerFile
from src.simlogging.loggerfilechunkwise import init_LoggerFileChunkwise


loggerInitDictionary = {
    "LoggerCmd": init_LoggerCmd,
    "LoggerFile": init_LoggerFile,
    "LoggerFileChunkwise": init_LoggerFileChunkwise
    }

loggerTypeDictionary = {
    "error": ELogType.LOGERROR,
    "warn": ELogType.LOGWARN,
    "info": ELogType.LOGINFO,
    "debug": ELogType.LOGDEBUG,
    "all": ELogType.LOGALL
}

defaultLogSetup = {
    "loghandler": "LoggerCmd",
    "loglevel": "warn",
    "logfolder": "logs",
    "logchunksize": 65536
}


def create_Logger(
        _logSetup: 'dict | Namespace | None',
        _logGeneratorName: str) -> ILogger:
    '''
    @desc
        Creates a logger from a log setup record by looking up the handler and level in the dictionaries above
    @param[in]  _logSetup
        Record with the keys loghandler, loglevel, logfolder and logchunksize. Missing keys take the defaults.
    @param[in]  _logGeneratorName
        Name of the log generator
    @return
        Logger instance
    '''
    _setup = dict(defaultLogSetup)
    if isinstance(_logSetup, Namespace):
        _setup.update(vars(_logSetup))
    elif _logSetup is not None:
        _setup.update(_logSetup)

    if _setup["loghandler"] not in loggerInitDictionary:
        raise ConfigException(f"Unknown log handler {_setup['loghandler']}. Choose from {list(loggerInitDictionary)}")
    if _setup["loglevel"] not in loggerTypeDictionary:
        raise ConfigException(f"Unknown log level {_setup['loglevel']}. Choose from {list(loggerTypeDictionary)}")

    return loggerInitDictionary[_setup["loghandler"]](
        loggerTypeDictionary[_setup["loglevel"]],
        _logGeneratorName,
        Namespace(**_setup))
