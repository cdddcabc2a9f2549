'''
Created on: 17 Oct 2026
@desc
    We conduct the unit test here for LoggerFile class
'''

import os
import unittest

from src.simlogging.ilogger import ELogType
from src.simlogging.loggerfile import LoggerFile


class TestLoggerFile(unittest.TestCase):

    def setUp(self):
        self.__logger = LoggerFile(ELogType.LOGINFO, "TestFileLogger", os.getcwd())

    def test_WriteLog(self):
        for _i in range(1, 50):
            self.assertTrue(self.__logger.write_Log("Test log", ELogType.LOGINFO, _i, "Annealer"))
        self.assertFalse(self.__logger.write_Log("Debug log", ELogType.LOGDEBUG))

        with open(self.__logger.filePath) as _file:
            _lines = _file.readlines()
        self.assertEqual(_lines[0], "logType, timestamp, modelName, message\n")
        self.assertEqual(len(_lines), 50)
        self.assertEqual(_lines[1], "[ELogType.LOGINFO], 1, Annealer, \"Test log\"\n")

    def test_QuoteIsReplaced(self):
        self.__logger.write_Log("a \"quoted\" word", ELogType.LOGERROR)
        with open(self.__logger.filePath) as _file:
            _last = _file.readlines()[-1]
        self.assertEqual(_last, "[ELogType.LOGERROR], -, -, \"a 'quoted' word\"\n")

    def tearDown(self) -> None:
        _path = os.path.join(os.getcwd(), "Log_TestFileLogger.log")
        if os.path.isfile(_path):
            os.remove(_path)
