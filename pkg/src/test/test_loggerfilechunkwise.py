'''
Created on: 17 Oct 2026
@desc
    We conduct the unit test here for LoggerFileChunkwise class
'''

import os
import unittest

from src.sim.simexceptions import ConfigException
from src.simlogging.ilogger import ELogType
from src.simlogging.loggerfilechunkwise import LoggerFileChunkwise


class TestLoggerFileChunkwise(unittest.TestCase):

    def setUp(self):
        # a line is 45 or 46 characters, so the buffer is dumped on every 3rd line
        self.__logger = LoggerFileChunkwise(ELogType.LOGALL, "TestFileChunkLogger", os.getcwd(), 100)

    def test_WriteLog(self):
        for _i in range(1, 31):
            _result = self.__logger.write_Log("Test log", ELogType.LOGDEBUG, _i, "Annealer")
            if _i % 3 == 0:
                self.assertTrue(_result)
            else:
                self.assertFalse(_result)

    def test_CloseLogFlushes(self):
        self.__logger.write_Log("Test log", ELogType.LOGINFO, 1, "Annealer")
        with open(self.__logger.filePath) as _file:
            self.assertEqual(len(_file.readlines()), 1)
        self.__logger.close_Log()
        with open(self.__logger.filePath) as _file:
            self.assertEqual(len(_file.readlines()), 2)

    def test_QuoteIsRejected(self):
        with self.assertRaises(ConfigException):
            self.__logger.write_Log("a \"quoted\" word", ELogType.LOGINFO)

    def tearDown(self) -> None:
        _path = os.path.join(os.getcwd(), "Log_TestFileChunkLogger.log")
        if os.path.isfile(_path):
            os.remove(_path)
