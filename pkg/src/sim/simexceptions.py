'''
Created on: 17 Oct 2026
@desc
    Exception classes raised across the engine.
    Each class carries the process exit code that the command line interface returns for it.
'''


class SQAException(Exception):
    '''
    Base class of all the errors raised by the engine. The message is prefixed with "[SQA Exception]".
    '''
    exitCode: int = 1

    def __init__(self, _message: str) -> None:
        super().__init__(f"[SQA Exception] {_message}")


class ConfigException(SQAException):
    '''
    Invalid parameters, violated preconditions and inconsistent flags.
    '''
    exitCode = 2


class CapacityException(SQAException):
    '''
    The requested enumeration or diagonalization exceeds its budget.
    '''
    exitCode = 3


class ValidationFailure(SQAException):
    '''
    Monte Carlo estimates disagree with the exact oracle.
    '''
    exitCode = 4


class SQAIOException(SQAException):
    '''
    A file could not be read or written.
    '''
    exitCode = 5
