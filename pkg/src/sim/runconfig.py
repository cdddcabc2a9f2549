'''
Created on: 17 Oct 2026
@desc
    Provenance of the outputs. Every CSV written by the command line starts with two comment lines:
        # version: <package version>
        # config: <RunConfig as JSON>
    followed by the table itself.
'''

import json
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from src import __version__
from src.sim.simexceptions import ConfigException, SQAIOException

VERSION_PREFIX = "# version: "
CONFIG_PREFIX = "# config: "


def _to_Plain(_value):
    '''
    @desc
        Converts enums, numpy scalars and tuples into JSON-native values
    '''
    if isinstance(_value, dict):
        return {str(_k): _to_Plain(_v) for _k, _v in _value.items()}
    if isinstance(_value, (list, tuple)):
        return [_to_Plain(_v) for _v in _value]
    if isinstance(_value, np.generic):
        return _value.item()
    if hasattr(_value, "value") and hasattr(_value, "name") and not isinstance(_value, (str, bytes)):
        return _value.value
    return _value


@dataclass
class RunConfig:
    '''
    Parameter record of one command invocation
    '''
    command: str
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.params = _to_Plain(dict(self.params))

    def to_JSON(self) -> str:
        return json.dumps({"command": self.command, "params": self.params}, sort_keys=True)

    @classmethod
    def from_JSON(cls, _text: str) -> 'RunConfig':
        try:
            _record = json.loads(_text)
            return cls(_record["command"], _record["params"])
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise ConfigException(f"Couldn't parse a run config from: {_text}: {e}")


def write_ResultCSV(
        _table: pd.DataFrame,
        _filePath: str,
        _runConfig: RunConfig) -> None:
    '''
    @desc
        Writes the table with the version and config header lines
    @param[in]  _table
        Table to write
    @param[in]  _filePath
        Output path
    @param[in]  _runConfig
        Parameters of the run that produced the table
    '''
    try:
        with open(_filePath, "w", newline="") as _file:
            _file.write(f"{VERSION_PREFIX}{__version__}\n")
            _file.write(f"{CONFIG_PREFIX}{_runConfig.to_JSON()}\n")
            _table.to_csv(_file, index=False)
    except OSError as e:
        raise SQAIOException(f"Couldn't write the result file at {_filePath}: {e}")


def read_ResultCSV(_filePath: str) -> 'tuple[pd.DataFrame, RunConfig | None]':
    '''
    @desc
        Reads a table written by write_ResultCSV (plain CSV files are accepted too)
    @return
        (table, run config or None when the file carries no config line)
    '''
    _runConfig = None
    try:
        with open(_filePath, "r") as _file:
            for _line in _file:
                if not _line.startswith("#"):
                    break
                if _line.startswith(CONFIG_PREFIX):
                    _runConfig = RunConfig.from_JSON(_line[len(CONFIG_PREFIX):].strip())
        _table = pd.read_csv(_filePath, comment="#")
    except OSError as e:
        raise SQAIOException(f"Couldn't read the result file at {_filePath}: {e}")
    return _table, _runConfig
