'''
Created on: 17 Oct 2026
@desc
    This is the implementation of orchestrator class.
    As the name suggests, this class orchestrates the batch environment from a sweep config file:
    it loads or generates the instances, builds the configuration matrix and expands it into annealing tasks.
'''

from argparse import Namespace
from typing import Optional

from src.loopcluster.clusterupdater import ETFStops
from src.loopcluster.updatemode import EUpdateMode
from src.problem.couplinggraph import BondSubsets, SpinGlassInstance
from src.problem.instanceio import read_Instance, read_Subsets
from src.problem.squarelattice import generate_Instance
from src.sim.annealer import EDriver
from src.sim.batchrun import AnnealTask, DriverSetting, SweepMatrix, build_AnnealTasks
from src.sim.simexceptions import ConfigException
from src.utils import namespace_ToDict, read_JSONConfig


def _get_Field(_record: Namespace, _name: str, _default=None, _required: bool = False):
    if not hasattr(_record, _name) or getattr(_record, _name) is None:
        if _required:
            raise ConfigException(f"The sweep config misses the field '{_name}'")
        return _default
    return getattr(_record, _name)


def _get_List(_record: Namespace, _name: str) -> list:
    _value = _get_Field(_record, _name, _required=True)
    if not isinstance(_value, list) or len(_value) == 0:
        raise ConfigException(f"The sweep config field '{_name}' must be a non-empty list")
    return _value


def _parse_Enum(_enumClass, _value, _name: str):
    try:
        return _enumClass(_value)
    except ValueError:
        raise ConfigException(f"Unknown {_name} '{_value}'. Choose from {[_e.value for _e in _enumClass]}")


class Orchestrator():
    '''
    This class orchestrates the batch environment.
    The main jobs are reading the config file, creating the instances, and expanding the configuration matrix into tasks.
    '''
    __configFilePath: str
    __configdata: Optional[Namespace]
    __instances: 'list[SpinGlassInstance]'
    __matrix: Optional[SweepMatrix]
    __subsets: Optional[BondSubsets]
    __logSetup: Optional[dict]
    __nSeeds: int
    __seedBase: int
    __tasks: 'list[AnnealTask]'

    def __load_Instances(self) -> None:
        _paths = _get_Field(self.__configdata, "instances")
        _generate = _get_Field(self.__configdata, "generate")
        if (_paths is None) == (_generate is None):
            raise ConfigException("The sweep config needs exactly one of 'instances' and 'generate'")

        if _paths is not None:
            if not isinstance(_paths, list) or len(_paths) == 0:
                raise ConfigException("The sweep config field 'instances' must be a non-empty list of paths")
            self.__instances = [read_Instance(_path) for _path in _paths]
            return

        _width = _get_Field(_generate, "width", _required=True)
        _height = _get_Field(_generate, "height", _required=True)
        _periodic = bool(_get_Field(_generate, "periodic", True))
        _seeds = _get_List(_generate, "seeds")
        self.__instances = [generate_Instance(_width, _height, _periodic, int(_seed)) for _seed in _seeds]

    def __build_Matrix(self) -> None:
        _drivers = []
        for _record in _get_List(self.__configdata, "drivers"):
            _driver = _parse_Enum(EDriver, _get_Field(_record, "driver", _required=True), "driver")
            _gamma0 = _get_Field(_record, "gamma0")
            _lambda0 = _get_Field(_record, "lambda0")
            _drivers.append(DriverSetting(
                _driver,
                None if _gamma0 is None else float(_gamma0),
                None if _lambda0 is None else float(_lambda0)))

        _trotterStep = _get_Field(self.__configdata, "trotterStep")
        _mSlices = _get_Field(self.__configdata, "mSlices")
        self.__matrix = SweepMatrix(
            drivers=tuple(_drivers),
            betas=tuple(float(_b) for _b in _get_List(self.__configdata, "betas")),
            modes=tuple(_parse_Enum(EUpdateMode, _m, "mode") for _m in _get_List(self.__configdata, "modes")),
            tFinals=tuple(int(_t) for _t in _get_List(self.__configdata, "tFinals")),
            trotterStep=None if _trotterStep is None else float(_trotterStep),
            mSlices=None if _mSlices is None else int(_mSlices),
            tfStops=_parse_Enum(ETFStops, _get_Field(self.__configdata, "tfStops", ETFStops.PLAQUETTE.value), "tfStops"))

    def create_SimEnv(self):
        '''
        @desc
            Reads the config file and prepares the instances, the configuration matrix and the task list
        '''
        self.__configdata = read_JSONConfig(self.__configFilePath)

        self.__load_Instances()
        self.__build_Matrix()

        self.__nSeeds = int(_get_Field(self.__configdata, "nSeeds", 1))
        self.__seedBase = int(_get_Field(self.__configdata, "seedBase", 0))
        _subsetPath = _get_Field(self.__configdata, "subsets")
        self.__subsets = None if _subsetPath is None else read_Subsets(_subsetPath)
        _logSetup = _get_Field(self.__configdata, "logsetup")
        self.__logSetup = None if _logSetup is None else namespace_ToDict(_logSetup)

        self.__tasks = build_AnnealTasks(
            self.__instances, self.__matrix, self.__nSeeds, self.__seedBase, self.__subsets, self.__logSetup)

    def __init__(
            self,
            _configfilepath: str) -> None:
        '''
        @desc
            Constructor of the orchestrator class
        @param[in]  _configfilepath
            Path to the sweep configuration JSON file
        '''
        self.__configFilePath = _configfilepath
        self.__configdata = None
        self.__instances = []
        self.__matrix = None
        self.__subsets = None
        self.__logSetup = None
        self.__nSeeds = 1
        self.__seedBase = 0
        self.__tasks = []

    def get_SimEnv(self) -> dict:
        '''
        @desc
            Returns the batch environment
        @return
            Dictionary with the keys instances, matrix, tasks, logSetup and config (the config file as a plain dictionary)
        '''
        if self.__configdata is None:
            raise ConfigException("create_SimEnv must be called before get_SimEnv")
        return {
            "instances": self.__instances,
            "matrix": self.__matrix,
            "tasks": self.__tasks,
            "logSetup": self.__logSetup,
            "config": namespace_ToDict(self.__configdata),
        }
