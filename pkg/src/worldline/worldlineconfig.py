'''
Created on: 17 Oct 2026
@desc
    Monte Carlo state of one Markov chain: spins s(l, i) on the M*K x N spacetime lattice, periodic in l,
    and the transverse-field operator labels.

    Label x(l, i) sits on site i's worldline segment directly above step l. Inside a shaded plaquette at step l
    the upper corner seen by the plaquette is u = s(l+1, i) * (-1)^x(l, i), so a label separates segments of
    opposite orientation.
'''

import numpy as np

from src.sim.simexceptions import ConfigException, SQAIOException


class WorldlineConfig:
    '''
    Spins and labels of one chain. Owned by a single chain. Measurement routines only read it.
    '''
    __spins: np.ndarray
    __xLabels: np.ndarray

    def __init__(
            self,
            _spins: np.ndarray,
            _xLabels: 'np.ndarray | None' = None) -> None:
        '''
        @desc
            Constructor of the class.
        @param[in]  _spins
            (M*K, N) array of +1/-1
        @param[in]  _xLabels
            (M*K, N) boolean array. None means no labels.
        '''
        _spins = np.array(_spins, dtype=np.int8)
        if _spins.ndim != 2 or not np.all(np.abs(_spins) == 1):
            raise ConfigException("Spins must be a 2D array of +1/-1")
        if _xLabels is None:
            _xLabels = np.zeros(_spins.shape, dtype=bool)
        _xLabels = np.array(_xLabels, dtype=bool)
        if _xLabels.shape != _spins.shape:
            raise ConfigException("Label array must have the shape of the spin array")
        self.__spins = _spins
        self.__xLabels = _xLabels

    @classmethod
    def create_Random(
            cls,
            _nSites: int,
            _nTimeSlices: int,
            _rng: np.random.Generator) -> 'WorldlineConfig':
        '''
        @desc
            Spins constant along imaginary time and random in space, no labels
        '''
        _column = np.where(_rng.random(_nSites) < 0.5, 1, -1).astype(np.int8)
        return cls(np.tile(_column, (_nTimeSlices, 1)))

    @property
    def spins(self) -> np.ndarray:
        return self.__spins

    @property
    def xLabels(self) -> np.ndarray:
        return self.__xLabels

    @property
    def nSites(self) -> int:
        return self.__spins.shape[1]

    @property
    def nTimeSlices(self) -> int:
        return self.__spins.shape[0]

    def get_XLabelSet(self) -> 'set[tuple[int, int]]':
        '''
        @return
            Set of (site, step) positions carrying a label
        '''
        _steps, _sites = np.nonzero(self.__xLabels)
        return {(int(_i), int(_l)) for _l, _i in zip(_steps, _sites)}

    def get_UpperCorner(self, _step: int, _site: int) -> int:
        '''
        @desc
            Spin seen by the plaquette at step _step at its upper corner on _site
        '''
        _top = int(self.__spins[(_step + 1) % self.nTimeSlices, _site])
        return -_top if self.__xLabels[_step, _site] else _top

    def flip_Cluster(
            self,
            _spinIndices: np.ndarray,
            _labelIndices: np.ndarray) -> None:
        '''
        @desc
            Negates the spins and toggles the labels at the given flat indices (l*N + i)
        '''
        _flatSpins = self.__spins.reshape(-1)
        _flatSpins[_spinIndices] = -_flatSpins[_spinIndices]
        _flatLabels = self.__xLabels.reshape(-1)
        _flatLabels[_labelIndices] = ~_flatLabels[_labelIndices]

    def copy(self) -> 'WorldlineConfig':
        return WorldlineConfig(self.__spins.copy(), self.__xLabels.copy())

    def is_Identical(self, _other: 'WorldlineConfig') -> bool:
        return (np.array_equal(self.__spins, _other.spins) and
                np.array_equal(self.__xLabels, _other.xLabels))

    def get_SpinKey(self) -> bytes:
        '''
        @desc
            Hashable key of the spin configuration (labels excluded), used to histogram visited states
        '''
        return self.__spins.tobytes()

    def dump_Text(self, _filePath: str) -> None:
        '''
        @desc
            Writes "N MK" then one row of +1/-1 per time slice
        '''
        try:
            with open(_filePath, "w") as _file:
                _file.write(f"{self.nSites} {self.nTimeSlices}\n")
                for _row in self.__spins:
                    _file.write(" ".join(str(int(_s)) for _s in _row) + "\n")
        except OSError as e:
            raise SQAIOException(f"Couldn't write the worldline dump at {_filePath}: {e}")

    @classmethod
    def load_Text(cls, _filePath: str) -> 'WorldlineConfig':
        try:
            with open(_filePath, "r") as _file:
                _lines = [_line.split() for _line in _file.read().splitlines() if _line.strip() != ""]
        except OSError as e:
            raise SQAIOException(f"Couldn't read the worldline dump at {_filePath}: {e}")
        _nSites, _nTimeSlices = int(_lines[0][0]), int(_lines[0][1])
        _spins = np.array([[int(_t) for _t in _row] for _row in _lines[1:]], dtype=np.int8)
        if _spins.shape != (_nTimeSlices, _nSites):
            raise ConfigException(f"Worldline dump {_filePath} doesn't match its header")
        return cls(_spins)
