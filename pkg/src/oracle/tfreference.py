'''
Created on: 17 Oct 2026
@desc
    Standard transverse-field path-integral sampler used as an independent reference for Lambda = 0.

    M replicas of the classical system coupled along imaginary time with
        K_perp = -1/2 ln tanh(beta*Gamma/M)
    and single-spin Metropolis moves. The classical weight is exp(-beta/M sum_k H_P(s^k) + K_perp sum_k,i s_i^k s_i^(k+1)).
'''

import numpy as np
from numba import njit

from src.problem.couplinggraph import CouplingGraph
from src.sim.simexceptions import ConfigException
from src.utils import create_Generator
from src.worldline.trotter import TrotterParams


@njit(cache=True)
def run_MetropolisSweep(_spins, _offsets, _neighbours, _couplings, _delta, _couplingPerp, _draws) -> int:
    '''
    @desc
        One Metropolis attempt per replica spin in sequential order. Neighbours are stored CSR-style:
        site i owns _neighbours[_offsets[i]:_offsets[i+1]].
    @return
        Number of accepted flips
    '''
    _nReplicas, _nSites = _spins.shape
    _accepted = 0
    for _k in range(_nReplicas):
        _up = (_k + 1) % _nReplicas
        _down = (_k - 1 + _nReplicas) % _nReplicas
        for _i in range(_nSites):
            _field = 0.0
            for _n in range(_offsets[_i], _offsets[_i + 1]):
                _field += _couplings[_n] * _spins[_k, _neighbours[_n]]
            _temporal = _spins[_up, _i] + _spins[_down, _i] if _nReplicas > 1 else 0
            # -log weight change of flipping s_i^k
            _cost = _spins[_k, _i] * (-2.0 * _delta * _field + 2.0 * _couplingPerp * _temporal)
            if _cost <= 0.0 or _draws[_k, _i] < np.exp(-_cost):
                _spins[_k, _i] = -_spins[_k, _i]
                _accepted += 1
    return _accepted


class TransverseFieldReference:
    '''
    Replica representation of the transverse-field Ising model at fixed (beta, M, Gamma)
    '''
    __graph: CouplingGraph
    __delta: float
    __couplingPerp: float
    __offsets: np.ndarray
    __neighbours: np.ndarray
    __couplings: np.ndarray
    __spins: np.ndarray
    __rng: np.random.Generator

    def __init__(
            self,
            _graph: CouplingGraph,
            _params: TrotterParams,
            _gamma: float,
            _rng: np.random.Generator) -> None:
        '''
        @desc
            Constructor of the class. Replicas start constant in time and random in space.
        @param[in]  _graph
            Coupling graph
        @param[in]  _params
            Trotter parameters. Only beta and M are used.
        @param[in]  _gamma
            Transverse field, must be positive
        @param[in]  _rng
            Random generator
        '''
        if not _gamma > 0:
            raise ConfigException(f"The transverse-field reference needs Gamma > 0. Got {_gamma}")
        self.__graph = _graph
        self.__delta = _params.delta
        self.__couplingPerp = -0.5 * float(np.log(np.tanh(_params.delta * _gamma)))

        _adjacency = [[] for _ in range(_graph.nSites)]
        for _i, _j, _coupling in _graph.bonds:
            _adjacency[_i].append((_j, _coupling))
            _adjacency[_j].append((_i, _coupling))
        self.__offsets = np.cumsum([0] + [len(_a) for _a in _adjacency]).astype(np.int64)
        self.__neighbours = np.array([_j for _a in _adjacency for _j, _ in _a], dtype=np.int64)
        self.__couplings = np.array([_c for _a in _adjacency for _, _c in _a], dtype=np.float64)

        _column = np.where(_rng.random(_graph.nSites) < 0.5, 1, -1)
        self.__spins = np.tile(_column, (_params.mSlices, 1)).astype(np.int64)
        self.__rng = _rng

    @property
    def spins(self) -> np.ndarray:
        return self.__spins

    @property
    def couplingPerp(self) -> float:
        return self.__couplingPerp

    def run_Sweep(self) -> float:
        '''
        @return
            Acceptance rate of the sweep
        '''
        _draws = self.__rng.random(self.__spins.shape)
        _accepted = run_MetropolisSweep(self.__spins, self.__offsets, self.__neighbours, self.__couplings,
                                        self.__delta, self.__couplingPerp, _draws)
        return _accepted / self.__spins.size

    def measure_ZZ(self) -> float:
        if self.__graph.nBonds == 0:
            return 0.0
        return float(np.mean(self.__spins[:, self.__graph.bondSitesI] * self.__spins[:, self.__graph.bondSitesJ]))


def run_TFReferenceEquilibrium(
        _graph: CouplingGraph,
        _params: TrotterParams,
        _gamma: float,
        _nThermalize: int,
        _nMeasure: int,
        _seed: int) -> np.ndarray:
    '''
    @desc
        Equilibrium <sz sz> series of the reference sampler
    @return
        Array of _nMeasure per-sweep measurements
    '''
    _sampler = TransverseFieldReference(_graph, _params, _gamma, create_Generator(_seed))
    for _ in range(_nThermalize):
        _sampler.run_Sweep()
    _series = np.empty(_nMeasure)
    for _sweep in range(_nMeasure):
        _sampler.run_Sweep()
        _series[_sweep] = _sampler.measure_ZZ()
    return _series
