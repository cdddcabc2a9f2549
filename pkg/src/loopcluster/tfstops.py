'''
Created on: 17 Oct 2026
@desc
    Probability that a growing loop is stopped by a transverse-field operator on one worldline leg.
'''

import numpy as np

from src.sim.simexceptions import ConfigException

MAX_STOP_PROBABILITY = float(np.nextafter(1.0, 0.0))


def compute_TFStopProbability(
        _gamma: float,
        _delta: float,
        _degree: int) -> float:
    '''
    @desc
        p_x = sinh(delta*Gamma/K_i), clamped to [0, 1)
    @param[in]  _gamma
        Transverse field Gamma >= 0
    @param[in]  _delta
        Imaginary time step
    @param[in]  _degree
        K_i, the number of plaquette legs of the site per Trotter step. Isolated sites use 1.
    '''
    if _gamma < 0:
        raise ConfigException(f"Gamma must be non-negative. Got {_gamma}")
    if _degree < 1:
        raise ConfigException(f"Site degree must be >= 1. Got {_degree}")
    if _gamma == 0:
        return 0.0
    return min(float(np.sinh(_delta * _gamma / _degree)), MAX_STOP_PROBABILITY)


def compute_TFStopProbabilities(
        _gamma: float,
        _delta: float,
        _degrees: np.ndarray) -> np.ndarray:
    '''
    @desc
        compute_TFStopProbability for every site
    '''
    return np.array([compute_TFStopProbability(_gamma, _delta, int(_k)) for _k in _degrees])
