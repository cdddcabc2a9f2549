'''
Created on: 17 Oct 2026
@desc
    Classification of shaded plaquettes and their first-order weights.

    A plaquette of bond (i, j) has bottom spins (s_i(l), s_j(l)) and top spins (s_i(l+1), s_j(l+1)).
    The four allowed states are
        T1: top = bottom, spins aligned          weight 1 + delta*Jt
        T2: top = bottom, spins antialigned      weight 1 - delta*Jt
        T3: top = swapped bottom, antialigned    weight delta*Lambda
        T4: top = negated bottom, aligned        weight delta*Lambda
    with Jt = -J_b, so aligned spins are favoured for a ferromagnetic (negative) coupling.
'''

from enum import IntEnum

import numpy as np

from src.sim.simexceptions import ConfigException


class EPlaquetteType(IntEnum):
    '''
    An enum listing the plaquette types. The value indexes weight vectors.
    '''
    INVALID = 0
    T1 = 1
    T2 = 2
    T3 = 3
    T4 = 4


OFF_DIAGONAL_TYPES = (EPlaquetteType.T3, EPlaquetteType.T4)


def classify_Plaquette(
        _bottom: 'tuple[int, int]',
        _top: 'tuple[int, int]') -> EPlaquetteType:
    '''
    @desc
        Type of a plaquette from its four spins
    @param[in]  _bottom
        (s_i, s_j) on the base slice
    @param[in]  _top
        (s_i, s_j) on the slice above
    @return
        EPlaquetteType, INVALID for an odd change of the magnetization parity or any other forbidden pattern
    '''
    _a, _b = _bottom
    _c, _d = _top
    if _c == _a and _d == _b:
        return EPlaquetteType.T1 if _a == _b else EPlaquetteType.T2
    if _a != _b and _c == _b and _d == _a:
        return EPlaquetteType.T3
    if _a == _b and _c == -_a and _d == -_b:
        return EPlaquetteType.T4
    return EPlaquetteType.INVALID


def classify_PlaquetteArrays(
        _a: np.ndarray,
        _b: np.ndarray,
        _c: np.ndarray,
        _d: np.ndarray) -> np.ndarray:
    '''
    @desc
        Vectorized classify_Plaquette over arrays of corner spins (bottom a, b; top c, d)
    @return
        Integer array of EPlaquetteType values
    '''
    _diagonal = (_c == _a) & (_d == _b)
    _aligned = _a == _b
    return np.select(
        [_diagonal & _aligned,
         _diagonal & ~_aligned,
         ~_aligned & (_c == _b) & (_d == _a),
         _aligned & (_c == -_a) & (_d == -_b)],
        [EPlaquetteType.T1.value, EPlaquetteType.T2.value, EPlaquetteType.T3.value, EPlaquetteType.T4.value],
        default=EPlaquetteType.INVALID.value)


def get_PlaquetteWeights(
        _coupling: float,
        _lambda: float,
        _delta: float) -> np.ndarray:
    '''
    @desc
        Weights of all plaquette types of one bond, indexed by EPlaquetteType value
    @param[in]  _coupling
        J_b of the bond (problem convention, ferromagnetic < 0)
    @param[in]  _lambda
        Transverse two-spin coupling Lambda >= 0
    @param[in]  _delta
        Imaginary time step beta/M
    @return
        Array [W(INVALID)=0, W(T1), W(T2), W(T3), W(T4)]
    '''
    if _lambda < 0:
        raise ConfigException(f"Lambda must be non-negative. Got {_lambda}")
    if _delta * abs(_coupling) >= 1.0 or _delta * _lambda >= 1.0:
        raise ConfigException(f"Weights need delta*|J| < 1 and delta*Lambda < 1. Got delta={_delta}, J={_coupling}, Lambda={_lambda}")
    _jTilde = -_coupling
    return np.array([0.0, 1.0 + _delta * _jTilde, 1.0 - _delta * _jTilde, _delta * _lambda, _delta * _lambda])


def compute_PlaquetteWeight(
        _type: EPlaquetteType,
        _coupling: float,
        _lambda: float,
        _delta: float) -> float:
    '''
    @desc
        First-order weight of a plaquette of the given type
    '''
    return float(get_PlaquetteWeights(_coupling, _lambda, _delta)[int(_type)])
