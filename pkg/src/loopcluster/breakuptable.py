'''
Created on: 17 Oct 2026
@desc
    Breakup-weight tables of the loop-cluster algorithm and the sampling of a breakup for one plaquette.

    For a bond with a = delta*|Jt| and b = delta*Lambda the symmetric weights w_ij over plaquette types satisfy
    sum_j w_ij = W(i), with W the first-order plaquette weights:
        b >= a:  w12 = 1 - a, w13 = w14 = a, w34 = b - a, no freezing
        b <  a:  w12 = 1 - a, w13 = w14 = b, w11 = 2(a - b), w34 = 0
    For Jt < 0 the antialigned type is the heavy one: T1 and T2 swap roles, and so do T3 and T4.

    A breakup pairs the four corners of the plaquette. With corners A = (i, l), B = (j, l), C = (i, l+1), D = (j, l+1):
        VERTICAL    A-C, B-D      T1 <-> T2, T3 <-> T4
        DIAGONAL    A-D, B-C      T1 <-> T3, T2 <-> T4
        HORIZONTAL  A-B, C-D      T1 <-> T4, T2 <-> T3
        FREEZE      A-B-C-D       T_i -> T_i
'''

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from src.sim.simexceptions import ConfigException, SQAException
from src.worldline.plaquette import EPlaquetteType


class EBreakup(Enum):
    VERTICAL = 0
    DIAGONAL = 1
    HORIZONTAL = 2
    FREEZE = 3


class EBreakupRegime(Enum):
    '''
    NO_FREEZE when Lambda >= |Jt|, FREEZE otherwise
    '''
    NO_FREEZE = 0
    FREEZE = 1


# breakup realizing the transition between two types (indices 0..3 = T1..T4)
_transitionBreakups = [[None] * 4 for _ in range(4)]
for _t in range(4):
    _transitionBreakups[_t][_t] = EBreakup.FREEZE
for (_s, _t), _breakup in {(0, 1): EBreakup.VERTICAL, (2, 3): EBreakup.VERTICAL,
                           (0, 2): EBreakup.DIAGONAL, (1, 3): EBreakup.DIAGONAL,
                           (0, 3): EBreakup.HORIZONTAL, (1, 2): EBreakup.HORIZONTAL}.items():
    _transitionBreakups[_s][_t] = _breakup
    _transitionBreakups[_t][_s] = _breakup

# corner partners per breakup, corners indexed A=0, B=1, C=2, D=3
BREAKUP_PARTNERS = {
    EBreakup.VERTICAL: ((2,), (3,), (0,), (1,)),
    EBreakup.DIAGONAL: ((3,), (2,), (1,), (0,)),
    EBreakup.HORIZONTAL: ((1,), (0,), (3,), (2,)),
    EBreakup.FREEZE: ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)),
}


@dataclass(frozen=True)
class BreakupTable:
    '''
    weights[i, j] = w_(i+1)(j+1) over types T1..T4, plaquetteWeights[i] = W(T(i+1)) = row sums
    '''
    jTilde: float
    lambda_: float
    delta: float
    weights: np.ndarray
    plaquetteWeights: np.ndarray
    regime: EBreakupRegime

    @cached_property
    def probabilities(self) -> np.ndarray:
        '''
        @desc
            Conditional probabilities p(i -> j) = w_ij / W(i). Rows with W(i) = 0 are zero.
        '''
        _rowSums = self.plaquetteWeights[:, None]
        return np.divide(self.weights, _rowSums, out=np.zeros_like(self.weights), where=_rowSums > 0)

    @cached_property
    def cumulativeProbabilities(self) -> np.ndarray:
        return np.cumsum(self.probabilities, axis=1)


def build_BreakupTable(
        _jTilde: float,
        _lambda: float,
        _delta: float) -> BreakupTable:
    '''
    @desc
        Breakup weights of one bond
    @param[in]  _jTilde
        Jt = -J_b
    @param[in]  _lambda
        Lambda >= 0
    @param[in]  _delta
        Imaginary time step beta/M
    @return
        BreakupTable
    '''
    if _lambda < 0:
        raise ConfigException(f"Lambda must be non-negative. Got {_lambda}")
    if _delta <= 0:
        raise ConfigException(f"delta must be positive. Got {_delta}")
    _a = _delta * abs(_jTilde)
    _b = _delta * _lambda
    if _a >= 1.0 or _b >= 1.0:
        raise ConfigException(f"Breakup tables need delta*|Jt| < 1 and delta*Lambda < 1. Got {_a:.6g}, {_b:.6g}")

    _weights = np.zeros((4, 4))
    _weights[0, 1] = 1.0 - _a
    if _b >= _a:
        _regime = EBreakupRegime.NO_FREEZE
        _weights[0, 2] = _weights[0, 3] = _a
        _weights[2, 3] = _b - _a
    else:
        _regime = EBreakupRegime.FREEZE
        _weights[0, 2] = _weights[0, 3] = _b
        _weights[0, 0] = 2.0 * (_a - _b)
    _weights = np.triu(_weights) + np.triu(_weights, 1).T

    if _jTilde < 0:
        _permutation = [1, 0, 3, 2]
        _weights = _weights[np.ix_(_permutation, _permutation)]

    return BreakupTable(
        float(_jTilde), float(_lambda), float(_delta),
        _weights, _weights.sum(axis=1), _regime)


def sample_Breakup(
        _table: BreakupTable,
        _entryType: EPlaquetteType,
        _rng: np.random.Generator) -> EBreakup:
    '''
    @desc
        Draws the breakup of a plaquette in state _entryType with probability w_ij / W(i)
    @param[in]  _table
        Breakup table of the plaquette's bond
    @param[in]  _entryType
        Current type of the plaquette, one of T1..T4
    @param[in]  _rng
        Random generator of the chain
    '''
    if _entryType == EPlaquetteType.INVALID:
        raise SQAException("Can't draw a breakup for an invalid plaquette")
    _row = int(_entryType) - 1
    if _table.plaquetteWeights[_row] <= 0:
        raise SQAException(f"Plaquette of type {_entryType.name} has zero weight for Jt={_table.jTilde}, Lambda={_table.lambda_}")
    _target = int(np.searchsorted(_table.cumulativeProbabilities[_row], _rng.random(), side="right"))
    # guard against rounding of the last cumulative entry
    _target = min(_target, 3)
    while _table.weights[_row, _target] == 0.0:
        _target -= 1
    return _transitionBreakups[_row][_target]


def get_TransitionBreakup(
        _fromType: EPlaquetteType,
        _toType: EPlaquetteType) -> EBreakup:
    return _transitionBreakups[int(_fromType) - 1][int(_toType) - 1]
