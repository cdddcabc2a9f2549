'''
Created on: 17 Oct 2026
@desc
    Compiled kernels of the loop-cluster update. They work on flat views of one chain's state:
        spins   int8 array of length M*K*N, index l*N + i
        labels  bool array of the same layout
    Node ids follow the cluster module: real spin l*N + i, plaquette upper corner V + l*N + i with V = M*K*N.

    All scratch storage is preallocated by the caller (see LoopWorkspace) and cleared again after every update,
    so an update touches only the part of the lattice its cluster reaches.
'''

import numpy as np
from numba import njit

from src.loopcluster.breakuptable import BreakupTable, EBreakup, get_TransitionBreakup
from src.worldline.plaquette import EPlaquetteType
from src.worldline.trotter import LEG_FREE, LEG_IDENTITY

LEG_UNKNOWN = 0
LEG_CUT = 1
LEG_OPEN = 2
NO_BREAKUP = -1

# breakup realizing the transition from type row to type column (T1..T4 -> 0..3)
TRANSITION_BREAKUPS = np.array(
    [[get_TransitionBreakup(EPlaquetteType(_s + 1), EPlaquetteType(_t + 1)).value for _t in range(4)] for _s in range(4)],
    dtype=np.int64)

# corner partners per breakup code, corners A=0, B=1, C=2, D=3, padded with -1
PARTNER_COUNTS = np.array([1, 1, 1, 3], dtype=np.int64)
PARTNER_TABLE = np.full((4, 4, 3), -1, dtype=np.int64)
for _breakup, _rows in {EBreakup.VERTICAL: ((2,), (3,), (0,), (1,)),
                        EBreakup.DIAGONAL: ((3,), (2,), (1,), (0,)),
                        EBreakup.HORIZONTAL: ((1,), (0,), (3,), (2,)),
                        EBreakup.FREEZE: ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2))}.items():
    for _corner, _partners in enumerate(_rows):
        PARTNER_TABLE[_breakup.value, _corner, :len(_partners)] = _partners


class LoopWorkspace:
    '''
    Scratch arrays of one chain's cluster growth. All marks are zero between updates.
    '''

    def __init__(self, _nSites: int, _nTimeSlices: int, _nBonds: int) -> None:
        _volume = _nSites * _nTimeSlices
        _nPlaquettes = max(_nBonds * _nTimeSlices, 1)
        self.nodeMark = np.zeros(2 * _volume, dtype=np.uint8)
        self.members = np.empty(2 * _volume, dtype=np.int64)
        self.legState = np.zeros(_volume, dtype=np.int8)
        self.legKeys = np.empty(_volume, dtype=np.int64)
        self.toggledLegs = np.empty(_volume, dtype=np.int64)
        self.positionMark = np.zeros(_volume, dtype=np.uint8)
        self.breakupOf = np.full(_nPlaquettes, NO_BREAKUP, dtype=np.int8)
        self.breakupKeys = np.empty(_nPlaquettes, dtype=np.int64)
        self.externalMark = np.zeros(_nPlaquettes, dtype=np.uint8)
        self.externals = np.empty(_nPlaquettes, dtype=np.int64)
        self.bondActive = np.zeros(max(_nBonds, 1), dtype=np.uint8)
        # nMembers, nLegs, nBreakups, nExternals, nToggled
        self.counts = np.zeros(5, dtype=np.int64)


def pack_BreakupTables(_tables: 'list[BreakupTable]') -> 'tuple[np.ndarray, np.ndarray, np.ndarray]':
    '''
    @return
        (weights, cumulative probabilities, row sums) stacked over bonds with shapes (B, 4, 4), (B, 4, 4), (B, 4)
    '''
    _nBonds = max(len(_tables), 1)
    _weights = np.zeros((_nBonds, 4, 4))
    _cumulative = np.zeros((_nBonds, 4, 4))
    _rowWeights = np.zeros((_nBonds, 4))
    for _bond, _table in enumerate(_tables):
        _weights[_bond] = _table.weights
        _cumulative[_bond] = _table.cumulativeProbabilities
        _rowWeights[_bond] = _table.plaquetteWeights
    return _weights, _cumulative, _rowWeights


@njit(cache=True)
def classify_Corners(_a: int, _b: int, _c: int, _d: int) -> int:
    '''
    @desc
        Same as classify_Plaquette on bottom (a, b) and top (c, d), returning the EPlaquetteType value
    '''
    if _c == _a and _d == _b:
        return 1 if _a == _b else 2
    if _a != _b and _c == _b and _d == _a:
        return 3
    if _a == _b and _c == -_a and _d == -_b:
        return 4
    return 0


@njit(cache=True)
def draw_Index(_rng, _n: int) -> int:
    _k = int(_rng.random() * _n)
    return _k if _k < _n else _n - 1


@njit(cache=True)
def get_UpperCorner(_spins, _labels, _nSites: int, _nTimeSlices: int, _step: int, _site: int) -> int:
    _top = int(_spins[((_step + 1) % _nTimeSlices) * _nSites + _site])
    return -_top if _labels[_step * _nSites + _site] else _top


@njit(cache=True)
def get_PlaquetteCode(_spins, _labels, _bondSites, _nSites: int, _nTimeSlices: int, _bond: int, _step: int) -> int:
    _i = _bondSites[_bond, 0]
    _j = _bondSites[_bond, 1]
    _base = _step * _nSites
    return classify_Corners(int(_spins[_base + _i]), int(_spins[_base + _j]),
                            get_UpperCorner(_spins, _labels, _nSites, _nTimeSlices, _step, _i),
                            get_UpperCorner(_spins, _labels, _nSites, _nTimeSlices, _step, _j))


@njit(cache=True)
def select_Seed(
        _nSites, _mSlices, _nColors, _isolatedSites, _subsetBonds, _subsetOffsets, _bondSites, _colorOfBond, _rng):
    '''
    @return
        (seed node, subset index), the subset index is -1 for a seed on an isolated site
    '''
    _nTimeSlices = _mSlices * _nColors
    _nIsolated = len(_isolatedSites)
    _nSubsets = len(_subsetOffsets) - 1
    _useIsolated = _nSubsets == 0
    if not _useIsolated and _nIsolated > 0:
        _useIsolated = _rng.random() < _nIsolated / _nSites
    if _useIsolated:
        _site = _isolatedSites[draw_Index(_rng, _nIsolated)]
        return draw_Index(_rng, _nTimeSlices) * _nSites + _site, -1

    _subsetIndex = draw_Index(_rng, _nSubsets)
    _first = _subsetOffsets[_subsetIndex]
    _bond = _subsetBonds[_first + draw_Index(_rng, _subsetOffsets[_subsetIndex + 1] - _first)]
    _step = draw_Index(_rng, _mSlices) * _nColors + _colorOfBond[_bond]
    return _step * _nSites + _bondSites[_bond, draw_Index(_rng, 2)], _subsetIndex


@njit(cache=True)
def is_LegCut(
        _step, _site, _spins, _labels, _nSites, _nTimeSlices, _nColors, _legKinds, _bondSites,
        _stopProbabilities, _suppressOffDiagonal, _legState, _legKeys, _counts, _rng) -> bool:
    '''
    @desc
        Lazily decides whether the leg above the plaquette at (step, site) stops the loop. A labelled leg always does.
        A fresh stop is drawn with probability p_x, except above T3/T4 plaquettes under the plaquette rule.
    '''
    _key = _step * _nSites + _site
    _state = _legState[_key]
    if _state != LEG_UNKNOWN:
        return _state == LEG_CUT
    _cut = False
    if _labels[_key]:
        _cut = True
    else:
        _probability = _stopProbabilities[_site]
        if _probability > 0.0:
            _kind = _legKinds[_step % _nColors, _site]
            _suppressed = False
            if _suppressOffDiagonal and _kind >= 0:
                _code = get_PlaquetteCode(_spins, _labels, _bondSites, _nSites, _nTimeSlices, _kind, _step)
                _suppressed = _code == 3 or _code == 4
            _cut = (not _suppressed) and _rng.random() < _probability
    _legState[_key] = LEG_CUT if _cut else LEG_OPEN
    _legKeys[_counts[1]] = _key
    _counts[1] += 1
    return _cut


@njit(cache=True)
def draw_Breakup(_bond, _code, _weights, _cumulative, _rowWeights, _rng) -> int:
    if _code == 0:
        raise ValueError("Can't draw a breakup for an invalid plaquette")
    _row = _code - 1
    if _rowWeights[_bond, _row] <= 0.0:
        raise ValueError("Plaquette has zero weight for its bond")
    _u = _rng.random()
    _target = 0
    while _target < 3 and _u >= _cumulative[_bond, _row, _target]:
        _target += 1
    while _weights[_bond, _row, _target] == 0.0:
        _target -= 1
    return TRANSITION_BREAKUPS[_row, _target]


@njit(cache=True)
def push_Node(_node, _nodeMark, _members, _counts) -> None:
    if _nodeMark[_node] == 0:
        _nodeMark[_node] = 1
        _members[_counts[0]] = _node
        _counts[0] += 1


@njit(cache=True)
def cross_Plaquette(
        _bond, _step, _site, _isTop, _spins, _labels, _nSites, _nTimeSlices, _bondSites, _weights, _cumulative,
        _rowWeights, _bondActive, _breakupOf, _breakupKeys, _externalMark, _externals, _nodeMark, _members,
        _counts, _rng) -> None:
    _i = _bondSites[_bond, 0]
    _j = _bondSites[_bond, 1]
    _corner = (0 if _site == _i else 1) + (2 if _isTop else 0)
    _plaquetteKey = _bond * _nTimeSlices + _step
    _base = _step * _nSites
    _virtualOffset = _nSites * _nTimeSlices
    if _bondActive[_bond]:
        _breakup = _breakupOf[_plaquetteKey]
        if _breakup == NO_BREAKUP:
            _code = get_PlaquetteCode(_spins, _labels, _bondSites, _nSites, _nTimeSlices, _bond, _step)
            _breakup = draw_Breakup(_bond, _code, _weights, _cumulative, _rowWeights, _rng)
            _breakupOf[_plaquetteKey] = _breakup
            _breakupKeys[_counts[2]] = _plaquetteKey
            _counts[2] += 1
        for _p in range(PARTNER_COUNTS[_breakup]):
            _partner = PARTNER_TABLE[_breakup, _corner, _p]
            _node = _base + (_i if _partner % 2 == 0 else _j) + (_virtualOffset if _partner >= 2 else 0)
            push_Node(_node, _nodeMark, _members, _counts)
    else:
        if _externalMark[_plaquetteKey] == 0:
            _externalMark[_plaquetteKey] = 1
            _externals[_counts[3]] = _plaquetteKey
            _counts[3] += 1
        # crossed vertically, weighed at flip time
        _node = _base + _site + (0 if _isTop else _virtualOffset)
        push_Node(_node, _nodeMark, _members, _counts)


@njit(cache=True)
def grow_Loop(
        _seedNode, _spins, _labels, _nSites, _nTimeSlices, _nColors, _legKinds, _bondSites, _weights, _cumulative,
        _rowWeights, _stopProbabilities, _suppressOffDiagonal, _bondActive, _nodeMark, _members, _legState, _legKeys,
        _toggledLegs, _positionMark, _breakupOf, _breakupKeys, _externalMark, _externals, _counts, _rng) -> int:
    '''
    @desc
        Grows the cluster of the seed in breadth-first order over the members array. The marks stay set so that the
        acceptance test and the flip can use them, clear_Loop resets them.
    @return
        Number of distinct spacetime positions covered by the cluster
    '''
    _virtualOffset = _nSites * _nTimeSlices
    _counts[:] = 0
    push_Node(_seedNode, _nodeMark, _members, _counts)
    _head = 0
    while _head < _counts[0]:
        _node = _members[_head]
        _head += 1
        if _node < _virtualOffset:
            _step = _node // _nSites
            _site = _node - _step * _nSites
            # below: the leg of the previous step
            _previous = (_step - 1) % _nTimeSlices
            if _legKinds[_previous % _nColors, _site] == LEG_IDENTITY:
                push_Node(_previous * _nSites + _site, _nodeMark, _members, _counts)
            elif not is_LegCut(_previous, _site, _spins, _labels, _nSites, _nTimeSlices, _nColors, _legKinds,
                               _bondSites, _stopProbabilities, _suppressOffDiagonal, _legState, _legKeys, _counts,
                               _rng):
                push_Node(_virtualOffset + _previous * _nSites + _site, _nodeMark, _members, _counts)
            # above: the plaquette of this step
            _kind = _legKinds[_step % _nColors, _site]
            if _kind == LEG_IDENTITY:
                push_Node(((_step + 1) % _nTimeSlices) * _nSites + _site, _nodeMark, _members, _counts)
            elif _kind == LEG_FREE:
                push_Node(_virtualOffset + _node, _nodeMark, _members, _counts)
            else:
                cross_Plaquette(_kind, _step, _site, False, _spins, _labels, _nSites, _nTimeSlices, _bondSites,
                                _weights, _cumulative, _rowWeights, _bondActive, _breakupOf, _breakupKeys,
                                _externalMark, _externals, _nodeMark, _members, _counts, _rng)
        else:
            _key = _node - _virtualOffset
            _step = _key // _nSites
            _site = _key - _step * _nSites
            if not is_LegCut(_step, _site, _spins, _labels, _nSites, _nTimeSlices, _nColors, _legKinds, _bondSites,
                             _stopProbabilities, _suppressOffDiagonal, _legState, _legKeys, _counts, _rng):
                push_Node(((_step + 1) % _nTimeSlices) * _nSites + _site, _nodeMark, _members, _counts)
            _kind = _legKinds[_step % _nColors, _site]
            if _kind == LEG_FREE:
                push_Node(_key, _nodeMark, _members, _counts)
            else:
                cross_Plaquette(_kind, _step, _site, True, _spins, _labels, _nSites, _nTimeSlices, _bondSites,
                                _weights, _cumulative, _rowWeights, _bondActive, _breakupOf, _breakupKeys,
                                _externalMark, _externals, _nodeMark, _members, _counts, _rng)

    # a cut leg with exactly one side in the cluster toggles its label on a flip
    for _l in range(_counts[1]):
        _key = _legKeys[_l]
        if _legState[_key] != LEG_CUT:
            continue
        _step = _key // _nSites
        _site = _key - _step * _nSites
        _bottomIn = _nodeMark[_virtualOffset + _key]
        _topIn = _nodeMark[((_step + 1) % _nTimeSlices) * _nSites + _site]
        if _bottomIn != _topIn:
            _toggledLegs[_counts[4]] = _key
            _counts[4] += 1

    _size = 0
    for _m in range(_counts[0]):
        _node = _members[_m]
        _position = _node if _node < _virtualOffset else (_node - _virtualOffset + _nSites) % _virtualOffset
        if _positionMark[_position] == 0:
            _positionMark[_position] = 1
            _size += 1
    for _m in range(_counts[0]):
        _node = _members[_m]
        _positionMark[_node if _node < _virtualOffset else (_node - _virtualOffset + _nSites) % _virtualOffset] = 0
    return _size


@njit(cache=True)
def compute_LoopAcceptance(
        _spins, _labels, _nSites, _nTimeSlices, _bondSites, _plaquetteWeights, _nodeMark, _externals,
        _nExternals) -> float:
    '''
    @desc
        Product of W(after)/W(before) over the external plaquettes, membership read from the node marks
    '''
    _virtualOffset = _nSites * _nTimeSlices
    _ratio = 1.0
    for _e in range(_nExternals):
        _key = _externals[_e]
        _bond = _key // _nTimeSlices
        _step = _key - _bond * _nTimeSlices
        _i = _bondSites[_bond, 0]
        _j = _bondSites[_bond, 1]
        _base = _step * _nSites
        _a = int(_spins[_base + _i])
        _b = int(_spins[_base + _j])
        _c = get_UpperCorner(_spins, _labels, _nSites, _nTimeSlices, _step, _i)
        _d = get_UpperCorner(_spins, _labels, _nSites, _nTimeSlices, _step, _j)
        _before = classify_Corners(_a, _b, _c, _d)
        _after = classify_Corners(
            -_a if _nodeMark[_base + _i] else _a, -_b if _nodeMark[_base + _j] else _b,
            -_c if _nodeMark[_virtualOffset + _base + _i] else _c,
            -_d if _nodeMark[_virtualOffset + _base + _j] else _d)
        if _plaquetteWeights[_bond, _before] <= 0.0:
            raise ValueError("External plaquette has zero weight before the flip")
        _ratio *= _plaquetteWeights[_bond, _after] / _plaquetteWeights[_bond, _before]
    return _ratio


@njit(cache=True)
def apply_LoopFlip(_spins, _labels, _nSites, _nTimeSlices, _members, _nMembers, _toggledLegs, _nToggled) -> None:
    _virtualOffset = _nSites * _nTimeSlices
    for _m in range(_nMembers):
        _node = _members[_m]
        if _node < _virtualOffset:
            _spins[_node] = -_spins[_node]
    for _l in range(_nToggled):
        _key = _toggledLegs[_l]
        _labels[_key] = not _labels[_key]


@njit(cache=True)
def clear_Loop(_nodeMark, _members, _legState, _legKeys, _breakupOf, _breakupKeys, _externalMark, _externals,
               _counts) -> None:
    for _m in range(_counts[0]):
        _nodeMark[_members[_m]] = 0
    for _l in range(_counts[1]):
        _legState[_legKeys[_l]] = LEG_UNKNOWN
    for _p in range(_counts[2]):
        _breakupOf[_breakupKeys[_p]] = NO_BREAKUP
    for _e in range(_counts[3]):
        _externalMark[_externals[_e]] = 0


@njit(cache=True)
def set_ActiveBonds(_bondActive, _subsetBonds, _subsetOffsets, _subsetIndex, _value) -> None:
    if _subsetIndex < 0:
        return
    for _k in range(_subsetOffsets[_subsetIndex], _subsetOffsets[_subsetIndex + 1]):
        _bondActive[_subsetBonds[_k]] = _value


@njit(cache=True)
def run_LoopUpdates(
        _nUpdates, _alwaysAccept, _spins, _labels, _nSites, _mSlices, _nColors, _legKinds, _bondSites, _colorOfBond,
        _isolatedSites, _subsetBonds, _subsetOffsets, _weights, _cumulative, _rowWeights, _plaquetteWeights,
        _stopProbabilities, _suppressOffDiagonal, _bondActive, _nodeMark, _members, _legState, _legKeys,
        _toggledLegs, _positionMark, _breakupOf, _breakupKeys, _externalMark, _externals, _counts, _rng):
    '''
    @desc
        _nUpdates complete grow + accept + flip updates
    @return
        (summed cluster size, number of accepted flips)
    '''
    _nTimeSlices = _mSlices * _nColors
    _totalSize = 0
    _nAccepted = 0
    for _ in range(_nUpdates):
        _seedNode, _subsetIndex = select_Seed(_nSites, _mSlices, _nColors, _isolatedSites, _subsetBonds,
                                              _subsetOffsets, _bondSites, _colorOfBond, _rng)
        set_ActiveBonds(_bondActive, _subsetBonds, _subsetOffsets, _subsetIndex, 1)
        _totalSize += grow_Loop(
            _seedNode, _spins, _labels, _nSites, _nTimeSlices, _nColors, _legKinds, _bondSites, _weights,
            _cumulative, _rowWeights, _stopProbabilities, _suppressOffDiagonal, _bondActive, _nodeMark, _members,
            _legState, _legKeys, _toggledLegs, _positionMark, _breakupOf, _breakupKeys, _externalMark, _externals,
            _counts, _rng)
        set_ActiveBonds(_bondActive, _subsetBonds, _subsetOffsets, _subsetIndex, 0)
        _accepted = True
        if not _alwaysAccept and _counts[3] > 0:
            _ratio = compute_LoopAcceptance(_spins, _labels, _nSites, _nTimeSlices, _bondSites, _plaquetteWeights,
                                            _nodeMark, _externals, _counts[3])
            _accepted = _ratio >= 1.0 or _rng.random() < _ratio
        if _accepted:
            apply_LoopFlip(_spins, _labels, _nSites, _nTimeSlices, _members, _counts[0], _toggledLegs, _counts[4])
            _nAccepted += 1
        clear_Loop(_nodeMark, _members, _legState, _legKeys, _breakupOf, _breakupKeys, _externalMark, _externals,
                   _counts)
    return _totalSize, _nAccepted
