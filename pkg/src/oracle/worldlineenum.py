'''
Created on: 17 Oct 2026
@desc
    Exact references for the worldline measure sampled by the loop-cluster chain (exact stop rule).

    The labels of a leg only enter the plaquette below it, so they are summed out plaquette by plaquette:
        bond plaquette   sum_{x_i, x_j} W(a, b, c(-1)^x_i, d(-1)^x_j) p_i^x_i p_j^x_j
        bare leg         p_i if the spin changes across the step, 1 otherwise
        identity step    1 if the spin is unchanged, 0 otherwise
    Brute-force enumeration covers small spacetime volumes. Per-step transfer matrices give slice marginals for any M.
'''

import numpy as np

from src.loopcluster.tfstops import compute_TFStopProbabilities
from src.sim.simexceptions import CapacityException
from src.worldline.plaquette import classify_Plaquette, get_PlaquetteWeights
from src.worldline.trotter import LEG_FREE, LEG_IDENTITY, PlaquetteLayout

MAX_ENUMERATION_SPINS = 24
MAX_TRANSFER_SITES = 10
ENUMERATION_CHUNK = 1 << 16


def get_SpinKey(_spins: np.ndarray) -> bytes:
    '''
    @desc
        Same key as WorldlineConfig.get_SpinKey for an (M*K, N) array of +1/-1
    '''
    return np.asarray(_spins, dtype=np.int8).tobytes()


def compute_MarginalPlaquetteWeights(
        _coupling: float,
        _lambda: float,
        _delta: float,
        _stopI: float,
        _stopJ: float) -> np.ndarray:
    '''
    @desc
        Plaquette weights with the labels of the two upper legs summed out
    @return
        Array of 16 entries indexed by bits (a, b, c, d) of the real corner spins, bit 1 = spin down, a most significant
    '''
    _weights = get_PlaquetteWeights(_coupling, _lambda, _delta)
    _table = np.zeros(16)
    for _index in range(16):
        _a, _b, _c, _d = (1 - 2 * ((_index >> _shift) & 1) for _shift in (3, 2, 1, 0))
        _total = 0.0
        for _xI in (0, 1):
            for _xJ in (0, 1):
                _type = classify_Plaquette((_a, _b), (-_c if _xI else _c, -_d if _xJ else _d))
                _total += _weights[_type] * (_stopI if _xI else 1.0) * (_stopJ if _xJ else 1.0)
        _table[_index] = _total
    return _table


def _get_StepFactors(
        _layout: PlaquetteLayout,
        _gamma: float,
        _lambda: float) -> 'tuple[np.ndarray, list[np.ndarray]]':
    _delta = _layout.params.delta
    _stops = compute_TFStopProbabilities(_gamma, _delta, _layout.legDegrees)
    _marginals = [compute_MarginalPlaquetteWeights(_coupling, _lambda, _delta, _stops[_i], _stops[_j])
                  for _i, _j, _coupling in _layout.graph.bonds]
    return _stops, _marginals


def _multiply_StepWeights(
        _weights: np.ndarray,
        _layout: PlaquetteLayout,
        _step: int,
        _bottom: np.ndarray,
        _top: np.ndarray,
        _stops: np.ndarray,
        _marginals: 'list[np.ndarray]') -> None:
    '''
    @desc
        Multiplies _weights in place by the factors of one step, given bit arrays of the two slices (last axis = site)
    '''
    _kinds = _layout.legKinds[_step % _layout.params.nColors]
    for _site in range(_layout.nSites):
        _kind = _kinds[_site]
        if _kind == LEG_IDENTITY:
            _weights *= _bottom[..., _site] == _top[..., _site]
        elif _kind == LEG_FREE:
            _weights *= np.where(_bottom[..., _site] == _top[..., _site], 1.0, _stops[_site])
    for _bond in _layout.get_StepBonds(_step):
        _i, _j, _ = _layout.graph.bonds[_bond]
        _index = (_bottom[..., _i] << 3) | (_bottom[..., _j] << 2) | (_top[..., _i] << 1) | _top[..., _j]
        _weights *= _marginals[_bond][_index]


def enumerate_WorldlineDistribution(
        _layout: PlaquetteLayout,
        _gamma: float,
        _lambda: float) -> 'dict[bytes, float]':
    '''
    @desc
        Exact normalized distribution over spacetime spin configurations
    @param[in]  _layout
        Plaquette layout with N*M*K <= MAX_ENUMERATION_SPINS
    @param[in]  _gamma
        Transverse field
    @param[in]  _lambda
        Transverse two-spin coupling
    @return
        Dictionary from spin key (see get_SpinKey) to probability, configurations of zero weight omitted
    '''
    _nSites = _layout.nSites
    _nTimeSlices = _layout.nTimeSlices
    _nSpins = _nSites * _nTimeSlices
    if _nSpins > MAX_ENUMERATION_SPINS:
        raise CapacityException(f"Worldline enumeration supports up to {MAX_ENUMERATION_SPINS} spacetime spins. Got {_nSpins}")
    _stops, _marginals = _get_StepFactors(_layout, _gamma, _lambda)

    _keys = []
    _values = []
    _shifts = np.arange(_nSpins, dtype=np.int64)
    for _start in range(0, 1 << _nSpins, ENUMERATION_CHUNK):
        _states = np.arange(_start, min(_start + ENUMERATION_CHUNK, 1 << _nSpins), dtype=np.int64)
        _bits = ((_states[:, None] >> _shifts) & 1).reshape(-1, _nTimeSlices, _nSites)
        _weights = np.ones(len(_states))
        for _step in range(_nTimeSlices):
            _multiply_StepWeights(_weights, _layout, _step, _bits[:, _step, :],
                                  _bits[:, (_step + 1) % _nTimeSlices, :], _stops, _marginals)
        for _row in np.flatnonzero(_weights > 0.0):
            _keys.append(get_SpinKey(1 - 2 * _bits[_row]))
            _values.append(_weights[_row])

    _values = np.array(_values)
    _values /= np.sum(_values)
    return dict(zip(_keys, _values.tolist()))


def compute_TransferMatrices(
        _layout: PlaquetteLayout,
        _gamma: float,
        _lambda: float) -> 'list[np.ndarray]':
    '''
    @desc
        One (2^N, 2^N) matrix per step, entry [x, y] = weight of slice state x below and y above.
        Each matrix is scaled to unit maximum; the scale cancels in every normalized quantity.
        Basis state k has spin s_i = 1 - 2*bit_i(k).
    '''
    _nSites = _layout.nSites
    if _nSites > MAX_TRANSFER_SITES:
        raise CapacityException(f"Transfer matrices support up to {MAX_TRANSFER_SITES} sites. Got {_nSites}")
    _stops, _marginals = _get_StepFactors(_layout, _gamma, _lambda)
    _dimension = 1 << _nSites
    _basisBits = (np.arange(_dimension, dtype=np.int64)[:, None] >> np.arange(_nSites, dtype=np.int64)) & 1
    _bottom = np.broadcast_to(_basisBits[:, None, :], (_dimension, _dimension, _nSites))
    _top = np.broadcast_to(_basisBits[None, :, :], (_dimension, _dimension, _nSites))

    _matrices = []
    for _step in range(_layout.nTimeSlices):
        _matrix = np.ones((_dimension, _dimension))
        _multiply_StepWeights(_matrix, _layout, _step, _bottom, _top, _stops, _marginals)
        _scale = float(np.max(_matrix))
        _matrices.append(_matrix / _scale if _scale > 0 else _matrix)
    return _matrices


def compute_SlicePairDistribution(
        _layout: PlaquetteLayout,
        _gamma: float,
        _lambda: float,
        _sliceA: int,
        _sliceB: int) -> np.ndarray:
    '''
    @desc
        Exact joint distribution of the classical states on two time slices
    @param[in]  _sliceA
        First slice index
    @param[in]  _sliceB
        Second slice index, different from _sliceA
    @return
        (2^N, 2^N) array P[x, y] = Prob(slice A in state x, slice B in state y), basis as in compute_TransferMatrices
    '''
    _nTimeSlices = _layout.nTimeSlices
    _sliceA %= _nTimeSlices
    _sliceB %= _nTimeSlices
    _matrices = compute_TransferMatrices(_layout, _gamma, _lambda)
    _dimension = _matrices[0].shape[0]

    def multiply_Range(_first: int, _last: int) -> np.ndarray:
        _product = np.eye(_dimension)
        _step = _first
        while _step != _last:
            _product = _product @ _matrices[_step]
            _product /= max(float(np.max(_product)), np.finfo(float).tiny)
            _step = (_step + 1) % _nTimeSlices
        return _product

    if _sliceA == _sliceB:
        # full period starting at slice A
        _full = _matrices[_sliceA] @ multiply_Range((_sliceA + 1) % _nTimeSlices, _sliceA)
        _joint = np.diag(np.diag(_full))
    else:
        _joint = multiply_Range(_sliceA, _sliceB) * multiply_Range(_sliceB, _sliceA).T
    return _joint / np.sum(_joint)


def compute_SliceDistribution(
        _layout: PlaquetteLayout,
        _gamma: float,
        _lambda: float,
        _slice: int = 0) -> np.ndarray:
    '''
    @desc
        Exact distribution of the classical state on one slice
    '''
    return np.diag(compute_SlicePairDistribution(_layout, _gamma, _lambda, _slice, _slice)).copy()


def compute_SliceAveragedExpectation(
        _layout: PlaquetteLayout,
        _gamma: float,
        _lambda: float,
        _diagonal: np.ndarray) -> float:
    '''
    @desc
        Exact expectation of a diagonal observable averaged over all time slices of the discretized measure.
        This is what an equilibrium chain estimates at the same M, Trotter error included, so it separates
        sampler bias from discretization error.
    @param[in]  _diagonal
        Observable value per basis state, basis as in compute_TransferMatrices
    @return
        Mean over slices of sum_x P_l(x) * _diagonal[x]
    '''
    _matrices = compute_TransferMatrices(_layout, _gamma, _lambda)
    _nTimeSlices = len(_matrices)
    _dimension = _matrices[0].shape[0]
    _diagonal = np.asarray(_diagonal, dtype=np.float64)

    # prefixes[l] = T_0 ... T_(l-1), suffixes[l] = T_l ... T_(n-1), each rescaled to unit maximum
    _prefixes = [np.eye(_dimension)]
    for _matrix in _matrices[:-1]:
        _product = _prefixes[-1] @ _matrix
        _prefixes.append(_product / max(float(np.max(_product)), np.finfo(float).tiny))
    _suffixes = [np.eye(_dimension)] * _nTimeSlices
    _product = np.eye(_dimension)
    for _step in range(_nTimeSlices - 1, -1, -1):
        _product = _matrices[_step] @ _product
        _product /= max(float(np.max(_product)), np.finfo(float).tiny)
        _suffixes[_step] = _product

    _total = 0.0
    for _slice in range(_nTimeSlices):
        # diagonal of the cyclic product starting at this slice
        _weights = np.sum(_suffixes[_slice] * _prefixes[_slice].T, axis=1)
        _total += float(np.dot(_weights, _diagonal) / np.sum(_weights))
    return _total / _nTimeSlices
