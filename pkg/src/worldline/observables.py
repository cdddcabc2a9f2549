'''
Created on: 17 Oct 2026
@desc
    Diagonal observables of a worldline configuration and its statistical weight.
'''

import numpy as np

from src.loopcluster.tfstops import compute_TFStopProbabilities
from src.problem.couplinggraph import CouplingGraph
from src.worldline.plaquette import classify_PlaquetteArrays, get_PlaquetteWeights
from src.worldline.trotter import LEG_FREE, LEG_IDENTITY, PlaquetteLayout
from src.worldline.worldlineconfig import WorldlineConfig


def measure_ZZ(
        _config: WorldlineConfig,
        _graph: CouplingGraph) -> float:
    '''
    @desc
        s(l, i) s(l, j) averaged over all bonds and all time slices
    '''
    if _graph.nBonds == 0:
        return 0.0
    _spins = _config.spins
    return float(np.mean(_spins[:, _graph.bondSitesI].astype(np.int64) * _spins[:, _graph.bondSitesJ]))


def measure_SliceEnergies(
        _config: WorldlineConfig,
        _graph: CouplingGraph) -> np.ndarray:
    '''
    @desc
        Classical energy sum_b J_b s_i s_j of every time slice
    @return
        Array of length M*K
    '''
    if _graph.nBonds == 0:
        return np.zeros(_config.nTimeSlices)
    _spins = _config.spins
    return (_spins[:, _graph.bondSitesI].astype(np.float64) * _spins[:, _graph.bondSitesJ]) @ _graph.couplings


def compute_ConfigWeight(
        _config: WorldlineConfig,
        _layout: PlaquetteLayout,
        _gamma: float,
        _lambda: float) -> float:
    '''
    @desc
        Weight of a configuration including its labels: the product of all shaded-plaquette weights
        (evaluated with the label-corrected upper corners) times p_x for every label.
        Identity steps must carry the worldline unchanged and unlabelled. A bare leg must carry a label exactly where
        its spin changes.
        Meant for small systems in tests.
    @param[in]  _config
        Configuration to weigh
    @param[in]  _layout
        Plaquette layout of the lattice
    @param[in]  _gamma
        Transverse field
    @param[in]  _lambda
        Transverse two-spin coupling
    '''
    _graph = _layout.graph
    _params = _layout.params
    _spins = _config.spins
    _labels = _config.xLabels
    _nTimeSlices = _layout.nTimeSlices
    _stopProbabilities = compute_TFStopProbabilities(_gamma, _params.delta, _layout.legDegrees)

    _weight = 1.0
    for _step in range(_nTimeSlices):
        _top = (_step + 1) % _nTimeSlices
        _kinds = _layout.legKinds[_step % _params.nColors]
        _upper = np.where(_labels[_step], -_spins[_top], _spins[_top])

        _identity = _kinds == LEG_IDENTITY
        if np.any(_labels[_step] & _identity) or np.any((_spins[_step] != _spins[_top]) & _identity):
            return 0.0

        _free = _kinds == LEG_FREE
        if np.any(_labels[_step][_free] != (_spins[_step] != _spins[_top])[_free]):
            return 0.0

        for _bond in _layout.get_StepBonds(_step):
            _i, _j, _coupling = _graph.bonds[_bond]
            _type = classify_PlaquetteArrays(
                np.array([_spins[_step, _i]]), np.array([_spins[_step, _j]]),
                np.array([_upper[_i]]), np.array([_upper[_j]]))[0]
            _weight *= get_PlaquetteWeights(_coupling, _lambda, _params.delta)[_type]
            if _weight == 0.0:
                return 0.0

        _labelled = np.flatnonzero(_labels[_step])
        _weight *= float(np.prod(_stopProbabilities[_labelled]))
    return _weight
