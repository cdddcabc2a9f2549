'''
Created on: 17 Oct 2026
@desc
    Dense exact diagonalization of H = sum_b J_b sz_i sz_j - Gamma sum_i sx_i - Lambda sum_b sx_i sx_j for small graphs,
    and thermal expectations from its spectrum.

    Basis state k has spin s_i = 1 - 2*bit_i(k), i.e., bit 0 is spin up.
'''

from dataclasses import dataclass

import numpy as np

from src.problem.couplinggraph import CouplingGraph
from src.sim.simexceptions import CapacityException, ConfigException, SQAException

MAX_ED_SITES = 12
RESIDUAL_TOLERANCE = 1e-8

OBSERVABLES = ("zz_nn", "energy")


def _get_BasisSpins(_nSites: int) -> np.ndarray:
    '''
    @return
        (2^N, N) array of +1/-1
    '''
    _states = np.arange(2 ** _nSites, dtype=np.int64)
    _bits = (_states[:, None] >> np.arange(_nSites, dtype=np.int64)) & 1
    return 1 - 2 * _bits


def compute_DiagonalEnergies(_graph: CouplingGraph) -> np.ndarray:
    '''
    @desc
        Classical energies sum_b J_b s_i s_j of every basis state
    '''
    _spins = _get_BasisSpins(_graph.nSites).astype(np.float64)
    if _graph.nBonds == 0:
        return np.zeros(_spins.shape[0])
    return (_spins[:, _graph.bondSitesI] * _spins[:, _graph.bondSitesJ]) @ _graph.couplings


def build_Hamiltonian(
        _graph: CouplingGraph,
        _gamma: float,
        _lambda: float) -> np.ndarray:
    '''
    @desc
        Dense Hamiltonian in the sigma-z product basis
    @param[in]  _graph
        Coupling graph with at most MAX_ED_SITES sites
    @param[in]  _gamma
        Transverse field
    @param[in]  _lambda
        Transverse two-spin coupling, applied on every bond of the graph
    @return
        Real symmetric (2^N, 2^N) array
    '''
    _nSites = _graph.nSites
    if _nSites > MAX_ED_SITES:
        raise CapacityException(f"Exact diagonalization supports up to {MAX_ED_SITES} sites. Got {_nSites}")
    _dimension = 2 ** _nSites
    _states = np.arange(_dimension, dtype=np.int64)
    _hamiltonian = np.diag(compute_DiagonalEnergies(_graph))
    if _gamma != 0.0:
        for _i in range(_nSites):
            _hamiltonian[_states, _states ^ (1 << _i)] -= _gamma
    if _lambda != 0.0:
        # parallel bonds add up
        for _i, _j, _ in _graph.bonds:
            _hamiltonian[_states, _states ^ ((1 << _i) | (1 << _j))] -= _lambda
    return _hamiltonian


@dataclass(frozen=True)
class SpectralDecomposition:
    '''
    Ascending eigenvalues and column eigenvectors
    '''
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def groundEnergy(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def gap(self) -> float:
        return float(self.eigenvalues[1] - self.eigenvalues[0]) if len(self.eigenvalues) > 1 else 0.0


def decompose_Hamiltonian(_hamiltonian: np.ndarray) -> SpectralDecomposition:
    '''
    @desc
        Symmetric eigendecomposition with a reconstruction check
    '''
    try:
        _eigenvalues, _eigenvectors = np.linalg.eigh(_hamiltonian)
    except np.linalg.LinAlgError as e:
        raise SQAException(f"Diagonalization did not converge: {e}")
    _reconstructed = (_eigenvectors * _eigenvalues) @ _eigenvectors.T
    _residual = float(np.max(np.abs(_reconstructed - _hamiltonian))) if _hamiltonian.size > 0 else 0.0
    if _residual > RESIDUAL_TOLERANCE * max(1.0, float(np.max(np.abs(_hamiltonian)))):
        raise SQAException(f"Diagonalization residual {_residual:.3g} is above tolerance")
    return SpectralDecomposition(_eigenvalues, _eigenvectors)


def compute_SpectralDecomposition(
        _graph: CouplingGraph,
        _gamma: float,
        _lambda: float) -> SpectralDecomposition:
    return decompose_Hamiltonian(build_Hamiltonian(_graph, _gamma, _lambda))


def compute_ZZDiagonal(_graph: CouplingGraph) -> np.ndarray:
    '''
    @desc
        Bond-averaged sz_i sz_j of every basis state
    '''
    if _graph.nBonds == 0:
        return np.zeros(2 ** _graph.nSites)
    _spins = _get_BasisSpins(_graph.nSites).astype(np.float64)
    return np.mean(_spins[:, _graph.bondSitesI] * _spins[:, _graph.bondSitesJ], axis=1)


def compute_EDThermalExpectation(
        _graph: CouplingGraph,
        _gamma: float,
        _lambda: float,
        _beta: float,
        _observable: str = "zz_nn") -> float:
    '''
    @desc
        tr(O exp(-beta H)) / tr(exp(-beta H))
    @param[in]  _graph
        Coupling graph, N <= MAX_ED_SITES
    @param[in]  _gamma
        Transverse field
    @param[in]  _lambda
        Transverse two-spin coupling
    @param[in]  _beta
        Inverse temperature
    @param[in]  _observable
        "zz_nn" for the bond-averaged nearest-neighbour correlation or "energy"
    @return
        Thermal expectation value
    '''
    if not _beta > 0:
        raise ConfigException(f"beta must be positive. Got {_beta}")
    if _observable not in OBSERVABLES:
        raise ConfigException(f"Unknown observable {_observable}. Choose from {OBSERVABLES}")
    _spectrum = compute_SpectralDecomposition(_graph, _gamma, _lambda)
    _boltzmann = np.exp(-_beta * (_spectrum.eigenvalues - _spectrum.groundEnergy))
    _partition = float(np.sum(_boltzmann))
    if _observable == "energy":
        return float(np.dot(_boltzmann, _spectrum.eigenvalues)) / _partition
    # <n|O|n> for a diagonal O
    _expectations = (_spectrum.eigenvectors ** 2).T @ compute_ZZDiagonal(_graph)
    return float(np.dot(_boltzmann, _expectations)) / _partition
