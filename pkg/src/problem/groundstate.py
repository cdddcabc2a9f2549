'''
Created on: 17 Oct 2026
@desc
    Exhaustive classical ground state of H_P = sum_b J_b s_i s_j. Site 0 is fixed to +1 (global flip symmetry),
    so 2^(N-1) configurations are scanned in vectorized chunks.
'''

import numpy as np

from src.problem.couplinggraph import CouplingGraph
from src.sim.simexceptions import CapacityException

MAX_EXHAUSTIVE_SITES = 26
_CHUNK_BITS = 16


def find_GroundStateExhaustive(_graph: CouplingGraph) -> 'tuple[float, np.ndarray]':
    '''
    @desc
        Minimum of H_P over all spin configurations and the first minimizer in enumeration order
    @param[in]  _graph
        Coupling graph with at most MAX_EXHAUSTIVE_SITES sites
    @return
        (energy, config) where config is an int8 vector of +1/-1 with config[0] = +1
    '''
    _nSites = _graph.nSites
    if _nSites > MAX_EXHAUSTIVE_SITES:
        raise CapacityException(f"Exhaustive search is limited to {MAX_EXHAUSTIVE_SITES} sites. Got {_nSites}")

    _nFree = _nSites - 1
    _total = 1 << _nFree
    _chunk = 1 << min(_nFree, _CHUNK_BITS)
    _shifts = np.arange(_nFree, dtype=np.int64)
    _bondI, _bondJ, _couplings = _graph.bondSitesI, _graph.bondSitesJ, _graph.couplings

    _bestEnergy = np.inf
    _bestConfig = None
    for _start in range(0, _total, _chunk):
        _indices = np.arange(_start, min(_start + _chunk, _total), dtype=np.int64)
        _spins = np.ones((len(_indices), _nSites), dtype=np.int8)
        _spins[:, 1:] = 1 - 2 * ((_indices[:, None] >> _shifts) & 1).astype(np.int8)
        if _graph.nBonds > 0:
            _energies = (_spins[:, _bondI] * _spins[:, _bondJ]) @ _couplings
        else:
            _energies = np.zeros(len(_indices))
        _argmin = int(np.argmin(_energies))
        if _energies[_argmin] < _bestEnergy:
            _bestEnergy = float(_energies[_argmin])
            _bestConfig = _spins[_argmin].copy()

    return _bestEnergy, _bestConfig
