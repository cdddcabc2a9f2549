'''
Created on: 17 Oct 2026
@desc
    Square-lattice instances: random +-J-uniform spin glasses, uniform ferromagnets for validation,
    the plaquette bond subsets used by semi-local updates, and recovery of the lattice shape from a loaded graph.

    Site (x, y) has index y*width + x. Bonds are emitted in four groups: horizontal bonds starting at an even column,
    horizontal bonds starting at an odd column, vertical bonds starting at an even row, vertical bonds starting at an odd row.
    Greedy coloring in this order gives the 4-color checkerboard decomposition on even periodic lattices.
'''

from typing import Optional

import numpy as np

from src.problem.couplinggraph import BondSubsets, CouplingGraph, SpinGlassInstance, SquareLattice
from src.sim.simexceptions import ConfigException
from src.utils import create_Generator


def list_SquareBonds(
        _width: int,
        _height: int,
        _periodic: bool) -> 'list[tuple[int, int, int, int, str]]':
    '''
    @desc
        Bond geometry of a square lattice in the canonical order
    @return
        List of (i, j, x, y, direction) where (x, y) is the lower-left end and direction is "h" or "v"
    '''
    _bonds = []
    for _parity in (0, 1):
        for _y in range(_height):
            for _x in range(_parity, _width, 2):
                if _x + 1 < _width or _periodic:
                    _bonds.append((_y * _width + _x, _y * _width + (_x + 1) % _width, _x, _y, "h"))
    for _parity in (0, 1):
        for _y in range(_parity, _height, 2):
            for _x in range(_width):
                if _y + 1 < _height or _periodic:
                    _bonds.append((_y * _width + _x, ((_y + 1) % _height) * _width + _x, _x, _y, "v"))
    return _bonds


def _check_Dimensions(_width: int, _height: int) -> None:
    if int(_width) != _width or int(_height) != _height or _width < 2 or _height < 2:
        raise ConfigException(f"Lattice dimensions must be integers >= 2. Got {_width} x {_height}")


def generate_Instance(
        _width: int,
        _height: int,
        _periodic: bool,
        _seed: int) -> SpinGlassInstance:
    '''
    @desc
        Square-lattice spin glass with couplings i.i.d. uniform on [-1, 1]. Deterministic given the seed.
    @param[in]  _width
        Number of columns (>= 2)
    @param[in]  _height
        Number of rows (>= 2)
    @param[in]  _periodic
        Periodic boundary conditions in both directions
    @param[in]  _seed
        Seed of the coupling draw
    @return
        SpinGlassInstance without a ground-state energy
    '''
    _check_Dimensions(_width, _height)
    _geometry = list_SquareBonds(_width, _height, _periodic)
    _rng = create_Generator(_seed)
    _couplings = _rng.uniform(-1.0, 1.0, size=len(_geometry))
    _graph = CouplingGraph(
        _width * _height,
        tuple((_g[0], _g[1], float(_c)) for _g, _c in zip(_geometry, _couplings)),
        allowParallelBonds=_periodic)
    _name = f"sq{_width}x{_height}{'p' if _periodic else 'o'}_s{_seed}"
    return SpinGlassInstance(_graph, None, int(_seed), _name, SquareLattice(_width, _height, bool(_periodic)))


def build_FerroSquare(
        _width: int,
        _height: int,
        _periodic: bool = True,
        _coupling: float = -1.0) -> SpinGlassInstance:
    '''
    @desc
        Uniform square lattice, ferromagnetic for a negative coupling
    '''
    _check_Dimensions(_width, _height)
    _geometry = list_SquareBonds(_width, _height, _periodic)
    _graph = CouplingGraph(
        _width * _height,
        tuple((_g[0], _g[1], float(_coupling)) for _g in _geometry),
        allowParallelBonds=_periodic)
    return SpinGlassInstance(_graph, None, 0, f"ferro{_width}x{_height}", SquareLattice(_width, _height, bool(_periodic)))


def build_FerroChain(
        _length: int,
        _periodic: bool = True,
        _coupling: float = -1.0) -> SpinGlassInstance:
    '''
    @desc
        Uniform chain, a ring when periodic
    '''
    if int(_length) != _length or _length < 2:
        raise ConfigException(f"Chain length must be an integer >= 2. Got {_length}")
    _bonds = [(_i, _i + 1, float(_coupling)) for _i in range(_length - 1)]
    if _periodic and _length > 2:
        _bonds.append((_length - 1, 0, float(_coupling)))
    return SpinGlassInstance(CouplingGraph(_length, tuple(_bonds)), None, 0, f"ferrochain{_length}")


def _match_Lattice(_graph: CouplingGraph, _width: int, _height: int) -> Optional[bool]:
    '''
    @return
        The periodic flag for which the graph's bond list equals the canonical lattice, or None
    '''
    _sitePairs = [(_b[0], _b[1]) for _b in _graph.bonds]
    for _periodic in (True, False):
        _geometry = list_SquareBonds(_width, _height, _periodic)
        if _sitePairs == [(_g[0], _g[1]) for _g in _geometry]:
            return _periodic
    return None


def infer_SquareLattice(_graph: CouplingGraph) -> Optional[SquareLattice]:
    '''
    @desc
        Recovers (width, height, periodic) of a graph whose bond list is a canonical square lattice
    @return
        SquareLattice or None if the graph isn't one
    '''
    for _width in range(2, _graph.nSites // 2 + 1):
        if _graph.nSites % _width != 0:
            continue
        _height = _graph.nSites // _width
        if _height < 2:
            continue
        _periodic = _match_Lattice(_graph, _width, _height)
        if _periodic is not None:
            return SquareLattice(_width, _height, _periodic)
    return None


def default_SquareSubsets(
        _graph: CouplingGraph,
        _width: int,
        _height: int) -> BondSubsets:
    '''
    @desc
        One subset per elementary plaquette of the lattice, i.e., the four bonds around sites
        (x, y), (x+1, y), (x+1, y+1), (x, y+1). A periodic lattice has width*height subsets.
    @param[in]  _graph
        Square lattice produced by generate_Instance (or the same bond list loaded from file)
    @param[in]  _width
        Declared number of columns
    @param[in]  _height
        Declared number of rows
    @return
        BondSubsets covering every bond
    '''
    _check_Dimensions(_width, _height)
    if _graph.nSites != _width * _height:
        raise ConfigException(f"Graph has {_graph.nSites} sites, a {_width} x {_height} lattice has {_width * _height}")
    _periodic = _match_Lattice(_graph, _width, _height)
    if _periodic is None:
        raise ConfigException(f"Graph bonds don't match a {_width} x {_height} square lattice")

    _bondIndex = {(_g[2], _g[3], _g[4]): _b for _b, _g in enumerate(list_SquareBonds(_width, _height, _periodic))}

    _subsets = []
    _xRange = _width if _periodic else _width - 1
    _yRange = _height if _periodic else _height - 1
    for _y in range(_yRange):
        for _x in range(_xRange):
            _subsets.append((
                _bondIndex[(_x, _y, "h")],
                _bondIndex[((_x + 1) % _width, _y, "v")],
                _bondIndex[(_x, (_y + 1) % _height, "h")],
                _bondIndex[(_x, _y, "v")]))
    _result = BondSubsets(tuple(_subsets))
    _result.check_Against(_graph)
    return _result
