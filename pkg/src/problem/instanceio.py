'''
Created on: 17 Oct 2026
@desc
    Text formats of instances and bond subsets.

    Instance file:
        N B
        i j J_ij            (B lines, 0-based sites)
        # E0 <value>        (optional)
        # seed <value>      (optional)
    Subset file: one line per subset listing bond indices separated by blanks.
'''

import os

from src.problem.couplinggraph import BondSubsets, CouplingGraph, SpinGlassInstance
from src.problem.squarelattice import infer_SquareLattice
from src.sim.simexceptions import ConfigException, SQAIOException


def write_Instance(
        _instance: SpinGlassInstance,
        _filePath: str,
        _comments: 'list[str] | None' = None) -> None:
    '''
    @desc
        Writes the instance. Couplings are printed with 17 significant digits so they read back exactly.
    @param[in]  _comments
        Extra lines written as "# <line>" at the head of the file, e.g., provenance
    '''
    _graph = _instance.graph
    _lines = [f"# {_c}" for _c in (_comments or [])]
    _lines.append(f"{_graph.nSites} {_graph.nBonds}")
    _lines.extend(f"{_i} {_j} {_coupling:.17g}" for _i, _j, _coupling in _graph.bonds)
    if _instance.groundEnergy is not None:
        _lines.append(f"# E0 {_instance.groundEnergy:.17g}")
    if _instance.seed is not None:
        _lines.append(f"# seed {_instance.seed}")
    try:
        with open(_filePath, "w") as _file:
            _file.write("\n".join(_lines) + "\n")
    except OSError as e:
        raise SQAIOException(f"Couldn't write the instance file at {_filePath}: {e}")


def read_Instance(_filePath: str) -> SpinGlassInstance:
    '''
    @desc
        Reads an instance file. Couplings of any range are accepted.
        The lattice shape is recovered when the bonds form a canonical square lattice.
    '''
    try:
        with open(_filePath, "r") as _file:
            _rawLines = _file.read().splitlines()
    except OSError as e:
        raise SQAIOException(f"Couldn't read the instance file at {_filePath}: {e}")

    _groundEnergy = None
    _seed = None
    _dataLines = []
    for _line in _rawLines:
        _stripped = _line.strip()
        if _stripped == "":
            continue
        if _stripped.startswith("#"):
            _tokens = _stripped[1:].split()
            if len(_tokens) == 2 and _tokens[0] == "E0":
                _groundEnergy = float(_tokens[1])
            elif len(_tokens) == 2 and _tokens[0] == "seed":
                _seed = int(_tokens[1])
            continue
        _dataLines.append(_stripped.split())

    try:
        _nSites, _nBonds = int(_dataLines[0][0]), int(_dataLines[0][1])
        _bonds = tuple((int(_t[0]), int(_t[1]), float(_t[2])) for _t in _dataLines[1:])
    except (IndexError, ValueError) as e:
        raise ConfigException(f"Malformed instance file {_filePath}: {e}")
    if len(_bonds) != _nBonds:
        raise ConfigException(f"Instance file {_filePath} declares {_nBonds} bonds but lists {len(_bonds)}")

    # parallel bonds are only legal on periodic lattices with a side of length 2
    _pairs = [(min(_b[0], _b[1]), max(_b[0], _b[1])) for _b in _bonds]
    _hasParallelBonds = len(set(_pairs)) != len(_pairs)
    _graph = CouplingGraph(_nSites, _bonds, allowParallelBonds=_hasParallelBonds)
    _lattice = infer_SquareLattice(_graph)
    if _hasParallelBonds and (_lattice is None or not _lattice.periodic):
        raise ConfigException(f"Instance file {_filePath} has duplicate bonds")

    _name = os.path.splitext(os.path.basename(_filePath))[0]
    return SpinGlassInstance(_graph, _groundEnergy, _seed, _name, _lattice)


def write_Subsets(
        _subsets: BondSubsets,
        _filePath: str) -> None:
    try:
        with open(_filePath, "w") as _file:
            for _subset in _subsets.subsets:
                _file.write(" ".join(str(_b) for _b in _subset) + "\n")
    except OSError as e:
        raise SQAIOException(f"Couldn't write the subset file at {_filePath}: {e}")


def read_Subsets(_filePath: str) -> BondSubsets:
    try:
        with open(_filePath, "r") as _file:
            _rawLines = _file.read().splitlines()
    except OSError as e:
        raise SQAIOException(f"Couldn't read the subset file at {_filePath}: {e}")
    try:
        return BondSubsets(tuple(tuple(int(_t) for _t in _line.split())
                                 for _line in _rawLines
                                 if _line.strip() != "" and not _line.strip().startswith("#")))
    except ValueError as e:
        raise ConfigException(f"Malformed subset file {_filePath}: {e}")
