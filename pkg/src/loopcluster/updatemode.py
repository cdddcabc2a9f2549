'''
Created on: 17 Oct 2026
@desc
    Global and semi-local (restricted) update modes.
'''

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from src.problem.couplinggraph import BondSubsets, CouplingGraph
from src.sim.simexceptions import ConfigException


class EUpdateMode(Enum):
    GLOBAL = "global"
    SEMI_LOCAL = "semilocal"


@dataclass(frozen=True)
class UpdateMode:
    '''
    GLOBAL behaves as a single subset holding every bond, and every flip is accepted.
    SEMI_LOCAL grows clusters inside one bond subset and accepts the flip with a Metropolis test on the outside bonds.
    '''
    modeType: EUpdateMode
    subsets: Optional[BondSubsets] = None

    def __post_init__(self) -> None:
        if self.modeType == EUpdateMode.SEMI_LOCAL and self.subsets is None:
            raise ConfigException("Semi-local mode needs bond subsets")

    @property
    def isGlobal(self) -> bool:
        return self.modeType == EUpdateMode.GLOBAL

    def get_Subsets(self, _graph: CouplingGraph) -> 'list[tuple[int, ...]]':
        if self.isGlobal:
            return [tuple(range(_graph.nBonds))] if _graph.nBonds > 0 else []
        self.subsets.check_Against(_graph)
        return list(self.subsets.subsets)


def make_GlobalMode() -> UpdateMode:
    return UpdateMode(EUpdateMode.GLOBAL)


def make_SemiLocalMode(_subsets: BondSubsets) -> UpdateMode:
    return UpdateMode(EUpdateMode.SEMI_LOCAL, _subsets)
