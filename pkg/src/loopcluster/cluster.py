'''
Created on: 17 Oct 2026
@desc
    Cluster produced by one loop growth, prior to the flip decision.

    Node ids: real spin (l, i) -> l*N + i. The upper corner of the plaquette at step l on site i, which sits
    below the label position (l, i), is a virtual node N*M*K + l*N + i.
'''

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class Cluster:
    seedNode: int
    subsetIndex: Optional[int]
    members: 'set[int]' = field(default_factory=set)
    externalPlaquettes: 'list[tuple[int, int]]' = field(default_factory=list)
    toggledLegs: 'list[int]' = field(default_factory=list)
    newLabels: 'list[tuple[int, int]]' = field(default_factory=list)
    removedLabels: 'list[tuple[int, int]]' = field(default_factory=list)
    size: int = 0
    accepted: Optional[bool] = None
