'''
Created on: 17 Oct 2026
@desc
    We conduct the unit test here for the exhaustive ground-state search
'''

import itertools
import unittest

import numpy as np

from src.problem.couplinggraph import CouplingGraph
from src.problem.groundstate import MAX_EXHAUSTIVE_SITES, find_GroundStateExhaustive
from src.problem.squarelattice import build_FerroSquare, generate_Instance
from src.sim.simexceptions import CapacityException


class TestGroundState(unittest.TestCase):

    def test_Ferromagnet(self):
        _graph = build_FerroSquare(3, 3, False).graph
        _energy, _config = find_GroundStateExhaustive(_graph)
        self.assertEqual(_energy, -12.0)
        self.assertTrue(np.all(_config == 1))

    def test_AgainstBruteForce(self):
        _graph = generate_Instance(3, 3, True, 4).graph
        _energy, _config = find_GroundStateExhaustive(_graph)
        _bruteForce = min(_graph.compute_Energy(np.array(_s)) for _s in itertools.product((1, -1), repeat=9))
        self.assertAlmostEqual(_energy, _bruteForce, places=12)
        self.assertAlmostEqual(_graph.compute_Energy(_config), _energy, places=12)
        self.assertEqual(_config[0], 1)

    def test_SingleSite(self):
        _energy, _config = find_GroundStateExhaustive(CouplingGraph(1, ()))
        self.assertEqual(_energy, 0.0)
        self.assertListEqual(_config.tolist(), [1])

    def test_Capacity(self):
        _nSites = MAX_EXHAUSTIVE_SITES + 1
        _graph = CouplingGraph(_nSites, tuple((_i, _i + 1, -1.0) for _i in range(_nSites - 1)))
        with self.assertRaises(CapacityException):
            find_GroundStateExhaustive(_graph)

    def test_GlobalFlipSymmetry(self):
        _graph = generate_Instance(4, 3, False, 8).graph
        _energy, _config = find_GroundStateExhaustive(_graph)
        self.assertAlmostEqual(_graph.compute_Energy(-_config), _energy, places=12)

    def test_ReversedEnumeration(self):
        _graph = generate_Instance(3, 3, True, 11).graph
        _energy, _ = find_GroundStateExhaustive(_graph)
        # states visited from all-down to all-up on the site-reversed graph
        _last = _graph.nSites - 1
        _reversed = CouplingGraph(_graph.nSites, tuple((_last - _i, _last - _j, _c) for _i, _j, _c in _graph.bonds),
                                  allowParallelBonds=True)
        _reversedEnergy, _reversedConfig = find_GroundStateExhaustive(_reversed)
        _bruteForce = min(_reversed.compute_Energy(np.array(_s)) for _s in itertools.product((-1, 1), repeat=9))
        self.assertAlmostEqual(_reversedEnergy, _energy, places=12)
        self.assertAlmostEqual(_bruteForce, _energy, places=12)
        self.assertAlmostEqual(_graph.compute_Energy(_reversedConfig[::-1]), _energy, places=12)
