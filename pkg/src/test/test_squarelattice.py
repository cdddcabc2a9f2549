'''
Created on: 17 Oct 2026
@desc
    We conduct the unit test here for square-lattice instance generation and the plaquette subsets
'''

import unittest

import numpy as np
from scipy import stats

from src.problem.couplinggraph import color_Edges
from src.problem.squarelattice import build_FerroChain, build_FerroSquare, default_SquareSubsets, \
    generate_Instance, infer_SquareLattice, list_SquareBonds
from src.sim.simexceptions import ConfigException


class TestSquareLattice(unittest.TestCase):

    def test_BondCounts(self):
        self.assertEqual(len(list_SquareBonds(4, 4, True)), 32)
        self.assertEqual(len(list_SquareBonds(4, 4, False)), 24)
        self.assertEqual(len(list_SquareBonds(3, 2, False)), 7)

    def test_GenerateIsDeterministic(self):
        _first = generate_Instance(4, 4, True, 3)
        _second = generate_Instance(4, 4, True, 3)
        _other = generate_Instance(4, 4, True, 4)
        self.assertEqual(_first.graph, _second.graph)
        self.assertNotEqual(_first.graph, _other.graph)
        self.assertEqual(_first.name, "sq4x4p_s3")
        self.assertEqual(_first.seed, 3)
        self.assertIsNone(_first.groundEnergy)
        self.assertTrue(np.all(np.abs(_first.graph.couplings) <= 1.0))

    def test_CheckerboardColoring(self):
        _graph = generate_Instance(4, 4, True, 1).graph
        _coloring = color_Edges(_graph)
        self.assertEqual(_coloring.nColors, 4)
        self.assertTrue(_coloring.is_Proper(_graph))

    def test_InvalidDimensions(self):
        with self.assertRaises(ConfigException):
            generate_Instance(1, 4, True, 0)
        with self.assertRaises(ConfigException):
            build_FerroSquare(3, 0)
        with self.assertRaises(ConfigException):
            build_FerroChain(1)

    def test_FerroBuilders(self):
        _square = build_FerroSquare(3, 3, False)
        self.assertEqual(_square.graph.nBonds, 12)
        self.assertTrue(np.all(_square.graph.couplings == -1.0))
        _ring = build_FerroChain(5)
        self.assertEqual(_ring.graph.nBonds, 5)
        self.assertEqual(build_FerroChain(5, False).graph.nBonds, 4)
        self.assertEqual(_ring.name, "ferrochain5")
        self.assertIsNone(_ring.lattice)

    def test_InferLattice(self):
        _lattice = infer_SquareLattice(generate_Instance(4, 3, False, 2).graph)
        self.assertEqual((_lattice.width, _lattice.height, _lattice.periodic), (4, 3, False))
        _lattice = infer_SquareLattice(build_FerroSquare(2, 4, True).graph)
        self.assertEqual((_lattice.width, _lattice.height, _lattice.periodic), (2, 4, True))
        self.assertIsNone(infer_SquareLattice(build_FerroChain(4).graph))

    def test_DefaultSubsets(self):
        _graph = generate_Instance(4, 4, True, 5).graph
        _subsets = default_SquareSubsets(_graph, 4, 4)
        self.assertEqual(_subsets.nSubsets, 16)
        for _subset in _subsets.subsets:
            self.assertEqual(len(set(_subset)), 4)
        # every bond borders two plaquettes on a periodic lattice
        _counts = np.bincount(np.concatenate([np.array(_s) for _s in _subsets.subsets]), minlength=_graph.nBonds)
        self.assertTrue(np.all(_counts == 2))

        _open = default_SquareSubsets(generate_Instance(3, 3, False, 5).graph, 3, 3)
        self.assertEqual(_open.nSubsets, 4)

        with self.assertRaises(ConfigException):
            default_SquareSubsets(_graph, 2, 8)

    def test_CouplingsAreUniform(self):
        _couplings = np.concatenate([generate_Instance(10, 10, True, _seed).graph.couplings for _seed in range(5)])
        self.assertEqual(len(_couplings), 1000)
        self.assertGreater(stats.kstest(_couplings, stats.uniform(loc=-1.0, scale=2.0).cdf).pvalue, 0.001)
