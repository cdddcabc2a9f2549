'''
Created on: 17 Oct 2026
@desc
    We conduct the unit test here for the Trotter layout, the worldline configuration and its observables
'''

import os
import unittest

import numpy as np

from src.problem.couplinggraph import CouplingGraph, color_Edges
from src.problem.squarelattice import build_FerroChain, generate_Instance
from src.sim.simexceptions import ConfigException
from src.worldline.observables import compute_ConfigWeight, measure_SliceEnergies, measure_ZZ
from src.worldline.trotter import LEG_FREE, LEG_IDENTITY, PlaquetteLayout, TrotterParams, make_TrotterParams
from src.worldline.worldlineconfig import WorldlineConfig


class TestTrotter(unittest.TestCase):

    def test_Params(self):
        _params = TrotterParams(2.0, 8, 3)
        self.assertAlmostEqual(_params.delta, 0.25)
        self.assertEqual(_params.nTimeSlices, 24)
        _params.check_Weights(3.9, 3.9)
        with self.assertRaises(ConfigException):
            _params.check_Weights(4.0, 0.0)
        with self.assertRaises(ConfigException):
            _params.check_Weights(1.0, 4.0)
        with self.assertRaises(ConfigException):
            _params.check_Weights(1.0, -1.0)
        with self.assertRaises(ConfigException):
            TrotterParams(0.0, 8, 1)
        with self.assertRaises(ConfigException):
            TrotterParams(1.0, 0, 1)

    def test_Layout(self):
        # path 0-1-2 plus an isolated site 3
        _graph = CouplingGraph(4, ((0, 1, -1.0), (1, 2, 0.5)))
        _coloring = color_Edges(_graph)
        _layout = PlaquetteLayout(_graph, _coloring, make_TrotterParams(_coloring, 1.0, 4))
        self.assertEqual(_layout.nTimeSlices, 8)
        self.assertListEqual(_layout.legKinds[0].tolist(), [0, 0, LEG_IDENTITY, LEG_FREE])
        self.assertListEqual(_layout.legKinds[1].tolist(), [LEG_IDENTITY, 1, 1, LEG_IDENTITY])
        self.assertListEqual(_layout.legDegrees.tolist(), [1, 2, 1, 1])
        self.assertEqual(_layout.get_LegKind(5, 2), 1)
        self.assertListEqual(_layout.get_PlaquetteSteps(1).tolist(), [1, 3, 5, 7])
        self.assertListEqual(_layout.get_StepBonds(6), [0])
        _plaquettes = _layout.get_ShadedPlaquettes()
        self.assertEqual(len(_plaquettes), 8)
        self.assertEqual(_plaquettes[-1].topSlice, 0)

    def test_LayoutRejectsMismatch(self):
        _graph = build_FerroChain(4).graph
        _coloring = color_Edges(_graph)
        with self.assertRaises(ConfigException):
            PlaquetteLayout(_graph, _coloring, TrotterParams(1.0, 4, _coloring.nColors + 1))


class TestWorldlineConfig(unittest.TestCase):

    def setUp(self):
        self.__dumpPath = os.path.join(os.getcwd(), "test_worldline_dump.txt")

    def test_CreateRandom(self):
        _config = WorldlineConfig.create_Random(5, 12, np.random.default_rng(3))
        self.assertEqual(_config.spins.shape, (12, 5))
        self.assertTrue(np.all(_config.spins == _config.spins[0]))
        self.assertEqual(len(_config.get_XLabelSet()), 0)

    def test_FlipCluster(self):
        _config = WorldlineConfig(np.ones((4, 3)))
        _original = _config.copy()
        _config.flip_Cluster(np.array([0, 4]), np.array([5]))
        self.assertEqual(_config.spins[0, 0], -1)
        self.assertEqual(_config.spins[1, 1], -1)
        self.assertSetEqual(_config.get_XLabelSet(), {(2, 1)})
        self.assertEqual(_config.get_UpperCorner(1, 2), -1)
        self.assertEqual(_config.get_UpperCorner(0, 1), -1)
        self.assertFalse(_config.is_Identical(_original))
        _config.flip_Cluster(np.array([0, 4]), np.array([5]))
        self.assertTrue(_config.is_Identical(_original))
        self.assertEqual(_config.get_SpinKey(), _original.get_SpinKey())

    def test_InvalidSpins(self):
        with self.assertRaises(ConfigException):
            WorldlineConfig(np.zeros((2, 2)))
        with self.assertRaises(ConfigException):
            WorldlineConfig(np.ones((2, 2)), np.zeros((3, 2)))

    def test_DumpLoad(self):
        _config = WorldlineConfig(np.where(np.random.default_rng(1).random((6, 4)) < 0.5, 1, -1))
        _config.dump_Text(self.__dumpPath)
        self.assertTrue(np.array_equal(WorldlineConfig.load_Text(self.__dumpPath).spins, _config.spins))

    def tearDown(self) -> None:
        if os.path.isfile(self.__dumpPath):
            os.remove(self.__dumpPath)


class TestObservables(unittest.TestCase):

    def test_ZZ(self):
        _graph = build_FerroChain(4).graph
        self.assertEqual(measure_ZZ(WorldlineConfig(np.ones((6, 4))), _graph), 1.0)
        _staggered = WorldlineConfig(np.tile([1, -1, 1, -1], (6, 1)))
        self.assertEqual(measure_ZZ(_staggered, _graph), -1.0)
        self.assertListEqual(measure_SliceEnergies(_staggered, _graph).tolist(), [4.0] * 6)
        self.assertEqual(measure_ZZ(_staggered, CouplingGraph(4, ())), 0.0)

    def test_ConfigWeight(self):
        _graph = generate_Instance(2, 2, False, 8).graph
        _coloring = color_Edges(_graph)
        _layout = PlaquetteLayout(_graph, _coloring, make_TrotterParams(_coloring, 1.0, 4))
        _config = WorldlineConfig(np.ones((_layout.nTimeSlices, 4)))
        # constant worldlines only meet T1 plaquettes
        _expected = float(np.prod((1.0 - 0.25 * _graph.couplings) ** 4))
        self.assertAlmostEqual(compute_ConfigWeight(_config, _layout, 0.5, 0.5), _expected, places=12)

        # a lone spin flip is invalid
        _spins = np.ones((_layout.nTimeSlices, 4))
        _spins[3, 0] = -1
        self.assertEqual(compute_ConfigWeight(WorldlineConfig(_spins), _layout, 0.5, 0.5), 0.0)
