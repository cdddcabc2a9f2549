'''
Created on: 17 Oct 2026
@desc
    We conduct the unit test here for the loop-cluster updater. The visited spin configurations are histogrammed
    and compared with exact enumeration of the worldline measure.
'''

import unittest
from collections import Counter

import numpy as np

from src.loopcluster.clusterupdater import ETFStops, LoopClusterUpdater
from src.loopcluster.updatemode import EUpdateMode, UpdateMode, make_GlobalMode, make_SemiLocalMode
from src.oracle.worldlineenum import enumerate_WorldlineDistribution
from src.problem.couplinggraph import BondSubsets, CouplingGraph, color_Edges
from src.problem.squarelattice import default_SquareSubsets, generate_Instance
from src.sim.simexceptions import ConfigException, SQAException
from src.worldline.observables import compute_ConfigWeight
from src.worldline.trotter import PlaquetteLayout, make_TrotterParams
from src.worldline.worldlineconfig import WorldlineConfig


def make_Layout(_graph: CouplingGraph, _beta: float, _mSlices: int) -> PlaquetteLayout:
    _coloring = color_Edges(_graph)
    return PlaquetteLayout(_graph, _coloring, make_TrotterParams(_coloring, _beta, _mSlices))


def sample_Histogram(
        _updater: LoopClusterUpdater,
        _config: WorldlineConfig,
        _nThermalize: int,
        _nSamples: int) -> 'dict[bytes, float]':
    for _ in range(_nThermalize):
        _updater.run_Update(_config)
    _counts = Counter()
    for _ in range(_nSamples):
        _updater.run_Update(_config)
        _counts[_config.get_SpinKey()] += 1
    return {_key: _count / _nSamples for _key, _count in _counts.items()}


def compute_TotalVariation(_first: 'dict[bytes, float]', _second: 'dict[bytes, float]') -> float:
    _keys = set(_first) | set(_second)
    return 0.5 * sum(abs(_first.get(_k, 0.0) - _second.get(_k, 0.0)) for _k in _keys)


class TestDetailedBalance(unittest.TestCase):

    def test_SingleBondNoField(self):
        _layout = make_Layout(CouplingGraph(2, ((0, 1, -1.0),)), 1.0, 4)
        _updater = LoopClusterUpdater(_layout, make_GlobalMode(), np.random.default_rng(11), ETFStops.EXACT)
        _updater.set_Parameters(0.0, 0.5)
        _config = WorldlineConfig.create_Random(2, _layout.nTimeSlices, np.random.default_rng(12))
        _empirical = sample_Histogram(_updater, _config, 500, 30000)
        _exact = enumerate_WorldlineDistribution(_layout, 0.0, 0.5)
        self.assertLess(compute_TotalVariation(_empirical, _exact), 0.05)
        self.assertEqual(len(_config.get_XLabelSet()), 0)

    def test_SingleBondWithField(self):
        _layout = make_Layout(CouplingGraph(2, ((0, 1, 0.8),)), 1.0, 3)
        _updater = LoopClusterUpdater(_layout, make_GlobalMode(), np.random.default_rng(21), ETFStops.EXACT)
        _updater.set_Parameters(0.7, 0.4)
        _config = WorldlineConfig.create_Random(2, _layout.nTimeSlices, np.random.default_rng(22))
        _empirical = sample_Histogram(_updater, _config, 500, 40000)
        _exact = enumerate_WorldlineDistribution(_layout, 0.7, 0.4)
        self.assertLess(compute_TotalVariation(_empirical, _exact), 0.06)

    def test_SemiLocalPath(self):
        # path 0-1-2, each bond its own subset, so every cluster meets the other bond as external plaquettes
        _graph = CouplingGraph(3, ((0, 1, -0.6), (1, 2, 0.9)))
        _layout = make_Layout(_graph, 1.0, 2)
        _mode = make_SemiLocalMode(BondSubsets(((0,), (1,))))
        _updater = LoopClusterUpdater(_layout, _mode, np.random.default_rng(31), ETFStops.EXACT)
        _updater.set_Parameters(0.0, 0.8)
        _config = WorldlineConfig.create_Random(3, _layout.nTimeSlices, np.random.default_rng(32))
        _empirical = sample_Histogram(_updater, _config, 1000, 50000)
        _exact = enumerate_WorldlineDistribution(_layout, 0.0, 0.8)
        self.assertLess(compute_TotalVariation(_empirical, _exact), 0.08)

    def test_PlaquetteStopsWithField(self):
        # without Lambda no plaquette is T3/T4, so the plaquette rule samples the measure exactly
        _layout = make_Layout(CouplingGraph(2, ((0, 1, -0.7),)), 1.0, 3)
        _updater = LoopClusterUpdater(_layout, make_GlobalMode(), np.random.default_rng(41), ETFStops.PLAQUETTE)
        _updater.set_Parameters(0.6, 0.0)
        _config = WorldlineConfig.create_Random(2, _layout.nTimeSlices, np.random.default_rng(42))
        _empirical = sample_Histogram(_updater, _config, 500, 40000)
        _exact = enumerate_WorldlineDistribution(_layout, 0.6, 0.0)
        self.assertLess(compute_TotalVariation(_empirical, _exact), 0.04)

    def test_PlaquetteStopsWithFieldAndExchange(self):
        # the plaquette rule skips stops above T3/T4, which is close to exact for a small stop probability
        _layout = make_Layout(CouplingGraph(2, ((0, 1, -0.7),)), 0.5, 4)
        _updater = LoopClusterUpdater(_layout, make_GlobalMode(), np.random.default_rng(43), ETFStops.PLAQUETTE)
        _updater.set_Parameters(0.3, 0.5)
        _config = WorldlineConfig.create_Random(2, _layout.nTimeSlices, np.random.default_rng(44))
        _empirical = sample_Histogram(_updater, _config, 500, 40000)
        _exact = enumerate_WorldlineDistribution(_layout, 0.3, 0.5)
        self.assertLess(compute_TotalVariation(_empirical, _exact), 0.08)

    def test_SemiLocalPathWithField(self):
        _graph = CouplingGraph(3, ((0, 1, -0.6), (1, 2, 0.9)))
        _layout = make_Layout(_graph, 1.0, 2)
        _mode = make_SemiLocalMode(BondSubsets(((0,), (1,))))
        for _tfStops, _lambda, _seed in ((ETFStops.PLAQUETTE, 0.0, 51), (ETFStops.EXACT, 0.8, 53)):
            _updater = LoopClusterUpdater(_layout, _mode, np.random.default_rng(_seed), _tfStops)
            _updater.set_Parameters(0.6, _lambda)
            _config = WorldlineConfig.create_Random(3, _layout.nTimeSlices, np.random.default_rng(_seed + 1))
            _empirical = sample_Histogram(_updater, _config, 1000, 50000)
            _exact = enumerate_WorldlineDistribution(_layout, 0.6, _lambda)
            self.assertLess(compute_TotalVariation(_empirical, _exact), 0.08, _tfStops)


class TestLoopClusterUpdater(unittest.TestCase):

    def setUp(self):
        _instance = generate_Instance(4, 4, True, 3)
        self.__graph = _instance.graph
        self.__layout = make_Layout(self.__graph, 2.0, 8)
        self.__subsets = default_SquareSubsets(self.__graph, 4, 4)

    def test_RequiresParameters(self):
        _updater = LoopClusterUpdater(self.__layout, make_GlobalMode(), np.random.default_rng(0))
        _config = WorldlineConfig.create_Random(16, self.__layout.nTimeSlices, np.random.default_rng(1))
        with self.assertRaises(SQAException):
            _updater.run_Update(_config)
        with self.assertRaises(ConfigException):
            _updater.set_Parameters(-1.0, 0.5)
        # delta*Lambda = 1
        with self.assertRaises(ConfigException):
            _updater.set_Parameters(1.0, 4.0)

    def test_SemiLocalNeedsSubsets(self):
        with self.assertRaises(ConfigException):
            UpdateMode(EUpdateMode.SEMI_LOCAL)

    def test_FlipTwiceRestores(self):
        _updater = LoopClusterUpdater(self.__layout, make_GlobalMode(), np.random.default_rng(4))
        _updater.set_Parameters(1.0, 1.0)
        _config = WorldlineConfig.create_Random(16, self.__layout.nTimeSlices, np.random.default_rng(5))
        _updater.run_Sweep(_config, 50)
        _before = _config.copy()
        _cluster = _updater.grow_Cluster(_config)
        self.assertTrue(_before.is_Identical(_config))
        self.assertTrue(_updater.flip_Cluster(_config, _cluster))
        self.assertFalse(_before.is_Identical(_config))
        _updater.flip_Cluster(_config, _cluster)
        self.assertTrue(_before.is_Identical(_config))

    def test_GlobalAlwaysAccepts(self):
        _updater = LoopClusterUpdater(self.__layout, make_GlobalMode(), np.random.default_rng(6))
        _updater.set_Parameters(1.0, 0.5)
        _config = WorldlineConfig.create_Random(16, self.__layout.nTimeSlices, np.random.default_rng(7))
        _statistics = _updater.run_Sweep(_config)
        self.assertEqual(_statistics.nUpdates, 16)
        self.assertEqual(_statistics.acceptanceRate, 1.0)
        self.assertGreater(_statistics.meanClusterSize, 0.0)

    def test_ConfigurationsStayValid(self):
        for _mode, _tfStops in ((make_GlobalMode(), ETFStops.PLAQUETTE),
                                (make_SemiLocalMode(self.__subsets), ETFStops.EXACT)):
            _updater = LoopClusterUpdater(self.__layout, _mode, np.random.default_rng(8), _tfStops)
            _updater.set_Parameters(1.5, 0.8)
            _config = WorldlineConfig.create_Random(16, self.__layout.nTimeSlices, np.random.default_rng(9))
            for _ in range(20):
                _statistics = _updater.run_Sweep(_config)
                self.assertGreater(compute_ConfigWeight(_config, self.__layout, 1.5, 0.8), 0.0)
            self.assertLessEqual(_statistics.acceptanceRate, 1.0)

    def test_SemiLocalClustersStayInSubset(self):
        _updater = LoopClusterUpdater(self.__layout, make_SemiLocalMode(self.__subsets), np.random.default_rng(10))
        _updater.set_Parameters(0.5, 0.5)
        _config = WorldlineConfig.create_Random(16, self.__layout.nTimeSlices, np.random.default_rng(11))
        _siteSets = self.__subsets.get_SiteSets(self.__graph)
        _virtualOffset = 16 * self.__layout.nTimeSlices
        for _ in range(200):
            _cluster = _updater.grow_Cluster(_config)
            _sites = {(_n % _virtualOffset) % 16 for _n in _cluster.members}
            self.assertTrue(_sites <= _siteSets[_cluster.subsetIndex])
            _updater.flip_Cluster(_config, _cluster)


class TestClusterShapes(unittest.TestCase):

    def test_ReachesEveryClassicalState(self):
        _graph = generate_Instance(2, 2, False, 6).graph
        _layout = make_Layout(_graph, 0.5, 2)
        for _mode in (make_GlobalMode(), make_SemiLocalMode(default_SquareSubsets(_graph, 2, 2))):
            _updater = LoopClusterUpdater(_layout, _mode, np.random.default_rng(61))
            _updater.set_Parameters(1.0, 0.5)
            _config = WorldlineConfig.create_Random(4, _layout.nTimeSlices, np.random.default_rng(62))
            _seen = set()
            for _ in range(20000):
                _updater.run_Update(_config)
                _seen.add(_config.spins[0].tobytes())
            self.assertEqual(len(_seen), 16, _mode.modeType)

    def test_LargeFieldStopsImmediately(self):
        # p_x is clamped just below 1, so the walk stops on the first leg it meets in each direction
        _layout = make_Layout(CouplingGraph(2, ((0, 1, -0.01),)), 1.0, 4)
        _updater = LoopClusterUpdater(_layout, make_GlobalMode(), np.random.default_rng(71))
        _updater.set_Parameters(20.0, 0.0)
        self.assertGreater(_updater.stopProbabilities[0], 0.999)
        _config = WorldlineConfig.create_Random(2, _layout.nTimeSlices, np.random.default_rng(72))
        _sizes = Counter()
        for _ in range(2000):
            _cluster = _updater.grow_Cluster(_config)
            self.assertIn(_cluster.size, (2, 4))
            self.assertEqual(len(_cluster.toggledLegs), _cluster.size)
            _sizes[_cluster.size] += 1
            _updater.flip_Cluster(_config, _cluster)
        self.assertGreater(_sizes[2], 0.9 * 2000)
