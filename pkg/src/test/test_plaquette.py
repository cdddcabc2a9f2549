'''
Created on: 17 Oct 2026
@desc
    We conduct the unit test here for plaquette classification and weights
'''

import itertools
import unittest

import numpy as np

from src.sim.simexceptions import ConfigException
from src.worldline.plaquette import EPlaquetteType, classify_Plaquette, classify_PlaquetteArrays, \
    compute_PlaquetteWeight, get_PlaquetteWeights


class TestPlaquette(unittest.TestCase):

    def test_Classify(self):
        self.assertEqual(classify_Plaquette((1, 1), (1, 1)), EPlaquetteType.T1)
        self.assertEqual(classify_Plaquette((-1, -1), (-1, -1)), EPlaquetteType.T1)
        self.assertEqual(classify_Plaquette((1, -1), (1, -1)), EPlaquetteType.T2)
        self.assertEqual(classify_Plaquette((1, -1), (-1, 1)), EPlaquetteType.T3)
        self.assertEqual(classify_Plaquette((1, 1), (-1, -1)), EPlaquetteType.T4)
        # a single spin flip changes the parity
        self.assertEqual(classify_Plaquette((1, 1), (1, -1)), EPlaquetteType.INVALID)
        self.assertEqual(classify_Plaquette((1, -1), (-1, -1)), EPlaquetteType.INVALID)

    def test_ClassifyArraysMatchesScalar(self):
        _corners = np.array(list(itertools.product((1, -1), repeat=4)))
        _types = classify_PlaquetteArrays(_corners[:, 0], _corners[:, 1], _corners[:, 2], _corners[:, 3])
        for _corner, _type in zip(_corners, _types):
            self.assertEqual(int(_type), int(classify_Plaquette((_corner[0], _corner[1]), (_corner[2], _corner[3]))))
        # 2 states per valid type
        self.assertEqual(int(np.sum(_types != EPlaquetteType.INVALID)), 8)

    def test_Weights(self):
        _weights = get_PlaquetteWeights(-0.5, 0.4, 0.1)
        self.assertAlmostEqual(_weights[EPlaquetteType.INVALID], 0.0)
        self.assertAlmostEqual(_weights[EPlaquetteType.T1], 1.05)
        self.assertAlmostEqual(_weights[EPlaquetteType.T2], 0.95)
        self.assertAlmostEqual(_weights[EPlaquetteType.T3], 0.04)
        self.assertAlmostEqual(_weights[EPlaquetteType.T4], 0.04)
        self.assertAlmostEqual(compute_PlaquetteWeight(EPlaquetteType.T2, 0.5, 0.0, 0.1), 1.05)
        self.assertEqual(compute_PlaquetteWeight(EPlaquetteType.T3, 0.5, 0.0, 0.1), 0.0)

    def test_InvalidWeights(self):
        with self.assertRaises(ConfigException):
            get_PlaquetteWeights(1.0, -0.1, 0.1)
        with self.assertRaises(ConfigException):
            get_PlaquetteWeights(1.0, 0.0, 1.0)
        with self.assertRaises(ConfigException):
            get_PlaquetteWeights(0.1, 20.0, 0.1)
