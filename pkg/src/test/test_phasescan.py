'''
Created on: 17 Oct 2026
@desc
    We conduct the unit test here for the (Lambda, Gamma) scan and the boundary extraction
'''

import unittest

import numpy as np
import pandas as pd

from src.loopcluster.updatemode import make_GlobalMode
from src.problem.squarelattice import build_FerroSquare
from src.sim.phasescan import PHASE_COLUMNS, extract_PhaseBoundary, normalize_Correlation, run_PhaseScan
from src.sim.simexceptions import ConfigException


class TestPhaseScan(unittest.TestCase):

    def test_Normalize(self):
        self.assertListEqual(normalize_Correlation(pd.Series([0.2, 0.6, 1.0])).tolist(), [0.0, 0.5, 1.0])
        self.assertListEqual(normalize_Correlation(pd.Series([0.3, 0.3])).tolist(), [0.0, 0.0])

    def test_Boundary(self):
        _table = pd.DataFrame({
            "lambda": [0.0, 1.0, 2.0, 0.0, 1.0, 2.0, 0.0, 1.0, 2.0],
            "gamma": [0.5, 0.5, 0.5, 1.0, 1.0, 1.0, 2.0, 2.0, 2.0],
            "zz_norm": [1.0, 0.8, 0.2, 0.7, 0.5, 0.1, 0.3, 0.2, 0.0]})
        _boundary = extract_PhaseBoundary(_table)
        self.assertListEqual(_boundary["gamma"].tolist(), [0.5, 1.0, 2.0])
        self.assertAlmostEqual(_boundary["lambda_cross"][0], 1.5)
        self.assertAlmostEqual(_boundary["lambda_cross"][1], 1.0)
        self.assertTrue(np.isnan(_boundary["lambda_cross"][2]))

    def test_RunScan(self):
        _graph = build_FerroSquare(2, 2, False).graph
        _table = run_PhaseScan(_graph, 2.0, [0.0, 1.0], [0.5, 3.0], 0.25, make_GlobalMode(), 50, 300, 1,
                               _showProgress=False)
        self.assertListEqual(list(_table.columns), PHASE_COLUMNS)
        self.assertListEqual(_table["gamma"].tolist(), [0.5, 0.5, 3.0, 3.0])
        self.assertListEqual(_table["lambda"].tolist(), [0.0, 1.0, 0.0, 1.0])
        self.assertListEqual(_table["M"].tolist(), [8, 8, 8, 8])
        self.assertAlmostEqual(float(_table["zz_norm"].max()), 1.0)
        self.assertAlmostEqual(float(_table["zz_norm"].min()), 0.0)
        # a strong field weakens the ferromagnetic correlation
        self.assertGreater(_table["zz"][0], _table["zz"][2])

    def test_EmptyGrid(self):
        with self.assertRaises(ConfigException):
            run_PhaseScan(build_FerroSquare(2, 2, False).graph, 1.0, [], [1.0], 0.1, make_GlobalMode(), 1, 1, 0)
