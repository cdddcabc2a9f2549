'''
Created on: 17 Oct 2026
@desc
    We conduct the unit test here for the exact-diagonalization oracle
'''

import unittest

import numpy as np

from src.oracle.exactdiag import MAX_ED_SITES, build_Hamiltonian, compute_DiagonalEnergies, \
    compute_EDThermalExpectation, compute_SpectralDecomposition, compute_ZZDiagonal
from src.problem.couplinggraph import CouplingGraph
from src.problem.squarelattice import build_FerroChain
from src.sim.simexceptions import CapacityException, ConfigException


class TestExactDiag(unittest.TestCase):

    def test_SingleSpin(self):
        _graph = CouplingGraph(1, ())
        for _beta, _gamma in ((0.5, 1.0), (3.0, 0.2)):
            _energy = compute_EDThermalExpectation(_graph, _gamma, 0.0, _beta, "energy")
            self.assertAlmostEqual(_energy, -_gamma * np.tanh(_beta * _gamma), places=10)

    def test_TwoSpinSpectrum(self):
        _graph = CouplingGraph(2, ((0, 1, -0.7),))
        _spectrum = compute_SpectralDecomposition(_graph, 0.0, 0.4)
        self.assertTrue(np.allclose(_spectrum.eigenvalues, [-1.1, -0.3, 0.3, 1.1]))
        self.assertAlmostEqual(_spectrum.groundEnergy, -1.1)
        self.assertAlmostEqual(_spectrum.gap, 0.8)

    def test_Hamiltonian(self):
        _graph = build_FerroChain(3)
        _hamiltonian = build_Hamiltonian(_graph.graph, 0.3, 0.2)
        self.assertTrue(np.allclose(_hamiltonian, _hamiltonian.T))
        self.assertTrue(np.allclose(np.diag(_hamiltonian), compute_DiagonalEnergies(_graph.graph)))
        # all up <-> site 0 down
        self.assertAlmostEqual(_hamiltonian[0, 1], -0.3)
        # all up <-> sites 0 and 1 down
        self.assertAlmostEqual(_hamiltonian[0, 3], -0.2)

    def test_ClassicalLimit(self):
        _graph = CouplingGraph(3, ((0, 1, -1.0), (1, 2, 0.5)))
        _beta = 0.8
        _energies = compute_DiagonalEnergies(_graph)
        _boltzmann = np.exp(-_beta * _energies)
        _expected = float(np.dot(_boltzmann, compute_ZZDiagonal(_graph)) / np.sum(_boltzmann))
        self.assertAlmostEqual(compute_EDThermalExpectation(_graph, 0.0, 0.0, _beta), _expected, places=10)

    def test_StrongFieldKillsCorrelation(self):
        _graph = build_FerroChain(4).graph
        self.assertLess(abs(compute_EDThermalExpectation(_graph, 20.0, 0.0, 1.0)), 0.05)
        self.assertGreater(compute_EDThermalExpectation(_graph, 0.1, 0.0, 5.0), 0.95)

    def test_InvalidArguments(self):
        _graph = build_FerroChain(3).graph
        with self.assertRaises(ConfigException):
            compute_EDThermalExpectation(_graph, 1.0, 0.0, 0.0)
        with self.assertRaises(ConfigException):
            compute_EDThermalExpectation(_graph, 1.0, 0.0, 1.0, "xx")
        with self.assertRaises(CapacityException):
            build_Hamiltonian(build_FerroChain(MAX_ED_SITES + 1).graph, 1.0, 0.0)
