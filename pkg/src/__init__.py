'''
Created on: 17 Oct 2026
@desc
    Loop-cluster simulated quantum annealing engine.
'''

__version__ = "0.1.0"
