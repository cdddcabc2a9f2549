'''
Created on: 17 Oct 2026
@desc
    Small helpers shared by the engine: seeded random generators, JSON config reading and list parsing for the CLI.
'''

import json
import os
from argparse import Namespace

import numpy as np

from src.sim.simexceptions import ConfigException, SQAIOException


def create_Generator(*_seeds: int) -> np.random.Generator:
    '''
    @desc
        Creates a counter-based random generator (Philox) from a sequence of integer seeds.
        The same seed sequence always gives the same stream, e.g., (instance seed, chain seed).
    @param[in]  _seeds
        Non-negative integers
    @return
        numpy Generator instance
    '''
    if len(_seeds) == 0:
        raise ConfigException("A seed must be provided. There is no entropy default.")
    _entropy = []
    for _seed in _seeds:
        _value = int(_seed)
        if _value < 0:
            raise ConfigException(f"Seeds must be non-negative. Got {_value}")
        _entropy.append(_value)
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(_entropy)))


def read_JSONConfig(_configFilePath: str) -> Namespace:
    '''
    @desc
        Reads a JSON config file into nested Namespace objects
    @param[in]  _configFilePath
        Path to the JSON file
    @return
        Converted JSON object
    '''
    if not os.path.isfile(_configFilePath):
        raise SQAIOException(f"Couldn't find the config file at: {_configFilePath}")
    try:
        with open(_configFilePath, 'r') as _configFile:
            return json.load(_configFile, object_hook=lambda d: Namespace(**d))
    except json.JSONDecodeError as e:
        raise ConfigException(f"Couldn't parse the config file at: {_configFilePath}: {e}")
    except OSError as e:
        raise SQAIOException(f"Couldn't read the config file at: {_configFilePath}: {e}")


def namespace_ToDict(_value):
    '''
    @desc
        Recursively converts Namespace objects (as produced by read_JSONConfig) back to plain dictionaries
    '''
    if isinstance(_value, Namespace):
        return {_k: namespace_ToDict(_v) for _k, _v in vars(_value).items()}
    if isinstance(_value, (list, tuple)):
        return [namespace_ToDict(_v) for _v in _value]
    return _value


def parse_FloatList(_text: str) -> 'list[float]':
    '''
    @desc
        Parses a comma separated list of reals, e.g., "0.5,1,2"
    '''
    try:
        return [float(_item) for _item in str(_text).split(",") if _item.strip() != ""]
    except ValueError:
        raise ConfigException(f"Couldn't parse a list of numbers from: {_text}")


def parse_IntList(_text: str) -> 'list[int]':
    '''
    @desc
        Parses a comma separated list of integers. Items may be written in scientific notation (1e4).
    '''
    _values = []
    for _item in parse_FloatList(_text):
        if _item != int(_item):
            raise ConfigException(f"Expected integers but got {_item}")
        _values.append(int(_item))
    return _values


def derive_TrotterNumber(_beta: float, _trotterStep: float) -> int:
    '''
    @desc
        Trotter number M for a requested imaginary time step beta/M
    '''
    if _trotterStep <= 0:
        raise ConfigException(f"Trotter step must be positive. Got {_trotterStep}")
    return max(1, int(round(_beta / _trotterStep)))
