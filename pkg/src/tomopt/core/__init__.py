"""Shared plumbing: config, constants, errors, vectors and generators."""

from .config import get_constant, get_setting, load_config
from .errors import TomoptError
from .rng import make_rng, spawn_rngs
from .vector import RealVector, as_vector, dot, elementwise, zeros

__all__ = [
    "get_constant",
    "get_setting",
    "load_config",
    "TomoptError",
    "make_rng",
    "spawn_rngs",
    "RealVector",
    "as_vector",
    "dot",
    "elementwise",
    "zeros",
]
