"""Error-correcting codes over unordered sets of fixed-length sequences."""

from .channel import (ErrorType, SetPartition, ball_size, enumerate_ball, enumerate_sphere,
                      max_ins_sphere_intersection, sample_channel, set_error_ball,
                      sphere_size)
from .core import DecodeError, ExperimentParams, ParameterError, dataset

__version__ = "0.1.0"

__all__ = [
    "ErrorType", "SetPartition", "ball_size", "enumerate_ball", "enumerate_sphere",
    "max_ins_sphere_intersection", "sample_channel", "set_error_ball", "sphere_size",
    "DecodeError", "ExperimentParams", "ParameterError", "dataset",
]
