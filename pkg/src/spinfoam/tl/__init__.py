"""Temperley-Lieb oracle: independent network evaluation by loop counting."""

from .diagram import (
    compose_elements, cup_cap_pairing, e_generator, identity_pairing,
    tensor_pairing,
)
from .projector import jones_wenzl, loop_value
from .engine import NetworkError, OracleEvaluator, oracle_eval_script
from .backend import backend_name

__all__ = [
    "identity_pairing", "cup_cap_pairing", "e_generator", "tensor_pairing",
    "compose_elements", "jones_wenzl", "loop_value",
    "NetworkError", "OracleEvaluator", "oracle_eval_script", "backend_name",
]
