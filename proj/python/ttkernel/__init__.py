"""Dependent type theory kernel: checking and normalization by evaluation."""

from ._ttkernel import (
    FuelExhausted,
    KernelTypeError,
    ParseError,
    Signature,
    equal,
    fuzz,
    infer_type,
    load_signature,
    normalize,
    oracle_normalize,
)

__all__ = [
    "FuelExhausted",
    "KernelTypeError",
    "ParseError",
    "Signature",
    "equal",
    "fuzz",
    "infer_type",
    "load_signature",
    "normalize",
    "oracle_normalize",
]
