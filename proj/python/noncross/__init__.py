"""Exact arithmetic in twisted Laurent series division algebras."""

from ._core import (
    Config,
    Element,
    NoncrossError,
    cyclotomic_poly,
    factorize,
    inv,
    is_central,
    normalize,
    nth_root,
    obstruction,
    pairing,
    parse,
    quotient_image,
    quotient_type,
    rank,
    residue,
    snf,
    val,
    value_group_quotient,
    witness_configs,
)

__all__ = [
    "Config",
    "Element",
    "NoncrossError",
    "cyclotomic_poly",
    "factorize",
    "inv",
    "is_central",
    "normalize",
    "nth_root",
    "obstruction",
    "pairing",
    "parse",
    "quotient_image",
    "quotient_type",
    "rank",
    "residue",
    "snf",
    "val",
    "value_group_quotient",
    "witness_configs",
]
