"""Exact evaluation of classical group characters and checks of their factorizations."""
from .characters import CharacterFamily, EvalPoint, dim_character, eval_character
from .enumeration import CountFamily, brute_count, count
from .identities import IdentityId, IdentityParams, verify
from .partitions import ShiftedPartition, parse

__all__ = [
    "CharacterFamily", "CountFamily", "EvalPoint", "IdentityId", "IdentityParams", "ShiftedPartition",
    "brute_count", "count", "dim_character", "eval_character", "parse", "verify",
]
__version__ = "0.1.0"
