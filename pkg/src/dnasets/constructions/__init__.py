from .base import SetCode, join_symbols, split_symbols
from .bch_sets import BchSetCode, c7_redundancy
from .characteristic import CharacteristicCode, characteristic_vector, vector_to_set
from .concatenated import BchInner, ConcatenatedCode, IdentityInner
from .indexed import (GroupedIndexCode, IndexedCode, c1_redundancy, c3_asymptotic_terms,
                      c3_redundancy)
from .vt_sets import ChecksumSumCode, VtSetCode

CONSTRUCTIONS = {
    "c1": IndexedCode,
    "c2": CharacteristicCode,
    "c3": GroupedIndexCode,
    "c4": ConcatenatedCode,
    "c5": ChecksumSumCode,
    "c6": VtSetCode,
    "c7": BchSetCode,
}

__all__ = [
    "SetCode", "join_symbols", "split_symbols", "BchSetCode", "c7_redundancy",
    "CharacteristicCode", "characteristic_vector", "vector_to_set", "BchInner",
    "ConcatenatedCode", "IdentityInner", "GroupedIndexCode", "IndexedCode",
    "c1_redundancy", "c3_asymptotic_terms", "c3_redundancy", "ChecksumSumCode",
    "VtSetCode", "CONSTRUCTIONS",
]
