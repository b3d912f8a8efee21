"""C7: M distinct codewords of a binary eps-substitution-correcting BCH code."""

from __future__ import annotations

import math
from typing import Iterable

from ..algebra import BCHCode
from ..core import (DecodeError, ParameterError, binom_exact, log2_binom, subset_rank,
                    subset_unrank)
from .base import SetCode


class BchSetCode(SetCode):
    name = "c7"

    def __init__(self, M: int, L: int, eps: int = 1):
        self.M, self.L, self.eps = M, L, eps
        self.bch = BCHCode(L, eps)
        if not 1 <= M <= self.bch.size:
            raise ParameterError(f"M={M} exceeds the BCH codebook size {self.bch.size}")
        self.capacity = binom_exact(self.bch.size, M)

    def __repr__(self):
        return f"BchSetCode(M={self.M}, L={self.L}, eps={self.eps})"

    def encode(self, msg: int) -> frozenset[str]:
        self.check_message(msg)
        return frozenset(self.bch.encode(u) for u in subset_unrank(msg, self.bch.size, self.M))

    def correct(self, received: Iterable[str]) -> frozenset[str]:
        out = []
        for y in received:
            if len(y) != self.L:
                raise DecodeError("off-length sequence")
            out.append(self.bch.decode(y))
        if len(set(out)) != len(out):
            raise DecodeError("two received sequences decode to the same word")
        if len(out) != self.M:
            raise DecodeError(f"expected {self.M} sequences, got {len(out)}")
        return frozenset(out)

    def decode(self, received: Iterable[str]) -> int:
        S = self.correct(received)
        return subset_rank([self.bch.message(x) for x in S], self.bch.size, self.M)


def c7_redundancy(M: int, L: int, eps: int) -> float:
    """log2 binom(2^L, M) - log2 binom(|BCH|, M)."""
    code = BCHCode(L, eps)
    return log2_binom((2, L), M) - math.log2(binom_exact(code.size, M))
