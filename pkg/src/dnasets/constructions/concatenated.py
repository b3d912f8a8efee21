"""C4: an inner per-sequence code wrapped around an outer code over sets."""

from __future__ import annotations

from typing import Iterable

from ..algebra import BCHCode
from ..core import DecodeError, ParameterError, from_bits, to_bits
from .base import SetCode


class IdentityInner:
    """Inner code that does nothing; outer length equals L."""

    def __init__(self, L: int):
        self.n = self.k = L

    def encode_word(self, u: str) -> str:
        return u

    def decode_word(self, y: str) -> str:
        if len(y) != self.n:
            raise DecodeError("wrong length")
        return y


class BchInner:
    """Systematic shortened BCH code of length L correcting eps substitutions."""

    def __init__(self, L: int, eps: int):
        self.code = BCHCode(L, eps)
        self.n, self.k = L, self.code.k

    def encode_word(self, u: str) -> str:
        return self.code.encode(from_bits(u))

    def decode_word(self, y: str) -> str:
        if len(y) != self.n:
            raise DecodeError("wrong length")
        return to_bits(self.code.message(self.code.decode(y)), self.k)


class ConcatenatedCode(SetCode):
    """Every sequence of an outer codeword is inner-encoded.

    Decoding inner-decodes each received sequence, turns inner failures into
    losses, and hands the surviving set to the outer decoder.
    """

    name = "c4"

    def __init__(self, inner, outer: SetCode):
        if inner.k != outer.L:
            raise ParameterError(f"inner dimension {inner.k} differs from outer length {outer.L}")
        self.inner, self.outer = inner, outer
        self.M, self.L = outer.M, inner.n
        self.capacity = outer.capacity

    def encode(self, msg: int) -> frozenset[str]:
        return frozenset(self.inner.encode_word(x) for x in self.outer.encode(msg))

    def inner_decode(self, received: Iterable[str]) -> frozenset[str]:
        out = set()
        for y in received:
            try:
                out.add(self.inner.decode_word(y))
            except DecodeError:
                continue
        return frozenset(out)

    def decode(self, received: Iterable[str], **kw) -> int:
        return self.outer.decode(self.inner_decode(received), **kw)
