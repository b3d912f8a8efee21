"""Shared plumbing for codes over sets: message packing and the common interface.

Every construction exposes ``capacity`` (number of encodable messages),
``encode(msg) -> DataSet`` and ``decode(received) -> msg``. Messages are
non-negative ints; multi-symbol messages are packed big-endian (the first
symbol is the most significant digit).
"""

from __future__ import annotations

import math
from typing import Iterable

from ..core import ParameterError, binom_exact, log2_binom


def split_symbols(msg: int, base: int, count: int) -> list[int]:
    if count == 0:
        if msg != 0:
            raise ParameterError("message does not fit")
        return []
    if not 0 <= msg < base ** count:
        raise ParameterError(f"message {msg} outside 0..{base ** count - 1}")
    out = []
    for _ in range(count):
        msg, d = divmod(msg, base)
        out.append(d)
    return out[::-1]


def join_symbols(symbols: Iterable[int], base: int) -> int:
    msg = 0
    for d in symbols:
        msg = msg * base + d
    return msg


class SetCode:
    """Base class: subclasses set ``M``, ``L`` and ``capacity``."""

    name = "set-code"
    M: int
    L: int
    capacity: int

    def check_message(self, msg: int) -> int:
        if not 0 <= msg < self.capacity:
            raise ParameterError(f"message {msg} outside 0..{self.capacity - 1}")
        return msg

    def encode(self, msg: int) -> frozenset[str]:
        raise NotImplementedError

    def decode(self, received: Iterable[str]) -> int:
        raise NotImplementedError

    @property
    def info_bits(self) -> int:
        """Whole bits that always fit: floor(log2 capacity)."""
        return self.capacity.bit_length() - 1

    def redundancy(self) -> float:
        """Measured redundancy log2 binom(2^L, M) - log2(capacity)."""
        return log2_binom((2, self.L), self.M) - math.log2(self.capacity)

    def space_size(self) -> int:
        return binom_exact(2 ** self.L, self.M)
