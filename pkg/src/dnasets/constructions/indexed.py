"""Index-based codes: per-sequence indices (C1) and grouped indices (C3).

Both prepend an index to a payload and protect the payloads with a
Reed-Solomon code across the index positions. A position becomes an
erasure whenever its received content is ambiguous, so losses cost one unit
of redundancy and corrupted sequences at most two.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from ..algebra import GF2m, MDSCode
from ..bounds.exact import indexing_redundancy
from ..core import (DecodeError, ParameterError, binom_exact, ceil_log2, from_bits,
                    log2_binom, subset_rank, subset_unrank, to_bits)
from .base import SetCode, join_symbols, split_symbols

MODES = ("L", "I", "D")


def _check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ParameterError(f"mode must be one of {MODES}, got {mode!r}")
    return mode


class IndexedCode(SetCode):
    """C1: x_i = (index i, payload u_i), payloads form an RS codeword of length M."""

    name = "c1"

    def __init__(self, M: int, L: int, delta: int = 0):
        if M < 1:
            raise ParameterError("M must be positive")
        self.M, self.L, self.delta = M, L, delta
        self.z = ceil_log2(M)
        self.p = L - self.z
        if self.p < 1:
            raise ParameterError(f"no payload bits left: L={L}, index bits {self.z}")
        if M > 1 << self.p:
            raise ParameterError(f"M={M} exceeds the payload field size 2^{self.p}")
        if not 0 <= delta <= M:
            raise ParameterError("delta must lie in 0..M")
        self.field = GF2m(self.p)
        self.mds = MDSCode(self.field, M, M - delta)
        self.k = M - delta
        self.capacity = 1 << (self.p * self.k)

    def __repr__(self):
        return f"IndexedCode(M={self.M}, L={self.L}, delta={self.delta})"

    def encode_payloads(self, info: list[int]) -> frozenset[str]:
        cw = self.mds.encode(info)
        return frozenset(to_bits(i, self.z) + to_bits(u, self.p) for i, u in enumerate(cw))

    def encode(self, msg: int) -> frozenset[str]:
        self.check_message(msg)
        return self.encode_payloads(split_symbols(msg, 1 << self.p, self.k))

    def received_word(self, received: Iterable[str], mode: str = "L") -> list[int | None]:
        _check_mode(mode)
        holders: dict[int, list[str]] = {}
        for y in received:
            if mode != "L" and len(y) != self.L:
                continue
            if len(y) < self.z:
                continue
            i = from_bits(y[:self.z])
            if i < self.M:
                holders.setdefault(i, []).append(y)
        word: list[int | None] = []
        for i in range(self.M):
            hs = holders.get(i, [])
            if len(hs) == 1 and len(hs[0]) == self.L:
                word.append(from_bits(hs[0][self.z:]))
            else:
                word.append(None)
        return word

    def decode_payloads(self, received: Iterable[str], mode: str = "L") -> list[int]:
        return self.mds.decode(self.received_word(received, mode))

    def decode(self, received: Iterable[str], mode: str = "L") -> int:
        return join_symbols(self.decode_payloads(received, mode), 1 << self.p)


def c1_redundancy(M: int, L: int, delta: int) -> float:
    """Indexing redundancy plus delta payloads of L - ceil(log2 M) bits."""
    return indexing_redundancy(M, L) + delta * (L - ceil_log2(M))


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c)
    return Fraction(c).limit_denominator(1 << 16)


class GroupedIndexCode(SetCode):
    """C3: M^c groups of M^(1-c) sequences sharing an index of c*log2(M) bits.

    Each group's payload set is one symbol (its colex rank). With delta > 0
    the symbols live in GF(2^k), k = floor(log2 binom(2^p, g)), so every
    field element unranks to a legal group; with delta = 0 the full range of
    ranks is used.
    """

    name = "c3"

    def __init__(self, M: int, L: int, c, delta: int = 0):
        if M < 1 or M & (M - 1):
            raise ParameterError("M must be a power of two")
        self.M, self.L, self.delta = M, L, delta
        self.c = _as_fraction(c)
        if not 0 <= self.c <= 1:
            raise ParameterError("c must lie in [0, 1]")
        z = M.bit_length() - 1
        cz = self.c * z
        if cz.denominator != 1:
            raise ParameterError(f"c*log2(M) = {cz} is not an integer")
        self.y = int(cz)
        self.groups = 1 << self.y
        self.group_size = M >> self.y
        self.p = L - self.y
        if self.p < 0:
            raise ParameterError("index longer than the sequence")
        self.universe = 1 << self.p
        self.symbol_space = binom_exact(self.universe, self.group_size)
        if self.symbol_space == 0:
            raise ParameterError("groups do not fit in the payload space")
        if not 0 <= delta <= self.groups:
            raise ParameterError("delta must lie in 0..M^c")
        self.k = self.groups - delta
        if delta == 0:
            self.field = None
            self.mds = None
            self.base = self.symbol_space
        else:
            kbits = self.symbol_space.bit_length() - 1
            if kbits < 1 or self.groups > 1 << kbits:
                raise ParameterError("symbol field too small for the number of groups")
            self.field = GF2m(kbits)
            self.mds = MDSCode(self.field, self.groups, self.k)
            self.base = 1 << kbits
        self.capacity = self.base ** self.k

    def __repr__(self):
        return f"GroupedIndexCode(M={self.M}, L={self.L}, c={self.c}, delta={self.delta})"

    def encode_symbols(self, info: list[int]) -> frozenset[str]:
        cw = self.mds.encode(info) if self.mds else list(info)
        out = []
        for i, sym in enumerate(cw):
            members = subset_unrank(sym, self.universe, self.group_size)
            out.extend(to_bits(i, self.y) + to_bits(u, self.p) for u in members)
        return frozenset(out)

    def encode(self, msg: int) -> frozenset[str]:
        self.check_message(msg)
        return self.encode_symbols(split_symbols(msg, self.base, self.k))

    def received_word(self, received: Iterable[str], mode: str = "L") -> list[int | None]:
        _check_mode(mode)
        groups: dict[int, list[str]] = {}
        for y in received:
            if mode != "L" and len(y) != self.L:
                continue
            if len(y) < self.y:
                continue
            i = from_bits(y[:self.y])
            groups.setdefault(i, []).append(y)
        word: list[int | None] = []
        for i in range(self.groups):
            members = groups.get(i, [])
            if len(members) != self.group_size or any(len(y) != self.L for y in members):
                word.append(None)
                continue
            rank = subset_rank([from_bits(y[self.y:]) for y in members],
                               self.universe, self.group_size)
            word.append(rank if rank < self.base else None)
        return word

    def decode_symbols(self, received: Iterable[str], mode: str = "L") -> list[int]:
        word = self.received_word(received, mode)
        if self.mds:
            return self.mds.decode(word)
        if any(w is None for w in word):
            raise DecodeError("incomplete group without redundancy")
        return word  # type: ignore[return-value]

    def decode(self, received: Iterable[str], mode: str = "L") -> int:
        return join_symbols(self.decode_symbols(received, mode), self.base)


def c3_redundancy(M: int, L: int, c, delta: int) -> float:
    """log2 binom(2^L, M) - (M^c - delta) * log2 binom(2^L M^-c, M^(1-c))."""
    code_shape = _c3_shape(M, L, c)
    groups, g, p = code_shape
    if not 0 <= delta <= groups:
        raise ParameterError("delta must lie in 0..M^c")
    if g > 1 << p:
        raise ParameterError("groups do not fit in the payload space")
    return log2_binom((2, L), M) - (groups - delta) * log2_binom((2, p), g)


def _c3_shape(M: int, L: int, c) -> tuple[int, int, int]:
    if M < 1 or M & (M - 1):
        raise ParameterError("M must be a power of two")
    cz = _as_fraction(c) * (M.bit_length() - 1)
    if cz.denominator != 1:
        raise ParameterError(f"c*log2(M) = {cz} is not an integer")
    y = int(cz)
    if y > L:
        raise ParameterError("index longer than the sequence")
    return 1 << y, M >> y, L - y


def c3_asymptotic_terms(M: int, L: int, c, delta: int) -> dict[str, float]:
    """Leading-order pieces of the C3 redundancy, evaluated numerically."""
    cf = float(_as_fraction(c))
    logM = math.log2(M)
    Mc = M ** cf
    return {
        "index": (1 - cf) / 2 * Mc * logM,
        "stirling": math.log2(2 * math.pi) / 2 * Mc,
        "parity": delta * M ** (1 - cf) * (L - logM + math.log2(math.e)),
    }
