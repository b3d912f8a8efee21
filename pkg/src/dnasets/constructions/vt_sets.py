"""Set codes built on VT checksums.

C5 constrains only the sum of checksums over the whole set, which is enough
to repair a single insertion or deletion anywhere in the set. C6 puts every
sequence into the same VT code, which repairs one indel per sequence.
"""

from __future__ import annotations

from typing import Iterable

from ..algebra.vt import (VtCode, parity_positions, vt_checksum, vt_decode)
from ..channel import enumeration_cap
from ..core import (DecodeError, ParameterError, binom_exact, from_bits, subset_rank,
                    subset_unrank, to_bits)
from .base import SetCode


def _layout(L: int) -> tuple[list[int], list[int]]:
    par = parity_positions(L)
    pset = set(par)
    return par, [i for i in range(1, L + 1) if i not in pset]


class ChecksumSumCode(SetCode):
    """C5: sum of the VT checksums of all M sequences is a mod (L+1).

    The non-dyadic positions of the M sequences hold M distinct values
    (an M-subset of the 2^(L-r) possibilities). All sequences but the one
    with the largest such value carry free bits on the r dyadic positions;
    that last one gets the dyadic bits that complete the checksum sum.
    """

    name = "c5"

    def __init__(self, M: int, L: int, a: int = 0):
        if not 0 <= a <= L:
            raise ParameterError(f"checksum residue {a} outside 0..{L}")
        self.M, self.L, self.a = M, L, a
        self.par, self.free = _layout(L)
        self.r = len(self.par)
        self.universe = 1 << len(self.free)
        if M < 1 or M > self.universe:
            raise ParameterError(f"M={M} exceeds the {self.universe} available info parts")
        self.dyadic_base = 1 << (self.r * (M - 1))
        self.capacity = binom_exact(self.universe, M) * self.dyadic_base

    def __repr__(self):
        return f"ChecksumSumCode(M={self.M}, L={self.L}, a={self.a})"

    def _assemble(self, info: int, dyadic: int) -> str:
        bits = ["0"] * (self.L + 1)
        for pos, b in zip(self.free, to_bits(info, len(self.free))):
            bits[pos] = b
        for j, pos in enumerate(self.par):
            if dyadic >> j & 1:
                bits[pos] = "1"
        return "".join(bits[1:])

    def _split(self, x: str) -> tuple[int, int]:
        info = from_bits("".join(x[i - 1] for i in self.free))
        dyadic = sum(1 << j for j, pos in enumerate(self.par) if x[pos - 1] == "1")
        return info, dyadic

    def _completion(self, residual: int) -> int:
        dyadic = 0
        for j in range(self.r - 1, -1, -1):
            if residual >= self.par[j]:
                dyadic |= 1 << j
                residual -= self.par[j]
        return dyadic

    def encode(self, msg: int) -> frozenset[str]:
        self.check_message(msg)
        rank, dyad = divmod(msg, self.dyadic_base)
        infos = subset_unrank(rank, self.universe, self.M)
        seqs = []
        for j, info in enumerate(infos[:-1]):
            seqs.append(self._assemble(info, dyad >> (self.r * (self.M - 2 - j)) & ((1 << self.r) - 1)))
        last = self._assemble(infos[-1], 0)
        total = sum(vt_checksum(x) for x in seqs) + vt_checksum(last)
        seqs.append(self._assemble(infos[-1], self._completion((self.a - total) % (self.L + 1))))
        return frozenset(seqs)

    def checksum_total(self, S: Iterable[str]) -> int:
        return sum(vt_checksum(x) for x in S) % (self.L + 1)

    def correct(self, received: Iterable[str]) -> frozenset[str]:
        received = set(received)
        good = [y for y in received if len(y) == self.L]
        odd = [y for y in received if len(y) != self.L]
        if not odd:
            if len(good) != self.M or self.checksum_total(good) != self.a:
                raise DecodeError("received set is not a codeword")
            return frozenset(good)
        if len(odd) != 1 or len(good) != self.M - 1:
            raise DecodeError("more than one off-length sequence")
        target = (self.a - self.checksum_total(good)) % (self.L + 1)
        x = vt_decode(odd[0], self.L, target)
        if x in good:
            raise DecodeError("repaired sequence collides with a received one")
        return frozenset(good + [x])

    def decode(self, received: Iterable[str]) -> int:
        S = self.correct(received)
        parts = sorted(self._split(x) for x in S)
        infos = [p[0] for p in parts]
        if len(set(infos)) != self.M:
            raise DecodeError("info parts are not distinct")
        dyad = 0
        for _, d in parts[:-1]:
            dyad = (dyad << self.r) | d
        return subset_rank(infos, self.universe, self.M) * self.dyadic_base + dyad


class VtSetCode(SetCode):
    """C6: M distinct words of VT_a(L), chosen by subset unranking."""

    name = "c6"

    def __init__(self, M: int, L: int, a: int = 0, cap: int | None = None):
        self.M, self.L, self.a = M, L, a
        if (1 << L) > enumeration_cap(cap):
            raise ParameterError("VT codebook enumeration exceeds the enumeration cap")
        self.vt = VtCode(L, a)
        self.codebook = self.vt.codewords()
        self._index = {x: i for i, x in enumerate(self.codebook)}
        if not 1 <= M <= len(self.codebook):
            raise ParameterError(f"M={M} exceeds the VT codebook size {len(self.codebook)}")
        self.capacity = binom_exact(len(self.codebook), M)

    def __repr__(self):
        return f"VtSetCode(M={self.M}, L={self.L}, a={self.a})"

    def encode(self, msg: int) -> frozenset[str]:
        self.check_message(msg)
        return frozenset(self.codebook[i] for i in subset_unrank(msg, len(self.codebook), self.M))

    def correct(self, received: Iterable[str]) -> frozenset[str]:
        out = []
        for y in received:
            x = vt_decode(y, self.L, self.a)
            if x not in self._index:
                raise DecodeError(f"{x!r} is not a VT codeword")
            out.append(x)
        if len(set(out)) != len(out):
            raise DecodeError("two received sequences decode to the same word")
        if len(out) != self.M:
            raise DecodeError(f"expected {self.M} sequences, got {len(out)}")
        return frozenset(out)

    def decode(self, received: Iterable[str]) -> int:
        S = self.correct(received)
        return subset_rank([self._index[x] for x in S], len(self.codebook), self.M)
