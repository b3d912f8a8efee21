"""C2: data sets whose characteristic vector lies in a coset of an extended BCH code.

The characteristic vector of a set of length-L words has length 2^L with a
one at position int(x, 2) for each member x. A loss clears one bit, a
corrupted sequence moves one bit, so the channel acts on the vector as a
pattern of substitutions.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from ..algebra import BCHCode
from ..channel import enumeration_cap
from ..core import (DecodeError, ParameterError, binom_exact, from_bits, subset_rank,
                    to_bits)
from .base import SetCode


def characteristic_vector(S: Iterable[str], L: int) -> str:
    v = ["0"] * (1 << L)
    for x in S:
        if len(x) != L:
            raise ParameterError(f"sequence {x!r} does not have length {L}")
        v[from_bits(x)] = "1"
    return "".join(v)


def vector_to_set(v: str, L: int) -> frozenset[str]:
    return frozenset(to_bits(i, L) for i, b in enumerate(v) if b == "1")


class CharacteristicCode(SetCode):
    """Weight-M words of a fixed coset of the extended BCH code of length 2^L.

    The BCH code corrects ``s + 2t`` substitutions. With ``syndrome=None``
    the coset holding the most weight-M words is used (ties go to the
    smallest syndrome); the zero coset is often empty because the code's
    minimum distance exceeds M. The message map
    enumerates the coset's weight-M words in lexicographic order of their
    support, so encoding needs binom(2^L, M) below the enumeration cap.
    """

    name = "c2"

    def __init__(self, M: int, L: int, s: int, t: int,
                 syndrome: tuple[int, int] | None = None, cap: int | None = None):
        if M < 1 or L < 1 or min(s, t) < 0:
            raise ParameterError("need M, L >= 1 and s, t >= 0")
        self.M, self.L, self.s, self.t = M, L, s, t
        self.radius = s + 2 * t
        self.bch = BCHCode(1 << L, self.radius, extended=True)
        self._cap = cap
        self._codebook: list[tuple[int, ...]] | None = None
        self._index: dict[tuple[int, ...], int] | None = None
        if syndrome is None:
            syndrome, _ = self._best(cap)
        self.target = tuple(syndrome)

    def __repr__(self):
        return f"CharacteristicCode(M={self.M}, L={self.L}, s={self.s}, t={self.t})"

    def _columns(self) -> list[int]:
        cols = []
        for i in range(1 << self.L):
            rem, p = self.bch.column(i)
            cols.append((rem << 1) | p)
        return cols

    def _enumerate(self, key: int) -> list[tuple[int, ...]]:
        n = 1 << self.L
        if binom_exact(n, self.M) > enumeration_cap(self._cap):
            raise ParameterError("codebook enumeration exceeds the enumeration cap")
        cols = self._columns()
        out = []
        for supp in combinations(range(n), self.M):
            acc = 0
            for i in supp:
                acc ^= cols[i]
            if acc == key:
                out.append(supp)
        return out

    @property
    def codebook(self) -> list[tuple[int, ...]]:
        if self._codebook is None:
            self._codebook = self._enumerate((self.target[0] << 1) | self.target[1])
            self._index = {supp: i for i, supp in enumerate(self._codebook)}
        return self._codebook

    @property
    def capacity(self) -> int:  # type: ignore[override]
        return len(self.codebook)

    @classmethod
    def best_syndrome(cls, M: int, L: int, s: int, t: int, cap: int | None = None):
        """Syndrome whose coset holds the most weight-M words, and that count."""
        return cls(M, L, s, t, syndrome=(0, 0), cap=cap)._best(cap)

    def _best(self, cap: int | None):
        n = 1 << self.L
        if binom_exact(n, self.M) > enumeration_cap(cap):
            raise ParameterError("coset search exceeds the enumeration cap")
        cols = self._columns()
        counts: dict[int, int] = {}
        for supp in combinations(range(n), self.M):
            acc = 0
            for i in supp:
                acc ^= cols[i]
            counts[acc] = counts.get(acc, 0) + 1
        key = min(counts, key=lambda k: (-counts[k], k))
        return (key >> 1, key & 1), counts[key]

    def is_member(self, S: Iterable[str]) -> bool:
        S = list(S)
        if len(S) != self.M or any(len(x) != self.L for x in S):
            return False
        v = characteristic_vector(S, self.L)
        return self.bch.syndrome(v) == self.target

    def encode(self, msg: int) -> frozenset[str]:
        self.check_message(msg)
        return frozenset(to_bits(i, self.L) for i in self.codebook[msg])

    def correct(self, received: Iterable[str]) -> frozenset[str]:
        kept = [y for y in set(received) if len(y) == self.L]
        v = list(characteristic_vector(kept, self.L))
        missing = self.M - len(kept)
        if missing > self.s:
            # restore weight by filling the first free positions
            extra = missing - self.s
            for i, b in enumerate(v):
                if extra == 0:
                    break
                if b == "0":
                    v[i] = "1"
                    extra -= 1
        word = self.bch.decode("".join(v), self.target)
        if word.count("1") != self.M:
            raise DecodeError("decoded vector has the wrong weight")
        return vector_to_set(word, self.L)

    def decode(self, received: Iterable[str]) -> int:
        S = self.correct(received)
        supp = tuple(sorted(from_bits(x) for x in S))
        self.codebook
        if supp not in self._index:  # type: ignore[operator]
            raise DecodeError("corrected set is not in the codebook")
        return self._index[supp]  # type: ignore[index]


def support_rank(S: Iterable[str], L: int) -> int:
    """Colex rank of a set among all M-subsets of the length-L words."""
    S = list(S)
    return subset_rank([from_bits(x) for x in S], 1 << L, len(S))
