"""Reed-Solomon codes (evaluation form) with errors-and-erasures decoding.

Codewords are evaluations of a polynomial of degree < k at the points
0, 1, ..., n-1 of the field. Encoding is systematic: the first k coordinates
carry the information symbols. Erased coordinates (``None``) are punctured
and the remaining ones go through Gao's decoder, which corrects s' erasures
plus t' errors whenever s' + 2t' <= n - k.
"""

from __future__ import annotations

from typing import Sequence

from ..core import DecodeError, ParameterError
from .gf import GF2m


class MDSCode:
    def __init__(self, field: GF2m, n: int, k: int):
        if not 0 <= k <= n:
            raise ParameterError(f"need 0 <= k <= n, got n={n}, k={k}")
        if n > field.order:
            raise ParameterError(f"length {n} exceeds field size {field.order}")
        self.field, self.n, self.k = field, n, k
        self.points = list(range(n))

    @property
    def delta(self) -> int:
        return self.n - self.k

    def __repr__(self):
        return f"MDSCode(GF(2^{self.field.m}), n={self.n}, k={self.k})"

    def encode(self, info: Sequence[int]) -> list[int]:
        if len(info) != self.k:
            raise ParameterError(f"expected {self.k} information symbols, got {len(info)}")
        F = self.field
        for a in info:
            F.check(a)
        poly = F.interpolate(self.points[:self.k], list(info))
        return [F.peval(poly, x) for x in self.points]

    def decode(self, received: Sequence[int | None]) -> list[int]:
        """Information symbols from a word with ``None`` marking erasures."""
        if len(received) != self.n:
            raise ParameterError(f"expected {self.n} symbols, got {len(received)}")
        F = self.field
        if self.k == 0:
            return []
        xs = [x for x, r in zip(self.points, received) if r is not None]
        ys = [r for r in received if r is not None]
        if len(xs) < self.k:
            raise DecodeError(f"{self.n - len(xs)} erasures exceed the redundancy {self.delta}")
        f = self._gao(xs, ys)
        return [F.peval(f, x) for x in self.points[:self.k]]

    def _gao(self, xs: list[int], ys: list[int]) -> list[int]:
        F = self.field
        n = len(xs)
        g0 = [1]
        for x in xs:
            g0 = F.pmul(g0, [x, 1])
        g1 = F.interpolate(xs, ys)
        # partial extended Euclid: stop once deg(r) < (n + k) / 2
        r_prev, r_cur = g0, g1
        v_prev, v_cur = [], [1]
        while len(r_cur) - 1 >= (n + self.k) / 2:
            q, rem = F.pdivmod(r_prev, r_cur)
            r_prev, r_cur = r_cur, rem
            v_prev, v_cur = v_cur, F.padd(v_prev, F.pmul(q, v_cur))
        f, rem = F.pdivmod(r_cur, v_cur)
        if rem or len(f) > self.k:
            raise DecodeError("too many symbol errors for the redundancy")
        errors = sum(1 for x, y in zip(xs, ys) if F.peval(f, x) != y)
        if 2 * errors > n - self.k:
            raise DecodeError("decoded candidate lies outside the correction radius")
        return f


def mds_encode(info: Sequence[int], n: int, k: int, field: GF2m) -> list[int]:
    return MDSCode(field, n, k).encode(info)


def mds_decode(received: Sequence[int | None], n: int, k: int, field: GF2m) -> list[int]:
    return MDSCode(field, n, k).decode(received)
