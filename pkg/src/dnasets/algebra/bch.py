"""Binary narrow-sense BCH codes, shortened or extended by an overall parity bit.

A word of length n is a bit string; its leading n0 bits (n0 = n, or n - 1 in
extended mode) are read as a GF(2) polynomial with the first bit as the
highest coefficient, so ``int(x[:n0], 2)`` is the polynomial. The syndrome
of a word is ``(remainder mod g, overall parity)``; the parity part is always
0 for non-extended codes. Decoding works relative to any target syndrome,
so the same handle also decodes cosets.
"""

from __future__ import annotations

from ..core import DecodeError, ParameterError, ceil_log2, to_bits
from .gf import GF2m, clmul, pmod2


def _minimal_poly(F: GF2m, e: int) -> int:
    """Minimal polynomial of alpha^e over GF(2), as an int bit pattern."""
    conj = []
    k = e % (F.order - 1)
    while k not in conj:
        conj.append(k)
        k = (2 * k) % (F.order - 1)
    poly = [1]
    for c in conj:
        poly = F.pmul(poly, [F.alpha_pow(c), 1])
    if any(c > 1 for c in poly):
        raise AssertionError("minimal polynomial has non-binary coefficients")
    return sum(1 << i for i, c in enumerate(poly) if c)


def gf2_rank(rows: list[int]) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in basis:
                basis[top] = r
                break
            r ^= basis[top]
    return len(basis)


class BCHCode:
    """t-error-correcting binary BCH code of length n.

    Shortened mode: primitive BCH of length 2^m - 1 with m = ceil(log2(n+1)),
    shortened to n. Extended mode (``extended=True``, n a power of two):
    primitive BCH of length n - 1 plus one overall parity bit.
    """

    def __init__(self, n: int, t: int, extended: bool = False):
        if n < 1 or t < 0:
            raise ParameterError("need n >= 1 and t >= 0")
        self.n, self.t, self.extended = n, t, extended
        if extended:
            if n < 2 or n & (n - 1):
                raise ParameterError("extended BCH length must be a power of two >= 2")
            self.n0 = n - 1
        else:
            self.n0 = n
        self.m = max(1, ceil_log2(self.n0 + 1))
        if self.m > 16:
            raise ParameterError("BCH length beyond 2^16 is not supported")
        self.field = GF2m(self.m)
        g = 1
        seen: set[int] = set()
        for e in range(1, 2 * t + 1):
            mp = _minimal_poly(self.field, e)
            if mp not in seen:
                seen.add(mp)
                g = clmul(g, mp)
        self.generator = g
        self.r0 = g.bit_length() - 1
        if self.r0 > self.n0:
            raise ParameterError(f"BCH(n={n}, t={t}) has no room for information")
        self.k = self.n0 - self.r0

    def __repr__(self):
        return f"BCHCode(n={self.n}, t={self.t}, extended={self.extended}, k={self.k})"

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    @property
    def size(self) -> int:
        return 1 << self.k

    # ---------------------------------------------------------------- syndromes

    def column(self, i: int) -> tuple[int, int]:
        """Syndrome contribution of a single 1 at 0-based position ``i``."""
        if i >= self.n0:
            return 0, 1
        return pmod2(1 << (self.n0 - 1 - i), self.generator), int(self.extended)

    def syndrome(self, x: str) -> tuple[int, int]:
        if len(x) != self.n:
            raise ParameterError(f"expected length {self.n}, got {len(x)}")
        rem = pmod2(int(x[:self.n0], 2), self.generator) if self.n0 else 0
        parity = x.count("1") & 1 if self.extended else 0
        return rem, parity

    def is_member(self, x: str, target: tuple[int, int] = (0, 0)) -> bool:
        return self.syndrome(x) == target

    def parity_check_rank(self) -> int:
        """GF(2) rank of the parity-check matrix whose columns are ``column(i)``."""
        width = self.r0 + 1
        cols = [(rem << 1) | p for rem, p in (self.column(i) for i in range(self.n))]
        rows = []
        for b in range(width):
            rows.append(sum(((c >> b) & 1) << i for i, c in enumerate(cols)))
        return gf2_rank(rows)

    # ---------------------------------------------------------------- encoding

    def encode(self, msg: int) -> str:
        """Systematic codeword: message bits first, then parity."""
        if not 0 <= msg < self.size:
            raise ParameterError(f"message {msg} outside 0..{self.size - 1}")
        shifted = msg << self.r0
        word = to_bits(shifted ^ pmod2(shifted, self.generator), self.n0)
        if self.extended:
            word += str(word.count("1") & 1)
        return word

    def message(self, x: str) -> int:
        return int(x[:self.k], 2) if self.k else 0

    # ---------------------------------------------------------------- decoding

    def error_pattern(self, syn: tuple[int, int]) -> list[int]:
        """Positions of the unique pattern of weight <= t with syndrome ``syn``."""
        rem, parity = syn
        F = self.field
        positions: list[int] = []
        if rem:
            S = [0] * (2 * self.t + 1)
            bits = [d for d in range(rem.bit_length()) if rem >> d & 1]
            for j in range(1, 2 * self.t + 1):
                acc = 0
                for d in bits:
                    acc ^= F.alpha_pow(j * d)
                S[j] = acc
            locator = self._berlekamp_massey(S)
            nerr = len(locator) - 1
            if nerr == 0 or nerr > self.t:
                raise DecodeError("syndrome is beyond the correction radius")
            degrees = [d for d in range(self.n0)
                       if F.peval(locator, F.alpha_pow(-d)) == 0]
            if len(degrees) != nerr:
                raise DecodeError("error locator has roots outside the code length")
            positions = sorted(self.n0 - 1 - d for d in degrees)
        if self.extended and (len(positions) & 1) != parity:
            positions.append(self.n0)
        if len(positions) > self.t:
            raise DecodeError("syndrome is beyond the correction radius")
        return positions

    def _berlekamp_massey(self, S: list[int]) -> list[int]:
        F = self.field
        C, B = [1], [1]
        L, m, b = 0, 1, 1
        for n in range(1, len(S)):
            d = S[n]
            for i in range(1, L + 1):
                if i < len(C):
                    d ^= F.mul(C[i], S[n - i])
            if d == 0:
                m += 1
                continue
            coef = F.div(d, b)
            shifted = [0] * m + [F.mul(coef, c) for c in B]
            T = C
            C = F.padd(C, shifted)
            if 2 * L <= n - 1:
                L = n - L
                B, b, m = T, d, 1
            else:
                m += 1
        C = F.ptrim(C)
        if len(C) - 1 != L:
            raise DecodeError("inconsistent error locator")
        return C

    def decode(self, y: str, target: tuple[int, int] = (0, 0)) -> str:
        """Nearest word with syndrome ``target`` within t substitutions of ``y``."""
        s = self.syndrome(y)
        diff = (s[0] ^ target[0], s[1] ^ target[1])
        flips = self.error_pattern(diff)
        out = list(y)
        for p in flips:
            out[p] = "1" if out[p] == "0" else "0"
        x = "".join(out)
        if self.syndrome(x) != target:
            raise DecodeError("decoded word does not satisfy the syndrome")
        return x

    def codewords(self) -> list[str]:
        return [self.encode(u) for u in range(self.size)]


def bch_code(n: int, t: int, extended: bool = False) -> BCHCode:
    return BCHCode(n, t, extended)
