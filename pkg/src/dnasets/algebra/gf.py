"""Arithmetic in GF(2^m) and polynomials over it.

Field elements are plain ints below 2**m, interpreted as polynomials over
GF(2) reduced modulo a fixed irreducible polynomial. A :class:`GF2m` object
carries the modulus and the operations.
"""

from __future__ import annotations

from functools import lru_cache

from ..core import ParameterError

# primitive polynomials, bit i = coefficient of x^i
PRIMITIVE_POLYS = {
    1: 0x3, 2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x89, 8: 0x11D,
    9: 0x211, 10: 0x409, 11: 0x805, 12: 0x1053, 13: 0x201B, 14: 0x4443,
    15: 0x8003, 16: 0x1100B,
}

TABLE_LIMIT = 16


def clmul(a: int, b: int) -> int:
    """Carryless product of two GF(2) polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def pmod2(a: int, m: int) -> int:
    """Remainder of GF(2) polynomial ``a`` modulo ``m``."""
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _mulmod(a: int, b: int, mod: int) -> int:
    return pmod2(clmul(a, b), mod)


def _powmod(a: int, e: int, mod: int) -> int:
    out = 1
    while e:
        if e & 1:
            out = _mulmod(out, a, mod)
        a = _mulmod(a, a, mod)
        e >>= 1
    return out


def _gcd2(a: int, b: int) -> int:
    while b:
        a, b = b, pmod2(a, b)
    return a


def is_irreducible(f: int) -> bool:
    """Rabin's test for a GF(2) polynomial of degree >= 1."""
    n = f.bit_length() - 1
    if n < 1:
        return False
    primes = [p for p in range(2, n + 1) if n % p == 0 and all(p % d for d in range(2, p))]
    x = 2
    for p in primes:
        h = _powmod(x, 1 << (n // p), f) ^ x
        if _gcd2(f, pmod2(h, f)) != 1:
            return False
    return _powmod(x, 1 << n, f) == pmod2(x, f)


@lru_cache(maxsize=None)
def default_modulus(m: int) -> int:
    """Table polynomial for m <= 16, else the smallest irreducible of degree m."""
    if m < 1:
        raise ParameterError("field degree must be positive")
    if m in PRIMITIVE_POLYS:
        return PRIMITIVE_POLYS[m]
    for low in range(1, 1 << m, 2):
        f = (1 << m) | low
        if is_irreducible(f):
            return f
    raise ParameterError(f"no irreducible polynomial of degree {m}")  # unreachable


class GF2m:
    """The field GF(2^m); log/exp tables for m <= 16, shift-and-reduce above."""

    def __init__(self, m: int, modulus: int | None = None):
        self.m = m
        self.modulus = modulus or default_modulus(m)
        if self.modulus.bit_length() - 1 != m:
            raise ParameterError("modulus degree does not match m")
        self.order = 1 << m
        self._exp = self._log = None
        if m <= TABLE_LIMIT and modulus is None:
            self._build_tables()

    def _build_tables(self):
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & self.order:
                x ^= self.modulus
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp, self._log = exp, log

    def __repr__(self):
        return f"GF2m(m={self.m}, modulus={self.modulus:#x})"

    def __eq__(self, other):
        return isinstance(other, GF2m) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self):
        return hash((self.m, self.modulus))

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ParameterError(f"{a} is not an element of GF(2^{self.m})")
        return a

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return _mulmod(a, b, self.modulus)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(2^m)")
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return _powmod(a, self.order - 2, self.modulus)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        return _powmod(a, e, self.modulus)

    def alpha_pow(self, e: int) -> int:
        """Power of the generator x (primitive for the table moduli)."""
        return self.pow(2 if self.m > 1 else 1, e)

    # polynomials: lists of coefficients, lowest degree first, no trailing zeros

    @staticmethod
    def ptrim(p: list[int]) -> list[int]:
        p = list(p)
        while p and p[-1] == 0:
            p.pop()
        return p

    def padd(self, p: list[int], q: list[int]) -> list[int]:
        n = max(len(p), len(q))
        out = [(p[i] if i < len(p) else 0) ^ (q[i] if i < len(q) else 0) for i in range(n)]
        return self.ptrim(out)

    def pmul(self, p: list[int], q: list[int]) -> list[int]:
        if not p or not q:
            return []
        out = [0] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            if a:
                for j, b in enumerate(q):
                    out[i + j] ^= self.mul(a, b)
        return self.ptrim(out)

    def pdivmod(self, p: list[int], q: list[int]) -> tuple[list[int], list[int]]:
        q = self.ptrim(q)
        if not q:
            raise ZeroDivisionError("polynomial division by zero")
        r = self.ptrim(p)
        if len(r) < len(q):
            return [], r
        quot = [0] * (len(r) - len(q) + 1)
        lead_inv = self.inv(q[-1])
        while len(r) >= len(q):
            shift = len(r) - len(q)
            coef = self.mul(r[-1], lead_inv)
            quot[shift] = coef
            for i, b in enumerate(q):
                r[i + shift] ^= self.mul(coef, b)
            r = self.ptrim(r)
        return self.ptrim(quot), r

    def peval(self, p: list[int], x: int) -> int:
        acc = 0
        for c in reversed(p):
            acc = self.mul(acc, x) ^ c
        return acc

    def interpolate(self, xs: list[int], ys: list[int]) -> list[int]:
        """Lowest-degree polynomial through the points (Lagrange form)."""
        out: list[int] = []
        for i, (xi, yi) in enumerate(zip(xs, ys)):
            if yi == 0:
                continue
            num = [1]
            den = 1
            for j, xj in enumerate(xs):
                if j != i:
                    num = self.pmul(num, [xj, 1])
                    den = self.mul(den, xi ^ xj)
            scale = self.div(yi, den)
            out = self.padd(out, [self.mul(scale, c) for c in num])
        return out
