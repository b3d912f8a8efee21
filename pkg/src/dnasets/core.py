"""Alphabets, sequences, data sets and exact combinatorics.

Sequences are plain ``str`` objects over ``"01"`` (q=2) or ``"ACGT"`` (q=4);
a data set is a ``frozenset`` of sequences. Everything here is a pure
function of its arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import mpmath

BINARY = "01"
QUATERNARY = "ACGT"

# binomials with n at or below this are evaluated as exact integers
EXACT_LOG_THRESHOLD = 1 << 24


class ParameterError(ValueError):
    """Raised for infeasible or out-of-range parameters."""


class DecodeError(RuntimeError):
    """Raised when a received word or set cannot be decoded."""


def alphabet(q: int) -> str:
    if q == 2:
        return BINARY
    if q == 4:
        return QUATERNARY
    raise ParameterError(f"alphabet size must be 2 or 4, got {q}")


def alphabet_of(seqs: Iterable[str]) -> str:
    """Smallest supported alphabet containing every symbol in ``seqs``."""
    symbols = set()
    for x in seqs:
        symbols.update(x)
    if symbols <= set(BINARY):
        return BINARY
    if symbols <= set(QUATERNARY):
        return QUATERNARY
    raise ParameterError(f"unsupported symbols {sorted(symbols - set(QUATERNARY))}")


def check_sequence(x: str, L: int, q: int = 2) -> str:
    if len(x) != L:
        raise ParameterError(f"sequence {x!r} has length {len(x)}, expected {L}")
    sigma = alphabet(q)
    if any(c not in sigma for c in x):
        raise ParameterError(f"sequence {x!r} is not over {sigma!r}")
    return x


def dataset(seqs: Iterable[str], L: int | None = None, q: int | None = None,
            M: int | None = None) -> frozenset[str]:
    """Build a validated data set (M distinct sequences of common length L)."""
    seqs = list(seqs)
    S = frozenset(seqs)
    if len(S) != len(seqs):
        raise ParameterError("sequences in a data set must be pairwise distinct")
    if L is None and S:
        L = len(next(iter(S)))
    if q is None:
        q = len(alphabet_of(S)) if S else 2
    for x in S:
        check_sequence(x, L, q)
    if M is not None and len(S) != M:
        raise ParameterError(f"data set has {len(S)} sequences, expected {M}")
    return S


def to_bits(value: int, width: int) -> str:
    if value < 0 or value >> width:
        raise ParameterError(f"{value} does not fit in {width} bits")
    return format(value, f"0{width}b") if width else ""


def from_bits(x: str) -> int:
    return int(x, 2) if x else 0


def ceil_log2(n: int) -> int:
    """Smallest z with 2**z >= n (0 for n <= 1)."""
    return max(0, (n - 1).bit_length())


@dataclass(frozen=True)
class ExperimentParams:
    M: int
    L: int
    q: int = 2
    s: int = 0
    t: int = 0
    eps: int = 0
    delta: int = 0
    c: float | None = None

    def __post_init__(self):
        alphabet(self.q)
        if self.M < 1 or self.L < 1:
            raise ParameterError("M and L must be positive")
        if min(self.s, self.t, self.eps, self.delta) < 0:
            raise ParameterError("s, t, eps, delta must be nonnegative")
        if self.s + self.t > self.M:
            raise ParameterError("s + t must not exceed M")
        if self.c is not None and not 0 <= self.c <= 1:
            raise ParameterError("c must lie in [0, 1]")

    @property
    def beta(self) -> float:
        """Density with M = q**(beta*L)."""
        return math.log(self.M, self.q) / self.L

    @classmethod
    def from_beta(cls, beta: float, L: int, q: int = 2, **kw) -> "ExperimentParams":
        if not 0 < beta < 1:
            raise ParameterError("beta must lie strictly between 0 and 1")
        return cls(M=round(q ** (beta * L)), L=L, q=q, **kw)


def binom_exact(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinom_exact(n: int, s: int, t: int) -> int:
    """n! / (s! t! (n-s-t)!)."""
    if min(n, s, t) < 0 or s + t > n:
        raise ParameterError(f"multinomial needs s + t <= n, got n={n}, s={s}, t={t}")
    return math.comb(n, s) * math.comb(n - s, t)


def _as_int(n: int | tuple[int, int]) -> int:
    if isinstance(n, tuple):
        base, exponent = n
        return base ** exponent
    return n


def log2_binom(n: int | tuple[int, int], k: int) -> float:
    """log2 of binom(n, k); ``n`` may be given as a (base, exponent) pair.

    Exact big-integer evaluation for n <= 2**24, otherwise log-gamma with a
    working precision wide enough to survive the cancellation between
    lgamma(n+1) and lgamma(n-k+1).
    """
    n = _as_int(n)
    if k < 0 or k > n:
        raise ParameterError(f"log2_binom needs 0 <= k <= n, got n={n}, k={k}")
    k = min(k, n - k)
    if k == 0:
        return 0.0
    if n <= EXACT_LOG_THRESHOLD:
        return math.log2(math.comb(n, k))
    return _log2_binom_gamma(n, k)


def _log2_binom_gamma(n: int, k: int) -> float:
    with mpmath.workprec(n.bit_length() + 96):
        mn = mpmath.mpf(n)
        val = (mpmath.loggamma(mn + 1) - mpmath.loggamma(mn - k + 1)
               - mpmath.loggamma(mpmath.mpf(k) + 1))
        return float(val / mpmath.log(2))


def log2_int(n: int) -> float:
    """log2 of a positive (possibly huge) integer."""
    if n <= 0:
        raise ParameterError("log2 of a non-positive number")
    return math.log2(n)


def subset_rank(subset: Sequence[int], N: int, K: int) -> int:
    """Colex rank of a K-subset of {0..N-1}."""
    items = sorted(subset)
    if len(items) != K or len(set(items)) != K:
        raise ParameterError(f"expected {K} distinct elements, got {items}")
    if items and (items[0] < 0 or items[-1] >= N):
        raise ParameterError(f"subset {items} not inside range({N})")
    return sum(math.comb(c, i + 1) for i, c in enumerate(items))


def subset_unrank(r: int, N: int, K: int) -> tuple[int, ...]:
    """Inverse of :func:`subset_rank`."""
    if not 0 <= r < math.comb(N, K):
        raise ParameterError(f"rank {r} out of range for binom({N}, {K})")
    out = []
    hi = N - 1
    for i in range(K, 0, -1):
        # largest c in [i-1, hi] with comb(c, i) <= r
        lo = i - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if math.comb(mid, i) <= r:
                lo = mid
            else:
                hi = mid - 1
        out.append(lo)
        r -= math.comb(lo, i)
        hi = lo - 1
    return tuple(reversed(out))


def runs(x: str) -> int:
    """Number of maximal constant runs in ``x``."""
    if not x:
        raise ParameterError("runs() of an empty sequence")
    return 1 + sum(1 for a, b in zip(x, x[1:]) if a != b)
