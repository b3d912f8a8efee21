"""Error spheres and balls around sequences and around data sets.

Error types are tagged by the edit kinds they allow: ``S`` substitution,
``I`` insertion, ``D`` deletion, combinations ``ID``, ``IS``, ``DS`` and ``L``
(all three). A combination ball of radius eps holds everything reachable by
at most eps edits of the allowed kinds.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator

import numpy as np

from .core import (ParameterError, alphabet, alphabet_of, binom_exact,
                   multinom_exact)

DEFAULT_CAP = 10 ** 7
CAP_ENV = "DNASETS_ENUM_CAP"


class EnumerationCapExceeded(RuntimeError):
    pass


def enumeration_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get(CAP_ENV, DEFAULT_CAP))


class ErrorType(str, enum.Enum):
    S = "S"
    I = "I"
    D = "D"
    ID = "ID"
    IS = "IS"
    DS = "DS"
    L = "L"

    @property
    def kinds(self) -> frozenset[str]:
        return frozenset("IDS") if self is ErrorType.L else frozenset(self.value)

    @classmethod
    def parse(cls, tag: "str | ErrorType") -> "ErrorType":
        if isinstance(tag, ErrorType):
            return tag
        key = "".join(sorted(tag.upper()))
        aliases = {"S": "S", "I": "I", "D": "D", "DI": "ID", "IS": "IS",
                   "DS": "DS", "L": "L", "DIS": "L"}
        if key not in aliases:
            raise ParameterError(f"unknown error type {tag!r}")
        return cls(aliases[key])


@dataclass(frozen=True)
class SetPartition:
    good: frozenset[str]
    lost: frozenset[str]
    erroneous: tuple[str, ...]


def partitions(S: frozenset[str], s: int, t: int) -> Iterator[SetPartition]:
    """All (good, lost, erroneous) splits with |lost| <= s and |erroneous| <= t."""
    seqs = sorted(S)
    for nl in range(min(s, len(seqs)) + 1):
        for lost in combinations(seqs, nl):
            rest = [x for x in seqs if x not in lost]
            for ne in range(min(t, len(rest)) + 1):
                for err in combinations(rest, ne):
                    good = frozenset(rest) - frozenset(err)
                    yield SetPartition(good, frozenset(lost), err)


# ---------------------------------------------------------------- single sequences

def sphere_size(L: int, eps: int, q: int, kind: "str | ErrorType") -> int:
    kind = ErrorType.parse(kind)
    alphabet(q)
    if kind is ErrorType.I:
        return sum(binom_exact(L + eps, i) * (q - 1) ** i for i in range(eps + 1))
    if kind is ErrorType.S:
        if eps > L:
            raise ParameterError("substitution radius exceeds the length")
        return binom_exact(L, eps) * (q - 1) ** eps
    raise ParameterError(f"sphere size is not uniform for error type {kind.value}")


def ball_size(L: int, eps: int, q: int, kind: "str | ErrorType") -> int:
    return sum(sphere_size(L, i, q, kind) for i in range(eps + 1))


def single_edits(x: str, kinds: frozenset[str], sigma: str) -> set[str]:
    out = set()
    n = len(x)
    if "S" in kinds:
        for i in range(n):
            for a in sigma:
                if a != x[i]:
                    out.add(x[:i] + a + x[i + 1:])
    if "I" in kinds:
        for i in range(n + 1):
            for a in sigma:
                out.add(x[:i] + a + x[i:])
    if "D" in kinds:
        for i in range(n):
            out.add(x[:i] + x[i + 1:])
    return out


def enumerate_ball(x: str, eps: int, kind: "str | ErrorType", q: int | None = None,
                   cap: int | None = None) -> set[str]:
    """All outcomes of at most ``eps`` edits of ``kind`` applied to ``x``."""
    kind = ErrorType.parse(kind)
    sigma = alphabet(q) if q else alphabet_of([x])
    cap = enumeration_cap(cap)
    ball = {x}
    frontier = {x}
    for _ in range(eps):
        nxt = set()
        for y in frontier:
            nxt |= single_edits(y, kind.kinds, sigma)
        nxt -= ball
        ball |= nxt
        if len(ball) > cap:
            raise EnumerationCapExceeded(f"ball around {x!r} exceeds {cap} elements")
        frontier = nxt
        if not frontier:
            break
    return ball


def enumerate_sphere(x: str, eps: int, kind: "str | ErrorType", q: int | None = None,
                     cap: int | None = None) -> set[str]:
    """Outcomes at edit distance exactly ``eps`` (for the allowed edit kinds)."""
    outer = enumerate_ball(x, eps, kind, q, cap)
    if eps == 0:
        return outer
    return outer - enumerate_ball(x, eps - 1, kind, q, cap)


def max_ins_sphere_intersection(L: int, eps: int) -> int:
    """Largest |S_eps^I(x) & S_eps^I(y)| over distinct binary x, y of length L."""
    if eps < 1:
        raise ParameterError("eps must be at least 1")
    return sum(binom_exact(L + eps, i) * (1 - (-1) ** (eps - i)) for i in range(eps))


# ---------------------------------------------------------------- data sets

def _outcomes(x: str, eps: int | None, kind: ErrorType, sigma: str, cap: int,
              cache: dict) -> list[str]:
    key = (x, eps)
    if key not in cache:
        if eps is None:
            if kind is not ErrorType.S:
                raise ParameterError("unbounded errors are only enumerable for type S")
            eps = len(x)
        ball = enumerate_ball(x, eps, kind, len(sigma), cap)
        ball.discard(x)
        cache[key] = sorted(ball)
    return cache[key]


def set_error_ball(S: frozenset[str], s: int, t: int, eps: int | None,
                   kind: "str | ErrorType", q: int | None = None,
                   cap: int | None = None) -> set[frozenset[str]]:
    """Every received set reachable from ``S`` over the (s, t, eps) channel.

    ``eps=None`` stands for an unbounded number of errors per erroneous
    sequence; it is only enumerable for substitutions, where it means any
    other word of the same length.
    """
    kind = ErrorType.parse(kind)
    sigma = alphabet(q) if q else alphabet_of(S)
    cap = enumeration_cap(cap)
    cache: dict = {}
    out: set[frozenset[str]] = set()
    work = 0
    for part in partitions(S, s, t):
        options = [_outcomes(x, eps, kind, sigma, cap, cache) for x in part.erroneous]
        for combo in product(*options):
            work += 1
            if work > cap:
                raise EnumerationCapExceeded(f"set error ball exceeds {cap} candidates")
            out.add(part.good | frozenset(combo))
    return out


def _apply_random_edits(x: str, n_edits: int, kinds: list[str], sigma: str,
                        rng: np.random.Generator) -> str:
    y = x
    for _ in range(n_edits):
        allowed = [k for k in kinds if not (k in "DS" and len(y) == 0)]
        k = allowed[rng.integers(len(allowed))]
        if k == "S":
            i = int(rng.integers(len(y)))
            others = [a for a in sigma if a != y[i]]
            y = y[:i] + others[rng.integers(len(others))] + y[i + 1:]
        elif k == "I":
            i = int(rng.integers(len(y) + 1))
            y = y[:i] + sigma[rng.integers(len(sigma))] + y[i:]
        else:
            i = int(rng.integers(len(y)))
            y = y[:i] + y[i + 1:]
    return y


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def realize_channel(S: frozenset[str], s: int, t: int, eps: int | None,
                    kind: "str | ErrorType", seed=None, q: int | None = None):
    """Draw one channel realization; returns (received, partition, outcomes).

    The partition is uniform over all admissible (good, lost, erroneous)
    splits; each erroneous sequence then gets a uniform number of edits in
    1..eps (1..L when eps is None) with uniform kinds, positions and symbols,
    redrawn whenever the edits cancel out.
    """
    kind = ErrorType.parse(kind)
    if s + t > len(S) and len(S) > 0:
        s = min(s, len(S))
        t = min(t, len(S) - s)
    rng = _rng(seed)
    sigma = alphabet(q) if q else alphabet_of(S)
    M = len(S)
    shapes = [(a, b) for a in range(s + 1) for b in range(t + 1) if a + b <= M]
    weights = np.array([float(multinom_exact(M, a, b)) for a, b in shapes])
    a, b = shapes[rng.choice(len(shapes), p=weights / weights.sum())]
    order = sorted(S)
    perm = rng.permutation(M)
    lost = [order[i] for i in perm[:a]]
    err = [order[i] for i in perm[a:a + b]]
    good = frozenset(order[i] for i in perm[a + b:])
    kinds = sorted(kind.kinds)
    outcomes = []
    for x in err:
        if eps == 0:
            raise ParameterError("erroneous sequences need eps >= 1")
        top = len(x) if eps is None else eps
        while True:
            y = _apply_random_edits(x, int(rng.integers(1, top + 1)), kinds, sigma, rng)
            if y != x:
                break
        outcomes.append(y)
    received = good | frozenset(outcomes)
    return received, SetPartition(good, frozenset(lost), tuple(err)), outcomes


def sample_channel(S: frozenset[str], s: int, t: int, eps: int | None,
                   kind: "str | ErrorType", seed=None, q: int | None = None) -> frozenset[str]:
    if s == 0 and t == 0:
        return frozenset(S)
    return realize_channel(S, s, t, eps, kind, seed, q)[0]


# ---------------------------------------------------------------- deletion spheres

def deletion_sphere_sizes(L: int, eps: int) -> np.ndarray:
    """|S_eps^D(x)| for every binary x of length L, indexed by int(x, 2).

    Counts distinct subsequences of length L - eps with a sliding-window DP
    over the number of deletions made so far, vectorized across all words.
    """
    if eps > L:
        return np.zeros(1 << L, dtype=np.int64)
    n = 1 << L
    words = np.arange(n, dtype=np.int64)
    bits = [((words >> (L - 1 - i)) & 1).astype(bool) for i in range(L)]
    width = eps + 1
    dp = np.zeros((n, width), dtype=np.int64)
    dp[:, 0] = 1
    last = {False: np.zeros((n, width), dtype=np.int64),
            True: np.zeros((n, width), dtype=np.int64)}
    last_pos = {False: np.zeros(n, dtype=np.int64), True: np.zeros(n, dtype=np.int64)}
    rows = np.arange(n)
    for i in range(1, L + 1):
        b = bits[i - 1]
        prev_dp = np.where(b[:, None], last[True], last[False])
        p = np.where(b, last_pos[True], last_pos[False])
        new = np.zeros_like(dp)
        for d in range(width):
            if d <= i:
                val = dp[:, d].copy()  # keep symbol i
                if d >= 1:
                    val += dp[:, d - 1]  # delete symbol i
                gap = i - p
                e = d - gap
                ok = (p > 0) & (e >= 0)
                sub = prev_dp[rows, np.clip(e, 0, width - 1)]
                val -= np.where(ok, sub, 0)
                new[:, d] = val
        for sym in (False, True):
            mask = b == sym
            last[sym][mask] = dp[mask]
            last_pos[sym][mask] = i
        dp = new
    return dp[:, eps]


def avg_del_sphere_power(L: int, eps: int, t: int) -> Fraction:
    """(1/2^L) * sum over binary x of |S_eps^D(x)|**t, exactly."""
    if L > 20:
        raise ParameterError("exhaustive average needs L <= 20")
    sizes = deletion_sphere_sizes(L, eps)
    values, counts = np.unique(sizes, return_counts=True)
    total = sum(int(c) * int(v) ** t for v, c in zip(values, counts))
    return Fraction(total, 1 << L)
