"""Brute-force oracles: code certification, greedy codes and Monte Carlo runs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

import numpy as np

from .channel import ErrorType, enumeration_cap, realize_channel, set_error_ball
from .core import DecodeError, ParameterError, alphabet, binom_exact


def _canon(S) -> tuple[str, ...]:
    return tuple(sorted(S))


def _set_key(S) -> tuple[int, tuple[str, ...]]:
    return len(S), _canon(S)


@dataclass
class Verdict:
    correcting: bool
    pair: tuple[int, int] | None = None
    witness: frozenset[str] | None = None
    intersection: list[frozenset[str]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "correcting": self.correcting,
            "pair": list(self.pair) if self.pair else None,
            "witness": list(_canon(self.witness)) if self.witness is not None else None,
            "intersection": [list(_canon(S)) for S in self.intersection],
        }


def is_correcting_code(code: Sequence[frozenset[str]], s: int, t: int, eps: int | None,
                       kind="L", q: int | None = None, cap: int | None = None) -> Verdict:
    """Check that the error balls of all codewords are pairwise disjoint.

    On failure the verdict names the first clashing pair (i, j), lists every
    received set in both balls and picks the smallest one (by size, then by
    sorted content) as the witness.
    """
    kind = ErrorType.parse(kind)
    owner: dict[frozenset[str], int] = {}
    balls: list[set[frozenset[str]]] = []
    for j, S in enumerate(code):
        ball = set_error_ball(S, s, t, eps, kind, q, cap)
        balls.append(ball)
        clash = {owner[R] for R in ball if R in owner}
        if clash:
            i = min(clash)
            common = sorted(balls[i] & ball, key=_set_key)
            return Verdict(False, (i, j), common[0], common)
        for R in ball:
            owner[R] = j
    return Verdict(True)


def all_datasets(M: int, L: int, q: int = 2):
    sigma = alphabet(q)
    words = ["".join(p) for p in product(sigma, repeat=L)]
    return [frozenset(c) for c in combinations(words, M)]


def greedy_code(M: int, L: int, s: int, t: int, eps: int | None, kind="L", q: int = 2,
                limit: int = 10 ** 6, cap: int | None = None) -> list[frozenset[str]]:
    """Greedy code on the confusion graph of all M-subsets of length-L words.

    Repeatedly takes the remaining data set with the fewest remaining
    neighbours (ties broken by lexicographic order of its sorted sequences)
    and removes it together with its neighbours. The result is a correcting
    code whose size is at least the number of vertices divided by the average
    closed-neighbourhood size.
    """
    kind = ErrorType.parse(kind)
    if binom_exact(q ** L, M) > limit:
        raise ParameterError("state space too large for the greedy construction")
    nodes = all_datasets(M, L, q)
    n = len(nodes)
    by_received: dict[frozenset[str], int] = {}
    for i, S in enumerate(nodes):
        for R in set_error_ball(S, s, t, eps, kind, q, cap):
            by_received[R] = by_received.get(R, 0) | (1 << i)
    adj = [1 << i for i in range(n)]
    for mask in by_received.values():
        if mask & (mask - 1):
            m = mask
            while m:
                low = m & -m
                adj[low.bit_length() - 1] |= mask
                m ^= low
    remaining = (1 << n) - 1
    code = []
    while remaining:
        best, best_deg = -1, None
        m = remaining
        while m:
            low = m & -m
            i = low.bit_length() - 1
            deg = (adj[i] & remaining).bit_count()
            if best_deg is None or deg < best_deg:
                best, best_deg = i, deg
            m ^= low
        code.append(nodes[best])
        remaining &= ~adj[best]
    return code


def confusion_degrees(M: int, L: int, s: int, t: int, eps: int | None, kind="L",
                      q: int = 2) -> list[int]:
    """Closed-neighbourhood sizes |V(S)| of every vertex in the confusion graph."""
    nodes = all_datasets(M, L, q)
    balls = [set_error_ball(S, s, t, eps, kind, q) for S in nodes]
    out = []
    for i in range(len(nodes)):
        out.append(sum(1 for j in range(len(nodes)) if i == j or balls[i] & balls[j]))
    return out


# ---------------------------------------------------------------- Monte Carlo

@dataclass
class MonteCarloResult:
    trials: int
    successes: int
    failures: list[dict]

    @property
    def success_rate(self) -> float | None:
        return None if self.trials == 0 else self.successes / self.trials

    def to_json(self) -> dict:
        return {"schema": "dnasets.simulate/1", "trials": self.trials,
                "successes": self.successes, "success_rate": self.success_rate,
                "failures": self.failures}


def _random_message(rng: np.random.Generator, capacity: int) -> int:
    nbytes = (capacity.bit_length() + 64 + 7) // 8
    return int.from_bytes(rng.bytes(nbytes), "big") % capacity


def monte_carlo(code, s: int, t: int, eps: int | None, kind="L", trials: int = 1000,
                seed: int = 0, max_failures: int = 20, decode_kw: dict | None = None
                ) -> MonteCarloResult:
    """Encode random messages, pass them through the channel and decode.

    Trial i draws from its own stream SeedSequence([seed, i]), so results
    do not depend on how the trials are scheduled.
    """
    kind = ErrorType.parse(kind)
    decode_kw = decode_kw or {}
    successes = 0
    failures = []
    for i in range(trials):
        rng = np.random.default_rng(np.random.SeedSequence([seed, i]))
        msg = _random_message(rng, code.capacity)
        S = code.encode(msg)
        received, part, outcomes = realize_channel(S, s, t, eps, kind, seed=rng)
        decoded, error = None, None
        try:
            decoded = code.decode(received, **decode_kw)
        except (DecodeError, ParameterError) as exc:
            error = str(exc)
        if decoded == msg:
            successes += 1
        elif len(failures) < max_failures:
            failures.append({
                "trial": i, "message": str(msg), "codeword": list(_canon(S)),
                "lost": list(_canon(part.lost)), "erroneous": list(part.erroneous),
                "outcomes": outcomes, "received": list(_canon(received)),
                "decoded": None if decoded is None else str(decoded), "error": error,
            })
    return MonteCarloResult(trials, successes, failures)


# ---------------------------------------------------------------- counterexample

CE_S1 = frozenset({"AACCA", "AACAA", "GGTTG"})
CE_S2 = frozenset({"ACCAA", "GGTGG", "GTTGG"})
CE_WITNESS = frozenset({"AACCAA", "GGTTGG"})


def counterexample(cap: int | None = None) -> dict:
    """A two-word code over ACGT that corrects (0,3,1) deletions but not insertions."""
    code = [CE_S1, CE_S2]
    d = is_correcting_code(code, 0, 3, 1, "D", q=4, cap=cap)
    i = is_correcting_code(code, 0, 3, 1, "I", q=4, cap=cap)
    return {
        "schema": "dnasets.counterexample/1",
        "code": [list(_canon(S)) for S in code],
        "channel": {"s": 0, "t": 3, "eps": 1},
        "D_correcting": d.correcting,
        "I_correcting": i.correcting,
        "I_witness": list(_canon(i.witness)) if i.witness is not None else None,
        "known_witness": list(_canon(CE_WITNESS)),
        "known_witness_in_intersection": CE_WITNESS in set(i.intersection),
        "intersection_size": len(i.intersection),
    }
