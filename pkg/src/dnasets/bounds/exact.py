"""Non-asymptotic lower and upper bounds on the size of codes over sets.

Each bound returns a :class:`BoundValue` holding log2 of the code-size
bound, the exact rational value when it is cheap to compute, and the
matching redundancy log2 binom(2^L, M) - log2 bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..channel import avg_del_sphere_power, ball_size, max_ins_sphere_intersection, sphere_size
from ..core import (ParameterError, binom_exact, ceil_log2, log2_binom, multinom_exact)

# exact rational evaluation is used while 2^L and M stay below these
EXACT_MAX_L = 24
EXACT_MAX_M = 1 << 12

GV_LOWER = "gv-lower"
SP_UPPER = "sp-upper"
REDUNDANCY_LOWER = "redundancy-lower"


@dataclass(frozen=True)
class BoundValue:
    label: str
    kind: str
    log2: float | None
    exact: Fraction | None = None
    status: str = "exact"
    redundancy: float | None = None

    @property
    def applicable(self) -> bool:
        return self.status != "inapplicable"

    def as_dict(self) -> dict:
        return {
            "label": self.label, "kind": self.kind, "status": self.status,
            "log2_size": self.log2, "redundancy_bits": self.redundancy,
            "exact": None if self.exact is None else str(self.exact),
        }


def _inapplicable(label: str, kind: str) -> BoundValue:
    return BoundValue(label, kind, None, None, "inapplicable", None)


def _exact_ok(M: int, L: int) -> bool:
    return L <= EXACT_MAX_L and M <= EXACT_MAX_M


def _log2_fraction(x: Fraction) -> float:
    if x <= 0:
        raise ParameterError("bound is not positive")
    return math.log2(x.numerator) - math.log2(x.denominator)


def space_log2(M: int, L: int) -> float:
    """log2 binom(2^L, M), the size of the whole input space."""
    return log2_binom((2, L), M)


def _finish(label: str, kind: str, M: int, L: int, exact: Fraction | None,
            log2: float | None = None, status: str = "exact") -> BoundValue:
    if exact is not None:
        log2 = _log2_fraction(exact)
    return BoundValue(label, kind, log2, exact, status, space_log2(M, L) - log2)


def _check(M: int, L: int, s: int, t: int):
    if M < 1 or L < 1 or min(s, t) < 0:
        raise ParameterError("need M, L >= 1 and s, t >= 0")
    if M > 1 << L:
        raise ParameterError("M exceeds 2^L")


def gv_arbitrary(M: int, L: int, s: int, t: int) -> BoundValue:
    """Code-size lower bound for s losses and t arbitrarily corrupted sequences.

    binom(2^L, M) / (binom(M, s+2t) * binom(2^L, s+2t))
    """
    _check(M, L, s, t)
    label = "gv-arbitrary"
    a = s + 2 * t
    if a > M:
        return _inapplicable(label, GV_LOWER)
    if _exact_ok(M, L):
        n = 1 << L
        return _finish(label, GV_LOWER, M, L,
                       Fraction(binom_exact(n, M), binom_exact(M, a) * binom_exact(n, a)))
    val = space_log2(M, L) - math.log2(binom_exact(M, a)) - log2_binom((2, L), a)
    return _finish(label, GV_LOWER, M, L, None, val, "log-domain")


def gv_sub(M: int, L: int, s: int, t: int, eps: int) -> BoundValue:
    """Lower bound for s losses and t sequences with up to eps substitutions each.

    binom(2^L, M) / (multinom(M; s, t) binom(M+t-1, t) binom(2^L, s) B_eps(L)^(2t))
    """
    _check(M, L, s, t)
    label = "gv-substitution"
    if s + t > M or eps > L:
        return _inapplicable(label, GV_LOWER)
    ball = ball_size(L, eps, 2, "S")
    if _exact_ok(M, L):
        n = 1 << L
        div = (multinom_exact(M, s, t) * binom_exact(M + t - 1, t) * binom_exact(n, s)
               * ball ** (2 * t))
        return _finish(label, GV_LOWER, M, L, Fraction(binom_exact(n, M), div))
    val = (space_log2(M, L) - math.log2(multinom_exact(M, s, t))
           - math.log2(binom_exact(M + t - 1, t)) - log2_binom((2, L), s)
           - 2 * t * math.log2(ball))
    return _finish(label, GV_LOWER, M, L, None, val, "log-domain")


def avg_del_sphere_power_bound(L: int, eps: int, t: int) -> Fraction:
    """Run-count upper bound on the average t-th power of deletion sphere sizes.

    (1/eps!^t) * sum_i binom(L-1, i) (i+eps)^(t*eps) / 2^(L-1)
    """
    if L < 1:
        raise ParameterError("L must be positive")
    total = sum(binom_exact(L - 1, i) * (i + eps) ** (t * eps) for i in range(L))
    return Fraction(total, (1 << (L - 1)) * math.factorial(eps) ** t)


def gv_del(M: int, L: int, s: int, t: int, eps: int, method: str = "auto") -> BoundValue:
    """Lower bound for s losses and t sequences with eps deletions each.

    binom(2^L, M) / (multinom(M; s, t) binom(2^L, s) B_eps(L)^t avg|S_eps^D|^t)

    ``method`` is "exact" (exhaustive average, L <= 20), "bounded" (run-count
    upper bound on the average, giving a smaller but still valid bound) or
    "auto" (exact when possible).
    """
    _check(M, L, s, t)
    label = "gv-deletion"
    if s + t > M or eps > L:
        return _inapplicable(label, GV_LOWER)
    if method == "auto":
        method = "exact" if L <= 20 else "bounded"
    if method == "exact":
        avg = avg_del_sphere_power(L, eps, t)
        status = "exact"
    elif method == "bounded":
        avg = avg_del_sphere_power_bound(L, eps, t)
        status = "bounded"
    else:
        raise ParameterError(f"unknown method {method!r}")
    ball = ball_size(L, eps, 2, "S")
    if _exact_ok(M, L):
        n = 1 << L
        div = multinom_exact(M, s, t) * binom_exact(n, s) * ball ** t * avg
        return _finish(label, GV_LOWER, M, L, Fraction(binom_exact(n, M)) / div, status=status)
    val = (space_log2(M, L) - math.log2(multinom_exact(M, s, t)) - log2_binom((2, L), s)
           - t * math.log2(ball) - _log2_fraction(avg))
    return _finish(label, GV_LOWER, M, L, None, val,
                   "bounded" if status == "bounded" else "log-domain")


def sp_arbitrary(M: int, L: int, s: int, t: int) -> BoundValue:
    """Upper bound for s losses and t arbitrarily corrupted sequences.

    binom(2^L, M-s) / (binom(M, t+s) binom(2^L - M, t))
    """
    _check(M, L, s, t)
    label = "sp-arbitrary"
    n = 1 << L if L <= 64 else None
    if s + t > M or (n is not None and t > n - M):
        return _inapplicable(label, SP_UPPER)
    if _exact_ok(M, L):
        num = binom_exact(n, M - s)
        div = binom_exact(M, t + s) * binom_exact(n - M, t)
        return _finish(label, SP_UPPER, M, L, Fraction(num, div))
    val = (log2_binom((2, L), M - s) - math.log2(binom_exact(M, t + s))
           - log2_binom(2 ** L - M, t))
    return _finish(label, SP_UPPER, M, L, None, val, "log-domain")


def sp_arbitrary_redundancy(M: int, L: int, s: int, t: int) -> float:
    """Closed-form redundancy lower bound implied by :func:`sp_arbitrary`.

    (s+t) log2(2^L - M - t) + t log2(M - s - t) - log2(t! (s+t)!)
    """
    _check(M, L, s, t)
    if s + t > M or t > 2 ** L - M:
        raise ParameterError("bound is inapplicable")
    free = 2 ** L - M - t
    if (s + t and free == 0) or (t and M - s - t == 0):
        return float("-inf")
    val = (s + t) * math.log2(free) if s + t else 0.0
    if t:
        val += t * math.log2(M - s - t)
    return val - math.log2(math.factorial(t) * math.factorial(s + t))


def sp_insertion(M: int, L: int, s: int, t: int, eps: int) -> BoundValue:
    """Upper bound for s losses and t sequences with eps insertions each.

    binom(2^L, M-s-t) binom(2^(L+eps), t)
      / (multinom(M; s, t) prod_{i<t} (S_eps^I(L) - (s+i) N_eps^I(L)))
    """
    _check(M, L, s, t)
    label = "sp-insertion"
    if s + t > M or (t and eps < 1):
        return _inapplicable(label, SP_UPPER)
    factors = []
    if t:
        S = sphere_size(L, eps, 2, "I")
        N = max_ins_sphere_intersection(L, eps)
        factors = [S - (s + i) * N for i in range(t)]
        if any(f <= 0 for f in factors):
            return _inapplicable(label, SP_UPPER)
    div = multinom_exact(M, s, t) * math.prod(factors)
    if _exact_ok(M, L + eps):
        num = binom_exact(1 << L, M - s - t) * binom_exact(1 << (L + eps), t)
        return _finish(label, SP_UPPER, M, L, Fraction(num, div))
    val = log2_binom((2, L), M - s - t) + log2_binom((2, L + eps), t) - math.log2(div)
    return _finish(label, SP_UPPER, M, L, None, val, "log-domain")


def indexing_redundancy(M: int, L: int) -> float:
    """Redundancy of storing an index of ceil(log2 M) bits in every sequence.

    log2 binom(2^L, M) - M (L - ceil(log2 M))
    """
    if M < 1 or M > 2 ** L:
        raise ParameterError("need 1 <= M <= 2^L")
    return space_log2(M, L) - M * (L - ceil_log2(M))


def indexing_redundancy_leading(M: int) -> float:
    """M (ceil(log2 M) - log2 M + log2 e), the dominant part of the indexing cost."""
    return M * (ceil_log2(M) - math.log2(M) + math.log2(math.e))
