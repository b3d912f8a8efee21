import math
from fractions import Fraction
from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dnasets.channel import (EnumerationCapExceeded, ErrorType, avg_del_sphere_power,
                             ball_size, deletion_sphere_sizes, enumerate_ball,
                             enumerate_sphere, max_ins_sphere_intersection, partitions,
                             realize_channel, sample_channel, set_error_ball, sphere_size)
from dnasets.core import ParameterError, binom_exact, runs


def words(L, sigma="01"):
    return ["".join(p) for p in product(sigma, repeat=L)]


# ---------------------------------------------------------------- worked example on AC

def test_substitution_ball_of_AC():
    assert enumerate_ball("AC", 1, "S") == {"AC", "CC", "GC", "TC", "AA", "AG", "AT"}
    assert ball_size(2, 1, 4, "S") == 7
    assert sphere_size(2, 1, 4, "S") == 6


def test_deletion_ball_of_AC():
    assert enumerate_ball("AC", 1, "D") == {"AC", "C", "A"}


def test_insertion_sphere_of_AC():
    expected = {"AAC", "CAC", "GAC", "TAC", "ACC", "AGC", "ATC", "ACA", "ACG", "ACT"}
    assert enumerate_sphere("AC", 1, "I") == expected
    assert sphere_size(2, 1, 4, "I") == 10
    assert ball_size(2, 1, 4, "I") == 11 == len(enumerate_ball("AC", 1, "I"))


def test_zero_radius():
    for kind in ErrorType:
        assert enumerate_ball("0110", 0, kind) == {"0110"}
    assert sphere_size(5, 0, 2, "I") == sphere_size(5, 0, 2, "S") == 1
    assert ball_size(5, 0, 4, "S") == 1


def test_sphere_size_rejects_nonuniform_types():
    with pytest.raises(ParameterError):
        sphere_size(4, 1, 2, "D")
    with pytest.raises(ParameterError):
        sphere_size(2, 3, 2, "S")


def test_error_type_parsing():
    assert ErrorType.parse("DI") is ErrorType.ID
    assert ErrorType.parse("sd") is ErrorType.DS
    assert ErrorType.parse("IDS") is ErrorType.L
    assert ErrorType.L.kinds == {"I", "D", "S"}
    with pytest.raises(ParameterError):
        ErrorType.parse("X")


# ---------------------------------------------------------------- uniformity and bounds

@pytest.mark.parametrize("L", range(1, 9))
@pytest.mark.parametrize("kind", ["I", "S"])
def test_sphere_sizes_uniform(L, kind):
    for eps in (1, 2):
        if kind == "S" and eps > L:
            continue
        expected = sphere_size(L, eps, 2, kind)
        for x in words(L):
            assert len(enumerate_sphere(x, eps, kind)) == expected


@pytest.mark.parametrize("kind", list(ErrorType))
def test_ball_monotone_and_sphere_decomposition(kind):
    for x in ["0", "01", "0110", "10001"]:
        prev = {x}
        for eps in range(1, 3):
            ball = enumerate_ball(x, eps, kind)
            assert prev <= ball
            prev = ball
        if kind in (ErrorType.I, ErrorType.S):
            spheres = [enumerate_sphere(x, i, kind) for i in range(3)]
            assert sum(map(len, spheres)) == len(enumerate_ball(x, 2, kind))


@pytest.mark.parametrize("L", range(1, 11))
def test_deletion_sphere_run_bounds(L):
    for eps in (1, 2):
        for x in words(L):
            r = runs(x)
            size = len(enumerate_sphere(x, eps, "D"))
            assert size <= math.comb(r + eps - 1, eps)
            assert size >= math.comb(max(r - eps + 1, 0), eps)


@pytest.mark.parametrize("L", range(1, 10))
def test_vectorized_deletion_sizes_match_enumeration(L):
    for eps in range(0, 4):
        if eps > L:
            continue
        sizes = deletion_sphere_sizes(L, eps)
        for v, x in enumerate(words(L)):
            assert sizes[v] == len(enumerate_sphere(x, eps, "D"))


def test_ball_cap():
    with pytest.raises(EnumerationCapExceeded):
        enumerate_ball("0" * 10, 3, "L", cap=50)


# ---------------------------------------------------------------- insertion-sphere overlap

def test_max_ins_intersection_single():
    assert enumerate_sphere("00", 1, "I") & enumerate_sphere("01", 1, "I") == {"001", "010"}
    for L in range(1, 12):
        assert max_ins_sphere_intersection(L, 1) == 2


@pytest.mark.parametrize("L", range(1, 9))
@pytest.mark.parametrize("eps", [1, 2])
def test_max_ins_intersection_brute_force(L, eps):
    spheres = [enumerate_sphere(x, eps, "I") for x in words(L)]
    best = max(len(a & b) for a, b in combinations(spheres, 2)) if len(spheres) > 1 else 0
    assert best == max_ins_sphere_intersection(L, eps)


# ---------------------------------------------------------------- set error balls

def test_set_ball_no_errors():
    S = frozenset({"001", "110"})
    assert set_error_ball(S, 0, 0, 0, "S") == {S}


def test_set_ball_worked_example():
    S = frozenset({"TGAACTACG", "ATTGCTGAA", "GGCATAGCT"})
    received = frozenset({"GGCATAGCT", "ATTGCTGGT"})
    assert received in set_error_ball(S, 1, 1, 2, "S")
    assert received not in set_error_ball(S, 1, 1, 1, "S")


def test_partitions_shape():
    S = frozenset({"00", "01", "10"})
    parts = list(partitions(S, 1, 1))
    assert len(parts) == 1 + 3 + 3 + 6
    for p in parts:
        assert p.good | p.lost | set(p.erroneous) == S
        assert len(p.lost) <= 1 and len(p.erroneous) <= 1


@pytest.mark.parametrize("L,M,s,t", [(3, 2, 0, 1), (3, 3, 1, 1), (4, 2, 1, 1), (4, 3, 0, 2)])
def test_set_ball_lower_bound_and_sizes(L, M, s, t):
    for S in list(combinations(words(L), M))[:15]:
        S = frozenset(S)
        ball = set_error_ball(S, s, t, None, "S")
        assert len(ball) >= binom_exact(M, s + t) * binom_exact(2 ** L - M, t)
        for R in ball:
            assert M - s - t <= len(R) <= M


def test_set_ball_unbounded_needs_substitutions():
    with pytest.raises(ParameterError):
        set_error_ball(frozenset({"01"}), 0, 1, None, "D")


def test_set_ball_identity_excluded():
    # the erroneous sequence must actually change, so the only way back to S is t=0
    S = frozenset({"0101"})
    assert set_error_ball(S, 0, 1, 1, "S") == {S} | {frozenset({y}) for y in
                                                    enumerate_sphere("0101", 1, "S")}


# ---------------------------------------------------------------- sampler

def test_sampler_deterministic():
    S = frozenset({"00110", "10101", "11100"})
    a = sample_channel(S, 1, 1, 2, "L", seed=42)
    b = sample_channel(S, 1, 1, 2, "L", seed=42)
    assert a == b
    assert sample_channel(S, 0, 0, 0, "S", seed=1) == S


@settings(max_examples=1000, deadline=None)
@given(st.integers(2, 4), st.integers(1, 3), st.integers(0, 2), st.integers(0, 2),
       st.integers(1, 2), st.sampled_from(list(ErrorType)), st.integers(0, 2 ** 32))
def test_sampler_lands_in_error_ball(L, M, s, t, eps, kind, seed):
    if s + t > M or M > 2 ** L:
        return
    rng = np.random.default_rng(seed)
    pool = words(L)
    S = frozenset(pool[i] for i in rng.choice(len(pool), M, replace=False))
    received = sample_channel(S, s, t, eps, kind, seed=seed)
    assert received in set_error_ball(S, s, t, eps, kind, q=2)


def test_realize_channel_partition():
    S = frozenset({"0000", "0101", "1111", "1010"})
    received, part, outcomes = realize_channel(S, 1, 2, 1, "S", seed=3)
    assert part.good | part.lost | set(part.erroneous) == S
    assert len(outcomes) == len(part.erroneous)
    for x, y in zip(part.erroneous, outcomes):
        assert x != y


# ---------------------------------------------------------------- deletion sphere averages

def test_avg_del_sphere_power_examples():
    assert avg_del_sphere_power(6, 0, 3) == 1
    assert avg_del_sphere_power(2, 1, 1) == Fraction(3, 2)
    # frozen from exhaustive enumeration of all 1024 words
    assert avg_del_sphere_power(10, 1, 2) == Fraction(65, 2)


@pytest.mark.parametrize("L", range(1, 9))
def test_avg_del_sphere_power_brute_force(L):
    for eps in (1, 2):
        for t in (1, 2, 3):
            total = sum(len(enumerate_sphere(x, eps, "D")) ** t for x in words(L)) if eps <= L else 0
            assert avg_del_sphere_power(L, eps, t) == Fraction(total, 2 ** L)


def test_avg_del_sphere_power_limit():
    with pytest.raises(ParameterError):
        avg_del_sphere_power(21, 1, 1)
