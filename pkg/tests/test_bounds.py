import json
import math
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from dnasets.bounds import (bound_report, gv_arbitrary, gv_del, gv_sub, indexing_redundancy,
                            indexing_redundancy_leading, render, render_table2, round_sig,
                            sp_arbitrary, sp_arbitrary_redundancy, sp_insertion,
                            table2_report)
from dnasets.bounds.asymptotic import ROWS, asymptotic_redundancy, evaluate, render_term
from dnasets.bounds.exact import avg_del_sphere_power_bound
from dnasets.channel import avg_del_sphere_power
from dnasets.core import ParameterError
from dnasets.verify import greedy_code

GOLDEN = Path(__file__).parent / "golden" / "table2.txt"
C = math.comb


def lg(x):
    return math.log2(x)


# ---------------------------------------------------------------- arbitrary errors

def test_gv_arbitrary_example():
    b = gv_arbitrary(3, 4, 0, 1)
    assert b.exact == Fraction(14, 9) == Fraction(560, 3 * 120)
    assert b.log2 == pytest.approx(0.6374299206152917, rel=1e-12)
    assert b.status == "exact" and b.kind == "gv-lower"


def test_sp_arbitrary_example():
    b = sp_arbitrary(3, 4, 0, 1)
    assert b.exact == Fraction(560, 39)
    assert b.log2 == pytest.approx(3.8438807980814, rel=1e-12)


@pytest.mark.parametrize("M,L", [(3, 4), (5, 6), (1, 3)])
def test_no_errors_is_whole_space(M, L):
    whole = lg(C(2 ** L, M))
    assert gv_arbitrary(M, L, 0, 0).log2 == pytest.approx(whole)
    assert sp_arbitrary(M, L, 0, 0).log2 == pytest.approx(whole)
    assert gv_arbitrary(M, L, 0, 0).redundancy == pytest.approx(0, abs=1e-12)


def test_inapplicable():
    assert not gv_arbitrary(2, 4, 1, 1).applicable
    assert not sp_arbitrary(3, 2, 0, 2).applicable
    assert gv_arbitrary(2, 4, 1, 1).status == "inapplicable"


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 40), st.integers(6, 40), st.integers(0, 3), st.integers(0, 3))
def test_log_path_matches_exact_path(M, L, s, t):
    if s + 2 * t > M:
        return
    gv = lg(C(2 ** L, M)) - lg(C(M, s + 2 * t)) - lg(C(2 ** L, s + 2 * t))
    assert gv_arbitrary(M, L, s, t).log2 == pytest.approx(gv, rel=1e-9, abs=1e-9)
    sp = lg(C(2 ** L, M - s)) - lg(C(M, s + t)) - lg(C(2 ** L - M, t))
    assert sp_arbitrary(M, L, s, t).log2 == pytest.approx(sp, rel=1e-9, abs=1e-9)
    assert gv_arbitrary(M, L, s, t).log2 <= sp_arbitrary(M, L, s, t).log2 + 1e-9


def test_large_parameters_log_domain():
    b = gv_arbitrary(2 ** 16, 40, 2, 1)
    assert b.status == "log-domain"
    # redundancy of the GV code is exactly the log of the divisor
    assert b.redundancy == pytest.approx(lg(C(2 ** 16, 4)) + lg(C(2 ** 40, 4)), rel=1e-9)


def test_sp_closed_form():
    M, L, s, t = 8, 10, 1, 2
    val = (s + t) * lg(2 ** L - M - t) + t * lg(M - s - t) - lg(math.factorial(t) * math.factorial(s + t))
    assert sp_arbitrary_redundancy(M, L, s, t) == pytest.approx(val)
    # the closed form never exceeds the exact redundancy lower bound
    assert sp_arbitrary_redundancy(M, L, s, t) <= sp_arbitrary(M, L, s, t).redundancy + 1e-9
    with pytest.raises(ParameterError):
        sp_arbitrary_redundancy(3, 2, 0, 2)


# ---------------------------------------------------------------- substitutions and deletions

def test_gv_sub_example():
    M, L, s, t, eps = 4, 6, 1, 1, 1
    div = (math.factorial(4) // (1 * 1 * 2)) * C(4, 1) * C(64, 1) * (1 + 6) ** 2
    b = gv_sub(M, L, s, t, eps)
    assert b.exact == Fraction(C(64, 4), div)
    assert b.log2 == pytest.approx(lg(C(64, 4)) - lg(div))


def test_gv_sub_eps_zero_ball_factor_is_one():
    b = gv_sub(4, 6, 0, 2, 0)
    assert b.exact == Fraction(C(64, 4), C(4, 2) * C(5, 2))


def test_gv_del_example():
    avg = avg_del_sphere_power(8, 1, 1)
    assert avg == Fraction(sum(C(7, i) * (i + 1) for i in range(8)), 128)
    b = gv_del(4, 8, 0, 1, 1)
    assert b.exact == Fraction(C(256, 4)) / (4 * 9 * avg)
    assert gv_del(4, 8, 0, 1, 0).exact == Fraction(C(256, 4), 4)


@pytest.mark.parametrize("L,eps,t", [(6, 1, 1), (8, 1, 2), (8, 2, 1), (10, 2, 2), (12, 3, 1)])
def test_deletion_average_bound_dominates(L, eps, t):
    assert avg_del_sphere_power(L, eps, t) <= avg_del_sphere_power_bound(L, eps, t)
    exact = gv_del(3, L, 0, t, eps, method="exact")
    bounded = gv_del(3, L, 0, t, eps, method="bounded")
    assert exact.log2 >= bounded.log2
    assert bounded.status == "bounded"


def test_gv_del_large_L_uses_bound():
    b = gv_del(4, 24, 1, 1, 2)
    assert b.status == "bounded"


def test_sp_insertion_example():
    # binary insertion sphere S_1^I(6) = binom(7, 0) + binom(7, 1) = 8, N_1^I(6) = 2
    b = sp_insertion(4, 6, 0, 1, 1)
    S1 = C(7, 0) + C(7, 1)
    assert b.exact == Fraction(C(64, 3) * C(128, 1), 4 * S1)


def test_sp_insertion_no_errors_and_void():
    assert sp_insertion(4, 6, 1, 0, 1).exact == Fraction(C(64, 3), 4)
    # S_1^I(2) = 4 and N_1^I(2) = 2, so the factor 4 - 2*2 vanishes
    assert not sp_insertion(4, 2, 2, 1, 1).applicable


# ---------------------------------------------------------------- greedy sandwich at tiny scale

@pytest.mark.parametrize("M,L,s,t,eps", [(1, 3, 0, 1, 1), (2, 3, 0, 1, 1), (2, 3, 1, 1, 1),
                                         (2, 4, 0, 1, 1), (2, 4, 0, 2, 1), (3, 3, 0, 1, 1)])
def test_substitution_and_deletion_bounds_vs_greedy(M, L, s, t, eps):
    g_sub = len(greedy_code(M, L, s, t, eps, "S"))
    assert gv_sub(M, L, s, t, eps).log2 <= lg(g_sub) + 1e-12
    g_del = len(greedy_code(M, L, s, t, eps, "D"))
    assert gv_del(M, L, s, t, eps).log2 <= lg(g_del) + 1e-12
    g_ins = len(greedy_code(M, L, s, t, eps, "I"))
    sp = sp_insertion(M, L, s, t, eps)
    if sp.applicable:
        assert lg(g_ins) <= sp.log2 + 1e-12


def test_greedy_trivial():
    assert len(greedy_code(1, 3, 0, 0, 0, "S")) == 8
    code = greedy_code(2, 4, 1, 0, 0, "S")
    assert len(code) >= math.ceil(gv_arbitrary(2, 4, 1, 0).exact)


# ---------------------------------------------------------------- indexing redundancy

def test_indexing_redundancy():
    assert indexing_redundancy(1, 7) == pytest.approx(0, abs=1e-12)
    assert indexing_redundancy(4, 8) == pytest.approx(lg(C(256, 4)) - 4 * 6)


@pytest.mark.parametrize("L", [20, 24, 28, 32])
def test_indexing_redundancy_trend(L):
    M = 16
    per_M = indexing_redundancy(M, L) / M
    # log2 binom(2^L, M) - M(L - log M) -> M log2 e minus Stirling corrections
    stirling = 0.5 * math.log(2 * math.pi * M) + 1 / (12 * M) - 1 / (360 * M ** 3)
    expect = lg(math.e) - stirling / math.log(2) / M
    assert per_M == pytest.approx(expect, abs=M / 2 ** L + 1e-9)
    assert indexing_redundancy_leading(M) == pytest.approx(M * lg(math.e))


# ---------------------------------------------------------------- reports

def test_bound_report_contents():
    rep = bound_report(3, 4, 0, 1, None, "L").to_json()
    assert rep["schema"] == "dnasets.bounds/1"
    gv = next(e for e in rep["entries"] if e["theorem"] == "gv-arbitrary")
    sp = next(e for e in rep["entries"] if e["theorem"] == "sp-arbitrary")
    assert gv["value_bits"] == round_sig(0.6374299206152917)
    assert sp["value_bits"] == pytest.approx(3.844, abs=1e-3)
    json.dumps(rep)


def test_bound_report_inapplicable_entry():
    rep = bound_report(3, 2, 0, 2, None, "L")
    assert rep.find("sp-arbitrary")["status"] == "inapplicable"
    assert rep.find("sp-arbitrary")["value_bits"] is None


@pytest.mark.parametrize("kind,label", [("S", "gv-substitution"), ("D", "gv-deletion"),
                                        ("I", "sp-insertion")])
def test_bound_report_by_type(kind, label):
    rep = bound_report(4, 6, 0, 1, 1, kind, asymptotic=True)
    assert rep.find(label)["status"] == "exact"
    has_terms = any(e["kind"] == "asymptotic-leading-term" for e in rep.entries)
    # the table of leading terms has no insertion regime
    assert has_terms == (kind != "I")


def test_round_sig():
    assert round_sig(1.23456789012345678) == 1.23456789012
    assert round_sig(float("inf")) is None
    assert round_sig(0.0) == 0.0


# ---------------------------------------------------------------- table of leading terms

def test_table2_golden():
    assert render_table2() == GOLDEN.read_text()
    assert table2_report("text") == GOLDEN.read_text()
    assert len(ROWS) == 10


def test_table2_json():
    data = table2_report("json")
    assert len(data["rows"]) == 10
    json.dumps(data)


def test_asymptotic_cells():
    assert render(asymptotic_redundancy("(0,1,1)_S", "sp")) == "log(ML)"
    assert render(asymptotic_redundancy("(0,1,1)_D", "sp")) == "log L"
    assert render(asymptotic_redundancy("(0,M,eps)_S", "gv")) == "2M eps log L"
    assert render(asymptotic_redundancy("(0,M,eps)_S", "construction")) == "M eps log L"
    assert render(asymptotic_redundancy("(0,M,eps)_S", "sp")) == "M eps log L"
    assert render(asymptotic_redundancy("(s,t,*)_L", "construction", 1)) == "(s+2t)L"
    assert render(asymptotic_redundancy("(sigma M,tau M,*)_L", "sp")) == "(sigma+tau)M(L - log M)"
    assert [render(asymptotic_redundancy("(0,M,1)_D", c)) for c in ("gv", "construction", "sp")] \
        == ["2M log L", "M log L", "M log L"]
    with pytest.raises(ParameterError):
        asymptotic_redundancy("(9,9,9)_X", "gv")
    with pytest.raises(ParameterError):
        asymptotic_redundancy("(s,t,eps)_S", "construction")


def test_render_term_rules():
    assert render_term(("1", "log L")) == "log L"
    assert render_term(("s+2t", "L")) == "(s+2t)L"
    assert render_term(("s+2t", "log M")) == "(s+2t) log M"
    assert render_term(("2t eps", "log L")) == "2t eps log L"
    assert render_term(("s", "L")) == "sL"


def test_evaluate_expression():
    expr = asymptotic_redundancy("(s,t,*)_L", "sp")
    assert evaluate(expr, s=1, t=1, M=256, L=32) == pytest.approx(2 * 32 + 8)
    expr = asymptotic_redundancy("(0,1,1)_S", "sp")
    assert evaluate(expr, M=16, L=32) == pytest.approx(9)
