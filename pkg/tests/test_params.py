from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cuspidal_radon.params import (Case, Tag, classify, enumerate_discrete_series,
                                   make_discrete_series, make_space, mu_of)


def test_make_space_4_2():
    sp = make_space(4, 2)
    assert sp.rho == Fraction(5, 2)
    assert sp.rho_c == Fraction(1, 2)
    assert sp.rho1 == Fraction(1, 2)
    assert sp.case_tag is Case.A
    assert (sp.alpha, sp.beta) == (0, 1)
    assert not sp.degenerate_x


def test_make_space_1_3():
    sp = make_space(1, 3)
    assert sp.rho == Fraction(3, 2)
    assert sp.rho_c == Fraction(1)
    assert sp.rho1 == Fraction(3, 2)
    assert sp.case_tag is Case.B
    assert (sp.alpha, sp.beta) == (-1, 2)
    assert sp.degenerate_x


def test_make_space_2_2():
    sp = make_space(2, 2)
    assert sp.rho == Fraction(3, 2)
    assert sp.rho_c == Fraction(1, 2)
    assert sp.rho1 == Fraction(1, 2)
    assert sp.case_tag is Case.B
    assert (sp.alpha, sp.beta) == (0, 0)
    assert not sp.degenerate_x


@pytest.mark.parametrize("p,q", [(0, 3), (3, 0), (-1, 2)])
def test_make_space_rejects(p, q):
    with pytest.raises(ValueError):
        make_space(p, q)


def test_make_space_rejects_non_integer():
    with pytest.raises(TypeError):
        make_space(2.5, 2)


def test_enumerate_1_5():
    sp = make_space(1, 5)
    out = enumerate_discrete_series(sp, 3)
    assert [(d.lam, d.mu, d.tag) for d in out] == [
        (Fraction(1, 2), Fraction(-1), Tag.EXCEPTIONAL_ODD),
        (Fraction(3, 2), Fraction(0), Tag.SPHERICAL_NON_CUSPIDAL),
        (Fraction(5, 2), Fraction(1), Tag.CUSPIDAL),
    ]
    assert (out[0].n, out[0].m) == (1, 1)


def test_enumerate_2_2():
    sp = make_space(2, 2)
    out = enumerate_discrete_series(sp, 2)
    assert [(d.lam, d.mu) for d in out] == [(Fraction(1, 2), Fraction(1)),
                                            (Fraction(3, 2), Fraction(2))]
    assert all(d.tag is Tag.CUSPIDAL for d in out)


def test_enumerate_1_7():
    sp = make_space(1, 7)
    out = enumerate_discrete_series(sp, 1)
    assert len(out) == 1
    d = out[0]
    assert (d.lam, d.mu, d.tag, d.n, d.m) == (
        Fraction(1, 2), Fraction(-2), Tag.EXCEPTIONAL_EVEN, 2, 1)
    assert d.descends_to_projective


def test_enumerate_q1_both_signs():
    sp = make_space(3, 1)
    out = enumerate_discrete_series(sp, 2)
    assert [(d.lam, d.mu) for d in out] == [
        (Fraction(-1, 2), Fraction(-2)), (Fraction(1, 2), Fraction(2)),
        (Fraction(-3, 2), Fraction(-3)), (Fraction(3, 2), Fraction(3))]
    assert all(d.tag is Tag.CUSPIDAL for d in out)


def test_negative_lambda_rejected_for_q_gt_1():
    sp = make_space(1, 7)
    with pytest.raises(ValueError):
        make_discrete_series(sp, Fraction(-1, 2))


def test_classify_examples():
    sp = make_space(1, 3)
    assert make_discrete_series(sp, Fraction(1, 2)).tag is Tag.SPHERICAL_NON_CUSPIDAL
    sp = make_space(1, 5)
    assert make_discrete_series(sp, Fraction(1, 2)).tag is Tag.EXCEPTIONAL_ODD
    sp = make_space(4, 1)
    assert make_discrete_series(sp, Fraction(-1, 2)).tag is Tag.CUSPIDAL


def test_classify_rejects_inconsistent_pair():
    sp15 = make_space(1, 5)
    sp13 = make_space(1, 3)
    ds = make_discrete_series(sp15, Fraction(1, 2))
    with pytest.raises(ValueError):
        classify(sp13, ds)


def test_mu_identity_exact():
    for p in range(1, 7):
        for q in range(2, 7):
            sp = make_space(p, q)
            for ds in enumerate_discrete_series(sp, 5):
                assert ds.mu - (ds.lam + sp.rho - 2 * sp.rho_c) == 0
                assert ds.mu.denominator == 1


def test_exceptional_set_finite_below_threshold():
    # {lambda>0 : mu integral, mu<0} is finite with max element < 2 rho_c - rho
    for p in range(1, 4):
        for q in range(1, 13):
            sp = make_space(p, q)
            exc = [d for d in enumerate_discrete_series(sp, 20)
                   if d.tag in (Tag.EXCEPTIONAL_EVEN, Tag.EXCEPTIONAL_ODD)]
            assert bool(exc) == (q > p + 3)
            if exc:
                assert max(d.lam for d in exc) < 2 * sp.rho_c - sp.rho


def test_prefix_stability():
    for p, q in [(1, 5), (2, 2), (2, 1), (3, 7)]:
        sp = make_space(p, q)
        small = enumerate_discrete_series(sp, 2)
        large = enumerate_discrete_series(sp, 6)
        assert large[:len(small)] == small


def test_q1_irregular_lambda_rejected():
    sp = make_space(2, 1)  # rho = 1
    with pytest.raises(ValueError):
        make_discrete_series(sp, Fraction(1, 2))
    ds = make_discrete_series(sp, 2)
    assert ds.mu == 3


@given(st.integers(min_value=1, max_value=10), st.integers(min_value=1, max_value=10))
def test_space_identities(p, q):
    sp = make_space(p, q)
    if sp.case_tag is Case.A:
        assert Fraction(sp.alpha + 1, 2) + sp.beta + 1 == sp.rho
        assert sp.rho1 >= 0
    else:
        assert sp.alpha + sp.beta + 2 == q
        assert sp.rho1 > 0
    assert (sp.alpha == -1) == sp.degenerate_x
    assert sp.alpha >= -1 and sp.beta >= 0


@given(st.integers(min_value=1, max_value=8), st.integers(min_value=2, max_value=8))
def test_enumerated_tags_match_classify(p, q):
    sp = make_space(p, q)
    for ds in enumerate_discrete_series(sp, 4):
        assert classify(sp, ds) is ds.tag
        assert (ds.tag is Tag.CUSPIDAL) == (ds.mu > 0)
        assert mu_of(sp, ds.lam) == ds.mu
