from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from steinlab import catO
from steinlab.catO import (KClass, RefinementPosition, ZeroSheaf, classical_dim_ratio, cycle_of_simple,
                           cycle_of_verma, hom_dim_count, inclusion_exclusion_check, n_lambda_jh,
                           s_lambda_wR, support_nonzero, verma_jh)
from steinlab.models import PdRPointSpec
from steinlab.weyl import WeylElem, bruhat_leq


def P(text, n=3):
    return WeylElem.parse(text, n)


def pos(text, m=1):
    return RefinementPosition.parse(text, m)


def names(cls):
    return set(cls.as_dict())


# -- Jordan-Hoelder content ----------------------------------------------------

def test_verma_contents():
    assert verma_jh(P("w0")).as_dict() == {"w0": 1}
    assert verma_jh(P("e")).as_dict() == {w.names()[0]: 1 for w in WeylElem.all(3)}
    assert verma_jh(P("e,w0")).length() == 6


def test_quotient_of_the_dominant_verma():
    n = n_lambda_jh()
    assert names(n) == {"e", "s1", "s2"}
    assert n.length() == 3
    assert n == catO.n_lambda_by_inclusion_exclusion()


def test_verma_contents_are_upper_sets():
    for w in WeylElem.all(3):
        for v, c in verma_jh(w).coeffs.items():
            assert c == 1 and bruhat_leq(w, v)


classes = st.dictionaries(st.sampled_from(WeylElem.all(3)), st.integers(-4, 4), max_size=6)


@given(classes)
def test_basis_change_round_trips(coeffs):
    k = KClass(coeffs, "L")
    assert k.to_verma().to_simple() == k
    m = KClass(coeffs, "M")
    assert m.to_simple().to_verma() == m


@given(classes, classes)
def test_basis_change_is_additive(a, b):
    a, b = KClass(a), KClass(b)
    assert (a + b).to_verma() == a.to_verma() + b.to_verma()
    assert (a - a) == KClass({})


def test_mixed_bases_do_not_add():
    with pytest.raises(ValueError):
        KClass({P("e"): 1}, "L") + KClass({P("e"): 1}, "M")


# -- the sheaves at a refinement position -----------------------------------------

def test_nontrivial_position_keeps_simples_below_wR_w0():
    total, summands = s_lambda_wR(pos("w0"))
    # w_R w0 = e when w_R = w0, so only L(e) survives
    assert summands == [(("L", P("e")),)]
    assert total.as_dict() == {"e": 1}
    total, summands = s_lambda_wR(pos("s1"))
    top = P("s1") * P("w0")
    assert names(total) == {w.names()[0] for w in WeylElem.all(3) if bruhat_leq(w, top)}


def test_trivial_position():
    total, summands = s_lambda_wR(pos("1"))
    labels = [catO.summand_label(s) for s in summands]
    assert labels == ["s1s2", "s2s1", "w0", "N"]
    assert total.as_dict() == {w.names()[0]: 1 for w in WeylElem.all(3)}
    total, summands = s_lambda_wR(pos("1"), literal=True)
    assert [catO.summand_label(s) for s in summands] == ["e", "s1s2", "s2s1", "w0", "N"]
    assert total.as_dict()["e"] == 2


def test_summands_multiply_across_factors():
    below = sum(1 for w in WeylElem.all(3) if bruhat_leq(w, P("s1") * P("w0")))
    assert len(s_lambda_wR(pos("1,s1"), literal=True)[1]) == 5 * below
    assert len(s_lambda_wR(pos("1,s1"))[1]) == 4 * below


def test_support_examples():
    assert support_nonzero(P("e"), pos("w0"))
    assert not support_nonzero(P("w0"), pos("w0"))
    assert support_nonzero(P("w0"), pos("e"))


def test_cycle_examples():
    w0 = P("w0")
    assert cycle_of_verma(P("e"), pos("e")).terms() == [(("X", w0), 1)]
    assert cycle_of_verma(P("e"), pos("e", 3)).terms() == [(("X", w0), 3)]
    assert cycle_of_verma(P("s1"), pos("e", 2)).terms() == [(("X", P("s1") * w0), 2)]
    assert cycle_of_simple(P("e"), pos("e")).terms() == [(("Z", w0), 1)]
    assert cycle_of_simple(w0, pos("e", 2)).terms() == [(("Z", P("e")), 2)]
    with pytest.raises(ZeroSheaf):
        cycle_of_simple(w0, pos("w0"))


def test_every_cycle_is_a_single_diagonal_term():
    for wxr in WeylElem.all(3, 2):
        p = RefinementPosition(wxr, 2)
        for w in WeylElem.all(3, 2):
            if support_nonzero(w, p):
                (term,) = cycle_of_simple(w, p).terms()
                assert term == (("Z", w * WeylElem.longest(3, 2)), 2)
                assert catO.diagonal_coefficient(w, p) == 1


def test_ratio_examples():
    assert classical_dim_ratio(pos("w0")) == 1
    assert classical_dim_ratio(pos("1")) == 2
    assert classical_dim_ratio(pos("1,1,s1")) == 4
    with pytest.raises(ValueError):
        RefinementPosition(P("e"), 0)


def test_hom_count_examples():
    assert hom_dim_count(0, 5) == 5 and inclusion_exclusion_check(0, 5) == 5
    assert hom_dim_count(2, 1) == 4 and inclusion_exclusion_check(2, 1) == 1
    assert inclusion_exclusion_check(4, 3) == 3


@pytest.mark.parametrize("i2", range(7))
def test_inclusion_exclusion_matches_the_binomial_identity(i2):
    assert sum((-1) ** j * comb(i2, j) * 2 ** (i2 - j) for j in range(i2 + 1)) == 1
    for m in range(1, 6):
        assert inclusion_exclusion_check(i2, m) == m


def test_bridge_to_point_specs():
    spec = PdRPointSpec.parse("w0:equal,w0:distinct,s1s2:na")
    p = catO.position_for_spec(spec)
    assert p.w_xR == WeylElem.parse("e,s2,w0", 3)
    assert p.r == spec.r == 1
    assert classical_dim_ratio(p) == 2
