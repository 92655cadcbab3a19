import random
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from steinlab import weyl
from steinlab.weyl import (IntWeight, SearchBound, ShapeMismatch, SimpleSubset, WeylElem, WeylError,
                           bruhat_leq, coset_reps, coxeter_length, dot_action, fixed_space_dim,
                           hodge_to_lambda, hodge_to_mu, is_product_of_distinct_simples,
                           reflection_length)


def P(text, n=3):
    return WeylElem.parse(text, n)


def W(n, k=1):
    return WeylElem.all(n, k)


# -- spec examples ------------------------------------------------------------

def test_lengths():
    assert coxeter_length(P("e")) == 0
    assert coxeter_length(P("w0")) == 3
    assert coxeter_length(P("w0,s1")) == 4
    assert reflection_length(P("e")) == 0
    assert reflection_length(P("w0")) == 1
    assert reflection_length(P("s1s2")) == 2
    assert fixed_space_dim(P("e")) == 3
    assert fixed_space_dim(P("w0")) == 2
    assert fixed_space_dim(P("s1s2")) == 1


def test_bruhat_examples():
    assert all(bruhat_leq(P("e"), w) for w in W(3))
    assert bruhat_leq(P("s1"), P("s1s2"))
    assert not bruhat_leq(P("s1s2"), P("s2s1"))


def test_distinct_simples_examples():
    assert is_product_of_distinct_simples(P("s1s2"))
    assert not is_product_of_distinct_simples(P("w0"))
    assert is_product_of_distinct_simples(P("s1,s2"))


def test_dot_action_examples():
    zero = IntWeight.parse("0,0,0")
    assert dot_action(P("e"), zero) == zero
    assert dot_action(P("s1"), zero) == IntWeight.parse("-1,1,0")
    assert dot_action(P("w0"), zero) == IntWeight.parse("-2,0,2")


def test_coset_examples():
    assert coset_reps(P("s1s2s1"), SimpleSubset.parse("1")) == (P("s2s1"), P("s1s2s1"))
    for w in W(3):
        assert coset_reps(w, SimpleSubset.parse("")) == (w, w)
        assert coset_reps(w, SimpleSubset.parse("1,2")) == (P("e"), P("w0"))


def test_hodge_examples():
    assert hodge_to_lambda(IntWeight.parse("0,1,2")) == IntWeight.parse("2,2,2")
    assert hodge_to_lambda(IntWeight.parse("0,2,5")) == IntWeight.parse("5,3,2")
    mu = hodge_to_mu(IntWeight.parse("0,2,5"))
    assert mu == IntWeight.parse("0,3,7")
    assert list(mu.entries[0]) == sorted(mu.entries[0])


# -- parsing and conventions ----------------------------------------------------------

def test_words_and_one_line_notation_agree():
    assert P("s1s2") == P("231")
    assert P("s1") * P("s2") == P("s1s2")
    assert P("w0") == P("s1s2s1") == P("s2s1s2") == P("321")
    assert P("1") == P("id") == P("e") == WeylElem.identity(3)


def test_composition_applies_the_right_factor_first():
    u, v = P("s1"), P("s2")
    for i in range(1, 4):
        assert (u * v).factors[0][i - 1] == u.factors[0][v.factors[0][i - 1] - 1]


@pytest.mark.parametrize("n", [3, 4])
def test_names_round_trip(n):
    for w in W(n):
        assert WeylElem.parse(",".join(w.names()), n) == w


def test_shape_errors():
    with pytest.raises(ShapeMismatch):
        P("s1") * P("s1,s2")
    with pytest.raises(ShapeMismatch):
        bruhat_leq(P("s1"), WeylElem.simple(1, 4))
    with pytest.raises(WeylError):
        P("s4")
    with pytest.raises(WeylError):
        P("112")
    with pytest.raises(ValueError):
        IntWeight.parse("1,2;3")


def test_search_bound():
    with pytest.raises(SearchBound):
        is_product_of_distinct_simples(WeylElem.longest(6))


# -- exhaustive properties ---------------------------------------------------------

@pytest.mark.parametrize("n", [3, 4, 5])
def test_carter_identity(n):
    for w in W(n):
        assert reflection_length(w) + fixed_space_dim(w) == n
        assert reflection_length(w) == weyl.reflection_length_bfs(w)


@pytest.mark.parametrize("n", [3, 4])
def test_reflection_length_bounded_by_length(n):
    for w in W(n):
        lr, lg = reflection_length(w), coxeter_length(w)
        assert lr <= lg
        assert (lr == lg) == is_product_of_distinct_simples(w)


@pytest.mark.parametrize("n", [3, 4])
def test_length_identity_below_distinct_simple_products(n):
    for w in W(n):
        if not is_product_of_distinct_simples(w):
            continue
        for v in W(n):
            if bruhat_leq(v, w):
                assert reflection_length(w * v.inverse()) == coxeter_length(w) - coxeter_length(v)


@pytest.mark.parametrize("n", [3, 4])
def test_reflection_length_drops_by_at_most_one(n):
    for w in W(n):
        for i in range(1, n):
            assert reflection_length(w * WeylElem.simple(i, n)) >= reflection_length(w) - 1


@pytest.mark.parametrize("n", [3, 4])
def test_bruhat_criteria_agree_and_form_a_partial_order(n):
    elems = W(n)
    for a in elems:
        for b in elems:
            sub = weyl.bruhat_leq_subword(a.factors[0], b.factors[0])
            assert sub == weyl.bruhat_leq_rank(a.factors[0], b.factors[0])
            if sub and a != b:
                assert coxeter_length(a) < coxeter_length(b)
                assert not bruhat_leq(b, a)


def test_bruhat_is_transitive_on_s4():
    elems = W(4)
    leq = {(a, b): bruhat_leq(a, b) for a in elems for b in elems}
    for a in elems:
        for b in elems:
            if not leq[a, b]:
                continue
            for c in elems:
                if leq[b, c]:
                    assert leq[a, c]


def test_coxeter_length_counts_inversions():
    for p in permutations(range(1, 5)):
        inv = sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
        assert coxeter_length(WeylElem([p])) == inv


def test_min_of_coset_times_w0_is_max():
    w0 = WeylElem.longest(3)
    for w in W(3):
        for I in ("", "1", "2", "1,2"):
            S = SimpleSubset.parse(I)
            assert coset_reps(w * w0, S)[0] == coset_reps(w, S)[1] * w0


def test_coset_reps_are_extremal_in_the_coset():
    for w in W(4):
        for I in ("1", "2,3", "1,3"):
            S = SimpleSubset.parse(I, 4)
            wmin, wmax = coset_reps(w, S)
            assert coxeter_length(wmin) <= coxeter_length(w) <= coxeter_length(wmax)


def test_products_are_componentwise():
    for a in W(3, 2)[::5]:
        for b in W(3, 2)[::7]:
            assert coxeter_length(a) == sum(coxeter_length(WeylElem([f])) for f in a.factors)
            assert bruhat_leq(a, b) == all(bruhat_leq(WeylElem([x]), WeylElem([y]))
                                           for x, y in zip(a.factors, b.factors))


weights = st.lists(st.integers(-6, 6), min_size=3, max_size=3)
elements = st.sampled_from(W(3))


@given(elements, elements, weights)
def test_dot_action_is_an_action(a, b, lam):
    lam = IntWeight([lam])
    assert dot_action(a, dot_action(b, lam)) == dot_action(a * b, lam)
    assert dot_action(P("e"), lam) == lam


@given(elements, weights)
def test_linear_action_permutes_entries(w, lam):
    out = weyl.act(w, IntWeight([lam]))
    assert sorted(out.entries[0]) == sorted(lam)
    assert weyl.act(w.inverse(), out) == IntWeight([lam])


def test_random_products_of_four_factors():
    rng = random.Random(0)
    for _ in range(30):
        a = WeylElem([rng.choice(W(4)).factors[0] for _ in range(2)])
        assert reflection_length(a) <= coxeter_length(a)
        assert reflection_length(a) + fixed_space_dim(a) == 8
