import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from steinlab import numtheory as nt
from steinlab.numtheory import BUILTIN, BadPrime, NumTheoryError, ZPoly

X = sympy.Symbol("x")

# raised inside sympy's modular factorization, which only the oracles use
pytestmark = pytest.mark.filterwarnings("ignore::sympy.utilities.exceptions.SymPyDeprecationWarning")


def Z(text):
    return ZPoly.parse(text)


def sympy_factor_degrees(f, p):
    _, factors = sympy.factor_list(f.to_sympy().as_expr(), X, modulus=p)
    return sorted(sympy.degree(g, X) for g, e in factors for _ in range(e))


# -- F_p arithmetic -------------------------------------------------------------

def test_frobenius_examples():
    assert nt.frobenius_power(Z("x^2 + 1"), 5) == [0, 1]
    assert nt.frobenius_power(Z("x^2 + 1"), 3) == [0, 2]
    assert nt.frobenius_power(Z("x"), 7) == []


monic = st.lists(st.integers(-9, 9), min_size=1, max_size=4).map(lambda c: ZPoly(c + [1]))
small_primes = st.sampled_from(list(sympy.primerange(2, 50)))


@settings(max_examples=150)
@given(monic, small_primes)
def test_square_and_multiply_matches_naive(f, p):
    assert nt.frobenius_power(f, p) == nt.frobenius_power_naive(f, p)


@settings(max_examples=150)
@given(monic, small_primes)
def test_split_test_matches_factorization(f, p):
    degrees = sympy_factor_degrees(f, p)
    squarefree = nt.is_squarefree_mod(f, p)
    assert nt.is_totally_split(f, p) == (squarefree and all(d == 1 for d in degrees))
    if squarefree:
        assert nt.factor_degrees(f, p) == degrees


def test_split_examples():
    assert nt.is_totally_split(Z("x^2 + 1"), 5)
    assert not nt.is_totally_split(Z("x^2 + 1"), 7)
    assert nt.is_totally_split(Z(nt.CUBIC13), 53)
    assert nt.is_totally_split_set(BUILTIN["Qi_cubic13"], 53).totally_split
    assert nt.is_totally_split_set(BUILTIN["Qsqrt-3_zeta7plus"], 43).totally_split
    assert not nt.is_totally_split_set(BUILTIN["Qi_cubic13"], 7).totally_split


def test_mod_four_law():
    f = Z("x^2 + 1")
    for p in sympy.primerange(3, 1000):
        assert nt.is_totally_split(f, p) == (p % 4 == 1)


def test_verdicts():
    f = Z(nt.CUBIC13)
    assert nt.verdict(f, 13) == "ramified"
    assert nt.verdict(f, 53) == "split"
    assert nt.verdict(Z("x^2 + 1"), 7) == "inert-pattern(2)"


def test_bad_primes_and_polynomials():
    with pytest.raises(BadPrime):
        nt.frobenius_power(Z("x^2 + 1"), 4)
    with pytest.raises(BadPrime):
        nt.is_totally_split(Z("3*x^2 + 1"), 3)
    with pytest.raises(NumTheoryError):
        nt.FieldSpec.from_text("x^2 - 1")
    with pytest.raises(NumTheoryError):
        nt.field_set("builtin:nope")
    with pytest.raises(NumTheoryError):
        Z("x/2 + 1")


# -- fields ---------------------------------------------------------------------

def test_builtin_cubic_of_the_real_cyclotomic_field():
    assert Z(nt.ZETA7_PLUS) == ZPoly.from_sympy(sympy.minimal_polynomial(2 * sympy.cos(2 * sympy.pi / 7), X))


def test_builtins_are_irreducible_with_the_stated_degrees():
    degrees = {"Qi": 2, "Qi_sqrt3": 4, "Qi_cubic13": 6, "Qi_sqrt3_zeta7plus": 12, "Qi_sqrt7_beta43": 12}
    for name, spec in BUILTIN.items():
        assert all(f.is_irreducible() for f in spec.polys), name
        if name in degrees:
            assert spec.degree == degrees[name]


def test_compositum_examples():
    assert nt.compositum_poly(Z("x^2 + 1"), Z("x^2 - 2")) == Z("x^4 - 2*x^2 + 9")
    assert nt.compositum_poly(Z("x^2 + 1"), Z("x - 1")) == Z("x^2 - 2*x + 2")
    assert nt.compositum_poly(Z("x"), Z("x")) == Z("x")


@pytest.mark.parametrize("name", [n for n, s in BUILTIN.items() if len(s.polys) == 2])
def test_compositum_splitting_is_the_conjunction(name):
    f, g = BUILTIN[name].polys
    h = nt.compositum_poly(f, g)
    assert h.degree == f.degree * g.degree
    for p in sympy.primerange(2, 200):
        if not all(nt.is_squarefree_mod(q, p) for q in (f, g, h)):
            continue
        assert nt.is_totally_split(h, p) == (nt.is_totally_split(f, p) and nt.is_totally_split(g, p))


@pytest.mark.parametrize("name", ["cubic13", "zeta7plus", "beta43"])
def test_cubic_split_density(name):
    (f,) = BUILTIN[name].polys
    assert abs(nt.split_density(f, 10_000) - 1 / 3) < 0.05


# -- congruence classes ----------------------------------------------------------------

@pytest.mark.parametrize("name,M,classes", [("Qi_cubic13", 52, [1, 5, 21, 25]),
                                            ("Qsqrt-3_zeta7plus", 21, [1, 13]),
                                            ("Qi_sqrt3_zeta7plus", 84, [1, 13])])
def test_congruence_examples(name, M, classes):
    rep = nt.congruence_classes(BUILTIN[name], M)
    assert rep.residues == classes
    assert rep.exact and rep.subgroup
    assert rep.index * len(classes) == sympy.totient(M)


def test_splitting_depends_only_on_the_class_for_abelian_specs():
    spec = BUILTIN["Qi_cubic13"]
    classes = set(nt.congruence_classes(spec, 52).residues)
    for p in sympy.primerange(3, 3000):
        if p in (2, 13):
            continue
        assert nt.is_totally_split_set(spec, p).totally_split == (p % 52 in classes)


def test_listed_primes_and_non_primes():
    spec = BUILTIN["Qi_sqrt3_zeta7plus"]
    out = nt.check_listed_primes(spec, 84, [13, 97, 169])
    assert [o["prime"] for o in out] == [True, True, False]
    assert all(o["totally_split"] and o["in_classes"] for o in out[:2])


def test_heuristic_searches_are_flagged():
    spec = nt.field_set("x^3 - 2")
    rep = nt.congruence_classes(spec, 12)
    assert not rep.exact and rep.notes
    with pytest.raises(nt.NonAbelianSpec):
        nt.congruence_classes(spec, 12, strict=True)


def test_taylor_wiles_examples():
    assert nt.taylor_wiles_prime_check(13, BUILTIN["Qsqrt-3_zeta7plus"])["pass"]
    for name in BUILTIN:
        assert not nt.taylor_wiles_prime_check(7, BUILTIN[name])["pass"]
    assert nt.taylor_wiles_prime_check(5, BUILTIN["Qi_cubic13"], role="ell")["pass"]
    with pytest.raises(NumTheoryError):
        nt.taylor_wiles_prime_check(5, BUILTIN["Qi"], role="q")


def test_relative_splitting_of_43():
    top = nt.compositum_poly(Z("x^2 + 1"), Z("x^2 - 7"))
    base = Z("x^2 - 7")
    assert nt.is_relatively_split(top, base, 43)
    # 43 is inert in Q(i), so it does not split in the absolute sense
    assert not nt.is_totally_split(top, 43)
    # oracle: count primes above 43 with sympy
    assert len(sympy.factor_list(top.to_sympy().as_expr(), X, modulus=43)[1]) == 2


def test_random_polys_parse_round_trip():
    rng = random.Random(0)
    for _ in range(50):
        f = ZPoly([rng.randint(-5, 5) for _ in range(rng.randint(1, 4))] + [rng.choice([1, 2, -3])])
        assert Z(str(f)) == f
