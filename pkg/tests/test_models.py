import copy

import pytest

from steinlab import models
from steinlab.models import (FULL_RING, GL2_FULL_RING, InvalidSpec, PdRPointSpec, TranscriptionMismatch,
                             Z_RING)
from steinlab.polyalg import Ideal, ModMatrix, PointNotOnVariety, tangent_dim
from steinlab.weyl import WeylElem


def W3():
    return WeylElem.all(3)


# -- the w0 component --------------------------------------------------------

def test_w0_ideal_shape():
    comp = models.iw0_gl3()
    assert len(comp.ideal.gens) == 4
    assert comp.dim() == 3
    zero_section = Ideal([Z_RING.var(n) for n in models.NILP_VARS], Z_RING)
    assert all(zero_section.contains(g) for g in comp.ideal.gens)


def test_rederived_w0_matches_the_four_generators():
    assert models.check_w0_oracle()
    got = models.rederive_component(3, WeylElem.longest(3))
    assert [str(g) for g in got.groebner()] == [str(g) for g in models.iw0_gl3().ideal.groebner()]


def test_gl2_components():
    assert [str(g) for g in models.rederive_component(2, "s").groebner()] == ["x*u"]
    assert [str(g) for g in models.rederive_component(2, "e").groebner()] == ["x"]


def test_every_gl3_component_has_dimension_three():
    assert {w.names()[0]: models.component(3, w).dim() for w in W3()} == {w.names()[0]: 3 for w in W3()}


def test_chart_incidence_relation():
    chart = models.Chart()
    # the covector kills the vector: x0 y0 + x1 y1 + x2 y2 = 0 with x0 = y2 = 1
    assert sum((p * q for p, q in zip(chart.plane, chart.line)), FULL_RING.zero()).is_zero()
    assert len(chart.incidence()) == 3


# -- dualizing fibres -----------------------------------------------------------

def test_omega_fiber_examples():
    comp = models.iw0_gl3()
    assert models.omega_fiber(comp, [0] * 6) == 2
    assert models.omega_fiber(comp, [0, 0, 1, 0, 0, 0]) == 1
    assert models.omega_fiber(comp, [1, 0, 0, 0, 1, 0]) == 1
    with pytest.raises(PointNotOnVariety):
        models.omega_fiber(comp, [0, 1, 0, 0, 1, 0])


def _corrected_a_prime():
    rows = copy.deepcopy(models.TRANSCRIBED_A_PRIME)
    rows[5][1] = "x1*u12 + x2*u13"
    return ModMatrix.parse(Z_RING, rows)


@pytest.mark.parametrize("stratum", models.STRATA)
def test_fiber_is_two_exactly_where_the_last_map_vanishes(stratum):
    comp = models.iw0_gl3()
    a1 = _corrected_a_prime()
    for pt in models.sample_w0_points(stratum, 10, seed=3):
        assert comp.contains_point(pt)
        assert models.omega_fiber(comp, pt) == 2 - a1.rank_at(pt)


@pytest.mark.parametrize("stratum,flags_equal,n_zero",
                         [("equal_zero", True, True), ("equal_nonzero", True, False), ("distinct", False, None)])
def test_samples_land_in_their_stratum(stratum, flags_equal, n_zero):
    for pt in models.sample_w0_points(stratum, 10, seed=1):
        eq, nz = models.classify_point(pt)
        assert eq == flags_equal
        if n_zero is not None:
            assert nz == n_zero


def test_sampling_is_deterministic():
    assert models.sample_w0_points("distinct", 5, seed=2) == models.sample_w0_points("distinct", 5, seed=2)


def test_gl2_hypersurface_is_gorenstein():
    comp = models.component(2, "s")
    pts = [[0, c] for c in range(-3, 3)] + [[c, 0] for c in (-2, -1, 1, 2)]
    assert [models.omega_fiber(comp, p) for p in pts] == [1] * 10


# -- the transcribed complex ----------------------------------------------------------

def test_transcribed_shapes_and_ideal():
    a2, a, a1 = models.transcribed_matrices()
    assert (a1.shape, a.shape, a2.shape) == ((6, 2), (5, 6), (1, 5))
    assert Ideal(a2.entries[0], Z_RING) == models.iw0_gl3().ideal
    # the entry y1 u12 u23 is redundant
    others = Ideal([e for i, e in enumerate(a2.entries[0]) if i != 2], Z_RING)
    assert others == models.iw0_gl3().ideal


def test_transcription_is_rejected_with_the_failing_checks():
    with pytest.raises(TranscriptionMismatch) as err:
        models.transcribed_resolution_gl3()
    checks = err.value.checks
    assert checks["A''A = 0"] and not checks["AA' = 0"]
    assert models.transcribed_resolution_gl3(check=False).betti() == (1, 5, 6, 2)


def test_one_entry_of_a_prime_explains_the_failure():
    a2, a, _ = models.transcribed_matrices()
    checks = models.check_resolution_gl3(a2, a, _corrected_a_prime())
    assert all(checks.values()), checks


def test_fallback_and_minimal_resolutions():
    fb = models.fallback_resolution_gl3()
    assert fb.betti() == (1, 5, 6, 2)
    assert fb.is_complex() and fb.is_exact()
    minimal = models.iw0_gl3().resolution()
    assert minimal.betti() == (1, 4, 5, 2)
    assert minimal.is_exact()


def test_dualizing_module_is_the_cokernel_of_the_transposed_last_map():
    comp = models.iw0_gl3()
    omega = comp.omega()
    assert omega.target_rank == 2
    a1t = _corrected_a_prime().transpose()
    for stratum in models.STRATA:
        for pt in models.sample_w0_points(stratum, 5, seed=7):
            assert omega.fiber_dim(pt) == 2 - a1t.rank_at(pt)


# -- smoothness ----------------------------------------------------------------------

def test_tangent_formula_examples():
    assert models.tangent_dim_formula(WeylElem.parse("e", 3)) == 9
    assert models.tangent_dim_formula(WeylElem.parse("s1s2", 3)) == 9
    assert models.tangent_dim_formula(WeylElem.longest(3)) == 11


def test_smooth_iff_distinct_simples():
    for w, (formula, simples) in models.is_smooth_classification().items():
        assert formula == simples, w


def test_jacobian_examples():
    assert models.jacobian_crosscheck_w0() == 8
    ys = models.rederive_component(2, "s", cut=False)
    assert tangent_dim(ys, [0] * GL2_FULL_RING.nvars) == 3
    ys1 = models.rederive_component(3, WeylElem.parse("s1", 3), cut=False)
    pt = dict(x1=2, x2=0, y1=0, d1=0, d2=2, d3=5, u12=1, u23=3, u13=-4)
    assert tangent_dim(ys1, [pt[n] for n in FULL_RING.names]) == 6


# -- product points --------------------------------------------------------------------

def test_product_examples():
    assert models.product_omega_fiber("w0:equal,w0:equal") == 4
    assert models.product_omega_fiber("w0:equal,w0:distinct") == 2
    assert models.product_omega_fiber("s1s2:na") == 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_product_fiber_is_multiplicative(k):
    for spec in models.all_specs(k):
        expected = 1
        for w, flags in spec.factors:
            expected *= models.factor_omega_fiber(w, flags)
        assert models.product_omega_fiber(spec) == expected == 2 ** spec.r


@pytest.mark.parametrize("text", ["w0:na", "w0", "s9:na", "", "w0:same"])
def test_bad_specs(text):
    with pytest.raises(InvalidSpec):
        PdRPointSpec.parse(text)


def test_spec_round_trip():
    spec = PdRPointSpec.parse("w0:equal, s1s2:na ,w0:distinct")
    assert str(spec) == "w0:equal,s1s2:na,w0:distinct"
    assert PdRPointSpec.parse(str(spec)) == spec
    assert spec.r == 1
