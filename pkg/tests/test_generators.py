import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import frozen
import oracles
from starlike import generators as gen
from starlike.errors import ParameterError
from starlike.generators import Family, RegionSpec

ALL_SPECS = [
    gen.booth(0.0),
    gen.booth(0.5),
    gen.cissoid(0.0),
    gen.cissoid(0.8),
    gen.modkoebe(0.5, 0.2),
    gen.modkoebe(1.0, 0.6),
    gen.mobius(0.5, 1.0),
    gen.linear(1.0),
    gen.dilog(),
    gen.parabola(),
    gen.secant(1.0),
    gen.secant(0.0),
]
CLOSED_EXTREMES = [gen.booth(0.25), gen.cissoid(0.5), gen.modkoebe(0.5, 0.2), gen.mobius(0.5, 1.0), gen.linear(1.0)]


def ids(value):
    return value.label() if isinstance(value, gen.GeneratorSpec) else None


@pytest.mark.parametrize(
    "family, params, message",
    [
        ("booth", {"alpha": 1.5}, r"alpha must lie in \[0,1\)"),
        ("booth", {"alpha": -0.1}, r"alpha must lie in \[0,1\)"),
        ("cissoid", {"beta": 1.0}, r"beta must lie in \[0,1\)"),
        ("modkoebe", {"gamma": 0.0, "eta": 0.1}, "gamma must be positive"),
        ("modkoebe", {"gamma": 1.0, "eta": 1.0}, r"eta must lie in \[0,1\)"),
        ("mobius", {"alpha": 0.0, "beta": 1.0}, r"alpha must lie in \(0,1\)"),
        ("linear", {"eta": 0.0}, "eta must be positive"),
        ("secant", {"beta": 1.2}, r"beta must lie in \[0,1\]"),
        ("booth", {}, "needs parameter alpha"),
        ("dilog", {"beta": 0.3}, "takes no parameter beta"),
    ],
)
def test_invalid_parameters(family, params, message):
    with pytest.raises(ParameterError, match=message):
        gen.from_params(family, **params)


@pytest.mark.parametrize("spec", ALL_SPECS, ids=ids)
def test_psi_vanishes_at_origin(spec):
    assert gen.evaluate(spec, 0.0) == 0


@pytest.mark.parametrize(
    "spec, z, expected",
    [
        (gen.booth(0.0), 0.3 + 0.4j, 0.3 + 0.4j),
        (gen.booth(0.5), 1j * 0.999999, 0.999999j / (1 + 0.5 * 0.999999**2)),
        (gen.secant(1.0), 0.5, 0.5 / math.cos(0.5)),
        (gen.dilog(), -0.5, math.log(1.5)),
    ],
)
def test_pointwise_values(spec, z, expected):
    assert gen.evaluate(spec, z) == pytest.approx(expected, rel=1e-14)


def test_booth_at_i_limit():
    # the example value (2/3) i sits on the circle; approach it from inside
    assert gen.evaluate(gen.booth(0.5), 0.999999999j) == pytest.approx(2j / 3, abs=1e-8)


def test_evaluate_rejects_points_outside_disk():
    with pytest.raises(ValueError):
        gen.evaluate(gen.linear(1.0), 1.0)


@pytest.mark.parametrize("spec", [s for s in ALL_SPECS if s.family is not Family.PARABOLA], ids=ids)
def test_conjugate_symmetry(spec):
    rng = np.random.default_rng(3)
    z = np.sqrt(rng.random(1000)) * 0.99 * np.exp(2j * np.pi * rng.random(1000))
    assert np.allclose(gen.evaluate(spec, np.conj(z)), np.conj(gen.evaluate(spec, z)), atol=1e-12, rtol=0)


@pytest.mark.parametrize("spec", ALL_SPECS, ids=ids)
def test_derivatives_match_finite_differences(spec):
    z = np.array([0.3 + 0.2j, -0.5 + 0.1j, 0.1 - 0.6j])
    h = 1e-5
    d1, d2 = gen.evaluate_derivatives(spec, z)
    fd1 = (gen.evaluate(spec, z + h) - gen.evaluate(spec, z - h)) / (2 * h)
    fd2 = (gen.evaluate(spec, z + h) - 2 * gen.evaluate(spec, z) + gen.evaluate(spec, z - h)) / h**2
    assert np.allclose(d1, fd1, atol=1e-8)
    assert np.allclose(d2, fd2, atol=1e-4)


@pytest.mark.parametrize("spec", ALL_SPECS, ids=ids)
def test_series_matches_pointwise(spec):
    s = gen.psi_series(spec, 128)
    z = 0.5 * np.exp(1j * np.linspace(0, 2 * np.pi, 17))
    assert np.allclose(s(z), gen.evaluate(spec, z), atol=1e-12)
    assert s.is_real(1e-12)


def test_parabola_branch_cut_is_removable():
    spec = gen.parabola()
    above, below = gen.evaluate(spec, -0.4 + 1e-13j), gen.evaluate(spec, -0.4 - 1e-13j)
    assert above == pytest.approx(below, abs=1e-10)
    # 1 + psi equals 1 - log((1+sqrt z)/(1-sqrt z))^2 on the positive axis
    z = 0.36
    assert 1 + gen.evaluate(spec, z) == pytest.approx(1 - math.log(1.6 / 0.4) ** 2)


@pytest.mark.parametrize("spec", CLOSED_EXTREMES, ids=ids)
@pytest.mark.parametrize("r", [round(0.1 * k, 1) for k in range(1, 10)])
def test_closed_extremes_agree_with_grid(spec, r):
    ext = gen.real_part_extremes(spec, r)
    lo, hi = gen.scan_real_part(spec, r)
    assert ext.exact
    assert ext.min == pytest.approx(lo, abs=1e-8)
    assert ext.max == pytest.approx(hi, abs=1e-8)


def test_booth_extremes_example():
    ext = gen.real_part_extremes(gen.booth(0.5), 0.6)
    assert (ext.min, ext.max) == pytest.approx((-0.6 / 0.82, 0.6 / 0.82))


def test_cissoid_min_example():
    ext = gen.real_part_extremes(gen.cissoid(0.8), 0.5)
    assert ext.min == pytest.approx(-0.5 / (1.5 * 0.6), rel=1e-14)
    assert ext.min == pytest.approx(oracles.cissoid_min_formula(0.8, 0.5), rel=1e-14)


@pytest.mark.parametrize("spec", [gen.dilog(), gen.parabola(), gen.secant(1.0), gen.modkoebe(1.0, 0.4)], ids=ids)
def test_unproven_extremes_are_flagged(spec):
    assert not gen.real_part_extremes(spec, 0.5).exact


def test_extremes_shrink_to_zero():
    for spec in ALL_SPECS:
        ext = gen.real_part_extremes(spec, 1e-6)
        assert abs(ext.min) < 1e-5 and abs(ext.max) < 1e-5


def test_real_part_extremes_radius_checked():
    with pytest.raises(ValueError):
        gen.real_part_extremes(gen.booth(0.2), 1.0)


CLOSED_FORMS = [
    (gen.booth(0.25), lambda z: oracles.booth_extremal(0.25, z)),
    (gen.cissoid(0.5), lambda z: oracles.cissoid_extremal(0.5, z)),
    (gen.modkoebe(0.5, 0.2), lambda z: oracles.modkoebe_extremal(0.5, 0.2, z)),
    (gen.mobius(0.5, 1.0), lambda z: oracles.mobius_extremal(0.5, 1.0, z)),
    (gen.linear(1.0), lambda z: oracles.linear_extremal(1.0, z)),
    (gen.dilog(), lambda z: z * cmath.exp(-oracles.dilog(z))),
    (gen.secant(1.0), lambda z: z * (1 / cmath.cos(z) + cmath.tan(z))),
]


@pytest.mark.parametrize("spec, oracle", CLOSED_FORMS, ids=ids)
def test_extremal_closed_form_matches_hand_formula(spec, oracle):
    f0 = gen.extremal_closed_form(spec)
    for z in (0.3, -0.6, 0.5j, 0.4 - 0.3j):
        assert f0(z) == pytest.approx(oracle(z), rel=1e-12)


@pytest.mark.parametrize("spec", [s for s, _ in CLOSED_FORMS], ids=ids)
def test_extremal_series_matches_closed_form(spec):
    sample = gen.extremal_function(spec, 64)
    z = 0.7 * np.exp(1j * np.linspace(0, 2 * np.pi, 33))
    assert np.allclose(sample.f(z), sample.closed_form(z), atol=1e-8, rtol=0)
    assert sample.f.is_normalized()


def test_linear_extremal_coefficients():
    f = gen.extremal_function(gen.linear(1.0), 20).f
    assert np.allclose(f.coeffs[1:], [1 / math.factorial(n) for n in range(19)])


def test_booth_quarter_extremal_collapses():
    f0 = gen.extremal_closed_form(gen.booth(0.25))
    for z in (0.5, -0.9, 0.3j):
        assert f0(z) == pytest.approx(z * (1 + z / 2) / (1 - z / 2))


def test_dilog_extremal_leading_coefficients():
    f = gen.extremal_function(gen.dilog(), 12).f
    brute = oracles.member_coefficients([0.0] + [-1 / n for n in range(1, 12)], [0, 1] + [0] * 10, 12)
    # exp(-z - z^2/4 - ...) = 1 - z + z^2/4 + ...
    assert f.coeffs[1:4] == pytest.approx([1, -1, 1 / 4])
    assert np.allclose(f.coeffs, brute, atol=1e-14)


def test_li2_agrees_with_series():
    log_q = gen.log_extremal_quotient(gen.dilog())
    assert -log_q(0.5) == pytest.approx(frozen.DILOG_AT_HALF, rel=1e-13)


def test_booth_small_alpha_tends_to_z_exp_z():
    f0 = gen.extremal_closed_form(gen.booth(1e-6))
    z = 0.4 + 0.3j
    assert abs(f0(z) - z * cmath.exp(z)) < 1e-4


def test_parabola_has_no_closed_form():
    assert gen.extremal_closed_form(gen.parabola()) is None
    sample = gen.extremal_function(gen.parabola(), 32)
    assert sample.closed_form is None and sample.f.is_real()


@pytest.mark.parametrize("eta, positive", [(0.2, True), (0.35, False), (2 - math.sqrt(3) - 1e-3, True), (2 - math.sqrt(3) + 1e-3, False)])
def test_modkoebe_convexity_sign(eta, positive):
    margin = gen.convexity_margin(gen.modkoebe(1.0, eta))
    assert (margin > 0) == positive


def test_convexity_margin_matches_closed_formula():
    for eta in (0.1, 0.25, 0.5):
        assert gen.convexity_margin(gen.modkoebe(1.0, eta), 20000) == pytest.approx(oracles.modkoebe_margin(eta), abs=1e-12)


def test_linear_convexity_margin_is_one():
    assert gen.convexity_margin(gen.linear(2.5)) == 1.0


def test_exp_modkoebe_margin_reduces_to_gamma_shift_at_eta_zero():
    # F = exp(gamma z): 1 + zF''/F' = 1 + gamma z, whose minimum real part is 1 - gamma
    assert gen.exp_modkoebe_convexity_margin(0.4, 0.0) == pytest.approx(0.6)


@pytest.mark.parametrize(
    "region, w, inside",
    [
        (gen.linear(0.5), 1.0, True),
        (gen.linear(0.5), 1.6, False),
        (gen.mobius(0.5, 1.0), 1.5, True),
    ],
)
def test_disk_regions(region, w, inside):
    assert gen.region_contains(RegionSpec(region), w) is inside


def test_winding_agrees_with_disk_inequality_on_lattice():
    spec = gen.linear(0.5)
    xs = np.linspace(0.3, 1.7, 20)
    points = (xs[:, None] + 1j * (xs[None, :] - 1)).ravel()
    exact = np.abs(points - 1) < 0.5
    curve = 1 + gen.boundary_curve(spec, 1.0, gen.DEFAULT_GRID)
    dist, chord = gen.polyline_proximity(curve, points)
    clear = dist >= chord
    assert clear.sum() > 350
    assert np.array_equal(gen.boundary_winding_contains(spec, points[clear]), exact[clear])


def test_booth_region_examples():
    spec = gen.booth(0.3)
    assert gen.boundary_winding_contains(spec, 1.0)
    assert not gen.boundary_winding_contains(spec, 11.0)


def test_winding_refuses_points_on_the_boundary():
    spec = gen.booth(0.3)
    on_curve = 1 + gen.evaluate(spec, 1.0 - 1e-15)
    with pytest.raises(ValueError, match="ambiguous"):
        gen.boundary_winding_contains(spec, on_curve)


def test_boundary_curve_anchors():
    curve = gen.boundary_curve(gen.dilog(), 0.999, 1024)
    assert curve[512] == pytest.approx(math.log(2), abs=1e-2)
    secant = gen.boundary_curve(gen.secant(1.0), 1.0, 1024)
    assert secant[0] == pytest.approx(1 / math.cos(1.0), rel=1e-15)
    circle = gen.boundary_curve(gen.booth(0.0), 1.0, 256)
    assert np.allclose(np.abs(circle), 1.0)
    tiny = gen.boundary_curve(gen.cissoid(0.5), 0.01, 256)
    assert np.max(np.abs(tiny)) < 0.011


def test_boundary_curve_refuses_pole_on_circle():
    with pytest.raises(ValueError, match="pole"):
        gen.boundary_curve(gen.cissoid(0.5), 1.0, 256)


@settings(max_examples=25, deadline=None)
@given(st.floats(0.0, 0.95), st.floats(0.05, 0.95))
def test_booth_max_real_part_is_at_positive_axis(alpha, r):
    lo, hi = gen.scan_real_part(gen.booth(alpha), r, grid=1024, refine=False)
    assert hi <= r / (1 - alpha * r * r) + 1e-12
    assert lo >= -r / (1 - alpha * r * r) - 1e-12
