import numpy as np
import pytest

from pdmwell import model
from pdmwell.exceptions import DomainError, ParameterError, SingularExtensionError
from pdmwell.model import ExtensionKind, ScarfParams, WellParams

ALL_KINDS = list(ExtensionKind)


def test_well_params_validation():
    with pytest.raises(ParameterError) as info:
        WellParams(0.0, 1.0, 3.0)
    assert info.value.violations == ["omega > 0"]
    with pytest.raises(ParameterError) as info:
        WellParams(1.0, 3.0, 1.0)
    assert info.value.violations == ["b > a"]
    with pytest.raises(ParameterError) as info:
        WellParams(-1.0, -1.0, -2.0)
    assert len(info.value.violations) == 3


def test_extension_kind_cli_names():
    assert ExtensionKind.from_cli("x2-iii") is ExtensionKind.X2_TYPE_III
    assert ExtensionKind.from_cli("X1") is ExtensionKind.X1
    assert ExtensionKind.X2_TYPE_II.cli_name == "x2-ii"
    with pytest.raises(ValueError):
        ExtensionKind.from_cli("x3")
    assert [k.is_x2 for k in ALL_KINDS] == [False, False, True, True, True]


def test_mass_profile(default_params):
    p = default_params
    assert model.mass(p, 2.0) == pytest.approx(3.0)
    assert model.inverse_mass(p, np.array([1.0, 2.0, 3.0])).tolist() == pytest.approx([0.0, 1 / 3, 0.0])
    assert model.mass_derivative(p, 2.0) == pytest.approx(0.0, abs=1e-15)
    x = np.linspace(1.2, 2.8, 9)
    h = 1e-5
    numeric = (model.mass(p, x + h) - model.mass(p, x - h)) / (2 * h)
    np.testing.assert_allclose(model.mass_derivative(p, x), numeric, rtol=1e-7)


def test_mass_term_closed_form(default_params):
    p = default_params
    x = np.linspace(1.5, 2.5, 9)
    h = 1e-4
    m = model.mass(p, x)
    m1 = model.mass_derivative(p, x)
    m2 = (model.mass_derivative(p, x + h) - model.mass_derivative(p, x - h)) / (2 * h)
    expected = m2 / (4 * m**2) - 7 * m1**2 / (16 * m**3)
    np.testing.assert_allclose(model.mass_term(p, x), expected, rtol=1e-6)


@pytest.mark.parametrize("x", [1.0, 3.0, 0.5, [1.5, 3.5]])
def test_open_interval_enforced(default_params, x):
    with pytest.raises(DomainError):
        model.mass(default_params, x)
    with pytest.raises(DomainError):
        model.v_eff(default_params, x)


def test_validate(default_params, alt_params):
    for kind in ALL_KINDS:
        assert model.validate(default_params, kind) == []
    assert model.validate(WellParams(0.1, 1.0, 10.0), ExtensionKind.BASE) == ["2·omega·a²·b > b−a"]
    assert model.validate(alt_params, ExtensionKind.X1) == []
    assert model.validate(alt_params, ExtensionKind.X2_TYPE_I) == ["omega·a·b > 2"]
    assert model.validate(alt_params, ExtensionKind.X2_TYPE_III) == ["omega·a·b > (b−a)/a"]


def test_validate_scarf():
    s = ScarfParams(3.5, 1.5)
    assert all(model.validate_scarf(s, kind) == [] for kind in ALL_KINDS)
    assert model.validate_scarf(ScarfParams(2.0, 0.5), ExtensionKind.X2_TYPE_I) == ["1 < B < A − 1"]
    assert model.validate_scarf(ScarfParams(2.0, 0.8), ExtensionKind.X2_TYPE_II) == ["0 < B < A − 3/2"]
    with pytest.raises(ParameterError):
        model.scarf_potential(ScarfParams(1.0, 0.5), 0.0)


def test_index_set():
    assert model.index_set(ExtensionKind.BASE, 3) == [0, 1, 2]
    assert model.index_set(ExtensionKind.X2_TYPE_III, 3) == [-2, 1, 2]
    assert model.index_set(ExtensionKind.X2_TYPE_III, 1) == [-2]
    assert model.index_set(ExtensionKind.X1, 0) == []


def test_pct_constants(default_params):
    pct = model.pct_map(default_params)
    assert pct.a_bar == pytest.approx(-1 / np.sqrt(3))
    assert pct.b_bar == 0.0
    assert pct.c_bar == pytest.approx(-5 / 6)
    assert pct.lam == pytest.approx(3**-0.25)
    s = model.scarf_params(default_params)
    assert (s.A, s.B) == pytest.approx((3.5, 1.5))
    assert model.jacobi_indices(default_params) == pytest.approx((1.5, 4.5))


def test_scarf_params_need_base_condition():
    with pytest.raises(ParameterError):
        model.scarf_params(WellParams(0.1, 1.0, 10.0))


def test_variable_change_round_trip(default_params):
    x = default_params.interior(101)
    u = model.u_of_x(default_params, x)
    assert np.all(np.abs(u) < np.pi / 2)
    np.testing.assert_allclose(model.x_of_u(default_params, u), x, rtol=1e-12)
    # x near a maps to u near +pi/2
    assert model.u_of_x(default_params, 1.0 + 1e-9) > 1.5


def test_potential_values(default_params):
    assert model.v_eff(default_params, 2.0, ExtensionKind.BASE) == pytest.approx(3.0, rel=1e-14)
    assert model.v_eff(default_params, 2.0, ExtensionKind.X1) == pytest.approx(19 / 6, rel=1e-14)
    assert model.pdm_rational(default_params, 2.0, ExtensionKind.X1) == pytest.approx(1 / 6, rel=1e-14)
    assert model.pdm_rational(default_params, 2.0, ExtensionKind.BASE) == 0.0


def test_inadmissible_kind_raises(alt_params):
    with pytest.raises(ParameterError) as info:
        model.v_eff(alt_params, 1.0, ExtensionKind.X2_TYPE_II)
    assert info.value.violations == ["omega·a·b > (b−a)/a"]


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_pct_reproduces_potential(default_params, kind):
    x = default_params.interior(1000)
    direct = model.v_eff(default_params, x, kind)
    via = model.potential_from_pct(default_params, kind, x)
    rational = np.max(np.abs(model.pdm_rational(default_params, x, kind)))
    assert np.max(np.abs(via - direct)) < 1e-11 * max(1.0, rational)


@pytest.mark.parametrize("kind", [ExtensionKind.BASE, ExtensionKind.X1])
def test_pct_reproduces_potential_alt(alt_params, kind):
    x = alt_params.interior(1000)
    direct = model.v_eff(alt_params, x, kind)
    via = model.potential_from_pct(alt_params, kind, x)
    rational = np.max(np.abs(model.pdm_rational(alt_params, x, kind)))
    assert np.max(np.abs(via - direct)) < 1e-11 * max(1.0, rational)


def test_x2_denominators_have_no_interior_roots(default_params):
    for kind in (ExtensionKind.X2_TYPE_I, ExtensionKind.X2_TYPE_II, ExtensionKind.X2_TYPE_III):
        assert model.denominator_roots(default_params, kind).size == 0
    assert model.denominator_roots(default_params, ExtensionKind.X1).size == 0


def test_minimum_location(default_params):
    assert model.base_minimum(default_params) == pytest.approx(1.5)
    assert model.minimum_location(default_params, ExtensionKind.BASE) == pytest.approx(1.5, abs=1e-6)
    assert model.minimum_location(default_params, ExtensionKind.X1) < 1.5


def test_u_of_x_strictly_decreasing(default_params, alt_params):
    for p in (default_params, alt_params):
        u = model.u_of_x(p, p.interior(10**4, margin=1e-6))
        assert np.all(np.diff(u) < 0)


X2_KINDS = [ExtensionKind.X2_TYPE_I, ExtensionKind.X2_TYPE_II, ExtensionKind.X2_TYPE_III]


def test_admissible_denominators_keep_one_sign():
    rng = np.random.default_rng(2024)
    checked = 0
    for _ in range(300):
        omega, a = rng.uniform(0.2, 5.0), rng.uniform(0.2, 3.0)
        p = WellParams(omega, a, a + rng.uniform(0.2, 5.0))
        x = p.interior(10**4, margin=1e-6)
        for kind in X2_KINDS:
            if model.validate(p, kind):
                continue
            d = model.denominator(p, x, kind)
            assert np.all(d > 0) or np.all(d < 0), (p, kind)
            assert model.denominator_roots(p, kind).size == 0
            checked += 1
    assert checked > 100


def test_inadmissible_denominator_vanishes_inside():
    # omega·a·b = 1.5 < (b−a)/a while the base condition still holds
    p = WellParams(0.5, 1.0, 3.0)
    assert model.validate(p, ExtensionKind.BASE) == []
    roots = model.denominator_roots(p, ExtensionKind.X2_TYPE_II)
    assert roots.size > 0
    assert np.all(np.abs(model.denominator(p, roots, ExtensionKind.X2_TYPE_II)) < 1e-9)
    d = model.denominator(p, p.interior(1000), ExtensionKind.X2_TYPE_II)
    assert d.min() < 0 < d.max()
    with pytest.raises(ParameterError):
        model.pdm_rational(p, 2.0, ExtensionKind.X2_TYPE_II)


def test_singular_extension_raises():
    s = model.scarf_params(WellParams(0.5, 1.0, 3.0))
    assert (s.A, s.B) == pytest.approx((2.0, 0.75))
    with pytest.raises(SingularExtensionError, match="vanishes"):
        model.scarf_rational(s, np.linspace(-1.0, 1.0, 11), ExtensionKind.X2_TYPE_II)


def test_denominator_only_for_x2(default_params):
    with pytest.raises(ValueError):
        model.denominator(default_params, 2.0, ExtensionKind.X1)
