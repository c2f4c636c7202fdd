import math

import pytest
from hypothesis import given, strategies as st

from icausal.core.errors import ConfigError, DivergentThresholdError, HorizonError, PreconditionError
from icausal.domains.spacetime import (
    EventSpec, Geometry, SpacetimeConfig, arrival_proper_time, classify_order, definite_future_threshold,
    light_coordinate_time, light_coordinate_time_quadrature, metric_gtt, tau_star_threshold, validate_mics,
)


def unit_config(M=1.0, R=10.0, h=1.0):
    return SpacetimeConfig(G=1.0, c=1.0, M=M, R=R, h=h)


def test_metric_component():
    assert metric_gtt(10.0, unit_config()) == pytest.approx(-0.8)
    with pytest.raises(HorizonError):
        metric_gtt(2.0, unit_config())


def test_clock_inside_horizon_rejected():
    with pytest.raises(HorizonError):
        unit_config(M=6.0)


def test_flat_light_time():
    assert light_coordinate_time(10.0, 11.0, unit_config(M=0.0)) == pytest.approx(1.0)


def test_light_time_closed_form():
    # R_s = 2: 1 + 2 ln(9/8)
    expected = 1.0 + 2.0 * math.log(9.0 / 8.0)
    cfg = unit_config()
    assert light_coordinate_time(10.0, 11.0, cfg) == pytest.approx(expected, rel=1e-14)
    assert light_coordinate_time(11.0, 10.0, cfg) == light_coordinate_time(10.0, 11.0, cfg)


@given(
    M=st.floats(min_value=0.01, max_value=2.0),
    R=st.floats(min_value=5.0, max_value=50.0),
    h=st.floats(min_value=0.01, max_value=10.0),
)
def test_closed_form_agrees_with_quadrature(M, R, h):
    cfg = unit_config(M, R, h)
    closed = light_coordinate_time(R, R + h, cfg)
    assert closed == pytest.approx(light_coordinate_time_quadrature(R, R + h, cfg), rel=1e-9)


def test_tau_star_decreases_with_mass():
    values = [tau_star_threshold(unit_config(M)) for M in (0.5, 1.0, 4.0)]
    assert values[0] > values[1] > values[2] > 0


def test_tau_star_is_exact_boundary():
    cfg = unit_config()
    tau = tau_star_threshold(cfg)
    verdict = classify_order(EventSpec("A", tau), EventSpec("B", tau), "B", cfg)
    assert verdict.boundary
    assert verdict.relation == "X_before_Y"


def test_zero_mass_diverges():
    with pytest.raises(DivergentThresholdError):
        tau_star_threshold(unit_config(M=0.0))


def test_solar_threshold_is_finite():
    cfg = SpacetimeConfig(G=6.67430e-11, c=299792458.0, M=1.98847e30, R=6.957e8, h=1.0e3)
    assert math.isfinite(tau_star_threshold(cfg))


@given(
    t1=st.floats(min_value=0.0, max_value=500.0),
    t2=st.floats(min_value=0.0, max_value=500.0),
    near=st.sampled_from(["A", "B"]),
)
def test_classification_is_antisymmetric(t1, t2, near):
    cfg = unit_config()
    forward = classify_order(EventSpec("A", t1), EventSpec("B", t2), near, cfg)
    backward = classify_order(EventSpec("B", t2), EventSpec("A", t1), near, cfg)
    swapped = {"X_before_Y": "Y_before_X", "Y_before_X": "X_before_Y", "spacelike": "spacelike"}
    assert backward.relation == swapped[forward.relation]
    assert backward.margin == pytest.approx(-forward.margin, abs=1e-12)
    assert backward.slack == forward.slack


def test_same_clock_events_are_ordered():
    verdict = classify_order(EventSpec("A", 1.0), EventSpec("A", 2.0), "B", unit_config())
    assert verdict.relation == "X_before_Y"
    assert verdict.margin == pytest.approx(1.0)


@pytest.mark.parametrize("cfg", [
    unit_config(M=0.0),
    SpacetimeConfig(G=6.67430e-11, c=299792458.0, M=0.0, R=6.957e8, h=1.0e3),
])
def test_flat_arrival_is_emission_plus_light_time(cfg):
    assert arrival_proper_time(5.0, cfg.R, cfg.R + cfg.h, cfg) == pytest.approx(5.0 + cfg.h / cfg.c, rel=1e-14)
    assert arrival_proper_time(5.0, cfg.R + cfg.h, cfg.R, cfg) == pytest.approx(5.0 + cfg.h / cfg.c, rel=1e-14)


def test_arrival_rejects_negative_emission():
    with pytest.raises(PreconditionError):
        arrival_proper_time(-1.0, 10.0, 11.0, unit_config())


def test_definite_future_under_both_placements():
    cfg = unit_config()
    tau = tau_star_threshold(cfg)
    tilde = definite_future_threshold(tau, cfg)
    assert tilde > tau
    for near in ("A", "B"):
        verdict = classify_order(EventSpec("A", tau), EventSpec("B", tilde), near, cfg)
        assert verdict.relation == "X_before_Y"


def test_just_before_definite_future_is_not_ordered():
    cfg = unit_config()
    tau = tau_star_threshold(cfg)
    early = definite_future_threshold(tau, cfg) - 1.0
    verdicts = [classify_order(EventSpec("A", tau), EventSpec("B", early), near, cfg) for near in ("A", "B")]
    assert any(v.relation != "X_before_Y" for v in verdicts)


def test_definite_future_needs_threshold():
    cfg = unit_config()
    with pytest.raises(PreconditionError):
        definite_future_threshold(tau_star_threshold(cfg) / 2, cfg)


def test_two_orders_above_threshold():
    cfg = unit_config()
    report = validate_mics(cfg, 300.0, 2)
    assert report.valid
    assert [o.mass_near for o in report.orders] == ["B", "A"]
    assert report.failing is None


def test_two_orders_below_threshold_are_spacelike():
    report = validate_mics(unit_config(), 50.0, 2)
    assert not report.valid
    assert "spacelike" in report.failing


def test_three_orders_with_user_geometries():
    geometries = [
        Geometry(unit_config(M=4.0), "B"),
        Geometry(unit_config(M=1.0), "B"),
        Geometry(unit_config(M=1.0), "A"),
    ]
    report = validate_mics(unit_config(), 300.0, 3, geometries, [300.0, 330.0])
    assert report.valid
    assert [o.label for o in report.orders] == ["X1->X2->Y", "X1->Y->X2", "Y->X1->X2"]
    assert report.to_dict()["valid"]


def test_three_orders_need_geometries():
    with pytest.raises(PreconditionError):
        validate_mics(unit_config(), 300.0, 3)


def test_config_from_dict():
    cfg = SpacetimeConfig.from_dict({"G": 1, "c": 1, "M": 1, "R": 10, "h": 1, "tau_star": None})
    assert cfg.to_dict() == {"G": 1.0, "c": 1.0, "M": 1.0, "R": 10.0, "h": 1.0}
    with pytest.raises(ConfigError):
        SpacetimeConfig.from_dict({"G": 1})
