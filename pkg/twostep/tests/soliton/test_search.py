import logging
import random
import time

import numpy as np
import pytest

from twostep.acs import complexify
from twostep.catalog import catalog_get
from twostep.core.errors import ConfigError, NotNilpotent, NotPositiveDefinite
from twostep.core.matrices import MatrixExact
from twostep.core.scalars import scalar, to_float
from twostep.lie.samples import random_two_step
from twostep.metric import ricci
from twostep.metric.inner_product import random_metric
from twostep.soliton import (
    CERTIFICATE_FOUND,
    NO_CERTIFICATE,
    FlowConfig,
    FloatAlgebra,
    load_flow_config,
    rationalize,
    search,
    soliton_residual,
)
from twostep.soliton.config import FIXED_SCALAR_CURVATURE

QUICK = FlowConfig(restarts=3, max_iters=200, workers=2)


@pytest.fixture
def h3():
    return catalog_get("heisenberg3").algebra


def as_array(m):
    return np.array([[to_float(x) for x in row] for row in m.entries])


def test_config_defaults_and_validation():
    cfg = FlowConfig()
    assert (cfg.tol, cfg.max_iters, cfg.restarts, cfg.seed) == (1e-8, 5000, 8, 0)
    assert cfg.normalization == "unit-determinant"
    assert (cfg.stall_window, cfg.stall_tol) == (25, 1e-2)
    for bad in ({"tol": 0}, {"restarts": 0}, {"step": -1.0}, {"normalization": "none"},
                {"max_iters": "many"}, {"workers": True}, {"stall_window": 0},
                {"stall_tol": -0.1}):
        with pytest.raises(ConfigError):
            FlowConfig(**bad)
    assert cfg.with_overrides(seed=None, restarts=2).restarts == 2
    assert cfg.with_overrides() is cfg


def test_load_flow_config(tmp_path):
    assert load_flow_config(tmp_path / "missing.yaml") == FlowConfig()
    empty = tmp_path / "empty.yaml"
    empty.write_text("")
    assert load_flow_config(empty) == FlowConfig()

    path = tmp_path / "flow.yaml"
    path.write_text("restarts: 3\nmax-iters: 100\ntol: 1.0e-6\ncolour: blue\n")
    cfg = load_flow_config(path)
    assert (cfg.restarts, cfg.max_iters, cfg.tol) == (3, 100, 1e-6)
    assert cfg.seed == 0

    bad = tmp_path / "bad.yaml"
    bad.write_text("restarts: -2\n")
    with pytest.raises(ConfigError):
        load_flow_config(bad)


def test_frame_ricci_matches_exact(h3):
    view = FloatAlgebra(h3)
    assert np.allclose(view.ricci_operator(np.eye(3)), np.diag([-0.5, -0.5, 0.5]))
    rng = random.Random(2)
    a = random_two_step(rng, 3, 2)
    ip = random_metric(rng, a.dim)
    numeric = FloatAlgebra(a).ricci_operator(as_array(ip.matrix))
    assert np.allclose(numeric, as_array(ricci(a, ip)), atol=1e-10)


def test_residual_examples(h3):
    assert soliton_residual(h3, np.eye(3)) < 1e-14
    assert soliton_residual(catalog_get("abelian", n=4).algebra, np.eye(4)) == 0.0
    will = catalog_get("will63", t=2).algebra
    assert soliton_residual(will, np.eye(9)) > 0.01


def test_residual_scale_invariant():
    rng = np.random.default_rng(4)
    a, _ = complexify(catalog_get("heisenberg3").algebra)
    m = rng.normal(size=(6, 6)) + 3 * np.eye(6)
    g = m.T @ m
    assert abs(soliton_residual(a, 3.7 * g) - soliton_residual(a, g)) < 1e-10


def test_residual_rejects_bad_input(h3):
    with pytest.raises(NotPositiveDefinite):
        soliton_residual(h3, np.diag([1.0, 0.0, 1.0]))
    with pytest.raises(NotNilpotent):
        soliton_residual(catalog_get("aff_c").algebra, np.eye(4))
    with pytest.raises(ValueError):
        soliton_residual(catalog_get("lambda82", t="1+1i").algebra, np.eye(10))


def test_search_h3(h3):
    trace = search(h3, QUICK.with_overrides(restarts=1))
    assert trace.verdict == CERTIFICATE_FOUND
    assert not trace.heuristic
    assert trace.residual < 1e-8
    assert trace.certificate.c == scalar("-3/2")
    assert trace.certificate.d == MatrixExact.diag([1, 1, 2])
    assert trace.rational_metric == MatrixExact.identity(3)
    every = search(h3, QUICK)
    assert every.verdict == CERTIFICATE_FOUND
    assert all(r["converged"] for r in every.restarts)
    assert every.certificate.verify(h3, ricci(h3, every.rational_metric))
    assert every.spread is not None and every.spread < 1e-6


def test_search_complexified_h3(h3):
    a, _ = complexify(h3)
    trace = search(a, QUICK)
    assert trace.verdict == CERTIFICATE_FOUND
    assert trace.certificate.verify(a, ricci(a, trace.rational_metric))


def test_search_fixed_scalar_curvature(h3):
    trace = search(h3, QUICK.with_overrides(normalization=FIXED_SCALAR_CURVATURE))
    assert trace.verdict == CERTIFICATE_FOUND
    assert np.trace(FloatAlgebra(h3).ricci_operator(trace.metric)) == pytest.approx(-1.0)


def test_search_will_curve_default_config():
    a = catalog_get("will63", t=2).algebra
    started = time.perf_counter()
    trace = search(a, FlowConfig())
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0
    assert trace.verdict == NO_CERTIFICATE
    assert trace.heuristic
    assert trace.certificate is None
    assert trace.residual > 1e-3
    assert len(trace.restarts) == 8
    assert all(r["residual"] > 1e-3 for r in trace.restarts)
    assert any(r["stalled"] for r in trace.restarts)
    assert all(r["iterations"] < FlowConfig().max_iters for r in trace.restarts)
    assert np.isfinite(trace.residual) and trace.condition >= 1.0
    info = trace.as_dict()
    assert info["verdict"] == NO_CERTIFICATE
    assert "certificate" not in info


def test_stall_stop():
    a = catalog_get("will63", t=2).algebra
    patient = search(a, FlowConfig(restarts=1, max_iters=200, stall_tol=0)).restarts[0]
    eager = search(a, FlowConfig(restarts=1, max_iters=200, stall_window=10,
                                 stall_tol=0.5)).restarts[0]
    assert eager["stalled"]
    assert eager["iterations"] < patient["iterations"]
    assert patient["residual"] <= eager["residual"]


def test_batched_residuals_match_single():
    rng = np.random.default_rng(12)
    view = FloatAlgebra(catalog_get("will63", t=2).algebra)
    factors = np.stack([np.triu(rng.normal(size=(9, 9))) + 3 * np.eye(9) for _ in range(4)])
    batched = view.residuals_at(factors)
    assert batched.shape == (4,)
    for factor, value in zip(factors, batched):
        assert view.residual_at(factor) == pytest.approx(value, abs=1e-12)


def test_search_residuals_never_increase_and_deterministic():
    rng = random.Random(6)
    a = random_two_step(rng, 3, 2)
    cfg = FlowConfig(restarts=2, max_iters=60, workers=2, seed=5)
    first = search(a, cfg)
    residuals = first.residuals
    assert all(b <= a_ for a_, b in zip(residuals, residuals[1:]))
    second = search(a, cfg.with_overrides(workers=1))
    assert second.residuals == residuals
    assert second.restarts == first.restarts


def test_rationalize(h3):
    metric, cert = rationalize(h3, 2.0 * np.eye(3))
    assert metric == MatrixExact.identity(3)
    assert cert.c == scalar("-3/2")
    will = catalog_get("will63", t=2).algebra
    assert rationalize(will, np.eye(9)) == (None, None)


def test_search_logs_restarts(h3, caplog):
    logger = logging.getLogger("twostep.soliton")
    logger.propagate = True
    try:
        with caplog.at_level(logging.INFO, logger="twostep.soliton"):
            search(h3, FlowConfig(restarts=1, max_iters=5))
    finally:
        logger.propagate = False
    assert any("restart 0" in r.getMessage() for r in caplog.records)
