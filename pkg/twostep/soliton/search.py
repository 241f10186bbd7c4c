# twostep/soliton/search.py

"""
Multi-restart descent on the soliton residual over left-invariant metrics.

Metrics are parameterized by an upper triangular factor L (log-diagonal and
strict upper entries), g = LᵀL. Each restart runs gradient descent with
central finite differences and an Armijo backtracking line search, so the
recorded residuals never increase. A restart also stops once its residual
has improved by less than stall_tol (relative) over stall_window steps.
The gradient evaluates all shifted metrics in one batch. A float minimizer
is rounded to a rational metric and handed to the exact nilsoliton check;
only an exact pass is reported as a certificate. Non-existence is never concluded.
"""

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from twostep.core.errors import NotPositiveDefinite
from twostep.core.matrices import MatrixExact
from twostep.core.scalars import format_scalar, from_float
from twostep.core.utils import get_logger
from twostep.metric.inner_product import InnerProduct
from twostep.metric.solitons import nilsoliton_check
from twostep.soliton.config import FIXED_SCALAR_CURVATURE, FlowConfig
from twostep.soliton.residual import FloatAlgebra

logger = get_logger("twostep.soliton")

CERTIFICATE_FOUND = "certificate-found"
CERTIFICATE_HEURISTIC = "certificate-heuristic"
NO_CERTIFICATE = "no-certificate-found"

ARMIJO = 1e-4
MAX_BACKTRACKS = 40
START_SPREAD = 0.5


class RestartResult:
    __slots__ = ("index", "theta", "residual", "residuals", "iterations", "stalled")

    def __init__(self, index, theta, residuals, iterations, stalled):
        self.index = index
        self.theta = theta
        self.residuals = residuals
        self.residual = residuals[-1]
        self.iterations = iterations
        self.stalled = stalled

    def converged(self, tol):
        return self.residual < tol

    def summary(self, tol):
        return {
            "restart": self.index,
            "iterations": self.iterations,
            "residual": self.residual,
            "converged": self.converged(tol),
            "stalled": self.stalled,
        }


class FlowTrace:
    """
    Outcome of a search: residual history and metric of the best restart,
    the verdict, the exact certificate when one was verified, and
    diagnostics (per-restart summaries, Ricci spectrum spread among
    converged restarts, condition number of the final metric).
    """

    def __init__(self, residuals, metric, verdict, condition, restarts, spread=None,
                 certificate=None, rational_metric=None):
        self.residuals = list(residuals)
        self.metric = metric
        self.residual = self.residuals[-1]
        self.verdict = verdict
        self.condition = condition
        self.restarts = restarts
        self.spread = spread
        self.certificate = certificate
        self.rational_metric = rational_metric

    @property
    def heuristic(self):
        return self.verdict != CERTIFICATE_FOUND

    def as_dict(self):
        out = {
            "verdict": self.verdict,
            "heuristic": self.heuristic,
            "residual": self.residual,
            "iterations": len(self.residuals) - 1,
            "condition_number": self.condition,
            "ricci_spectrum_spread": self.spread,
            "restarts": self.restarts,
            "metric": [[float(x) for x in row] for row in self.metric],
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.as_dict()
        if self.rational_metric is not None:
            out["rational_metric"] = [[format_scalar(x) for x in row]
                                      for row in self.rational_metric.entries]
        return out

    def __repr__(self):
        return f"FlowTrace({self.verdict}, residual={self.residual:.3e})"


class _Parameters:
    """θ ↔ L for a fixed dimension."""

    def __init__(self, n):
        self.n = n
        self.upper = np.triu_indices(n, 1)
        self.size = n + len(self.upper[0])

    def factor(self, theta):
        n = self.n
        l_factor = np.zeros((n, n))
        l_factor[np.diag_indices(n)] = np.exp(theta[:n])
        l_factor[self.upper] = theta[n:]
        return l_factor

    def rescale(self, theta, log_scale):
        """Parameters of e^log_scale · L."""
        out = theta.copy()
        out[:self.n] += log_scale
        out[self.n:] *= np.exp(log_scale)
        return out

    def metric(self, theta):
        l_factor = self.factor(theta)
        return l_factor.T @ l_factor


class _Descent:
    def __init__(self, view, cfg):
        self.view = view
        self.cfg = cfg
        self.params = _Parameters(view.dim)

    def objective(self, theta):
        try:
            with np.errstate(all="ignore"):
                value = self.view.residual_at(self.params.factor(theta))
        except np.linalg.LinAlgError:
            return np.inf
        return value if np.isfinite(value) else np.inf

    def normalize(self, theta):
        n = self.params.n
        if self.cfg.normalization == FIXED_SCALAR_CURVATURE:
            scal = np.trace(self.view.frame_ricci(self.params.factor(theta)))
            if scal < -1e-12:
                # g -> s·g divides the scalar curvature by s
                return self.params.rescale(theta, 0.5 * np.log(-scal))
            return theta
        return self.params.rescale(theta, -np.mean(theta[:n]))

    def objectives(self, thetas):
        """objective over the rows of thetas, one batched evaluation when possible."""
        try:
            with np.errstate(all="ignore"):
                values = self.view.residuals_at(np.stack([self.params.factor(t) for t in thetas]))
        except np.linalg.LinAlgError:
            return np.array([self.objective(t) for t in thetas])
        return np.where(np.isfinite(values), values, np.inf)

    def gradient(self, theta):
        h = self.cfg.fd_step
        shifts = h * np.eye(self.params.size)
        values = self.objectives(np.concatenate([theta + shifts, theta - shifts]))
        forward, backward = np.split(values, 2)
        return (forward - backward) / (2.0 * h)

    def start(self, index):
        if index == 0:
            return np.zeros(self.params.size)
        rng = np.random.default_rng([self.cfg.seed, index])
        return rng.normal(scale=START_SPREAD, size=self.params.size)

    def stalling(self, residuals):
        """Relative improvement over the last stall_window steps below stall_tol."""
        window = self.cfg.stall_window
        if not self.cfg.stall_tol or len(residuals) <= window:
            return False
        before = residuals[-window - 1]
        return before - residuals[-1] < self.cfg.stall_tol * before

    def run(self, index):
        cfg = self.cfg
        theta = self.normalize(self.start(index))
        value = self.objective(theta)
        residuals = [value]
        step = cfg.step
        stalled = False
        iterations = 0
        while iterations < cfg.max_iters and value >= cfg.tol:
            grad = self.gradient(theta)
            slope = float(grad @ grad)
            if not np.isfinite(slope) or slope == 0.0:
                stalled = True
                break
            alpha = step
            accepted = False
            for _ in range(MAX_BACKTRACKS):
                candidate = self.normalize(theta - alpha * grad)
                trial = self.objective(candidate)
                if trial <= value - ARMIJO * alpha * slope:
                    accepted = True
                    break
                alpha *= 0.5
            if not accepted:
                stalled = True
                break
            theta, value = candidate, trial
            residuals.append(value)
            step = 2.0 * alpha
            iterations += 1
            if value >= cfg.tol and self.stalling(residuals):
                stalled = True
                break
        logger.info("restart %d: residual %.3e after %d iterations%s",
                    index, value, iterations, " (stalled)" if stalled else "")
        return RestartResult(index, theta, residuals, iterations, stalled)


def rationalize(a, metric, max_denominator=10**4):
    """
    Round a float metric (scaled so that g[0,0] = 1) to rationals and run
    the exact nilsoliton check; (rational metric, certificate) or (None, None).
    """
    g = np.asarray(metric, dtype=float)
    g = g / g[0, 0]
    n = g.shape[0]
    rows = [[None] * n for _ in range(n)]
    for r in range(n):
        for s in range(r, n):
            rows[r][s] = rows[s][r] = from_float(g[r, s], max_denominator)
    try:
        ip = InnerProduct(MatrixExact(rows))
    except NotPositiveDefinite:
        return None, None
    certificate = nilsoliton_check(a, ip)
    if certificate is None:
        return None, None
    return ip.matrix, certificate


def _spectrum(view, params, theta):
    ric = view.frame_ricci(params.factor(theta))
    scale = abs(np.trace(ric))
    values = np.sort(np.linalg.eigvalsh(ric))
    return values / scale if scale > 0 else values


def _spread(view, params, converged):
    if len(converged) < 2:
        return None
    spectra = [_spectrum(view, params, r.theta) for r in converged]
    return float(max(np.max(np.abs(s - spectra[0])) for s in spectra[1:]))


def search(a, cfg=None):
    """Run cfg.restarts descents; restart 0 starts from the coordinate metric."""
    cfg = cfg or FlowConfig()
    view = FloatAlgebra(a)
    descent = _Descent(view, cfg)
    workers = min(cfg.workers, cfg.restarts)
    logger.info("soliton search on dimension %d: %d restarts on %d workers",
                view.dim, cfg.restarts, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(descent.run, range(cfg.restarts)))

    ranked = sorted(results, key=lambda r: (r.residual, r.index))
    best = ranked[0]
    converged = [r for r in ranked if r.converged(cfg.tol)]

    verdict = NO_CERTIFICATE
    chosen = best
    rational_metric = certificate = None
    if converged:
        verdict = CERTIFICATE_HEURISTIC
        for result in converged:
            rational_metric, certificate = rationalize(
                a, descent.params.metric(result.theta), cfg.rational_denominator)
            if certificate is not None:
                verdict = CERTIFICATE_FOUND
                chosen = result
                break
        if certificate is None:
            logger.warning("residual below tolerance but no rational metric passed the exact check")

    metric = descent.params.metric(chosen.theta)
    trace = FlowTrace(
        residuals=chosen.residuals,
        metric=metric,
        verdict=verdict,
        condition=float(np.linalg.cond(metric)),
        restarts=[r.summary(cfg.tol) for r in results],
        spread=_spread(view, descent.params, converged),
        certificate=certificate,
        rational_metric=rational_metric,
    )
    logger.info("soliton search verdict: %s (residual %.3e)", verdict, trace.residual)
    return trace
