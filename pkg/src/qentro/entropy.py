"""Entropy measures for classical distributions and quantum states.

Implements Shannon entropy, differential (Boltzmann) entropy on a
tabulated grid, the quantization correction for finite measurement
precision, von Neumann entropy, the basis-dependent informational entropy
(the entropy of the density matrix diagonal as seen by the receiver), the
pure-state entropy, the ensemble lower bound, the area entropy bound, and
numerical minimization of the informational entropy over unitary
conjugations.

Log base is explicit everywhere and reported with every result; the
default is bits.  The convention ``0 log 0 = 0`` applies throughout, and
eigenvalues in ``[-1e-10, 0]`` are clamped to zero before taking logs.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import linalg, states
from .errors import (
    InvalidDistribution,
    NegativeArea,
    NonpositivePrecision,
    NotADensity,
)

BITS = "bits"
NATS = "nats"

_PROB_TOL = 1e-10


@dataclass(frozen=True)
class EntropyResult:
    """An entropy value together with the log base it was computed in."""

    value: float
    base: str

    def __float__(self):
        return self.value


@dataclass(frozen=True)
class BoundCheck:
    """Result of the ensemble lower-bound comparison."""

    lhs: float
    rhs: float
    holds: bool
    base: str


@dataclass(frozen=True)
class UnitaryMinimizationReport:
    """Outcome of minimizing informational entropy over unitaries."""

    minimizer: np.ndarray
    min_value: float
    iterations: int
    residual_vs_von_neumann: float
    base: str
    budget_exhausted: bool = False


def _check_base(base: str):
    if base not in (BITS, NATS):
        raise ValueError(f"log base must be {BITS!r} or {NATS!r}, got {base!r}")


def _log(x, base: str):
    return np.log2(x) if base == BITS else np.log(x)


def convert(result: EntropyResult, base: str) -> EntropyResult:
    """Re-express an entropy value in another base (1 bit = ln 2 nats)."""
    _check_base(base)
    if result.base == base:
        return result
    factor = math.log(2.0) if base == NATS else 1.0 / math.log(2.0)
    return EntropyResult(result.value * factor, base)


def _plogp_sum(probs: np.ndarray, base: str) -> float:
    """``-sum p log p`` with 0 log 0 = 0; clamps values in [-1e-10, 0] to 0."""
    p = np.asarray(probs, dtype=float)
    p = np.where((p < 0) & (p >= -_PROB_TOL), 0.0, p)
    positive = p[p > 0]
    value = float(-(positive * _log(positive, base)).sum())
    return max(value, 0.0)


def shannon(probs, base: str = BITS) -> EntropyResult:
    """Shannon entropy ``-sum_i p_i log p_i`` of a probability vector."""
    _check_base(base)
    p = np.asarray(probs, dtype=float).reshape(-1)
    if p.size == 0:
        raise InvalidDistribution("empty probability vector")
    if p.min() < -_PROB_TOL:
        raise InvalidDistribution(f"negative probability {p.min()!r}")
    total = float(p.sum())
    if abs(total - 1.0) > _PROB_TOL:
        raise InvalidDistribution(f"probabilities sum to {total!r}, expected 1")
    return EntropyResult(_plogp_sum(p, base), base)


def differential_entropy(grid, density, base: str = NATS) -> EntropyResult:
    """Differential entropy ``integral f log(1/f) dx`` of a tabulated density.

    ``grid`` must be uniformly spaced and ``density`` nonnegative with
    trapezoid-rule integral 1 within 1e-6.  Unlike the discrete measures,
    the result may legitimately be negative (densities can exceed 1), so no
    nonnegativity clamp is applied here.
    """
    _check_base(base)
    x = np.asarray(grid, dtype=float).reshape(-1)
    f = np.asarray(density, dtype=float).reshape(-1)
    if x.size != f.size or x.size < 2:
        raise NotADensity("grid and density must share a length of at least 2")
    steps = np.diff(x)
    h = steps[0]
    if h <= 0 or np.abs(steps - h).max() > 1e-9 * abs(h):
        raise NotADensity("grid must be uniformly spaced and increasing")
    if f.min() < -1e-12:
        raise NotADensity(f"density has negative value {f.min()!r}")
    f = np.clip(f, 0.0, None)
    total = float(np.trapezoid(f, x))
    if abs(total - 1.0) > 1e-6:
        raise NotADensity(f"density integrates to {total!r}, expected 1 within 1e-6")
    integrand = np.where(f > 0, -f * _log(np.where(f > 0, f, 1.0), base), 0.0)
    return EntropyResult(float(np.trapezoid(integrand, x)), base)


def quantized_entropy(h: EntropyResult, delta_x: float) -> EntropyResult:
    """Entropy at finite measurement precision: ``h - log(delta_x)``.

    Grows without bound as the precision ``delta_x`` shrinks.  Inherits the
    base of ``h``; like the differential entropy it may be negative when
    ``delta_x`` exceeds the spread of the density.
    """
    if delta_x <= 0:
        raise NonpositivePrecision(f"precision must be positive, got {delta_x!r}")
    return EntropyResult(h.value - float(_log(delta_x, h.base)), h.base)


def von_neumann(rho, base: str = BITS) -> EntropyResult:
    """Entropy ``-sum_x lambda_x log lambda_x`` of the eigenvalues of a
    density matrix.  Zero for every pure state."""
    _check_base(base)
    if not isinstance(rho, states.DensityMatrix):
        rho = states.DensityMatrix(rho)
    return EntropyResult(_plogp_sum(rho.eigenvalues(), base), base)


def informational(rho, base: str = BITS) -> EntropyResult:
    """Basis-dependent entropy ``-sum_i rho_ii log rho_ii`` of the diagonal.

    This is the average uncertainty per measurement in the receiver's basis;
    it upper-bounds the von Neumann entropy and equals it exactly when the
    matrix is diagonal in that basis.  Any finite dimension is accepted, and
    the value can reach ``log d``, so the measure is unbounded as the number
    of components grows.
    """
    _check_base(base)
    if not isinstance(rho, states.DensityMatrix):
        rho = states.DensityMatrix(rho)
    return EntropyResult(_plogp_sum(rho.diagonal(), base), base)


def pure_entropy(state: states.PureState, base: str = BITS) -> EntropyResult:
    """Entropy ``-sum_k |c_k|^2 log |c_k|^2`` of a pure state's amplitudes.

    Shares the ``p log p`` code path with :func:`informational`, so it equals
    ``informational(density_of_pure(state))`` exactly.
    """
    _check_base(base)
    return EntropyResult(_plogp_sum(state.probabilities(), base), base)


def ensemble_bound_check(ensemble: states.Ensemble, base: str = BITS) -> BoundCheck:
    """Compare the mixture's informational entropy against the weighted sum
    of component entropies.

    ``lhs = informational(mix(ensemble))``;
    ``rhs = sum_i p_i * pure_entropy(phi_i) + p_o * von_neumann(rho_o)``;
    ``holds`` is the inequality ``lhs >= rhs - 1e-9``.  Components aligned
    with the receiver basis contribute nothing to the right side, which is
    why the left side can be strictly larger.
    """
    _check_base(base)
    lhs = informational(states.mix(ensemble), base).value
    rhs = 0.0
    for weight, state in ensemble.pure_parts:
        rhs += weight * pure_entropy(state, base).value
    if ensemble.mixed_part is not None:
        weight, component = ensemble.mixed_part
        rhs += weight * von_neumann(component, base).value
    return BoundCheck(lhs, rhs, lhs >= rhs - 1e-9, base)


def bekenstein_bound(area_planck_units: float, base: str = BITS) -> EntropyResult:
    """Area entropy bound: ``A/4`` nats for an area in Planck units,
    divided by ln 2 when reporting bits."""
    _check_base(base)
    if area_planck_units < 0:
        raise NegativeArea(f"area must be nonnegative, got {area_planck_units!r}")
    nats = area_planck_units / 4.0
    value = nats if base == NATS else nats / math.log(2.0)
    return EntropyResult(value, base)


# ---------------------------------------------------------------------------
# Minimization of informational entropy over unitary conjugations.
#
# U(d) factors as D * V with D diagonal-phase and V a product of d(d-1)/2
# complex Givens rotations; a left diagonal-phase factor never changes the
# diagonal of U rho U†, so the search runs over the Givens angles only
# (one rotation angle and one phase per coordinate pair).

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_min(f, lo: float, hi: float, iters: int = 36):
    """Golden-section minimization on [lo, hi]; returns (x, f(x))."""
    a, b = lo, hi
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = f(x2)
    return (x1, f1) if f1 <= f2 else (x2, f2)


def givens_unitary(dim: int, params: np.ndarray) -> np.ndarray:
    """Unitary from a flat parameter vector of (angle, phase) pairs, one
    pair per coordinate pair (p, q) with p < q in lexicographic order."""
    u = np.eye(dim, dtype=complex)
    k = 0
    for p in range(dim):
        for q in range(p + 1, dim):
            theta, phi = params[k], params[k + 1]
            k += 2
            c, s = np.cos(theta), np.sin(theta)
            e = np.exp(1j * phi)
            row_p = c * u[p] - s * np.conjugate(e) * u[q]
            row_q = s * e * u[p] + c * u[q]
            u[p], u[q] = row_p, row_q
    return u


def _entry_entropy(x: float, base: str) -> float:
    if x <= 0.0:
        return 0.0
    return -x * math.log2(x) if base == BITS else -x * math.log(x)


def min_informational_over_unitaries(
    rho,
    base: str = BITS,
    budget: int = 200_000,
    starts: int = 8,
    seed: int = 0,
) -> UnitaryMinimizationReport:
    """Minimize ``informational(U rho U†)`` over unitaries ``U``.

    Multi-start coordinate descent over the Givens parameterization: every
    coordinate pair (p, q) carries a rotation angle and a phase, and each is
    minimized in turn by a coarse scan plus golden-section refinement.  The
    accepted rotation is folded into the working matrix after each pair
    (re-centering the parameterization at the identity), which keeps every
    line-search evaluation O(1): a single pair rotation only moves the two
    diagonal entries p and q.

    The infimum equals the von Neumann entropy, attained at the eigenbasis
    rotation, so ``residual_vs_von_neumann`` measures search quality
    directly.  ``budget`` caps objective evaluations; on exhaustion the best
    point so far is returned with ``budget_exhausted=True``.
    """
    _check_base(base)
    if not isinstance(rho, states.DensityMatrix):
        rho = states.DensityMatrix(rho)
    dim = rho.dim
    reference = von_neumann(rho, base).value
    residual_target = 1e-7 if dim <= 2 else 1e-5
    pairs = [(p, q) for p in range(dim) for q in range(p + 1, dim)]
    scan_pts = 13

    evals = 0
    exhausted = False
    rng = np.random.default_rng(seed)

    best_value = informational(rho, base).value
    best_u = np.eye(dim, dtype=complex)

    for start in range(max(starts, 1)):
        if start == 0:
            u = np.eye(dim, dtype=complex)
        else:
            n_params = dim * (dim - 1)
            params = (rng.random(n_params) - 0.5) * np.pi
            params[1::2] *= 2.0
            u = givens_unitary(dim, params)
        work = u @ rho.matrix @ u.conj().T
        value = _plogp_sum(work.diagonal().real, base)

        for _sweep in range(60):
            if exhausted:
                break
            sweep_start = value
            for p, q in pairs:
                rest = value - _entry_entropy(work[p, p].real, base) - _entry_entropy(
                    work[q, q].real, base
                )
                cpp, cqq, cpq = work[p, p].real, work[q, q].real, work[p, q]

                def pair_objective(theta, phi):
                    nonlocal evals
                    evals += 1
                    c, s = math.cos(theta), math.sin(theta)
                    cross = 2.0 * c * s * (math.cos(phi) * cpq.real - math.sin(phi) * cpq.imag)
                    mpp = c * c * cpp + s * s * cqq - cross
                    mqq = s * s * cpp + c * c * cqq + cross
                    return rest + _entry_entropy(mpp, base) + _entry_entropy(mqq, base)

                # angle first: at theta = 0 the objective is constant in the
                # phase, so the reverse order would open with a wasted search
                theta_best, phi_best, f_best = 0.0, 0.0, value
                for _round in range(2):
                    for which, span in (("theta", math.pi), ("phi", 2.0 * math.pi)):
                        if which == "phi":
                            f = lambda x: pair_objective(theta_best, x)
                            center = phi_best
                        else:
                            f = lambda x: pair_objective(x, phi_best)
                            center = theta_best
                        xs = center + (np.arange(scan_pts) / scan_pts - 0.5) * span
                        fs = [f(x) for x in xs]
                        k = int(np.argmin(fs))
                        x_ref, f_ref = _golden_min(f, xs[k] - span / scan_pts, xs[k] + span / scan_pts)
                        if f_ref <= fs[k]:
                            x_new, f_new = x_ref, f_ref
                        else:
                            x_new, f_new = xs[k], fs[k]
                        if f_new < f_best:
                            f_best = f_new
                            if which == "phi":
                                phi_best = x_new
                            else:
                                theta_best = x_new
                        if evals >= budget:
                            exhausted = True
                            break
                    if exhausted:
                        break
                if f_best < value - 1e-16:
                    # fold the accepted rotation into the working matrix and
                    # the accumulated unitary
                    c, s = math.cos(theta_best), math.sin(theta_best)
                    e = complex(math.cos(phi_best), math.sin(phi_best))
                    g_pp, g_pq = c, -s * e.conjugate()
                    g_qp, g_qq = s * e, c
                    row_p = g_pp * work[p, :] + g_pq * work[q, :]
                    row_q = g_qp * work[p, :] + g_qq * work[q, :]
                    work[p, :], work[q, :] = row_p, row_q
                    col_p = work[:, p] * np.conjugate(g_pp) + work[:, q] * np.conjugate(g_pq)
                    col_q = work[:, p] * np.conjugate(g_qp) + work[:, q] * np.conjugate(g_qq)
                    work[:, p], work[:, q] = col_p, col_q
                    urow_p = g_pp * u[p, :] + g_pq * u[q, :]
                    urow_q = g_qp * u[p, :] + g_qq * u[q, :]
                    u[p, :], u[q, :] = urow_p, urow_q
                    value = _plogp_sum(work.diagonal().real, base)
                if exhausted:
                    break
            if exhausted or sweep_start - value < 1e-15 * (1.0 + abs(value)):
                break

        if value < best_value:
            best_value = value
            best_u = u
        if best_value - reference <= residual_target or exhausted:
            break

    return UnitaryMinimizationReport(
        minimizer=best_u,
        min_value=best_value,
        iterations=evals,
        residual_vs_von_neumann=best_value - reference,
        base=base,
        budget_exhausted=exhausted,
    )
