"""Hamiltonian time evolution, short-time survival approximations, and
measurement-driven dynamics: survival freezing under repeated observation
and steering a qubit through a ladder of rotated measurement bases.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import DimensionMismatch, InvalidTheta, NonpositiveN, NotHermitian
from .states import PureState

HALF_PI = math.pi / 2.0


class Hamiltonian:
    """Time-independent Hermitian generator with an explicit hbar."""

    def __init__(self, matrix, hbar: float = 1.0):
        m = linalg.as_matrix(matrix)
        if not linalg.is_hermitian(m, 1e-10):
            raise NotHermitian("Hamiltonian must be Hermitian within 1e-10")
        if hbar <= 0:
            raise ValueError(f"hbar must be positive, got {hbar!r}")
        m.setflags(write=False)
        self.matrix = m
        self.hbar = float(hbar)
        self._eigen = None

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def eigen(self) -> linalg.EigenDecomposition:
        if self._eigen is None:
            self._eigen = linalg.hermitian_eigen(self.matrix)
        return self._eigen


def evolve(h: Hamiltonian, t: float, psi0: PureState) -> PureState:
    """Propagate ``exp(-i H t / hbar)|psi0>`` exactly via the
    eigendecomposition of H."""
    if h.dim != psi0.dim:
        raise DimensionMismatch(f"Hamiltonian dim {h.dim} != state dim {psi0.dim}")
    eig = h.eigen()
    phases = np.exp(-1j * eig.eigenvalues * t / h.hbar)
    v = eig.eigenvectors
    amps = v @ (phases * (v.conj().T @ psi0.amplitudes))
    return PureState.normalized(amps)


def survival_exact(h: Hamiltonian, t: float, psi0: PureState) -> float:
    """Survival probability ``|<psi0|psi_t>|^2``."""
    overlap = np.vdot(psi0.amplitudes, evolve(h, t, psi0).amplitudes)
    return float(min(abs(overlap) ** 2, 1.0))


def energy_variance(h: Hamiltonian, psi0: PureState) -> float:
    """``<H^2> - <H>^2`` in the given state (clamped at 0)."""
    if h.dim != psi0.dim:
        raise DimensionMismatch(f"Hamiltonian dim {h.dim} != state dim {psi0.dim}")
    amps = psi0.amplitudes
    h_amps = h.matrix @ amps
    mean = float(np.vdot(amps, h_amps).real)
    second = float(np.vdot(h_amps, h_amps).real)
    return max(second - mean * mean, 0.0)


def survival_second_order(h: Hamiltonian, t: float, psi0: PureState) -> float:
    """Short-time expansion ``1 - (dE)^2 t^2 / hbar^2`` of the survival
    probability; differs from the exact value by O(t^4)."""
    var = energy_variance(h, psi0)
    return 1.0 - var * t * t / (h.hbar * h.hbar)


def zeno_survival(h: Hamiltonian, t: float, n: int, psi0: PureState, mode: str = "exact") -> float:
    """Probability of still finding ``psi0`` after n projective observations
    spread over total time t (projective reset onto psi0 each step).

    ``exact`` compounds the per-interval survival, ``second_order`` uses the
    linearized ``1 - (dE)^2 t^2 / (hbar^2 n)``; the gap between the two is
    the term the linearization drops.  The exact mode tends to 1 as n grows.
    """
    if n < 1:
        raise NonpositiveN(f"observation count must be >= 1, got {n!r}")
    if mode == "exact":
        return survival_exact(h, t / n, psi0) ** n
    if mode == "second_order":
        var = energy_variance(h, psi0)
        return 1.0 - var * t * t / (h.hbar * h.hbar * n)
    raise ValueError(f"mode must be 'exact' or 'second_order', got {mode!r}")


@dataclass(frozen=True)
class SteeringPlan:
    """Rotate-by-theta-per-step measurement schedule covering a quarter turn.

    ``n_steps`` defaults to ``round(pi / (2 theta))``; an explicit value must
    keep ``n_steps * theta`` within one step of pi/2.
    """

    theta_step: float
    n_steps: int = field(default=0)

    def __post_init__(self):
        if not 0.0 < self.theta_step <= HALF_PI:
            raise InvalidTheta(f"step angle must be in (0, pi/2], got {self.theta_step!r}")
        if self.n_steps == 0:
            object.__setattr__(self, "n_steps", max(int(round(HALF_PI / self.theta_step)), 1))
        if self.n_steps < 1:
            raise NonpositiveN(f"n_steps must be >= 1, got {self.n_steps!r}")
        if abs(self.n_steps * self.theta_step - HALF_PI) > self.theta_step + 1e-12:
            raise InvalidTheta(
                f"{self.n_steps} steps of {self.theta_step!r} rad miss pi/2 by more than one step"
            )

    @classmethod
    def from_steps(cls, n: int) -> "SteeringPlan":
        if n < 1:
            raise NonpositiveN(f"n_steps must be >= 1, got {n!r}")
        return cls(theta_step=HALF_PI / n, n_steps=n)


def steering_success_probability(plan: SteeringPlan) -> float:
    """Closed-form probability ``(cos^2 theta)^n`` that every one of the n
    rotated projections takes the forward branch."""
    return float(np.cos(plan.theta_step) ** (2 * plan.n_steps))


@dataclass(frozen=True)
class SteeringResult:
    successes: int
    trials: int
    survivors_per_step: np.ndarray

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials


def simulate_steering(plan: SteeringPlan, trials: int, rng: np.random.Generator) -> SteeringResult:
    """Monte Carlo steering: each trial starts at |0> and is measured in
    bases rotated by cumulative k*theta.

    After a forward collapse at step k the state is exactly the step-k basis
    state, so each step is an independent forward collapse with probability
    cos^2(theta); a single backward collapse makes the trial a failure (no
    resampling).  ``survivors_per_step`` records how many trials are still
    on the forward ladder after each step.
    """
    if trials < 1:
        raise NonpositiveN(f"trials must be >= 1, got {trials!r}")
    p_forward = float(np.cos(plan.theta_step) ** 2)
    alive = np.ones(trials, dtype=bool)
    survivors = np.empty(plan.n_steps, dtype=int)
    for k in range(plan.n_steps):
        draws = rng.random(trials)
        alive &= draws < p_forward
        survivors[k] = int(alive.sum())
    return SteeringResult(int(alive.sum()), trials, survivors)


def steering_sweep_rows(n_values, trials: int, seed: int) -> list[dict]:
    """Closed-form vs Monte Carlo steering curve, one row per step count.

    Columns: n_steps, theta_deg, closed_form_prob, empirical_prob, trials,
    seed.  Rows are deterministic for a fixed seed.
    """
    rows = []
    for n in n_values:
        plan = SteeringPlan.from_steps(int(n))
        rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(int(n),)))
        result = simulate_steering(plan, trials, rng)
        rows.append(
            {
                "n_steps": plan.n_steps,
                "theta_deg": math.degrees(plan.theta_step),
                "closed_form_prob": steering_success_probability(plan),
                "empirical_prob": result.success_rate,
                "trials": trials,
                "seed": seed,
            }
        )
    return rows
