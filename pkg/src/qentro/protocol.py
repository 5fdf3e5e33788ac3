"""The receiver's game: estimating a hidden polarization angle from
identically prepared qubit copies, and the signature protocol built on it.

The source emits copies of ``cos(theta)|0> + sin(theta)|1>`` for a hidden
``theta``; measuring a copy in a basis rotated by ``b`` yields outcome 0
with probability ``cos^2(theta - b)``.  The angle is sealed behind the
sampling interface: estimators only see outcome bits; tests may read it
through the explicit oracle hook.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BudgetExhausted,
    LengthMismatch,
    NonpositiveN,
    QentroError,
)

HALF_PI = math.pi / 2.0

GUESS_BITS = "guess-bits"
GUESS_ANGLES = "guess-angles"
REPLAY = "replay"
EVE_STRATEGIES = (GUESS_BITS, GUESS_ANGLES, REPLAY)

_ATTACK_CHUNK = 65536


class HiddenQubitSource:
    """Emits copies of a qubit state at a hidden angle in [0, pi/2].

    ``spawn(key)`` derives an independent child source (same hidden angle,
    statistically independent stream) keyed deterministically, so work can
    be split per hypothesis or per trial without order dependence.
    """

    def __init__(self, secret_theta: float, seed: int = 0, _spawn_key: tuple = ()):
        theta = float(secret_theta)
        if not 0.0 <= theta <= HALF_PI:
            raise QentroError(f"hidden angle must lie in [0, pi/2], got {theta!r}")
        self._theta = theta
        self._seed = int(seed)
        self._spawn_key = tuple(_spawn_key)
        self._rng = np.random.default_rng(
            np.random.SeedSequence(entropy=self._seed, spawn_key=self._spawn_key)
        )
        self.copies_used = 0

    def spawn(self, key: int) -> "HiddenQubitSource":
        return HiddenQubitSource(self._theta, self._seed, self._spawn_key + (int(key),))

    def measure(self, basis_angle: float) -> int:
        """Measure one fresh copy in the rotated basis; 0 with probability
        cos^2(theta - basis_angle), else 1."""
        self.copies_used += 1
        p_zero = math.cos(self._theta - basis_angle) ** 2
        return 0 if self._rng.random() < p_zero else 1

    def measure_batch(self, basis_angle: float, shots: int) -> int:
        """Measure ``shots`` fresh copies in one basis; returns the count of
        0 outcomes (binomial draw, identical in law to repeated singles)."""
        if shots < 1:
            raise NonpositiveN(f"shots must be >= 1, got {shots!r}")
        self.copies_used += shots
        p_zero = math.cos(self._theta - basis_angle) ** 2
        return int(self._rng.binomial(shots, min(p_zero, 1.0)))

    def unseal_theta(self) -> float:
        """Test oracle: the hidden angle.  Estimators must not call this."""
        return self._theta


def measure_in_basis(source: HiddenQubitSource, basis_angle: float) -> int:
    """Consume one copy from the source, measured in the given basis."""
    return source.measure(basis_angle)


@dataclass(frozen=True)
class QuantizationGrid:
    """n candidate angles ``(j + 1/2) * (pi/2) / n`` spread over [0, pi/2]."""

    levels: int

    def __post_init__(self):
        if self.levels < 2:
            raise NonpositiveN(f"grid needs at least 2 levels, got {self.levels!r}")

    @property
    def hypotheses(self) -> np.ndarray:
        n = self.levels
        return (np.arange(n) + 0.5) * HALF_PI / n


@dataclass(frozen=True)
class BruteForceEstimate:
    theta_hat: float
    zero_counts: np.ndarray
    log_likelihoods: np.ndarray
    copies_used: int


def estimate_theta_bruteforce(
    source: HiddenQubitSource, grid: QuantizationGrid, shots_per_hypothesis: int
) -> BruteForceEstimate:
    """Score every grid hypothesis by measuring shots in its own basis.

    Hypothesis j is scored by its count of 0 outcomes (expected
    ``shots * cos^2(theta - theta_j)``, maximal when aligned); the winner is
    the argmax with lowest-index tie-breaking.  Each hypothesis draws from
    its own child stream keyed by index, so evaluation order is irrelevant.
    The returned log-likelihoods score each hypothesis against the pooled
    counts from all bases.
    """
    if shots_per_hypothesis < 1:
        raise NonpositiveN(f"shots_per_hypothesis must be >= 1, got {shots_per_hypothesis!r}")
    hypotheses = grid.hypotheses
    zeros = np.empty(grid.levels, dtype=int)
    for j, basis in enumerate(hypotheses):
        child = source.spawn(j)
        zeros[j] = child.measure_batch(float(basis), shots_per_hypothesis)
        source.copies_used += shots_per_hypothesis
    winner = int(np.argmax(zeros))  # argmax returns the first maximal index

    shots = shots_per_hypothesis
    log_likelihoods = np.empty(grid.levels)
    for j, candidate in enumerate(hypotheses):
        p = np.cos(candidate - hypotheses) ** 2
        with np.errstate(divide="ignore", invalid="ignore"):
            ll = zeros * np.log(p) + (shots - zeros) * np.log(1.0 - p)
        ll = np.where((zeros == shots) & (p == 1.0), 0.0, ll)
        ll = np.where((zeros == 0) & (p == 0.0), 0.0, ll)
        log_likelihoods[j] = ll.sum() if np.all(np.isfinite(ll)) else -np.inf

    return BruteForceEstimate(
        theta_hat=float(hypotheses[winner]),
        zero_counts=zeros,
        log_likelihoods=log_likelihoods,
        copies_used=grid.levels * shots_per_hypothesis,
    )


@dataclass(frozen=True)
class AdaptiveEstimate:
    theta_hat: float
    halfwidth: float
    copies_used: int
    rounds: int


def estimate_theta_adaptive(
    source: HiddenQubitSource,
    target_halfwidth: float,
    confidence_shots: int = 200,
    max_copies: int | None = None,
) -> AdaptiveEstimate:
    """Interval bisection on [0, pi/2], homing in on the hidden angle.

    Each round probes the midpoints of the two candidate half-intervals
    with ``confidence_shots`` copies apiece and keeps the half whose probe
    basis collected more 0 outcomes (probing the full-interval midpoint
    itself cannot work: cos^2 is symmetric about the probe axis, so a
    centered probe carries no side information).  Rounds continue until the
    interval halfwidth is at most the target; the estimate is the final
    midpoint.  Raises ``BudgetExhausted`` if the next round would exceed
    ``max_copies``.
    """
    if target_halfwidth <= 0:
        raise QentroError(f"target halfwidth must be positive, got {target_halfwidth!r}")
    if confidence_shots < 1:
        raise NonpositiveN(f"confidence_shots must be >= 1, got {confidence_shots!r}")
    lo, hi = 0.0, HALF_PI
    copies = 0
    rounds = 0
    while (hi - lo) / 2.0 > target_halfwidth:
        if max_copies is not None and copies + 2 * confidence_shots > max_copies:
            raise BudgetExhausted(
                f"copy budget {max_copies} cannot fund another round of "
                f"{2 * confidence_shots} measurements"
            )
        mid = (lo + hi) / 2.0
        probe_left = (lo + mid) / 2.0
        probe_right = (mid + hi) / 2.0
        rounds += 1
        zeros_left = source.spawn(2 * rounds).measure_batch(probe_left, confidence_shots)
        zeros_right = source.spawn(2 * rounds + 1).measure_batch(probe_right, confidence_shots)
        copies += 2 * confidence_shots
        source.copies_used += 2 * confidence_shots
        if zeros_left >= zeros_right:  # tie goes left for determinism
            hi = mid
        else:
            lo = mid
    return AdaptiveEstimate(
        theta_hat=(lo + hi) / 2.0,
        halfwidth=(hi - lo) / 2.0,
        copies_used=copies,
        rounds=rounds,
    )


class SignatureKey:
    """Shared secret: a sequence of polarization angles in [0, pi/2]."""

    def __init__(self, angles):
        arr = np.asarray(angles, dtype=float).reshape(-1)
        if arr.size < 1:
            raise LengthMismatch("a signature key needs at least one angle")
        if arr.min() < 0.0 or arr.max() > HALF_PI:
            raise QentroError("key angles must lie in [0, pi/2]")
        arr.setflags(write=False)
        self.angles = arr

    @classmethod
    def uniform(cls, n: int, angle: float = math.pi / 4.0) -> "SignatureKey":
        return cls(np.full(n, angle))

    @property
    def length(self) -> int:
        return self.angles.size


def honest_stream(key: SignatureKey) -> np.ndarray:
    """Preparation angles of a signer who knows the key."""
    return key.angles.copy()


def verify_signature(key: SignatureKey, prepared_angles, rng: np.random.Generator) -> bool:
    """Measure photon k in the basis of key angle k; accept iff every
    outcome is 0.  An honest stream is accepted with probability 1 (every
    photon is aligned with its verification basis)."""
    prepared = np.asarray(prepared_angles, dtype=float).reshape(-1)
    if prepared.size != key.length:
        raise LengthMismatch(f"stream length {prepared.size} != key length {key.length}")
    p_zero = np.cos(prepared - key.angles) ** 2
    return bool(np.all(rng.random(key.length) < p_zero))


def _eve_preparations(strategy: str, key: SignatureKey, trials: int, rng) -> np.ndarray:
    n = key.length
    if strategy == GUESS_BITS:
        return rng.integers(0, 2, size=(trials, n)) * HALF_PI
    if strategy == GUESS_ANGLES:
        return rng.random((trials, n)) * HALF_PI
    if strategy == REPLAY:
        # intercept-resend: observe one honest transmission per trial in the
        # computational basis, then resend the observed bits
        observed_one = rng.random((trials, n)) >= np.cos(key.angles) ** 2
        return observed_one * HALF_PI
    raise QentroError(f"strategy must be one of {EVE_STRATEGIES}, got {strategy!r}")


@dataclass(frozen=True)
class AttackResult:
    strategy: str
    trials: int
    successes: int

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials


def eve_attack_success(
    key: SignatureKey, strategy: str, trials: int, rng: np.random.Generator
) -> AttackResult:
    """Fraction of forged streams the verifier accepts.

    A forger who guesses computational-basis bits against an all-45-degree
    key passes each position with probability 1/2, so the acceptance rate
    is 2^-n.  Trials run in deterministic chunks for memory
    friendliness."""
    if trials < 1:
        raise NonpositiveN(f"trials must be >= 1, got {trials!r}")
    if strategy not in EVE_STRATEGIES:
        raise QentroError(f"strategy must be one of {EVE_STRATEGIES}, got {strategy!r}")
    successes = 0
    remaining = trials
    while remaining > 0:
        chunk = min(remaining, _ATTACK_CHUNK)
        prepared = _eve_preparations(strategy, key, chunk, rng)
        p_zero = np.cos(prepared - key.angles[None, :]) ** 2
        accepted = (rng.random((chunk, key.length)) < p_zero).all(axis=1)
        successes += int(accepted.sum())
        remaining -= chunk
    return AttackResult(strategy, trials, successes)


def estimation_rows(
    grid_levels, shots_per_hypothesis: int, theta_true: float, seed: int
) -> list[dict]:
    """CSV rows for the brute-force estimation cost curve, one per grid size.

    Columns: n, shots, theta_true, theta_hat, error, copies_used, seed.
    """
    rows = []
    for n in grid_levels:
        source = HiddenQubitSource(theta_true, seed=seed).spawn(int(n))
        estimate = estimate_theta_bruteforce(
            source, QuantizationGrid(int(n)), shots_per_hypothesis
        )
        rows.append(
            {
                "n": int(n),
                "shots": shots_per_hypothesis,
                "theta_true": theta_true,
                "theta_hat": estimate.theta_hat,
                "error": abs(estimate.theta_hat - theta_true),
                "copies_used": estimate.copies_used,
                "seed": seed,
            }
        )
    return rows


def attack_rows(key_lengths, strategy: str, trials: int, seed: int) -> list[dict]:
    """CSV rows for the forgery success curve, one per key length.

    Columns: n, strategy, trials, successes, rate, seed.
    """
    rows = []
    for n in key_lengths:
        key = SignatureKey.uniform(int(n))
        rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(int(n),)))
        result = eve_attack_success(key, strategy, trials, rng)
        rows.append(
            {
                "n": int(n),
                "strategy": strategy,
                "trials": trials,
                "successes": result.successes,
                "rate": result.success_rate,
                "seed": seed,
            }
        )
    return rows
