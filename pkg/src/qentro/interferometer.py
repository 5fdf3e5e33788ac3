"""Single-photon interferometer with a blockable lower arm.

Three arrangements are modeled: a rigid mirror (every photon reaches
detector D1), a springy mirror that absorbs the photon on the lower path
(absorbed 1/2, D1 1/4, D2 1/4), and an unknown mirror that is springy with
some prior probability.  A D2 click only ever happens with the springy
mirror, which is what makes the click informative without the photon
having touched the mirror.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .entropy import BITS, EntropyResult, shannon
from .errors import ImpossibleOutcome, NonpositiveN, NonpositiveWavelength, QentroError

ABSORBED = "absorbed"
D1 = "d1"
D2 = "d2"
OUTCOMES = (ABSORBED, D1, D2)

RIGID = "rigid"
SPRINGY = "springy"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class MirrorModel:
    """Mirror arrangement: rigid, springy, or springy with probability
    ``prior_springy``."""

    kind: str
    prior_springy: Optional[float] = None

    def __post_init__(self):
        if self.kind not in (RIGID, SPRINGY, UNKNOWN):
            raise QentroError(f"unknown mirror kind {self.kind!r}")
        if self.kind == UNKNOWN:
            if self.prior_springy is None or not 0.0 <= self.prior_springy <= 1.0:
                raise QentroError(f"prior must lie in [0, 1], got {self.prior_springy!r}")

    @classmethod
    def rigid(cls) -> "MirrorModel":
        return cls(RIGID)

    @classmethod
    def springy(cls) -> "MirrorModel":
        return cls(SPRINGY)

    @classmethod
    def unknown(cls, prior_springy: float = 0.5) -> "MirrorModel":
        return cls(UNKNOWN, prior_springy)


@dataclass(frozen=True)
class OutcomeDistribution:
    """Probabilities of the three detection outcomes."""

    p_absorbed: float
    p_d1: float
    p_d2: float

    def as_array(self) -> np.ndarray:
        return np.array([self.p_absorbed, self.p_d1, self.p_d2])


_RIGID_DIST = OutcomeDistribution(0.0, 1.0, 0.0)
_SPRINGY_DIST = OutcomeDistribution(0.5, 0.25, 0.25)


def outcome_distribution(mirror: MirrorModel) -> OutcomeDistribution:
    """Outcome probabilities for an arrangement; the unknown case is the
    prior-weighted mixture of the rigid and springy cases."""
    if mirror.kind == RIGID:
        return _RIGID_DIST
    if mirror.kind == SPRINGY:
        return _SPRINGY_DIST
    q = mirror.prior_springy
    blend = q * _SPRINGY_DIST.as_array() + (1.0 - q) * _RIGID_DIST.as_array()
    return OutcomeDistribution(*blend)


def arrangement_entropy(mirror: MirrorModel, base: str = BITS) -> EntropyResult:
    """Shannon entropy of the click distribution (zero-probability outcomes
    contribute nothing, so the rigid arrangement scores exactly 0)."""
    return shannon(outcome_distribution(mirror).as_array(), base)


def posterior_springy(prior: float, outcome: str) -> float:
    """Posterior probability that the mirror is springy given one outcome,
    by Bayes' rule over the rigid/springy conditional distributions.

    Raises ``ImpossibleOutcome`` when the prior assigns the outcome zero
    probability.  An absorption is conclusive (the rigid arrangement never
    absorbs), as is a D2 click.
    """
    if not 0.0 <= prior <= 1.0:
        raise QentroError(f"prior must lie in [0, 1], got {prior!r}")
    if outcome not in OUTCOMES:
        raise QentroError(f"outcome must be one of {OUTCOMES}, got {outcome!r}")
    idx = OUTCOMES.index(outcome)
    p_given_springy = _SPRINGY_DIST.as_array()[idx]
    p_given_rigid = _RIGID_DIST.as_array()[idx]
    total = prior * p_given_springy + (1.0 - prior) * p_given_rigid
    if total == 0.0:
        raise ImpossibleOutcome(f"outcome {outcome!r} has probability 0 at prior {prior!r}")
    return prior * p_given_springy / total


def simulate_photons(mirror: MirrorModel, count: int, rng: np.random.Generator) -> dict:
    """Multinomial photon counts per outcome; deterministic given the seed."""
    if count < 1:
        raise NonpositiveN(f"photon count must be >= 1, got {count!r}")
    draws = rng.multinomial(count, outcome_distribution(mirror).as_array())
    return dict(zip(OUTCOMES, (int(c) for c in draws)))


def simulate_latent_mirror(prior: float, count: int, rng: np.random.Generator) -> dict:
    """Simulate the unknown arrangement with the mirror as a latent variable.

    Each photon first draws whether the mirror is springy (probability
    ``prior``), then an outcome from that mirror's distribution.  Returns
    counts keyed by ``(mirror_kind, outcome)``; the springy fraction among
    D1 clicks estimates the Bayes posterior empirically.
    """
    if count < 1:
        raise NonpositiveN(f"photon count must be >= 1, got {count!r}")
    if not 0.0 <= prior <= 1.0:
        raise QentroError(f"prior must lie in [0, 1], got {prior!r}")
    springy = rng.random(count) < prior
    u = rng.random(count)
    springy_edges = np.cumsum(_SPRINGY_DIST.as_array())
    rigid_edges = np.cumsum(_RIGID_DIST.as_array())
    outcome_idx = np.where(
        springy,
        np.searchsorted(springy_edges, u, side="right"),
        np.searchsorted(rigid_edges, u, side="right"),
    )
    outcome_idx = np.clip(outcome_idx, 0, 2)
    counts = {}
    for is_springy, kind in ((True, SPRINGY), (False, RIGID)):
        for idx, outcome in enumerate(OUTCOMES):
            counts[(kind, outcome)] = int(((springy == is_springy) & (outcome_idx == idx)).sum())
    return counts


def mirror_position_uncertainty(wavelength: float) -> float:
    """Lower bound ``lambda / (4 pi)`` on the position spread of a mirror
    that must register a photon of the given wavelength."""
    if wavelength <= 0:
        raise NonpositiveWavelength(f"wavelength must be positive, got {wavelength!r}")
    return wavelength / (4.0 * math.pi)


def arrangement_rows(mirror: MirrorModel, photons: int, seed: int) -> list[dict]:
    """One CSV row summarizing an arrangement: exact distribution, entropy,
    and seeded simulation counts."""
    dist = outcome_distribution(mirror)
    rng = np.random.default_rng(seed)
    counts = simulate_photons(mirror, photons, rng)
    return [
        {
            "arrangement": mirror.kind,
            "prior": mirror.prior_springy if mirror.kind == UNKNOWN else "",
            "p_absorbed": dist.p_absorbed,
            "p_d1": dist.p_d1,
            "p_d2": dist.p_d2,
            "entropy_bits": arrangement_entropy(mirror, BITS).value,
            "seed": seed,
            "count_absorbed": counts[ABSORBED],
            "count_d1": counts[D1],
            "count_d2": counts[D2],
        }
    ]
