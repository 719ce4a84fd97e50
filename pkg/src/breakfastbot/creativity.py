"""Generative breakfast creation.

A multivariate Gaussian is fitted to the taught setup vectors (per-dimension
mean, population covariance with a small diagonal jitter so the rank-deficient
matrix stays factorizable). New candidates are drawn from it, thresholded at
0.5 into presence bits, repaired against the dependency rules, and kept only
if the result differs from every taught setup.

``create_breakfast`` resamples until it finds one novel valid setup (the
surprise path). ``simulate_batch`` instead runs a fixed number of draws and
keeps the books: draws identical to memory are counted and discarded, repaired
draws are tallied, and repeats of earlier batch outputs count as duplicates.
"""

from dataclasses import dataclass

import numpy as np

from . import rules as rules_mod
from .conceptspace import Catalog, ObjectClass, SetupVector
from .errors import (
    AttemptsExhaustedError,
    EmptyMemoryError,
    FactorizationFailureError,
)
from .rng import ReplayableRNG

DEFAULT_JITTER = 1e-6
DEFAULT_MAX_ATTEMPTS = 1000


@dataclass(frozen=True)
class GaussianModel:
    """Mean, jittered covariance, and its symmetric square root."""

    mu: np.ndarray
    sigma: np.ndarray
    root: np.ndarray
    jitter: float

    @property
    def dim(self) -> int:
        return self.mu.shape[0]


@dataclass(frozen=True)
class SampledSetup:
    """A thresholded draw plus the raw sample it came from."""

    lv: SetupVector
    raw: tuple[float, ...]


@dataclass(frozen=True)
class BatchStats:
    """Accounting for one batch of raw generations.

    ``same_as_memory + duplicate_new + distinct_new == requested`` always;
    ``invalid_before_fix`` counts how many of the surviving new options
    needed repair.
    """

    requested: int
    same_as_memory: int
    invalid_before_fix: int
    duplicate_new: int
    distinct_new: int
    outputs: tuple[SetupVector, ...]

    def to_report(self, catalog: Catalog) -> dict:
        from .conceptspace import decode

        decoded = sorted(decode(lv, catalog) for lv in self.outputs)
        return {
            "requested": self.requested,
            "same_as_memory": self.same_as_memory,
            "invalid_before_fix": self.invalid_before_fix,
            "duplicate_new": self.duplicate_new,
            "distinct_new": self.distinct_new,
            "outputs": decoded,
        }


def fit_gaussian(memory, catalog: Catalog, jitter: float = DEFAULT_JITTER) -> GaussianModel:
    """Fit mean and population covariance to the taught setups.

    Covariance is normalized by n (well-defined down to a single entry) and
    gets ``jitter`` added on the diagonal.
    """
    dim = len(catalog)
    data = np.array([entry.lv.padded(dim).bits for entry in memory], dtype=float)
    if data.size == 0:
        raise EmptyMemoryError("cannot fit a model to an empty memory")
    mu = data.mean(axis=0)
    centered = data - mu
    sigma = (centered.T @ centered) / data.shape[0] + jitter * np.eye(dim)
    try:
        eigvals, eigvecs = np.linalg.eigh(sigma)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - jitter prevents this
        raise FactorizationFailureError(str(exc)) from exc
    if not np.all(np.isfinite(eigvals)):  # pragma: no cover
        raise FactorizationFailureError("covariance eigenvalues are not finite")
    root = (eigvecs * np.sqrt(np.clip(eigvals, 0.0, None))) @ eigvecs.T
    return GaussianModel(mu=mu, sigma=sigma, root=root, jitter=jitter)


def sample_setup(model: GaussianModel, rng: ReplayableRNG) -> SampledSetup:
    """Draw one candidate: mu + root @ z, thresholded at 0.5."""
    raw = model.mu + model.root @ rng.normal_vector(model.dim)
    bits = tuple(int(x >= 0.5) for x in raw)
    return SampledSetup(lv=SetupVector(bits=bits), raw=tuple(float(x) for x in raw))


def _has_food(lv: SetupVector, catalog: Catalog) -> bool:
    return any(catalog.class_of(i) is ObjectClass.FOOD for i in lv.ids())


def create_breakfast(
    state,
    rng: ReplayableRNG,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> SetupVector:
    """Produce one novel valid setup, or fail after ``max_attempts`` samples.

    A sample is rejected when it has no food bit, when it matches a taught
    setup, or when its repaired form matches a taught setup. The returned
    vector validates by construction.
    """
    if len(state.memory) == 0:
        raise EmptyMemoryError("teach at least one breakfast before asking for new ones")
    catalog = state.catalog
    model = state.gaussian_model()
    kg = state.knowledge_graph()
    taught = state.memory.patterns(len(catalog))
    for _ in range(max_attempts):
        candidate = sample_setup(model, rng)
        if not _has_food(candidate.lv, catalog):
            continue
        if candidate.lv.bits in taught:
            continue
        fixed = rules_mod.fix(candidate.lv, kg, catalog)
        if fixed.bits in taught:
            continue
        return fixed
    raise AttemptsExhaustedError(
        f"no novel valid setup found in {max_attempts} samples"
    )


def simulate_batch(
    state,
    rng: ReplayableRNG,
    n: int,
    max_attempts_per_draw: int = 10_000,
) -> BatchStats:
    """Run ``n`` raw generations and classify each one.

    Unlike the surprise path, a draw equal to a taught setup is counted and
    discarded rather than resampled; only food-less samples are redrawn
    (they fit no category and cannot be repaired). A repaired draw that
    lands exactly on a taught setup is likewise booked as same-as-memory, so
    the batch outputs are always genuinely new.
    """
    if len(state.memory) == 0:
        raise EmptyMemoryError("teach at least one breakfast before simulating")
    if n < 0:
        raise ValueError("batch size must be non-negative")
    catalog = state.catalog
    model = state.gaussian_model()
    kg = state.knowledge_graph()
    taught = state.memory.patterns(len(catalog))

    same_as_memory = 0
    invalid_before_fix = 0
    duplicate_new = 0
    outputs: list[SetupVector] = []
    seen_outputs: set[tuple[int, ...]] = set()

    for _ in range(n):
        candidate = sample_setup(model, rng)
        attempts = 1
        while not _has_food(candidate.lv, catalog):
            if attempts >= max_attempts_per_draw:
                raise AttemptsExhaustedError(
                    "the model keeps producing food-less samples"
                )
            candidate = sample_setup(model, rng)
            attempts += 1

        if candidate.lv.bits in taught:
            same_as_memory += 1
            continue
        was_valid = rules_mod.validate(candidate.lv, kg, catalog).valid
        fixed = rules_mod.fix(candidate.lv, kg, catalog)
        if fixed.bits in taught:
            same_as_memory += 1
            continue
        if not was_valid:
            invalid_before_fix += 1
        if fixed.bits in seen_outputs:
            duplicate_new += 1
        else:
            seen_outputs.add(fixed.bits)
            outputs.append(fixed)

    return BatchStats(
        requested=n,
        same_as_memory=same_as_memory,
        invalid_before_fix=invalid_before_fix,
        duplicate_new=duplicate_new,
        distinct_new=len(outputs),
        outputs=tuple(outputs),
    )
