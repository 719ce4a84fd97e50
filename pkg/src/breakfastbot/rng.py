"""Replayable random source.

Every draw runs on a fresh numpy PCG64 generator keyed by
``SeedSequence((seed, draw_index))``, and the draw index increments once per
call. Persisting the pair ``(seed, draws)`` is therefore enough to resume a
household mid-stream: replay after a save/load is bit-identical to an
uninterrupted run, on any platform.
"""

import numpy as np

ALGORITHM = "pcg64-seedseq-draw-indexed"


class ReplayableRNG:
    def __init__(self, seed: int, draws: int = 0) -> None:
        if seed < 0 or draws < 0:
            raise ValueError("seed and draw counter must be non-negative")
        self.seed = int(seed)
        self.draws = int(draws)

    def _next_generator(self) -> np.random.Generator:
        gen = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence((self.seed, self.draws)))
        )
        self.draws += 1
        return gen

    def normal_vector(self, dim: int) -> np.ndarray:
        """One standard-normal vector; consumes exactly one draw index."""
        return self._next_generator().standard_normal(dim)

    def pick_index(self, n: int) -> int:
        """Uniform integer in [0, n); consumes exactly one draw index."""
        if n <= 0:
            raise ValueError("cannot pick from an empty range")
        return int(self._next_generator().integers(n))

    def state(self) -> tuple[int, int]:
        return (self.seed, self.draws)

    def __repr__(self) -> str:
        return f"ReplayableRNG(seed={self.seed}, draws={self.draws})"
