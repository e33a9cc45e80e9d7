"""Walker's alias method: O(1) sampling from a discrete distribution."""

from __future__ import annotations

import numpy as np


class AliasTable:
    """Constant-time sampler over ``weights[i] / sum(weights)``.

    Built with the standard small/large stack construction; draws take one
    uniform integer and one uniform float from the supplied generator.
    """

    def __init__(self, weights):
        w = np.asarray(weights, dtype=np.float64)
        if w.ndim != 1 or w.size == 0:
            raise ValueError("weights must be a non-empty 1-D sequence")
        if np.any(w < 0) or not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite and non-negative")
        total = w.sum()
        if total <= 0:
            raise ValueError("at least one weight must be positive")

        n = w.size
        scaled = w * (n / total)
        prob = np.ones(n, dtype=np.float64)
        alias = np.arange(n, dtype=np.int64)
        small = [i for i in range(n) if scaled[i] < 1.0]
        large = [i for i in range(n) if scaled[i] >= 1.0]
        while small and large:
            s = small.pop()
            l = large.pop()
            prob[s] = scaled[s]
            alias[s] = l
            scaled[l] -= 1.0 - scaled[s]
            (small if scaled[l] < 1.0 else large).append(l)
        # Leftovers in either stack are 1.0 up to rounding.
        self.prob = prob
        self.alias = alias
        self.n = n

    def draw(self, rng: np.random.Generator) -> int:
        i = int(rng.integers(self.n))
        return i if rng.random() < self.prob[i] else int(self.alias[i])

    def sample(self, rng: np.random.Generator, size) -> np.ndarray:
        """Vectorized draws; flat or shaped according to ``size``."""
        i = rng.integers(self.n, size=size)
        keep = rng.random(size) < self.prob[i]
        return np.where(keep, i, self.alias[i])


__all__ = ["AliasTable"]
