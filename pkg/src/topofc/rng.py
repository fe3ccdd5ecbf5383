"""Seeded pseudo-random number generation.

Clustering initialization and synthetic graph generation must reproduce
bit-for-bit across platforms and runs, so all randomness comes from
explicitly seeded 64-bit generators with a fixed algorithm (the
xoshiro/splitmix family) instead of global or library-default state.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

# 1 / 2**53, converts a 53-bit integer to a float in [0, 1)
_INV53 = 2.0 ** -53


def mix64(z: int) -> int:
    """splitmix64 finalizer: scrambles a 64-bit integer."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


def derive_key(seed: int, label: int) -> int:
    """Derive an independent 64-bit stream key from a seed and a label."""
    return mix64((seed & _MASK64) ^ mix64(label & _MASK64))


def stream_uniform(key: int, count: int, start: int = 0) -> np.ndarray:
    """Block of uniform [0, 1) float64 from a counter-based splitmix64 stream.

    Stateless: element i depends only on (key, start + i), so blocks can be
    generated out of order or in parallel with identical results.
    """
    idx = np.arange(start, start + count, dtype=np.uint64)
    z = np.uint64(key & _MASK64) + (idx + np.uint64(1)) * np.uint64(_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(11)).astype(np.float64) * _INV53


class Xoshiro256StarStar:
    """xoshiro256** generator, seeded through splitmix64 state expansion."""

    def __init__(self, seed: int):
        self.seed = seed
        state = []
        z = seed & _MASK64
        for _ in range(4):
            z = (z + _GAMMA) & _MASK64
            state.append(mix64(z))
        if not any(state):
            state[0] = 1
        self._s = state

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._s
        x = (s1 * 5) & _MASK64
        result = (((x << 7) | (x >> 57)) & _MASK64) * 9 & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) | (s3 >> 19)) & _MASK64
        self._s = [s0, s1, s2, s3]
        return result

    def random(self) -> float:
        """Uniform float64 in [0, 1)."""
        return (self.next_u64() >> 11) * _INV53

    def uniform(self, low: float, high: float) -> float:
        return low + (high - low) * self.random()

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), rejection-sampled to avoid modulo bias."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def choice_weighted(self, weights: np.ndarray) -> int:
        """Index drawn with probability proportional to nonnegative weights.

        Falls back to a uniform draw when all weights are zero.
        """
        weights = np.asarray(weights, dtype=np.float64)
        total = float(weights.sum())
        if total <= 0.0:
            return self.below(len(weights))
        r = self.random() * total
        cum = np.cumsum(weights)
        idx = int(np.searchsorted(cum, r, side="right"))
        return min(idx, len(weights) - 1)

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
