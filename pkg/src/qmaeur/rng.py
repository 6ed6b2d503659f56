"""Deterministic random number generation.

Reproducibility contract: a 64-bit master seed fully determines every draw.
Uniform variates come from numpy's documented PCG64 bit generator; values on
[lo, hi) are produced by mapping the unit uniform affinely, lo + (hi-lo)*u.
Per-sample child seeds are derived from (master seed, sample index) with
splitmix64, so ensemble rows can be regenerated individually and emitted in
index order no matter how they were computed.
"""

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(x):
    """One splitmix64 output step for a 64-bit integer state."""
    x = (x + _GOLDEN) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def child_seed(master, index):
    """64-bit seed for sample `index` of an ensemble with the given master seed."""
    return splitmix64((int(master) & _MASK64) ^ splitmix64(int(index) & _MASK64))


class Rng:
    """Seeded uniform generator with an explicit interval-mapping rule."""

    def __init__(self, seed):
        self.seed = int(seed) & _MASK64
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    def uniform(self, lo=0.0, hi=1.0):
        """One float, lo + (hi - lo) * u with u uniform on [0, 1)."""
        return lo + (hi - lo) * float(self._gen.random())

    def uniform_matrix(self, lo, hi, shape):
        """Array of independent uniforms on [lo, hi), row-major draw order."""
        return lo + (hi - lo) * self._gen.random(shape)

    def child(self, index):
        """Independent generator for sample `index`, derived deterministically."""
        return Rng(child_seed(self.seed, index))
