"""Deterministic 64-bit mixing generator for seeded commands.

splitmix64: state advances by a fixed odd constant and the output is a
finalizer mix of the state.  Identical output for a given seed on every
platform and Python version; doubles take the top 53 bits.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        u = (self.next_u64() >> 11) * (2.0 ** -53)
        return lo + (hi - lo) * u

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] (rejection-free modulo bias is fine
        for test workloads; ranges here are tiny)."""
        return lo + self.next_u64() % (hi - lo + 1)
