"""
Deterministic 64-bit pseudo random numbers.

SplitMix64: the state advances by the golden-ratio increment and each output
is the state passed through the murmur-style finalizer. The generator is an
immutable value; every draw returns the value together with the next
generator, so instances are reproducible across implementations.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 output finalizer."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class SplitMix64:
    """Immutable SplitMix64 generator state."""

    state: int

    @classmethod
    def seeded(cls, seed: int) -> "SplitMix64":
        return cls(seed & MASK64)

    @classmethod
    def for_stream(cls, seed: int, index: int) -> "SplitMix64":
        """Independent generator for sample ``index`` of a seeded run.

        Streams depend only on (seed, index), so any partition of the index
        range reproduces the same samples.
        """
        return cls(mix64((seed & MASK64) ^ mix64(index + GOLDEN_GAMMA)))

    def next_u64(self) -> Tuple[int, "SplitMix64"]:
        state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(state), SplitMix64(state)

    def next_int(self, lo: int, hi: int) -> Tuple[int, "SplitMix64"]:
        """Integer in [lo, hi] by reduction of a 64-bit draw modulo the span."""
        if hi < lo:
            raise ValueError(f"empty integer range [{lo}, {hi}]")
        value, nxt = self.next_u64()
        return lo + value % (hi - lo + 1), nxt

    def next_rational(self, numerator_bound: int, denominator_bound: int) -> Tuple[Fraction, "SplitMix64"]:
        """Rational p/q with p uniform in [-N, N] and q uniform in [1, D]."""
        p, gen = self.next_int(-numerator_bound, numerator_bound)
        q, gen = gen.next_int(1, denominator_bound)
        return Fraction(p, q), gen
