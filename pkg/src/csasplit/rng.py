"""Deterministic pseudorandom stream.

A fixed 64-bit algorithm (splitmix64) rather than the stdlib Mersenne
Twister, so that seeded runs are byte-identical across Python versions
and platforms.
"""

MASK64 = (1 << 64) - 1


class Stream:
    """Seeded splitmix64 generator; same seed, same sequence, always."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def fork(self, tag: int) -> "Stream":
        """Child stream that does not advance or depend on later use of self."""
        return Stream(self.state ^ (0xA076_1D64_78BD_642F * (tag + 1)) & MASK64)
