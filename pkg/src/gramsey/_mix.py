"""Portable seeded hashing for reproducible random sets and colorings.

All file-driven randomness flows through SplitMix64's finalizer so that a
64-bit seed produces identical sets/colorings on any platform or language
that reimplements the same three xor-shift/multiply rounds.
"""

MASK64 = (1 << 64) - 1


def mix64(x: int) -> int:
    """SplitMix64 finalizer: three xor-shift/multiply rounds on a 64-bit word."""
    x &= MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def point_value(seed: int, re: int, im: int) -> int:
    """Deterministic 64-bit value for a lattice point under a seed.

    Chains the finalizer over (seed, re, im); components are reduced to
    two's-complement 64-bit words first, so small negatives hash stably.
    """
    h = mix64(seed)
    h = mix64(h ^ (re & MASK64))
    return mix64(h ^ (im & MASK64))
