"""SplitMix64 generator and seeded random sequences.

The generator is the 64-bit mix of Steele, Lea and Flood: the state advances
by ``0x9E3779B97F4A7C15`` and each output is the state passed through two
xor-shift-multiply rounds.  Bounded draws use Lemire's multiply-shift with
rejection, so results are exact and identical on every platform.
"""

from __future__ import annotations

from .core import Alphabet, Sequence

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

DNA = "ACGT"
PROTEIN = "ACDEFGHIKLMNPQRSTVWY"


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = (1 << 64) % bound
        while True:
            x = self.next_u64() * bound
            if (x & MASK64) >= threshold:
                return x >> 64

    def uniform_int(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)


def derive_seed(seed: int, *path: int) -> int:
    """Independent child seed for e.g. ``(ratio index, trial)``."""
    z = seed & MASK64
    for p in path:
        z = mix64((z + GOLDEN * ((p & MASK64) + 1)) & MASK64)
    return z


def standard_alphabet(size: int) -> Alphabet:
    if size < 1:
        raise ValueError("alphabet size must be at least 1")
    if size == 4:
        text = DNA
    elif size == 20:
        text = PROTEIN
    else:
        text = "".join(chr(ord("A") + i) for i in range(size))
    return Alphabet(tuple(sorted(map(ord, text))))


def random_sequence(
    stream: SplitMix64, length: int, alphabet_size: int, alphabet: Alphabet | None = None
) -> Sequence:
    if length < 0:
        raise ValueError("length must be non-negative")
    alphabet = alphabet or standard_alphabet(alphabet_size)
    if alphabet.size != alphabet_size:
        raise ValueError("alphabet size does not match")
    below = stream.below
    return Sequence(tuple(below(alphabet_size) for _ in range(length)), alphabet)
