"""Deterministic pseudo-random numbers for reproducible experiments.

Noise generation and instance sampling must replay bit-identically across
runs and platforms, so we pin the generator instead of relying on the host
language runtime: a xoshiro256** stream whose state is expanded from the
64-bit seed with splitmix64.  Both algorithms are the public-domain
reference constructions of Blackman and Vigna.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class Rng:
    """xoshiro256** generator seeded via splitmix64 state expansion."""

    __slots__ = ("_s",)

    def __init__(self, seed: int):
        state = seed & _MASK64
        s = []
        for _ in range(4):
            state, word = _splitmix64(state)
            s.append(word)
        self._s = s

    def next_u64(self) -> int:
        s = self._s
        result = (_rotl((s[1] * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s[1] << 17) & _MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randint(self, n: int) -> int:
        """Uniform integer in [0, n). Rejection sampling, no modulo bias."""
        if n <= 0:
            raise ValueError("randint needs n >= 1")
        # Largest multiple of n that fits in 64 bits.
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def choice(self, seq):
        if not seq:
            raise ValueError("choice from empty sequence")
        return seq[self.randint(len(seq))]

    def coin(self) -> bool:
        return self.next_u64() & 1 == 1

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def shuffle(self, seq: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(seq) - 1, 0, -1):
            j = self.randint(i + 1)
            seq[i], seq[j] = seq[j], seq[i]

    def sample_distinct(self, n: int, k: int) -> list[int]:
        """k distinct integers from [0, n), in draw order."""
        if k > n:
            raise ValueError("cannot sample more elements than available")
        chosen: list[int] = []
        seen: set[int] = set()
        while len(chosen) < k:
            x = self.randint(n)
            if x not in seen:
                seen.add(x)
                chosen.append(x)
        return chosen

    def zipf_index(self, n: int, beta: float) -> int:
        """Index in [0, n) with P(i) proportional to (i+1) ** -beta.

        beta = 0 degenerates to the uniform distribution.
        """
        if n <= 0:
            raise ValueError("zipf_index needs n >= 1")
        if beta == 0.0:
            return self.randint(n)
        weights = [(i + 1) ** -beta for i in range(n)]
        total = sum(weights)
        u = self.random() * total
        acc = 0.0
        for i, w in enumerate(weights):
            acc += w
            if u < acc:
                return i
        return n - 1
