"""Deterministic 64-bit PRNG used for payloads and random demands.

SplitMix64 (Steele, Lea, Flood 2014): state advances by the golden-gamma
constant 0x9E3779B97F4A7C15 and the output is a two-round xorshift-multiply
mix with constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB. One 64-bit
word of state makes traces trivially reproducible from the recorded seed,
in any language. Bytes are the little-endian concatenation of successive
outputs; `randbelow` reduces an output modulo n (bias is irrelevant at the
n used here and keeps the mapping single-call).
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

    def randbytes(self, n: int) -> bytes:
        words = (n + 7) // 8
        buf = b"".join(self.next_u64().to_bytes(8, "little") for _ in range(words))
        return buf[:n]

    def randbelow(self, n: int) -> int:
        if n < 1:
            raise ValueError("n must be positive")
        return self.next_u64() % n
