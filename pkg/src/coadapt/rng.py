"""Deterministic random number generation used throughout the toolkit.

Every random decision (weight init, data shuffling, target-image pairing,
synthetic-scene layout) is drawn from SplitMix64 streams so results are
reproducible from a single 64-bit seed and independent of execution order.

The exact algorithms, so streams can be replayed independently:

SplitMix64 (state ``s``, all arithmetic mod 2**64)::

    next_u64():  s += 0x9E3779B97F4A7C15
                 z = s
                 z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
                 z = (z ^ (z >> 27)) * 0x94D049BB133111EB
                 return z ^ (z >> 31)

Derived draws::

    uniform()     = (next_u64() >> 11) * 2**-53          # [0, 1)
    randbelow(n)  = min(floor(uniform() * n), n - 1)     # {0 .. n-1}
    normal()      = sqrt(-2 ln u1) * cos(2 pi u2)        # Box-Muller, cosine
                    with u1 = ((next_u64() >> 11) + 1) * 2**-53  in (0, 1]
                    and  u2 = uniform()

Stream splitting: ``child_seed(seed, label)`` mixes the parent seed with the
FNV-1a 64-bit hash of a textual label, giving independent per-purpose streams
(``child_seed(s, "init/source1")`` etc.) whose outputs do not depend on how
many sibling streams exist.
"""

from __future__ import annotations

import math

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3

_INV_2_53 = 2.0 ** -53


def mix64(z: int) -> int:
    """SplitMix64 output mixing function."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def fnv1a64(label: str) -> int:
    """FNV-1a 64-bit hash of a UTF-8 encoded label."""
    h = _FNV_OFFSET
    for byte in label.encode("utf-8"):
        h = ((h ^ byte) * _FNV_PRIME) & _MASK
    return h


def child_seed(seed: int, label: str) -> int:
    """Derive an independent stream seed for a named purpose."""
    return mix64((seed & _MASK) ^ fnv1a64(label))


class Stream:
    """A SplitMix64 stream; see the module docstring for the exact algorithm."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return mix64(self._state)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * _INV_2_53

    def randbelow(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randbelow requires n >= 1")
        return min(int(self.uniform() * n), n - 1)

    def normal(self) -> float:
        u1 = ((self.next_u64() >> 11) + 1) * _INV_2_53
        u2 = self.uniform()
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle drawing j = randbelow(i + 1)."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]


def _mix64_array(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def uniform_array(seed: int, n: int) -> np.ndarray:
    """The first ``n`` uniform() draws of ``Stream(seed)``, vectorized."""
    steps = np.arange(1, n + 1, dtype=np.uint64)
    states = np.uint64(seed & _MASK) + steps * np.uint64(_GOLDEN)
    return (_mix64_array(states) >> np.uint64(11)).astype(np.float64) * _INV_2_53


def normal_array(seed: int, n: int) -> np.ndarray:
    """The first ``n`` normal() draws of ``Stream(seed)``, vectorized."""
    u = uniform_array(seed, 2 * n)
    raw = u[0::2]
    u1 = raw + _INV_2_53  # uniform() = (bits >> 11) * 2^-53, normal() adds 1 ulp
    u2 = u[1::2]
    return np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * np.pi * u2)
