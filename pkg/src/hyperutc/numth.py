"""Exact binomial arithmetic, Lucas residues, thresholds and colex subset ranking."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer; zero outside 0 <= k <= n (so C(n, -1) == 0)."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def floor_log2(n: int) -> int:
    if n < 1:
        raise ValueError(f"floor_log2 needs n >= 1, got {n}")
    return n.bit_length() - 1


@dataclass(frozen=True)
class BaseDigits:
    """Base-p expansion of a non-negative integer, least significant digit first.

    Zero is represented by the empty digit list.
    """

    digits: tuple[int, ...]
    p: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"base must be >= 2, got {self.p}")
        if any(not 0 <= d < self.p for d in self.digits):
            raise ValueError(f"digit out of range for base {self.p}: {self.digits}")
        if self.digits and self.digits[-1] == 0:
            raise ValueError("leading (most significant) digit must be nonzero")

    @classmethod
    def of(cls, n: int, p: int) -> "BaseDigits":
        if n < 0:
            raise ValueError(f"cannot expand negative {n}")
        digits = []
        while n:
            n, d = divmod(n, p)
            digits.append(d)
        return cls(tuple(digits), p)

    @property
    def value(self) -> int:
        total = 0
        for d in reversed(self.digits):
            total = total * self.p + d
        return total

    def digit(self, i: int) -> int:
        return self.digits[i] if i < len(self.digits) else 0


def binomial_mod_p_lucas(n: int, k: int, p: int) -> int:
    """C(n, k) mod p computed digit by digit in base p."""
    if not is_prime(p):
        raise ValueError(f"Lucas residues need a prime modulus, got {p}")
    if n < 0 or k < 0:
        raise ValueError(f"need n, k >= 0, got n={n}, k={k}")
    nd = BaseDigits.of(n, p)
    kd = BaseDigits.of(k, p)
    result = 1
    for i in range(max(len(nd.digits), len(kd.digits))):
        ni, ki = nd.digit(i), kd.digit(i)
        if ki > ni:
            return 0
        result = result * comb(ni, ki) % p
    return result


def binomial_is_odd(n: int, k: int) -> bool:
    # every set bit of k must be set in n
    if n < 0 or k < 0:
        raise ValueError(f"need n, k >= 0, got n={n}, k={k}")
    return n & k == k


def all_inner_binomials_even(v: int) -> bool:
    """True iff C(v, k) is even for every 1 <= k <= v-1."""
    if v < 2:
        raise ValueError(f"need v >= 2, got {v}")
    return not any(binomial_is_odd(v, k) for k in range(1, v))


@dataclass(frozen=True)
class Thresholds:
    h: int
    psi: int
    phi: int
    s: int


def thresholds(h: int) -> Thresholds:
    if h < 1:
        raise ValueError(f"thresholds are defined for h >= 1, got {h}")
    psi = h + (1 << floor_log2(h))
    return Thresholds(h=h, psi=psi, phi=psi - 1, s=psi)


def v_upper_bound(h: int) -> int | None:
    """Known upper bound s(h)+h on v(h), available when h is 2^l or 2^l+1; else None."""
    if h < 1:
        raise ValueError(f"need h >= 1, got {h}")
    if is_power_of_two(h) or (h > 2 and is_power_of_two(h - 1)):
        return thresholds(h).s + h
    return None


# --- colex ranking -------------------------------------------------------
#
# A subset of {0..v-1} is also handled as a bitmask; colex order on k-subsets
# coincides with numeric order of their masks.


def subset_to_mask(subset: Iterable[int]) -> int:
    mask = 0
    for x in subset:
        mask |= 1 << x
    return mask


def mask_to_subset(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(x: int) -> int:
    return bin(x).count("1")


def colex_rank(subset: Sequence[int]) -> int:
    prev = -1
    rank = 0
    for i, a in enumerate(subset):
        if a <= prev:
            raise ValueError(f"subset must be strictly increasing non-negative: {list(subset)}")
        rank += comb(a, i + 1)
        prev = a
    return rank


def colex_unrank(rank: int, k: int, v: int) -> tuple[int, ...]:
    if k < 0 or k > v:
        raise ValueError(f"need 0 <= k <= v, got k={k}, v={v}")
    if not 0 <= rank < comb(v, k):
        raise ValueError(f"rank {rank} out of range for C({v},{k})")
    out = []
    a = v - 1
    for i in range(k, 0, -1):
        while comb(a, i) > rank:
            a -= 1
        out.append(a)
        rank -= comb(a, i)
        a -= 1
    return tuple(reversed(out))


def mask_colex_rank(mask: int) -> int:
    return colex_rank(mask_to_subset(mask))


@lru_cache(maxsize=None)
def k_subset_masks(v: int, k: int) -> tuple[int, ...]:
    """All k-subsets of {0..v-1} as masks, in colex order."""
    if k < 0 or k > v:
        return ()
    if k == 0:
        return (0,)
    out = []
    x = (1 << k) - 1
    limit = 1 << v
    while x < limit:
        out.append(x)
        # Gosper's hack: next integer with the same popcount
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r
    return tuple(out)


@lru_cache(maxsize=None)
def k_subset_index(v: int, k: int) -> dict[int, int]:
    return {m: i for i, m in enumerate(k_subset_masks(v, k))}


def submasks_of_size(mask: int, k: int) -> list[int]:
    """The k-element submasks of mask, in colex order."""
    bits = [1 << i for i in mask_to_subset(mask)]
    if k > len(bits) or k < 0:
        return []
    return [sum(bits[i] for i in mask_to_subset(m)) for m in k_subset_masks(len(bits), k)]
