"""Inclusion matrices W_{t,k}, Kneser adjacency matrices and Wilson's p-rank formula."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import BitMatrix, IntMatrix
from .numth import binomial, is_power_of_two, is_prime, k_subset_index, k_subset_masks, submasks_of_size


@dataclass(frozen=True)
class IncidenceSpec:
    """Rows are t-subsets, columns k-subsets of {0..v-1}, both in colex order."""

    v: int
    t: int
    k: int

    def __post_init__(self):
        if not 0 <= self.t <= self.k <= self.v:
            raise ValueError(f"need 0 <= t <= k <= v, got v={self.v}, t={self.t}, k={self.k}")


def build_w(spec: IncidenceSpec | None = None, *, v: int | None = None, t: int | None = None,
            k: int | None = None) -> BitMatrix:
    if spec is None:
        spec = IncidenceSpec(v, t, k)
    return _build_w(spec.v, spec.t, spec.k)


@lru_cache(maxsize=128)
def _build_w(v: int, t: int, k: int) -> BitMatrix:
    row_of = k_subset_index(v, t)
    data = [0] * len(row_of)
    for col, kmask in enumerate(k_subset_masks(v, k)):
        bit = 1 << col
        for tmask in submasks_of_size(kmask, t):
            data[row_of[tmask]] |= bit
    return BitMatrix(len(data), binomial(v, k), tuple(data))


def build_kneser(v: int, t: int) -> IntMatrix:
    if t < 0 or 2 * t > v:
        raise ValueError(f"Kneser matrix needs 0 <= 2t <= v, got v={v}, t={t}")
    masks = k_subset_masks(v, t)
    return IntMatrix(len(masks), len(masks),
                     tuple(tuple(int(a & b == 0) for b in masks) for a in masks))


def wilson_rank(v: int, t: int, k: int, p: int) -> int:
    """Rank of W_{t,k} over GF(p) by Wilson's formula, valid for t <= min(k, v-k)."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not (0 <= t and t <= k and t <= v - k):
        raise ValueError(f"formula requires 0 <= t <= min(k, v-k); got v={v}, t={t}, k={k}")
    return sum(
        binomial(v, i) - binomial(v, i - 1)
        for i in range(t + 1)
        if binomial(k - i, t - i) % p
    )


def is_corank_one_case(h: int, k: int) -> bool:
    if h < 1 or k < 1:
        raise ValueError(f"need h, k >= 1, got h={h}, k={k}")
    return is_power_of_two(h) and k % (2 * h) == 0
