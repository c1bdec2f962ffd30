"""Constant blocks, the equivalence x ~ y of interchangeable vertices, and monomorphic decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .hypergraph import Hypergraph
from .numth import k_subset_masks, mask_to_subset, subset_to_mask


@dataclass(frozen=True)
class Partition:
    """Blocks of {0..v-1}, each a sorted tuple, ordered by least element."""

    v: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else -1))
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise ValueError("partition blocks must be nonempty")
            for x in b:
                if not 0 <= x < self.v:
                    raise ValueError(f"vertex {x} outside 0..{self.v - 1}")
                if x in seen:
                    raise ValueError(f"vertex {x} appears in two blocks")
                seen.add(x)
        if len(seen) != self.v:
            raise ValueError(f"blocks do not cover 0..{self.v - 1}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def of(cls, v: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        return cls(v, tuple(tuple(b) for b in blocks))

    @classmethod
    def singletons(cls, v: int) -> "Partition":
        return cls(v, tuple((x,) for x in range(v)))

    def block_masks(self) -> list[int]:
        return [subset_to_mask(b) for b in self.blocks]

    def is_finer_than(self, other: "Partition") -> bool:
        outer = other.block_masks()
        return all(any(m & o == m for o in outer) for m in self.block_masks())


def _check_vertex(H: Hypergraph, x: int) -> None:
    if not 0 <= x < H.v:
        raise ValueError(f"vertex {x} outside 0..{H.v - 1}")


def equiv(H: Hypergraph, x: int, y: int) -> bool:
    """x ~ y iff H(K + x) = H(K + y) for every (h-1)-subset K avoiding x and y."""
    _check_vertex(H, x)
    _check_vertex(H, y)
    if x == y:
        return True
    if H.h == 0:
        return True
    bx, by = 1 << x, 1 << y
    rest = H.vertex_mask & ~(bx | by)
    edges = H.edges
    for k in _submasks(rest, H.h - 1):
        if ((k | bx) in edges) != ((k | by) in edges):
            return False
    return True


def _submasks(mask: int, k: int):
    bits = [1 << i for i in mask_to_subset(mask)]
    for m in k_subset_masks(len(bits), k):
        r = 0
        for i in mask_to_subset(m):
            r |= bits[i]
        yield r


def components(H: Hypergraph) -> Partition:
    parent = list(range(H.v))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(H.v):
        for y in range(x + 1, H.v):
            rx, ry = find(x), find(y)
            # transitivity makes one positive check per pair of classes enough
            if rx != ry and equiv(H, x, y):
                parent[ry] = rx
    classes: dict[int, list[int]] = {}
    for x in range(H.v):
        classes.setdefault(find(x), []).append(x)
    return Partition.of(H.v, classes.values())


@lru_cache(maxsize=4096)
def _trace_groups(v: int, h: int, fmask: int) -> tuple[int, ...]:
    """For each trace on F shared by two or more h-subsets, the indicator mask of that bucket."""
    buckets: dict[int, int] = {}
    for rank, a in enumerate(k_subset_masks(v, h)):
        t = a & fmask
        buckets[t] = buckets.get(t, 0) | (1 << rank)
    return tuple(g for g in buckets.values() if g & (g - 1))


def is_f_constant(H: Hypergraph, F: Iterable[int] | int) -> bool:
    """H(A) = H(A') whenever A and A' have the same trace on F."""
    fmask = F if isinstance(F, int) else subset_to_mask(F)
    if fmask >> H.v:
        raise ValueError(f"F = {mask_to_subset(fmask)} is not a subset of 0..{H.v - 1}")
    ind = H.indicator
    for g in _trace_groups(H.v, H.h, fmask):
        part = ind & g
        if part and part != g:
            return False
    return True


def is_constant_block(H: Hypergraph, B: Iterable[int] | int) -> bool:
    bmask = B if isinstance(B, int) else subset_to_mask(B)
    return is_f_constant(H, H.vertex_mask & ~bmask)


def is_monomorphic_decomposition(H: Hypergraph, P: Partition) -> bool:
    if P.v != H.v:
        raise ValueError(f"partition is on {P.v} vertices, hypergraph on {H.v}")
    return all(is_constant_block(H, b) for b in P.block_masks())


def minimum_constant_support(H: Hypergraph) -> tuple[tuple[int, ...], int]:
    """Smallest F making H F-constant: everything outside a largest component."""
    if H.v == 0:
        return (), 0
    best = max(components(H).blocks, key=len)  # ties: first in canonical order
    F = tuple(x for x in range(H.v) if x not in best)
    return F, len(F)
