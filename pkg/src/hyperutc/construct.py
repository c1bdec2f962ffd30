"""Counterexample pairs: F-constant hypergraphs that are k-hypomorphic up to
complementation for every k <= h + r - 1 without being equal up to complementation.

F is {0..r-1}. Proper nonempty subsets of F are split into classes A and A'
so that the circular shift of F always moves a subset into the other class.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .hypergraph import EqualityVerdict, Hypergraph, are_k_hypomorphic_utc, is_equal_utc
from .numth import binomial, is_power_of_two, k_subset_masks, mask_to_subset

CLASS_A = "A"
CLASS_A_PRIME = "A'"


def _shift_mask(m: int, perm: tuple[int, ...]) -> int:
    r = 0
    for i, j in enumerate(perm):
        if (m >> i) & 1:
            r |= 1 << j
    return r


@dataclass(frozen=True)
class DualityPartition:
    r: int
    class_of: dict[int, str]  # proper nonempty subset mask of F -> "A" or "A'"
    phi: tuple[int, ...]

    @property
    def a_class(self) -> list[int]:
        return sorted(m for m, c in self.class_of.items() if c == CLASS_A)

    @property
    def a_prime_class(self) -> list[int]:
        return sorted(m for m, c in self.class_of.items() if c == CLASS_A_PRIME)

    def satisfies_duality(self) -> bool:
        full = (1 << self.r) - 1
        if set(self.class_of) != set(range(1, full)):
            return False
        return all(self.class_of[m] != self.class_of[_shift_mask(m, self.phi)] for m in range(1, full))


def shift_orbits(r: int, k: int) -> list[list[int]]:
    """Cycles of the circular shift i -> i+1 mod r on k-subsets, each started at its colex-least member."""
    perm = tuple((i + 1) % r for i in range(r))
    seen: set[int] = set()
    out = []
    for m in k_subset_masks(r, k):
        if m in seen:
            continue
        cyc = [m]
        seen.add(m)
        x = _shift_mask(m, perm)
        while x != m:
            cyc.append(x)
            seen.add(x)
            x = _shift_mask(x, perm)
        out.append(cyc)
    return out


def duality_partition(r: int) -> DualityPartition:
    if r < 2 or not is_power_of_two(r):
        raise ValueError(
            f"r={r}: a duality partition exists only when r is a power of 2 (some C(r, k), 0<k<r, is odd)"
        )
    phi = tuple((i + 1) % r for i in range(r))
    class_of: dict[int, str] = {}
    for k in range(1, r):
        for cyc in shift_orbits(r, k):
            if len(cyc) % 2:
                raise AssertionError(f"odd shift orbit of length {len(cyc)} for r={r}, k={k}")
            for pos, m in enumerate(cyc):
                class_of[m] = CLASS_A if pos % 2 == 0 else CLASS_A_PRIME
    return DualityPartition(r, class_of, phi)


def duality_partition_exists(r: int) -> bool:
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    return is_power_of_two(r)


def duality_partition_search(r: int) -> tuple[int, ...] | None:
    """Exhaustive search over all permutations of F for one admitting a two-class split
    of the proper subsets with every subset and its image in different classes.

    Such a split exists for a fixed permutation iff all its cycles on proper
    subsets have even length (classes must alternate along each cycle).
    """
    full = (1 << r) - 1
    for perm in itertools.permutations(range(r)):
        seen: set[int] = set()
        ok = True
        for m in range(1, full):
            if m in seen:
                continue
            length = 0
            x = m
            while True:
                seen.add(x)
                length += 1
                x = _shift_mask(x, perm)
                if x == m:
                    break
            if length % 2:
                ok = False
                break
        if ok:
            return perm
    return None


def build_thm2_pair(h: int, r: int, v: int) -> tuple[Hypergraph, Hypergraph]:
    """H: h-sets whose trace on F lies in class A; H': H plus every h-set containing F."""
    if not 2 <= r <= h:
        raise ValueError(f"need 2 <= r <= h, got r={r}, h={h}")
    if not is_power_of_two(r):
        raise ValueError(f"r={r} must be a power of 2")
    if v < h + r:
        raise ValueError(f"need v >= h + r = {h + r}, got {v}")
    part = duality_partition(r)
    fmask = (1 << r) - 1
    edges = frozenset(a for a in k_subset_masks(v, h) if part.class_of.get(a & fmask) == CLASS_A)
    extra = frozenset(a for a in k_subset_masks(v, h) if a & fmask == fmask)
    return Hypergraph(v, h, edges), Hypergraph(v, h, edges | extra)


def default_truncation(h: int, r: int) -> int:
    return max(h + r, 2 * (h + r - 1) - 1)


@dataclass
class KCheck:
    k: int
    holds: bool
    witness: tuple[int, ...] | None
    seconds: float


@dataclass
class PairReport:
    h: int
    r: int
    v: int
    equality: EqualityVerdict
    checks: list[KCheck] = field(default_factory=list)
    transfer_applicable: bool = True

    @property
    def max_k(self) -> int:
        return self.h + self.r - 1

    @property
    def passed(self) -> bool:
        return self.equality is EqualityVerdict.NEITHER and all(c.holds for c in self.checks)

    @property
    def falsification(self) -> str | None:
        if self.equality is not EqualityVerdict.NEITHER:
            return f"pair is {self.equality.value} up to complementation"
        for c in self.checks:
            if not c.holds:
                return f"not {c.k}-hypomorphic up to complementation; witness {list(c.witness)}"
        return None


def verify_thm2_pair(h: int, r: int, v: int | None = None, jobs: int = 1) -> PairReport:
    """Build the pair and check it exhaustively: neither equal nor complementary, yet
    k-hypomorphic up to complementation for every 1 <= k <= h + r - 1."""
    if v is None:
        v = default_truncation(h, r)
    H, H2 = build_thm2_pair(h, r, v)
    report = PairReport(h, r, v, is_equal_utc(H, H2), transfer_applicable=v >= 2 * (h + r - 1) - 1)
    for k in range(1, min(h + r - 1, v) + 1):
        t0 = time.perf_counter()
        res = are_k_hypomorphic_utc(H, H2, k, jobs=jobs)
        report.checks.append(KCheck(k, res.holds, res.witness, time.perf_counter() - t0))
    return report


def extra_edge_count(h: int, r: int, v: int) -> int:
    return binomial(v - r, h - r)


def describe_partition(part: DualityPartition) -> list[str]:
    out = []
    for name, members in ((CLASS_A, part.a_class), (CLASS_A_PRIME, part.a_prime_class)):
        out.append(name + ": " + " ".join("{" + ",".join(map(str, mask_to_subset(m))) + "}" for m in members))
    return out
