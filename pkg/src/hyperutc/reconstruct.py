"""Reconstruction up to complementation from parities and edge counts of k-subsets."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Iterable

from .decomposition import is_f_constant
from .hypergraph import (
    EqualityVerdict,
    Hypergraph,
    HypomorphyResult,
    are_k_hypomorphic_utc,
    complement,
    edge_count_profile,
    is_equal_utc,
    parity_profile,
)
from .incidence import build_w
from .linalg import gf2_in_span, gf2_kernel_basis, gf2_rank
from .numth import (
    binomial,
    is_power_of_two,
    k_subset_index,
    k_subset_masks,
    mask_to_subset,
    subset_to_mask,
    thresholds,
)


class InternalContradiction(RuntimeError):
    """A conclusion guaranteed under verified hypotheses failed to hold."""


class Outcome(enum.Enum):
    EQUAL = "Equal"
    COMPLEMENT = "Complement"
    DISTINCT = "Distinct"
    HYPOTHESIS_VIOLATED = "HypothesisViolated"


@dataclass(frozen=True)
class ReconVerdict:
    outcome: Outcome
    witness: tuple[int, ...] | None = None
    reason: str = ""


def _settle(H: Hypergraph, H2: Hypergraph, why: str) -> ReconVerdict:
    verdict = is_equal_utc(H, H2)
    if verdict in (EqualityVerdict.EQUAL, EqualityVerdict.BOTH):
        return ReconVerdict(Outcome.EQUAL)
    if verdict is EqualityVerdict.EQUAL_TO_COMPLEMENT:
        return ReconVerdict(Outcome.COMPLEMENT)
    raise InternalContradiction(f"{why} holds but the hypergraphs are neither equal nor complementary")


def reconstruct_by_parity(H: Hypergraph, H2: Hypergraph, k: int) -> ReconVerdict:
    """Decide equality up to complementation from the parities of e(H|K), |K| = k.

    Valid when h is a power of two, k is a positive multiple of 2h and v >= k + h;
    otherwise the verdict is HYPOTHESIS_VIOLATED.
    """
    if H.v != H2.v or H.h != H2.h:
        raise ValueError("hypergraphs must share v and h")
    h, v = H.h, H.v
    if not is_power_of_two(h):
        return ReconVerdict(Outcome.HYPOTHESIS_VIOLATED, reason=f"h={h} is not a power of 2")
    if k <= 0 or k % (2 * h):
        return ReconVerdict(Outcome.HYPOTHESIS_VIOLATED, reason=f"k={k} is not a positive multiple of 2h={2 * h}")
    if v < k + h:
        return ReconVerdict(Outcome.HYPOTHESIS_VIOLATED, reason=f"v={v} < k+h={k + h}")
    diff = parity_profile(H, k) ^ parity_profile(H2, k)
    if diff:
        rank = (diff & -diff).bit_length() - 1
        return ReconVerdict(Outcome.DISTINCT, mask_to_subset(k_subset_masks(v, k)[rank]),
                            "edge-count parities differ")
    return _settle(H, H2, "parity agreement")


@dataclass(frozen=True)
class KernelCertificate:
    dimension: int
    contains_all_ones: bool
    basis: tuple[int, ...] = field(repr=False, default=())


def left_kernel_w(v: int, h: int, *ks: int) -> list[int]:
    """Basis of the common kernel of the transposes of W_{h,k} for the given k (GF(2))."""
    if not ks:
        raise ValueError("need at least one k")
    stacked = None
    for k in ks:
        wt = build_w(v=v, t=h, k=k).transpose()
        stacked = wt if stacked is None else stacked.vstack(wt)
    return gf2_kernel_basis(stacked)


def kernel_corank_certificate(v: int, h: int, k: int) -> KernelCertificate:
    if not (0 <= h <= k <= v - h):
        raise ValueError(f"need h <= k <= v-h, got v={v}, h={h}, k={k}")
    basis = left_kernel_w(v, h, k)
    n = binomial(v, h)
    ones = (1 << n) - 1
    return KernelCertificate(len(basis), gf2_in_span(basis, ones, n), tuple(basis))


def vertex_kernel_vectors(v: int, ell: int) -> list[int]:
    """For each vertex a, the indicator over colex-ranked (2^ell+1)-subsets X of 'a in X'."""
    if ell < 1:
        raise ValueError(f"need ell >= 1, got {ell}")
    if v < 3 * 2**ell + 2:
        raise ValueError(f"need v >= 3*2^ell+2 = {3 * 2**ell + 2}, got {v}")
    h = 2**ell + 1
    vecs = [0] * v
    for rank, x in enumerate(k_subset_masks(v, h)):
        for a in mask_to_subset(x):
            vecs[a] |= 1 << rank
    return vecs


def _counts_agree_utc(H: Hypergraph, H2: Hypergraph, k: int) -> int | None:
    """Colex rank of the first k-subset where e(H|K) is neither e(H'|K) nor C(k,h)-e(H'|K)."""
    total = binomial(k, H.h)
    for rank, (a, b) in enumerate(zip(edge_count_profile(H, k), edge_count_profile(H2, k))):
        if a != b and a != total - b:
            return rank
    return None


def reconstruct_dual_k(H: Hypergraph, H2: Hypergraph, ell: int) -> ReconVerdict:
    """Equality up to complementation for (2^ell+1)-uniform hypergraphs from edge counts on
    all 2^(ell+1)- and (2^(ell+1)+1)-subsets, counts compared up to complementation.

    A mismatch between the guaranteed conclusion and the actual hypergraphs raises
    InternalContradiction.
    """
    if H.v != H2.v:
        raise ValueError("hypergraphs must share v")
    if ell < 1:
        return ReconVerdict(Outcome.HYPOTHESIS_VIOLATED, reason=f"ell={ell} < 1")
    h = 2**ell + 1
    if H.h != h or H2.h != h:
        return ReconVerdict(Outcome.HYPOTHESIS_VIOLATED, reason=f"both hypergraphs must be {h}-uniform")
    if H.v < 3 * 2**ell + 2:
        return ReconVerdict(Outcome.HYPOTHESIS_VIOLATED, reason=f"v={H.v} < 3*2^ell+2={3 * 2**ell + 2}")
    for k in (2 ** (ell + 1), 2 ** (ell + 1) + 1):
        bad = _counts_agree_utc(H, H2, k)
        if bad is not None:
            return ReconVerdict(Outcome.DISTINCT, mask_to_subset(k_subset_masks(H.v, k)[bad]),
                                f"edge counts differ up to complementation on a {k}-subset")
    return _settle(H, H2, "edge-count agreement on both subset sizes")


# --- threshold theorem harness -------------------------------------------------


@dataclass(frozen=True)
class ThresholdReport:
    applicable: bool
    implication_holds: bool
    hypomorphic: bool | None = None
    hypomorphy_witness: tuple[int, ...] | None = None
    equality: EqualityVerdict | None = None
    reason: str = ""


def check_seuil_implication(H: Hypergraph, H2: Hypergraph, F: Iterable[int] | int) -> ThresholdReport:
    """Evaluate: psi(h)-hypomorphic up to complementation => equal up to complementation,
    for F-constant H, H' with |V \\ F| >= h.

    Failed preconditions yield applicable=False (and a vacuously true implication).
    """
    if H.v != H2.v or H.h != H2.h:
        raise ValueError("hypergraphs must share v and h")
    fmask = F if isinstance(F, int) else subset_to_mask(F)
    outside = H.v - bin(fmask).count("1")
    if H.h < 1:
        return ThresholdReport(False, True, reason="h must be >= 1")
    if outside < H.h:
        return ThresholdReport(False, True, reason=f"|V\\F|={outside} < h={H.h}")
    if not (is_f_constant(H, fmask) and is_f_constant(H2, fmask)):
        return ThresholdReport(False, True, reason="not both F-constant")
    k = thresholds(H.h).psi
    if k > H.v:
        hypo = HypomorphyResult(True, None)  # no k-subsets at all
    else:
        hypo = are_k_hypomorphic_utc(H, H2, k)
    eq = is_equal_utc(H, H2)
    holds = (not hypo.holds) or eq is not EqualityVerdict.NEITHER
    return ThresholdReport(True, holds, hypo.holds, hypo.witness, eq)


def f_constant_hypergraph(v: int, h: int, F: Iterable[int] | int, value: dict[int, int]) -> Hypergraph:
    """The F-constant hypergraph whose edges are the h-sets A with value[A & F] == 1."""
    fmask = F if isinstance(F, int) else subset_to_mask(F)
    return Hypergraph(v, h, frozenset(a for a in k_subset_masks(v, h) if value.get(a & fmask)))


def realizable_traces(v: int, h: int, F: Iterable[int] | int) -> list[int]:
    """Subsets T of F that occur as A & F for some h-subset A (colex order)."""
    fmask = F if isinstance(F, int) else subset_to_mask(F)
    f = bin(fmask).count("1")
    outside = v - f
    out = []
    bits = [1 << i for i in mask_to_subset(fmask)]
    for size in range(max(0, h - outside), min(h, f) + 1):
        for m in k_subset_masks(f, size):
            out.append(sum(bits[i] for i in mask_to_subset(m)))
    return sorted(out)


def random_f_constant_pair(rng: random.Random, v: int, h: int, F: Iterable[int] | int) -> tuple[Hypergraph, Hypergraph]:
    traces = realizable_traces(v, h, F)
    fa = {t: rng.randrange(2) for t in traces}
    fb = {t: rng.randrange(2) for t in traces}
    return f_constant_hypergraph(v, h, F, fa), f_constant_hypergraph(v, h, F, fb)


def joint_kernel_experiment(v: int, h: int = 6, ks: tuple[int, ...] = (8, 9, 10)) -> dict:
    """GF(2) kernel dimensions of the transposed inclusion matrices of h-sets versus k-sets,
    separately and jointly. A joint kernel of dimension 1 (spanned by the all-ones vector)
    together with every C(k, h) even means agreeing edge counts up to complementation on
    all those k-subsets force equality up to complementation."""
    n = binomial(v, h)
    mats = {k: build_w(v=v, t=h, k=k) for k in ks}
    dims = {k: n - gf2_rank(m) for k, m in mats.items()}
    joint = None
    for m in mats.values():
        joint = m if joint is None else joint.hstack(m)
    even = {k: binomial(k, h) % 2 == 0 for k in ks}
    inter = n - gf2_rank(joint)
    return {
        "v": v,
        "h": h,
        "rows": n,
        "binomial_even": even,
        "kernel_dims": dims,
        "intersection_dim": inter,
        # all-ones times W_{h,k} is C(k,h) mod 2 in every column
        "intersection_contains_all_ones": all(even.values()),
        "parity_argument_suffices": inter == 1 and all(even.values()),
    }
