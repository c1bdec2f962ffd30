"""Finite h-uniform hypergraphs on {0..v-1} and isomorphy up to complementation.

Edges are stored as vertex bitmasks. Vertex counts are capped at 64.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .incidence import build_w
from .numth import (
    binomial,
    k_subset_index,
    k_subset_masks,
    mask_to_subset,
    popcount,
    submasks_of_size,
    subset_to_mask,
)

MAX_VERTICES = 64


class HypergraphFormatError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


@dataclass(frozen=True)
class Hypergraph:
    v: int
    h: int
    edges: frozenset[int]

    def __post_init__(self):
        if not 0 <= self.v <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {self.v}")
        if self.h < 0:
            raise ValueError(f"edge size must be >= 0, got {self.h}")
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        limit = 1 << self.v
        for e in self.edges:
            if not 0 <= e < limit or popcount(e) != self.h:
                raise ValueError(f"edge {mask_to_subset(e)} is not an {self.h}-subset of 0..{self.v - 1}")

    @classmethod
    def from_edges(cls, v: int, h: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        masks = []
        for e in edges:
            e = tuple(e)
            if len(set(e)) != len(e):
                raise ValueError(f"repeated vertex in edge {e}")
            masks.append(subset_to_mask(e))
        if len(set(masks)) != len(masks):
            raise ValueError("duplicate edge")
        return cls(v, h, frozenset(masks))

    @classmethod
    def empty(cls, v: int, h: int) -> "Hypergraph":
        return cls(v, h, frozenset())

    @classmethod
    def complete(cls, v: int, h: int) -> "Hypergraph":
        return cls(v, h, frozenset(k_subset_masks(v, h)))

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.v) - 1

    def has_edge(self, vertices: Iterable[int] | int) -> bool:
        m = vertices if isinstance(vertices, int) else subset_to_mask(vertices)
        return m in self.edges

    def sorted_edges(self) -> list[tuple[int, ...]]:
        return [mask_to_subset(m) for m in sorted(self.edges)]

    @cached_property
    def indicator(self) -> int:
        """Bit vector over colex-ranked h-subsets: bit rank(X) is H(X)."""
        index = k_subset_index(self.v, self.h)
        x = 0
        for m in self.edges:
            x |= 1 << index[m]
        return x

    def __repr__(self):
        return f"Hypergraph(v={self.v}, h={self.h}, edges={self.sorted_edges()})"


def complement(H: Hypergraph) -> Hypergraph:
    return Hypergraph(H.v, H.h, frozenset(k_subset_masks(H.v, H.h)) - H.edges)


def _compress_table(kmask: int) -> dict[int, int]:
    return {1 << x: 1 << i for i, x in enumerate(mask_to_subset(kmask))}


def _induced_masks(H: Hypergraph, kmask: int) -> list[int]:
    """Edges of H inside kmask, in original labels."""
    k = popcount(kmask)
    if binomial(k, H.h) < len(H.edges):
        edges = H.edges
        return [m for m in submasks_of_size(kmask, H.h) if m in edges]
    return [m for m in H.edges if m & kmask == m]


def _relabel(masks: Iterable[int], table: dict[int, int]) -> frozenset[int]:
    out = []
    for m in masks:
        r = 0
        while m:
            low = m & -m
            r |= table[low]
            m ^= low
        out.append(r)
    return frozenset(out)


def induce(H: Hypergraph, K: Iterable[int] | int) -> Hypergraph:
    """Sub-hypergraph on K, vertices renumbered 0..|K|-1 in increasing order."""
    kmask = K if isinstance(K, int) else subset_to_mask(K)
    if kmask >> H.v:
        raise ValueError(f"vertex subset {mask_to_subset(kmask)} leaves 0..{H.v - 1}")
    table = _compress_table(kmask)
    return Hypergraph(popcount(kmask), H.h, _relabel(_induced_masks(H, kmask), table))


def boolean_sum(H: Hypergraph, H2: Hypergraph) -> Hypergraph:
    _check_same_shape(H, H2)
    return Hypergraph(H.v, H.h, H.edges ^ H2.edges)


def _check_same_shape(H: Hypergraph, H2: Hypergraph) -> None:
    if H.v != H2.v or H.h != H2.h:
        raise ValueError(f"hypergraphs differ in shape: (v={H.v}, h={H.h}) vs (v={H2.v}, h={H2.h})")


# --- isomorphism -------------------------------------------------------------


def _vertex_invariants(v: int, edges: Iterable[int]) -> list[tuple]:
    deg = [0] * v
    codeg = [[0] * v for _ in range(v)]
    for e in edges:
        vs = mask_to_subset(e)
        for x in vs:
            deg[x] += 1
            row = codeg[x]
            for y in vs:
                row[y] += 1
    return [(deg[x], tuple(sorted(codeg[x][y] for y in range(v) if y != x))) for x in range(v)]


def _edges_by_vertex(v: int, edges: Iterable[int]) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(v)]
    for e in edges:
        for x in mask_to_subset(e):
            out[x].append(e)
    return out


def _map_mask(m: int, f: Sequence[int]) -> int:
    r = 0
    while m:
        low = m & -m
        r |= 1 << f[low.bit_length() - 1]
        m ^= low
    return r


def is_isomorphic(H: Hypergraph, H2: Hypergraph) -> tuple[int, ...] | None:
    """A bijection f with f(E) = E' (f[x] is the image of x), or None."""
    if H.v != H2.v or len(H.edges) != len(H2.edges):
        return None
    v = H.v
    if not H.edges:
        return tuple(range(v))
    if H.h != H2.h:
        return None
    inv1 = _vertex_invariants(v, H.edges)
    inv2 = _vertex_invariants(v, H2.edges)
    if sorted(inv1) != sorted(inv2):
        return None
    if H.edges == H2.edges:
        return tuple(range(v))

    class_size: dict[tuple, int] = {}
    for t in inv1:
        class_size[t] = class_size.get(t, 0) + 1
    # rare invariant classes and high-degree vertices first
    order: list[int] = []
    placed = 0
    inc1 = _edges_by_vertex(v, H.edges)
    remaining = set(range(v))
    while remaining:
        x = max(remaining, key=lambda x: (
            sum(1 for e in inc1[x] if e & placed == e ^ (1 << x)),
            -class_size[inv1[x]],
            inv1[x][0],
            -x,
        ))
        order.append(x)
        placed |= 1 << x
        remaining.discard(x)

    # edges closed when x is placed
    seen = 0
    closing: list[list[int]] = []
    for x in order:
        seen |= 1 << x
        closing.append([e for e in inc1[x] if e & seen == e])
    inc2 = _edges_by_vertex(v, H2.edges)
    edges2 = H2.edges
    candidates = [[y for y in range(v) if inv2[y] == inv1[x]] for x in order]

    f = [-1] * v
    used = [False] * v

    def extend(depth: int, image: int) -> bool:
        if depth == v:
            return True
        x = order[depth]
        need = closing[depth]
        for y in candidates[depth]:
            if used[y]:
                continue
            f[x] = y
            ok = True
            for e in need:
                if _map_mask(e, f) not in edges2:
                    ok = False
                    break
            if ok:
                img = image | (1 << y)
                if sum(1 for e in inc2[y] if e & img == e) != len(need):
                    ok = False
            if ok:
                used[y] = True
                if extend(depth + 1, image | (1 << y)):
                    return True
                used[y] = False
            f[x] = -1
        return False

    if extend(0, 0):
        return tuple(f)
    return None


class IsoVerdict(enum.Enum):
    ISO = "Iso"
    ISO_TO_COMPLEMENT = "IsoToComplement"
    BOTH = "Both"
    NEITHER = "Neither"


class IsoUTC(NamedTuple):
    verdict: IsoVerdict
    iso: tuple[int, ...] | None
    iso_to_complement: tuple[int, ...] | None


def is_isomorphic_utc(H: Hypergraph, H2: Hypergraph) -> IsoUTC:
    if H.h != H2.h:
        raise ValueError(f"edge sizes differ: {H.h} vs {H2.h}")
    a = is_isomorphic(H, H2)
    b = is_isomorphic(H, complement(H2)) if H.v == H2.v else None
    if a is not None and b is not None:
        verdict = IsoVerdict.BOTH
    elif a is not None:
        verdict = IsoVerdict.ISO
    elif b is not None:
        verdict = IsoVerdict.ISO_TO_COMPLEMENT
    else:
        verdict = IsoVerdict.NEITHER
    return IsoUTC(verdict, a, b)


class EqualityVerdict(enum.Enum):
    EQUAL = "Equal"
    EQUAL_TO_COMPLEMENT = "EqualToComplement"
    NEITHER = "Neither"
    BOTH = "BothImpossibleUnlessDegenerate"


def is_equal_utc(H: Hypergraph, H2: Hypergraph) -> EqualityVerdict:
    _check_same_shape(H, H2)
    eq = H.edges == H2.edges
    # H = complement(H2) iff the edge sets partition [V]^h
    co = not (H.edges & H2.edges) and len(H.edges) + len(H2.edges) == binomial(H.v, H.h)
    if eq and co:
        return EqualityVerdict.BOTH
    if eq:
        return EqualityVerdict.EQUAL
    if co:
        return EqualityVerdict.EQUAL_TO_COMPLEMENT
    return EqualityVerdict.NEITHER


# --- k-hypomorphy --------------------------------------------------------------


class HypomorphyResult(NamedTuple):
    holds: bool
    witness: tuple[int, ...] | None  # colex-least failing k-subset


def _scan(H: Hypergraph, H2: Hypergraph, k: int, start: int, stop: int) -> int | None:
    """First rank in [start, stop) whose k-subset is not isomorphic UTC, else None."""
    memo: dict[tuple[frozenset, frozenset], bool] = {}
    total = binomial(k, H.h)
    for rank, kmask in enumerate(k_subset_masks(H.v, k)[start:stop], start):
        a = _induced_masks(H, kmask)
        b = _induced_masks(H2, kmask)
        sa, sb = set(a), set(b)
        if sa == sb:
            continue
        if not (sa & sb) and len(sa) + len(sb) == total:
            continue
        table = _compress_table(kmask)
        key = (_relabel(a, table), _relabel(b, table))
        ok = memo.get(key)
        if ok is None:
            ga = Hypergraph(k, H.h, key[0])
            gb = Hypergraph(k, H.h, key[1])
            ok = is_isomorphic(ga, gb) is not None or is_isomorphic(ga, complement(gb)) is not None
            memo[key] = ok
        if not ok:
            return rank
    return None


def are_k_hypomorphic_utc(H: Hypergraph, H2: Hypergraph, k: int, jobs: int = 1) -> HypomorphyResult:
    """Whether every k-subset induces sub-hypergraphs that are isomorphic up to complementation."""
    _check_same_shape(H, H2)
    if not 0 <= k <= H.v:
        raise ValueError(f"need 0 <= k <= v, got k={k}, v={H.v}")
    n = binomial(H.v, k)
    if jobs <= 1 or n < 64:
        bad = _scan(H, H2, k, 0, n)
    else:
        step = -(-n // (4 * jobs))
        bounds = [(s, min(s + step, n)) for s in range(0, n, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            found = list(pool.map(_scan, *zip(*[(H, H2, k, s, t) for s, t in bounds])))
        hits = [r for r in found if r is not None]
        bad = min(hits) if hits else None
    if bad is None:
        return HypomorphyResult(True, None)
    return HypomorphyResult(False, mask_to_subset(k_subset_masks(H.v, k)[bad]))


def edge_count_profile(H: Hypergraph, k: int) -> list[int]:
    """e(H restricted to K) for every k-subset K in colex order."""
    if not 0 <= k <= H.v:
        raise ValueError(f"need 0 <= k <= v, got k={k}, v={H.v}")
    return [len(_induced_masks(H, kmask)) for kmask in k_subset_masks(H.v, k)]


def parity_profile(H: Hypergraph, k: int) -> int:
    """Bit vector over colex-ranked k-subsets K holding e(H restricted to K) mod 2."""
    if not H.h <= k <= H.v:
        raise ValueError(f"need h <= k <= v, got h={H.h}, k={k}, v={H.v}")
    w = build_w(v=H.v, t=H.h, k=k)
    index = k_subset_index(H.v, H.h)
    out = 0
    for e in H.edges:
        out ^= w.data[index[e]]
    return out


# --- text format ---------------------------------------------------------------


def format_hypergraph(H: Hypergraph) -> str:
    lines = [f"v {H.v}", f"h {H.h}"]
    lines += ["e " + " ".join(map(str, e)) for e in H.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    v = h = None
    edges: list[int] = []
    seen: dict[int, int] = {}
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, *rest = line.split()
        try:
            nums = [int(x) for x in rest]
        except ValueError:
            raise HypergraphFormatError(n, f"non-integer field in {line!r}") from None
        if tag in ("v", "h"):
            if len(nums) != 1 or nums[0] < 0:
                raise HypergraphFormatError(n, f"expected '{tag} <non-negative integer>'")
            if (v if tag == "v" else h) is not None:
                raise HypergraphFormatError(n, f"repeated '{tag}' line")
            if edges:
                raise HypergraphFormatError(n, f"'{tag}' line after edges")
            if tag == "v":
                if nums[0] > MAX_VERTICES:
                    raise HypergraphFormatError(n, f"at most {MAX_VERTICES} vertices supported")
                v = nums[0]
            else:
                h = nums[0]
        elif tag == "e":
            if v is None or h is None:
                raise HypergraphFormatError(n, "edge before 'v' and 'h' lines")
            if len(nums) != h:
                raise HypergraphFormatError(n, f"edge has {len(nums)} vertices, expected {h}")
            if any(b <= a for a, b in zip(nums, nums[1:])):
                raise HypergraphFormatError(n, "edge vertices must be strictly increasing")
            if nums and (nums[0] < 0 or nums[-1] >= v):
                raise HypergraphFormatError(n, f"vertex out of range 0..{v - 1}")
            m = subset_to_mask(nums)
            if m in seen:
                raise HypergraphFormatError(n, f"duplicate edge (first on line {seen[m]})")
            seen[m] = n
            edges.append(m)
        else:
            raise HypergraphFormatError(n, f"unknown record {tag!r}")
    if v is None or h is None:
        raise HypergraphFormatError(0, "missing 'v' or 'h' line")
    return Hypergraph(v, h, frozenset(edges))


def read_hypergraph(path) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_hypergraph(fh.read())


def write_hypergraph(H: Hypergraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_hypergraph(H))
