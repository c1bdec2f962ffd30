"""Complete graphs with colored pairs, and isomorphy up to any permutation of the colors.

A bijection f is an isomorphism up to the symmetric group on the colors exactly
when it preserves the kernel of the coloring: two pairs share a color iff their
images do. The search below enforces that through a partial color bijection.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .numth import binomial, k_subset_masks, mask_to_subset, subset_to_mask


class ValuedGraphFormatError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def pair_rank(i: int, j: int) -> int:
    """Colex rank of the pair {i, j}."""
    if i == j:
        raise ValueError("a pair needs two distinct vertices")
    if i > j:
        i, j = j, i
    return i + j * (j - 1) // 2


def _pairs(v: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(v) for i in range(j)]


@dataclass(frozen=True)
class ValuedGraph:
    v: int
    num_colors: int
    colors: tuple[int, ...]  # indexed by colex rank of the pair

    def __post_init__(self):
        if self.v < 0 or self.num_colors < 0:
            raise ValueError("v and num_colors must be non-negative")
        if len(self.colors) != binomial(self.v, 2):
            raise ValueError(f"need a color for each of the {binomial(self.v, 2)} pairs, got {len(self.colors)}")
        for c in self.colors:
            if not 0 <= c < self.num_colors:
                raise ValueError(f"color {c} outside 0..{self.num_colors - 1}")

    @classmethod
    def from_function(cls, v: int, num_colors: int, color) -> "ValuedGraph":
        return cls(v, num_colors, tuple(color(i, j) for i, j in _pairs(v)))

    def color(self, i: int, j: int) -> int:
        return self.colors[pair_rank(i, j)]

    def pairs(self) -> list[tuple[int, int]]:
        return _pairs(self.v)


@dataclass(frozen=True)
class ColorKernel:
    """Classes of pairs sharing a color, listed by least pair rank."""

    classes: tuple[tuple[tuple[int, int], ...], ...]

    def class_sizes(self) -> list[int]:
        return sorted(len(c) for c in self.classes)


def color_kernel(G: ValuedGraph) -> ColorKernel:
    by_color: dict[int, list[tuple[int, int]]] = {}
    for p, c in zip(G.pairs(), G.colors):
        by_color.setdefault(c, []).append(p)
    return ColorKernel(tuple(tuple(ps) for ps in by_color.values()))


def induce_valued(G: ValuedGraph, K: Iterable[int] | int) -> ValuedGraph:
    kmask = K if isinstance(K, int) else subset_to_mask(K)
    vs = mask_to_subset(kmask)
    if vs and vs[-1] >= G.v:
        raise ValueError(f"vertex subset {vs} leaves 0..{G.v - 1}")
    return ValuedGraph.from_function(len(vs), G.num_colors, lambda i, j: G.color(vs[i], vs[j]))


def preserves_kernel(Ga: ValuedGraph, Gb: ValuedGraph, f: Sequence[int]) -> bool:
    """Literal kernel test: P, Q share a color in Ga iff f(P), f(Q) share one in Gb."""
    if sorted(f) != list(range(Ga.v)) or Ga.v != Gb.v:
        return False
    pairs = Ga.pairs()
    ca = Ga.colors
    cb = [Gb.color(f[i], f[j]) for i, j in pairs]
    n = len(pairs)
    return all((ca[p] == ca[q]) == (cb[p] == cb[q]) for p in range(n) for q in range(p + 1, n))


class ValuedIso(NamedTuple):
    f: tuple[int, ...]      # f[x] is the image of vertex x
    sigma: tuple[int, ...]  # sigma[a] is the image of color a


def _incident_class_sizes(G: ValuedGraph) -> list[tuple[int, ...]]:
    count: dict[int, int] = {}
    for c in G.colors:
        count[c] = count.get(c, 0) + 1
    return [tuple(sorted(count[G.color(x, y)] for y in range(G.v) if y != x)) for x in range(G.v)]


def valued_iso_up_to_symmetric(Ga: ValuedGraph, Gb: ValuedGraph) -> ValuedIso | None:
    """A vertex bijection f and color permutation sigma with c_b(f(P)) = sigma(c_a(P)), or None."""
    if Ga.v != Gb.v:
        return None
    v = Ga.v
    W = max(Ga.num_colors, Gb.num_colors)
    if color_kernel(Ga).class_sizes() != color_kernel(Gb).class_sizes():
        return None
    inv_a = _incident_class_sizes(Ga)
    inv_b = _incident_class_sizes(Gb)
    if sorted(inv_a) != sorted(inv_b):
        return None
    rarity: dict[tuple, int] = {}
    for t in inv_a:
        rarity[t] = rarity.get(t, 0) + 1
    order = sorted(range(v), key=lambda x: (rarity[inv_a[x]], x))
    candidates = [[y for y in range(v) if inv_b[y] == inv_a[x]] for x in order]
    ca = [[Ga.color(x, y) if x != y else -1 for y in range(v)] for x in range(v)]
    cb = [[Gb.color(x, y) if x != y else -1 for y in range(v)] for x in range(v)]

    f = [-1] * v
    used = [False] * v
    fwd: dict[int, int] = {}
    bwd: dict[int, int] = {}

    def extend(depth: int) -> bool:
        if depth == v:
            return True
        x = order[depth]
        row_a = ca[x]
        for y in candidates[depth]:
            if used[y]:
                continue
            row_b = cb[y]
            added: list[int] = []
            ok = True
            for u in order[:depth]:
                a, b = row_a[u], row_b[f[u]]
                fa = fwd.get(a)
                if fa is None:
                    if b in bwd:
                        ok = False
                        break
                    fwd[a] = b
                    bwd[b] = a
                    added.append(a)
                elif fa != b:
                    ok = False
                    break
            if ok:
                f[x] = y
                used[y] = True
                if extend(depth + 1):
                    return True
                used[y] = False
                f[x] = -1
            for a in added:
                del bwd[fwd.pop(a)]
        return False

    if not extend(0):
        return None
    free_targets = iter(sorted(set(range(W)) - set(bwd)))
    sigma = tuple(fwd[a] if a in fwd else next(free_targets) for a in range(W))
    return ValuedIso(tuple(f), sigma)


def witness_is_consistent(Ga: ValuedGraph, Gb: ValuedGraph, iso: ValuedIso) -> bool:
    """c_b(f(P)) == sigma(c_a(P)) on every pair P."""
    f, sigma = iso
    return all(Gb.color(f[i], f[j]) == sigma[Ga.color(i, j)] for i, j in Ga.pairs())


# --- constructions ---------------------------------------------------------------


def moebius_vertex(i: int, j: int, n: int) -> int:
    return 2 * (i % n) + j % 2


def moebius_color(i: int, q: int, n: int) -> int:
    """Color (i, q) of Z/n x Z/3; colors 0 and 1 keep their own codes."""
    return 2 + 3 * (i % n) + q


def build_moebius_pair(n: int) -> tuple[ValuedGraph, ValuedGraph]:
    """The cylinder coloring c and its twisted variant c' on Z/n x Z/2 (vertex (i, j) is 2i+j)."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    V = moebius_vertex
    colors = [0] * binomial(2 * n, 2)
    for i in range(n):
        colors[pair_rank(V(i, 0, n), V(i, 1, n))] = 1
        colors[pair_rank(V(i, 0, n), V(i + 1, 0, n))] = moebius_color(i, 0, n)
        colors[pair_rank(V(i, 1, n), V(i + 1, 1, n))] = moebius_color(i, 0, n)
        colors[pair_rank(V(i, 0, n), V(i + 1, 1, n))] = moebius_color(i, 1, n)
        colors[pair_rank(V(i, 1, n), V(i + 1, 0, n))] = moebius_color(i, 2, n)
    twisted = list(colors)
    twisted[pair_rank(V(0, 0, n), V(1, 1, n))] = moebius_color(0, 0, n)
    twisted[pair_rank(V(0, 1, n), V(1, 0, n))] = moebius_color(0, 0, n)
    twisted[pair_rank(V(0, 1, n), V(1, 1, n))] = moebius_color(0, 2, n)
    twisted[pair_rank(V(0, 0, n), V(1, 0, n))] = moebius_color(0, 1, n)
    W = 3 * n + 2
    return ValuedGraph(2 * n, W, tuple(colors)), ValuedGraph(2 * n, W, tuple(twisted))


def build_w3_example(v: int) -> tuple[ValuedGraph, ValuedGraph]:
    """Three colors; the two colorings differ only on the pairs inside {0, 1, 2}."""
    if v < 3:
        raise ValueError(f"need v >= 3, got {v}")
    first = {(0, 1): 0, (1, 2): 0, (0, 2): 1}
    second = {(0, 1): 0, (0, 2): 0, (1, 2): 1}
    return (ValuedGraph.from_function(v, 3, lambda i, j: first.get((i, j), 2)),
            ValuedGraph.from_function(v, 3, lambda i, j: second.get((i, j), 2)))


@dataclass
class MoebiusReport:
    n: int
    full_witness: ValuedIso | None
    subset_failures: list[tuple[int, ...]]
    subsets_checked: int
    sampled_failures: list[tuple[int, ...]]
    sampled_checked: int
    inconsistent_witnesses: int
    k: int
    color_bound: float

    @property
    def passed(self) -> bool:
        return (self.full_witness is None and not self.subset_failures and not self.sampled_failures
                and not self.inconsistent_witnesses and self.k < self.color_bound)


def verify_moebius(n: int, rng: random.Random | None = None, samples: int = 20) -> MoebiusReport:
    """No isomorphism up to color permutation on the whole vertex set, but one on every
    (2n-1)-subset; smaller subsets are spot-checked on a random sample."""
    G, G2 = build_moebius_pair(n)
    rng = rng or random.Random(0)
    v = 2 * n
    inconsistent = 0

    def check(kmask: int) -> bool:
        nonlocal inconsistent
        a, b = induce_valued(G, kmask), induce_valued(G2, kmask)
        iso = valued_iso_up_to_symmetric(a, b)
        if iso is not None and not witness_is_consistent(a, b, iso):
            inconsistent += 1
        return iso is not None

    full = valued_iso_up_to_symmetric(G, G2)
    top = k_subset_masks(v, v - 1)
    failures = [mask_to_subset(m) for m in top if not check(m)]
    smaller = [m for k in range(2, v - 1) for m in k_subset_masks(v, k)]
    picked = rng.sample(smaller, min(samples, len(smaller)))
    sampled_failures = [mask_to_subset(m) for m in sorted(picked) if not check(m)]
    W = G.num_colors
    return MoebiusReport(n, full, failures, len(top), sampled_failures, len(picked), inconsistent,
                         v - 1, 2 * W / 3 - 2)


# --- text format -----------------------------------------------------------------


def format_valued_graph(G: ValuedGraph) -> str:
    lines = [f"v {G.v}", f"colors {G.num_colors}"]
    lines += [f"c {i} {j} {c}" for (i, j), c in zip(G.pairs(), G.colors)]
    return "\n".join(lines) + "\n"


def parse_valued_graph(text: str) -> ValuedGraph:
    v = m = None
    colors: dict[int, int] = {}
    first_seen: dict[int, int] = {}
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, *rest = line.split()
        try:
            nums = [int(x) for x in rest]
        except ValueError:
            raise ValuedGraphFormatError(n, f"non-integer field in {line!r}") from None
        if tag in ("v", "colors"):
            if len(nums) != 1 or nums[0] < 0:
                raise ValuedGraphFormatError(n, f"expected '{tag} <non-negative integer>'")
            if (v if tag == "v" else m) is not None:
                raise ValuedGraphFormatError(n, f"repeated '{tag}' line")
            if colors:
                raise ValuedGraphFormatError(n, f"'{tag}' line after pair colors")
            if tag == "v":
                v = nums[0]
            else:
                m = nums[0]
        elif tag == "c":
            if v is None or m is None:
                raise ValuedGraphFormatError(n, "pair color before 'v' and 'colors' lines")
            if len(nums) != 3:
                raise ValuedGraphFormatError(n, "expected 'c <i> <j> <color>'")
            i, j, c = nums
            if not 0 <= i < j < v:
                raise ValuedGraphFormatError(n, f"need 0 <= i < j < {v}, got {i} {j}")
            if not 0 <= c < m:
                raise ValuedGraphFormatError(n, f"color {c} outside 0..{m - 1}")
            r = pair_rank(i, j)
            if r in colors:
                raise ValuedGraphFormatError(n, f"duplicate pair {i} {j} (first on line {first_seen[r]})")
            colors[r] = c
            first_seen[r] = n
        else:
            raise ValuedGraphFormatError(n, f"unknown record {tag!r}")
    if v is None or m is None:
        raise ValuedGraphFormatError(0, "missing 'v' or 'colors' line")
    missing = [p for p in _pairs(v) if pair_rank(*p) not in colors]
    if missing:
        i, j = missing[0]
        raise ValuedGraphFormatError(0, f"{len(missing)} pair(s) without a color, first {i} {j}")
    return ValuedGraph(v, m, tuple(colors[r] for r in range(binomial(v, 2))))


def read_valued_graph(path) -> ValuedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_valued_graph(fh.read())


def write_valued_graph(G: ValuedGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_valued_graph(G))
