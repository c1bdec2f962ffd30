import itertools
import random

import pytest
from hypothesis import given, settings

from hyperutc.construct import build_thm2_pair
from hyperutc.decomposition import (
    Partition,
    components,
    equiv,
    is_constant_block,
    is_f_constant,
    is_monomorphic_decomposition,
    minimum_constant_support,
)
from hyperutc.hypergraph import Hypergraph, complement, is_isomorphic
from hyperutc.numth import mask_to_subset

from conftest import all_hypergraphs, hypergraphs, random_hypergraph
from oracles import constant_block_literal, set_partitions

STAR = Hypergraph.from_edges(4, 2, [(0, 1), (0, 2), (0, 3)])


def test_partition_canonical_form():
    p = Partition.of(5, [[4, 2], [3], [1, 0]])
    assert p.blocks == ((0, 1), (2, 4), (3,))
    for bad in ([[0, 1], [1, 2]], [[0, 1]], [[0, 1, 2], []], [[0, 1, 5], [2]]):
        with pytest.raises(ValueError):
            Partition.of(3, bad)
    assert Partition.singletons(3).is_finer_than(Partition.of(3, [[0, 1, 2]]))
    assert not Partition.of(3, [[0, 1], [2]]).is_finer_than(Partition.of(3, [[0, 2], [1]]))


def test_equiv_examples():
    assert equiv(STAR, 2, 2)
    assert equiv(STAR, 1, 2)
    assert not equiv(STAR, 0, 1)
    with pytest.raises(ValueError):
        equiv(STAR, 0, 4)


def test_components_examples():
    assert components(Hypergraph.complete(5, 2)).blocks == ((0, 1, 2, 3, 4),)
    assert components(Hypergraph.empty(5, 3)).blocks == ((0, 1, 2, 3, 4),)
    assert components(STAR).blocks == ((0,), (1, 2, 3))


def test_f_constant_examples():
    assert is_f_constant(STAR, range(4))
    assert is_f_constant(Hypergraph.complete(4, 2), ())
    assert is_f_constant(STAR, (0,))
    assert not is_f_constant(STAR, ())
    with pytest.raises(ValueError):
        is_f_constant(STAR, (5,))


def test_monomorphic_examples():
    assert is_monomorphic_decomposition(STAR, components(STAR))
    assert is_monomorphic_decomposition(STAR, Partition.singletons(4))
    assert not is_monomorphic_decomposition(STAR, Partition.of(4, [[0, 1], [2, 3]]))
    with pytest.raises(ValueError):
        is_monomorphic_decomposition(STAR, Partition.singletons(5))


def test_minimum_support_examples():
    assert minimum_constant_support(Hypergraph.complete(5, 2)) == ((), 0)
    assert minimum_constant_support(STAR) == ((0,), 1)
    H, _ = build_thm2_pair(2, 2, 8)
    assert minimum_constant_support(H) == ((0, 1), 2)


def test_equiv_is_transitive():
    rng = random.Random(11)
    for _ in range(60):
        v = rng.randint(2, 7)
        h = rng.randint(1, min(3, v))
        H = random_hypergraph(rng, v, h, rng.choice([0.1, 0.5, 0.9]))
        rel = {(x, y): equiv(H, x, y) for x in range(v) for y in range(v)}
        for x, y, z in itertools.product(range(v), repeat=3):
            if rel[x, y] and rel[y, z]:
                assert rel[x, z]
            assert rel[x, y] == rel[y, x]


def test_components_match_full_relation():
    rng = random.Random(12)
    for _ in range(60):
        v = rng.randint(1, 7)
        h = rng.randint(1, min(3, v))
        H = random_hypergraph(rng, v, h, rng.choice([0.1, 0.5, 0.9]))
        for block_a, block_b in itertools.combinations_with_replacement(components(H).blocks, 2):
            for x in block_a:
                for y in block_b:
                    assert equiv(H, x, y) == (block_a == block_b)


def test_components_of_complement_coincide():
    for v in range(1, 7):
        for h in (1, 2, 3):
            if h > v or (v, h) == (6, 3):  # 2^20 hypergraphs, covered by the random test
                continue
            for H in all_hypergraphs(v, h):
                assert components(H) == components(complement(H))


@settings(max_examples=100)
@given(hypergraphs(max_v=6))
def test_components_of_complement_coincide_random(H):
    assert components(H) == components(complement(H))


def test_isomorphism_transports_components():
    rng = random.Random(13)
    for _ in range(80):
        v = rng.randint(1, 7)
        h = rng.randint(1, min(3, v))
        H = random_hypergraph(rng, v, h, rng.choice([0.1, 0.5, 0.9]))
        perm = rng.sample(range(v), v)
        H2 = Hypergraph(v, h, frozenset(sum(1 << perm[x] for x in mask_to_subset(e)) for e in H.edges))
        f = is_isomorphic(H, H2)
        image = Partition.of(v, [[f[x] for x in b] for b in components(H).blocks])
        assert image == components(H2)


def test_constant_block_matches_literal_check():
    rng = random.Random(14)
    for _ in range(40):
        v = rng.randint(1, 6)
        h = rng.randint(1, min(3, v))
        H = random_hypergraph(rng, v, h, rng.choice([0.1, 0.5, 0.9]))
        comps = components(H).block_masks()
        for bmask in range(1, 1 << v):
            block = mask_to_subset(bmask)
            literal = constant_block_literal(v, h, H.sorted_edges(), block)
            assert is_constant_block(H, block) == literal
            # a set is a constant block exactly when it lies inside one class
            assert literal == any(bmask & c == bmask for c in comps)


def _graph_constant_block(H, block):
    """Graph criterion: B is a clique or an independent set, and every vertex outside B sees all or none of B."""
    inside = [H.has_edge(p) for p in itertools.combinations(block, 2)]
    if inside and len(set(inside)) > 1:
        return False
    for x in set(range(H.v)) - set(block):
        seen = {H.has_edge(tuple(sorted((x, b)))) for b in block}
        if len(seen) > 1:
            return False
    return True


def test_graph_constant_blocks_are_homogeneous_modules():
    for v in range(1, 6):
        for H in all_hypergraphs(v, 2):
            for bmask in range(1, 1 << v):
                block = mask_to_subset(bmask)
                assert is_constant_block(H, block) == _graph_constant_block(H, block)


def _check_coarsest(H):
    comps = components(H)
    assert is_monomorphic_decomposition(H, comps)
    for blocks in set_partitions(range(H.v)):
        P = Partition.of(H.v, blocks)
        if is_monomorphic_decomposition(H, P):
            assert P.is_finer_than(comps)


def test_components_are_coarsest_decomposition_sampled():
    rng = random.Random(15)
    for _ in range(25):
        v = rng.randint(1, 6)
        h = rng.randint(1, min(3, v))
        _check_coarsest(random_hypergraph(rng, v, h, rng.choice([0.1, 0.5, 0.9])))
