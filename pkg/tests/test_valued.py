import itertools
import random

import pytest

from hyperutc.numth import binomial
from hyperutc.valued import (
    ValuedGraph,
    ValuedGraphFormatError,
    build_moebius_pair,
    build_w3_example,
    color_kernel,
    format_valued_graph,
    induce_valued,
    moebius_color,
    moebius_vertex,
    pair_rank,
    parse_valued_graph,
    preserves_kernel,
    read_valued_graph,
    valued_iso_up_to_symmetric,
    verify_moebius,
    witness_is_consistent,
    write_valued_graph,
)


def random_valued(rng, v, w):
    return ValuedGraph.from_function(v, w, lambda i, j: rng.randrange(w))


def relabel(G, f, sigma):
    inv = [0] * G.v
    for x, y in enumerate(f):
        inv[y] = x
    return ValuedGraph.from_function(G.v, G.num_colors, lambda i, j: sigma[G.color(inv[i], inv[j])])


def brute_force_iso_exists(Ga, Gb):
    return any(preserves_kernel(Ga, Gb, f) for f in itertools.permutations(range(Ga.v)))


def test_pair_rank_is_colex():
    assert [pair_rank(i, j) for j in range(4) for i in range(j)] == list(range(6))
    assert pair_rank(3, 1) == pair_rank(1, 3)
    with pytest.raises(ValueError):
        pair_rank(2, 2)


def test_validation_and_kernel():
    with pytest.raises(ValueError):
        ValuedGraph(3, 2, (0, 1))
    with pytest.raises(ValueError):
        ValuedGraph(3, 2, (0, 1, 2))
    G = ValuedGraph(3, 2, (0, 1, 0))
    assert color_kernel(G).class_sizes() == [1, 2]
    assert induce_valued(G, (0, 2)).colors == (1,)


def test_identity_witness():
    rng = random.Random(31)
    G = random_valued(rng, 5, 3)
    iso = valued_iso_up_to_symmetric(G, G)
    assert iso is not None and witness_is_consistent(G, G, iso)


def test_reflexive_and_symmetric_on_random_instances():
    rng = random.Random(32)
    for _ in range(60):
        v = rng.randint(2, 6)
        w = rng.randint(1, 4)
        G = random_valued(rng, v, w)
        f = rng.sample(range(v), v)
        sigma = rng.sample(range(w), w)
        G2 = relabel(G, f, sigma)
        there = valued_iso_up_to_symmetric(G, G2)
        back = valued_iso_up_to_symmetric(G2, G)
        assert there is not None and back is not None
        assert witness_is_consistent(G, G2, there) and witness_is_consistent(G2, G, back)


def test_agrees_with_kernel_preservation_brute_force():
    rng = random.Random(33)
    for _ in range(150):
        v = rng.randint(2, 5)
        w = rng.randint(1, 3)
        Ga, Gb = random_valued(rng, v, w), random_valued(rng, v, w)
        iso = valued_iso_up_to_symmetric(Ga, Gb)
        assert (iso is not None) == brute_force_iso_exists(Ga, Gb)
        if iso is not None:
            assert witness_is_consistent(Ga, Gb, iso)
            assert preserves_kernel(Ga, Gb, iso.f)
            assert sorted(iso.sigma) == list(range(w))


def test_moebius_encoding():
    assert moebius_vertex(2, 1, 3) == 5
    assert moebius_vertex(3, 0, 3) == 0
    assert moebius_color(1, 2, 3) == 7
    G, G2 = build_moebius_pair(3)
    assert G.v == 6 and G.num_colors == 11
    # the rungs carry color 1, the four pairs between columns 0 and 1 are rewired
    assert all(G.color(2 * i, 2 * i + 1) == 1 for i in range(3))
    diff = [p for p in G.pairs() if G.color(*p) != G2.color(*p)]
    assert sorted(diff) == [(0, 2), (0, 3), (1, 2), (1, 3)]
    with pytest.raises(ValueError):
        build_moebius_pair(2)


def test_moebius_full_graphs_not_isomorphic():
    G, G2 = build_moebius_pair(3)
    assert valued_iso_up_to_symmetric(G, G2) is None
    assert not brute_force_iso_exists(G, G2)


def test_moebius_proper_restrictions_are_isomorphic():
    G, G2 = build_moebius_pair(3)
    for K in itertools.combinations(range(6), 5):
        a, b = induce_valued(G, K), induce_valued(G2, K)
        iso = valued_iso_up_to_symmetric(a, b)
        assert iso is not None and witness_is_consistent(a, b, iso)


def test_verify_moebius_small():
    rep = verify_moebius(3, random.Random(0))
    assert rep.passed
    assert rep.k == 5 and rep.k < rep.color_bound < 5.34
    assert rep.subsets_checked == 6


def test_w3_example_shape():
    G, G2 = build_w3_example(5)
    assert G.num_colors == 3 and G.v == 5
    assert sum(a != b for a, b in zip(G.colors, G2.colors)) == 2
    with pytest.raises(ValueError):
        build_w3_example(2)


def test_text_roundtrip(tmp_path):
    G, G2 = build_moebius_pair(4)
    text = format_valued_graph(G)
    assert parse_valued_graph(text) == G
    assert format_valued_graph(parse_valued_graph(text)) == text
    path = tmp_path / "g.vg"
    write_valued_graph(G2, path)
    assert read_valued_graph(path) == G2
    assert text.splitlines()[:3] == ["v 8", "colors 14", "c 0 1 1"]
    assert len(text.splitlines()) == 2 + binomial(8, 2)


@pytest.mark.parametrize("text,line", [
    ("v 3\ncolors 2\nc 0 1 0\nc 0 2 1\nc 0 1 1\nc 1 2 0\n", 5),
    ("v 3\ncolors 2\nc 0 1 0\nc 0 2 1\n", 0),
    ("v 3\ncolors 2\nc 1 0 0\n", 3),
    ("v 3\ncolors 2\nc 0 1 2\n", 3),
    ("v 3\nc 0 1 0\n", 2),
    ("colors 2\nv x\n", 2),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ValuedGraphFormatError) as info:
        parse_valued_graph(text)
    assert info.value.line == line
