import pytest

from hyperutc.construct import (
    CLASS_A,
    build_thm2_pair,
    default_truncation,
    describe_partition,
    duality_partition,
    duality_partition_exists,
    duality_partition_search,
    extra_edge_count,
    shift_orbits,
    verify_thm2_pair,
)
from hyperutc.decomposition import is_f_constant
from hyperutc.hypergraph import EqualityVerdict, are_k_hypomorphic_utc
from hyperutc.numth import binomial


@pytest.mark.parametrize("r", [2, 4, 8])
def test_duality_partition_is_valid(r):
    part = duality_partition(r)
    assert part.satisfies_duality()
    assert len(part.class_of) == 2**r - 2
    assert len(part.a_class) == len(part.a_prime_class) == 2 ** (r - 1) - 1


def test_duality_partition_for_four_points():
    part = duality_partition(4)
    assert len(part.a_class) == len(part.a_prime_class) == 7
    # orbit {0} -> {1} -> {2} -> {3} alternates starting with A
    assert [part.class_of[1 << i] for i in range(4)] == ["A", "A'", "A", "A'"]
    assert describe_partition(part)[0].startswith("A: {0}")


@pytest.mark.parametrize("r", [2, 4, 8])
def test_shift_orbits_have_even_length(r):
    for k in range(1, r):
        orbits = shift_orbits(r, k)
        assert sum(map(len, orbits)) == binomial(r, k)
        assert all(len(o) % 2 == 0 for o in orbits)


@pytest.mark.parametrize("r", [3, 5, 6, 1])
def test_duality_partition_rejects_non_powers(r):
    with pytest.raises(ValueError):
        duality_partition(r)


@pytest.mark.parametrize("r,want", [(2, True), (3, False), (4, True), (5, False), (6, False)])
def test_existence_matches_exhaustive_search(r, want):
    assert duality_partition_exists(r) is want
    assert (duality_partition_search(r) is not None) is want


@pytest.mark.parametrize("h,r,v", [(2, 2, 8), (3, 2, 9), (4, 4, 13), (5, 4, 13), (3, 2, 5)])
def test_generated_pairs_are_f_constant(h, r, v):
    H, H2 = build_thm2_pair(h, r, v)
    F = range(r)
    assert is_f_constant(H, F) and is_f_constant(H2, F)
    assert H.edges < H2.edges
    assert H2.e - H.e == extra_edge_count(h, r, v)


def test_generated_pair_edges_follow_trace_classes():
    H, H2 = build_thm2_pair(2, 2, 6)
    part = duality_partition(2)
    for e in H.edges:
        assert part.class_of.get(e & 0b11) == CLASS_A
    assert H2.edges - H.edges == {0b11}


@pytest.mark.parametrize("h,r,v", [(2, 3, 8), (2, 4, 8), (3, 1, 8), (3, 2, 4)])
def test_build_rejects_bad_parameters(h, r, v):
    with pytest.raises(ValueError):
        build_thm2_pair(h, r, v)


def test_default_truncation():
    assert default_truncation(2, 2) == 5
    assert default_truncation(4, 4) == 13
    assert default_truncation(5, 4) == 15


def test_verify_small_pair():
    rep = verify_thm2_pair(2, 2, 8)
    assert rep.passed and rep.falsification is None
    assert rep.equality is EqualityVerdict.NEITHER
    assert [c.k for c in rep.checks] == [1, 2, 3]
    assert rep.transfer_applicable


def test_verify_default_truncation():
    rep = verify_thm2_pair(3, 2)
    assert rep.v == 7 and rep.passed


def test_verify_flags_short_truncation():
    rep = verify_thm2_pair(5, 4, 13)
    assert not rep.transfer_applicable
    assert rep.passed


def test_pairs_stop_being_hypomorphic_one_step_later():
    H, H2 = build_thm2_pair(2, 2, 8)
    assert not are_k_hypomorphic_utc(H, H2, 4).holds
    H, H2 = build_thm2_pair(3, 2, 9)
    assert not are_k_hypomorphic_utc(H, H2, 5).holds
