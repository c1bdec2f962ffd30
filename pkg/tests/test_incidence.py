import pytest

from hyperutc.incidence import IncidenceSpec, build_kneser, build_w, is_corank_one_case, wilson_rank
from hyperutc.linalg import BitMatrix, gf2_rank, rational_rank
from hyperutc.numth import binomial

from oracles import colex, inclusion_lists


def test_small_inclusion_matrix():
    w = build_w(v=3, t=1, k=2)
    # columns {0,1}, {0,2}, {1,2}
    assert w.to_lists() == [[1, 1, 0], [1, 0, 1], [0, 1, 1]]


def test_square_inclusion_is_identity():
    for v in range(1, 7):
        for t in range(v + 1):
            assert build_w(v=v, t=t, k=t) == BitMatrix.identity(binomial(v, t))


def test_empty_set_row_is_all_ones():
    assert build_w(v=4, t=0, k=2) == BitMatrix.ones(1, 6)


def test_spec_object_and_keywords_agree():
    assert build_w(IncidenceSpec(6, 2, 3)) == build_w(v=6, t=2, k=3)


@pytest.mark.parametrize("v,t,k", [(3, 2, 1), (3, 1, 4), (-1, 0, 0)])
def test_spec_validation(v, t, k):
    with pytest.raises(ValueError):
        IncidenceSpec(v, t, k)


def test_matches_containment_oracle():
    for v in range(7):
        for t in range(v + 1):
            for k in range(t, v + 1):
                assert build_w(v=v, t=t, k=k).to_lists() == inclusion_lists(v, t, k)


def test_row_and_column_sums():
    for v in range(9):
        for t in range(v + 1):
            for k in range(t, v + 1):
                rows = build_w(v=v, t=t, k=k).to_lists()
                assert all(sum(r) == binomial(v - t, k - t) for r in rows)
                assert all(sum(c) == binomial(k, t) for c in zip(*rows))


def test_kneser_pairs_in_four_is_permutation_matrix():
    a = build_kneser(4, 2)
    assert a.rows == 6
    assert all(sum(r) == 1 for r in a.entries) and all(sum(c) == 1 for c in zip(*a.entries))
    assert rational_rank(a) == 6


def test_kneser_petersen():
    a = build_kneser(5, 2)
    assert a.is_symmetric()
    assert all(sum(r) == 3 for r in a.entries)
    assert sum(map(sum, a.entries)) == 30


def test_kneser_trivial_and_oracle():
    assert build_kneser(3, 0).entries == ((1,),)
    for v in range(7):
        for t in range(v // 2 + 1):
            subs = colex(v, t)
            want = [[int(not set(a) & set(b)) for b in subs] for a in subs]
            assert [list(r) for r in build_kneser(v, t).entries] == want
    with pytest.raises(ValueError):
        build_kneser(5, 3)


@pytest.mark.parametrize("v,t,k,want", [(8, 3, 4, 35), (8, 3, 5, 48), (6, 1, 2, 5), (9, 1, 2, 8)])
def test_wilson_values(v, t, k, want):
    assert wilson_rank(v, t, k, 2) == want
    assert gf2_rank(build_w(v=v, t=t, k=k)) == want


def test_wilson_full_rank_for_large_primes():
    # no C(k-i, t-i) vanishes mod a prime above k, so the sum telescopes to C(v, t)
    for v in range(2, 11):
        for t in range(v // 2 + 1):
            for k in range(t, v - t + 1):
                assert wilson_rank(v, t, k, 11) == binomial(v, t)


def test_wilson_rejects_bad_input():
    with pytest.raises(ValueError):
        wilson_rank(8, 3, 4, 4)
    with pytest.raises(ValueError):
        wilson_rank(8, 3, 6, 2)


@pytest.mark.parametrize("h,k,want", [(2, 4, True), (2, 8, True), (2, 6, False), (3, 6, False),
                                      (4, 8, True), (1, 2, True), (1, 3, False), (4, 4, False)])
def test_corank_one_case_values(h, k, want):
    assert is_corank_one_case(h, k) is want


def test_pairs_in_sextuples_is_not_corank_one():
    assert gf2_rank(build_w(v=10, t=2, k=6)) != binomial(10, 2) - 1
