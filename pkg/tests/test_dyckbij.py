"""Tunnels, dominated pairs, the 231 bijection and its inverse."""
from __future__ import annotations

import itertools

import pytest

from matchkit import (
    BoundExceededError,
    DyckWord,
    Matching,
    NoncrossingPair,
    avoids,
    avoids231_by_split,
    base,
    catalan,
    contains,
    count_noncrossing,
    dominates,
    enumerate_bases,
    enumerate_matchings,
    enumerate_noncrossing,
    matching_from_pair,
    parse_matching,
    path_from_matching,
    permutational,
    split_short_long,
    tunnels,
)

from _oracles import perm_contains, tunnel_pairs_by_height

M231 = permutational("231")


def test_tunnels_examples():
    t = tunnels("001011")
    assert t.pairs() == ((1, 3), (2, 1), (3, 2))
    assert tunnels("010101").pairs() == ((1, 1), (2, 2), (3, 3))
    assert tunnels("000111").pairs() == ((1, 3), (2, 2), (3, 1))
    assert tunnels("").pairs() == ()
    assert t.up_for_down == (2, 3, 1)


def test_tunnels_match_height_oracle():
    for m in range(0, 6):
        for w in enumerate_bases(m):
            assert sorted(tunnels(w).pairs()) == tunnel_pairs_by_height(w.bits)


def test_dominates():
    assert dominates("001011", "010101")
    assert not dominates("010101", "001011")
    assert dominates("0011", "0011")
    assert dominates("", "")
    with pytest.raises(ValueError):
        dominates("01", "0011")


def test_noncrossing_pair_type():
    p = NoncrossingPair(DyckWord("001011"), DyckWord("010101"))
    assert str(p.matching()) == "1-3,2-5,4-6"
    with pytest.raises(ValueError):
        NoncrossingPair(DyckWord("010101"), DyckWord("001011"))


def test_matching_from_pair_examples():
    assert str(matching_from_pair("001011", "010101")) == "1-3,2-5,4-6"
    assert str(matching_from_pair("001011", "001011")) == "1-6,2-3,4-5"
    assert matching_from_pair("", "") == Matching(())
    with pytest.raises(ValueError):
        matching_from_pair("010101", "001011")


def test_matching_from_pair_base_is_upper_word():
    for m in range(0, 5):
        for w in enumerate_bases(m):
            for p in enumerate_noncrossing(w):
                assert base(matching_from_pair(w, p)) == w


def test_flat_pairs_encode_231_avoiding_permutations():
    # under the flat base 0^m 1^m the image is permutational and the
    # permutation (read off the tunnels) avoids the one-line pattern 231
    for m in range(0, 6):
        flat = DyckWord("0" * m + "1" * m)
        for p in enumerate_noncrossing(flat):
            match = matching_from_pair(flat, p)
            assert match.l_vertices == tuple(range(1, m + 1))
            pi = tuple(match.partner(i) - m for i in range(1, m + 1))
            assert not perm_contains(pi, (2, 3, 1))


def test_split_short_long_examples():
    s = split_short_long(parse_matching("1-6,2-3,4-5"))
    assert s.pivot == (1, 6)
    assert s.pivot_index == 3
    assert s.short_edges == ((2, 3), (4, 5))
    assert s.long_edges == ()
    assert s.short_before_long

    s = split_short_long(parse_matching("1-3,2-5,4-6"))
    assert s.pivot == (1, 3)
    assert s.pivot_index == 1
    assert s.short_edges == ()
    assert s.long_edges == ((2, 5), (4, 6))

    s = split_short_long(permutational("231"))
    assert s.pivot == (1, 5)
    assert s.short_edges == ((3, 4),)
    assert s.long_edges == ((2, 6),)
    assert not s.short_before_long  # 3 does not precede 2: the 231 witness

    with pytest.raises(ValueError):
        split_short_long(Matching(()))


def test_avoids231_by_split_agrees_with_containment():
    for m in range(0, 5):
        for w in enumerate_bases(m):
            for match in enumerate_matchings(w):
                assert avoids231_by_split(match) == (not contains(match, M231))


def test_path_from_matching_examples():
    assert path_from_matching(parse_matching("1-6,2-3,4-5")).bits == "001011"
    assert path_from_matching(parse_matching("1-3,2-5,4-6")).bits == "010101"
    assert path_from_matching(Matching(())).bits == ""
    with pytest.raises(ValueError, match="231"):
        path_from_matching(permutational("231"))


def test_fully_nested_matching_roundtrips():
    # the image of the nested matching is found by the recursion, not guessed
    for m in range(1, 6):
        nested = Matching(tuple((i, 2 * m + 1 - i) for i in range(1, m + 1)))
        assert avoids(nested, M231)  # no crossings at all
        p = path_from_matching(nested)
        assert matching_from_pair(base(nested), p) == nested


def test_roundtrip_both_ways_small():
    for m in range(0, 5):
        for w in enumerate_bases(m):
            for p in enumerate_noncrossing(w):
                match = matching_from_pair(w, p)
                assert avoids(match, M231)
                assert path_from_matching(match) == p
            for match in enumerate_matchings(w):
                if avoids(match, M231):
                    p = path_from_matching(match)
                    assert dominates(w, p)
                    assert matching_from_pair(w, p) == match


def test_enumerate_noncrossing_examples():
    assert [p.bits for p in enumerate_noncrossing("0011")] == ["0011", "0101"]
    assert [p.bits for p in enumerate_noncrossing("0101")] == ["0101"]
    assert [p.bits for p in enumerate_noncrossing("")] == [""]
    out = [p.bits for p in enumerate_noncrossing("001011")]
    assert out == sorted(out)  # lexicographic
    assert len(out) == count_noncrossing("001011")


def test_count_noncrossing_against_enumeration_and_flat_case():
    for m in range(0, 6):
        for w in enumerate_bases(m):
            assert count_noncrossing(w) == sum(1 for _ in enumerate_noncrossing(w))
        # under the flat word every Dyck word of size m fits
        assert count_noncrossing("0" * m + "1" * m) == catalan(m)


def test_noncrossing_bound_guard():
    with pytest.raises(BoundExceededError):
        count_noncrossing("0" * 99 + "1" * 99)
    with pytest.raises(BoundExceededError):
        list(enumerate_noncrossing("0" * 99 + "1" * 99))


def test_tunnel_table_validation():
    from matchkit import TunnelTable

    with pytest.raises(ValueError):
        TunnelTable(DyckWord("0011"), (1, 1))
