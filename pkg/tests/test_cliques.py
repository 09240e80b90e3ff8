"""Clique values, the validity predicate, and containment."""

import pytest
from hypothesis import given, settings, strategies as st

from tclique import (
    Clique,
    Interval,
    contains,
    format_clique,
    is_delta_gamma_clique,
    is_delta_gamma_clique_direct,
    make_clique,
    parse_clique,
    sort_cliques,
)
from tclique.cliques import canonical_key
from tclique.linkstream import links_from_pairs


def test_interval_basics():
    iv = Interval(2, 7)
    assert iv.length == 5
    assert iv.covers(Interval(3, 6))
    assert not iv.covers(Interval(1, 6))
    assert str(iv) == "[2,7]"
    with pytest.raises(ValueError):
        Interval(5, 4)


def test_clique_invariants():
    with pytest.raises(ValueError):
        make_clique([1], 0, 5)
    with pytest.raises(ValueError):
        Clique((2, 1), Interval(0, 5))
    with pytest.raises(ValueError):
        Clique((1, 1, 2), Interval(0, 5))


def test_canonical_key_examples():
    assert make_clique([2, 1], 3, 6).key() == make_clique([1, 2], 3, 6).key()
    a = make_clique([1, 2], 3, 6, candidates={5})
    b = make_clique([1, 2], 3, 6, candidates={7, 8})
    assert canonical_key(a) == canonical_key(b)
    assert a == b  # candidates excluded from equality
    assert make_clique([1, 2], 3, 6).key() != make_clique([1, 2], 3, 7).key()


def test_text_form_round_trip():
    c = make_clique([3, 1, 2], 2, 5)
    assert format_clique(c) == "1,2,3 [2,5]"
    assert parse_clique("1,2,3 [2,5]") == c
    with pytest.raises(ValueError):
        parse_clique("1 [2,5]")
    with pytest.raises(ValueError):
        parse_clique("1,2 (2,5)")


def test_sort_cliques_order():
    cliques = [
        make_clique([1, 3], 2, 5),
        make_clique([1, 2], 1, 9),
        make_clique([1, 2], 2, 5),
    ]
    assert [format_clique(c) for c in sort_cliques(cliques)] == [
        "1,2 [1,9]",
        "1,2 [2,5]",
        "1,3 [2,5]",
    ]


def test_validity_examples(f1_stream):
    assert is_delta_gamma_clique((1, 2), (1, 5), f1_stream, 3, 2)
    assert not is_delta_gamma_clique((1, 2), (1, 5), f1_stream, 1, 2)
    # window [3,4] holds a single occurrence at delta=1
    assert is_delta_gamma_clique_direct((1, 2), (1, 5), f1_stream, 3, 2)
    assert not is_delta_gamma_clique_direct((1, 2), (1, 5), f1_stream, 1, 2)


def test_validity_zero_length_span():
    stream = links_from_pairs({(1, 2): [4, 4], (1, 3): [4], (2, 3): [4]})
    assert is_delta_gamma_clique((1, 2, 3), (4, 4), stream, 3, 1)
    assert not is_delta_gamma_clique((1, 2, 3), (4, 4), stream, 3, 2)


def test_validity_requires_two_vertices(f1_stream):
    with pytest.raises(ValueError):
        is_delta_gamma_clique((1,), (1, 5), f1_stream, 3, 1)


def test_contains_examples():
    assert contains(make_clique([1, 2], 2, 7), make_clique([1, 2], 3, 6))
    assert contains(make_clique([1, 2, 3], 3, 6), make_clique([1, 2], 3, 6))
    assert not contains(make_clique([1, 2], 3, 6), make_clique([1, 2], 3, 6))
    # reversed roles never hold
    assert not contains(make_clique([1, 2], 3, 6), make_clique([1, 2], 2, 7))
    assert not contains(make_clique([1, 2], 3, 6), make_clique([1, 2, 3], 3, 6))
    # disjoint spans / unrelated vertex sets
    assert not contains(make_clique([1, 2], 0, 3), make_clique([1, 3], 1, 2))


def test_short_subspans_may_lose_validity():
    # validity does not shrink to arbitrary sub-spans: with a sparse pair the
    # full interval is fine while a short slice between occurrences is not
    stream = links_from_pairs({(1, 2): [0, 2, 4]})
    assert is_delta_gamma_clique((1, 2), (0, 4), stream, 2, 1)
    assert not is_delta_gamma_clique((1, 2), (3, 3), stream, 2, 1)


cliques_strategy = st.builds(
    lambda verts, a, length: make_clique(verts, a, a + length),
    st.sets(st.integers(1, 6), min_size=2, max_size=4),
    st.integers(0, 10),
    st.integers(0, 10),
)


@given(cliques_strategy, cliques_strategy, cliques_strategy)
def test_contains_is_a_strict_partial_order(a, b, c):
    assert not contains(a, a)
    if contains(a, b):
        assert not contains(b, a)
    if contains(a, b) and contains(b, c):
        assert contains(a, c)


streams_strategy = st.dictionaries(
    st.tuples(st.integers(1, 4), st.integers(1, 4))
    .filter(lambda p: p[0] != p[1])
    .map(lambda p: (min(p), max(p))),
    st.sets(st.integers(0, 14), min_size=1, max_size=10),
    min_size=1,
    max_size=6,
)


@settings(max_examples=300, deadline=None)
@given(
    streams_strategy,
    st.integers(0, 14),
    st.integers(0, 6),
    st.integers(1, 5),
    st.integers(1, 3),
)
def test_fast_checker_agrees_with_direct_definition(pairs, ta, span, delta, gamma):
    stream = links_from_pairs(pairs)
    tb = ta + span
    verts = sorted({v for pair in pairs for v in pair})
    if len(verts) < 2:
        return
    fast = is_delta_gamma_clique(tuple(verts), (ta, tb), stream, delta, gamma)
    direct = is_delta_gamma_clique_direct(tuple(verts), (ta, tb), stream, delta, gamma)
    assert fast == direct


@settings(max_examples=150, deadline=None)
@given(streams_strategy, st.integers(0, 14), st.integers(0, 8), st.integers(1, 4))
def test_monotone_on_long_subspans_and_vertex_subsets(pairs, ta, span, delta):
    stream = links_from_pairs(pairs)
    tb = ta + span
    verts = tuple(sorted({v for pair in pairs for v in pair}))
    if len(verts) < 2:
        return
    if not is_delta_gamma_clique(verts, (ta, tb), stream, delta, 1):
        return
    # every sub-span at least delta long stays valid
    for a in range(ta, tb + 1):
        for b in range(a, tb + 1):
            if b - a >= delta:
                assert is_delta_gamma_clique(verts, (a, b), stream, delta, 1)
    # every vertex subset of size >= 2 stays valid
    if len(verts) > 2:
        sub = verts[:-1]
        assert is_delta_gamma_clique(sub, (ta, tb), stream, delta, 1)


def test_gamma_one_matches_plain_delta_window_check():
    # separately coded delta-clique pair predicate: a link in every window
    def plain_pair_ok(occ, ta, tb, delta):
        for tau in range(ta, max(tb - delta, ta) + 1):
            hi = min(tau + delta, tb)
            if not any(tau <= t <= hi for t in occ):
                return False
        return True

    import random

    rng = random.Random(7)
    for _ in range(300):
        occ = sorted(rng.sample(range(0, 15), rng.randint(1, 6)))
        stream = links_from_pairs({(1, 2): occ})
        ta = rng.randint(0, 14)
        tb = rng.randint(ta, 14)
        delta = rng.randint(1, 5)
        assert is_delta_gamma_clique(
            (1, 2), (ta, tb), stream, delta, 1
        ) == plain_pair_ok(occ, ta, tb, delta)
