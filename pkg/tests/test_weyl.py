import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mindeg.root_system import build_root_system
from mindeg.weyl import (
    all_elements, bruhat_leq, center_elements, compose, hecke_product,
    identity, inversion_set, longest_element, reduced_word, simple_reflection,
    weyl_group_order, word_str,
)

from oracles import brute_force_center, subword_bruhat_down_set


def _word_element(rs, word):
    w = identity(rs)
    for i in word:
        w = compose(w, simple_reflection(rs, i))
    return w


def test_compose_examples(a2):
    e = identity(a2)
    s1 = simple_reflection(a2, 0)
    s2 = simple_reflection(a2, 1)
    w = compose(s1, s2)
    assert compose(e, w) == w
    assert compose(s1, s1) == e
    assert w.length == 2
    assert len(inversion_set(w)) == 2


def test_longest_element_examples(g2, b3):
    assert longest_element(g2, ()) == identity(g2)
    w0 = longest_element(g2)
    assert w0.length == 6
    assert all(w0.apply(b).coeffs == (-b.coeffs[0], -b.coeffs[1])
               for b in g2.simple_roots)
    tw0 = longest_element(b3)
    assert tw0.length == 9
    assert all(tw0.apply(b).coeffs == tuple(-c for c in b.coeffs)
               for b in b3.simple_roots)


@pytest.mark.parametrize("l", [1, 2, 3, 4, 5])
def test_longest_element_length_type_a(l):
    rs = build_root_system(f"A{l}")
    assert longest_element(rs).length == l * (l + 1) // 2


def test_longest_element_inversions_cover_parabolic(b3):
    w = longest_element(b3, (1, 2))
    inv = {r.coeffs for r in inversion_set(w)}
    assert inv == {(0, 1, 0), (0, 0, 1), (0, 1, 1), (0, 1, 2)}


def test_bruhat_examples(a2):
    e = identity(a2)
    w0 = longest_element(a2)
    s1 = simple_reflection(a2, 0)
    assert bruhat_leq(e, w0)
    assert not bruhat_leq(w0, e)
    assert bruhat_leq(s1, compose(s1, simple_reflection(a2, 1)))
    assert bruhat_leq(w0, w0)


@pytest.mark.parametrize("label", ["A3", "B3"])
def test_bruhat_matches_subword_oracle(label):
    rs = build_root_system(label)
    group = all_elements(rs)
    for v in group:
        below = subword_bruhat_down_set(v)
        for u in group:
            assert bruhat_leq(u, v) == (u in below), (label, u, v)


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_bruhat_on_dihedral_is_graded_by_length(label):
    # in a dihedral group, u <= v iff u == v or u is strictly shorter
    rs = build_root_system(label)
    group = all_elements(rs)
    for u in group:
        for v in group:
            assert bruhat_leq(u, v) == (u == v or u.length < v.length)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3", "B3"])
def test_inversion_containment_implies_bruhat(label):
    # containment of inversion sets is the weak order, which refines into Bruhat
    rs = build_root_system(label)
    group = all_elements(rs)
    for u in group:
        iu = set(inversion_set(u))
        for v in group:
            if iu <= set(inversion_set(v)):
                assert bruhat_leq(u, v)


def test_hecke_examples(a2):
    e = identity(a2)
    s1 = simple_reflection(a2, 0)
    s2 = simple_reflection(a2, 1)
    assert hecke_product(s1, s1) == s1
    w = compose(s1, s2)
    assert hecke_product(w, e) == w
    assert hecke_product(compose(s1, s2), compose(s2, s1)) == longest_element(a2)


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2", "A3", "B3", "C3"])
def test_hecke_length_and_monotonicity_exhaustive(label):
    rs = build_root_system(label)
    group = all_elements(rs)
    for u in group:
        for v in group:
            h = hecke_product(u, v)
            assert h.length >= max(u.length, v.length)
            additive = compose(u, v).length == u.length + v.length
            assert (h.length == u.length + v.length) == additive
            assert bruhat_leq(u, h)


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_hecke_associative_sampled_f4(data):
    rs = build_root_system("F4")
    words = [data.draw(st.lists(st.integers(0, 3), max_size=8)) for _ in range(3)]
    u, v, w = (_word_element(rs, word) for word in words)
    assert hecke_product(hecke_product(u, v), w) == hecke_product(u, hecke_product(v, w))


def test_reduced_word_roundtrip(b3):
    for w in all_elements(b3):
        word = reduced_word(w)
        assert len(word) == w.length
        assert _word_element(b3, word) == w


def test_word_serialization(a2):
    w0 = longest_element(a2)
    assert word_str(w0) == "1 2 1"
    assert word_str(identity(a2)) == ""


def test_center_examples(g2, a2):
    e, w0 = identity(g2), longest_element(g2)
    assert center_elements(g2) == frozenset({e, w0})
    assert center_elements(a2) == frozenset({identity(a2)})
    a1 = build_root_system("A1")
    assert center_elements(a1) == frozenset(all_elements(a1))


CENTER_TYPES_RANK_LE_4 = ["A1", "A2", "A3", "A4", "B2", "B3", "B4",
                          "C2", "C3", "C4", "D3", "D4", "F4", "G2"]


@pytest.mark.parametrize("label", CENTER_TYPES_RANK_LE_4)
def test_center_matches_brute_force(label):
    rs = build_root_system(label)
    assert center_elements(rs) == brute_force_center(rs)


@pytest.mark.parametrize("label", CENTER_TYPES_RANK_LE_4)
def test_group_enumeration_has_classical_order(label):
    rs = build_root_system(label)
    assert len(all_elements(rs)) == weyl_group_order(rs)
