from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mindeg.exceptions import InadmissibleRankError, MixedRootSystemError
from mindeg.root_system import (
    SimpleType, bilinear, build_root_system, coroot_coefficients,
    coroot_pairing, is_long, is_short, reflect, root_leq,
)
from mindeg.weyl import identity, simple_reflection

from oracles import b3_root_coeffs, g2_root_coeffs, gram_bilinear

ALL_TYPES_RANK_LE_8 = (
    [f"A{l}" for l in range(1, 9)]
    + [f"B{l}" for l in range(2, 9)]
    + [f"C{l}" for l in range(2, 9)]
    + [f"D{l}" for l in range(3, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)

SMALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
               "D3", "D4", "F4", "G2"]


def test_g2_root_set_matches_classical_list(g2):
    assert {r.coeffs for r in g2.roots} == g2_root_coeffs()
    assert len(g2.positive_roots) == 6


def test_b3_root_set_matches_epsilon_model(b3):
    assert {r.coeffs for r in b3.roots} == b3_root_coeffs()
    assert len(b3.positive_roots) == 9


def test_a1_roots():
    a1 = build_root_system("A1")
    assert {r.coeffs for r in a1.roots} == {(1,), (-1,)}


@pytest.mark.parametrize("label", ALL_TYPES_RANK_LE_8)
def test_root_counts(label):
    rs = build_root_system(label)
    counts = {"A": lambda l: l * (l + 1), "B": lambda l: 2 * l * l,
              "C": lambda l: 2 * l * l, "D": lambda l: 2 * l * (l - 1),
              "E": lambda l: {6: 72, 7: 126, 8: 240}[l],
              "F": lambda l: 48, "G": lambda l: 12}
    assert len(rs.roots) == counts[rs.simple_type.family](rs.rank)
    assert 2 * len(rs.positive_roots) == len(rs.roots)


@pytest.mark.parametrize("label", ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H4"])
def test_inadmissible_ranks(label):
    with pytest.raises(InadmissibleRankError):
        build_root_system(label)


def test_cartan_pairing_examples(g2):
    b1, b2 = g2.simple_roots
    assert coroot_pairing(b2, b1) == -3
    assert coroot_pairing(b1, b2) == -1
    theta1 = g2.root((3, 2))
    assert coroot_pairing(b2, theta1) == 1


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_pairing_with_own_coroot_is_two(label):
    rs = build_root_system(label)
    for a in rs.roots:
        assert coroot_pairing(a, a) == 2


def test_reflect_examples(g2):
    b1, b2 = g2.simple_roots
    assert reflect(b1, b1).coeffs == (-1, 0)
    assert reflect(b1, b2).coeffs == (3, 1)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "B3"])
def test_reflect_is_involution(label):
    rs = build_root_system(label)
    for a in rs.roots:
        for lam in rs.roots:
            assert reflect(a, reflect(a, lam)) == lam


def test_root_leq(g2):
    b1, b2 = g2.simple_roots
    theta1 = g2.root((3, 2))
    assert root_leq(b1, theta1)
    assert not root_leq(b1, b2)
    assert root_leq(b2, b2)


def test_mixed_systems_rejected(g2, b3):
    with pytest.raises(MixedRootSystemError):
        bilinear(g2.simple_roots[0], b3.simple_roots[0])


def test_coroot_pairing_is_integral_on_roots():
    for label in SMALL_TYPES:
        rs = build_root_system(label)
        for a in rs.roots:
            for b in rs.roots:
                assert isinstance(coroot_pairing(a, b), int)


def test_coroot_coefficients_example(g2):
    theta1 = g2.root((3, 2))
    assert coroot_coefficients(theta1) == (1, 2)
    highest_short = g2.root((2, 1))
    assert coroot_coefficients(highest_short) == (2, 3)


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_coroot_duality(label):
    # alpha -> 2*alpha/(alpha,alpha), applied twice, returns alpha exactly
    rs = build_root_system(label)
    for a in rs.roots:
        v = tuple(Fraction(x) for x in a.coeffs)
        norm = gram_bilinear(rs, v, v)
        dual = tuple(2 * x / norm for x in v)
        dnorm = gram_bilinear(rs, dual, dual)
        double = tuple(2 * x / dnorm for x in dual)
        assert double == v


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_unbroken_root_strings(label):
    rs = build_root_system(label)
    for a in rs.roots:
        for c in rs.roots:
            if a.coeffs == tuple(-x for x in c.coeffs):
                continue
            if bilinear(a, c) < 0:
                total = tuple(x + y for x, y in zip(a.coeffs, c.coeffs))
                assert rs.is_root(total), (label, a, c)


@settings(max_examples=60, deadline=None)
@given(data=st.data(), label=st.sampled_from(["A2", "B2", "B3", "C3", "F4", "G2"]))
def test_invariance_of_form_under_weyl_action(data, label):
    rs = build_root_system(label)
    word = data.draw(st.lists(st.integers(0, rs.rank - 1), max_size=12))
    w = identity(rs)
    from mindeg.weyl import compose
    for i in word:
        w = compose(w, simple_reflection(rs, i))
    a = data.draw(st.sampled_from(rs.roots))
    b = data.draw(st.sampled_from(rs.roots))
    assert bilinear(w.apply(a), w.apply(b)) == bilinear(a, b)


def test_short_long_classification(g2, b3):
    assert is_short(g2.root((1, 0))) and is_long(g2.root((0, 1)))
    assert is_long(g2.root((3, 2))) and is_short(g2.root((2, 1)))
    assert is_long(b3.root((1, 0, 0))) and is_short(b3.root((0, 0, 1)))


def test_simple_type_parsing():
    assert SimpleType.parse("g2") == SimpleType("G", 2)
    assert str(SimpleType.parse("B10")) == "B10"
    with pytest.raises(InadmissibleRankError):
        SimpleType.parse("X5")
