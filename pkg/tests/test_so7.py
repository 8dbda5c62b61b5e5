from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mindeg.exactlinalg import (
    GQ_I, GQ_ONE, GaussianRational, SpanBuilder, intersect_spans, span_rank,
    spans_equal,
)
from mindeg.so7 import (
    b3_eps_coords, build_tables, e_matrix, epsilon, g2_closure_basis,
    g2_eps_coords, run_appendix_checks,
)


def test_gaussian_rational_field_ops():
    a = GaussianRational.of(1, 2)
    b = GaussianRational.of(3, -1)
    assert a + b == GaussianRational.of(4, 1)
    assert a * b == GaussianRational.of(5, 5)
    assert (a / b) * b == a
    assert a - a == GaussianRational.of(0)
    assert not (a - a)
    assert a.conjugate() == GaussianRational.of(1, -2)
    assert GQ_I * GQ_I == GaussianRational.of(-1)
    with pytest.raises(ZeroDivisionError):
        a / GaussianRational.of(0)


def test_span_builder_and_intersection():
    dim = 3
    zero = GaussianRational.of(0)
    e1 = (GQ_ONE, zero, zero)
    e2 = (zero, GQ_ONE, zero)
    e3 = (zero, zero, GQ_ONE)
    plus = tuple(a + b for a, b in zip(e1, e2))
    sb = SpanBuilder(dim)
    assert sb.add(e1) and sb.add(e2) and not sb.add(plus)
    assert sb.rank == 2
    assert sb.contains(plus) and not sb.contains(e3)
    inter = intersect_spans((e1, e2), (plus, e3), dim)
    assert spans_equal(inter, (plus,), dim)
    assert span_rank((e1, e2, e3, plus), dim) == 3


def test_e_matrix_rules_examples():
    assert e_matrix(5, 5).is_zero
    assert (e_matrix(1, 2).bracket(e_matrix(2, 3)) - e_matrix(1, 3)).is_zero
    assert e_matrix(1, 2).bracket(e_matrix(3, 4)).is_zero
    assert (e_matrix(1, 2) + e_matrix(2, 1)).is_zero
    with pytest.raises(IndexError):
        e_matrix(0, 3)
    with pytest.raises(IndexError):
        e_matrix(1, 8)


def test_epsilon_elements_are_skew():
    for k in (1, 2, 3):
        assert epsilon(k).is_skew
    with pytest.raises(IndexError):
        epsilon(4)


def test_table_holds_all_root_vectors():
    t = build_tables()
    assert len(t.b3) == 18
    assert len(t.g2) == 12


def test_highest_g2_vector_is_a_b3_vector():
    t = build_tables()
    assert (t.g2[(3, 2)] - t.b3[(1, 1, 0)]).is_zero
    assert (t.g2[(-3, -2)] - t.b3[(-1, -1, 0)]).is_zero


def test_negative_vectors_are_conjugates():
    t = build_tables()
    minus = t.b3[(0, 0, -1)]
    plus = e_matrix(1, 6) - e_matrix(1, 7).scale(GQ_I)
    assert (plus.conjugate() - minus).is_zero
    assert (plus - e_matrix(1, 6) + e_matrix(1, 7).scale(GQ_I)).is_zero


def test_short_simple_g2_vector_formula():
    t = build_tables()
    want = t.b3[(0, 1, 1)].scale(GaussianRational.of(0, 2)) + t.b3[(1, 1, 2)]
    assert (t.g2[(1, 0)] - want).is_zero


def test_eps_coordinate_maps():
    assert b3_eps_coords((1, 0, 0)) == (1, -1, 0)
    assert b3_eps_coords((1, 2, 2)) == (1, 1, 0)
    assert g2_eps_coords((0, 1)) == (Fraction(0), Fraction(-1), Fraction(-1))
    assert g2_eps_coords((3, 2)) == (Fraction(1), Fraction(0), Fraction(-1))


def test_g2_closure_is_fourteen_dimensional():
    assert len(g2_closure_basis()) == 14


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_conjugation_commutes_with_brackets(data):
    t = build_tables()
    mats = sorted(t.b3.items()) + sorted(t.g2.items())
    a = data.draw(st.sampled_from(mats))[1]
    b = data.draw(st.sampled_from(mats))[1]
    lhs = a.conjugate().bracket(b.conjugate())
    assert (lhs - a.bracket(b).conjugate()).is_zero


def test_matrix_algebra_identities():
    t = build_tables()
    x, y = t.b3[(1, 0, 0)], t.b3[(0, 1, 0)]
    assert (x.bracket(y) + y.bracket(x)).is_zero
    assert (x.transpose() + x).is_zero  # skew
    assert ((x + y) - (y + x)).is_zero
    assert (x.scale(2) - x - x).is_zero


def test_full_checklist_passes():
    results = run_appendix_checks()
    names = [r.check_name for r in results]
    assert len(names) == len(set(names))
    for r in results:
        assert r.passed, f"{r.check_name}: {r.witness}"
