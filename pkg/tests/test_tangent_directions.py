import itertools

import pytest

from mindeg.cascade import cascade_roots
from mindeg.curve_nbhd import borel, lifting, minimal_degrees, point_class_degree
from mindeg.exceptions import ExceptionalCaseError, NotMinimalDegreeError
from mindeg.parabolic import Parabolic
from mindeg.root_system import bilinear, build_root_system, coroot_pairing
from mindeg.tangent_directions import (
    VERDICT_DENSE_G_ORBIT, VERDICT_ONLY_AUT_X, additional_tangent_directions,
    associated_pair, coroot_pairing_bound_holds, is_exceptional_triple,
    key_inequality, pair_map_is_injective, quasi_homogeneity_verdict,
    tangent_direction_sets, tangent_directions,
    weighted_pair_count_identity_holds,
)

SWEEP_TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "D3", "F4", "G2"]
SIMPLY_LACED = ["A1", "A2", "A3", "A4", "D4"]


def all_parabolics(rs):
    for r in range(rs.rank + 1):
        for combo in itertools.combinations(range(1, rs.rank + 1), r):
            yield Parabolic(rs, frozenset(combo))


def sweep_cases(labels):
    for label in labels:
        rs = build_root_system(label)
        for p in all_parabolics(rs):
            for d in minimal_degrees(p):
                yield p, d


@pytest.fixture(scope="module")
def g2_exception():
    rs = build_root_system("G2")
    return Parabolic(rs, frozenset({2})), (2,)


def test_tangent_directions_exceptional_case(g2_exception):
    p, d = g2_exception
    assert {r.coeffs for r in tangent_directions(p, d)} == {
        (-1, 0), (-1, -1), (-3, -2)}


def test_tangent_directions_on_the_full_flag_are_the_negated_cascade():
    for label in ("A2", "B2", "B3", "G2"):
        rs = build_root_system(label)
        b = borel(rs)
        for d in minimal_degrees(b):
            casc = cascade_roots(rs, lifting(b, d)).roots
            assert {r.coeffs for r in tangent_directions(b, d)} == {
                tuple(-c for c in a.coeffs) for a in casc}


def test_tangent_directions_empty_at_zero(g2_exception):
    p, _ = g2_exception
    assert tangent_directions(p, (0,)) == ()


def test_associated_pair_exceptional_case(g2, g2_exception):
    p, d = g2_exception
    beta1, beta2 = g2.simple_roots
    alpha_p, gamma_p = associated_pair(p, d, beta1, beta2)
    assert alpha_p.coeffs == (3, 2)
    assert gamma_p.coeffs == (0, 1)
    assert coroot_pairing(beta2, alpha_p) == 1
    diff = tuple(y - x for x, y in zip(alpha_p.coeffs, gamma_p.coeffs))
    assert diff == (-3, -1)
    assert g2.is_root(diff)


def test_associated_pair_rejects_bad_input(g2, g2_exception):
    p, d = g2_exception
    theta1 = g2.root((3, 2))
    with pytest.raises(ValueError):
        associated_pair(p, d, theta1, g2.simple_roots[1])  # (theta1, beta2) > 0


def test_additional_tangent_directions_exceptional_case(g2_exception):
    p, d = g2_exception
    assert [r.coeffs for r in additional_tangent_directions(p, d)] == [(-3, -1)]


def test_no_additional_directions_in_simply_laced_types():
    for label in SIMPLY_LACED[:3]:
        rs = build_root_system(label)
        for p in all_parabolics(rs):
            for d in minimal_degrees(p):
                assert additional_tangent_directions(p, d) == ()


def test_no_additional_directions_on_full_flags():
    rs = build_root_system("B2")
    b = borel(rs)
    for d in minimal_degrees(b):
        assert additional_tangent_directions(b, d) == ()


def test_pair_map_injective_exceptional_case(g2, g2_exception):
    p, d = g2_exception
    assert pair_map_is_injective(p, d)
    casc = [a for a in cascade_roots(g2, lifting(p, d)).roots if p.outside_levi(a)]
    domain = [(a, g) for a in casc for g in p.levi_positive if bilinear(a, g) < 0]
    assert len(domain) == 1  # only (beta1, beta2); (theta1, beta2) pairs positively


@pytest.mark.parametrize("label", ["A2", "A3", "B3", "F4", "G2"])
def test_pair_map_injective_in_sweeps(label):
    for p, d in sweep_cases([label]):
        assert pair_map_is_injective(p, d)


def test_pairing_bound_raises_on_the_exceptional_triple(g2_exception):
    p, d = g2_exception
    with pytest.raises(ExceptionalCaseError) as err:
        coroot_pairing_bound_holds(p, d)
    witnesses = err.value.witness
    assert len(witnesses) == 1
    gamma, alpha, value = witnesses[0]
    assert (gamma.coeffs, alpha.coeffs, value) == ((0, 1), (1, 0), -3)


def test_pairing_bound_holds_off_the_exception(b3):
    p = Parabolic(b3, frozenset({2, 3}))
    assert coroot_pairing_bound_holds(p, point_class_degree(p))
    for p, d in sweep_cases(["A2", "A3", "D3"]):
        assert coroot_pairing_bound_holds(p, d)


def test_weighted_pair_count_identity(g2, g2_exception):
    p, d = g2_exception
    assert weighted_pair_count_identity_holds(p, d)
    casc = [a for a in cascade_roots(g2, lifting(p, d)).roots if p.outside_levi(a)]
    pairings = [coroot_pairing(g, a) for a in casc for g in p.levi_positive]
    assert pairings.count(-3) == 1  # the single weight-3 pair
    for q, d2 in sweep_cases(["F4"]):
        assert weighted_pair_count_identity_holds(q, d2)


def test_key_inequality_exceptional_case(g2_exception):
    p, d = g2_exception
    rep = key_inequality(p, d)
    assert (rep.lhs, rep.rhs, rep.holds, rep.exception) == (5, 4, False, True)


def test_key_inequality_zero_degree(g2_exception):
    p, _ = g2_exception
    rep = key_inequality(p, (0,))
    assert rep.lhs == 0 and rep.holds and not rep.exception


def test_key_inequality_holds_across_b3(b3):
    for p in all_parabolics(b3):
        for d in minimal_degrees(p):
            rep = key_inequality(p, d)
            assert rep.holds and not rep.exception


def test_exceptional_triple_detection(g2, g2_exception):
    p, d = g2_exception
    assert is_exceptional_triple(p, d)
    assert not is_exceptional_triple(p, (1,))
    short_side = Parabolic(g2, frozenset({1}))
    assert not is_exceptional_triple(short_side, point_class_degree(short_side))
    b3 = build_root_system("B3")
    assert not is_exceptional_triple(Parabolic(b3, frozenset({2, 3})), (2,))


def test_verdicts(g2, g2_exception):
    p, d = g2_exception
    v = quasi_homogeneity_verdict(p, d)
    assert v.kind == VERDICT_ONLY_AUT_X
    assert (v.moduli_dim, v.group_dim) == (15, 14)
    short_side = Parabolic(g2, frozenset({1}))
    v2 = quasi_homogeneity_verdict(short_side, point_class_degree(short_side))
    assert v2.kind == VERDICT_DENSE_G_ORBIT and v2.moduli_dim is None
    for q, d2 in sweep_cases(["A3"]):
        assert quasi_homogeneity_verdict(q, d2).kind == VERDICT_DENSE_G_ORBIT
    with pytest.raises(NotMinimalDegreeError):
        quasi_homogeneity_verdict(p, (5,))


def test_exception_detection_agrees_with_inequality_failure():
    # structural detection and inequality failure pick out the same cases
    for p, d in sweep_cases(SWEEP_TYPES):
        rep = key_inequality(p, d)
        assert rep.exception == (not rep.holds)


def test_direction_sets_land_outside_the_levi_and_are_disjoint():
    for p, d in sweep_cases(SWEEP_TYPES):
        sets = tangent_direction_sets(p, d)  # raises on any internal violation
        assert not set(sets.td) & set(sets.td_tilde)
        for r in sets.td + sets.td_tilde:
            assert p.outside_levi(-r)
        assert len(sets.td_tilde) == len(sets.strong_pairs)


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "A4", "B2", "B3", "B4",
                                   "C2", "C3", "C4", "D3", "D4", "F4", "G2"])
def test_two_strong_negative_pairings_force_positive_product(label):
    # exhaustive over positive triples; without the positivity hypothesis the
    # claim fails already in B2 (gamma=-e1-e2, a1=e1, a2=e2 pairs to -2 twice
    # with (a1, a2) = 0), so the literal all-roots form is not testable
    rs = build_root_system(label)
    from mindeg.cascade import strongly_orthogonal
    for g in rs.roots:
        strong = [a for a in rs.roots if coroot_pairing(g, a) < -1]
        for a1 in strong:
            for a2 in strong:
                if g.is_positive and a1.is_positive and a2.is_positive:
                    assert bilinear(a1, a2) > 0, (label, g, a1, a2)
                if a1 != a2 and strongly_orthogonal(a1, a2):
                    raise AssertionError(
                        f"{label}: strongly orthogonal {a1}, {a2} both pair "
                        f"below -1 with {g}")


def test_collisions_of_the_negative_pair_map_share_gamma():
    # on the wider domain (gamma, alpha^vee) < 0, equal images force equal
    # associated pairs and equal gamma
    for p, d in sweep_cases(SWEEP_TYPES):
        rs = p.system
        casc = [a for a in cascade_roots(rs, lifting(p, d)).roots
                if p.outside_levi(a)]
        seen = {}
        for a in casc:
            for g in p.levi_positive:
                if coroot_pairing(g, a) >= 0:
                    continue
                ap, gp = associated_pair(p, d, a, g)
                img = tuple(y - x for x, y in zip(ap.coeffs, gp.coeffs))
                if img in seen:
                    prev_ap, prev_gp, prev_g = seen[img]
                    assert (prev_ap, prev_gp) == (ap, gp)
                    assert prev_g == g
                else:
                    seen[img] = (ap, gp, g)
