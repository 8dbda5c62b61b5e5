"""Tangent directions attached to a minimal degree, and the key inequality.

For a minimal degree d with lifting e, the tangent directions are the
negative roots -alpha-gamma with alpha in the cascade of e outside the Levi
and gamma in R_P+ or zero. Additional tangent directions arise from pairs
with coroot pairing below -1 via the associated-pair construction. The key
inequality compares (c_1(X), d) - len(z_d) against the number of directions;
it holds everywhere except on one exceptional triple in type G2, which is
exactly where the quasi-homogeneity verdict degrades from the group action
to the full automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exceptions import (
    ConsistencyError, ExceptionalCaseError, NotMinimalDegreeError,
    UniquenessViolationError,
)
from .cascade import cascade_roots
from .curve_nbhd import (
    borel, curve_neighborhood_element, is_minimal_degree, lifting,
    point_class_degree,
)
from .parabolic import Degree, Parabolic, c1_pairing, dim_x
from .root_system import Root, bilinear, coroot_pairing, is_long, is_short
from .weyl import inversion_set, reflection

__all__ = [
    "TangentDirectionSets", "KeyInequalityReport", "QuasiHomogeneityVerdict",
    "VERDICT_DENSE_G_ORBIT", "VERDICT_ONLY_AUT_X",
    "tangent_directions", "associated_pair", "additional_tangent_directions",
    "tangent_direction_sets", "pair_map_is_injective",
    "coroot_pairing_bound_holds", "weighted_pair_count_identity_holds",
    "key_inequality", "is_exceptional_triple", "quasi_homogeneity_verdict",
]

VERDICT_DENSE_G_ORBIT = "DenseGOrbit"
VERDICT_ONLY_AUT_X = "OnlyAutX"


@dataclass(frozen=True)
class TangentDirectionSets:
    td: tuple[Root, ...]
    td_tilde: tuple[Root, ...]
    strong_pairs: tuple[tuple[Root, Root], ...]  # (alpha, gamma) with (gamma, alpha^vee) < -1


@dataclass(frozen=True)
class KeyInequalityReport:
    lhs: int
    rhs: int
    holds: bool
    exception: bool


@dataclass(frozen=True)
class QuasiHomogeneityVerdict:
    kind: str
    moduli_dim: int | None = None
    group_dim: int | None = None


@lru_cache(maxsize=None)
def _cascade_outside_levi(p: Parabolic, d: Degree) -> tuple[Root, ...]:
    e = lifting(p, d)
    return tuple(a for a in cascade_roots(p.system, e).roots if p.outside_levi(a))


def tangent_directions(p: Parabolic, d: Degree) -> tuple[Root, ...]:
    """-alpha-gamma over cascade alpha outside the Levi and gamma in R_P+ or 0."""
    rs = p.system
    out = set()
    for a in _cascade_outside_levi(p, d):
        out.add(-a)
        for g in p.levi_positive:
            s = tuple(x + y for x, y in zip(a.coeffs, g.coeffs))
            if rs.is_root(s):
                out.add(rs.root(tuple(-c for c in s)))
    for r in out:
        if not p.outside_levi(-r):
            raise ConsistencyError(f"tangent direction {r} not in R- \\ R_P-")
    return tuple(sorted(out, key=lambda r: r.coeffs))


def associated_pair(p: Parabolic, d: Degree, alpha: Root, gamma: Root) -> tuple[Root, Root]:
    """The pair (alpha', gamma') attached to (alpha, gamma) with (alpha, gamma) < 0.

    alpha' is the unique cascade root outside the Levi pairing positively with
    gamma; gamma' is -z_e(gamma). The defining properties are re-verified on
    every call and any failure is fatal.
    """
    rs = p.system
    casc = _cascade_outside_levi(p, d)
    if alpha not in casc:
        raise ValueError(f"{alpha} is not a cascade root outside the Levi")
    if gamma not in p.levi_positive_set:
        raise ValueError(f"{gamma} is not in R_P+")
    if bilinear(alpha, gamma) >= 0:
        raise ValueError("associated pairs require (alpha, gamma) < 0")
    primed = [a for a in casc if bilinear(a, gamma) > 0]
    if len(primed) != 1:
        raise UniquenessViolationError(
            f"expected exactly one cascade root pairing positively with {gamma}, got {primed}")
    alpha_p = primed[0]
    e = lifting(p, d)
    z_e = curve_neighborhood_element(borel(rs), e)
    gamma_p = rs.root(tuple(-c for c in z_e.apply(gamma.coeffs)))

    if not gamma_p.is_positive:
        raise ConsistencyError("gamma' must be positive")
    image = z_e.apply(gamma_p)
    if image.is_positive or image not in set(p.levi_roots):
        raise ConsistencyError("z_e(gamma') must land in R_P-")
    if coroot_pairing(gamma, alpha_p) != 1:
        raise ConsistencyError("(gamma, alpha'^vee) must be 1")
    diff = tuple(x - y for x, y in zip(alpha_p.coeffs, gamma_p.coeffs))
    if not rs.is_root(diff) or not p.outside_levi(rs.root(diff)):
        raise ConsistencyError("alpha' - gamma' must be a root in R+ \\ R_P+")

    if coroot_pairing(gamma, alpha) < -1:
        if not (is_short(alpha) and is_long(gamma)):
            raise ConsistencyError("a pairing below -1 forces alpha short, gamma long")
        if coroot_pairing(alpha_p, gamma) != 1:
            raise ConsistencyError("(alpha', gamma^vee) must be 1")
        candidate = rs.root(tuple(-x for x in diff))
        if candidate in set(tangent_directions(p, d)):
            raise ConsistencyError("-alpha' + gamma' may not be a plain tangent direction")
    return alpha_p, gamma_p


@lru_cache(maxsize=None)
def tangent_direction_sets(p: Parabolic, d: Degree) -> TangentDirectionSets:
    """Both direction sets, with the bijectivity and disjointness checks applied."""
    rs = p.system
    casc = _cascade_outside_levi(p, d)
    strong = tuple((a, g) for a in casc for g in p.levi_positive
                   if coroot_pairing(g, a) < -1)
    seen_gamma = {}
    images = []
    for a, g in strong:
        if g in seen_gamma and seen_gamma[g] != a:
            raise ConsistencyError(
                f"two orthogonal cascade roots pair below -1 with {g}")
        seen_gamma[g] = a
        ap, gp = associated_pair(p, d, a, g)
        images.append(rs.root(tuple(y - x for x, y in zip(ap.coeffs, gp.coeffs))))
    td_tilde = set(images)
    if len(td_tilde) != len(strong):
        raise ConsistencyError("the strong pairs do not biject onto the extra directions")
    td = tangent_directions(p, d)
    if td_tilde & set(td):
        raise ConsistencyError("extra tangent directions must avoid the plain ones")
    for r in td_tilde:
        if not p.outside_levi(-r):
            raise ConsistencyError(f"extra tangent direction {r} not in R- \\ R_P-")
    return TangentDirectionSets(
        td, tuple(sorted(td_tilde, key=lambda r: r.coeffs)), strong)


def additional_tangent_directions(p: Parabolic, d: Degree) -> tuple[Root, ...]:
    return tangent_direction_sets(p, d).td_tilde


def pair_map_is_injective(p: Parabolic, d: Degree) -> bool:
    """(alpha, gamma) -> -alpha-gamma is injective into the directions off -cascade.

    The domain is all pairs with (alpha, gamma) < 0; well-definedness of the
    map is part of the check.
    """
    rs = p.system
    casc = _cascade_outside_levi(p, d)
    domain = [(a, g) for a in casc for g in p.levi_positive if bilinear(a, g) < 0]
    allowed = set(tangent_directions(p, d)) - {-a for a in casc}
    images = set()
    for a, g in domain:
        s = tuple(x + y for x, y in zip(a.coeffs, g.coeffs))
        if not rs.is_root(s):
            return False
        img = rs.root(tuple(-c for c in s))
        if img not in allowed:
            return False
        images.add(img)
    return len(images) == len(domain)


def is_exceptional_triple(p: Parabolic, d: Degree) -> bool:
    """Type G2, Delta_P the long simple root, d the point-class degree."""
    rs = p.system
    if (rs.simple_type.family, rs.simple_type.rank) != ("G", 2):
        return False
    long_simple = {i + 1 for i, b in enumerate(rs.simple_roots) if is_long(b)}
    if p.delta_p != frozenset(long_simple):
        return False
    return tuple(d) == point_class_degree(p)


def coroot_pairing_bound_holds(p: Parabolic, d: Degree) -> bool:
    """|(gamma, alpha^vee)| <= 2 over cascade alpha outside the Levi, gamma in R_P+.

    On the unique exceptional triple the bound provably fails with a witness
    value of absolute value 3; that case raises instead of returning False.
    """
    if not is_minimal_degree(p, d):
        raise NotMinimalDegreeError(f"{d} is not a minimal degree")
    if is_exceptional_triple(p, d):
        witness = [(g, a, coroot_pairing(g, a))
                   for a in _cascade_outside_levi(p, d)
                   for g in p.levi_positive
                   if abs(coroot_pairing(g, a)) == 3]
        raise ExceptionalCaseError(
            "the pairing bound fails on the excluded triple", witness=witness)
    return all(abs(coroot_pairing(g, a)) <= 2
               for a in _cascade_outside_levi(p, d)
               for g in p.levi_positive)


def weighted_pair_count_identity_holds(p: Parabolic, d: Degree) -> bool:
    """-sum of (gamma, alpha^vee) over non-inverted gamma equals the weighted counts.

    Weights 1, 2, 3 count the pairs with pairing -1, -2, -3. Off the
    exceptional triple the same total also collapses to the two cardinalities
    card{pairing < 0} + card{pairing < -1}.
    """
    rs = p.system
    casc = _cascade_outside_levi(p, d)
    lhs = 0
    for a in casc:
        inv = set(inversion_set(reflection(rs, a)))
        for g in p.levi_positive:
            if g not in inv:
                lhs -= coroot_pairing(g, a)
    pairings = [coroot_pairing(g, a) for a in casc for g in p.levi_positive]
    weighted = sum({-1: 1, -2: 2, -3: 3}.get(v, 0) for v in pairings)
    ok = lhs == weighted
    if not is_exceptional_triple(p, d):
        collapsed = sum(1 for v in pairings if v < 0) + sum(1 for v in pairings if v < -1)
        ok = ok and lhs == collapsed
    return ok


@lru_cache(maxsize=None)
def key_inequality(p: Parabolic, d: Degree) -> KeyInequalityReport:
    """(c_1(X), d) - len(z_d) against the number of tangent directions."""
    sets = tangent_direction_sets(p, d)
    lhs = c1_pairing(p, d) - curve_neighborhood_element(p, d).length
    rhs = len(sets.td) + len(sets.td_tilde)
    return KeyInequalityReport(lhs, rhs, lhs <= rhs, is_exceptional_triple(p, d))


def quasi_homogeneity_verdict(p: Parabolic, d: Degree) -> QuasiHomogeneityVerdict:
    """Dense orbit under the group itself, except on the exceptional triple.

    There the moduli space outgrows the group (the dimension witness), and
    only the full automorphism group of X retains a dense orbit.
    """
    if not is_minimal_degree(p, d):
        raise NotMinimalDegreeError(f"{d} is not a minimal degree")
    if is_exceptional_triple(p, d):
        rs = p.system
        return QuasiHomogeneityVerdict(
            VERDICT_ONLY_AUT_X,
            moduli_dim=c1_pairing(p, d) + dim_x(p),
            group_dim=len(rs.roots) + rs.rank,
        )
    return QuasiHomogeneityVerdict(VERDICT_DENSE_G_ORBIT)
