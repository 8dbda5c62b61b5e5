"""Greedy decompositions, curve-neighborhood Weyl elements, minimal degrees.

The search for minimal degrees runs over the componentwise box below the
degree joining two general points, plus a one-step frontier scan that turns
the box bound into a checked assumption (BoundViolationError on escape).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import (
    BoundViolationError, ConsistencyError, LiftingNotFoundError,
    LiftingNotUniqueError, NotMinimalDegreeError, UniquenessViolationError,
)
from .parabolic import Degree, Parabolic, degree_leq, is_effective, project_coroot
from .root_system import Root, RootSystem, root_leq
from .weyl import (
    WeylElement, bruhat_leq, compose, hecke_product, identity, is_negative,
    longest_element, mul_gen, reflection,
)

__all__ = [
    "borel", "maximal_roots", "greedy_decomposition", "is_p_cosmall",
    "curve_neighborhood_element", "is_minimal_degree", "point_class_degree",
    "minimal_degrees", "lifting", "MinimalDegreeRecord",
    "minimal_degree_records", "minimal_coset_representative",
    "is_minimal_coset_representative", "is_maximal_coset_representative",
]


@lru_cache(maxsize=None)
def borel(rs: RootSystem) -> Parabolic:
    return Parabolic(rs, frozenset())


def _check_effective(d: Degree) -> None:
    if not is_effective(d):
        raise ValueError(f"degree {d} is not effective")


@lru_cache(maxsize=None)
def maximal_roots(p: Parabolic, d: Degree) -> tuple[Root, ...]:
    """Maximal elements (root order) among roots whose coroot class is <= d.

    Sorted with the lexicographically largest coefficient vector first, which
    is the deterministic greedy tie-break.
    """
    _check_effective(d)
    cands = [a for a in p.system.positive_roots
             if p.outside_levi(a) and degree_leq(project_coroot(p, a), d)]
    maxima = [a for a in cands
              if not any(b is not a and root_leq(a, b) for b in cands)]
    return tuple(sorted(maxima, key=lambda r: r.coeffs, reverse=True))


@lru_cache(maxsize=None)
def greedy_decomposition(p: Parabolic, d: Degree) -> tuple[Root, ...]:
    """Peel maximal roots off d until nothing is left."""
    _check_effective(d)
    out = []
    cur = d
    while any(cur):
        tops = maximal_roots(p, cur)
        assert tops, "a nonzero effective degree always has a maximal root"
        first = tops[0]
        out.append(first)
        cur = tuple(x - y for x, y in zip(cur, project_coroot(p, first)))
        assert is_effective(cur)
    return tuple(out)


def is_p_cosmall(p: Parabolic, alpha: Root) -> bool:
    """True iff alpha is maximal among the roots of its own coroot class."""
    if not p.outside_levi(alpha):
        return False
    return alpha in maximal_roots(p, project_coroot(p, alpha))


def is_minimal_coset_representative(w: WeylElement, p: Parabolic) -> bool:
    return not any(is_negative(w.images[i]) for i in p.positions)


def is_maximal_coset_representative(w: WeylElement, p: Parabolic) -> bool:
    return all(is_negative(w.images[i]) for i in p.positions)


def minimal_coset_representative(w: WeylElement, p: Parabolic) -> WeylElement:
    """Strip right descents in Delta_P, landing on the shortest element of wW_P."""
    out = w
    while True:
        i = next((k for k in p.positions if is_negative(out.images[k])), None)
        if i is None:
            return out
        out = mul_gen(out, i)


@lru_cache(maxsize=None)
def curve_neighborhood_element(p: Parabolic, d: Degree) -> WeylElement:
    """The Weyl element attached to the degree-d curve neighborhood of 1P."""
    _check_effective(d)
    rs = p.system
    acc = identity(rs)
    for alpha in greedy_decomposition(p, d):
        acc = hecke_product(acc, reflection(rs, alpha))
    acc = hecke_product(acc, p.w_p)
    z = minimal_coset_representative(acc, p)
    if compose(z, p.w_p) != acc:
        raise ConsistencyError(f"curve-neighborhood element of {d} does not split as z * w_P")
    return z


@lru_cache(maxsize=None)
def is_minimal_degree(p: Parabolic, d: Degree) -> bool:
    """No strictly smaller effective degree reaches a Bruhat-larger element."""
    _check_effective(d)
    z = curve_neighborhood_element(p, d)
    for smaller in itertools.product(*(range(c + 1) for c in d)):
        if smaller == d:
            continue
        zs = curve_neighborhood_element(p, smaller)
        if zs.length >= z.length and bruhat_leq(z, zs):
            return False
    return True


@lru_cache(maxsize=None)
def point_class_degree(p: Parabolic) -> Degree:
    """The smallest degree whose curve neighborhood reaches the longest coset.

    Found by coordinate descent from a saturating degree; the enumeration in
    minimal_degrees re-checks minimality and uniqueness over the whole box.
    """
    rs = p.system
    target = compose(longest_element(rs), p.w_p)
    k = len(p.quotient_positions)
    if k == 0:
        if curve_neighborhood_element(p, ()) != target:
            raise ConsistencyError("trivial quotient must reach the longest coset at 0")
        return ()
    start = None
    for b in (1, 2, 4, 8, 16, 32, 64):
        if curve_neighborhood_element(p, (b,) * k) == target:
            start = (b,) * k
            break
    if start is None:
        raise BoundViolationError("no saturating degree below the probe bound 64")
    d = list(start)
    changed = True
    while changed:
        changed = False
        for i in range(k):
            while d[i] > 0:
                trial = tuple(d[:i] + [d[i] - 1] + d[i + 1:])
                if curve_neighborhood_element(p, trial) == target:
                    d[i] -= 1
                    changed = True
                else:
                    break
    return tuple(d)


@lru_cache(maxsize=None)
def minimal_degrees(p: Parabolic) -> tuple[Degree, ...]:
    """All minimal degrees, searched over the box below point_class_degree."""
    rs = p.system
    d_top = point_class_degree(p)
    target = compose(longest_element(rs), p.w_p)
    found = []
    for d in itertools.product(*(range(c + 1) for c in d_top)):
        if d != d_top and curve_neighborhood_element(p, d) == target:
            raise UniquenessViolationError(
                f"{d} below {d_top} also reaches the longest coset")
        if is_minimal_degree(p, d):
            found.append(d)
    for i in range(len(d_top)):
        ranges = [range(c + 1) for c in d_top]
        ranges[i] = range(d_top[i] + 1, d_top[i] + 2)
        for d in itertools.product(*ranges):
            if is_minimal_degree(p, d):
                raise BoundViolationError(
                    f"minimal degree {d} escaped the search box below {d_top}")
    return tuple(sorted(found))


def lifting(p: Parabolic, d: Degree) -> Degree:
    """The full-flag minimal degree e with z_e = z_d * w_P."""
    if not is_minimal_degree(p, d):
        raise NotMinimalDegreeError(f"{d} is not a minimal degree for {p}")
    rs = p.system
    b = borel(rs)
    want = compose(curve_neighborhood_element(p, d), p.w_p)
    matches = [e for e in minimal_degrees(b)
               if curve_neighborhood_element(b, e) == want]
    if not matches:
        raise LiftingNotFoundError(f"no full-flag minimal degree lifts {d}")
    if len(matches) > 1:
        raise LiftingNotUniqueError(f"{d} lifts to each of {matches}")
    return matches[0]


@dataclass(frozen=True)
class MinimalDegreeRecord:
    degree: Degree
    z: WeylElement
    lifting: Degree
    cascade: tuple[Root, ...]


@lru_cache(maxsize=None)
def minimal_degree_records(p: Parabolic) -> tuple[MinimalDegreeRecord, ...]:
    """One record per minimal degree: its Weyl element, lifting, and cascade."""
    b = borel(p.system)
    out = []
    for d in minimal_degrees(p):
        e = lifting(p, d)
        casc = tuple(sorted(set(greedy_decomposition(b, e)), key=lambda r: r.coeffs))
        out.append(MinimalDegreeRecord(d, curve_neighborhood_element(p, d), e, casc))
    return tuple(out)
