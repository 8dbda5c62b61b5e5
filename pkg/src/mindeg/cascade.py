"""Cascades of strongly orthogonal roots and their classification.

The cascade of a full-flag minimal degree e is the set of roots occurring in
a greedy decomposition of e. Cascades are sets of pairwise strongly
orthogonal roots (SOS); the classification facts checked here are that every
SOS of maximal cardinality is Weyl-equivalent to the top cascade, and that
cascade sizes are bounded by it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exceptions import (
    ConsistencyError, NotApplicableError, NotMinimalDegreeError, RankTooLargeError,
)
from .curve_nbhd import (
    borel, greedy_decomposition, is_minimal_degree, minimal_degrees,
    point_class_degree,
)
from .parabolic import Degree, is_effective
from .root_system import Root, RootSystem
from .weyl import all_elements, center_elements, longest_element

__all__ = [
    "CascadeSet", "cascade_roots", "full_cascade", "strongly_orthogonal",
    "is_sos", "SosRecord", "enumerate_sos", "mmsos_size",
    "mmsos_unique_up_to_weyl", "cascade_size_bound_holds",
    "max_cascade_forces_point_degree",
]

_SOS_RANK_CAP = 4


@dataclass(frozen=True)
class CascadeSet:
    """Roots occurring in a greedy decomposition of a full-flag minimal degree."""

    degree: Degree
    roots: tuple[Root, ...]

    def __len__(self) -> int:
        return len(self.roots)


def strongly_orthogonal(alpha: Root, gamma: Root) -> bool:
    """Neither the sum nor the difference is a root or zero."""
    rs = alpha.system
    total = tuple(a + g for a, g in zip(alpha.coeffs, gamma.coeffs))
    diff = tuple(a - g for a, g in zip(alpha.coeffs, gamma.coeffs))
    for v in (total, diff):
        if not any(v) or rs.is_root(v):
            return False
    return True


def is_sos(roots) -> bool:
    roots = list(roots)
    return all(strongly_orthogonal(a, b)
               for i, a in enumerate(roots) for b in roots[i + 1:])


@lru_cache(maxsize=None)
def cascade_roots(rs: RootSystem, e: Degree) -> CascadeSet:
    if not is_effective(e) or not is_minimal_degree(borel(rs), e):
        raise NotMinimalDegreeError(f"{e} is not a full-flag minimal degree")
    roots = tuple(sorted(set(greedy_decomposition(borel(rs), e)),
                         key=lambda r: r.coeffs))
    if not is_sos(roots):
        raise ConsistencyError(f"cascade of {e} is not strongly orthogonal")
    return CascadeSet(e, roots)


@lru_cache(maxsize=None)
def full_cascade(rs: RootSystem) -> CascadeSet:
    """The cascade of the degree joining two general points of G/B."""
    return cascade_roots(rs, point_class_degree(borel(rs)))


@dataclass(frozen=True)
class SosRecord:
    roots: tuple[Root, ...]
    is_msos: bool
    is_mmsos: bool


@lru_cache(maxsize=None)
def _sos_subsets(rs: RootSystem):
    """All nonempty SOS as ascending index tuples into rs.roots, plus adjacency."""
    n = len(rs.roots)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if strongly_orthogonal(rs.roots[i], rs.roots[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    out = []

    def grow(members: tuple[int, ...], allowed: int) -> None:
        m = allowed
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            fresh = members + (i,)
            out.append(fresh)
            grow(fresh, allowed & adj[i] & ~((1 << (i + 1)) - 1))

    grow((), (1 << n) - 1)
    return tuple(out), tuple(adj)


def enumerate_sos(rs: RootSystem, maximal_only: bool = False) -> tuple[SosRecord, ...]:
    """Every nonempty SOS, flagged as maximal / of maximal cardinality."""
    if rs.rank > _SOS_RANK_CAP:
        raise RankTooLargeError(f"SOS enumeration capped at rank {_SOS_RANK_CAP}")
    subsets, adj = _sos_subsets(rs)
    top = max(len(s) for s in subsets)
    full_mask = (1 << len(rs.roots)) - 1
    records = []
    for members in subsets:
        inside = 0
        common = full_mask
        for i in members:
            inside |= 1 << i
            common &= adj[i]
        msos = (common & ~inside) == 0
        if maximal_only and not msos:
            continue
        records.append(SosRecord(tuple(rs.roots[i] for i in members),
                                 msos, len(members) == top))
    return tuple(records)


def mmsos_size(rs: RootSystem) -> int:
    if rs.rank > _SOS_RANK_CAP:
        raise RankTooLargeError(f"SOS enumeration capped at rank {_SOS_RANK_CAP}")
    subsets, _ = _sos_subsets(rs)
    return max(len(s) for s in subsets)


def mmsos_unique_up_to_weyl(rs: RootSystem) -> bool:
    """Every SOS of maximal cardinality is a Weyl translate of the top cascade."""
    if rs.rank > _SOS_RANK_CAP:
        raise RankTooLargeError(f"orbit search capped at rank {_SOS_RANK_CAP}")
    base = frozenset(r.coeffs for r in full_cascade(rs).roots)
    orbit = {frozenset(w.apply(c) for c in base) for w in all_elements(rs)}
    for rec in enumerate_sos(rs):
        if rec.is_mmsos and frozenset(r.coeffs for r in rec.roots) not in orbit:
            return False
    return True


def cascade_size_bound_holds(rs: RootSystem) -> bool:
    """No cascade is larger than the top cascade."""
    bound = len(full_cascade(rs))
    return all(len(cascade_roots(rs, e)) <= bound
               for e in minimal_degrees(borel(rs)))


def max_cascade_forces_point_degree(rs: RootSystem) -> bool:
    """When w_o is central, only the point-class degree has a full-size cascade."""
    if longest_element(rs) not in center_elements(rs):
        raise NotApplicableError("the longest element is not central")
    top = point_class_degree(borel(rs))
    bound = len(full_cascade(rs))
    return all(e == top
               for e in minimal_degrees(borel(rs))
               if len(cascade_roots(rs, e)) == bound)
