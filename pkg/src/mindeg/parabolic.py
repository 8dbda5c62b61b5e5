"""Parabolic data, degrees on X = G/P, and the degree pairings.

Degrees are plain integer tuples over the simple roots outside Delta_P, in
ascending Bourbaki order: the coordinates of a class in the coroot lattice
modulo the Delta_P coroots. A degree is effective iff all coordinates are
nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .exceptions import NotApplicableError
from .root_system import Root, RootSystem, coroot_coefficients, coroot_pairing
from .weyl import WeylElement, longest_element

__all__ = [
    "Degree", "Parabolic", "is_effective", "degree_leq",
    "project_coroot", "c1_vector", "c1_pairing", "dim_x",
    "levi_intersection_check",
]

Degree = tuple  # integer coordinates over Delta \ Delta_P


@dataclass(frozen=True)
class Parabolic:
    """A standard parabolic, fixed by its set of simple roots (Bourbaki, 1-based)."""

    system: RootSystem
    delta_p: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "delta_p", frozenset(self.delta_p))
        bad = [i for i in self.delta_p if not 1 <= i <= self.system.rank]
        if bad:
            raise ValueError(f"simple-root indices out of range: {sorted(bad)}")

    @cached_property
    def positions(self) -> tuple[int, ...]:
        """0-based positions of Delta_P, ascending."""
        return tuple(sorted(i - 1 for i in self.delta_p))

    @cached_property
    def quotient_positions(self) -> tuple[int, ...]:
        """0-based positions of Delta \\ Delta_P, ascending (degree coordinates)."""
        inside = set(self.positions)
        return tuple(i for i in range(self.system.rank) if i not in inside)

    @cached_property
    def levi_roots(self) -> tuple[Root, ...]:
        """R_P: the roots supported on Delta_P."""
        inside = set(self.positions)
        return tuple(r for r in self.system.roots
                     if all(c == 0 or i in inside for i, c in enumerate(r.coeffs)))

    @cached_property
    def levi_positive(self) -> tuple[Root, ...]:
        return tuple(r for r in self.levi_roots if r.is_positive)

    @cached_property
    def levi_positive_set(self) -> frozenset[Root]:
        return frozenset(self.levi_positive)

    @cached_property
    def w_p(self) -> WeylElement:
        return longest_element(self.system, self.positions)

    @cached_property
    def roots_of_p(self) -> frozenset[Root]:
        """R(P) = R+ union R_P, the roots whose root group lies in P."""
        return frozenset(self.system.positive_roots) | frozenset(self.levi_roots)

    @property
    def zero_degree(self) -> Degree:
        return (0,) * len(self.quotient_positions)

    def outside_levi(self, alpha: Root) -> bool:
        """True when alpha lies in R+ \\ R_P+ (for positive alpha)."""
        return alpha.is_positive and alpha not in self.levi_positive_set

    def __repr__(self) -> str:
        return f"Parabolic({self.system.simple_type}, {sorted(self.delta_p)})"


def is_effective(d: Degree) -> bool:
    return all(c >= 0 for c in d)


def degree_leq(d: Degree, e: Degree) -> bool:
    return all(x <= y for x, y in zip(d, e))


@lru_cache(maxsize=None)
def project_coroot(p: Parabolic, alpha: Root) -> Degree:
    """alpha^vee as a degree: expand over simple coroots, drop Delta_P slots."""
    full = coroot_coefficients(alpha)
    return tuple(full[i] for i in p.quotient_positions)


@lru_cache(maxsize=None)
def c1_vector(p: Parabolic) -> tuple[int, ...]:
    """Sum of the roots in R+ \\ R_P+, over the simple-root basis."""
    levi_pos = set(p.levi_positive)
    total = [0] * p.system.rank
    for r in p.system.positive_roots:
        if r not in levi_pos:
            for i, c in enumerate(r.coeffs):
                total[i] += c
    return tuple(total)


def c1_pairing(p: Parabolic, d: Degree) -> int:
    """Pairing of the anticanonical class with an effective degree; linear in d."""
    c1 = c1_vector(p)
    total = 0
    for coord, i in zip(d, p.quotient_positions):
        if coord:
            total += coord * coroot_pairing(c1, p.system.simple_roots[i])
    return total


def dim_x(p: Parabolic) -> int:
    """dim G/P = number of roots in R+ \\ R_P+."""
    return len(p.system.positive_roots) - len(p.levi_positive)


def levi_intersection_check(p: Parabolic) -> bool:
    """Check R_P = {gamma in R(P) : w_o(gamma) in R(P)}.

    Only meaningful when w_o stabilizes R_P; raises NotApplicableError
    otherwise.
    """
    w0 = longest_element(p.system)
    levi = set(p.levi_roots)
    if {w0.apply(r) for r in levi} != levi:
        raise NotApplicableError("w_o does not stabilize R_P")
    rp_from_cut = {g for g in p.roots_of_p if w0.apply(g) in p.roots_of_p}
    return rp_from_cut == levi
