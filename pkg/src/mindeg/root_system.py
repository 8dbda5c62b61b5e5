"""Simple root systems in simple-root coordinates, with an exact invariant form.

Roots are integer coefficient vectors over the base, Bourbaki plate labeling.
The symmetric form is normalized so that short roots have squared length 2;
every quantity consumed downstream is a coroot pairing, which is independent
of that normalization.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .exceptions import InadmissibleRankError, MixedRootSystemError

__all__ = [
    "SimpleType", "Root", "RootSystem", "build_root_system",
    "bilinear", "coroot_pairing", "reflect", "root_leq",
    "coroot_coefficients", "is_long", "is_short",
]

_FAMILIES = "ABCDEFG"

_ROOT_COUNTS = {
    "A": lambda l: l * (l + 1),
    "B": lambda l: 2 * l * l,
    "C": lambda l: 2 * l * l,
    "D": lambda l: 2 * l * (l - 1),
    "E": lambda l: {6: 72, 7: 126, 8: 240}[l],
    "F": lambda l: 48,
    "G": lambda l: 12,
}


def _admissible(family: str, rank: int) -> bool:
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)


@dataclass(frozen=True)
class SimpleType:
    """A simple Lie type, e.g. SimpleType("G", 2)."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILIES or not _admissible(self.family, self.rank):
            raise InadmissibleRankError(f"no simple type {self.family}{self.rank}")

    @classmethod
    def parse(cls, label: str) -> "SimpleType":
        m = re.fullmatch(r"([A-Ga-g])\s*(\d+)", label.strip())
        if not m:
            raise InadmissibleRankError(f"cannot parse simple type {label!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _cartan_matrix(family: str, l: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entry [i][j] = (beta_j, beta_i^vee), Bourbaki labels."""
    C = [[2 if i == j else 0 for j in range(l)] for i in range(l)]
    if family == "D":
        edges = [(i, i + 1) for i in range(l - 2)] + [(l - 3, l - 1)]
    elif family == "E":
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if l >= 7:
            edges.append((5, 6))
        if l == 8:
            edges.append((6, 7))
    else:
        edges = [(i, i + 1) for i in range(l - 1)]
    for i, j in edges:
        C[i][j] = C[j][i] = -1
    if family == "B":
        C[l - 1][l - 2] = -2
    elif family == "C":
        C[l - 2][l - 1] = -2
    elif family == "F":
        C[2][1] = -2
    elif family == "G":
        C[0][1] = -3
    return tuple(tuple(row) for row in C)


def _symmetrizer(cartan: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Minimal positive integers d with d_i * c[i][j] == d_j * c[j][i]."""
    l = len(cartan)
    d: list[Fraction | None] = [None] * l
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(l):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                stack.append(j)
    assert all(x is not None for x in d), "Dynkin diagram must be connected"
    scale = math.lcm(*(x.denominator for x in d))
    ints = [int(x * scale) for x in d]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    assert min(ints) == 1, "short roots are normalized to squared length 2"
    return tuple(ints)


@dataclass(frozen=True)
class Root:
    """A root, as its integer coefficient vector over the simple roots."""

    system: "RootSystem"
    coeffs: tuple[int, ...]

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    @property
    def support(self) -> tuple[int, ...]:
        """Bourbaki (1-based) indices of the simple roots occurring in self."""
        return tuple(i + 1 for i, c in enumerate(self.coeffs) if c != 0)

    def __neg__(self) -> "Root":
        return self.system.root(tuple(-c for c in self.coeffs))

    def __repr__(self) -> str:
        return f"Root({self.system.simple_type}, {list(self.coeffs)})"


class RootSystem:
    """All roots of one simple type; immutable after construction.

    Instances are memoized by type (see build_root_system), so identity
    comparison is the right notion of equality.
    """

    def __init__(self, simple_type: SimpleType):
        self.simple_type = simple_type
        self.rank = simple_type.rank
        self.cartan = _cartan_matrix(simple_type.family, simple_type.rank)
        self.symmetrizer = _symmetrizer(self.cartan)
        coeff_sets = self._generate_coeffs()
        roots = tuple(Root(self, c) for c in sorted(coeff_sets))
        self.roots = roots
        self._index = {r.coeffs: r for r in roots}
        self.positive_roots = tuple(r for r in roots if r.is_positive)
        self.simple_roots = tuple(
            self._index[tuple(1 if k == i else 0 for k in range(self.rank))]
            for i in range(self.rank)
        )
        expected = _ROOT_COUNTS[simple_type.family](simple_type.rank)
        if len(roots) != expected or 2 * len(self.positive_roots) != expected:
            raise AssertionError(f"{simple_type}: got {len(roots)} roots, expected {expected}")
        lengths = {bilinear(r, r) for r in roots}
        self._min_norm = min(lengths)
        self._max_norm = max(lengths)
        assert self._min_norm == 2

    def _generate_coeffs(self) -> set[tuple[int, ...]]:
        l = self.rank
        cartan = self.cartan
        simple = [tuple(1 if k == i else 0 for k in range(l)) for i in range(l)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            fresh = []
            for v in frontier:
                for i in range(l):
                    pair = sum(v[j] * cartan[i][j] for j in range(l) if v[j])
                    if pair == 0:
                        continue
                    w = list(v)
                    w[i] -= pair
                    tw = tuple(w)
                    if tw not in seen:
                        seen.add(tw)
                        fresh.append(tw)
            frontier = fresh
        for v in seen:
            if not (all(c >= 0 for c in v) or all(c <= 0 for c in v)):
                raise AssertionError(f"root {v} is not sign-homogeneous")
        return seen

    def root(self, coeffs) -> Root:
        return self._index[tuple(coeffs)]

    def is_root(self, coeffs) -> bool:
        return tuple(coeffs) in self._index

    @cached_property
    def highest_root(self) -> Root:
        top = [p for p in self.positive_roots
               if all(root_leq(q, p) for q in self.positive_roots)]
        assert len(top) == 1
        return top[0]

    def __repr__(self) -> str:
        return f"RootSystem({self.simple_type})"


@lru_cache(maxsize=None)
def _build(simple_type: SimpleType) -> RootSystem:
    return RootSystem(simple_type)


def build_root_system(t) -> RootSystem:
    """Construct (and memoize) the root system of a simple type.

    Accepts a SimpleType or a label string like "G2" or "B3".
    """
    if isinstance(t, str):
        t = SimpleType.parse(t)
    return _build(t)


def _coeffs(x) -> tuple[int, ...]:
    return x.coeffs if isinstance(x, Root) else tuple(x)


def _system_of(*args) -> RootSystem:
    systems = [a.system for a in args if isinstance(a, Root)]
    if not systems:
        raise TypeError("at least one argument must be a Root")
    for s in systems[1:]:
        if s is not systems[0]:
            raise MixedRootSystemError(
                f"mixed root systems {systems[0].simple_type} and {s.simple_type}")
    return systems[0]


def bilinear(x, y) -> int:
    """The invariant symmetric form (x, y); integral on the root lattice."""
    rs = _system_of(x, y)
    xv, yv = _coeffs(x), _coeffs(y)
    total = 0
    for i, xi in enumerate(xv):
        if not xi:
            continue
        row = rs.cartan[i]
        total += xi * rs.symmetrizer[i] * sum(row[j] * yj for j, yj in enumerate(yv) if yj)
    return total


def coroot_pairing(x, y: Root) -> int:
    """The pairing (x, y^vee) = 2 (x, y) / (y, y); an integer on the root lattice."""
    val = Fraction(2 * bilinear(x, y), bilinear(y, y))
    assert val.denominator == 1
    return int(val)


def reflect(alpha: Root, lam):
    """Reflection of lam in the hyperplane perpendicular to the root alpha."""
    rs = _system_of(alpha, lam) if isinstance(lam, Root) else alpha.system
    lv = _coeffs(lam)
    c = coroot_pairing(lv, alpha)
    out = tuple(l - c * a for l, a in zip(lv, alpha.coeffs))
    return rs.root(out) if isinstance(lam, Root) else out


def root_leq(a: Root, b: Root) -> bool:
    """Partial order with positive cone spanned by the simple roots."""
    _system_of(a, b)
    return all(x <= y for x, y in zip(a.coeffs, b.coeffs))


def coroot_coefficients(alpha: Root) -> tuple[int, ...]:
    """Coefficients of alpha^vee over the simple coroots; integral for roots."""
    rs = alpha.system
    norm = bilinear(alpha, alpha)
    out = []
    for a, d in zip(alpha.coeffs, rs.symmetrizer):
        c = Fraction(2 * a * d, norm)
        assert c.denominator == 1
        out.append(int(c))
    return tuple(out)


def is_short(alpha: Root) -> bool:
    return bilinear(alpha, alpha) == alpha.system._min_norm


def is_long(alpha: Root) -> bool:
    return bilinear(alpha, alpha) == alpha.system._max_norm
