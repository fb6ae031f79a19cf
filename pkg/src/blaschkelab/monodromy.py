"""Monodromy permutations of a Blaschke covering and their group structure.

Tracking the base fiber around the loop system yields one permutation per
branch value; these generate the monodromy action of the covering on sheet
labels.  Group-level quantities derived here (transitivity, orbit counts on
ordered pairs, closure size) are conjugation invariant and therefore do not
depend on the arbitrary sheet labeling.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .config import DEFAULTS
from .errors import GroupTooLarge
from .tracking import build_loops, choose_base_point, initial_fiber, loop_permutation

__all__ = [
    "Permutation",
    "MonodromyRep",
    "compute_representation",
    "boundary_product",
    "group_closure",
    "is_transitive",
    "orbital_count",
]


@dataclass(frozen=True)
class Permutation:
    """Permutation of {0, ..., n-1} stored as its image tuple."""

    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation of 0..{len(self.images) - 1}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(i) = self(other(i))."""
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def conjugate(self, relabel: "Permutation") -> "Permutation":
        """relabel o self o relabel^{-1}."""
        return relabel.compose(self).compose(relabel.inverse())

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycle_type(self) -> tuple:
        seen = [False] * self.n
        lengths = []
        for i in range(self.n):
            if seen[i]:
                continue
            length, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))


@dataclass(frozen=True)
class MonodromyRep:
    """Base point, ordered branch values, loop generators, boundary permutation."""

    base: complex
    branch_values: tuple
    generators: tuple
    boundary_perm: Permutation


def compute_representation(b, newton_tol=None, dedup_tol=None, seed=None) -> MonodromyRep:
    """Full monodromy computation: branch data, loops, tracked permutations.

    Generators follow the loop order (ascending argument of branch value
    minus base); the boundary permutation is tracked independently around the
    enclosing circle rather than inferred from the generators.
    """
    data = b.branch_data(dedup_tol=dedup_tol, seed=seed)
    base = choose_base_point(b, data.branch_values)
    fiber0 = initial_fiber(b, base, newton_tol=newton_tol, seed=seed)
    loops = build_loops(b, base, data.branch_values)
    generators = tuple(
        loop_permutation(b, fiber0, loop, newton_tol=newton_tol) for loop in loops.loops
    )
    boundary = loop_permutation(b, fiber0, loops.boundary_loop, newton_tol=newton_tol)
    return MonodromyRep(
        base=base,
        branch_values=loops.branch_values,
        generators=generators,
        boundary_perm=boundary,
    )


def boundary_product(rep: MonodromyRep) -> Permutation:
    """Product of the generators in the order a boundary sweep crosses them.

    The lollipop stems leave the base along straight rays; sweeping
    counterclockwise from the boundary loop's own stem direction (the ray
    from the origin through the base) crosses them in cyclic order of
    arg(branch value - base) relative to arg(base).  Composing the generators
    in that traversal order gives the class of the boundary loop, which
    `compute_representation` verifies by independent tracking.
    """
    n = rep.boundary_perm.n
    if not rep.generators:
        return Permutation.identity(n)
    phi0 = cmath.phase(rep.base) if abs(rep.base) > 0 else 0.0
    order = sorted(
        range(len(rep.generators)),
        key=lambda i: (cmath.phase(rep.branch_values[i] - rep.base) - phi0) % (2.0 * math.pi),
    )
    acc = Permutation.identity(n)
    for i in order:
        acc = rep.generators[i].compose(acc)
    return acc


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def count(self):
        return len({self.find(x) for x in range(len(self.parent))})


def group_closure(generators, cap=None, degree=None):
    """Every element of the generated group, BFS order from the identity.

    An empty generator list yields the trivial group on `degree` points
    (required in that case).  Raises GroupTooLarge when the closure exceeds
    `cap` (default 10!) or the degree exceeds 10.
    """
    cap = DEFAULTS.group_cap if cap is None else cap
    if not generators:
        if degree is None:
            raise ValueError("group_closure needs generators or an explicit degree")
        return [Permutation.identity(degree)]
    n = generators[0].n
    if n > 10:
        raise GroupTooLarge(f"degree {n} exceeds the supported cap (10)")
    identity = Permutation.identity(n)
    seen = {identity.images: identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for gen in generators:
                h = gen.compose(g)
                if h.images not in seen:
                    if len(seen) >= cap:
                        raise GroupTooLarge(f"group closure exceeded cap {cap}")
                    seen[h.images] = h
                    nxt.append(h)
        frontier = nxt
    return list(seen.values())


def is_transitive(generators, n: int) -> bool:
    """Whether the generated group acts transitively on {0, ..., n-1}."""
    uf = _UnionFind(n)
    for g in generators:
        for i in range(n):
            uf.union(i, g(i))
    return uf.count() == 1


def orbital_count(generators, n: int) -> int:
    """Number of orbits on ordered pairs under the coordinate-wise action."""
    uf = _UnionFind(n * n)
    for g in generators:
        for i in range(n):
            for j in range(n):
                uf.union(i * n + j, g(i) * n + g(j))
    return uf.count()
