"""Cones over the character lattice and the dual-cone order.

A cone is stored through the primitive linear forms of its rays, acting
on the character lattice M = Z^d.  The order ``m <= m'`` holds when every
ray form is nondecreasing, and for each Cox degree vector ``c`` the set
``P_c = {m : L(m) >= c componentwise}`` is an up-set whose finitely many
minimal points drive every limit computation downstream.

Minimal points are found by a completion search in the style of
Contejean and Devie for minimal nonnegative solutions of homogeneous
linear Diophantine systems: writing ``u = L(m) - c``, the coset
constraint ``u + c in L(M)`` is homogenized with an auxiliary coordinate
capped at one, torsion constraints get slack pairs, and the frontier is
grown breadth-first under the scalar-product criterion with domination
pruning; termination follows from Dickson's lemma.  A plain bounded-box
enumerator is kept alongside as an independent oracle.

Results are memoized per process with no locks: in a worker pool each
worker keeps its own cache, and cached values agree across workers
because every output here is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

from .lattice import (
    IntMatrix,
    IntVector,
    LatticeQuotient,
    int_matrix,
    lattice_membership,
    rational_rank,
    reduce_by_sublattice,
)


@dataclass(frozen=True)
class Cone:
    """Ray data of a polyhedral cone: one primitive integer form per ray."""

    lattice_rank: int
    rays: IntMatrix

    def __post_init__(self):
        rays = int_matrix(self.rays)
        object.__setattr__(self, "rays", rays)
        for row in rays:
            if len(row) != self.lattice_rank:
                raise ValueError("ray length differs from lattice rank")
            if all(x == 0 for x in row):
                raise ValueError("zero ray")
            if math.gcd(*[abs(x) for x in row]) != 1:
                raise ValueError(f"ray {row} is not primitive")

    @property
    def ray_count(self) -> int:
        return len(self.rays)

    @property
    def full_dimensional(self) -> bool:
        return _cone_rank(self) == self.lattice_rank

    @property
    def pointed_dual(self) -> bool:
        # the order is antisymmetric exactly when the forms separate points
        return self.full_dimensional

    def evaluate(self, m: Sequence[int]) -> IntVector:
        if len(m) != self.lattice_rank:
            raise ValueError("vector length differs from lattice rank")
        return tuple(sum(r * x for r, x in zip(row, m)) for row in self.rays)


@dataclass(frozen=True)
class MinimalElements:
    """A complete antichain of order-minimal lattice points of P_c."""

    elements: tuple[IntVector, ...]
    for_degree: IntVector


@lru_cache(maxsize=None)
def _cone_rank(cone: Cone) -> int:
    return rational_rank(cone.rays)


@lru_cache(maxsize=None)
def cone_quotient(cone: Cone) -> LatticeQuotient:
    """Quotient of the Cox degree lattice Z^rays by the image of M."""
    columns = [[cone.rays[i][j] for i in range(cone.ray_count)]
               for j in range(cone.lattice_rank)]
    return reduce_by_sublattice(cone.ray_count, columns)


def leq_sigma(cone: Cone, m: Sequence[int], m_prime: Sequence[int]) -> bool:
    """Dual-cone order: every ray form nondecreasing from m to m_prime."""
    if len(m) != cone.lattice_rank or len(m_prime) != cone.lattice_rank:
        raise ValueError("vector length differs from lattice rank")
    diff = [b - a for a, b in zip(m, m_prime)]
    return all(sum(r * x for r, x in zip(row, diff)) >= 0 for row in cone.rays)


def minimal_nonneg_solutions(
    columns: Sequence[Sequence[int]],
    caps: Optional[dict[int, int]] = None,
    max_level: int = 512,
) -> list[IntVector]:
    """Minimal nonzero nonnegative solutions of sum_i x_i * columns[i] = 0.

    Breadth-first frontier from the unit vectors; a node ``x`` extends
    along coordinate ``i`` only when <Ax, Ae_i> < 0, nodes dominating a
    recorded solution are dropped, and levels advance one unit of the
    1-norm at a time so every surfaced solution is minimal.
    """
    q = len(columns)
    cols = [tuple(int(x) for x in col) for col in columns]
    caps = caps or {}

    def add(value: tuple[int, ...], col: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(value, col))

    minimal: list[tuple[int, ...]] = []
    frontier: dict[tuple[int, ...], tuple[int, ...]] = {}
    for i in range(q):
        if caps.get(i, max_level) < 1:
            continue
        node = tuple(1 if j == i else 0 for j in range(q))
        frontier[node] = cols[i]

    level = 1
    while frontier:
        if level > max_level:
            raise RuntimeError("completion search exceeded the level bound")
        nxt: dict[tuple[int, ...], tuple[int, ...]] = {}
        for node, value in frontier.items():
            if not any(value):
                minimal.append(node)
                continue
            for i in range(q):
                if node[i] >= caps.get(i, max_level):
                    continue
                if sum(v * c for v, c in zip(value, cols[i])) >= 0:
                    continue
                child = list(node)
                child[i] += 1
                child_t = tuple(child)
                if child_t not in nxt:
                    nxt[child_t] = add(value, cols[i])
        frontier = {
            node: value
            for node, value in nxt.items()
            if not any(all(a >= b for a, b in zip(node, sol)) for sol in minimal)
        }
        level += 1
    return minimal


def _pairwise_minimal(vectors: list[IntVector]) -> list[IntVector]:
    out = []
    for v in vectors:
        if any(w != v and all(a <= b for a, b in zip(w, v)) for w in vectors):
            continue
        out.append(v)
    return out


@lru_cache(maxsize=None)
def _minimal_elements_cached(cone: Cone, c: IntVector) -> MinimalElements:
    if not cone.full_dimensional:
        raise ValueError("cone must be full-dimensional; reduce degenerate cones first")
    n = cone.ray_count
    quot = cone_quotient(cone)
    free = quot.free_rows
    torsion = quot.torsion
    n_free = len(free)
    n_tor = len(torsion)
    height = n_free + n_tor

    def value_of(vec: Sequence[int]) -> tuple[int, ...]:
        vals = [sum(r * x for r, x in zip(row, vec)) for row in free]
        vals += [sum(r * x for r, x in zip(row, vec)) for row, _ in torsion]
        return tuple(vals)

    columns: list[tuple[int, ...]] = []
    for i in range(n):
        unit = [0] * n
        unit[i] = 1
        columns.append(value_of(unit))
    t_index = n
    columns.append(value_of(c))
    for j, (_, d) in enumerate(torsion):
        col = [0] * height
        col[n_free + j] = -d
        columns.append(tuple(col))
        col = [0] * height
        col[n_free + j] = d
        columns.append(tuple(col))

    sols = minimal_nonneg_solutions(columns, caps={t_index: 1})
    candidates = _pairwise_minimal(sorted({sol[:n] for sol in sols if sol[t_index] == 1}))
    elements = []
    for u in candidates:
        target = tuple(a + b for a, b in zip(u, c))
        m = lattice_membership(cone.rays, target)
        if m is None:
            raise AssertionError("coset solution left the image lattice")
        elements.append(m)
    return MinimalElements(tuple(sorted(elements)), c)


def minimal_elements(cone: Cone, c: Sequence[int]) -> MinimalElements:
    """The complete finite antichain of order-minimal points of P_c."""
    c = tuple(int(x) for x in c)
    if len(c) != cone.ray_count:
        raise ValueError("degree length differs from ray count")
    return _minimal_elements_cached(cone, c)


def minimal_common_upper_bounds(
    cone: Cone, m: Sequence[int], m_prime: Sequence[int]
) -> MinimalElements:
    """Minimal points dominating both arguments in the dual-cone order."""
    top = tuple(max(a, b) for a, b in zip(cone.evaluate(m), cone.evaluate(m_prime)))
    return minimal_elements(cone, top)


def interior_functional(cone: Cone) -> IntVector:
    """Sum of ray forms; strictly positive on nonzero points of the dual cone."""
    if not cone.full_dimensional:
        raise ValueError("cone must be full-dimensional")
    return tuple(sum(col) for col in zip(*cone.rays))


def strict_interior_point(cone: Cone) -> IntVector:
    """Some m with every ray form at least one: an interior dual-cone point."""
    return minimal_elements(cone, (1,) * cone.ray_count).elements[0]


def box_minimal_oracle(cone: Cone, c: Sequence[int], radius: int) -> tuple[IntVector, ...]:
    """Brute-force oracle: minimal points of P_c within the cube [-radius, radius]^d.

    Independent of the completion search; used to certify its output on
    small instances.
    """
    c = tuple(int(x) for x in c)
    points = []
    for m in product(range(-radius, radius + 1), repeat=cone.lattice_rank):
        if all(v >= b for v, b in zip(cone.evaluate(m), c)):
            points.append(m)
    out = []
    for m in points:
        if any(p != m and leq_sigma(cone, p, m) for p in points):
            continue
        out.append(m)
    return tuple(sorted(out))


def positive_relation_exists(rows: Sequence[Sequence[int]]) -> bool:
    """Whether a nonzero nonnegative combination of the rows vanishes.

    True exactly when the cone spanned by the rows is not strictly convex.
    """
    cols = [tuple(int(x) for x in row) for row in rows]
    return bool(minimal_nonneg_solutions(cols))
