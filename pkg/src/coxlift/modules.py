"""Degree-wise models of multigraded modules on an affine toric chart.

A module is a functor from the character lattice with the dual-cone
order to finite-dimensional rational vector spaces: a component per
degree plus a transport matrix per comparable pair, composing along
chains.  Variants:

* ``FinitelyPresentedModule`` - cokernel of a relation matrix between
  shifted free modules, evaluated degree by degree.
* ``IndicatorModule`` - zero/one-dimensional components cut out by ray
  inequalities; covers the structure ring, its maximal ideal, simple
  quotients and codivisorial quotients.
* ``FiltrationModule`` - intersections of per-ray filtration steps
  inside a fixed ambient space; transports are inclusions.
* ``ShiftModule`` / ``DirectSumModule`` - degree shifts and sums.

Everything is immutable and hashable, so evaluation is pure and results
may be cached or shipped to worker processes freely.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Optional, Sequence

from .cones import Cone, leq_sigma
from .linalg import (
    Mat,
    Vector,
    coords_in_basis,
    frac_vector,
    rref,
    row_space_basis,
    subspace_le,
)

IntVector = tuple[int, ...]


@dataclass(frozen=True)
class Component:
    """A graded component: dimension plus deterministic basis labels."""

    dim: int
    labels: tuple[str, ...] = ()


def _add(m: Sequence[int], by: Sequence[int]) -> IntVector:
    return tuple(a + b for a, b in zip(m, by))


class GradedModule:
    """Common interface; concrete variants implement the two hooks."""

    cone: Cone

    def component(self, m: Sequence[int]) -> Component:
        m = tuple(int(x) for x in m)
        if len(m) != self.cone.lattice_rank:
            raise ValueError("degree length differs from lattice rank")
        return self._component(m)

    def action(self, m: Sequence[int], m_prime: Sequence[int]) -> Mat:
        m = tuple(int(x) for x in m)
        m_prime = tuple(int(x) for x in m_prime)
        if not leq_sigma(self.cone, m, m_prime):
            raise ValueError(f"{m} is not below {m_prime} in the dual-cone order")
        return self._action(m, m_prime)

    def _component(self, m: IntVector) -> Component:
        raise NotImplementedError

    def _action(self, m: IntVector, m_prime: IntVector) -> Mat:
        raise NotImplementedError


# --------------------------------------------------------------------------
# indicator modules


@dataclass(frozen=True)
class IndicatorConstraint:
    ray: int
    op: str  # "<=" or ">="
    bound: int

    def holds(self, value: int) -> bool:
        if self.op == "<=":
            return value <= self.bound
        if self.op == ">=":
            return value >= self.bound
        raise ValueError(f"unknown op {self.op!r}")


@dataclass(frozen=True)
class IndicatorModule(GradedModule):
    """Support cut out by ray inequalities; identity transports inside.

    ``style`` records the intended structure: submodule-style supports
    are up-closed, quotient-style supports are order-convex (transports
    leaving the support are zero).  Both give the same matrices; the
    style is validated separately by :func:`validate_indicator_style`.
    """

    cone: Cone
    style: str
    constraints: tuple[IndicatorConstraint, ...]
    exclude: tuple[IntVector, ...] = ()

    def __post_init__(self):
        if self.style not in ("submodule", "quotient"):
            raise ValueError("style must be 'submodule' or 'quotient'")
        for c in self.constraints:
            if not 0 <= c.ray < self.cone.ray_count:
                raise ValueError("constraint ray index out of range")
        object.__setattr__(
            self, "exclude", tuple(tuple(int(x) for x in p) for p in self.exclude)
        )

    def in_support(self, m: Sequence[int]) -> bool:
        m = tuple(int(x) for x in m)
        values = self.cone.evaluate(m)
        if not all(c.holds(values[c.ray]) for c in self.constraints):
            return False
        return m not in self.exclude

    def _component(self, m: IntVector) -> Component:
        if self.in_support(m):
            return Component(1, ("1",))
        return Component(0)

    def _action(self, m: IntVector, m_prime: IntVector) -> Mat:
        src = 1 if self.in_support(m) else 0
        tgt = 1 if self.in_support(m_prime) else 0
        if src and tgt:
            return Mat.identity(1)
        return Mat.zero(tgt, src)


def structure_module(cone: Cone) -> IndicatorModule:
    """The chart's coordinate ring as a module over itself."""
    cons = tuple(IndicatorConstraint(i, ">=", 0) for i in range(cone.ray_count))
    return IndicatorModule(cone, "submodule", cons)


def maximal_ideal_module(cone: Cone) -> IndicatorModule:
    """The maximal homogeneous ideal: the monoid minus the origin."""
    cons = tuple(IndicatorConstraint(i, ">=", 0) for i in range(cone.ray_count))
    return IndicatorModule(cone, "submodule", cons, ((0,) * cone.lattice_rank,))


def simple_module(cone: Cone) -> IndicatorModule:
    """One-dimensional quotient concentrated in degree zero."""
    cons = tuple(IndicatorConstraint(i, op, 0)
                 for i in range(cone.ray_count) for op in ("<=", ">="))
    return IndicatorModule(cone, "quotient", cons)


def codivisorial_module(cone: Cone, c: Sequence[int], rays: Sequence[int]) -> IndicatorModule:
    """Quotient supported on {m : l_rho(m) <= -c_rho for rho in rays}."""
    c = tuple(int(x) for x in c)
    cons = tuple(IndicatorConstraint(int(r), "<=", -c[int(r)]) for r in rays)
    return IndicatorModule(cone, "quotient", cons)


def validate_indicator_style(module: IndicatorModule, radius: int = 2) -> None:
    """Check the style rule on all comparable pairs within a cube.

    Submodule-style supports must be up-closed; quotient-style supports
    must be order-convex (the closure condition that makes the
    identity-inside/zero-outside transports compose).
    """
    pts = [tuple(p) for p in product(range(-radius, radius + 1),
                                     repeat=module.cone.lattice_rank)]
    inside = [p for p in pts if module.in_support(p)]
    if module.style == "submodule":
        for m in inside:
            for m2 in pts:
                if leq_sigma(module.cone, m, m2) and not module.in_support(m2):
                    raise ValueError(f"support not up-closed: {m} <= {m2}")
    else:
        for m in inside:
            for m2 in inside:
                if not leq_sigma(module.cone, m, m2):
                    continue
                for mid in pts:
                    if (leq_sigma(module.cone, m, mid)
                            and leq_sigma(module.cone, mid, m2)
                            and not module.in_support(mid)):
                        raise ValueError(
                            f"support not order-convex at {m} <= {mid} <= {m2}")


# --------------------------------------------------------------------------
# finitely presented modules


@dataclass(frozen=True)
class Relation:
    degree: IntVector
    coeffs: tuple[Fraction, ...]


@dataclass(frozen=True)
class FinitelyPresentedModule(GradedModule):
    """Cokernel of relations between generators at fixed degrees.

    A relation at degree e with coefficient vector a identifies
    sum_i a_i * (generator i transported to e) with zero; it may only
    touch generators whose degree lies below e.
    """

    cone: Cone
    generators: tuple[IntVector, ...]
    relations: tuple[Relation, ...] = ()

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        rels = []
        for rel in self.relations:
            deg = tuple(int(x) for x in rel.degree)
            coeffs = frac_vector(rel.coeffs)
            if len(coeffs) != len(gens):
                raise ValueError("relation coefficient count differs from generators")
            for g, a in zip(gens, coeffs):
                if a and not leq_sigma(self.cone, g, deg):
                    raise ValueError(
                        f"relation at {deg} touches generator {g} outside its cone")
            rels.append(Relation(deg, coeffs))
        object.__setattr__(self, "relations", tuple(rels))

    def _data(self, m: IntVector):
        return _fp_quotient_data(self, m)

    def _component(self, m: IntVector) -> Component:
        active, _, pivots, free = self._data(m)
        return Component(len(free), tuple(f"g{active[f]}" for f in free))

    def _action(self, m: IntVector, m_prime: IntVector) -> Mat:
        active_s, _, _, free_s = self._data(m)
        active_t, red_t, pivots_t, free_t = self._data(m_prime)
        pos = {g: i for i, g in enumerate(active_t)}
        cols = []
        for f in free_s:
            vec = [Fraction(0)] * len(active_t)
            vec[pos[active_s[f]]] = Fraction(1)
            cols.append(_reduce_to_free_coords(vec, red_t, pivots_t, free_t))
        return Mat(len(free_t), len(free_s),
                   [[cols[j][i] for j in range(len(free_s))] for i in range(len(free_t))])


@lru_cache(maxsize=None)
def _fp_quotient_data(module: FinitelyPresentedModule, m: IntVector):
    active = tuple(i for i, g in enumerate(module.generators)
                   if leq_sigma(module.cone, g, m))
    rows = []
    for rel in module.relations:
        if leq_sigma(module.cone, rel.degree, m):
            rows.append([rel.coeffs[i] for i in active])
    if rows:
        red, pivots = rref(Mat.from_rows(rows, ncols=len(active)))
        red_rows = [tuple(red.rows[i]) for i in range(len(pivots))]
    else:
        red_rows, pivots = [], []
    pivot_set = set(pivots)
    free = tuple(i for i in range(len(active)) if i not in pivot_set)
    return active, tuple(red_rows), tuple(pivots), free


def _reduce_to_free_coords(vec, red_rows, pivots, free):
    work = list(vec)
    for row, p in zip(red_rows, pivots):
        c = work[p]
        if c:
            work = [w - c * r for w, r in zip(work, row)]
    return [work[f] for f in free]


# --------------------------------------------------------------------------
# filtration modules


@dataclass(frozen=True)
class FiltrationStep:
    level: int
    basis: tuple[Vector, ...]


@dataclass(frozen=True)
class RayFiltration:
    """Nondecreasing step function of subspaces with finitely many jumps."""

    steps: tuple[FiltrationStep, ...]

    def space_at(self, level: int) -> tuple[Vector, ...]:
        levels = [s.level for s in self.steps]
        idx = bisect_right(levels, level) - 1
        if idx < 0:
            return ()
        return self.steps[idx].basis


def ray_filtration(jumps: Sequence[tuple[int, Sequence[Sequence]]], ambient: int) -> RayFiltration:
    """Build a filtration from (level, spanning vectors) jump data."""
    steps = []
    for level, vectors in sorted(jumps, key=lambda j: j[0]):
        steps.append(FiltrationStep(int(level), row_space_basis(vectors, ambient)))
    out = []
    for st in steps:
        if out and st.level == out[-1].level:
            out[-1] = st
        else:
            out.append(st)
    return RayFiltration(tuple(out))


def full_at(level: int, ambient: int) -> RayFiltration:
    return ray_filtration([(level, [[1 if i == j else 0 for j in range(ambient)]
                                    for i in range(ambient)])], ambient)


@dataclass(frozen=True)
class FiltrationModule(GradedModule):
    """Components are intersections of per-ray filtration spaces.

    Requires one full filtration per cone ray: zero below the first
    jump, the whole ambient space at the top jump, nested in between.
    """

    cone: Cone
    ambient_dim: int
    filtrations: tuple[tuple[int, RayFiltration], ...]

    def __post_init__(self):
        filt = dict(self.filtrations)
        if sorted(filt) != list(range(self.cone.ray_count)):
            raise ValueError("exactly one filtration per cone ray is required")
        for ray, rf in filt.items():
            if not rf.steps:
                raise ValueError(f"ray {ray}: empty filtration")
            prev: tuple[Vector, ...] = ()
            for st in rf.steps:
                for v in st.basis:
                    if len(v) != self.ambient_dim:
                        raise ValueError("basis vector length differs from ambient dim")
                if not subspace_le(prev, st.basis):
                    raise ValueError(f"ray {ray}: filtration is not nondecreasing")
                prev = st.basis
            if len(rf.steps[-1].basis) != self.ambient_dim:
                raise ValueError(f"ray {ray}: filtration is not full")
        object.__setattr__(self, "filtrations",
                           tuple(sorted(filt.items())))

    def filtration(self, ray: int) -> RayFiltration:
        return dict(self.filtrations)[ray]

    def subspace(self, m: Sequence[int]) -> tuple[Vector, ...]:
        """Canonical basis of the component inside the ambient space."""
        m = tuple(int(x) for x in m)
        return _filtration_subspace(self, m)

    def _component(self, m: IntVector) -> Component:
        basis = self.subspace(m)
        return Component(len(basis), tuple(f"v{i}" for i in range(len(basis))))

    def _action(self, m: IntVector, m_prime: IntVector) -> Mat:
        src = self.subspace(m)
        tgt = self.subspace(m_prime)
        cols = []
        for v in src:
            coords = coords_in_basis(tgt, v)
            if coords is None:
                raise AssertionError("filtration transport left the target space")
            cols.append(coords)
        return Mat(len(tgt), len(src),
                   [[cols[j][i] for j in range(len(src))] for i in range(len(tgt))])


@lru_cache(maxsize=None)
def _filtration_subspace(module: FiltrationModule, m: IntVector) -> tuple[Vector, ...]:
    from .linalg import intersect_row_spaces

    values = module.cone.evaluate(m)
    current = row_space_basis(
        [[1 if i == j else 0 for j in range(module.ambient_dim)]
         for i in range(module.ambient_dim)],
        module.ambient_dim,
    )
    for ray, rf in module.filtrations:
        current = intersect_row_spaces(current, rf.space_at(values[ray]),
                                       module.ambient_dim)
        if not current:
            return ()
    return current


# --------------------------------------------------------------------------
# shifts and sums


@dataclass(frozen=True)
class ShiftModule(GradedModule):
    base: GradedModule
    by: IntVector

    def __post_init__(self):
        object.__setattr__(self, "by", tuple(int(x) for x in self.by))
        if len(self.by) != self.base.cone.lattice_rank:
            raise ValueError("shift length differs from lattice rank")

    @property
    def cone(self) -> Cone:
        return self.base.cone

    def _component(self, m: IntVector) -> Component:
        return self.base.component(_add(m, self.by))

    def _action(self, m: IntVector, m_prime: IntVector) -> Mat:
        return self.base.action(_add(m, self.by), _add(m_prime, self.by))


@dataclass(frozen=True)
class DirectSumModule(GradedModule):
    parts: tuple[GradedModule, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("empty direct sum")
        cone = self.parts[0].cone
        if any(p.cone != cone for p in self.parts):
            raise ValueError("direct sum parts live on different cones")

    @property
    def cone(self) -> Cone:
        return self.parts[0].cone

    def _component(self, m: IntVector) -> Component:
        comps = [p.component(m) for p in self.parts]
        labels = tuple(f"{i}.{lab}" for i, c in enumerate(comps) for lab in c.labels)
        return Component(sum(c.dim for c in comps), labels)

    def _action(self, m: IntVector, m_prime: IntVector) -> Mat:
        blocks = [p.action(m, m_prime) for p in self.parts]
        nrows = sum(b.nrows for b in blocks)
        ncols = sum(b.ncols for b in blocks)
        out = Mat.zero(nrows, ncols)
        r = c = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out.rows[r + i][c + j] = b.rows[i][j]
            r += b.nrows
            c += b.ncols
        return out


# --------------------------------------------------------------------------
# morphisms


class GradedMorphism:
    """Degree-preserving morphism given by a per-degree matrix rule."""

    def __init__(self, source: GradedModule, target: GradedModule,
                 rule: Callable[[IntVector], Mat]):
        if source.cone != target.cone:
            raise ValueError("morphism endpoints live on different cones")
        self.source = source
        self.target = target
        self._rule = rule

    def matrix(self, m: Sequence[int]) -> Mat:
        m = tuple(int(x) for x in m)
        out = self._rule(m)
        want = (self.target.component(m).dim, self.source.component(m).dim)
        if (out.nrows, out.ncols) != want:
            raise ValueError(f"morphism matrix at {m} has shape "
                             f"{(out.nrows, out.ncols)}, expected {want}")
        return out


def morphism(source: GradedModule, target: GradedModule,
             rule: Callable[[IntVector], Mat],
             validate_radius: Optional[int] = 2) -> GradedMorphism:
    """Wrap a matrix rule, checking naturality on a sampled cube."""
    f = GradedMorphism(source, target, rule)
    if validate_radius is not None:
        d = source.cone.lattice_rank
        pts = [tuple(p) for p in product(range(-validate_radius, validate_radius + 1),
                                         repeat=d)]
        for m in pts:
            fm = f.matrix(m)
            for m2 in pts:
                if m2 == m or not leq_sigma(source.cone, m, m2):
                    continue
                lhs = target.action(m, m2).mul(fm)
                rhs = f.matrix(m2).mul(source.action(m, m2))
                if lhs != rhs:
                    raise ValueError(f"naturality fails on {m} <= {m2}")
    return f


def identity_morphism(module: GradedModule) -> GradedMorphism:
    return GradedMorphism(module, module,
                          lambda m: Mat.identity(module.component(m).dim))


def structure_to_simple(cone: Cone) -> GradedMorphism:
    """Canonical quotient from the structure ring onto the simple module."""
    src = structure_module(cone)
    tgt = simple_module(cone)

    def rule(m: IntVector) -> Mat:
        s = src.component(m).dim
        t = tgt.component(m).dim
        if s and t:
            return Mat.identity(1)
        return Mat.zero(t, s)

    return GradedMorphism(src, tgt, rule)


def ideal_to_structure(cone: Cone) -> GradedMorphism:
    """Canonical inclusion of the maximal ideal into the structure ring."""
    src = maximal_ideal_module(cone)
    tgt = structure_module(cone)

    def rule(m: IntVector) -> Mat:
        s = src.component(m).dim
        t = tgt.component(m).dim
        if s and t:
            return Mat.identity(1)
        return Mat.zero(t, s)

    return GradedMorphism(src, tgt, rule)
