"""The degree-wise lift of a graded module to Cox degrees.

For a Cox degree ``c`` the lift component is the inverse limit of the
module over the up-set ``P_c = {m : L(m) >= c}``.  It is presented as
the subspace of the direct sum of components at the minimal points of
``P_c`` cut out by compatibility at minimal common upper bounds; the
constraints there propagate to all common upper bounds because the
transports factor.  Minimal points with zero component stay in the
presentation on purpose: their constraints can annihilate other
coordinates.

Restriction maps between lift components, lifted morphisms, the
sheafification in the opposite direction (reading off the degrees in
the image of the grading map), the unit and counit of the adjunction,
colimits along interior rays, and box-relative generator detection all
live here.

Degree computations are independent and cached per process; sweeps can
fan out over a worker pool and are merged in degree order, so output is
byte-identical at any pool width.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

from .cones import (
    Cone,
    leq_sigma,
    minimal_common_upper_bounds,
    minimal_elements,
    strict_interior_point,
)
from .linalg import (
    Mat,
    Vector,
    coords_in_basis,
    is_isomorphism,
    kernel_basis,
    rank,
    row_space_basis,
)
from .modules import Component, GradedModule, GradedMorphism

IntVector = tuple[int, ...]


@dataclass(frozen=True)
class LiftComponent:
    """One Cox degree of the lift, presented at the minimal points of P_c."""

    degree: IntVector
    minimal_points: tuple[IntVector, ...]
    block_dims: tuple[int, ...]
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def total_dim(self) -> int:
        return sum(self.block_dims)

    def block_slice(self, i: int) -> slice:
        start = sum(self.block_dims[:i])
        return slice(start, start + self.block_dims[i])


def lift_component(cone: Cone, module: GradedModule, c: Sequence[int]) -> LiftComponent:
    """Inverse limit of the module over P_c, with a canonical echelon basis."""
    c = tuple(int(x) for x in c)
    if len(c) != cone.ray_count:
        raise ValueError("degree length differs from ray count")
    try:
        return _lift_component_cached(cone, module, c)
    except TypeError:
        return _lift_component_impl(cone, module, c)


@lru_cache(maxsize=None)
def _lift_component_cached(cone: Cone, module: GradedModule, c: IntVector) -> LiftComponent:
    return _lift_component_impl(cone, module, c)


def _lift_component_impl(cone: Cone, module: GradedModule, c: IntVector) -> LiftComponent:
    mins = minimal_elements(cone, c).elements
    comps = [module.component(m) for m in mins]
    dims = tuple(comp.dim for comp in comps)
    offsets = [0]
    for d in dims:
        offsets.append(offsets[-1] + d)
    total = offsets[-1]

    rows: list[list[Fraction]] = []
    for i in range(len(mins)):
        for j in range(i + 1, len(mins)):
            if dims[i] == 0 and dims[j] == 0:
                continue
            for u in minimal_common_upper_bounds(cone, mins[i], mins[j]).elements:
                ai = module.action(mins[i], u)
                aj = module.action(mins[j], u)
                for r in range(ai.nrows):
                    row = [Fraction(0)] * total
                    for col in range(dims[i]):
                        row[offsets[i] + col] = ai.rows[r][col]
                    for col in range(dims[j]):
                        row[offsets[j] + col] -= aj.rows[r][col]
                    if any(row):
                        rows.append(row)
    if rows:
        kern = kernel_basis(Mat(len(rows), total, rows))
    else:
        kern = [tuple(Fraction(1) if k == t else Fraction(0) for k in range(total))
                for t in range(total)]
    basis = row_space_basis(kern, total)
    return LiftComponent(c, mins, dims, basis)


def _express_in_component(comp: LiftComponent, vec: Sequence[Fraction]) -> list:
    coords = coords_in_basis(comp.basis, vec)
    if coords is None:
        raise AssertionError("vector left the limit subspace")
    return coords


def lift_action(
    cone: Cone,
    module: GradedModule,
    c: Sequence[int],
    c_prime: Sequence[int],
    source: Optional[LiftComponent] = None,
    target: Optional[LiftComponent] = None,
) -> Mat:
    """Restriction matrix lift_c -> lift_{c'} for c <= c' componentwise.

    Each minimal point of P_{c'} lies above a minimal point of P_c; the
    value there is transported from any dominated one, independent of
    the choice by the limit constraints.
    """
    c = tuple(int(x) for x in c)
    c_prime = tuple(int(x) for x in c_prime)
    if not all(a <= b for a, b in zip(c, c_prime)):
        raise ValueError("degrees are not componentwise comparable")
    src = source if source is not None else lift_component(cone, module, c)
    tgt = target if target is not None else lift_component(cone, module, c_prime)

    transports = []
    for mk in tgt.minimal_points:
        base = None
        for i, mi in enumerate(src.minimal_points):
            if leq_sigma(cone, mi, mk):
                base = i
                break
        if base is None:
            raise AssertionError("minimal point has no dominated predecessor")
        transports.append((base, module.action(src.minimal_points[base], mk)))

    cols = []
    for vec in src.basis:
        stacked: list[Fraction] = []
        for (base, mat) in transports:
            block = list(vec[src.block_slice(base)])
            stacked.extend(mat.vec(block))
        cols.append(_express_in_component(tgt, stacked))
    return Mat(tgt.dim, src.dim,
               [[cols[j][i] for j in range(src.dim)] for i in range(tgt.dim)])


def lift_morphism(cone: Cone, f: GradedMorphism, c: Sequence[int]) -> Mat:
    """Matrix of the lifted morphism at Cox degree c."""
    c = tuple(int(x) for x in c)
    src = lift_component(cone, f.source, c)
    tgt = lift_component(cone, f.target, c)
    mats = [f.matrix(m) for m in src.minimal_points]
    cols = []
    for vec in src.basis:
        stacked: list[Fraction] = []
        for i, mat in enumerate(mats):
            stacked.extend(mat.vec(list(vec[src.block_slice(i)])))
        cols.append(_express_in_component(tgt, stacked))
    return Mat(tgt.dim, src.dim,
               [[cols[j][i] for j in range(src.dim)] for i in range(tgt.dim)])


# --------------------------------------------------------------------------
# Cox-degree rules (Z^n-graded data) and sheafification


class CoxRule:
    """Protocol for Z^rays-graded data: a dim and an action per degree pair."""

    ray_count: int

    def dim(self, c: Sequence[int]) -> int:
        raise NotImplementedError

    def act(self, c: Sequence[int], c_prime: Sequence[int]) -> Mat:
        raise NotImplementedError


@dataclass(frozen=True)
class ShiftedCoxRule(CoxRule):
    """Rule of the shifted Cox ring: dim 1 exactly when c + shift >= 0."""

    ray_count: int
    shift: IntVector

    def __post_init__(self):
        object.__setattr__(self, "shift", tuple(int(x) for x in self.shift))
        if len(self.shift) != self.ray_count:
            raise ValueError("shift length differs from ray count")

    def dim(self, c: Sequence[int]) -> int:
        return 1 if all(a + s >= 0 for a, s in zip(c, self.shift)) else 0

    def act(self, c: Sequence[int], c_prime: Sequence[int]) -> Mat:
        s, t = self.dim(c), self.dim(c_prime)
        if s and t:
            return Mat.identity(1)
        return Mat.zero(t, s)


@dataclass(frozen=True)
class SpikeRule(CoxRule):
    """One-dimensional component at a single Cox degree, zero transports."""

    ray_count: int
    degree: IntVector

    def dim(self, c: Sequence[int]) -> int:
        return 1 if tuple(c) == self.degree else 0

    def act(self, c: Sequence[int], c_prime: Sequence[int]) -> Mat:
        s, t = self.dim(c), self.dim(c_prime)
        if s and t and tuple(c) == tuple(c_prime):
            return Mat.identity(1)
        return Mat.zero(t, s)


@dataclass(frozen=True)
class DirectSumRule(CoxRule):
    parts: tuple[CoxRule, ...]

    @property
    def ray_count(self) -> int:  # type: ignore[override]
        return self.parts[0].ray_count

    def dim(self, c: Sequence[int]) -> int:
        return sum(p.dim(c) for p in self.parts)

    def act(self, c: Sequence[int], c_prime: Sequence[int]) -> Mat:
        blocks = [p.act(c, c_prime) for p in self.parts]
        out = Mat.zero(sum(b.nrows for b in blocks), sum(b.ncols for b in blocks))
        r = col = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out.rows[r + i][col + j] = b.rows[i][j]
            r += b.nrows
            col += b.ncols
        return out


@dataclass(frozen=True)
class SheafifiedModule(GradedModule):
    """The graded module read off a Cox rule along the grading map.

    Component at m is the rule's component at L(m); only degrees in the
    image of L are visible.
    """

    cone: Cone
    rule: CoxRule

    def _component(self, m: IntVector) -> Component:
        d = self.rule.dim(self.cone.evaluate(m))
        return Component(d, tuple(f"s{i}" for i in range(d)))

    def _action(self, m: IntVector, m_prime: IntVector) -> Mat:
        return self.rule.act(self.cone.evaluate(m), self.cone.evaluate(m_prime))


def sheafify_component(cone: Cone, rule, m: Sequence[int]) -> Component:
    """Component of the sheafified data at lattice point m: the rule at L(m)."""
    d = rule.dim(cone.evaluate(tuple(int(x) for x in m)))
    return Component(d, tuple(f"s{i}" for i in range(d)))


def counit_matrix(cone: Cone, module: GradedModule, m: Sequence[int]) -> Mat:
    """The evaluation lift(E)_{L(m)} -> E_m; an isomorphism.

    P_{L(m)} has m as its unique minimal point, so the lift basis
    vectors are literally vectors of E_m.
    """
    m = tuple(int(x) for x in m)
    comp = lift_component(cone, module, cone.evaluate(m))
    if comp.minimal_points != (m,):
        raise AssertionError("expected a unique minimal point at an image degree")
    dim_e = module.component(m).dim
    return Mat(dim_e, comp.dim,
               [[comp.basis[j][i] for j in range(comp.dim)] for i in range(dim_e)])


def unit_map(cone: Cone, rule, c: Sequence[int]) -> Mat:
    """Natural map F_c -> lift(sheafify F)_c for a Cox rule F."""
    c = tuple(int(x) for x in c)
    shf = SheafifiedModule(cone, rule)
    tgt = lift_component(cone, shf, c)
    src_dim = rule.dim(c)
    cols = []
    for j in range(src_dim):
        stacked: list[Fraction] = []
        for m in tgt.minimal_points:
            mat = rule.act(c, cone.evaluate(m))
            stacked.extend(mat.col(j))
        cols.append(_express_in_component(tgt, stacked))
    return Mat(tgt.dim, src_dim,
               [[cols[j][i] for j in range(src_dim)] for i in range(tgt.dim)])


# --------------------------------------------------------------------------
# colimits


@dataclass(frozen=True)
class ColimitResult:
    stabilized: bool
    dim: Optional[int]
    certificate_index: Optional[int]
    dims: tuple[int, ...]


def colimit(cone: Cone, module: GradedModule, horizon: int = 16) -> ColimitResult:
    """Colimit dimension along an interior ray, with a stabilization certificate.

    Walks k * w for an interior dual-cone point w; certifies once three
    consecutive dimensions agree and both connecting maps are
    isomorphisms.  Reports honestly when the horizon is exhausted.
    """
    w = strict_interior_point(cone)
    points = [tuple(k * x for x in w) for k in range(horizon + 1)]
    dims = tuple(module.component(p).dim for p in points)
    for k in range(horizon - 1):
        if dims[k] == dims[k + 1] == dims[k + 2]:
            a1 = module.action(points[k], points[k + 1])
            a2 = module.action(points[k + 1], points[k + 2])
            if is_isomorphism(a1) and is_isomorphism(a2):
                return ColimitResult(True, dims[k], k, dims[: k + 3])
    return ColimitResult(False, None, None, dims)


def colimit_of_lift(cone: Cone, module: GradedModule, horizon: int = 16) -> ColimitResult:
    """Colimit of the lifted module along the all-ones Cox direction."""
    ones = (1,) * cone.ray_count
    degrees = [tuple(k * x for x in ones) for k in range(horizon + 1)]
    comps = [lift_component(cone, module, c) for c in degrees]
    dims = tuple(comp.dim for comp in comps)
    for k in range(horizon - 1):
        if dims[k] == dims[k + 1] == dims[k + 2]:
            a1 = lift_action(cone, module, degrees[k], degrees[k + 1],
                             source=comps[k], target=comps[k + 1])
            a2 = lift_action(cone, module, degrees[k + 1], degrees[k + 2],
                             source=comps[k + 1], target=comps[k + 2])
            if is_isomorphism(a1) and is_isomorphism(a2):
                return ColimitResult(True, dims[k], k, dims[: k + 3])
    return ColimitResult(False, None, None, dims)


# --------------------------------------------------------------------------
# degree boxes, tables, generators


@dataclass(frozen=True)
class Box:
    lo: IntVector
    hi: IntVector

    def __post_init__(self):
        lo = tuple(int(x) for x in self.lo)
        hi = tuple(int(x) for x in self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if len(lo) != len(hi) or any(a > b for a, b in zip(lo, hi)):
            raise ValueError("box needs lo <= hi componentwise")

    def __contains__(self, c: Sequence[int]) -> bool:
        return (len(c) == len(self.lo)
                and all(a <= x <= b for a, x, b in zip(self.lo, c, self.hi)))

    def degrees(self):
        ranges = [range(a, b + 1) for a, b in zip(self.lo, self.hi)]
        for c in product(*ranges):
            yield c

    def size(self) -> int:
        out = 1
        for a, b in zip(self.lo, self.hi):
            out *= b - a + 1
        return out


def minimal_generators_in_box(cone: Cone, module: GradedModule, box: Box) -> tuple[IntVector, ...]:
    """Degrees in the box whose lift is not spanned from strictly below.

    Box-relative evidence only: a degree is reported when the images of
    all restriction maps from its in-box predecessors do not span the
    component.
    """
    found = []
    comps = {c: lift_component(cone, module, c) for c in box.degrees()}
    for c in box.degrees():
        tgt = comps[c]
        if tgt.dim == 0:
            continue
        incoming = []
        for axis in range(cone.ray_count):
            prev = tuple(x - (1 if i == axis else 0) for i, x in enumerate(c))
            if prev not in box:
                continue
            mat = lift_action(cone, module, prev, c,
                              source=comps[prev], target=tgt)
            for j in range(mat.ncols):
                incoming.append(mat.col(j))
        if not incoming or rank(Mat(len(incoming), tgt.dim, incoming)) < tgt.dim:
            found.append(c)
    return tuple(found)


@dataclass
class LiftTable:
    """Lift components over a degree box plus one-step restriction maps."""

    cone: Cone
    box: Box
    components: dict[IntVector, LiftComponent]
    steps: dict[tuple[IntVector, int], Mat]

    def component(self, c: Sequence[int]) -> LiftComponent:
        return self.components[tuple(int(x) for x in c)]

    def dim(self, c: Sequence[int]) -> int:
        return self.component(c).dim

    def act(self, c: Sequence[int], c_prime: Sequence[int]) -> Mat:
        c = tuple(int(x) for x in c)
        c_prime = tuple(int(x) for x in c_prime)
        if not all(a <= b for a, b in zip(c, c_prime)):
            raise ValueError("degrees are not componentwise comparable")
        out = Mat.identity(self.dim(c))
        cur = list(c)
        for axis in range(len(c)):
            while cur[axis] < c_prime[axis]:
                step = self.steps[(tuple(cur), axis)]
                out = step.mul(out)
                cur[axis] += 1
        return out


def _table_chunk(args):
    cone, module, degrees = args
    return [(c, lift_component(cone, module, c)) for c in degrees]


def lift_table(cone: Cone, module: GradedModule, box: Box, jobs: int = 1) -> LiftTable:
    """Sweep a degree box; components may be computed by a worker pool.

    Workers get disjoint degree chunks and the coordinator merges in
    degree order, so output does not depend on the pool width.
    """
    degrees = list(box.degrees())
    components: dict[IntVector, LiftComponent] = {}
    if jobs > 1 and len(degrees) > 1:
        try:
            import concurrent.futures as cf

            chunks = [degrees[i::jobs] for i in range(jobs)]
            with cf.ProcessPoolExecutor(max_workers=jobs) as pool:
                for part in pool.map(_table_chunk,
                                     [(cone, module, ch) for ch in chunks]):
                    for c, comp in part:
                        components[c] = comp
        except (OSError, PermissionError):
            components = {}
    if not components:
        for c in degrees:
            components[c] = lift_component(cone, module, c)
    steps: dict[tuple[IntVector, int], Mat] = {}
    for c in degrees:
        for axis in range(cone.ray_count):
            nxt = tuple(x + (1 if i == axis else 0) for i, x in enumerate(c))
            if nxt in box:
                steps[(c, axis)] = lift_action(cone, module, c, nxt,
                                               source=components[c],
                                               target=components[nxt])
    return LiftTable(cone, box, components, steps)
