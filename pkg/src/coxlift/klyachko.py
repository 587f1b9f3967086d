"""Reflexive modules from full filtrations and the intersection formula.

A reflexive description is a family of full per-ray filtrations of a
fixed ambient space.  Its lift at a Cox degree ``c`` is simply the
intersection of the ray spaces at levels ``c_rho``; this module
computes that directly and verifies, degree by degree, that the general
limit machinery produces the same subspaces.  It also compares the
subspace arrangements realized on the base against those realized by
the lift (the lift realizes every intersection; the base need not).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cones import Cone
from .lattice import lattice_membership
from .lifting import Box, LiftComponent, lift_component
from .linalg import (
    Mat,
    Vector,
    coords_in_basis,
    intersect_row_spaces,
    row_space_basis,
    subspace_eq,
    subspace_le,
)
from .modules import FiltrationModule, RayFiltration

IntVector = tuple[int, ...]


@dataclass(frozen=True)
class ReflexiveDescription:
    """Ambient dimension plus one full filtration per ray index."""

    ambient_dim: int
    filtrations: tuple[tuple[int, RayFiltration], ...]

    def __post_init__(self):
        object.__setattr__(self, "filtrations",
                           tuple(sorted(dict(self.filtrations).items())))

    def rays(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.filtrations)

    def space_at(self, ray: int, level: int) -> tuple[Vector, ...]:
        return dict(self.filtrations)[ray].space_at(level)


def filtration_module(cone: Cone, desc: ReflexiveDescription) -> FiltrationModule:
    if desc.rays() != tuple(range(cone.ray_count)):
        raise ValueError("description rays do not match the cone rays")
    return FiltrationModule(cone, desc.ambient_dim, desc.filtrations)


def filtration_lift_component(desc: ReflexiveDescription, c: Sequence[int]) -> tuple[Vector, ...]:
    """Direct intersection of the ray spaces at levels c_rho."""
    c = tuple(int(x) for x in c)
    if len(c) != len(desc.filtrations):
        raise ValueError("degree length differs from filtration count")
    r = desc.ambient_dim
    current = row_space_basis(
        [[1 if i == j else 0 for j in range(r)] for i in range(r)], r)
    for (ray, rf), level in zip(desc.filtrations, c):
        current = intersect_row_spaces(current, rf.space_at(level), r)
        if not current:
            return ()
    return current


def lift_subspace_in_ambient(module: FiltrationModule,
                             comp: LiftComponent) -> tuple[Vector, ...]:
    """Embed a lift component of a filtration module into the ambient space.

    Transports of filtration modules are inclusions, so every block of a
    limit vector expands to the same ambient vector; all nonzero blocks
    are expanded and checked for agreement.
    """
    out = []
    for vec in comp.basis:
        ambient: Optional[list] = None
        for i, m in enumerate(comp.minimal_points):
            if comp.block_dims[i] == 0:
                continue
            basis = module.subspace(m)
            coords = list(vec[comp.block_slice(i)])
            value = [sum(c * row[j] for c, row in zip(coords, basis))
                     for j in range(module.ambient_dim)]
            if ambient is None:
                ambient = value
            elif ambient != value:
                raise AssertionError("limit blocks disagree in the ambient space")
        if ambient is None:
            raise AssertionError("nonzero limit vector with all blocks zero")
        out.append(ambient)
    return row_space_basis(out, module.ambient_dim)


@dataclass
class EquivalenceReport:
    ok: bool
    degrees_checked: int
    first_mismatch: Optional[IntVector]
    roundtrip_checked: int


def verify_equivalence(cone: Cone, desc: ReflexiveDescription, box: Box) -> EquivalenceReport:
    """Limit machinery versus direct intersection, as subspaces, over a box.

    Also confirms the round trip: at degrees in the image of the grading
    map, the intersection formula restricted to the base reproduces the
    module's own components.
    """
    module = filtration_module(cone, desc)
    checked = 0
    for c in box.degrees():
        comp = lift_component(cone, module, c)
        via_limit = lift_subspace_in_ambient(module, comp)
        direct = filtration_lift_component(desc, c)
        if not subspace_eq(via_limit, direct):
            return EquivalenceReport(False, checked, tuple(c), 0)
        checked += 1
    roundtrip = 0
    for c in box.degrees():
        m = lattice_membership(cone.rays, c)
        if m is None:
            continue
        if not subspace_eq(module.subspace(m), filtration_lift_component(desc, c)):
            return EquivalenceReport(False, checked, tuple(c), roundtrip)
        roundtrip += 1
    return EquivalenceReport(True, checked, None, roundtrip)


@dataclass
class RealizedReport:
    """Subspace arrangements realized on the base and by the lift."""

    base_realized: tuple[tuple[Vector, ...], ...]
    lift_realized: tuple[tuple[Vector, ...], ...]
    unrealized_on_base: tuple[tuple[Vector, ...], ...]


def realized_components(cone: Cone, desc: ReflexiveDescription, box: Box) -> RealizedReport:
    """Compare base-realized intersections against all lift intersections.

    The base set is always contained in the lift set; the difference is
    reported (the lift's arrangement is intersection-complete).
    """
    base: dict[tuple, tuple[Vector, ...]] = {}
    lift: dict[tuple, tuple[Vector, ...]] = {}
    for c in box.degrees():
        space = filtration_lift_component(desc, c)
        lift[space] = space
        if lattice_membership(cone.rays, c) is not None:
            base[space] = space
    unrealized = tuple(sorted((s for key, s in lift.items() if key not in base),
                              key=lambda b: (len(b), b)))
    return RealizedReport(
        tuple(sorted(base.values(), key=lambda b: (len(b), b))),
        tuple(sorted(lift.values(), key=lambda b: (len(b), b))),
        unrealized,
    )


def induced_morphism(cone: Cone, src: ReflexiveDescription,
                     tgt: ReflexiveDescription, matrix: Mat):
    """The graded morphism a filtration-respecting linear map induces.

    The matrix must send each source ray space into the matching target
    ray space; it then restricts to every intersection, giving a natural
    degree-wise map between the two filtration modules.
    """
    if not respects_filtrations(matrix, src, tgt):
        raise ValueError("the map does not respect the filtrations")
    from .modules import GradedMorphism

    src_mod = filtration_module(cone, src)
    tgt_mod = filtration_module(cone, tgt)

    def rule(m):
        sb = src_mod.subspace(m)
        tb = tgt_mod.subspace(m)
        cols = []
        for v in sb:
            image = matrix.vec(list(v))
            coords = coords_in_basis(tb, image)
            if coords is None:
                raise AssertionError("restricted map left the target component")
            cols.append(coords)
        return Mat(len(tb), len(sb),
                   [[cols[j][i] for j in range(len(sb))] for i in range(len(tb))])

    return GradedMorphism(src_mod, tgt_mod, rule)


def respects_filtrations(matrix: Mat, src: ReflexiveDescription,
                         tgt: ReflexiveDescription) -> bool:
    """Whether a linear map sends each source ray space into the target one."""
    if src.rays() != tgt.rays():
        return False
    for ray, rf in src.filtrations:
        levels = sorted({st.level for st in rf.steps}
                        | {st.level for st in dict(tgt.filtrations)[ray].steps})
        for level in levels:
            image = [matrix.vec(list(v)) for v in src.space_at(ray, level)]
            target = tgt.space_at(ray, level)
            if not subspace_le(row_space_basis(image, matrix.nrows), target):
                return False
    return True
