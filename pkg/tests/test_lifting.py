import pytest

from coxlift.instances import (
    all_variant_modules,
    codivisorial_lift_law,
    simple_lift_law,
    structure_lift_law,
)
from coxlift.lifting import (
    Box,
    DirectSumRule,
    SheafifiedModule,
    ShiftedCoxRule,
    SpikeRule,
    colimit,
    colimit_of_lift,
    counit_matrix,
    lift_action,
    lift_component,
    lift_morphism,
    lift_table,
    minimal_generators_in_box,
    sheafify_component,
    unit_map,
)
from coxlift.linalg import is_isomorphism, rank
from coxlift.modules import (
    codivisorial_module,
    maximal_ideal_module,
    simple_module,
    structure_module,
    structure_to_simple,
    identity_morphism,
)


def test_simple_lift_spot_values(csq):
    K = simple_module(csq)
    assert lift_component(csq, K, (-1, 0, 0, 0)).dim == 1
    assert lift_component(csq, K, (-1, -1, 0, 0)).dim == 0
    assert lift_component(csq, K, (0, -2, 0, -3)).dim == 1
    assert lift_component(csq, K, (1, 0, 0, 0)).dim == 0


def test_simple_lift_law_sampled(csq, rng):
    K = simple_module(csq)
    for _ in range(60):
        c = tuple(rng.randint(-3, 3) for _ in range(4))
        assert lift_component(csq, K, c).dim == simple_lift_law(c)


def test_codivisorial_lift(csq):
    cod = codivisorial_module(csq, (0, 0, 0, 0), (1, 3))
    comp = lift_component(csq, cod, (-1, 0, -1, 0))
    assert comp.dim == 3
    assert comp.minimal_points == ((-1, 0, 0), (0, 0, 0), (1, 0, 0))
    for c1, c3 in [(-2, 0), (0, -2), (-1, -2), (1, -1), (2, 0)]:
        got = lift_component(csq, cod, (c1, 0, c3, 0)).dim
        assert got == codivisorial_lift_law(c1, c3)


def test_ideal_lift_spot_values(csq):
    mm = maximal_ideal_module(csq)
    # the zero-component minimal point at (1,-1,2) kills the candidate
    assert lift_component(csq, mm, (1, -1, 0, 0)).dim == 0
    assert lift_component(csq, mm, (1, 0, 0, 0)).dim == 1
    assert lift_component(csq, mm, (0, 0, 0, 0)).dim == 0


def test_structure_lift_spot_values(csq):
    rr = structure_module(csq)
    assert lift_component(csq, rr, (0, 0, 0, 0)).dim == 1
    assert lift_component(csq, rr, (-1, 0, 0, 0)).dim == 0
    assert lift_component(csq, rr, (2, 1, 0, 3)).dim == 1


def test_lift_action_identity_and_steps(csq):
    K = simple_module(csq)
    same = lift_action(csq, K, (-1, 0, 0, 0), (-1, 0, 0, 0))
    assert same.rows == [[1]]
    step = lift_action(csq, K, (-2, 0, 0, 0), (-1, 0, 0, 0))
    assert step.rows == [[1]]
    rr = structure_module(csq)
    xmul = lift_action(csq, rr, (0, 0, 0, 0), (1, 0, 0, 0))
    assert xmul.rows == [[1]]
    with pytest.raises(ValueError):
        lift_action(csq, K, (0, 0, 0, 0), (-1, 0, 0, 0))


def test_lift_action_functoriality(csq, rng):
    cod = codivisorial_module(csq, (0, 0, 0, 0), (1, 3))
    for _ in range(20):
        c = tuple(rng.randint(-2, 0) for _ in range(4))
        s1 = tuple(rng.randint(0, 1) for _ in range(4))
        c2 = tuple(a + b for a, b in zip(c, s1))
        s2 = tuple(rng.randint(0, 1) for _ in range(4))
        c3 = tuple(a + b for a, b in zip(c2, s2))
        lhs = lift_action(csq, cod, c2, c3).mul(lift_action(csq, cod, c, c2))
        rhs = lift_action(csq, cod, c, c3)
        assert lhs.rows == rhs.rows


def test_lift_morphism_values(csq):
    f = structure_to_simple(csq)
    at0 = lift_morphism(csq, f, (0, 0, 0, 0))
    assert at0.rows == [[1]]
    # source vanishes, target is one-dimensional: a zero-width matrix
    neg = lift_morphism(csq, f, (-1, 0, 0, 0))
    assert (neg.nrows, neg.ncols) == (1, 0)
    ident = lift_morphism(csq, identity_morphism(simple_module(csq)), (-2, 0, 0, 0))
    assert ident.rows == [[1]]


def test_smooth_cone_reindexing(orthant):
    for module in all_variant_modules(orthant):
        for c in Box((-2, -2), (2, 2)).degrees():
            comp = lift_component(orthant, module, c)
            assert comp.dim == module.component(c).dim
            assert comp.minimal_points == (c,)


def test_counit_isomorphism(csq, quotient2, rng):
    for cone in (csq, quotient2):
        for module in all_variant_modules(cone):
            for _ in range(5):
                m = tuple(rng.randint(-2, 2) for _ in range(cone.lattice_rank))
                cm = counit_matrix(cone, module, m)
                assert is_isomorphism(cm)
                assert cm.nrows == module.component(m).dim


def test_sheafify_component(csq):
    rule = ShiftedCoxRule(4, (0, 0, 0, 0))
    assert sheafify_component(csq, rule, (0, 0, 0)).dim == 1
    assert sheafify_component(csq, rule, (1, 0, 1)).dim == 1
    assert sheafify_component(csq, rule, (-1, 0, 0)).dim == 0


def test_sheafify_of_table_matches_module(csq):
    K = simple_module(csq)
    table = lift_table(csq, K, Box((-1,) * 4, (1,) * 4))
    for m in [(0, 0, 0), (1, 0, 1), (0, 1, 0)]:
        c = csq.evaluate(m)
        if c in table.box:
            assert sheafify_component(csq, table, m).dim == K.component(m).dim


def test_unit_map_shifted_rules(csq, rng):
    for shift in [(0, 0, 0, 0), (2, -1, 0, 1)]:
        rule = ShiftedCoxRule(4, shift)
        for _ in range(15):
            c = tuple(rng.randint(-2, 2) for _ in range(4))
            assert is_isomorphism(unit_map(csq, rule, c))


def test_unit_map_spike_kernel(csq):
    spike_at = (1, 0, 0, 0)  # off the image hyperplane c1 - c2 + c3 - c4 = 0
    rule = DirectSumRule((ShiftedCoxRule(4, (0, 0, 0, 0)), SpikeRule(4, spike_at)))
    u = unit_map(csq, rule, spike_at)
    assert u.ncols == 2
    assert u.ncols - rank(u) == 1


def test_sheafified_module_reads_image_degrees(csq):
    rule = SpikeRule(4, (1, 0, 0, 0))
    shf = SheafifiedModule(csq, rule)
    for m in [(0, 0, 0), (1, 0, 1), (1, 1, 1)]:
        assert shf.component(m).dim == 0


def test_colimits(csq):
    assert colimit(csq, simple_module(csq)).dim == 0
    assert colimit(csq, maximal_ideal_module(csq)).dim == 1
    assert colimit(csq, structure_module(csq)).dim == 1
    short = colimit(csq, simple_module(csq), horizon=1)
    assert not short.stabilized and short.dim is None


def test_colimit_of_lift_matches(csq):
    for module in (simple_module(csq), maximal_ideal_module(csq),
                   structure_module(csq)):
        a = colimit(csq, module)
        b = colimit_of_lift(csq, module)
        assert a.stabilized and b.stabilized
        assert a.dim == b.dim


def test_minimal_generators_structure(csq):
    rr = structure_module(csq)
    got = minimal_generators_in_box(csq, rr, Box((-1,) * 4, (1,) * 4))
    assert got == ((0, 0, 0, 0),)


def test_minimal_generators_ideal(csq):
    mm = maximal_ideal_module(csq)
    got = minimal_generators_in_box(csq, mm, Box((0,) * 4, (2,) * 4))
    assert set(got) == {(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)}


def test_minimal_generators_simple_box_corners(csq):
    # inside any finite box the two support quadrants are generated from
    # their corners; the corners recede as the box grows, which is the
    # box-level trace of the module not being finitely generated
    K = simple_module(csq)
    got = minimal_generators_in_box(csq, K, Box((-3,) * 4, (0,) * 4))
    assert set(got) == {(-3, 0, -3, 0), (0, -3, 0, -3)}
    got2 = minimal_generators_in_box(csq, K, Box((-2,) * 4, (0,) * 4))
    assert set(got2) == {(-2, 0, -2, 0), (0, -2, 0, -2)}


def test_lift_table_composition(csq):
    cod = codivisorial_module(csq, (0, 0, 0, 0), (1, 3))
    box = Box((-2, 0, -2, 0), (0, 1, 0, 1))
    table = lift_table(csq, cod, box)
    c, c2 = (-2, 0, -2, 0), (0, 1, 0, 1)
    via_table = table.act(c, c2)
    direct = lift_action(csq, cod, c, c2)
    assert via_table.rows == direct.rows


def test_quotient_cone_lift_dims(quotient2):
    # the structure lift is the Cox ring rule on every chart, torsion or not
    rr = structure_module(quotient2)
    for c in Box((-2, -2), (2, 2)).degrees():
        assert lift_component(quotient2, rr, c).dim == structure_lift_law(c)
