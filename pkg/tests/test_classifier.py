"""Classification of trivial source modules, liftable catalogue, characters."""

import pytest

from blockatlas.brauer_tree import BrauerTree
from blockatlas.classifier import (
    NEGATIVE,
    POSITIVE,
    JanuszDescriptor,
    NotLiftable,
    ShapeType,
    TubePosition,
    UnknownShape,
    c2_block,
    classify_trivial_source,
    cotrivial_source_dplus,
    distance_to_hook,
    divisibility_case,
    dplus_trivial_source,
    hook_is_trivial_source,
    lift_character,
    liftable_by_distance,
    liftable_catalog,
    position_of,
)
from blockatlas.cyclic_modules import CyclicGroupParams
from blockatlas.dade import DadeElement


def exceptional_center_star(p=5, n=2, arms=4, positive_vertex=None):
    data = {
        "p": p,
        "n": n,
        "vertices": [{"label": "c", "exceptional": True}]
        + [{"label": f"v{k}"} for k in range(arms)],
        "edges": [
            {"label": f"E{k}", "endpoints": ["c", f"v{k}"]} for k in range(arms)
        ],
        "rotation": {
            "c": [f"E{k}" for k in range(arms)],
            **{f"v{k}": [f"E{k}"] for k in range(arms)},
        },
    }
    if positive_vertex:
        data["positive_vertex"] = positive_vertex
    return BrauerTree.from_dict(data)


def exceptional_leaf_star(p=5, n=2, arms=4, positive_vertex=None):
    data = {
        "p": p,
        "n": n,
        "vertices": [{"label": "c"}, {"label": "v0", "exceptional": True}]
        + [{"label": f"v{k}"} for k in range(1, arms)],
        "edges": [
            {"label": f"E{k}", "endpoints": ["c", f"v{k}"]} for k in range(arms)
        ],
        "rotation": {
            "c": [f"E{k}" for k in range(arms)],
            **{f"v{k}": [f"E{k}"] for k in range(arms)},
        },
    }
    if positive_vertex:
        data["positive_vertex"] = positive_vertex
    return BrauerTree.from_dict(data)


def three_vertex_line(p=3, n=2, positive_vertex=None):
    # v0 -- E0 -- v1 -- E1 -- v2(exceptional); e = 2.
    data = {
        "p": p,
        "n": n,
        "vertices": [{"label": "v0"}, {"label": "v1"},
                     {"label": "v2", "exceptional": True}],
        "edges": [
            {"label": "E0", "endpoints": ["v0", "v1"]},
            {"label": "E1", "endpoints": ["v1", "v2"]},
        ],
        "rotation": {"v0": ["E0"], "v1": ["E0", "E1"], "v2": ["E1"]},
    }
    if positive_vertex:
        data["positive_vertex"] = positive_vertex
    return BrauerTree.from_dict(data)


def single_edge(p, n, positive_vertex=None):
    m = p**n - 1
    data = {
        "p": p,
        "n": n,
        "vertices": [{"label": "a"}, {"label": "z", "exceptional": m > 1}],
        "edges": [{"label": "E0", "endpoints": ["a", "z"]}],
        "rotation": {"a": ["E0"], "z": ["E0"]},
    }
    if positive_vertex:
        data["positive_vertex"] = positive_vertex
    return BrauerTree.from_dict(data)


def source(params, bits):
    return DadeElement(params, bits)


# -- tube positions ------------------------------------------------------------


def test_dplus_of_trivial_source_rows():
    params = CyclicGroupParams(5, 2)
    w = source(params, (0, 1))
    assert dplus_trivial_source(params, w, 2) == TubePosition(3, 20)
    assert dplus_trivial_source(params, w, 1) == TubePosition(4, 19)
    zero = DadeElement.zero(params)
    assert dplus_trivial_source(params, zero, 1) == TubePosition(4, 19)
    assert dplus_trivial_source(params, zero, 2) == TubePosition(0, 23)


def test_dplus_rejects_non_source():
    params = CyclicGroupParams(5, 2)
    with pytest.raises(ValueError):
        dplus_trivial_source(params, source(params, (1, 0)), 1)


def test_trivial_source_case_split():
    params = CyclicGroupParams(5, 2)
    w = source(params, (0, 1))
    assert divisibility_case(params, w, 2, 4) == NEGATIVE
    assert divisibility_case(params, w, 1, 4) == POSITIVE
    zero = DadeElement.zero(params)
    assert divisibility_case(params, zero, 1, 4) == POSITIVE
    assert divisibility_case(params, zero, 2, 4) == POSITIVE


def test_cotrivial_position_swaps_boundaries():
    params = CyclicGroupParams(3, 2)
    zero = DadeElement.zero(params)
    pos = cotrivial_source_dplus(params, zero, 1)
    assert pos == TubePosition(5, 2)
    # The cotrivial row mirrors the trivial-source row.
    mirror = dplus_trivial_source(params, zero, 1)
    assert pos.dplus == mirror.dminus and pos.dminus == mirror.dplus


# -- classification ------------------------------------------------------------


def test_classify_negative_case_at_exceptional_center():
    tree = exceptional_center_star()
    w = source(tree.params, (0, 1))
    report = classify_trivial_source(tree, w, 2)
    assert report.divisibility_case == NEGATIVE
    assert report.dplus == TubePosition(3, 20)
    assert len(report.descriptors) == 4
    assert {d.type_tag for d in report.descriptors} == {
        ShapeType.DOUBLED_EXCEPTIONAL_LEAF
    }
    assert {d.multiplicity for d in report.descriptors} == {1}
    assert sorted(d.path for d in report.descriptors) == [
        ("E0", "E1"), ("E1", "E2"), ("E2", "E3"), ("E3", "E0"),
    ]


def test_classify_positive_case_at_leaves():
    tree = exceptional_center_star()
    w = source(tree.params, (0, 1))
    report = classify_trivial_source(tree, w, 1)
    assert report.divisibility_case == POSITIVE
    assert report.dplus == TubePosition(4, 19)
    assert [d.type_tag for d in report.descriptors] == [
        ShapeType.PATH_LEAF_TO_EXCEPTIONAL
    ] * 4
    assert {d.multiplicity for d in report.descriptors} == {2}
    assert {d.vertex for d in report.descriptors} == {"v0", "v1", "v2", "v3"}


def test_classify_trivial_module_row_gives_hooks():
    tree = exceptional_center_star()
    zero = DadeElement.zero(tree.params)
    report = classify_trivial_source(tree, zero, 2)
    assert report.dplus.dplus == 0
    assert [d.type_tag for d in report.descriptors] == [ShapeType.HOOK] * 4
    # The hooks sit at the positive vertices, here the four leaves.
    assert {d.vertex for d in report.descriptors} == {"v0", "v1", "v2", "v3"}
    for d in report.descriptors:
        dist, ref = distance_to_hook(tree, d)
        assert dist == 0 and ref.sign == 1


def test_classify_simple_exceptional_leaf():
    # Negative case with L = e at an exceptional leaf of negative sign.
    tree = exceptional_leaf_star(positive_vertex="c")
    w = source(tree.params, (0, 1))
    report = classify_trivial_source(tree, w, 2)
    assert report.divisibility_case == NEGATIVE
    tags = sorted(d.type_tag for d in report.descriptors)
    assert tags == [
        ShapeType.PATH_LEAF_TO_EXCEPTIONAL,
        ShapeType.PATH_LEAF_TO_EXCEPTIONAL,
        ShapeType.PATH_LEAF_TO_EXCEPTIONAL,
        ShapeType.SIMPLE_EXCEPTIONAL_LEAF,
    ]
    simple = [
        d for d in report.descriptors
        if d.type_tag == ShapeType.SIMPLE_EXCEPTIONAL_LEAF
    ][0]
    assert simple.vertex == "v0"
    assert simple.multiplicity == 1
    paths = [
        d for d in report.descriptors
        if d.type_tag == ShapeType.PATH_LEAF_TO_EXCEPTIONAL
    ]
    assert {d.multiplicity for d in paths} == {2}
    assert {d.vertex for d in paths} == {"v1", "v2", "v3"}
    assert report.dplus == TubePosition(3, 20)


def test_classify_extended_paths_at_interior_vertex():
    tree = three_vertex_line()
    w = source(tree.params, (0, 1))
    report = classify_trivial_source(tree, w, 2)
    assert report.divisibility_case == NEGATIVE
    assert report.dplus == TubePosition(1, 6)
    by_tag = {d.type_tag: d for d in report.descriptors}
    assert set(by_tag) == {ShapeType.EXTENDED_PATH_A, ShapeType.EXTENDED_PATH_B}
    a = by_tag[ShapeType.EXTENDED_PATH_A]
    b = by_tag[ShapeType.EXTENDED_PATH_B]
    assert a.vertex == b.vertex == "v1"
    assert a.multiplicity == b.multiplicity == 4
    assert a.path == ("E1", "E1", "E0")
    assert b.path == ("E0", "E1", "E1")
    assert a.interior == b.interior == 0


def test_classify_positive_case_on_line():
    tree = three_vertex_line()
    w = source(tree.params, (0, 1))
    report = classify_trivial_source(tree, w, 1)
    assert report.divisibility_case == POSITIVE
    assert report.dplus == TubePosition(2, 5)
    by_tag = {d.type_tag: d for d in report.descriptors}
    leaf = by_tag[ShapeType.PATH_LEAF_TO_EXCEPTIONAL]
    exc = by_tag[ShapeType.PATH_EXCEPTIONAL_LEAF]
    assert leaf.vertex == "v0" and leaf.multiplicity == 4
    assert leaf.interior == 1
    assert exc.vertex == "v2" and exc.multiplicity == 3


def test_classify_doubled_paths_at_high_degree_vertex():
    tree = exceptional_leaf_star()
    w = source(tree.params, (0, 1))
    report = classify_trivial_source(tree, w, 2)
    assert report.divisibility_case == NEGATIVE
    tags = [d.type_tag for d in report.descriptors]
    assert tags.count(ShapeType.DOUBLED_PATH) == 2
    assert tags.count(ShapeType.EXTENDED_PATH_A) == 1
    assert tags.count(ShapeType.EXTENDED_PATH_B) == 1
    assert {d.vertex for d in report.descriptors} == {"c"}
    assert {d.multiplicity for d in report.descriptors} == {6}
    doubled = sorted(
        d.path for d in report.descriptors if d.type_tag == ShapeType.DOUBLED_PATH
    )
    assert doubled == [("E1", "E0", "E0", "E2"), ("E2", "E0", "E0", "E3")]


def test_every_descriptor_sits_on_the_required_row():
    tree = exceptional_leaf_star()
    for bits in [(0, 0), (0, 1)]:
        w = source(tree.params, bits)
        for i in (1, 2):
            report = classify_trivial_source(tree, w, i)
            assert len(report.descriptors) == tree.e
            for desc in report.descriptors:
                assert position_of(tree, desc) == report.dplus


def test_classify_single_edge_path():
    tree = single_edge(3, 2)
    zero = DadeElement.zero(tree.params)
    report = classify_trivial_source(tree, zero, 1)
    assert report.divisibility_case is None
    assert len(report.descriptors) == 1
    desc = report.descriptors[0]
    assert desc.type_tag == ShapeType.PATH_LEAF_TO_EXCEPTIONAL
    assert desc.multiplicity == 3
    assert report.dplus == TubePosition(2, 5)


def test_classify_single_edge_flipped_anchor():
    tree = single_edge(3, 2, positive_vertex="z")
    zero = DadeElement.zero(tree.params)
    report = classify_trivial_source(tree, zero, 1)
    desc = report.descriptors[0]
    assert desc.type_tag == ShapeType.PATH_LEAF_TO_EXCEPTIONAL
    assert desc.multiplicity == 6
    assert report.dplus == TubePosition(2, 5)
    # At the top row the unique module is the hook at the exceptional vertex.
    top = classify_trivial_source(tree, zero, 2)
    assert top.descriptors[0].type_tag == ShapeType.HOOK
    assert top.descriptors[0].vertex == "z"
    assert top.dplus == TubePosition(0, 7)


def test_classify_single_edge_hook_at_plain_vertex():
    tree = single_edge(3, 2)
    zero = DadeElement.zero(tree.params)
    report = classify_trivial_source(tree, zero, 2)
    assert report.descriptors[0].type_tag == ShapeType.HOOK
    assert report.descriptors[0].vertex == "a"


def test_c2_block_degenerate():
    report = c2_block(CyclicGroupParams(2, 1))
    assert report.dplus == TubePosition(0, 0)
    assert len(report.descriptors) == 1
    assert report.descriptors[0].type_tag == ShapeType.HOOK


def test_classify_rejects_bad_inputs():
    tree = exceptional_center_star()
    w = source(tree.params, (0, 1))
    with pytest.raises(ValueError):
        classify_trivial_source(tree, w, 0)
    with pytest.raises(ValueError):
        classify_trivial_source(tree, w, 3)
    with pytest.raises(ValueError):
        classify_trivial_source(tree, source(tree.params, (1, 1)), 1)


# -- descriptor invariants ------------------------------------------------------


def test_descriptor_validation():
    with pytest.raises(ValueError):
        JanuszDescriptor(
            type_tag=ShapeType.HOOK,
            path=("E0",),
            direction=(1, 1),  # hooks run (1, -1)
            multiplicity=0,
            vertex="a",
        )
    with pytest.raises(ValueError):
        JanuszDescriptor(
            type_tag=ShapeType.EXTENDED_PATH_A,
            path=("E0", "E0"),  # needs odd length 2l + 3
            direction=(1, 1),
            multiplicity=2,
            vertex="a",
            interior=0,
        )


def test_hook_multiplicity_recomputed_in_validation():
    tree = exceptional_center_star()
    good = classify_trivial_source(tree, DadeElement.zero(tree.params), 2)
    hook_desc = good.descriptors[0]
    bad = JanuszDescriptor(
        type_tag=ShapeType.HOOK,
        path=hook_desc.path,
        direction=hook_desc.direction,
        multiplicity=hook_desc.multiplicity + 1,
        vertex=hook_desc.vertex,
    )
    with pytest.raises(ValueError):
        bad.validate_against(tree)


def test_projective_distance_is_undefined():
    tree = exceptional_center_star()
    entries = liftable_catalog(tree)
    proj = [
        x.descriptor for x in entries
        if x.descriptor.type_tag == ShapeType.PROJECTIVE
    ][0]
    with pytest.raises(UnknownShape):
        distance_to_hook(tree, proj)


# -- liftable catalogue ----------------------------------------------------------


def test_catalog_counts_star():
    tree = exceptional_center_star()
    entries = liftable_catalog(tree)
    assert len(entries) == 4 * (2 * 6 + 1)
    projective = [
        x for x in entries if x.descriptor.type_tag == ShapeType.PROJECTIVE
    ]
    assert len(projective) == 4
    assert all(x.distance is None for x in projective)


def test_catalog_counts_single_edge():
    tree = single_edge(3, 2)  # e = 1, m = 8
    entries = liftable_catalog(tree)
    assert len(entries) == 9
    tags = sorted(x.descriptor.type_tag for x in entries)
    assert tags.count(ShapeType.HOOK) == 2
    assert tags.count(ShapeType.PATH_LEAF_TO_EXCEPTIONAL) == 6
    assert tags.count(ShapeType.PROJECTIVE) == 1


def test_catalog_counts_without_exceptional_vertex():
    # e = 2, m = 1: hooks and projectives only.
    data = {
        "p": 3, "n": 1,
        "vertices": [{"label": "x"}, {"label": "y"}, {"label": "z"}],
        "edges": [
            {"label": "E0", "endpoints": ["x", "y"]},
            {"label": "E1", "endpoints": ["y", "z"]},
        ],
        "rotation": {"x": ["E0"], "y": ["E0", "E1"], "z": ["E1"]},
    }
    entries = liftable_catalog(BrauerTree.from_dict(data))
    assert len(entries) == 6
    tags = [x.descriptor.type_tag for x in entries]
    assert tags.count(ShapeType.HOOK) == 4
    assert tags.count(ShapeType.PROJECTIVE) == 2


def test_catalog_smallest_block():
    tree = single_edge(2, 1)  # e = m = 1
    entries = liftable_catalog(tree)
    assert len(entries) == 2
    hook_entries = [
        x for x in entries if x.descriptor.type_tag == ShapeType.HOOK
    ]
    assert len(hook_entries) == 1
    assert hook_entries[0].distance == 0


def test_liftable_by_distance_values():
    assert liftable_by_distance(4, 6, 0)
    assert not liftable_by_distance(4, 6, 2)
    assert liftable_by_distance(4, 6, 3)
    assert liftable_by_distance(4, 6, 4)
    assert not liftable_by_distance(4, 6, 5)
    assert liftable_by_distance(4, 6, 7)
    assert liftable_by_distance(4, 6, 8)
    assert liftable_by_distance(4, 6, 11)
    assert liftable_by_distance(2, 2, 0)
    assert liftable_by_distance(2, 2, 1)
    with pytest.raises(ValueError):
        liftable_by_distance(4, 6, 12)  # beyond half the rim


def test_catalog_distances_match_direct_recomputation():
    tree = three_vertex_line()
    rim = tree.params.order - 2
    for entry in liftable_catalog(tree):
        if entry.distance is None:
            continue
        dist, ref = distance_to_hook(tree, entry.descriptor)
        assert dist == entry.distance
        assert ref == entry.reference_hook
        assert liftable_by_distance(tree.e, tree.m, min(dist, rim - dist))


# -- characters of lifts ---------------------------------------------------------


def test_lift_character_examples():
    tree = exceptional_center_star()
    w = source(tree.params, (0, 1))
    leafy = classify_trivial_source(tree, w, 1).descriptors[0]
    ch = lift_character(tree, leafy)
    assert ch.nonexceptional_constituents == ("v0",)
    assert ch.exceptional_count == 1

    doubled = classify_trivial_source(tree, w, 2).descriptors[0]
    ch = lift_character(tree, doubled)
    assert ch.nonexceptional_constituents == ()
    assert ch.exceptional_count == 1


def test_lift_character_hooks():
    tree = exceptional_center_star()
    zero = DadeElement.zero(tree.params)
    hooks = classify_trivial_source(tree, zero, 2).descriptors
    ch = lift_character(tree, hooks[0])
    assert ch.nonexceptional_constituents == (hooks[0].vertex,)
    assert ch.exceptional_count == 0
    # A hook whose body is the exceptional vertex affords only exceptional
    # constituents, all m * deg of them as composition factors but m as
    # distinct ordinary characters.
    top = classify_trivial_source(
        single_edge(3, 2, positive_vertex="z"), DadeElement.zero(CyclicGroupParams(3, 2)), 2
    ).descriptors[0]
    ch = lift_character(single_edge(3, 2, positive_vertex="z"), top)
    assert ch.nonexceptional_constituents == ()
    assert ch.exceptional_count == 8


def test_lift_character_extended_path():
    tree = three_vertex_line()
    w = source(tree.params, (0, 1))
    by_tag = {
        d.type_tag: d
        for d in classify_trivial_source(tree, w, 2).descriptors
    }
    ch = lift_character(tree, by_tag[ShapeType.EXTENDED_PATH_A])
    assert ch.nonexceptional_constituents == ("v1",)
    assert ch.exceptional_count == 3


def test_lift_character_simple_exceptional_leaf():
    tree = exceptional_leaf_star(positive_vertex="c")
    w = source(tree.params, (0, 1))
    simple = [
        d
        for d in classify_trivial_source(tree, w, 2).descriptors
        if d.type_tag == ShapeType.SIMPLE_EXCEPTIONAL_LEAF
    ][0]
    ch = lift_character(tree, simple)
    assert ch.nonexceptional_constituents == ()
    assert ch.exceptional_count == 1


def test_lift_character_rejects_projective():
    tree = exceptional_center_star()
    proj = [
        x.descriptor
        for x in liftable_catalog(tree)
        if x.descriptor.type_tag == ShapeType.PROJECTIVE
    ][0]
    with pytest.raises(NotLiftable):
        lift_character(tree, proj)


# -- boundary predicates ----------------------------------------------------------


def test_hook_trivial_source_predicate():
    tree = exceptional_center_star()
    zero = DadeElement.zero(tree.params)
    w = source(tree.params, (0, 1))
    positives = [h for h in tree.hooks() if h.sign > 0]
    negatives = [h for h in tree.hooks() if h.sign < 0]
    assert len(positives) == len(negatives) == 4
    assert all(hook_is_trivial_source(tree, zero, h) for h in positives)
    assert not any(hook_is_trivial_source(tree, zero, h) for h in negatives)
    assert not any(hook_is_trivial_source(tree, w, h) for h in tree.hooks())
