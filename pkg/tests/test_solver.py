import pytest

from sgereduce.chirotope import chirotope_from_points, convex_hull, normalize_triangular_hull
from sgereduce.errors import InstanceTooLarge, NoMutualFace, NonTriangularHull, RealizationMismatch
from sgereduce.geometry import make_placement, mirror, order_type_of_points, verify_sge
from sgereduce.reduction import LabeledGraph, SgeInstance, reduce_to_sge
from sgereduce.solver import (
    FRAME_COORDS,
    GridSpec,
    brute_force_sge,
    canonical_key,
    embed_from_realization,
    extract_realization,
    grid_realize,
    order_type_classes,
)

from helpers import (
    SIX_POINTS,
    SQUARE,
    TRIANGLE_PLUS_ONE,
    affine,
    interior_swaps,
    random_triangular_points,
)


def test_frame_coordinates_clockwise():
    from sgereduce.geometry import orientation

    t = FRAME_COORDS
    assert orientation(t["t1"], t["t2"], t["t3"]) == 1
    for a, b in (("t1", "t2"), ("t2", "t3"), ("t3", "t1")):
        assert orientation(t[a], t[b], t["t4"]) == 1


def test_embed_n4(tri1):
    inst = reduce_to_sge(tri1)
    placement = embed_from_realization(tri1, TRIANGLE_PLUS_ONE, inst)
    assert len(placement) == 7
    assert verify_sge(inst, placement)


def test_embed_six(six):
    inst = reduce_to_sge(six)
    placement = embed_from_realization(six, SIX_POINTS, inst)
    assert len(placement) == 13
    assert verify_sge(inst, placement)


def test_embed_after_extra_affine_map(six):
    inst = reduce_to_sge(six)
    moved = [affine(p, ((2, 1), (-1, 3)), (7, -4)) for p in SIX_POINTS]
    assert verify_sge(inst, embed_from_realization(six, moved, inst))


def test_interior_points_inside_their_frame_face(six):
    from sgereduce.geometry import orientation

    inst = reduce_to_sge(six)
    placement = embed_from_realization(six, SIX_POINTS, inst)
    for copy, face in ((1, ("t1", "t4", "t3")), (2, ("t2", "t4", "t1")), (3, ("t3", "t4", "t2"))):
        tri = [FRAME_COORDS[t] for t in face]
        for u in inst.meta.interior:
            p = placement[inst.meta.label(u, copy)]
            assert all(orientation(tri[i], tri[(i + 1) % 3], p) == 1 for i in range(3))


def test_embed_errors(six, square):
    with pytest.raises(RealizationMismatch):
        embed_from_realization(six, [(-x, y) for x, y in SIX_POINTS])
    with pytest.raises(NonTriangularHull):
        embed_from_realization(square, SQUARE)


def test_extract_round_trip(six):
    inst = reduce_to_sge(six)
    placement = embed_from_realization(six, SIX_POINTS, inst)
    pts, chi = extract_realization(inst, placement)
    assert chi == six
    assert chirotope_from_points(pts) == six


def test_extract_mirrored(six):
    inst = reduce_to_sge(six)
    placement = mirror(embed_from_realization(six, SIX_POINTS, inst))
    assert verify_sge(inst, placement)
    assert extract_realization(inst, placement)[1] == -six


def test_extract_needs_meta():
    tri = LabeledGraph.from_edges("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    with pytest.raises(NoMutualFace):
        extract_realization(SgeInstance.from_graphs([tri]), make_placement({"a": (0, 0), "b": (1, 0), "c": (0, 1)}))


def test_brute_force_n4_end_to_end(tri1):
    inst = reduce_to_sge(tri1)
    placement = brute_force_sge(inst, 6)
    assert placement is not None
    assert verify_sge(inst, placement)
    _, chi = extract_realization(inst, placement)
    assert chi in (tri1, -tri1)


def test_brute_force_triangle():
    tri = LabeledGraph.from_edges("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    placement = brute_force_sge([tri], GridSpec(1))
    assert placement is not None and verify_sge([tri], placement)


def test_brute_force_two_paths():
    p1 = LabeledGraph.from_edges("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
    p2 = LabeledGraph.from_edges("abcd", [("a", "c"), ("c", "b"), ("b", "d")])
    p3 = LabeledGraph.from_edges("abcd", [("b", "a"), ("a", "d"), ("d", "c")])
    placement = brute_force_sge([p1, p2, p3], 3)
    assert placement is not None
    assert verify_sge([p1, p2, p3], placement)


def test_brute_force_none_on_tiny_grid():
    k4 = LabeledGraph.from_edges("abcd", [(u, w) for u in "abcd" for w in "abcd" if u < w])
    assert brute_force_sge([k4], 1) is None
    assert brute_force_sge([k4], 2) is not None


def test_brute_force_guard(six):
    with pytest.raises(InstanceTooLarge):
        brute_force_sge(reduce_to_sge(six), 4)


def test_grid_realize_n3():
    chi = chirotope_from_points([(0, 0), (1, 0), (0, 1)])
    pts = grid_realize(chi, GridSpec(1))
    assert pts is not None and chirotope_from_points(pts) == chi


@pytest.mark.parametrize("n,enum_grid,realize_grid,expected", [(4, 3, 3, 2), (5, 3, 12, 3)])
def test_grid_realize_recovers_small_classes(n, enum_grid, realize_grid, expected):
    classes = order_type_classes(n, enum_grid)
    assert len(classes) == expected
    for chi in classes.values():
        pts = grid_realize(chi, realize_grid)
        assert pts is not None
        assert order_type_of_points(dict(enumerate(pts)), list(range(n))) == chi


def test_grid_realize_can_fail_on_small_grid():
    chi = chirotope_from_points([(0, 0), (20, 0), (10, 20), (9, 5), (11, 5)])
    assert grid_realize(chi, 2) is None
    assert grid_realize(chi, 8) is not None


def test_grid_realize_node_budget(six):
    assert grid_realize(six, 30, max_nodes=3) is None
    assert grid_realize(six, 30) is not None


def test_grid_realize_rejects_non_acyclic(tri1):
    from sgereduce.chirotope import reorient

    assert grid_realize(reorient(tri1, {3}), 5) is None


def test_canonical_key_relabel_invariant(six):
    assert canonical_key(six) == canonical_key(six.relabel([5, 4, 3, 2, 1, 0])) == canonical_key(-six)


def test_swaps_are_rejected(rng):
    pts = random_triangular_points(rng, 7)
    chi = chirotope_from_points(pts)
    inst = reduce_to_sge(chi)
    placement = embed_from_realization(chi, pts, inst)
    assert verify_sge(inst, placement)
    swaps = interior_swaps(inst, placement, rng, 10)
    assert swaps
    for copy, u, w, moved in swaps:
        assert not verify_sge(inst, moved), (copy, u, w)


def test_normalized_pipeline(square):
    out, _ = normalize_triangular_hull(square)
    inst = reduce_to_sge(square, normalize=True)
    pts = grid_realize(out, 6)
    placement = embed_from_realization(out, pts, inst)
    assert verify_sge(inst, placement)
    assert len(convex_hull(out)) == 3
