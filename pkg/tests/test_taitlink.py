import random

import pytest

from thompsonlinks.bracket import equiv_up_to_units, kauffman_bracket
from thompsonlinks.taitlink import (
    PDCode,
    SignedPlaneGraph,
    apply_move,
    checkerboard,
    disjoint_union,
    faces,
    isomorphic,
    medial_link,
    random_plane_graph,
    remove_loops,
    tait_graph,
)

from conftest import FIGURE_EIGHT, HOPF, TREFOIL, UNKNOT, random_pd


def bracket_of(g):
    return kauffman_bracket(medial_link(g))


def test_pd_parse_and_text():
    pd = PDCode.parse("# trefoil\nX 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\nOUTER 1 3 5\n")
    assert pd.crossing_count == 3
    assert PDCode.parse(pd.to_text()) == pd
    with pytest.raises(ValueError, match="Y 1 2"):
        PDCode.parse("Y 1 2")
    with pytest.raises(ValueError, match="exactly twice"):
        PDCode.parse("X 1 2 3 4")


def test_face_counts():
    assert len(faces(UNKNOT).boundaries) == 2
    assert len(faces(TREFOIL).boundaries) == 5
    assert len(faces(PDCode.parse("U\nU\n")).boundaries) == 4


def test_nonplanar_code_rejected():
    # consistent arc usage but the rotation traces too few faces
    with pytest.raises(ValueError):
        faces(PDCode.parse("X 1 2 3 4\nX 1 3 2 4\n"))


def test_checkerboard():
    data = faces(TREFOIL)
    gray = checkerboard(TREFOIL, data)
    assert not any(gray[f] for f in data.outer)
    assert sorted(gray).count(True) in (2, 3)
    unknot = checkerboard(UNKNOT)
    assert unknot == [True, False]


def test_tait_graph_examples():
    g = tait_graph(UNKNOT)
    assert g.vertex_count == 1 and not g.edges
    t = tait_graph(TREFOIL)
    assert len(t.edges) == 3
    assert len({s for *_, s in t.edges}) == 1
    assert (t.vertex_count, len(t.components())) in ((2, 1), (3, 1))


def test_edges_equal_crossings():
    rng = random.Random(1)
    for pd in [TREFOIL, FIGURE_EIGHT, HOPF] + [random_pd(rng) for _ in range(50)]:
        assert len(tait_graph(pd).edges) == pd.crossing_count


def test_medial_examples():
    assert medial_link(SignedPlaneGraph(1)) == UNKNOT
    g = SignedPlaneGraph(2, [(0, 1, "+")], [[(0, 0)], [(0, 1)]])
    one = medial_link(g)
    assert one.crossing_count == 1
    assert equiv_up_to_units(kauffman_bracket(one), kauffman_bracket(UNKNOT), 0)


def test_round_trip_isomorphic():
    rng = random.Random(2)
    for _ in range(100):
        g = random_plane_graph(rng, rng.randint(0, 8))
        assert isomorphic(tait_graph(medial_link(g)), g)


def test_pd_round_trip_bracket():
    for pd in (TREFOIL, FIGURE_EIGHT, HOPF):
        assert kauffman_bracket(medial_link(tait_graph(pd))) == kauffman_bracket(pd)


def test_forward_moves():
    # pendant vertex
    g = SignedPlaneGraph(2, [(0, 1, "+")], [[(0, 0)], [(0, 1)]])
    h = apply_move(g, "type1", 1)
    assert h.vertex_count == 1 and not h.edges
    # degree-two vertex with opposite signs
    g = SignedPlaneGraph(3, [(0, 1, "+"), (1, 2, "-")], [[(0, 0)], [(0, 1), (1, 0)], [(1, 1)]])
    h = apply_move(g, "type2", 1)
    assert h.vertex_count == 1 and not h.edges
    with pytest.raises(ValueError):
        apply_move(g, "type1", 1)
    # bigon of opposite signs
    g = SignedPlaneGraph(2, [(0, 1, "+"), (0, 1, "-")], [[(0, 0), (1, 0)], [(1, 1), (0, 1)]])
    h = apply_move(g, "type3", (0, 1))
    assert not h.edges
    bad = SignedPlaneGraph(2, [(0, 1, "+"), (0, 1, "+")], [[(0, 0), (1, 0)], [(1, 1), (0, 1)]])
    with pytest.raises(ValueError, match="equal signs"):
        apply_move(bad, "type3", (0, 1))


def test_moves_preserve_bracket():
    rng = random.Random(3)
    for _ in range(100):
        g = random_plane_graph(rng, rng.randint(1, 6), loops=False)
        base = bracket_of(g)
        v = rng.randrange(g.vertex_count)
        k = len(g.rotation[v])
        sign = rng.choice("+-")
        h = apply_move(g, "type1_inv", (v, rng.randrange(k + 1), sign))
        assert equiv_up_to_units(bracket_of(h), base, 0)
        assert equiv_up_to_units(bracket_of(apply_move(h, "type1", h.vertex_count - 1)), base, 0)
        h = apply_move(g, "type3_inv", ((rng.randrange(len(g.edges)), rng.randint(0, 1)), sign))
        assert equiv_up_to_units(bracket_of(h), base, 0)
        e = len(h.edges) - 2
        assert isomorphic(apply_move(h, "type3", (e, e + 1)), g)


def test_type2_inverse_undone():
    rng = random.Random(4)
    for _ in range(50):
        g = random_plane_graph(rng, rng.randint(1, 6), loops=False)
        v = rng.randrange(g.vertex_count)
        k = len(g.rotation[v])
        i, j = rng.randrange(k), rng.randrange(k)
        h = apply_move(g, "type2_inv", (v, i, j, rng.choice("+-")))
        assert equiv_up_to_units(bracket_of(h), bracket_of(g), 0)
        assert isomorphic(apply_move(h, "type2", g.vertex_count), g)


def test_remove_loops():
    rng = random.Random(5)
    for _ in range(100):
        g = random_plane_graph(rng, rng.randint(1, 8), loops=True)
        h = remove_loops(g)
        assert not h.has_loops()
        assert len(h.edges) <= len(g.edges)
        assert equiv_up_to_units(bracket_of(h), bracket_of(g), 0)


def test_disjoint_union_components():
    rng = random.Random(6)
    a, b = random_plane_graph(rng, 3), random_plane_graph(rng, 4)
    u = disjoint_union([a, b])
    assert len(u.components()) == 2
    assert u.vertex_count == a.vertex_count + b.vertex_count
