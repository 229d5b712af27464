import itertools
import random

import pytest

from thompsonlinks.bookembed import (
    LOWER,
    PAGE_SIGN,
    UPPER,
    Arc,
    BookLayout,
    EmbedStats,
    PlaneGraph,
    eliminate_separating_triangles,
    embed_signed,
    external_hamiltonian,
    layout,
    separating_triangles,
    simplify_midpoints,
    split_in_three,
    subdivide_once,
    triangulate,
)
from thompsonlinks.bracket import bracket, equiv_up_to_units
from thompsonlinks.taitlink import SignedPlaneGraph, medial_link, random_plane_graph

K4 = PlaneGraph({0: [1, 2, 3], 1: [0, 3, 2], 2: [0, 1, 3], 3: [0, 2, 1]})
OCTAHEDRON = PlaneGraph(
    {
        0: [1, 2, 3, 4],
        1: [0, 4, 5, 2],
        2: [0, 1, 5, 3],
        3: [0, 2, 5, 4],
        4: [0, 3, 5, 1],
        5: [1, 4, 3, 2],
    }
)


def cycle_graph(n: int) -> PlaneGraph:
    return PlaneGraph({v: [(v + 1) % n, (v - 1) % n] for v in range(n)})


def double_edge() -> SignedPlaneGraph:
    return SignedPlaneGraph(2, [(0, 1, "+"), (0, 1, "-")], [[(0, 0), (1, 0)], [(1, 1), (0, 1)]])


def assert_cycle(g: PlaneGraph, ham: list):
    assert sorted(ham) == g.vertices()
    for a, b in zip(ham, ham[1:] + ham[:1]):
        assert g.has_edge(a, b)


def test_fixture_graphs_are_plane():
    for g in (K4, OCTAHEDRON, cycle_graph(5)):
        assert g.is_plane()


def test_subdivide_counts():
    single = SignedPlaneGraph(2, [(0, 1, "+")], [[(0, 0)], [(0, 1)]])
    d = subdivide_once(single)
    assert d.vertex_count == 3 and len(d.edges) == 2
    d = subdivide_once(double_edge())
    p = PlaneGraph.from_signed(d)
    assert all(len(r) == 2 for r in p.rot.values()) and len(p.edges()) == 4
    rng = random.Random(1)
    for _ in range(20):
        g = random_plane_graph(rng, rng.randint(1, 10), loops=False)
        d = subdivide_once(g)
        assert d.vertex_count == g.vertex_count + len(g.edges)
        assert len(d.edges) == 2 * len(g.edges)
        PlaneGraph.from_signed(d)  # simple
    with pytest.raises(ValueError):
        subdivide_once(SignedPlaneGraph(1, [(0, 0, "+")], [[(0, 0), (0, 1)]]))


def test_triangulate_examples():
    tri = PlaneGraph({0: [1, 2], 1: [2, 0], 2: [0, 1]})
    h, added = triangulate(tri)
    assert added == [] and h.rot == tri.rot
    h, added = triangulate(cycle_graph(4))
    assert len(added) == 2  # one chord per side of the square
    p = PlaneGraph.from_signed(subdivide_once(double_edge()))
    h, added = triangulate(p)
    assert (2, 3) in added  # the two midpoints
    assert len(h.edges()) == 6


def test_separating_triangle_detection():
    assert separating_triangles(K4) == []
    assert separating_triangles(OCTAHEDRON) == []
    # K4 with an extra vertex stacked in one face: the outer triangle separates
    stacked = K4.copy()
    stacked.rot[4] = [0, 1, 2]
    stacked.rot[0].insert(stacked.rot[0].index(1) + 1, 4)
    stacked.rot[1].insert(stacked.rot[1].index(2) + 1, 4)
    stacked.rot[2].insert(stacked.rot[2].index(0) + 1, 4)
    assert stacked.is_plane()
    assert separating_triangles(stacked) == [(0, 1, 2)]
    stats = EmbedStats()
    fixed = eliminate_separating_triangles(stacked, set(), stats)
    assert separating_triangles(fixed) == []
    assert stats.separating_fixed == 1
    assert len(fixed.rot) == 6 and len(fixed.edges()) == 3 * 6 - 6


def test_protected_edges_never_subdivided():
    rng = random.Random(2)
    for _ in range(30):
        g = random_plane_graph(rng, rng.randint(2, 10), loops=False)
        d = subdivide_once(g)
        tri, _ = triangulate(PlaneGraph.from_signed(d))
        protected = {frozenset((u, v)) for u, v, _ in d.edges}
        out = eliminate_separating_triangles(tri, protected)
        assert separating_triangles(out) == []
        assert all(out.has_edge(*tuple(e)) for e in protected)
        assert out.is_plane() and len(out.edges()) == 3 * len(out.rot) - 6


def test_hamiltonian_examples():
    tri = PlaneGraph({0: [1, 2], 1: [2, 0], 2: [0, 1]})
    assert sorted(external_hamiltonian(tri)) == [0, 1, 2]
    for g in (K4, OCTAHEDRON):
        ham = external_hamiltonian(g)
        assert_cycle(g, ham)
        assert ham[0] == 0


def test_layout_of_cycle():
    g = cycle_graph(5)
    l = layout(g, [0, 1, 2, 3, 4])
    assert all(a.page == LOWER for a in l.arcs)
    spans = sorted(l.span(a) for a in l.arcs)
    assert spans == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]


def test_layout_pages_of_chords():
    l = layout(OCTAHEDRON, external_hamiltonian(OCTAHEDRON))
    assert not l.interleavings()
    pages = {a.page for a in l.arcs}
    assert pages == {UPPER, LOWER}


def test_interleaving_detected():
    l = BookLayout([0, 1, 2, 3], [Arc(0, 2, UPPER), Arc(1, 3, UPPER)])
    assert l.interleavings()
    with pytest.raises(AssertionError):
        l.check()
    l.arcs[1].page = LOWER
    l.check()


def test_simplify_and_split():
    # a path 0 - m - 1 with both halves upper merges into one arc
    l = BookLayout([0, 2, 1], [Arc(0, 2, UPPER, edge=0, part=1), Arc(2, 1, UPPER, edge=0, part=2)])
    s = simplify_midpoints(l)
    assert s.spine == [0, 1] and len(s.arcs) == 1 and s.arcs[0].page == UPPER
    l.arcs[1].page = LOWER
    assert simplify_midpoints(l).spine == [0, 2, 1]
    for sign, middle in (("+", UPPER), ("-", LOWER)):
        t = split_in_three(l, 0, sign)
        assert len(t.spine) == 4
        pages = [a.page for a in sorted(t.arcs, key=lambda a: a.part)]
        assert pages == [UPPER, middle, LOWER]
        assert pages.count(UPPER if sign == "+" else LOWER) == 2
        assert all(a.sign == PAGE_SIGN[a.page] for a in t.arcs)


def test_text_round_trip():
    g = random_plane_graph(random.Random(3), 6, loops=False)
    l = embed_signed(g)
    back = BookLayout.from_text(l.to_text())
    assert back.to_text() == l.to_text()
    with pytest.raises(ValueError):
        BookLayout.from_text("spine 0 1\narc 0 1 sideways +")


def check_embedding(g: SignedPlaneGraph):
    stats = EmbedStats()
    l = embed_signed(g, stats)
    assert not l.interleavings()
    n, m = len(g.edges), stats.tripled
    assert len(l.arcs) == n + 2 * m
    assert stats.backtracks == 0
    parts = {}
    for a in l.arcs:
        parts.setdefault(a.edge, []).append(a)
    assert sorted(parts) == list(range(n))
    tripled = 0
    for e, arcs in parts.items():
        if len(arcs) == 1:
            assert arcs[0].part == 0 and arcs[0].sign == g.edges[e][2]
            assert set(arcs[0].ends()) == set(g.edges[e][:2])
            continue
        tripled += 1
        assert sorted(a.part for a in arcs) == [1, 2, 3]
        assert all(a.sign == PAGE_SIGN[a.page] for a in arcs)
        want = UPPER if g.edges[e][2] == "+" else LOWER
        assert [a.page for a in arcs].count(want) == 2
        # the three pieces chain from one end of the parent edge to the other
        ends = [v for a in arcs for v in a.ends()]
        odd = {v for v in ends if ends.count(v) == 1}
        assert odd == set(g.edges[e][:2])
    assert tripled == m
    before = bracket(medial_link(g))
    after = bracket(medial_link(l.to_signed_graph()))
    assert equiv_up_to_units(after, before, 0)
    return l


def test_embed_examples():
    l = check_embedding(double_edge())
    assert l.spine[:1] == [0]
    single = SignedPlaneGraph(1)
    assert embed_signed(single).spine == [0]
    with pytest.raises(ValueError):
        embed_signed(SignedPlaneGraph(1, [(0, 0, "+")], [[(0, 0), (0, 1)]]))


def test_embed_random_graphs():
    rng = random.Random(4)
    for _ in range(60):
        check_embedding(random_plane_graph(rng, rng.randint(1, 10), loops=False))


def test_embedding_is_deterministic():
    g = random_plane_graph(random.Random(5), 9, loops=False)
    assert embed_signed(g).to_text() == embed_signed(g).to_text()


def test_interleaving_audit_matches_brute_force():
    rng = random.Random(6)
    for _ in range(20):
        l = embed_signed(random_plane_graph(rng, rng.randint(2, 9), loops=False))
        pos = l.positions()
        for a, b in itertools.combinations(l.arcs, 2):
            if a.page != b.page:
                continue
            p, q = sorted((pos[a.u], pos[a.v]))
            r, s = sorted((pos[b.u], pos[b.v]))
            assert not (p < r < q < s or r < p < s < q)
