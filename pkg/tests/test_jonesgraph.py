import itertools
import random

import pytest

from thompsonlinks.dyadic import digit_sum
from thompsonlinks.element import from_word, generator, identity, invert, multiply, oplus, power
from thompsonlinks.jonesgraph import (
    ThompsonGraph,
    is_n_good,
    member_vecFn,
    path_lengths,
    subgroup_generator,
    technic_element,
    thompson_graph,
    vecFn_generators,
)
from thompsonlinks.plmap import breakpoints

from conftest import random_element

x = generator


def member(a, n=2):
    return member_vecFn(a, n)


def test_x0_graph():
    g = thompson_graph(x(0))
    assert g.vertex_count == 3
    assert sorted(g.upper_edges) == [(0, 1), (0, 2)]
    assert sorted(g.lower_edges) == [(0, 1), (1, 2)]
    assert path_lengths(g) == ([0, 1, 1], [0, 1, 2])


def test_identity_graph():
    g = thompson_graph(identity())
    assert g.vertex_count == 1 and not g.upper_edges and not g.lower_edges
    assert path_lengths(g) == ([0], [0])


def test_x0x1_graph_is_bipartite():
    g = thompson_graph(multiply(x(0), x(1)))
    colour = {0: 0}
    for a, b in sorted(g.upper_edges + g.lower_edges, key=lambda e: e[1]):
        colour.setdefault(b, 1 - colour[a])
        assert colour[b] != colour[a]


def test_graph_text_round_trip():
    g = thompson_graph(multiply(x(0), x(3)))
    h = ThompsonGraph.from_text(g.to_text())
    assert h.vertex_count == g.vertex_count
    assert sorted(h.upper_edges) == sorted(g.upper_edges)
    with pytest.raises(ValueError):
        ThompsonGraph.from_text("nonsense 1 2")


def test_edge_counts_and_incoming():
    rng = random.Random(1)
    for _ in range(100):
        a = random_element(rng)
        g = thompson_graph(a)
        assert len(g.upper_edges) == len(g.lower_edges) == a.leaves - 1
        for edges in (g.upper_edges, g.lower_edges):
            heads = sorted(b for _, b in edges)
            assert heads == list(range(1, a.leaves))
            for (p, q), (r, s) in itertools.combinations(edges, 2):
                assert not (p < r < q < s or r < p < s < q)


def test_top_path_equals_digit_sum():
    rng = random.Random(2)
    for _ in range(500):
        a = random_element(rng)
        top, bottom = path_lengths(thompson_graph(a))
        tb, bb = breakpoints(a)
        assert top[1:] == [digit_sum(t) for t in tb]
        assert bottom[1:] == [digit_sum(t) for t in bb]


def test_n_good_examples():
    assert is_n_good(thompson_graph(x(0)), 1)
    assert not is_n_good(thompson_graph(x(0)), 2)
    assert is_n_good(thompson_graph(multiply(x(0), x(1))), 2)


def test_membership_examples():
    for j in range(3):
        assert member(multiply(x(j), x(j + 1)))
    assert not member(x(0))
    lhs = multiply(multiply(power(x(0), 2), x(1)), invert(x(2)))
    rhs = multiply(power(multiply(x(0), x(1)), 2), invert(multiply(x(2), x(3))))
    assert lhs == rhs
    assert member(multiply(rhs, invert(lhs)))
    assert member(lhs)


def test_unknown_method():
    with pytest.raises(ValueError):
        member_vecFn(x(0), 2, "guess")
    with pytest.raises(ValueError):
        member_vecFn(x(0), 0)


def test_methods_agree():
    rng = random.Random(3)
    for _ in range(300):
        a = random_element(rng)
        for n in range(1, 7):
            assert member_vecFn(a, n, "graph") == member_vecFn(a, n, "digit_sum")


def test_generator_lists():
    assert vecFn_generators(2) == [x(0), x(1)]
    assert vecFn_generators(3) == [multiply(x(j), x(j + 1)) for j in range(3)]
    gens = vecFn_generators(4)
    assert gens[0] == from_word("x0 x1 x2")
    assert all(member_vecFn(g, 3) for g in gens)


def test_subgroup_closure():
    rng = random.Random(4)
    gens = vecFn_generators(3)
    for _ in range(100):
        a = identity()
        for _ in range(rng.randint(1, 6)):
            g = rng.choice(gens)
            a = multiply(a, g if rng.random() < 0.5 else invert(g))
        assert member(a)
        b = rng.choice(gens)
        assert member(multiply(multiply(invert(b), a), b))
        assert member(oplus(a, b))


@pytest.mark.parametrize("n", [3, 4])
def test_fn_relations(n):
    g = [subgroup_generator(j, n) for j in range(3 * n)]
    for i in range(2 * n - 1):
        for j in range(i):
            assert multiply(multiply(invert(g[j]), g[i]), g[j]) == g[i + n - 1]
    assert multiply(g[0], g[1]) != multiply(g[1], g[0])


@pytest.mark.parametrize("n", [3, 4])
def test_conjugation_recurrence(n):
    c = subgroup_generator(0, n)
    for j in range(n, 2 * n + 1):
        w = subgroup_generator(j - n + 1, n)
        assert multiply(multiply(invert(c), w), c) == subgroup_generator(j, n)


def test_technic_corpus_sample():
    for n in (3, 4):
        for m in ([1], [2], [3, 2], [1, 1, 3]):
            assert member_vecFn(technic_element(n, 1, m), n - 1)
