import itertools
import random

import pytest

from thompsonlinks.bracket import (
    DELTA,
    MAX_STATE_SUM_CROSSINGS,
    LaurentPoly,
    bracket,
    bracket_tangle,
    equiv_up_to_units,
    kauffman_bracket,
)
from thompsonlinks.taitlink import PDCode, apply_move, medial_link, random_plane_graph

from conftest import FIGURE_EIGHT, HOPF, TREFOIL, UNKNOT, random_pd

TREFOIL_BRACKET = LaurentPoly({5: -1, -3: -1, -7: 1})
FIGURE_EIGHT_BRACKET = LaurentPoly({8: 1, 4: -1, 0: 1, -4: -1, -8: 1})
HOPF_BRACKET = LaurentPoly({4: -1, -4: -1})


def naive_bracket(pd: PDCode) -> LaurentPoly:
    """Direct 2^n enumeration with a fresh union-find per state."""
    total = LaurentPoly()
    n = len(pd.crossings)
    for state in itertools.product((0, 1), repeat=n):
        parent = {}

        def find(a):
            while parent.setdefault(a, a) != a:
                a = parent[a]
            return a

        for (a, b, c, d), s in zip(pd.crossings, state):
            pairs = ((a, b), (c, d)) if s == 0 else ((a, d), (b, c))
            for p, q in pairs:
                parent[find(p)] = find(q)
        arcs = {a for x in pd.crossings for a in x}
        loops = len({find(a) for a in arcs}) + pd.unknots
        ones = sum(state)
        total = total + LaurentPoly.monomial(n - 2 * ones) * DELTA ** (loops - 1)
    return total if n or pd.unknots != 1 else LaurentPoly.monomial(0)


def disjoint(p: PDCode, q: PDCode) -> PDCode:
    off = max((a for x in p.crossings for a in x), default=0)
    shifted = tuple(tuple(a + off for a in x) for x in q.crossings)
    return PDCode(p.crossings + shifted, p.unknots + q.unknots)


def test_laurent_text():
    assert str(TREFOIL_BRACKET) == "-A^5 - A^-3 + A^-7"
    assert str(DELTA) == "-A^2 - A^-2"
    assert str(LaurentPoly.monomial(0)) == "1"


def test_small_values():
    assert kauffman_bracket(UNKNOT) == LaurentPoly.monomial(0)
    assert kauffman_bracket(PDCode.parse("U\nU\n")) == DELTA
    assert kauffman_bracket(TREFOIL) == TREFOIL_BRACKET
    assert kauffman_bracket(FIGURE_EIGHT) == FIGURE_EIGHT_BRACKET
    assert kauffman_bracket(HOPF) == HOPF_BRACKET


def test_against_naive_enumeration():
    rng = random.Random(7)
    for pd in [TREFOIL, FIGURE_EIGHT, HOPF] + [random_pd(rng) for _ in range(40)]:
        assert kauffman_bracket(pd) == naive_bracket(pd)


def test_tangle_method_agrees():
    rng = random.Random(8)
    for _ in range(40):
        pd = random_pd(rng, 10)
        assert bracket_tangle(pd) == kauffman_bracket(pd)


def test_cap():
    g = random_plane_graph(random.Random(1), MAX_STATE_SUM_CROSSINGS + 1, loops=False)
    with pytest.raises(ValueError):
        kauffman_bracket(medial_link(g))
    assert bracket(medial_link(g)) == bracket_tangle(medial_link(g))


def test_equivalence_examples():
    p = TREFOIL_BRACKET
    assert equiv_up_to_units(p, p, 0)
    assert equiv_up_to_units(DELTA * p, p, 1)
    assert not equiv_up_to_units(DELTA * p, p, 0)
    assert equiv_up_to_units(-p.shift(6), p, 0)
    assert not equiv_up_to_units(p.shift(2), p, 0)
    assert not equiv_up_to_units(TREFOIL_BRACKET, LaurentPoly.monomial(0), 3)
    assert equiv_up_to_units(p.mirror(), p, 0, mirror=True)


def test_distant_union():
    rng = random.Random(9)
    for _ in range(20):
        p, q = random_pd(rng, 4), random_pd(rng, 4)
        assert kauffman_bracket(disjoint(p, q)) == DELTA * kauffman_bracket(p) * kauffman_bracket(q)


def test_reidemeister_moves_through_graphs():
    """Type 2 and type 3 graph moves are R2/R3 sequences; type 1 is an R1 kink."""
    rng = random.Random(10)
    for _ in range(100):
        g = random_plane_graph(rng, rng.randint(1, 6), loops=False)
        before = kauffman_bracket(medial_link(g))
        v = rng.randrange(g.vertex_count)
        i = rng.randrange(len(g.rotation[v]) or 1)
        k = len(g.rotation[v])
        j = rng.randrange(k + 1) if k else 0
        sign = rng.choice("+-")
        move = rng.choice(["type2_inv", "type3_inv"]) if g.edges else "type2_inv"
        if move == "type2_inv":
            h = apply_move(g, move, (v, i, (i + j) % max(k, 1) if k else 0, sign))
        else:
            e = rng.randrange(len(g.edges))
            h = apply_move(g, move, ((e, rng.randint(0, 1)), sign))
        after = kauffman_bracket(medial_link(h))
        assert equiv_up_to_units(before, after, 0)
