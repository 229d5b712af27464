"""Kauffman bracket of PD codes, used as an independent link-invariant oracle.

``kauffman_bracket`` is the plain 2^n state sum.  ``bracket_tangle``
evaluates the same polynomial by contracting crossings one at a time into
a planar tangle, which reaches the several-hundred-crossing diagrams the
link-to-element pipeline produces.  The two are cross-checked in the tests.
"""

from __future__ import annotations

import itertools
from collections import defaultdict

from .taitlink import PDCode

__all__ = [
    "LaurentPoly",
    "DELTA",
    "MAX_STATE_SUM_CROSSINGS",
    "kauffman_bracket",
    "bracket_tangle",
    "bracket",
    "equiv_up_to_units",
]

MAX_STATE_SUM_CROSSINGS = 14


class LaurentPoly:
    """Integer Laurent polynomial in A, stored as exponent -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None) -> None:
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] += c1 * c2
        return LaurentPoly(out)

    def __pow__(self, k: int) -> "LaurentPoly":
        out = LaurentPoly.monomial(0)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def mirror(self) -> "LaurentPoly":
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def divide_by_delta(self) -> "LaurentPoly":
        """Exact quotient by -A^2 - A^-2; raises if the division is not exact."""
        if self.is_zero():
            return LaurentPoly()
        low = min(self.terms)
        high = max(self.terms)
        # self = (-A^-2)(A^4 + 1) q, so q = -A^2 * self / (A^4 + 1)
        p = [self.terms.get(low + k, 0) for k in range(high - low + 1)]
        q = [0] * len(p)
        for k in range(len(p)):
            q[k] = p[k] - (q[k - 4] if k >= 4 else 0)
        if any(q[len(p) - 4 :]) if len(p) >= 4 else any(q):
            raise ArithmeticError("polynomial is not divisible by delta")
        quot = {low + k + 2: -c for k, c in enumerate(q[: len(p) - 4]) if c}
        return LaurentPoly(quot)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


ONE = LaurentPoly.monomial(0)
DELTA = LaurentPoly({2: -1, -2: -1})


def _loops(pairs_by_arc: dict, arcs) -> int:
    """Count closed loops in a perfect matching of arc ends."""
    parent = {a: a for a in arcs}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in pairs_by_arc:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(a) for a in arcs})


def kauffman_bracket(pd: PDCode) -> LaurentPoly:
    """State sum with <unknot> = 1 and loop value -A^2 - A^-2."""
    n = len(pd.crossings)
    if n > MAX_STATE_SUM_CROSSINGS:
        raise ValueError(f"{n} crossings exceed the state-sum cap of {MAX_STATE_SUM_CROSSINGS}")
    arcs = sorted({a for x in pd.crossings for a in x})
    counts: dict = defaultdict(int)
    for state in itertools.product((0, 1), repeat=n):
        joins = []
        for (a, b, c, d), s in zip(pd.crossings, state):
            # A-smoothing joins a-b and c-d, B-smoothing joins a-d and b-c
            joins += [(a, b), (c, d)] if s == 0 else [(a, d), (b, c)]
        loops = _loops(joins, arcs) + pd.unknots
        a_count = n - sum(state)
        counts[(a_count - (n - a_count), loops)] += 1
    return _assemble(counts)


def _assemble(counts: dict) -> LaurentPoly:
    out = LaurentPoly()
    cache: dict = {}
    for (exp, loops), mult in counts.items():
        if loops not in cache:
            cache[loops] = DELTA ** (loops - 1) if loops >= 1 else ONE
        out = out + cache[loops].shift(exp) * LaurentPoly.monomial(0, mult)
    return out


def _crossing_order(pd: PDCode) -> list[int]:
    """Greedy order keeping the open boundary of the partial tangle small."""
    n = len(pd.crossings)
    by_arc = defaultdict(list)
    for c, x in enumerate(pd.crossings):
        for a in x:
            by_arc[a].append(c)
    order: list[int] = []
    done: set = set()
    open_arcs: set = set()
    while len(order) < n:
        candidates = {c for a in open_arcs for c in by_arc[a] if c not in done}
        if not candidates:
            candidates = {min(set(range(n)) - done)}
        best = max(candidates, key=lambda c: (sum(a in open_arcs for a in pd.crossings[c]), -c))
        order.append(best)
        done.add(best)
        for a in pd.crossings[best]:
            if a in open_arcs:
                open_arcs.discard(a)
            else:
                open_arcs.add(a)
    return order


def _glue(match: tuple, joins) -> tuple[tuple, int]:
    """Attach two strands to a boundary matching.

    Nodes are arc labels.  A label joined twice (once by the old matching
    and once by a new strand, or twice by the new strands) becomes
    interior; the result is a union of paths, whose end labels give the new
    matching, and cycles, which are closed loops.
    """
    adj: dict = defaultdict(list)
    edges = list(match) + list(joins)
    for k, (x, y) in enumerate(edges):
        adj[x].append((k, y))
        adj[y].append((k, x))
    used = [False] * len(edges)
    pairs = []
    for x, nbrs in adj.items():
        if len(nbrs) != 1 or used[nbrs[0][0]]:
            continue
        cur = x
        while True:
            step = next((k, y) for k, y in adj[cur] if not used[k])
            used[step[0]] = True
            cur = step[1]
            if len(adj[cur]) == 1:
                break
        pairs.append((min(x, cur), max(x, cur)))
    loops = 0
    for k in range(len(edges)):
        if used[k]:
            continue
        loops += 1
        used[k] = True
        start, cur = edges[k]
        while cur != start:
            step = next((j, y) for j, y in adj[cur] if not used[j])
            used[step[0]] = True
            cur = step[1]
    return tuple(sorted(pairs)), loops


def bracket_tangle(pd: PDCode) -> LaurentPoly:
    """Same polynomial as the state sum, computed by tangle contraction.

    The partial state maps each matching of the open arc labels to a
    polynomial; every closed loop contributes a factor of delta and one
    factor is divided out at the end.
    """
    if not pd.crossings:
        return DELTA ** (pd.unknots - 1) if pd.unknots else ONE
    states: dict = {(): ONE}
    A, B = LaurentPoly.monomial(1), LaurentPoly.monomial(-1)
    powers = [ONE]
    for c in _crossing_order(pd):
        a, b, cc, d = pd.crossings[c]
        new_states: dict = defaultdict(LaurentPoly)
        for match, poly in states.items():
            for weight, joins in ((A, ((a, b), (cc, d))), (B, ((a, d), (b, cc)))):
                key, loops = _glue(match, joins)
                while len(powers) <= loops:
                    powers.append(powers[-1] * DELTA)
                new_states[key] = new_states[key] + poly * weight * powers[loops]
        states = {k: v for k, v in new_states.items() if not v.is_zero()}
    if set(states) - {()}:
        raise AssertionError("tangle contraction left open ends")
    total = states.get((), LaurentPoly())
    return total.divide_by_delta() * DELTA ** pd.unknots


def bracket(pd: PDCode) -> LaurentPoly:
    """State sum when small enough, tangle contraction otherwise."""
    if len(pd.crossings) <= 8:
        return kauffman_bracket(pd)
    return bracket_tangle(pd)


def equiv_up_to_units(
    p: LaurentPoly, q: LaurentPoly, delta_slack: int = 0, mirror: bool = False
) -> bool:
    """True iff p = +-A^(3k) delta^j q for some k and |j| <= delta_slack.

    With ``mirror`` the substitution A -> A^-1 on q is also allowed.
    """
    targets = [q, q.mirror()] if mirror else [q]
    for base in targets:
        for j in range(-delta_slack, delta_slack + 1):
            lhs, rhs = p, base
            if j > 0:
                rhs = rhs * DELTA ** j
            elif j < 0:
                lhs = lhs * DELTA ** (-j)
            if _unit_multiple(lhs, rhs):
                return True
    return False


def _unit_multiple(p: LaurentPoly, q: LaurentPoly) -> bool:
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    shift = max(p.terms) - max(q.terms)
    if shift % 3:
        return False
    for sgn in (1, -1):
        cand = q.shift(shift)
        if sgn < 0:
            cand = -cand
        if cand == p:
            return True
    return False
