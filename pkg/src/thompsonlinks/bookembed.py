"""Two-page book embeddings of signed plane graphs.

The pipeline subdivides every edge once, triangulates, subdivides edges of
separating triangles away, follows a Hamiltonian cycle of the result to
put the vertices on a line, and then cleans up the subdivision points so
that every edge is either whole or cut into three sign-compatible pieces.

Layout file grammar::

    spine v0 v1 v2 ...           vertex ids, left to right
    arc u v upper|lower +|-|?    one line per arc, u left of v
        [edge E part K] [rank R] optional provenance and nesting tie-break
"""

from __future__ import annotations

import logging
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

from .taitlink import SignedPlaneGraph

__all__ = [
    "PlaneGraph",
    "Arc",
    "BookLayout",
    "EmbedStats",
    "subdivide_once",
    "triangulate",
    "separating_triangles",
    "eliminate_separating_triangles",
    "external_hamiltonian",
    "layout",
    "simplify_midpoints",
    "split_in_three",
    "embed_signed",
]

log = logging.getLogger(__name__)

UPPER, LOWER = "upper", "lower"
PAGE_SIGN = {UPPER: "+", LOWER: "-"}


# ---------------------------------------------------------------------------
# simple plane graphs as neighbour rotations


@dataclass
class PlaneGraph:
    """Simple plane graph: vertex -> counterclockwise list of neighbours."""

    rot: dict = field(default_factory=dict)

    @classmethod
    def from_signed(cls, g: SignedPlaneGraph) -> "PlaneGraph":
        rot = {v: [g.head(d) for d in g.rotation[v]] for v in range(g.vertex_count)}
        for v, r in rot.items():
            if v in r or len(set(r)) != len(r):
                raise ValueError(f"graph is not simple at vertex {v}")
        return cls(rot)

    def copy(self) -> "PlaneGraph":
        return PlaneGraph({v: list(r) for v, r in self.rot.items()})

    def vertices(self) -> list:
        return sorted(self.rot)

    def edges(self) -> list[tuple]:
        return sorted((u, v) for u, r in self.rot.items() for v in r if u < v)

    def has_edge(self, u, v) -> bool:
        return v in self.rot[u]

    def next_in_face(self, u, v) -> tuple:
        r = self.rot[v]
        return v, r[(r.index(u) - 1) % len(r)]

    def faces(self) -> list[list[tuple]]:
        seen, out = set(), []
        for u in self.vertices():
            for v in self.rot[u]:
                if (u, v) in seen:
                    continue
                walk, d = [], (u, v)
                while d not in seen:
                    seen.add(d)
                    walk.append(d)
                    d = self.next_in_face(*d)
                out.append(walk)
        return out

    def add_chord(self, u, u_after, v, v_after) -> None:
        """Insert edge u-v counterclockwise after the given neighbours."""
        self.rot[u].insert(self.rot[u].index(u_after) + 1, v)
        self.rot[v].insert(self.rot[v].index(v_after) + 1, u)

    def is_plane(self) -> bool:
        nv = len(self.rot)
        ne = len(self.edges())
        return ne == 0 or nv - ne + len(self.faces()) == 2


def subdivide_once(g: SignedPlaneGraph) -> SignedPlaneGraph:
    """Put a midpoint on every edge; edge e=(u,v) becomes 2e=(u,m) and 2e+1=(m,v), m = V+e."""
    if g.has_loops():
        raise ValueError("cannot subdivide a graph with loops")
    nv = g.vertex_count
    edges, rotation = [], [[] for _ in range(nv + len(g.edges))]
    for e, (u, v, s) in enumerate(g.edges):
        m = nv + e
        edges += [(u, m, s), (m, v, s)]
        rotation[m] = [(2 * e, 1), (2 * e + 1, 0)]
    for v in range(nv):
        rotation[v] = [(2 * e, 0) if k == 0 else (2 * e + 1, 1) for e, k in g.rotation[v]]
    return SignedPlaneGraph(nv + len(g.edges), edges, rotation)


# ---------------------------------------------------------------------------
# triangulation


@dataclass
class EmbedStats:
    edges: int = 0  # n, edges of the input graph
    tripled: int = 0  # m, edges cut into three
    chords: int = 0
    separating_fixed: int = 0
    backtracks: int = 0
    cycle_length: int = 0
    supergraph: Optional["PlaneGraph"] = field(default=None, repr=False)  # final triangulation


def _chord_options(g: PlaneGraph, face: list, rng: Optional[random.Random]):
    k = len(face)
    corners = [(face[i][0], face[i][1]) for i in range(k)]  # (vertex, leaving neighbour)
    pairs = [(i, (i + 2) % k) for i in range(k)]  # ears first
    pairs += [(i, j) for i in range(k) for j in range(i + 3, k) if (j + 1) % k != i]
    if rng is not None:
        rng.shuffle(pairs)
    for i, j in pairs:
        (u, ua), (v, va) = corners[i], corners[j]
        if u != v and not g.has_edge(u, v):
            yield u, ua, v, va


def triangulate(g: PlaneGraph, stats: Optional[EmbedStats] = None, max_restarts: int = 50):
    """Add chords until every face is a triangle; returns (graph, added edges).

    Chords go in greedily, ears first.  A face with no admissible chord
    restarts the whole pass with a shuffled chord order; each restart is
    logged and counted.
    """
    if len(g.rot) < 3:
        raise ValueError("triangulation needs at least three vertices")
    rng = None
    for attempt in range(max_restarts + 1):
        h = g.copy()
        added = []
        stuck = False
        while True:
            face = next((f for f in h.faces() if len(f) > 3), None)
            if face is None:
                break
            choice = next(_chord_options(h, face, rng), None)
            if choice is None:
                stuck = True
                break
            u, ua, v, va = choice
            h.add_chord(u, ua, v, va)
            added.append((min(u, v), max(u, v)))
        if not stuck:
            nv = len(h.rot)
            if len(h.edges()) != 3 * nv - 6:
                raise AssertionError("triangulation is not maximal")
            if stats is not None:
                stats.chords += len(added)
            return h, added
        if stats is not None:
            stats.backtracks += 1
        log.warning("triangulation dead end on attempt %d; restarting with shuffled chords", attempt)
        rng = random.Random(attempt)
    raise RuntimeError("triangulation failed after repeated restarts")


def separating_triangles(g: PlaneGraph) -> list[tuple]:
    """Triangles that do not bound a face."""
    if len(g.rot) <= 3:
        return []
    facial = {frozenset(u for u, _ in f) for f in g.faces() if len(f) == 3}
    out = []
    for a, b in g.edges():
        for c in set(g.rot[a]) & set(g.rot[b]):
            if c > b and frozenset((a, b, c)) not in facial:
                out.append((a, b, c))
    return sorted(out)


def eliminate_separating_triangles(
    g: PlaneGraph, protected: set, stats: Optional[EmbedStats] = None
) -> PlaneGraph:
    """Subdivide an unprotected edge of each separating triangle and re-triangulate.

    ``protected`` holds frozenset edges that must never be subdivided.  The
    new vertex is joined to the apexes of its two faces.
    """
    g = g.copy()
    while True:
        tris = separating_triangles(g)
        if not tris:
            return g
        a, b, c = tris[0]
        sides = [(a, b), (b, c), (a, c)]
        free = [s for s in sides if frozenset(s) not in protected]
        if not free:
            raise AssertionError(f"every edge of triangle {tris[0]} is protected")
        u, v = free[0]
        _, c1 = g.next_in_face(u, v)
        _, c2 = g.next_in_face(v, u)
        w = max(g.rot) + 1
        g.rot[u][g.rot[u].index(v)] = w
        g.rot[v][g.rot[v].index(u)] = w
        g.rot[w] = [v, c1, u, c2]
        g.rot[c1].insert(g.rot[c1].index(u) + 1, w)
        g.rot[c2].insert(g.rot[c2].index(v) + 1, w)
        if stats is not None:
            stats.separating_fixed += 1


# ---------------------------------------------------------------------------
# Hamiltonian cycle


def _hamiltonian_attempt(g: PlaneGraph, start, rng: Optional[random.Random], budget: int):
    verts = g.vertices()
    n = len(verts)
    on_path = {start}
    path = [start]
    tiebreak = {v: (rng.random() if rng else 0.0, v) for v in verts}

    def options(x) -> Optional[list]:
        free = [w for w in verts if w not in on_path]
        if not free:
            return []
        forced = []
        for w in free:
            usable = sum(1 for y in g.rot[w] if y not in on_path or y == x or y == start)
            if usable < 2 and not (x == start and w in g.rot[x]):
                return None
            if usable == 2 and x in g.rot[w] and w not in g.rot[start]:
                forced.append(w)
        seen = {x}
        queue = [x]
        while queue:
            y = queue.pop()
            for z in g.rot[y]:
                if z not in on_path and z not in seen:
                    seen.add(z)
                    queue.append(z)
        if len(seen) - 1 != len(free) or len(forced) > 1:
            return None
        if forced:
            return forced
        cand = [w for w in g.rot[x] if w not in on_path]
        return sorted(cand, key=lambda w: (sum(y not in on_path for y in g.rot[w]), tiebreak[w]))

    stack = [iter(options(start) or [])]
    steps = 0
    while stack and steps < budget:
        steps += 1
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            if len(path) > 1:
                on_path.discard(path.pop())
            continue
        path.append(nxt)
        on_path.add(nxt)
        if len(path) == n:
            if start in g.rot[nxt]:
                return path
            on_path.discard(path.pop())
            continue
        opts = options(nxt)
        if not opts:
            on_path.discard(path.pop())
            continue
        stack.append(iter(opts))
    return None


def external_hamiltonian(g: PlaneGraph, attempts: int = 400, budget: int = 4000) -> list:
    """Hamiltonian cycle by pruned depth-first search with restarts.

    Each step checks that every unvisited vertex keeps two usable
    neighbours, that the unvisited part stays connected to the path end,
    and takes a forced step when there is one; otherwise the neighbour
    with the fewest free neighbours goes first.  Backtracking has heavy
    tails on these graphs, so each attempt gets a small step budget and
    the next one reshuffles ties from a fixed seed; output is
    deterministic.  A maximal plane graph without separating triangles
    always has a cycle, so running out of attempts is an internal error.
    The cycle starts at the smallest vertex.
    """
    verts = g.vertices()
    if len(verts) < 3:
        raise ValueError("need at least three vertices")
    for k in range(attempts):
        rng = random.Random(k) if k else None
        start = verts[0] if k == 0 else rng.choice(verts)
        path = _hamiltonian_attempt(g, start, rng, budget * (1 + k // 50))
        if path is not None:
            i = path.index(verts[0])
            return path[i:] + path[:i]
    raise RuntimeError("no Hamiltonian cycle found; the graph violates the search precondition")


# ---------------------------------------------------------------------------
# book layouts


@dataclass
class Arc:
    u: int
    v: int
    page: str
    sign: Optional[str] = None
    edge: Optional[int] = None  # parent edge of the input graph
    part: int = 0  # 0 whole edge, otherwise position from the parent's first end
    rank: int = 0  # larger is outer among arcs with equal ends

    def ends(self) -> tuple:
        return (self.u, self.v)


@dataclass
class BookLayout:
    spine: list = field(default_factory=list)
    arcs: list = field(default_factory=list)

    def copy(self) -> "BookLayout":
        return BookLayout(list(self.spine), [Arc(**vars(a)) for a in self.arcs])

    def positions(self) -> dict:
        return {v: i for i, v in enumerate(self.spine)}

    def span(self, arc: Arc, pos: Optional[dict] = None) -> tuple:
        pos = pos or self.positions()
        a, b = pos[arc.u], pos[arc.v]
        return (a, b) if a < b else (b, a)

    def normalize(self) -> None:
        """Orient every arc left to right."""
        pos = self.positions()
        for arc in self.arcs:
            if pos[arc.u] > pos[arc.v]:
                arc.u, arc.v = arc.v, arc.u

    def interleavings(self) -> list[tuple]:
        """Pairs of same-page arcs a < c < b < d, by quadratic scan."""
        pos = self.positions()
        bad = []
        by_page = defaultdict(list)
        for k, arc in enumerate(self.arcs):
            by_page[arc.page].append((self.span(arc, pos), k))
        for items in by_page.values():
            for (s1, k1) in items:
                for (s2, k2) in items:
                    if s1[0] < s2[0] < s1[1] < s2[1]:
                        bad.append((k1, k2))
        return bad

    def check(self) -> None:
        pos = self.positions()
        if len(pos) != len(self.spine):
            raise ValueError("spine repeats a vertex")
        for arc in self.arcs:
            if arc.u not in pos or arc.v not in pos or arc.u == arc.v:
                raise ValueError(f"bad arc {arc}")
            if arc.page not in (UPPER, LOWER):
                raise ValueError(f"bad page {arc.page!r}")
        bad = self.interleavings()
        if bad:
            raise AssertionError(f"same-page arcs interleave: {bad[:3]}")

    def rotation(self) -> dict:
        """Counterclockwise arc order at every spine vertex, starting east."""
        pos = self.positions()
        around = {v: [] for v in self.spine}
        for k, arc in enumerate(self.arcs):
            for end, other in ((arc.u, arc.v), (arc.v, arc.u)):
                w = pos[other]
                right = w > pos[end]
                if arc.page == UPPER:
                    key = (0, w, arc.rank) if right else (1, w, -arc.rank)
                else:
                    key = (2, -w, arc.rank) if not right else (3, -w, -arc.rank)
                around[end].append((key, k, 0 if end == arc.u else 1))
        return {v: [(k, e) for _, k, e in sorted(items)] for v, items in around.items()}

    def to_signed_graph(self) -> SignedPlaneGraph:
        """Plane graph drawn by the layout, vertices renumbered by spine position."""
        pos = self.positions()
        edges = [(pos[a.u], pos[a.v], a.sign or "?") for a in self.arcs]
        rot = self.rotation()
        g = SignedPlaneGraph(len(self.spine), edges, [rot[v] for v in self.spine])
        if self.spine and rot[self.spine[0]]:
            first = rot[self.spine[0]]
            uppers = sum(1 for k, _ in first if self.arcs[k].page == UPPER)
            g.outer = [first[(uppers or len(first)) - 1]]
        return g

    def to_text(self) -> str:
        lines = ["spine " + " ".join(str(v) for v in self.spine)]
        for a in self.arcs:
            line = f"arc {a.u} {a.v} {a.page} {a.sign or '?'}"
            if a.edge is not None:
                line += f" edge {a.edge} part {a.part}"
            if a.rank:
                line += f" rank {a.rank}"
            lines.append(line)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BookLayout":
        out = cls()
        for lineno, raw in enumerate(text.splitlines(), 1):
            parts = raw.split("#", 1)[0].split()
            if not parts:
                continue
            try:
                if parts[0] == "spine":
                    out.spine = [int(p) for p in parts[1:]]
                elif parts[0] == "arc":
                    arc = Arc(int(parts[1]), int(parts[2]), parts[3])
                    arc.sign = None if parts[4] == "?" else parts[4]
                    extra = dict(zip(parts[5::2], parts[6::2]))
                    if "edge" in extra:
                        arc.edge, arc.part = int(extra["edge"]), int(extra["part"])
                    arc.rank = int(extra.get("rank", 0))
                    out.arcs.append(arc)
                else:
                    raise ValueError
            except (ValueError, IndexError):
                raise ValueError(f"line {lineno}: cannot parse {raw.strip()!r}") from None
        out.check()
        return out


def layout(graph: PlaneGraph, ham: list, edges=None) -> BookLayout:
    """Book layout along the Hamiltonian cycle ``ham``.

    The cycle is cut at its closing edge (ham[-1], ham[0]); the face left of
    that dart plays the outer face, so it lies outside the cycle and the
    traversal keeps the inside on its right.  Arcs outside the cycle go to
    the upper page, the rest (inside arcs and cycle edges) to the lower.
    ``edges`` restricts the layout to a subgraph, given as (u, v) pairs;
    vertices it does not touch leave the spine.
    """
    n = len(ham)
    pos = {v: i for i, v in enumerate(ham)}
    cycle = {frozenset((ham[i], ham[(i + 1) % n])) for i in range(n)}
    wanted = graph.edges() if edges is None else [(min(e), max(e)) for e in edges]

    def side(u, v) -> str:
        i = pos[u]
        prev, nxt = ham[i - 1], ham[(i + 1) % n]
        r = graph.rot[u]
        k = r.index(nxt)
        for step in range(1, len(r)):
            w = r[(k + step) % len(r)]
            if w == v:
                return UPPER
            if w == prev:
                return LOWER
        raise AssertionError("neighbour not found around the cycle")

    used = {x for e in wanted for x in e} if edges is not None else set(ham)
    out = BookLayout([v for v in ham if v in used])
    for u, v in wanted:
        if frozenset((u, v)) in cycle:
            page = LOWER
        else:
            page = side(u, v)
            if side(v, u) != page:
                raise AssertionError(f"edge {(u, v)} classified on both sides of the cycle")
        a, b = (u, v) if pos[u] < pos[v] else (v, u)
        out.arcs.append(Arc(a, b, page, rank=pos[b] - pos[a]))
    out.check()
    return out


def _midpoints(l: BookLayout) -> dict:
    """Parent edge -> (midpoint, first half, second half) for cut-in-two edges."""
    halves = defaultdict(dict)
    for k, a in enumerate(l.arcs):
        if a.edge is not None and a.part in (1, 2):
            halves[a.edge][a.part] = k
    out = {}
    for e, parts in halves.items():
        if set(parts) == {1, 2}:
            a1, a2 = l.arcs[parts[1]], l.arcs[parts[2]]
            (m,) = set(a1.ends()) & set(a2.ends())
            out[e] = (m, parts[1], parts[2])
    return out


def simplify_midpoints(l: BookLayout) -> BookLayout:
    """Drop each midpoint whose two halves lie on the same page."""
    l = l.copy()
    pos = l.positions()
    dead_arcs, dead_verts = set(), set()
    merged = []
    for e, (m, k1, k2) in sorted(_midpoints(l).items()):
        a1, a2 = l.arcs[k1], l.arcs[k2]
        if a1.page != a2.page:
            continue
        x = a1.u if a1.v == m else a1.v
        y = a2.u if a2.v == m else a2.v
        lo = min(pos[x], pos[y], pos[m])
        hi = max(pos[x], pos[y], pos[m])
        merged.append(Arc(x, y, a1.page, a1.sign, e, 0, rank=hi - lo))
        dead_arcs |= {k1, k2}
        dead_verts.add(m)
    l.arcs = [a for k, a in enumerate(l.arcs) if k not in dead_arcs] + merged
    l.spine = [v for v in l.spine if v not in dead_verts]
    l.normalize()
    return l


def split_in_three(l: BookLayout, edge: int, sign: str) -> BookLayout:
    """Replace the surviving midpoint of ``edge`` by two spine-adjacent vertices.

    The outer sub-arcs keep their pages; the middle one goes to the page of
    ``sign`` so that two of the three pieces sit on that page.  Every piece
    is then labelled by its page.
    """
    l = l.copy()
    m, k1, k2 = _midpoints(l)[edge]
    a1, a2 = l.arcs[k1], l.arcs[k2]
    if a1.page == a2.page:
        raise ValueError(f"edge {edge}: both halves on the {a1.page} page")
    m1, m2 = m, max(l.spine) + 1
    l.spine.insert(l.spine.index(m) + 1, m2)
    if a2.u == m:
        a2.u = m2
    else:
        a2.v = m2
    mid_page = UPPER if sign == "+" else LOWER
    a1.part, a2.part = 1, 3
    l.arcs.append(Arc(m1, m2, mid_page, edge=edge, part=2))
    for a in (a1, a2, l.arcs[-1]):
        a.sign = PAGE_SIGN[a.page]
    l.normalize()
    return l


def embed_signed(g: SignedPlaneGraph, stats: Optional[EmbedStats] = None) -> BookLayout:
    """Book layout of a loop-free connected signed graph, each edge whole or cut in three.

    Spine vertices keep the ids of ``g`` (0..V-1); other ids are fresh.
    Whole edges keep their sign, which may not match their page.
    """
    stats = stats if stats is not None else EmbedStats()
    stats.edges = len(g.edges)
    if g.has_loops():
        raise ValueError("remove loops before embedding")
    if len(g.components()) != 1:
        raise ValueError("embed one connected component at a time")
    if g.vertex_count == 1:
        return BookLayout([0], [])
    d = subdivide_once(g)
    plane = PlaneGraph.from_signed(d)
    tri, _ = triangulate(plane, stats)
    protected = {frozenset((u, v)) for u, v, _ in d.edges}
    tri = eliminate_separating_triangles(tri, protected, stats)
    stats.supergraph = tri
    ham = external_hamiltonian(tri)
    stats.cycle_length = len(ham)
    base = layout(tri, ham, [(u, v) for u, v, _ in d.edges])
    nv = g.vertex_count
    for arc in base.arcs:
        mid = arc.u if arc.u >= nv else arc.v
        e = mid - nv
        arc.edge = e
        arc.sign = None
        far = arc.v if mid == arc.u else arc.u
        arc.part = 1 if far == g.edges[e][0] else 2
    out = simplify_midpoints(base)
    for e, _ in sorted(_midpoints(out).items()):
        out = split_in_three(out, e, g.edges[e][2])
        stats.tripled += 1
    for arc in out.arcs:
        if arc.part == 0:
            arc.sign = g.edges[arc.edge][2]
    out.check()
    return out
