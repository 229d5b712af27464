"""Link diagrams as PD codes and their signed plane (Tait) graphs.

PD file grammar, one item per line, ``#`` starts a comment::

    X a b c d      a crossing; arc labels counterclockwise, a-c under, b-d over
    U              a crossingless unknot component
    OUTER a b ...  arc labels bounding the unbounded face of one component

Labels are non-negative integers, each used exactly twice.  A component
without an OUTER line uses its face with the most corners (ties broken by
the smallest label set); the choice only moves the diagram on the sphere.

Crossing sign, fixed project-wide: a crossing is "+" when a quarter turn
counterclockwise of the over-strand sweeps it across the two gray
regions.  For ``X a b c d`` those are the sectors (b, c) and (d, a).
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field

__all__ = [
    "PDCode",
    "SignedPlaneGraph",
    "faces",
    "checkerboard",
    "tait_graph",
    "medial_link",
    "apply_move",
    "remove_loops",
    "canonical_form",
    "isomorphic",
    "disjoint_union",
    "random_plane_graph",
]

Dart = tuple  # (edge index, end) with end 0 at edge[0] and 1 at edge[1]


# ---------------------------------------------------------------------------
# PD codes


@dataclass(frozen=True)
class PDCode:
    crossings: tuple = ()
    unknots: int = 0
    outer: tuple = ()

    def __post_init__(self) -> None:
        seen: dict[int, int] = defaultdict(int)
        for x in self.crossings:
            if len(x) != 4:
                raise ValueError(f"crossing {x} does not have four arcs")
            for a in x:
                seen[a] += 1
        bad = sorted(a for a, k in seen.items() if k != 2)
        if bad:
            raise ValueError(f"arc labels not used exactly twice: {bad}")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @classmethod
    def parse(cls, text: str) -> "PDCode":
        crossings, unknots, outer = [], 0, []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            head = parts[0].upper()
            try:
                if head == "X" and len(parts) == 5:
                    crossings.append(tuple(int(p) for p in parts[1:]))
                elif head == "U" and len(parts) == 1:
                    unknots += 1
                elif head == "OUTER" and len(parts) > 1:
                    outer.append(frozenset(int(p) for p in parts[1:]))
                else:
                    raise ValueError
            except ValueError:
                raise ValueError(f"line {lineno}: cannot parse {raw.strip()!r}") from None
        return cls(tuple(crossings), unknots, tuple(outer))

    def to_text(self) -> str:
        lines = ["X " + " ".join(str(a) for a in x) for x in self.crossings]
        lines += ["U"] * self.unknots
        lines += ["OUTER " + " ".join(str(a) for a in sorted(f)) for f in self.outer]
        return "\n".join(lines) + "\n"

    def relabel(self) -> "PDCode":
        """Renumber arcs 1..2n in order of first appearance."""
        mapping: dict[int, int] = {}
        for x in self.crossings:
            for a in x:
                mapping.setdefault(a, len(mapping) + 1)
        return PDCode(
            tuple(tuple(mapping[a] for a in x) for x in self.crossings),
            self.unknots,
            tuple(frozenset(mapping[a] for a in f) for f in self.outer),
        )


def _slot_partner(pd: PDCode) -> dict:
    where: dict[int, list] = defaultdict(list)
    for c, x in enumerate(pd.crossings):
        for s, a in enumerate(x):
            where[a].append((c, s))
    partner = {}
    for a, (p, q) in where.items():
        partner[p] = q
        partner[q] = p
    return partner


def _crossing_components(pd: PDCode) -> list[list[int]]:
    partner = _slot_partner(pd)
    comp = [-1] * len(pd.crossings)
    out = []
    for start in range(len(pd.crossings)):
        if comp[start] >= 0:
            continue
        comp[start] = len(out)
        group, queue = [start], deque([start])
        while queue:
            c = queue.popleft()
            for s in range(4):
                c2 = partner[(c, s)][0]
                if comp[c2] < 0:
                    comp[c2] = len(out)
                    group.append(c2)
                    queue.append(c2)
        out.append(sorted(group))
    return out


@dataclass
class FaceData:
    """Faces of a PD map; sector (c, s) lies between slots s and s+1 of crossing c."""

    boundaries: list  # face id -> list of sectors in traversal order
    sector_face: dict  # (c, s) -> face id
    component: list  # face id -> component index (crossing components first)
    outer: list  # component index -> outer face id
    unknot_faces: list  # (inner, outer) ids for each crossingless unknot

    def arcs(self, pd: PDCode, f: int) -> frozenset:
        return frozenset(pd.crossings[c][s] for c, s in self.boundaries[f])


def faces(pd: PDCode) -> FaceData:
    partner = _slot_partner(pd)
    sector_face: dict = {}
    boundaries: list = []
    for c in range(len(pd.crossings)):
        for s in range(4):
            if (c, s) in sector_face:
                continue
            fid = len(boundaries)
            walk = []
            cur = (c, s)
            while cur not in sector_face:
                sector_face[cur] = fid
                walk.append(cur)
                # leave along slot s (the sector lies to its left) and turn
                # clockwise at the far crossing
                c2, s2 = partner[cur]
                cur = (c2, (s2 - 1) % 4)
            boundaries.append(walk)
    comps = _crossing_components(pd)
    comp_of = {}
    for k, group in enumerate(comps):
        for c in group:
            comp_of[c] = k
    component = [comp_of[b[0][0]] for b in boundaries]
    for k, group in enumerate(comps):
        v = len(group)
        f = sum(1 for x in component if x == k)
        if v - 2 * v + f != 2:
            raise ValueError(f"diagram component {k} is not planar (V-E+F = {f - v})")
    outer = []
    for k in range(len(comps)):
        ids = [f for f in range(len(boundaries)) if component[f] == k]
        chosen = None
        for want in pd.outer:
            hits = [f for f in ids if frozenset(pd.crossings[c][s] for c, s in boundaries[f]) == want]
            if hits:
                chosen = hits[0]
        if chosen is None:
            chosen = max(
                ids,
                key=lambda f: (
                    len(boundaries[f]),
                    [-a for a in sorted(pd.crossings[c][s] for c, s in boundaries[f])],
                ),
            )
        outer.append(chosen)
    unknot_faces = []
    for _ in range(pd.unknots):
        inner = len(boundaries)
        boundaries.extend([[], []])
        component.extend([len(outer), len(outer)])
        outer.append(inner + 1)
        unknot_faces.append((inner, inner + 1))
    return FaceData(boundaries, sector_face, component, outer, unknot_faces)


def checkerboard(pd: PDCode, data: FaceData | None = None) -> list[bool]:
    """Gray flag per face; every unbounded face is white."""
    data = data or faces(pd)
    adj: dict[int, set] = defaultdict(set)
    for (c, s), f in data.sector_face.items():
        # the arc at slot s separates sectors s-1 and s
        g = data.sector_face[(c, (s - 1) % 4)]
        adj[f].add(g)
        adj[g].add(f)
    color: dict[int, bool] = {}
    for root in data.outer:
        color[root] = False
        queue = deque([root])
        while queue:
            f = queue.popleft()
            for g in adj[f]:
                if g not in color:
                    color[g] = not color[f]
                    queue.append(g)
                elif color[g] == color[f]:
                    raise ValueError("face coloring conflict; the PD code is not a plane diagram")
    for inner, _ in data.unknot_faces:
        color[inner] = True
    return [color[f] for f in range(len(data.boundaries))]


# ---------------------------------------------------------------------------
# signed plane graphs


@dataclass
class SignedPlaneGraph:
    """Vertices 0..n-1, signed edges, and a counterclockwise rotation of darts."""

    vertex_count: int
    edges: list = field(default_factory=list)  # (u, v, sign)
    rotation: list = field(default_factory=list)  # vertex -> list of darts
    outer: list = field(default_factory=list)  # darts with the unbounded face on their left

    def __post_init__(self) -> None:
        if not self.rotation:
            self.rotation = [[] for _ in range(self.vertex_count)]

    def copy(self) -> "SignedPlaneGraph":
        return SignedPlaneGraph(
            self.vertex_count, list(self.edges), [list(r) for r in self.rotation], list(self.outer)
        )

    def outer_faces(self) -> list[list]:
        """One face per component with edges: the marked one, else the longest."""
        fs = self.faces()
        comp_of = {v: k for k, comp in enumerate(self.components()) for v in comp}
        chosen: dict = {}
        for f in fs:
            k = comp_of[self.tail(f[0])]
            if any(d in f for d in self.outer):
                chosen[k] = (1, f)
            elif k not in chosen or (chosen[k][0] == 0 and len(f) > len(chosen[k][1])):
                chosen[k] = (0, f)
        return [chosen[k][1] for k in sorted(chosen)]

    def tail(self, d: Dart) -> int:
        return self.edges[d[0]][d[1]]

    def head(self, d: Dart) -> int:
        return self.edges[d[0]][1 - d[1]]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def check(self) -> None:
        darts = [d for r in self.rotation for d in r]
        want = [(e, k) for e in range(len(self.edges)) for k in (0, 1)]
        if sorted(darts) != sorted(want):
            raise ValueError("rotation system does not list every dart once")
        for v, r in enumerate(self.rotation):
            for d in r:
                if self.tail(d) != v:
                    raise ValueError(f"dart {d} listed at the wrong vertex {v}")

    def next_in_face(self, d: Dart) -> Dart:
        """Following dart with the face on the left."""
        r = (d[0], 1 - d[1])
        rot = self.rotation[self.tail(r)]
        return rot[(rot.index(r) - 1) % len(rot)]

    def faces(self) -> list[list]:
        seen, out = set(), []
        for v in range(self.vertex_count):
            for d in self.rotation[v]:
                if d in seen:
                    continue
                walk = []
                while d not in seen:
                    seen.add(d)
                    walk.append(d)
                    d = self.next_in_face(d)
                out.append(walk)
        return out

    def components(self) -> list[list[int]]:
        comp = [-1] * self.vertex_count
        out = []
        for s in range(self.vertex_count):
            if comp[s] >= 0:
                continue
            comp[s] = len(out)
            group, queue = [s], deque([s])
            while queue:
                v = queue.popleft()
                for d in self.rotation[v]:
                    w = self.head(d)
                    if comp[w] < 0:
                        comp[w] = len(out)
                        group.append(w)
                        queue.append(w)
            out.append(sorted(group))
        return out

    def is_plane(self) -> bool:
        """Euler's formula on every component."""
        self.check()
        comps = self.components()
        comp_of = {v: k for k, g in enumerate(comps) for v in g}
        nf = defaultdict(int)
        for f in self.faces():
            nf[comp_of[self.tail(f[0])]] += 1
        ne = defaultdict(int)
        for u, _, _ in self.edges:
            ne[comp_of[u]] += 1
        for k, g in enumerate(comps):
            faces_k = nf[k] if ne[k] else 1
            if len(g) - ne[k] + faces_k != 2:
                return False
        return True

    def has_loops(self) -> bool:
        return any(u == v for u, v, _ in self.edges)

    def subgraph(self, vertices) -> "SignedPlaneGraph":
        keep = sorted(vertices)
        vmap = {v: i for i, v in enumerate(keep)}
        emap = {}
        edges = []
        for e, (u, v, s) in enumerate(self.edges):
            if u in vmap and v in vmap:
                emap[e] = len(edges)
                edges.append((vmap[u], vmap[v], s))
        rot = [[(emap[e], k) for e, k in self.rotation[v]] for v in keep]
        return SignedPlaneGraph(len(keep), edges, rot)

    def to_text(self) -> str:
        lines = [f"vertices {self.vertex_count}"]
        lines += [f"edge {u} {v} {s}" for u, v, s in self.edges]
        for v, r in enumerate(self.rotation):
            lines.append(f"rotation {v} " + " ".join(f"{e}.{k}" for e, k in r))
        return "\n".join(lines) + "\n"


def disjoint_union(graphs) -> SignedPlaneGraph:
    out = SignedPlaneGraph(0)
    for g in graphs:
        voff, eoff = out.vertex_count, len(out.edges)
        out.edges += [(u + voff, v + voff, s) for u, v, s in g.edges]
        out.rotation += [[(e + eoff, k) for e, k in r] for r in g.rotation]
        out.vertex_count += g.vertex_count
    return out


def tait_graph(pd: PDCode) -> SignedPlaneGraph:
    data = faces(pd)
    gray = checkerboard(pd, data)
    vid = {}
    for f, is_gray in enumerate(gray):
        if is_gray:
            vid[f] = len(vid)
    g = SignedPlaneGraph(len(vid))
    dart_at = {}
    for c in range(len(pd.crossings)):
        pair = (1, 3) if gray[data.sector_face[(c, 1)]] else (0, 2)
        sign = "+" if pair == (1, 3) else "-"
        f1, f2 = data.sector_face[(c, pair[0])], data.sector_face[(c, pair[1])]
        e = len(g.edges)
        g.edges.append((vid[f1], vid[f2], sign))
        dart_at[(c, pair[0])] = (e, 0)
        dart_at[(c, pair[1])] = (e, 1)
    for f in data.outer:
        for c, sec in data.boundaries[f]:
            # the white sector sec is flanked by gray sectors sec-1 and sec+1;
            # the edge's dart from sector sec+1 has this face on its left
            nb = (c, (sec + 1) % 4)
            if nb in dart_at:
                g.outer.append(dart_at[nb])
                break
    for f, v in vid.items():
        # boundary walks run with the face on the left, so corners come
        # counterclockwise around an interior point
        g.rotation[v] = [dart_at[sec] for sec in data.boundaries[f]]
    g.check()
    return g


def _slots(e: int, sign: str) -> tuple:
    """Arc-end names of the crossing on edge e, counterclockwise from an under end."""
    ne, nw, sw, se = (e, 1, "R"), (e, 0, "L"), (e, 0, "R"), (e, 1, "L")
    return (ne, nw, sw, se) if sign == "+" else (nw, sw, se, ne)


def medial_link(g: SignedPlaneGraph) -> PDCode:
    """Diagram whose Tait graph is g: one crossing per edge, one unknot per isolated vertex."""
    label: dict = {}
    nxt = 1
    unknots = 0
    for v in range(g.vertex_count):
        rot = g.rotation[v]
        if not rot:
            unknots += 1
            continue
        k = len(rot)
        for i in range(k):
            a = (rot[i][0], rot[i][1], "L")
            b = (rot[(i + 1) % k][0], rot[(i + 1) % k][1], "R")
            label[a] = nxt
            label[b] = nxt
            nxt += 1
    crossings = tuple(
        tuple(label[s] for s in _slots(e, sign)) for e, (_, _, sign) in enumerate(g.edges)
    )
    # the white region inside face F is bounded by the strands leaving the
    # left side of each dart of F
    outer = tuple(frozenset(label[(d[0], d[1], "L")] for d in f) for f in g.outer_faces())
    return PDCode(crossings, unknots, outer)


# ---------------------------------------------------------------------------
# moves


def _drop_edges(g: SignedPlaneGraph, dead: set) -> SignedPlaneGraph:
    emap, edges = {}, []
    for e, item in enumerate(g.edges):
        if e not in dead:
            emap[e] = len(edges)
            edges.append(item)
    rot = [[(emap[e], k) for e, k in r if e not in dead] for r in g.rotation]
    return SignedPlaneGraph(g.vertex_count, edges, rot)


def _drop_vertex(g: SignedPlaneGraph, v: int) -> SignedPlaneGraph:
    if g.rotation[v]:
        raise ValueError(f"vertex {v} still has edges")
    edges = [(a - (a > v), b - (b > v), s) for a, b, s in g.edges]
    rot = g.rotation[:v] + g.rotation[v + 1 :]
    return SignedPlaneGraph(g.vertex_count - 1, edges, [list(r) for r in rot])


def apply_move(g: SignedPlaneGraph, move: str, site) -> SignedPlaneGraph:
    """Apply one of the graph moves; each corresponds to a Reidemeister move.

    type1 site=v           remove pendant vertex v with its edge
    type2 site=v           contract a degree-2 vertex with opposite-signed edges
    type3 site=(e, f)      erase two opposite-signed edges bounding an empty bigon
    type1_inv site=(v, i, sign)     hang a new vertex at corner i of v
    type2_inv site=(v, i, j, sign)  split off darts i..j-1 of v through a new vertex
    type3_inv site=(d, sign)        add a +/- pair along face corner of dart d
    """
    g = g.copy()
    if move == "type1":
        v = site
        if g.degree(v) != 1:
            raise ValueError(f"type1: vertex {v} has degree {g.degree(v)}")
        e = g.rotation[v][0][0]
        if g.edges[e][0] == g.edges[e][1]:
            raise ValueError("type1: the edge is a loop")
        return _drop_vertex(_drop_edges(g, {e}), v)
    if move == "type2":
        v = site
        if g.degree(v) != 2:
            raise ValueError(f"type2: vertex {v} has degree {g.degree(v)}")
        d1, d2 = g.rotation[v]
        (e1, _), (e2, _) = d1, d2
        if e1 == e2:
            raise ValueError("type2: the two darts belong to a loop")
        if g.edges[e1][2] == g.edges[e2][2]:
            raise ValueError("type2: edges have equal signs")
        u, w = g.head(d1), g.head(d2)
        if u == w:
            raise ValueError("type2: edges share their far vertex")
        r1, r2 = (e1, 1 - d1[1]), (e2, 1 - d2[1])
        ru, rw = g.rotation[u], g.rotation[w]
        iu, iw = ru.index(r1), rw.index(r2)
        merged = ru[iu + 1 :] + ru[:iu] + rw[iw + 1 :] + rw[:iw]
        g.rotation[u] = merged
        g.rotation[w] = []
        g.rotation[v] = []
        g.edges = [
            (u if a == w else a, u if b == w else b, s) for a, b, s in g.edges
        ]
        g = _drop_edges(g, {e1, e2})
        for dead in sorted((v, w), reverse=True):
            g = _drop_vertex(g, dead)
        return g
    if move == "type3":
        e, f = site
        if e == f or {g.edges[e][0], g.edges[e][1]} != {g.edges[f][0], g.edges[f][1]}:
            raise ValueError("type3: edges do not join the same two vertices")
        if g.edges[e][2] == g.edges[f][2]:
            raise ValueError("type3: edges have equal signs")
        if g.edges[e][0] == g.edges[e][1]:
            raise ValueError("type3: loops are not allowed")
        if not any({d[0] for d in face} == {e, f} and len(face) == 2 for face in g.faces()):
            raise ValueError("type3: the edges do not bound an empty bigon")
        return _drop_edges(g, {e, f})
    if move == "type1_inv":
        v, i, sign = site
        w = g.vertex_count
        e = len(g.edges)
        g.edges.append((v, w, sign))
        g.rotation[v].insert(i, (e, 0))
        g.rotation.append([(e, 1)])
        g.vertex_count += 1
        return g
    if move == "type2_inv":
        v, i, j, sign = site
        rot = g.rotation[v]
        k = len(rot)
        count = (j - i) % k if k else 0
        moved = [rot[(i + t) % k] for t in range(count)]
        kept = [rot[(j + t) % k] for t in range(k - count)]
        x, y = g.vertex_count, g.vertex_count + 1
        other = "-" if sign == "+" else "+"
        e1, e2 = len(g.edges), len(g.edges) + 1
        g.edges += [(v, x, sign), (x, y, other)]
        for ed, end in moved:
            a, b, s = g.edges[ed]
            g.edges[ed] = (y, b, s) if end == 0 else (a, y, s)
        g.rotation[v] = kept + [(e1, 0)]
        g.rotation.append([(e1, 1), (e2, 0)])
        g.rotation.append([(e2, 1)] + moved)
        g.vertex_count += 2
        return g
    if move == "type3_inv":
        d, sign = site
        u, v = g.tail(d), g.head(d)
        if u == v:
            raise ValueError("type3_inv: the dart is a loop")
        # new pair sits in the face to the left of d, parallel to d's edge
        other = "-" if sign == "+" else "+"
        e1, e2 = len(g.edges), len(g.edges) + 1
        g.edges += [(u, v, sign), (u, v, other)]
        ru = g.rotation[u]
        ru.insert(ru.index(d) + 1, (e2, 0))
        ru.insert(ru.index(d) + 1, (e1, 0))
        rev = (d[0], 1 - d[1])
        rv = g.rotation[v]
        i = rv.index(rev)
        rv.insert(i, (e2, 1))
        rv.insert(i + 1, (e1, 1))
        return g
    raise ValueError(f"unknown move {move!r}")


def remove_loops(g: SignedPlaneGraph) -> SignedPlaneGraph:
    """Delete every loop (a kink in the diagram) without adding crossings.

    When both sides of a loop carry edges, the side not containing the
    loop's first dart successor is turned over, as untwisting the kink
    turns that part of the diagram over.
    """
    g = g.copy()
    while True:
        loop = next((e for e, (u, v, _) in enumerate(g.edges) if u == v), None)
        if loop is None:
            return g
        v = g.edges[loop][0]
        rot = g.rotation[v]
        i, j = sorted((rot.index((loop, 0)), rot.index((loop, 1))))
        inside = rot[i + 1 : j]
        outside = rot[j + 1 :] + rot[:i]
        if inside and outside:
            reach = set()
            queue = deque(g.head(d) for d in inside)
            while queue:
                w = queue.popleft()
                if w == v or w in reach:
                    continue
                reach.add(w)
                queue.extend(g.head(d) for d in g.rotation[w])
            for w in reach:
                g.rotation[w] = list(reversed(g.rotation[w]))
            inside = list(reversed(inside))
        g.rotation[v] = rot[:i] + inside + rot[j + 1 :]
        g = _drop_edges(g, {loop})


# ---------------------------------------------------------------------------
# isomorphism of signed plane graphs


def _component_code(g: SignedPlaneGraph, vertices) -> tuple:
    darts = [d for v in vertices for d in g.rotation[v]]
    if not darts:
        return ("point",)
    pos = {}
    for v in vertices:
        for i, d in enumerate(g.rotation[v]):
            pos[d] = (v, i)

    def sigma(d):
        v, i = pos[d]
        r = g.rotation[v]
        return r[(i + 1) % len(r)]

    best = None
    for start in darts:
        lab = {start: 0}
        order = [start]
        k = 0
        while k < len(order):
            d = order[k]
            k += 1
            for nb in (sigma(d), (d[0], 1 - d[1])):
                if nb not in lab:
                    lab[nb] = len(order)
                    order.append(nb)
        code = tuple(
            (lab[sigma(d)], lab[(d[0], 1 - d[1])], g.edges[d[0]][2]) for d in order
        )
        if best is None or code < best:
            best = code
    return best


def canonical_form(g: SignedPlaneGraph) -> tuple:
    return tuple(sorted(_component_code(g, comp) for comp in g.components()))


def isomorphic(g: SignedPlaneGraph, h: SignedPlaneGraph) -> bool:
    """Orientation-preserving isomorphism of signed plane graphs, per component."""
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# random plane graphs


def _face_corners(g: SignedPlaneGraph) -> list[list]:
    """Corners per face as (vertex, rotation index to insert at)."""
    out = []
    for face in g.faces():
        out.append([(g.tail(d), g.rotation[g.tail(d)].index(d) + 1) for d in face])
    for v in range(g.vertex_count):
        if not g.rotation[v]:
            out.append([(v, 0)])
    return out


def random_plane_graph(rng, edges: int, loops: bool = True, signs: str = "+-") -> SignedPlaneGraph:
    """Connected signed plane multigraph grown by random face-splitting steps."""
    g = SignedPlaneGraph(1)
    for _ in range(edges):
        sign = rng.choice(signs)
        faces_ = _face_corners(g)
        face = rng.choice(faces_)
        roll = rng.random()
        e = len(g.edges)
        if roll < 0.35 or g.vertex_count == 1 and not loops:
            v, i = rng.choice(face)
            w = g.vertex_count
            g.edges.append((v, w, sign))
            g.rotation[v].insert(i, (e, 0))
            g.rotation.append([(e, 1)])
            g.vertex_count += 1
            continue
        if loops and roll > 0.9:
            v, i = rng.choice(face)
            g.edges.append((v, v, sign))
            g.rotation[v][i:i] = [(e, 0), (e, 1)]
            continue
        (u, i), (v, j) = rng.choice(face), rng.choice(face)
        if u == v:
            if not loops:
                w = g.vertex_count
                g.edges.append((u, w, sign))
                g.rotation[u].insert(i, (e, 0))
                g.rotation.append([(e, 1)])
                g.vertex_count += 1
                continue
        g.edges.append((u, v, sign))
        if u == v:
            for idx, dart in sorted([(i, (e, 0)), (j, (e, 1))], reverse=True):
                g.rotation[u].insert(idx, dart)
        else:
            g.rotation[u].insert(i, (e, 0))
            g.rotation[v].insert(j, (e, 1))
    g.check()
    return g
