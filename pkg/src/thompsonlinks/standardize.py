"""From book-embedded signed graphs to Thompson graphs, elements, and back.

A standard graph is a ``BookLayout`` whose arcs all carry signs.  It is
Thompson when every inner vertex has exactly one upper and one lower
incoming arc, upper arcs are "+" and lower arcs are "-".  ``to_thompson``
removes the four kinds of defect in order; every fix is a composite of the
graph moves and adds a fixed number of vertices (0, 1, 3 and 8).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .bookembed import LOWER, PAGE_SIGN, UPPER, Arc, BookLayout, EmbedStats, embed_signed
from .element import Element, Tree, generator, identity, oplus, reduce
from .jonesgraph import thompson_graph
from .taitlink import PDCode, SignedPlaneGraph, medial_link, remove_loops, tait_graph

__all__ = [
    "Defects",
    "Accounting",
    "ComponentReport",
    "EncodeResult",
    "classify",
    "step_fix",
    "to_thompson",
    "is_thompson",
    "concatenate",
    "extract_element",
    "element_layout",
    "element_to_link",
    "encode_link",
    "thompson_index_bound",
    "audit",
]

VERTICES_ADDED = {1: 0, 2: 1, 3: 3, 4: 8}


def _other(page: str) -> str:
    return LOWER if page == UPPER else UPPER


@dataclass
class Defects:
    no_incoming: list = field(default_factory=list)  # vertices
    one_sided: list = field(default_factory=list)  # (vertex, missing page)
    superfluous: list = field(default_factory=list)  # (vertex, page): outermost offender
    incompatible: list = field(default_factory=list)  # arc indices

    def empty(self) -> bool:
        return not (self.no_incoming or self.one_sided or self.superfluous or self.incompatible)

    def first(self) -> Optional[tuple]:
        for kind, items in enumerate(
            (self.no_incoming, self.one_sided, self.superfluous, self.incompatible), 1
        ):
            if items:
                return kind, items[0]
        return None

    def counts(self) -> dict:
        return {
            1: len(self.no_incoming),
            2: len(self.one_sided),
            3: len(self.superfluous),
            4: len(self.incompatible),
        }


def _incoming(l: BookLayout) -> dict:
    """(vertex, page) -> incoming arc indices, innermost first."""
    pos = l.positions()
    out: dict = {}
    for k, a in enumerate(l.arcs):
        out.setdefault((a.v, a.page), []).append(k)
    for key, ks in out.items():
        ks.sort(key=lambda k: (-pos[l.arcs[k].u], l.arcs[k].rank))
    return out


def classify(l: BookLayout) -> Defects:
    """All defects by kind; superfluous arcs are reported per (vertex, page)."""
    inc = _incoming(l)
    d = Defects()
    for v in l.spine[1:]:
        up, low = inc.get((v, UPPER), []), inc.get((v, LOWER), [])
        if not up and not low:
            d.no_incoming.append(v)
        elif not up or not low:
            d.one_sided.append((v, UPPER if not up else LOWER))
        for page, ks in ((UPPER, up), (LOWER, low)):
            if len(ks) > 1:
                d.superfluous.extend([(v, page)] * (len(ks) - 1))
    for k, a in enumerate(l.arcs):
        if a.sign != PAGE_SIGN[a.page]:
            d.incompatible.append(k)
    return d


def is_thompson(l: BookLayout) -> bool:
    return classify(l).empty()


def _fresh(l: BookLayout) -> int:
    return max(l.spine) + 1


def _insert(l: BookLayout, before: int) -> int:
    w = _fresh(l)
    l.spine.insert(l.spine.index(before), w)
    return w


def _pair(l: BookLayout, a: int, b: int) -> None:
    l.arcs.append(Arc(a, b, UPPER, "+"))
    l.arcs.append(Arc(a, b, LOWER, "-"))


def _fix_no_incoming(l: BookLayout, v: int) -> None:
    # a +/- pair from the spine predecessor: an inverse type 3 move
    _pair(l, l.spine[l.spine.index(v) - 1], v)


def _fix_one_sided(l: BookLayout, v: int, missing: str) -> None:
    # hang a new vertex w just left of v (inverse type 1), then tie it to
    # the predecessor by a +/- pair (inverse type 3)
    w = _insert(l, v)
    _pair(l, l.spine[l.spine.index(w) - 1], w)
    l.arcs.append(Arc(w, v, missing, PAGE_SIGN[missing]))


def _fix_superfluous(l: BookLayout, v: int, page: str) -> None:
    """Split v by an inverse type 2 move; the outermost arc on ``page`` and
    all outgoing arcs move to the right copy, then the middle vertex gets
    its missing incoming arc."""
    inc = _incoming(l)[(v, page)]
    e = inc[-1]
    i = l.spine.index(v)
    y, v2 = _fresh(l), _fresh(l) + 1
    l.spine[i + 1 : i + 1] = [y, v2]
    for k, a in enumerate(l.arcs):
        if a.u == v:
            a.u = v2
        elif k == e:
            a.v = v2
    other = _other(page)
    l.arcs.append(Arc(v, y, page, PAGE_SIGN[page]))
    l.arcs.append(Arc(y, v2, other, PAGE_SIGN[other]))
    _fix_one_sided(l, y, other)


def _fix_incompatible(l: BookLayout, k: int) -> None:
    """Move an arc to the page its sign asks for.

    An inverse type 2 move at the left end a turns e=(a,b) into a path
    a-z-a2-b with z, a2 just left of b; the short arc (a2, b) is then
    swung across the spine.  Repairing z, a2 and b adds 1+1+3+1 vertices.
    """
    e = l.arcs[k]
    page, other = e.page, _other(e.page)
    a, b = e.u, e.v
    z = _insert(l, b)
    a2 = _insert(l, b)
    e.u, e.page = a2, other
    l.arcs.append(Arc(a, z, page, PAGE_SIGN[page]))
    l.arcs.append(Arc(z, a2, other, PAGE_SIGN[other]))
    _fix_one_sided(l, z, other)
    _fix_one_sided(l, a2, page)
    _fix_superfluous(l, b, other)
    _fix_one_sided(l, b, page)


def step_fix(l: BookLayout, kind: int, site) -> BookLayout:
    """One repair: kind 1 site=v, kind 2 site=(v, page), kind 3 site=(v, page), kind 4 site=arc index."""
    l = l.copy()
    d = classify(l)
    if kind == 1:
        if site not in d.no_incoming:
            raise ValueError(f"vertex {site} has incoming arcs")
        _fix_no_incoming(l, site)
    elif kind == 2:
        if tuple(site) not in d.one_sided:
            raise ValueError(f"{site} is not a one-sided vertex")
        _fix_one_sided(l, *site)
    elif kind == 3:
        if tuple(site) not in d.superfluous:
            raise ValueError(f"{site} has no superfluous arc")
        if d.no_incoming or d.one_sided:
            raise ValueError("fix vertices before superfluous arcs")
        _fix_superfluous(l, *site)
    elif kind == 4:
        if site not in d.incompatible:
            raise ValueError(f"arc {site} is compatible")
        if not d.empty() and (d.no_incoming or d.one_sided or d.superfluous):
            raise ValueError("fix vertices and superfluous arcs before labels")
        _fix_incompatible(l, site)
    else:
        raise ValueError(f"unknown defect kind {kind}")
    return l


@dataclass
class Accounting:
    start_vertices: int = 0
    start_arcs: int = 0
    fixes: dict = field(default_factory=lambda: {1: 0, 2: 0, 3: 0, 4: 0})
    added: dict = field(default_factory=lambda: {1: 0, 2: 0, 3: 0, 4: 0})
    final_vertices: int = 0

    def bound_terms(self, n: int, m: int) -> int:
        """n + 2m + x + 3(n + 2m - x) + 8(n - m) with x = kind-2 fixes."""
        x = self.fixes[2]
        return n + 2 * m + x + 3 * (n + 2 * m - x) + 8 * (n - m)


def to_thompson(l: BookLayout, max_steps: Optional[int] = None) -> tuple[BookLayout, Accounting]:
    l = l.copy()
    l.normalize()
    acc = Accounting(len(l.spine), len(l.arcs))
    cap = max_steps or 20 * (len(l.arcs) + len(l.spine)) + 100
    for _ in range(cap):
        item = classify(l).first()
        if item is None:
            break
        kind, site = item
        before = len(l.spine)
        l = step_fix(l, kind, site)
        delta = len(l.spine) - before
        if delta != VERTICES_ADDED[kind]:
            raise AssertionError(f"kind {kind} fix added {delta} vertices")
        acc.fixes[kind] += 1
        acc.added[kind] += delta
    else:
        raise RuntimeError("standardization did not terminate")
    acc.final_vertices = len(l.spine)
    return l, acc


def concatenate(layouts) -> BookLayout:
    """Glue Thompson layouts left to right, identifying each last vertex with the next first one."""
    out = BookLayout([0], [])
    offset = 0
    for l in layouts:
        pos = l.positions()
        out.spine += list(range(offset + 1, offset + len(l.spine)))
        for a in l.arcs:
            out.arcs.append(Arc(offset + pos[a.u], offset + pos[a.v], a.page, a.sign, rank=a.rank))
        offset += len(l.spine) - 1
    return out


def _tree_from_arcs(n: int, arcs: set) -> Tree:
    # leaves are 1..n; a caret over leaves l..r splits after the farthest
    # s with an arc (l-1, s)
    def build(lo: int, hi: int) -> Tree:
        if lo == hi:
            return None
        s = max((s for s in range(lo, hi) if (lo - 1, s) in arcs), default=None)
        if s is None:
            raise ValueError(f"no arc leaves vertex {lo - 1} inside {lo}..{hi}")
        return (build(lo, s), build(s + 1, hi))

    return build(1, n)


def extract_element(l: BookLayout) -> Element:
    """Tree pair whose Thompson graph is the layout; possibly unreduced."""
    if not is_thompson(l):
        raise ValueError("layout is not a Thompson graph")
    pos = l.positions()
    upper = {(pos[a.u], pos[a.v]) for a in l.arcs if a.page == UPPER}
    lower = {(pos[a.u], pos[a.v]) for a in l.arcs if a.page == LOWER}
    n = len(l.spine)
    return Element(_tree_from_arcs(n, upper), _tree_from_arcs(n, lower))


def element_layout(a: Element) -> BookLayout:
    """Thompson graph of ``a`` as a layout: upper arcs "+", lower arcs "-"."""
    g = thompson_graph(a)
    arcs = [Arc(u, v, UPPER, "+") for u, v in g.upper_edges]
    arcs += [Arc(u, v, LOWER, "-") for u, v in g.lower_edges]
    return BookLayout(list(range(g.vertex_count)), arcs)


def element_to_link(a: Element) -> PDCode:
    """The link drawn by the signed Thompson graph of ``a``; the identity gives the unknot."""
    return medial_link(element_layout(a).to_signed_graph())


@dataclass
class ComponentReport:
    vertices: int
    edges: int  # n_i
    tree: bool
    tripled: int = 0  # m_i
    standard_vertices: int = 0
    accounting: Optional[Accounting] = None
    embed: Optional[EmbedStats] = None
    thompson: Optional[BookLayout] = None

    @property
    def bound(self) -> int:
        return 12 * self.edges


@dataclass
class EncodeResult:
    element: Element
    unknots_added: int  # k: dipoles cancelled, re-added as unknots on the left
    crossings: int  # n after loop removal
    unlinked: int  # u: components whose graph is a tree
    components: list
    raw: Optional[Element] = None  # tree pair read off the glued Thompson graph
    graph: Optional[SignedPlaneGraph] = None

    @property
    def diagram_vertices(self) -> int:
        return self.element.leaves + 1

    @property
    def bound(self) -> int:
        return 12 * self.crossings + self.unlinked + 3

    @property
    def pipeline_bound(self) -> int:
        """Bound for diagrams that went through the geometric pipeline."""
        return 12 * self.crossings + self.unlinked + 1


def encode_link(pd: PDCode) -> EncodeResult:
    """Element of F representing the link of ``pd``.

    Components whose graph is a tree are unknots split off from the rest;
    each of them, and each cancelled dipole, comes back as one 1 (+) on
    the left.  A diagram of unknots alone gives x_{u-1} directly.
    """
    g = remove_loops(tait_graph(pd))
    if g.vertex_count == 0:
        raise ValueError("empty diagram")
    n = len(g.edges)
    reports, layouts, u = [], [], 0
    for comp in g.components():
        sub = g.subgraph(comp)
        rep = ComponentReport(sub.vertex_count, len(sub.edges), len(sub.edges) == sub.vertex_count - 1)
        if rep.tree:
            u += 1
        else:
            stats = EmbedStats()
            book = embed_signed(sub, stats)
            rep.embed, rep.tripled, rep.standard_vertices = stats, stats.tripled, len(book.spine)
            rep.thompson, rep.accounting = to_thompson(book)
            if rep.accounting.final_vertices > rep.bound:
                raise AssertionError(f"component uses {rep.accounting.final_vertices} > {rep.bound} vertices")
            layouts.append(rep.thompson)
        reports.append(rep)
    if not layouts:
        return EncodeResult(generator(u - 1), 0, n, u, reports, graph=g)
    raw = extract_element(concatenate(layouts))
    reduced = reduce(raw.plus, raw.minus)
    k = raw.leaves - reduced.leaves
    if reduced == identity():
        # the non-tree part was an unlink of k + 1 unknots
        element = generator(k + u)
    else:
        element = reduced
        for _ in range(k + u):
            element = oplus(identity(), element)
    out = EncodeResult(element, k, n, u, reports, raw, g)
    if out.diagram_vertices > out.pipeline_bound:
        raise AssertionError(f"{out.diagram_vertices} diagram vertices exceed {out.pipeline_bound}")
    return out


def thompson_index_bound(pd: PDCode) -> int:
    """12n + u + 3, checked against the element encode_link produces."""
    res = encode_link(pd)
    if res.diagram_vertices > res.bound:
        raise AssertionError("Thompson index bound violated")
    return res.bound


def audit(pd: PDCode) -> list[dict]:
    """Per-component accounting rows for the link-to-element pipeline."""
    res = encode_link(pd)
    rows = []
    for i, rep in enumerate(res.components):
        row = {"component": i, "vertices": rep.vertices, "edges": rep.edges, "tree": rep.tree}
        if not rep.tree:
            acc = rep.accounting
            row.update(
                tripled=rep.tripled,
                chords=rep.embed.chords,
                separating_fixed=rep.embed.separating_fixed,
                backtracks=rep.embed.backtracks,
                standard_vertices=rep.standard_vertices,
                standard_arcs=acc.start_arcs,
                fix1=acc.fixes[1],
                fix2=acc.fixes[2],
                fix3=acc.fixes[3],
                fix4=acc.fixes[4],
                thompson_vertices=acc.final_vertices,
                accounting_bound=acc.bound_terms(rep.edges, rep.tripled),
                bound=rep.bound,
            )
        rows.append(row)
    rows.append(
        {
            "component": "total",
            "crossings": res.crossings,
            "unlinked": res.unlinked,
            "dipoles": res.unknots_added,
            "diagram_vertices": res.diagram_vertices,
            "bound": res.bound,
        }
    )
    return rows
