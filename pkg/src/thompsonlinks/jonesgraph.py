"""Thompson graphs of elements and membership in the Jones subgroups."""

from __future__ import annotations

from dataclasses import dataclass, field

from .dyadic import digit_sum
from .element import Element, Tree, from_word, generator, multiply, reduce
from .plmap import breakpoints

__all__ = [
    "ThompsonGraph",
    "thompson_graph",
    "path_lengths",
    "is_n_good",
    "member_vecFn",
    "vecFn_generators",
    "subgroup_generator",
    "technic_element",
]


@dataclass(frozen=True)
class ThompsonGraph:
    vertex_count: int
    upper_edges: tuple = field(default_factory=tuple)
    lower_edges: tuple = field(default_factory=tuple)

    def to_text(self) -> str:
        lines = [f"vertices {self.vertex_count}"]
        lines += [f"upper {a} {b}" for a, b in self.upper_edges]
        lines += [f"lower {a} {b}" for a, b in self.lower_edges]
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "ThompsonGraph":
        count = None
        upper, lower = [], []
        for raw in text.splitlines():
            parts = raw.split()
            if not parts:
                continue
            if parts[0] == "vertices":
                count = int(parts[1])
            elif parts[0] in ("upper", "lower"):
                (upper if parts[0] == "upper" else lower).append((int(parts[1]), int(parts[2])))
            else:
                raise ValueError(f"bad graph line {raw!r}")
        if count is None:
            raise ValueError("missing 'vertices' line")
        return cls(count, tuple(sorted(upper)), tuple(sorted(lower)))


def _span_edges(t: Tree) -> list[tuple[int, int]]:
    """Edge (a-1, i) for each caret whose left child covers leaves a..i."""
    out: list[tuple[int, int]] = []

    def walk(node: Tree, start: int) -> int:
        if node is None:
            return 1
        left = walk(node[0], start)
        right = walk(node[1], start + left)
        out.append((start, start + left))
        return left + right

    walk(t, 0)
    return sorted(out)


def thompson_graph(a: Element) -> ThompsonGraph:
    return ThompsonGraph(a.leaves, tuple(_span_edges(a.plus)), tuple(_span_edges(a.minus)))


def _lengths(n: int, edges) -> list[int]:
    incoming: dict[int, int] = {}
    for a, b in edges:
        if b in incoming:
            raise ValueError(f"vertex {b} has two incoming edges on one side")
        incoming[b] = a
    out = [0] * n
    for v in range(1, n):
        if v not in incoming:
            raise ValueError(f"vertex {v} has no incoming edge")
        out[v] = out[incoming[v]] + 1
    return out


def path_lengths(g: ThompsonGraph) -> tuple[list[int], list[int]]:
    """Lengths of the all-upper and all-lower paths from vertex 0."""
    return _lengths(g.vertex_count, g.upper_edges), _lengths(g.vertex_count, g.lower_edges)


def is_n_good(g: ThompsonGraph, n: int) -> bool:
    top, bottom = path_lengths(g)
    return all((s - t) % n == 0 for s, t in zip(top[1:], bottom[1:]))


def member_vecFn(a: Element, n: int, method: str = "graph") -> bool:
    if n < 1:
        raise ValueError("n must be positive")
    if not a.is_reduced():
        a = reduce(a.plus, a.minus)
    if method == "graph":
        return is_n_good(thompson_graph(a), n)
    if method == "digit_sum":
        top, bottom = breakpoints(a)
        return all((digit_sum(s) - digit_sum(t)) % n == 0 for s, t in zip(top, bottom))
    raise ValueError(f"unknown membership method {method!r}")


def subgroup_generator(j: int, n: int) -> Element:
    """g_j = x_j x_{j+1} ... x_{j+n-2}."""
    out = generator(j)
    for k in range(1, n - 1):
        out = multiply(out, generator(j + k))
    return out


def vecFn_generators(n: int) -> list[Element]:
    """Generators of the subgroup isomorphic to F_n (it equals the (n-1)-good subgroup)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return [subgroup_generator(j, n) for j in range(n)]


def technic_element(n: int, i: int, m: list[int]) -> Element:
    """prod x_{i+k}^{m_k} prod x_{i+d+k} [ prod x_{i+n-1+k}^{m_k} x_{i+n-1+d}^{m_d-1} ]^-1."""
    d = len(m) - 1
    word = [(i + k, m[k]) for k in range(d + 1)]
    word += [(i + d + k, 1) for k in range(1, n - 1)]
    neg = [(i + n - 1 + k, m[k]) for k in range(d)]
    if m[d] - 1:
        neg.append((i + n - 1 + d, m[d] - 1))
    word += [(j, -e) for j, e in reversed(neg)]
    return from_word(tuple(word))
