"""Elements of Thompson's group F as reduced pairs of rooted trees.

A tree is ``None`` (a leaf) or a tuple of children (a caret).  Binary
trees have 2-tuples; the same functions handle n-ary carets, which is all
the n-ary machinery the embedding of F_n into F needs.

An element (plus, minus) maps the subdivision of [0, 1] drawn by ``plus``
onto the one drawn by ``minus``.  Products compose left to right: ``a*b``
applies ``a`` first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

__all__ = [
    "Tree",
    "LEAF",
    "caret",
    "leaf_count",
    "tree_to_str",
    "tree_from_str",
    "Element",
    "reduce",
    "multiply",
    "invert",
    "oplus",
    "identity",
    "generator",
    "power",
    "GroupWord",
    "NormalForm",
    "parse_word",
    "format_word",
    "from_word",
    "to_normal_form",
    "phi_embed",
    "phi_preimages",
    "trees_with_carets",
    "TERNARY_GENERATORS",
    "parse_element",
]

Tree = Optional[tuple]
LEAF: Tree = None


def caret(*children: Tree) -> tuple:
    return tuple(children)


def leaf_count(t: Tree) -> int:
    if t is None:
        return 1
    return sum(leaf_count(c) for c in t)


def caret_count(t: Tree) -> int:
    if t is None:
        return 0
    return 1 + sum(caret_count(c) for c in t)


def tree_arity(t: Tree) -> Optional[int]:
    """Common caret width of ``t``; None for a bare leaf."""
    if t is None:
        return None
    widths = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if node is not None:
            widths.add(len(node))
            stack.extend(node)
    if len(widths) != 1:
        raise ValueError(f"mixed caret widths {sorted(widths)}")
    return widths.pop()


def tree_to_str(t: Tree) -> str:
    if t is None:
        return "."
    return "(" + "".join(tree_to_str(c) for c in t) + ")"


def tree_from_str(text: str) -> Tree:
    s = re.sub(r"\s+", "", text)
    pos = 0

    def parse() -> Tree:
        nonlocal pos
        if pos >= len(s):
            raise ValueError(f"unexpected end of tree {text!r}")
        ch = s[pos]
        if ch == ".":
            pos += 1
            return None
        if ch != "(":
            raise ValueError(f"unexpected {ch!r} at offset {pos} in tree {text!r}")
        pos += 1
        kids = []
        while pos < len(s) and s[pos] != ")":
            kids.append(parse())
        if pos >= len(s):
            raise ValueError(f"unbalanced tree {text!r}")
        pos += 1
        if len(kids) < 2:
            raise ValueError(f"caret with {len(kids)} children in {text!r}")
        return tuple(kids)

    tree = parse()
    if pos != len(s):
        raise ValueError(f"trailing characters {s[pos:]!r} in tree {text!r}")
    return tree


# ---------------------------------------------------------------------------
# tree surgery


def _reducible_positions(t: Tree, arity: int) -> set[int]:
    """Leaf offsets of carets whose children are all leaves."""
    found: set[int] = set()

    def walk(node: Tree, start: int) -> int:
        if node is None:
            return 1
        if all(c is None for c in node):
            found.add(start)
            return arity
        width = 0
        for c in node:
            width += walk(c, start + width)
        return width

    walk(t, 0)
    return found


def _collapse(t: Tree, positions: set[int]) -> Tree:
    def walk(node: Tree, start: int) -> tuple[Tree, int]:
        if node is None:
            return None, 1
        if start in positions and all(c is None for c in node):
            return None, len(node)
        width = 0
        kids = []
        for c in node:
            k, w = walk(c, start + width)
            kids.append(k)
            width += w
        return tuple(kids), width

    return walk(t, 0)[0]


def _join(a: Tree, b: Tree) -> Tree:
    """Smallest common expansion of two trees."""
    if a is None:
        return b
    if b is None:
        return a
    return tuple(_join(x, y) for x, y in zip(a, b))


def _hanging(small: Tree, big: Tree, out: list) -> None:
    """Subtrees of ``big`` attached below each leaf of ``small``."""
    if small is None:
        out.append(big)
        return
    for x, y in zip(small, big):
        _hanging(x, y, out)


def _graft(t: Tree, subtrees: Sequence[Tree]) -> Tree:
    it = iter(subtrees)

    def walk(node: Tree) -> Tree:
        if node is None:
            return next(it)
        return tuple(walk(c) for c in node)

    return walk(t)


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class Element:
    """A pair of trees with equal leaf counts, normally reduced."""

    plus: Tree
    minus: Tree
    arity: int = 2

    def __post_init__(self) -> None:
        if leaf_count(self.plus) != leaf_count(self.minus):
            raise ValueError(
                f"leaf counts differ: {leaf_count(self.plus)} vs {leaf_count(self.minus)}"
            )
        for t in (self.plus, self.minus):
            w = tree_arity(t)
            if w is not None and w != self.arity:
                raise ValueError(f"caret width {w} does not match arity {self.arity}")

    @property
    def leaves(self) -> int:
        return leaf_count(self.plus)

    @property
    def diagram_vertices(self) -> int:
        """Vertex count of the corresponding semigroup diagram."""
        return self.leaves + 1

    def is_reduced(self) -> bool:
        common = _reducible_positions(self.plus, self.arity) & _reducible_positions(
            self.minus, self.arity
        )
        return not common

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def __invert__(self) -> "Element":
        return invert(self)

    def __str__(self) -> str:
        return tree_to_str(self.plus) + "|" + tree_to_str(self.minus)

    @classmethod
    def parse(cls, text: str) -> "Element":
        if "|" not in text:
            raise ValueError(f"tree pair needs a '|' separator: {text!r}")
        left, right = text.split("|", 1)
        plus, minus = tree_from_str(left), tree_from_str(right)
        arity = tree_arity(plus) or tree_arity(minus) or 2
        return cls(plus, minus, arity)


def reduce(plus: Tree, minus: Tree, arity: int = 2) -> Element:
    """Cancel common carets until none are left."""
    if leaf_count(plus) != leaf_count(minus):
        raise ValueError("cannot reduce trees with different leaf counts")
    while True:
        common = _reducible_positions(plus, arity) & _reducible_positions(minus, arity)
        if not common:
            return Element(plus, minus, arity)
        plus = _collapse(plus, common)
        minus = _collapse(minus, common)


def identity(arity: int = 2) -> Element:
    return Element(None, None, arity)


def multiply(a: Element, b: Element) -> Element:
    if a.arity != b.arity:
        raise ValueError("arity mismatch in product")
    common = _join(a.minus, b.plus)
    left: list = []
    right: list = []
    _hanging(a.minus, common, left)
    _hanging(b.plus, common, right)
    return reduce(_graft(a.plus, left), _graft(b.minus, right), a.arity)


def invert(a: Element) -> Element:
    return Element(a.minus, a.plus, a.arity)


def oplus(a: Element, b: Element) -> Element:
    if a.arity != 2 or b.arity != 2:
        raise ValueError("oplus is defined for binary elements")
    return reduce((a.plus, b.plus), (a.minus, b.minus))


def power(a: Element, k: int) -> Element:
    base = a if k >= 0 else invert(a)
    out = identity(a.arity)
    for _ in range(abs(k)):
        out = multiply(out, base)
    return out


@lru_cache(maxsize=None)
def generator(i: int) -> Element:
    """The standard generator x_i."""
    if i < 0:
        raise ValueError("generator index must be non-negative")
    if i == 0:
        return Element(((None, None), None), (None, (None, None)))
    return oplus(identity(), generator(i - 1))


# ---------------------------------------------------------------------------
# words and normal forms

GroupWord = tuple  # tuple of (index, power) pairs

_TOKEN = re.compile(r"x_?(\d+)(?:\^\{?(-?\d+)\}?)?$")


def parse_word(text: str) -> GroupWord:
    """Parse "x0 x1^3 x5^-1"; "1" or an empty string is the empty word.

    A parenthesised group followed by ``^-1`` is inverted, so the
    normal-form display "x0 (x1 x2)^-1" parses as well.
    """
    s = text.strip()
    if "/" in s:
        pos, neg = s.split("/", 1)
        return parse_word(pos) + _invert_word(parse_word(neg))
    out: list = []
    pos = 0
    while pos < len(s):
        if s[pos].isspace() or s[pos] == "*":
            pos += 1
            continue
        if s[pos] == "(":
            depth, end = 0, pos
            while end < len(s):
                depth += {"(": 1, ")": -1}.get(s[end], 0)
                if depth == 0:
                    break
                end += 1
            if end >= len(s):
                raise ValueError(f"unbalanced parenthesis in word {text!r}")
            inner = parse_word(s[pos + 1 : end])
            m = re.match(r"\^\{?(-?\d+)\}?", s[end + 1 :])
            k = int(m.group(1)) if m else 1
            pos = end + 1 + (m.end() if m else 0)
            chunk = inner if k >= 0 else _invert_word(inner)
            out.extend(list(chunk) * abs(k))
            continue
        m = re.match(r"\S+", s[pos:])
        tok = m.group(0)
        pos += len(tok)
        if tok == "1":
            continue
        mt = _TOKEN.match(tok)
        if not mt:
            raise ValueError(f"bad token {tok!r} in word {text!r}")
        k = int(mt.group(2)) if mt.group(2) is not None else 1
        if k:
            out.append((int(mt.group(1)), k))
    return tuple(out)


def _invert_word(w: Iterable) -> GroupWord:
    return tuple((i, -k) for i, k in reversed(list(w)))


def format_word(w: GroupWord) -> str:
    if not w:
        return "1"
    return " ".join(f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in w)


def from_word(w: GroupWord | str) -> Element:
    if isinstance(w, str):
        w = parse_word(w)
    out = identity()
    for i, k in w:
        out = multiply(out, power(generator(i), k))
    return out


def _collect(indices: Sequence[int]) -> GroupWord:
    out: list = []
    for i in indices:
        if out and out[-1][0] == i:
            out[-1] = (i, out[-1][1] + 1)
        else:
            out.append((i, 1))
    return tuple(out)


@dataclass(frozen=True)
class NormalForm:
    """x_{i1}^{s1}...x_{im}^{sm} (x_{j1}^{t1}...x_{jn}^{tn})^-1."""

    positive: GroupWord
    negative: GroupWord

    def word(self) -> GroupWord:
        return self.positive + _invert_word(self.negative)

    def is_valid(self) -> bool:
        pi = [i for i, _ in self.positive]
        ni = [j for j, _ in self.negative]
        if pi != sorted(set(pi)) or ni != sorted(set(ni)):
            return False
        if any(k < 1 for _, k in self.positive + self.negative):
            return False
        if pi and ni and pi[-1] == ni[-1]:
            return False
        both = set(pi) & set(ni)
        present = set(pi) | set(ni)
        return all(i + 1 in present for i in both)

    def __str__(self) -> str:
        if not self.negative:
            return format_word(self.positive)
        return f"{format_word(self.positive)} / {format_word(self.negative)}"

    def paren_str(self) -> str:
        """Display as "x0 x1^3 (x0^2 x5)^-1"."""
        if not self.negative:
            return format_word(self.positive)
        neg = f"({format_word(self.negative)})^-1"
        return neg if not self.positive else f"{format_word(self.positive)} {neg}"


def _preorder_labels(t: Tree) -> list[int]:
    """Leftmost-cell reading of one tree: x_l for each caret not on the right spine."""
    total = leaf_count(t)
    labels: list[int] = []

    def walk(node: Tree, start: int) -> int:
        if node is None:
            return 1
        width = leaf_count(node)
        if start + width < total:
            labels.append(start)
        offset = 0
        for c in node:
            offset += walk(c, start + offset)
        return width

    walk(t, 0)
    return labels


def to_normal_form(a: Element) -> NormalForm:
    """Read the normal form off a reduced binary tree pair."""
    if a.arity != 2:
        raise ValueError("normal forms are defined for binary elements")
    if not a.is_reduced():
        a = reduce(a.plus, a.minus)
    return NormalForm(_collect(_preorder_labels(a.plus)), _collect(_preorder_labels(a.minus)))


def parse_element(text: str) -> Element:
    """A tree pair containing '|' or a word in the generators."""
    return Element.parse(text) if "|" in text else from_word(parse_word(text))


# ---------------------------------------------------------------------------
# F_n inside F


def _comb(node: Tree) -> Tree:
    if node is None:
        return None
    kids = [_comb(c) for c in node]
    out = kids[-1]
    for c in reversed(kids[:-1]):
        out = (c, out)
    return out


def phi_embed(a: Element, n: int) -> Element:
    """Replace each n-ary caret by a right comb of binary carets."""
    if n < 3:
        raise ValueError("the embedding needs arity at least 3")
    if a.arity != n:
        raise ValueError(f"element has arity {a.arity}, expected {n}")
    return reduce(_comb(a.plus), _comb(a.minus))


def trees_with_carets(k: int, arity: int = 2):
    """Every tree with exactly k carets of the given width."""
    if k == 0:
        yield None
        return

    def splits(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in splits(total - first, parts - 1):
                yield (first,) + rest

    for sizes in splits(k - 1, arity):
        pools = [list(trees_with_carets(s, arity)) for s in sizes]

        def combine(i: int, acc: tuple):
            if i == arity:
                yield acc
                return
            for t in pools[i]:
                yield from combine(i + 1, acc + (t,))

        yield from combine(0, ())


def phi_preimages(target: Element, n: int = 3, max_carets: int = 3) -> list[Element]:
    """Reduced n-ary pairs with at most ``max_carets`` carets per tree that phi_embed sends to target."""
    found = set()
    for k in range(1, max_carets + 1):
        pool = list(trees_with_carets(k, n))
        for p in pool:
            for m in pool:
                a = reduce(p, m, n)
                if a.leaves > 1 and a not in found and phi_embed(a, n) == target:
                    found.add(a)
    return sorted(found, key=lambda a: (a.leaves, str(a)))


# ternary pairs found by phi_preimages; their images are x0x1, x1x2, x2x3
TERNARY_GENERATORS = (
    "((...)..)|(..(...))",
    "(.(...).)|(..(...))",
    "(..((...)..))|(..(..(...)))",
)
