"""Elements of F as piecewise-linear maps of [0, 1]."""

from __future__ import annotations

from .dyadic import ONE, ZERO, Dyadic
from .element import Element, Tree, multiply

__all__ = ["subdivision", "breakpoints", "evaluate", "compose_check", "apply_power"]


def _intervals(t: Tree) -> list[tuple[Dyadic, Dyadic]]:
    out: list[tuple[Dyadic, Dyadic]] = []

    def walk(node: Tree, lo: Dyadic, hi: Dyadic) -> None:
        if node is None:
            out.append((lo, hi))
            return
        if len(node) != 2:
            raise ValueError("dyadic subdivisions need binary trees")
        mid = lo + (hi - lo).half()
        walk(node[0], lo, mid)
        walk(node[1], mid, hi)

    walk(t, ZERO, ONE)
    return out


def subdivision(t: Tree) -> list[Dyadic]:
    """Interior breakpoints of the dyadic subdivision drawn by a tree."""
    return [hi for _, hi in _intervals(t)[:-1]]


def breakpoints(a: Element) -> tuple[list[Dyadic], list[Dyadic]]:
    return subdivision(a.plus), subdivision(a.minus)


def evaluate(a: Element, t: Dyadic) -> Dyadic:
    """Image of t under the map sending plus-intervals affinely onto minus-intervals."""
    # walk down plus to the leaf containing t, then replay the offset inside
    # the matching minus leaf; slopes are powers of two so this stays exact
    top = _intervals(a.plus)
    bottom = _intervals(a.minus)
    for (lo, hi), (lo2, hi2) in zip(top, bottom):
        if lo <= t <= hi:
            offset = (t - lo).to_fraction() * (hi2 - lo2).to_fraction() / (hi - lo).to_fraction()
            return lo2 + Dyadic.from_fraction(offset)
    raise ValueError(f"{t} lies outside [0, 1]")


def compose_check(a: Element, b: Element, t: Dyadic) -> Dyadic:
    """evaluate(b, evaluate(a, t)), asserted equal to evaluating the product."""
    direct = evaluate(b, evaluate(a, t))
    if evaluate(multiply(a, b), t) != direct:
        raise AssertionError(f"composition mismatch at {t}")
    return direct


def apply_power(a: Element, n: int, t: Dyadic) -> Dyadic:
    for _ in range(n):
        t = evaluate(a, t)
    return t
