"""Command-line interface: ``thompsonlinks <command> ...``.

Elements are given as tree pairs ("((..).)|(.(..))") or words
("x0 x1^2 / x3", "x0 x2^-1").  Exit codes: 0 success, 1 usage error,
2 malformed input, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import render
from .bookembed import BookLayout, embed_signed
from .bracket import bracket
from .dyadic import Dyadic
from .element import (
    TERNARY_GENERATORS,
    Element,
    invert,
    multiply,
    oplus,
    parse_element,
    phi_embed,
    phi_preimages,
    to_normal_form,
)
from .jonesgraph import member_vecFn, vecFn_generators
from .plmap import evaluate
from .standardize import audit, element_layout, element_to_link, encode_link
from .taitlink import PDCode, remove_loops, tait_graph

EXIT_OK, EXIT_USAGE, EXIT_FORMAT, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _element(text: str) -> Element:
    return parse_element(text)


def _element_record(a: Element) -> dict:
    return {"tree_pair": str(a), "normal_form": str(to_normal_form(a)), "leaves": a.leaves}


def _read_pd(path: str) -> PDCode:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return PDCode.parse(text)


# each command returns (text lines, json payload)


def cmd_nf(args):
    nf = to_normal_form(_element(args.element))
    return [str(nf)], {"normal_form": str(nf), "word": nf.paren_str()}


def cmd_mul(args):
    out = _element(args.elements[0])
    for text in args.elements[1:]:
        out = multiply(out, _element(text))
    rec = _element_record(out)
    return [rec["normal_form"], rec["tree_pair"]], rec


def cmd_inv(args):
    rec = _element_record(invert(_element(args.element)))
    return [rec["normal_form"], rec["tree_pair"]], rec


def cmd_oplus(args):
    rec = _element_record(oplus(_element(args.left), _element(args.right)))
    return [rec["normal_form"], rec["tree_pair"]], rec


def cmd_eval(args):
    value = evaluate(_element(args.element), Dyadic.parse(args.point))
    return [str(value)], {"value": str(value), "binary": value.binary()}


def cmd_jones(args):
    a = _element(args.element)
    graph = member_vecFn(a, args.n, "graph")
    digits = member_vecFn(a, args.n, "digit_sum")
    if graph != digits:
        raise AssertionError("membership methods disagree")
    word = lambda b: "true" if b else "false"  # noqa: E731
    return [f"member: {word(graph)} / {word(digits)}"], {
        "n": args.n,
        "member": graph,
        "graph": graph,
        "digit_sum": digits,
    }


def cmd_generators(args):
    gens = vecFn_generators(args.n)
    words = [str(to_normal_form(g)) for g in gens]
    lines = [f"g{j} = {w}" for j, w in enumerate(words)]
    return lines, {"n": args.n, "generators": words}


def cmd_phi(args):
    if args.search:
        target = _element(args.element)
        found = [str(a) for a in phi_preimages(target, args.n, args.max_carets)]
        return found or ["none"], {"target": str(to_normal_form(target)), "preimages": found}
    if args.element is None:
        rows = []
        for pair in TERNARY_GENERATORS:
            rows.append({"ternary": pair, "image": str(to_normal_form(phi_embed(Element.parse(pair), 3)))})
        return [f"{r['ternary']} -> {r['image']}" for r in rows], {"generators": rows}
    a = Element.parse(args.element)
    rec = _element_record(phi_embed(a, a.arity))
    return [rec["normal_form"], rec["tree_pair"]], rec


def cmd_encode(args):
    res = encode_link(_read_pd(args.pd))
    nf = str(to_normal_form(res.element))
    rec = {
        "normal_form": nf,
        "tree_pair": str(res.element),
        "crossings": res.crossings,
        "unlinked": res.unlinked,
        "dipoles": res.unknots_added,
        "diagram_vertices": res.diagram_vertices,
        "bound": res.bound,
    }
    lines = [
        nf,
        f"crossings {res.crossings}, unlinked unknots {res.unlinked}, dipoles {res.unknots_added}",
        f"diagram vertices {res.diagram_vertices} <= bound {res.bound}",
    ]
    return lines, rec


def cmd_decode(args):
    pd = element_to_link(_element(args.element))
    text = pd.to_text()
    if args.output:
        Path(args.output).write_text(text)
        return [f"wrote {args.output}"], {"output": args.output, "crossings": len(pd.crossings)}
    return [text.rstrip("\n")], {"pd": text, "crossings": len(pd.crossings)}


def cmd_bracket(args):
    if args.element:
        pd = element_to_link(_element(args.pd))
    else:
        pd = _read_pd(args.pd)
    value = bracket(pd)
    return [str(value)], {"bracket": str(value), "crossings": len(pd.crossings)}


def cmd_index(args):
    res = encode_link(_read_pd(args.pd))
    return [f"bound {res.bound}, achieved {res.diagram_vertices} <= {res.bound}"], {
        "bound": res.bound,
        "achieved": res.diagram_vertices,
    }


def _audit_one(path: str) -> tuple[list, list]:
    rows = audit(_read_pd(path))
    lines = [path]
    for row in rows:
        lines.append("  " + ", ".join(f"{k}={v}" for k, v in row.items()))
    return lines, rows


def cmd_audit(args):
    if args.dir:
        lines, payload = [], {}
        for p in sorted(Path(args.pd).glob("*.pd")):
            more, rows = _audit_one(str(p))
            lines += more
            payload[str(p)] = rows
        return lines, payload
    lines, rows = _audit_one(args.pd)
    return lines, {args.pd: rows}


def _layout_from(path: str) -> BookLayout:
    text = Path(path).read_text()
    if text.lstrip().startswith("spine"):
        return BookLayout.from_text(text)
    g = remove_loops(tait_graph(PDCode.parse(text)))
    comp = max(g.components(), key=len)
    return embed_signed(g.subgraph(comp))


def cmd_render(args):
    if args.kind == "tree":
        svg = render.tree_pair_svg(_element(args.input))
    elif args.kind == "graph":
        svg = render.layout_svg(element_layout(_element(args.input)))
    elif args.kind == "layout":
        svg = render.layout_svg(_layout_from(args.input), color_by="sign")
    else:
        svg = render.link_svg(_element(args.input))
    Path(args.output).write_text(svg)
    return [f"wrote {args.output}"], {"output": args.output, "kind": args.kind}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="thompsonlinks", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("nf", help="normal form of an element")
    s.add_argument("element")
    s.set_defaults(func=cmd_nf)

    s = sub.add_parser("mul", help="product, applied left to right")
    s.add_argument("elements", nargs="+")
    s.set_defaults(func=cmd_mul)

    s = sub.add_parser("inv", help="inverse")
    s.add_argument("element")
    s.set_defaults(func=cmd_inv)

    s = sub.add_parser("oplus", help="a (+) b")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_oplus)

    s = sub.add_parser("eval", help="image of a dyadic point")
    s.add_argument("element")
    s.add_argument("point")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("jones", help="membership in the n-good subgroup")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("element")
    s.set_defaults(func=cmd_jones)

    s = sub.add_parser("generators", help="generators x_j...x_{j+n-2} of the copy of F_n")
    s.add_argument("--n", type=int, default=3)
    s.set_defaults(func=cmd_generators)

    s = sub.add_parser("phi", help="embed an n-ary pair; no argument lists the ternary generators")
    s.add_argument("element", nargs="?")
    s.add_argument("--search", action="store_true", help="find n-ary preimages of a binary element")
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--max-carets", type=int, default=3)
    s.set_defaults(func=cmd_phi)

    s = sub.add_parser("encode", help="element representing a PD file")
    s.add_argument("pd")
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("decode", help="PD code of the link of an element")
    s.add_argument("element")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("bracket", help="Kauffman bracket of a PD file")
    s.add_argument("pd")
    s.add_argument("--element", action="store_true", help="argument is an element, not a file")
    s.set_defaults(func=cmd_bracket)

    s = sub.add_parser("index", help="Thompson index bound 12n+u+3 and the achieved size")
    s.add_argument("pd")
    s.set_defaults(func=cmd_index)

    s = sub.add_parser("audit", help="per-stage accounting of the link pipeline")
    s.add_argument("pd", help="PD file, or a directory with --dir")
    s.add_argument("--dir", action="store_true")
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("render", help="SVG drawing")
    s.add_argument("kind", choices=("tree", "graph", "layout", "link"))
    s.add_argument("input", help="element, or for 'layout' a PD or layout file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        lines, payload = args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (AssertionError, RuntimeError, ArithmeticError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
