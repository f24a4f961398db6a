"""Command-line front end.

    boundquiver analyze fixture:A3
    boundquiver resolve fixture:E66 --module S2
    boundquiver ext fixture:E64 I3 P3 1
    boundquiver enumerate fixture:E410-2 --n 1
    boundquiver verify fixture:A3 --theorem almost-split
    boundquiver fixtures

INPUT is a presentation file or ``fixture:TAG``.  Exit status 0 on success,
1 when a well-formed request cannot be answered, 2 on bad input.  Set
BOUNDQUIVER_LOG (DEBUG, INFO, ...) for diagnostics on stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys

from .algebra import FIXTURE_TAGS, AlgebraTable, compute_algebra, named_fixture
from .errors import ComputationError, HypothesisUnmet, InputError, PreconditionUnmet
from .fileformat import LEFT_TO_RIGHT, RIGHT_TO_LEFT, Document, build_module, read_document, serialize
from .homological import (
    PROJECTIVE, ext_dim, ext_dim_injective, min_injective_coresolution,
    min_projective_resolution,
)
from .modules import Representation, direct_sum, injective, projective, simple
from .orthogonal import enumerate_mos, ext_table, nakayama_atlas, user_atlas
from .structure import analyze, jsonable, mos_existence
from .theorems import THEOREMS, verify_theorem

_SELECTOR = re.compile(r"([SPI])\(?(\d+)\)?\Z")


class Session:
    """A loaded input: the algebra plus any module blocks from the file."""

    def __init__(self, source: str, convention: str):
        if source.startswith("fixture:"):
            self.doc = Document(named_fixture(source[len("fixture:"):]))
        else:
            self.doc = read_document(source, convention)
        self.source = source
        self.algebra: AlgebraTable = compute_algebra(self.doc.presentation)
        self.modules = {block.name: build_module(self.algebra, block) for block in self.doc.modules}

    def module(self, selector: str) -> Representation:
        """``S2``, ``P(1)``, ``I3``, a module block name, or a ``+``-separated sum."""
        parts = [x.strip() for x in selector.split("+")]
        mods = [self._one(x) for x in parts]
        if len(mods) == 1:
            return mods[0]
        m = direct_sum(mods)[0]
        m.label = " ⊕ ".join(parts)
        return m

    def display(self, selector: str) -> str:
        """Canonical spelling of a selector, e.g. ``S2`` -> ``S(2)``."""
        parts = []
        for x in (y.strip() for y in selector.split("+")):
            hit = _SELECTOR.match(x)
            parts.append(f"{hit.group(1)}({hit.group(2)})" if hit and x not in self.modules else x)
        return " ⊕ ".join(parts)

    def _one(self, name: str) -> Representation:
        if name in self.modules:
            return self.modules[name]
        hit = _SELECTOR.match(name)
        if not hit:
            raise InputError(f"unknown module {name!r}; use S<i>, P<i>, I<i> or a module block name")
        kind, v = hit.group(1), int(hit.group(2))
        if not 1 <= v <= self.algebra.vertex_count:
            raise InputError(f"vertex {v} outside 1..{self.algebra.vertex_count}")
        return {"S": simple, "P": projective, "I": injective}[kind](self.algebra, v)

    def atlas(self, from_file: bool):
        if from_file:
            if not self.modules:
                raise InputError("--atlas-from-file given but the input has no module blocks")
            names = list(self.modules)
            return user_atlas(self.algebra, [self.modules[k] for k in names], names)
        return nakayama_atlas(self.algebra)


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(jsonable(payload), sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print("\n".join(lines))


def cmd_analyze(args) -> int:
    s = Session(args.input, args.convention)
    report = analyze(s.algebra)
    payload = report.to_json()
    try:
        payload["mos_existence"] = mos_existence(s.algebra)
    except PreconditionUnmet:
        payload["mos_existence"] = None
    lines = report.lines()
    if payload["mos_existence"] is not None:
        ex = payload["mos_existence"]
        lines.append(f"maximal 1-orthogonal subcategory possible: {ex['any_possible']}"
                     f" (trivial {ex['trivial_exists']}, non-trivial {ex['nontrivial_possible']})")
    _emit(args, payload, lines)
    return 0


def cmd_resolve(args) -> int:
    s = Session(args.input, args.convention)
    m = s.module(args.module)
    name = s.display(args.module)
    max_len = args.max_len if args.max_len is not None else 2 * s.algebra.dimension
    if args.kind == "projective":
        res = min_projective_resolution(m, max_len, allow_partial=True)
        chain = " → ".join(["0"] * res.exhausted + [res.term_label(k) for k in reversed(range(len(res.terms)))]
                           + [name, "0"])
    else:
        res = min_injective_coresolution(m, max_len, allow_partial=True)
        chain = " → ".join(["0", name] + [res.term_label(k) for k in range(len(res.terms))]
                           + ["0"] * res.exhausted)
    payload = {"module": name, "module_dims": list(m.dims), **res.to_json(),
               "length": res.length if res.exhausted else None}
    dim_name = "pd" if res.kind == PROJECTIVE else "id"
    lines = [chain] + res.lines()
    lines.append(f"{dim_name} {name} = {res.length}" if res.exhausted
                 else f"{dim_name} {name} > {res.length} (not resolved within {max_len} steps)")
    _emit(args, payload, lines)
    return 0


def cmd_ext(args) -> int:
    if args.k < 0:
        raise InputError("k must be non-negative")
    s = Session(args.input, args.convention)
    m, n = s.module(args.m), s.module(args.n)
    d = ext_dim(m, n, args.k)
    mn, nn = s.display(args.m), s.display(args.n)
    payload = {"m": mn, "n": nn, "k": args.k, "dim": d}
    if args.check:
        other = ext_dim_injective(m, n, args.k)
        payload["dim_injective_route"] = other
        if other != d:
            raise ComputationError(f"projective route gives {d}, injective route gives {other}")
    _emit(args, payload, [f"dim Ext^{args.k}({mn}, {nn}) = {d}"])
    return 0


def cmd_enumerate(args) -> int:
    if args.n < 1:
        raise InputError("--n must be at least 1")
    s = Session(args.input, args.convention)
    atlas = s.atlas(args.atlas_from_file)
    table = ext_table(atlas, args.n)
    cands = enumerate_mos(atlas, args.n, table)
    payload = {
        "n": args.n,
        "count": len(cands),
        "candidates": [c.to_json() for c in cands],
        "atlas": atlas.to_json(),
    }
    lines = [f"{len(cands)} candidate{'' if len(cands) == 1 else 's'}"]
    for c in cands:
        tag = "trivial" if c.is_trivial else "non-trivial"
        lines.append(f"  [{tag}] " + ", ".join(c.labels))
    lines.append(f"atlas: {len(atlas)} indecomposables ({atlas.origin})")
    if cands:
        lines += [f"note: {x}" for x in cands[0].notes]
    _emit(args, payload, lines)
    return 0


def cmd_verify(args) -> int:
    s = Session(args.input, args.convention)
    atlas = s.atlas(True) if args.atlas_from_file else None
    ids = sorted(THEOREMS) if args.theorem == "all" else [args.theorem]
    results, lines, status = [], [], 0
    for t in ids:
        try:
            v = verify_theorem(s.algebra, t, atlas)
        except HypothesisUnmet as e:
            if len(ids) == 1:
                raise
            results.append({"theorem": t, "status": "SKIPPED", "reason": str(e)})
            lines.append(f"{t}: SKIPPED ({e})")
            continue
        results.append(v.to_json())
        lines += v.lines()
        if not v.passed:
            status = 1
    payload = results[0] if len(ids) == 1 else {"verdicts": results}
    _emit(args, payload, lines)
    return status


def cmd_fixtures(args) -> int:
    rows = []
    for tag in FIXTURE_TAGS:
        p = named_fixture(tag)
        rows.append({"tag": tag, "vertices": p.vertex_count, "arrows": len(p.arrows),
                     "relations": len(p.relations), "text": serialize(p)})
    lines = [f"fixture:{r['tag']:<8} {r['vertices']} vertices, {r['arrows']} arrows, "
             f"{r['relations']} relations" for r in rows]
    _emit(args, {"fixtures": rows}, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    with_input = argparse.ArgumentParser(add_help=False, parents=[common])
    with_input.add_argument("input", help="presentation file or fixture:TAG")
    with_input.add_argument("--convention", choices=(RIGHT_TO_LEFT, LEFT_TO_RIGHT), default=RIGHT_TO_LEFT,
                            help="reading order of relation words in files")

    parser = argparse.ArgumentParser(prog="boundquiver", description="Homological computations over bound quiver algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[with_input], help="structure report")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("resolve", parents=[with_input], help="minimal (co)resolution of a module")
    p.add_argument("--module", required=True, help="S<i>, P<i>, I<i>, a module block name, or a sum A+B")
    p.add_argument("--kind", choices=("projective", "injective"), default="projective")
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("ext", parents=[with_input], help="dim Ext^k(M, N)")
    p.add_argument("m")
    p.add_argument("n")
    p.add_argument("k", type=int)
    p.add_argument("--check", action="store_true", help="also compute through an injective coresolution of N")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("enumerate", parents=[with_input], help="maximal n-orthogonal subcategories")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--atlas-from-file", action="store_true",
                   help="take the module blocks of the input as the complete list of indecomposables")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[with_input], help="check a structural statement")
    p.add_argument("--theorem", required=True, choices=sorted(THEOREMS) + ["all"])
    p.add_argument("--atlas-from-file", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fixtures", parents=[common], help="list built-in presentations")
    p.set_defaults(func=cmd_fixtures)
    return parser


def _configure_logging() -> None:
    level = os.environ.get("BOUNDQUIVER_LOG", "WARNING").upper()
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None) -> int:
    _configure_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (OSError, UnicodeDecodeError) as e:
        print(f"error: cannot read input: {e}", file=sys.stderr)
        return 2
    except ComputationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
