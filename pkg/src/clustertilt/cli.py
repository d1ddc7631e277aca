"""Command-line interface: ``clustertilt <command> ...``.

Exit codes: 0 success, 1 selftest failure or internal error, 2 invalid
category spec, 3 object is not cluster-tilting, 4 quiver file does not
parse, 5 quiver is not cluster-tilted.
"""

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .ar_model import CategorySpec, Indec, SpecError, build
from .classify import classify
from .presentation import NotClusterTilted, Quiver, ct_quiver, format_path, format_presentation, relations
from .reconstruct import reconstruct_report, verify_roundtrip
from .tilting import CTObject, IntegrityError, enumerate_ct, first_ext_pair, is_cluster_tilting, is_rigid

EXIT_FAIL, EXIT_SPEC, EXIT_NOT_CT, EXIT_PARSE, EXIT_NOT_TILTED = 1, 2, 3, 4, 5


class ParseError(ValueError):
    pass


@dataclass
class QuiverDocument:
    vertices: list
    arrows: list

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ParseError("vertex labels must be unique")
        known = set(self.vertices)
        for s, t in self.arrows:
            if s not in known or t not in known:
                raise ParseError(f"arrow {s} -> {t} has an unknown endpoint")

    def quiver(self):
        return Quiver(tuple(self.vertices), tuple(tuple(a) for a in self.arrows))


def parse_quiver_document(text):
    """Read the block format (``vertices:`` / ``arrows:``) or a JSON object."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
            vertices = [str(v) for v in data["vertices"]]
            arrows = [(str(s), str(t)) for s, t in data["arrows"]]
        except (ValueError, KeyError, TypeError) as e:
            raise ParseError(f"bad JSON quiver: {e}") from None
        return QuiverDocument(vertices, arrows)
    vertices, arrows, block = [], [], None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if sep and head.strip().lower() in ("vertices", "arrows"):
            block = head.strip().lower()
            line = tail.strip()
            if not line:
                continue
        if block == "vertices":
            vertices.extend(v for v in re.split(r"[\s,]+", line) if v)
        elif block == "arrows":
            m = re.fullmatch(r"(\S+)\s*->\s*(\S+)", line)
            if not m:
                raise ParseError(f"line {lineno}: expected 'src -> dst', got {raw.strip()!r}")
            arrows.append((m.group(1), m.group(2)))
        else:
            raise ParseError(f"line {lineno}: content before a 'vertices:' block")
    if not vertices:
        raise ParseError("no vertices given")
    return QuiverDocument(vertices, arrows)


def read_quiver(path):
    try:
        with open(path) as f:
            return parse_quiver_document(f.read()).quiver()
    except OSError as e:
        raise ParseError(str(e)) from None


def parse_object(text):
    pairs = re.findall(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", text)
    leftover = re.sub(r"\(\s*-?\d+\s*,\s*-?\d+\s*\)", "", text).strip(" ,;")
    if leftover or not pairs:
        raise ValueError(f"could not read coordinates from {text!r}")
    return [Indec(int(p), int(r)) for p, r in pairs]


# -- DOT ----------------------------------------------------------------------

def _q(s):
    return '"{}"'.format(str(s).replace("\\", "\\\\").replace('"', r"\""))


def ar_dot(C):
    lines = [f"digraph {_q('AR ' + str(C.spec))} {{"]
    for x in C.indecs:
        lines.append(f"  {_q(x)};")
    for x, y in C.ar_arrows:
        lines.append(f"  {_q(x)} -> {_q(y)};")
    for x in C.indecs:
        lines.append(f"  {_q(x)} -> {_q(C.tau_map[x])} [style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines)


def quiver_dot(Q, presentation=None, name="quiver"):
    lines = [f"digraph {_q(name)} {{"]
    for v in Q.vertices:
        lines.append(f"  {_q(v)};")
    for s, t in Q.arrows:
        lines.append(f"  {_q(s)} -> {_q(t)};")
    if presentation is not None:
        notes = [f"zero: {format_path(p)}" for p in presentation.zero_relations]
        notes += [f"comm: {format_path(r)} ~ {format_path(s)}" for r, s in presentation.commutativity_relations]
        if notes:
            lines.append(f"  label={_q('; '.join(notes))};")
    lines.append("}")
    return "\n".join(lines)


# -- commands -----------------------------------------------------------------

def _spec(args):
    return CategorySpec(args.family.upper(), args.rank)


def cmd_build(args, out):
    C = build(_spec(args))
    out(f"family: {C.family}")
    out(f"rank: {C.rank}")
    if C.note:
        out(f"note: {C.note}")
    out(f"indecomposables: {len(C.indecs)}")
    orbits = C.tau_orbits()
    out(f"tau-orbits: {len(orbits)} (sizes {' '.join(str(len(o)) for o in orbits)})")
    if args.emit == "dot":
        out(ar_dot(C))
    elif args.emit == "table":
        out("x\ty\thom\text")
        for x in C.indecs:
            for y in C.indecs:
                out(f"{x}\t{y}\t{C.hom(x, y)}\t{C.ext(x, y)}")
    return 0


def cmd_enumerate(args, out):
    C = build(_spec(args))
    cts = enumerate_ct(C)
    if args.count_only:
        out(str(len(cts)))
    else:
        out(f"# {C.spec}: {len(cts)} cluster-tilting objects")
        for T in cts:
            out(str(T))
    return 0


def cmd_quiver(args, out):
    C = build(_spec(args))
    try:
        xs = parse_object(args.object)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NOT_CT
    unknown = [x for x in xs if x not in C]
    if unknown:
        print(f"error: {unknown[0]} is not an indecomposable of {C.spec}", file=sys.stderr)
        return EXIT_NOT_CT
    if not is_cluster_tilting(C, xs):
        pair = first_ext_pair(C, xs)
        if pair is not None:
            print(f"error: not cluster-tilting: Ext({pair[0]},{pair[1]}) = {C.ext(*pair)}", file=sys.stderr)
        elif is_rigid(C, xs):
            print(f"error: not cluster-tilting: rigid with {len(set(xs))} summands, needs {C.rank}", file=sys.stderr)
        return EXIT_NOT_CT
    T = CTObject(tuple(xs))
    Q = ct_quiver(C, T)
    P = relations(Q) if (args.relations or args.dot) else None
    if args.dot:
        out(quiver_dot(Q, P, f"End(T)^op in {C.spec}"))
        return 0
    out(f"family: {C.family}")
    out(f"rank: {C.rank}")
    out(f"object: {T}")
    if P is not None:
        out(format_presentation(P))
    else:
        out(f"arrows: {len(Q.arrows)}")
        for s, t in Q.arrows:
            out(f"  {s} -> {t}")
    return 0


def cmd_classify(args, out):
    Q = read_quiver(args.file)
    d = classify(Q)
    if d.shape == "TypeA":
        out(d.describe())
        return 0
    cands = d.candidates or (d,)
    out(f"shape candidates: {', '.join(sorted({c.shape for c in cands}))}")
    for i, c in enumerate(cands):
        out(f"  {i}: {c.describe()}")
    return 0


def cmd_reconstruct(args, out):
    Q = read_quiver(args.file)
    classify(Q)
    r = reconstruct_report(Q)
    out(f"family: {r.spec.family}")
    out(f"rank: {r.spec.rank}")
    out(f"object: {r.T}")
    if args.verify:
        rep = verify_roundtrip(Q)
        for line in rep.lines():
            out(line)
        return 0 if rep.ok else EXIT_FAIL
    return 0


def cmd_selftest(args, out):
    from .selftest import run

    rows = run(args.max_rank_a, args.max_rank_d, corrupt=args.corrupt_ext)
    out(f"selftest: A_1..A_{args.max_rank_a}, D_4..D_{args.max_rank_d}")
    width = max(len(r[0]) for r in rows)
    for name, ok, detail, secs in rows:
        out(f"{name.ljust(width)}  {'pass' if ok else 'FAIL'}  {detail}")
    # timings go to stderr so stdout stays reproducible
    for name, _, _, secs in rows:
        print(f"{name}: {secs:.1f}s", file=sys.stderr)
    return 0 if all(r[1] for r in rows) else EXIT_FAIL


def make_parser():
    p = argparse.ArgumentParser(prog="clustertilt", description="Cluster categories of type A and D.")
    sub = p.add_subparsers(dest="command", required=True)

    def spec_args(q):
        q.add_argument("--family", required=True, help="A or D")
        q.add_argument("--rank", type=int, required=True)

    q = sub.add_parser("build", help="indecomposables, tau-orbits, AR quiver")
    spec_args(q)
    q.add_argument("--emit", choices=["counts", "dot", "table"], default="counts")
    q.set_defaults(func=cmd_build)

    q = sub.add_parser("enumerate", help="list cluster-tilting objects")
    spec_args(q)
    q.add_argument("--count-only", action="store_true")
    q.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("quiver", help="quiver with relations of a cluster-tilting object")
    spec_args(q)
    q.add_argument("--object", required=True, help='summands, e.g. "(0,1) (0,2) (0,3)"')
    q.add_argument("--relations", action="store_true")
    q.add_argument("--dot", action="store_true")
    q.set_defaults(func=cmd_quiver)

    q = sub.add_parser("classify", help="shape of a quiver file")
    q.add_argument("file")
    q.set_defaults(func=cmd_classify)

    q = sub.add_parser("reconstruct", help="cluster-tilting object realizing a quiver file")
    q.add_argument("file")
    q.add_argument("--verify", action="store_true")
    q.set_defaults(func=cmd_reconstruct)

    q = sub.add_parser("selftest", help="run the acceptance checks")
    q.add_argument("--max-rank-a", type=int, default=8)
    q.add_argument("--max-rank-d", type=int, default=6)
    q.add_argument("--corrupt-ext", action="store_true", help=argparse.SUPPRESS)
    q.set_defaults(func=cmd_selftest)
    return p


def main(argv=None, out=print):
    args = make_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except SpecError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SPEC
    except ParseError as e:
        print(f"error: cannot parse quiver file: {e}", file=sys.stderr)
        return EXIT_PARSE
    except NotClusterTilted as e:
        print(f"not cluster-tilted: {e}", file=sys.stderr)
        return EXIT_NOT_TILTED
    except IntegrityError as e:
        print(f"integrity error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
