"""Command line entry point ``sperndeg``.

Exit codes are stable; see :mod:`sperndeg.errors` for the table.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .cover import (
    crosspolytope,
    find_generic_point,
    is_pebble_set,
    pebble_set,
    regular_polygon,
    standard_simplex,
)
from .degree import boundary_degree, boundary_map_degree, mod2_degree
from .document import Instance, dump, load
from .errors import HypothesisFailure, InvalidInstance, SperndegError
from .generator import CONSTRAINTS, GEN_KINDS, GenSpec, enumerate_labellings
from .labelling import SignedLabelling, to_cyclic
from .render import render_svg
from .theorems import THEOREMS

EXIT_USAGE = 2


def _rational(text: str) -> Fraction:
    try:
        if any(c in text for c in ".eE"):
            raise ValueError
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer or p/q rational") from None


def _fmt_point(p) -> str:
    return " ".join(str(Fraction(c)) for c in p)


def _polytope_for(doc: Instance):
    if doc.polytope is not None:
        return doc.polytope_obj()
    d, n = doc.dimension, doc.n
    if doc.signed:
        return crosspolytope(d) if n == d else None
    if n == d + 1:
        return standard_simplex(d)
    if d == 2 and n >= 3:
        return regular_polygon(n)
    return None


def _require_polytope(doc: Instance):
    P = _polytope_for(doc)
    if P is None:
        raise InvalidInstance("the document has no polytope and none can be inferred")
    return P


def _point(point, doc: Instance, P):
    if point:
        if len(point) != P.dimension:
            raise InvalidInstance(f"--point needs {P.dimension} coordinates, got {len(point)}")
        return tuple(point)
    if doc.points:
        return doc.points[0]
    return find_generic_point(P)


def _plain_labelling(doc: Instance):
    lab = doc.labelling()
    return to_cyclic(lab) if isinstance(lab, SignedLabelling) else lab


# -- commands -----------------------------------------------------------------

def cmd_degree(args) -> int:
    doc = load(args.file)
    T = doc.triangulation()
    lab = _plain_labelling(doc)
    if not T.orientable:
        P = _require_polytope(doc)
        print(f"deg2= {mod2_degree(T, lab, P)}")
        return 0
    if T.dimension == 2:
        report = boundary_degree(T, lab)
        for q in report.per_cycle:
            print(q)
        print(f"deg= {report.total}")
        return 0
    P = _require_polytope(doc)
    print(f"deg= {boundary_map_degree(T, lab, P)}")
    return 0


def cmd_cov(args) -> int:
    from .cover import cov

    doc = load(args.file)
    P = _require_polytope(doc)
    points = [_point(args.point, doc, P)] if args.point else list(doc.points or ())
    if not points:
        raise InvalidInstance("give --point or add points to the document")
    for y in points:
        if len(points) > 1:
            print(f"# point {_fmt_point(y)}")
        for s in cov(P, y).simplices:
            print(" ".join(str(i) for i in s))
    return 0


def cmd_pebbles(args) -> int:
    doc = load(args.file)
    P = _require_polytope(doc)
    if doc.points and not args.construct:
        pts = list(doc.points)
        check = is_pebble_set(P, pts)
        if not check.ok:
            print(f"not a pebble set: {check.reason}")
            if check.shared:
                print(f"shared simplex: {' '.join(str(i) for i in check.shared)}")
            return HypothesisFailure.exit_code
    else:
        pts = pebble_set(P)
    for p in pts:
        print(_fmt_point(p))
    print(f"verified {len(pts)} points with pairwise disjoint cover sets")
    return 0


def cmd_check(args) -> int:
    doc = load(args.file)
    T = doc.triangulation()
    lab = doc.labelling()
    verdict = _run_check(args.theorem, doc, T, lab, args)
    print(json.dumps(verdict.to_dict(), indent=2))
    return 0 if verdict.holds else 1


def _run_check(theorem, doc, T, lab, args=None):
    fn = THEOREMS[theorem]
    point = getattr(args, "point", None)
    if theorem in ("tucker", "ky-fan"):
        if not isinstance(lab, SignedLabelling):
            raise InvalidInstance(f"{theorem} needs a signed labelling")
        if theorem == "tucker":
            return fn(T, lab)
        return fn(T, lab, doc.polytope_obj())
    if isinstance(lab, SignedLabelling):
        lab = to_cyclic(lab)
    if theorem == "fully-coloured":
        return fn(T, lab)
    P = _require_polytope(doc)
    if theorem == "polytopal":
        pebbles = doc.points if (doc.points and T.dimension > 2) else None
        return fn(T, lab, P, pebbles)
    return fn(T, lab, P, _point(point, doc, P))


def cmd_gen(args) -> int:
    params = {"n": args.n}
    for key in ("vertices", "m", "rings", "depth", "dimension", "constraint"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    T, lab = GenSpec(args.kind, params, args.seed).build()
    doc = Instance.from_objects(T, lab, note=f"generated: {args.kind} seed {args.seed}")
    if args.output == "-":
        from .document import serialize

        sys.stdout.write(serialize(doc))
    else:
        dump(doc, args.output)
    return 0


def _default_theorem(doc, constraint, n):
    if constraint == "antipodal":
        return "tucker"
    if n == doc.dimension + 1:
        return "fully-coloured"
    return "polytopal"


def cmd_enumerate(args) -> int:
    doc = load(args.file)
    T = doc.triangulation()
    theorem = args.theorem or _default_theorem(doc, args.constraint, args.n)
    if args.constraint == "antipodal":
        labellings = enumerate_labellings(T, args.n, "antipodal", cap=args.cap, no_boundary_complementary=theorem == "tucker")
    else:
        P = doc.polytope_obj() if args.constraint == "sperner" else None
        labellings = enumerate_labellings(T, args.n, args.constraint, P=P, cap=args.cap)
    sub = Instance(doc.dimension, args.n, args.constraint == "antipodal", doc.vertices, doc.simplices,
                   doc.labels, doc.orientable, doc.polytope, doc.points)
    total = holds = skipped = 0
    failures = []
    for lab in labellings:
        total += 1
        try:
            v = _run_check(theorem, sub, T, lab)
        except HypothesisFailure:
            skipped += 1
            continue
        if v.holds:
            holds += 1
        else:
            failures.append(lab.labels)
    print(f"theorem= {theorem}")
    print(f"labellings= {total}")
    print(f"checked= {total - skipped}")
    print(f"hypothesis_failures= {skipped}")
    print(f"holds= {holds}")
    print(f"violations= {len(failures)}")
    for f in failures[:10]:
        print("violation: " + " ".join(str(x) for x in f))
    return 0 if not failures else 1


def cmd_render(args) -> int:
    doc = load(args.file)
    svg = render_svg(doc.triangulation(), doc.labelling(), title=doc.note)
    if args.output == "-":
        sys.stdout.write(svg)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sperndeg", description="Degrees of labelled triangulations and the bounds they imply.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("degree", help="boundary degree per cycle and in total")
    s.add_argument("file")
    s.set_defaults(func=cmd_degree)

    s = sub.add_parser("cov", help="simplices of the polytope containing a point")
    s.add_argument("file")
    s.add_argument("--point", nargs="+", type=_rational)
    s.set_defaults(func=cmd_cov)

    s = sub.add_parser("pebbles", help="verify the document's points or construct a pebble set")
    s.add_argument("file")
    s.add_argument("--construct", action="store_true", help="ignore bundled points and construct a set")
    s.set_defaults(func=cmd_pebbles)

    s = sub.add_parser("check", help="verify a lower bound and print the verdict")
    s.add_argument("theorem", choices=sorted(THEOREMS))
    s.add_argument("file")
    s.add_argument("--point", nargs="+", type=_rational)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("gen", help="write a seeded random instance")
    s.add_argument("kind", choices=GEN_KINDS)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--vertices", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--rings", type=int)
    s.add_argument("--depth", type=int)
    s.add_argument("--dimension", type=int)
    s.add_argument("--constraint", choices=CONSTRAINTS)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("enumerate", help="check a bound on every labelling of a triangulation")
    s.add_argument("file")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--constraint", choices=CONSTRAINTS, default="free")
    s.add_argument("--theorem", choices=sorted(THEOREMS))
    s.add_argument("--cap", type=int, default=10**7)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("render", help="draw a planar instance as SVG")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SperndegError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
