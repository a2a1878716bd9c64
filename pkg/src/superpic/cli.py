"""Command-line front end: ``superpic <command> ...`` writing JSON to stdout."""

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .cocycle import EVEN, PI, build_system, solve_even_report, solve_pi
from .errors import (InadmissibleInput, InvalidDirections, InvariantFailure, SuperpicError)
from .factor import factorize
from .fan import check_decorations, classical_pic_rank, normal_fan
from .picard import pi_pic_of_polytope, pic_of_polytope, qgr_pi_pic, qgr_pic
from .polytope import (LatticePolytope, affine_dim, parallel_component_number, skeleton,
                       skeleton_dot, two_faces, validate_edge_directions)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_ADMISSIBILITY = 3
EXIT_INVARIANT = 4


class InputError(Exception):
    pass


def load_polytope(spec):
    """A JSON file path or ``catalog:<name>``."""
    if spec.startswith("catalog:"):
        name = spec.split(":", 1)[1]
        if name not in catalog.CATALOG:
            raise InputError(f"no catalog entry {name!r}")
        return catalog.get(name).polytope
    path = Path(spec)
    if not path.is_file():
        raise InputError(f"cannot read {spec}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"{spec}: {exc}") from exc
    return LatticePolytope.from_json(data)


def _emit(obj):
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _write_dot(p, path):
    if path:
        Path(path).write_text(skeleton_dot(p), encoding="utf-8")


def cmd_pic(args):
    p = load_polytope(args.polytope)
    _write_dot(p, args.dot)
    _emit(pic_of_polytope(p).to_json())


def cmd_pipic(args):
    p = load_polytope(args.polytope)
    _write_dot(p, args.dot)
    _emit(pi_pic_of_polytope(p).to_json())


def cmd_skeleton(args):
    p = load_polytope(args.polytope)
    _write_dot(p, args.dot)
    sk = skeleton(p)
    dirs = validate_edge_directions(p)
    out = {
        "vertices": [list(v) for v in p.vertices],
        "edges": [list(e) for e in sk.edges],
        "parallel_classes": [{"direction": list(d), "edges": [list(e) for e in es]}
                             for d, es in sorted(sk.parallel_classes.items())],
        "pc": parallel_component_number(p),
        "directions_ok": dirs.ok,
        "offending": [{"edge": list(e), "direction": list(d)} for e, d in dirs.offending],
    }
    if affine_dim(p) >= 2:
        out["two_faces"] = [{"vertices": list(f.vertex_indices), "shape": f.shape} for f in two_faces(p)]
    _emit(out)


def cmd_factor(args):
    p = load_polytope(args.polytope)
    _emit(factorize(p).to_json())


def cmd_fan(args):
    p = load_polytope(args.polytope)
    fan = normal_fan(p)
    report = check_decorations(fan)
    out = fan.to_json() if args.action == "show" else {}
    out.update({
        "ok": report.ok,
        "violations": [{"cone": c, "rays": [a, b], "bracket": list(br)} for c, a, b, br in report.violations],
        "undecorated": list(report.undecorated),
        "classical_pic_rank": classical_pic_rank(fan),
    })
    _emit(out)
    if not report.ok:
        return EXIT_ADMISSIBILITY
    return EXIT_OK


def cmd_cocycle(args):
    p = load_polytope(args.polytope)
    system = build_system(p, args.mode)
    sol = solve_even_report(system) if args.mode == EVEN else solve_pi(system)
    out = sol.to_json()
    if args.mode == PI and p.kind != "qgr":
        out["label"] = "ansatz-relative"
    _emit(out)


def cmd_qgr(args):
    fn = qgr_pic if args.which == "pic" else qgr_pi_pic
    _emit(fn(args.r, args.n).to_json())


def cmd_catalog(args):
    if args.name is None:
        _emit({"entries": catalog.names()})
        return
    if args.name not in catalog.CATALOG:
        raise InputError(f"no catalog entry {args.name!r}")
    e = catalog.get(args.name)
    _emit({"name": e.name, "polytope": e.polytope.to_json(),
           "expected_pic": e.expected_pic, "expected_pipic": e.expected_pi})


def build_parser():
    parser = argparse.ArgumentParser(prog="superpic",
                                     description="Picard groups and Pi-Picard sets of toric supervarieties")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_polytope(name, help_text, dot=True):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("polytope", help="polytope JSON file or catalog:<name>")
        if dot:
            sp.add_argument("--dot", metavar="PATH", help="also write the skeleton as Graphviz DOT")
        return sp

    with_polytope("pic", "Picard rank of the orbit closure").set_defaults(func=cmd_pic)
    with_polytope("pipic", "Pi-Picard structure").set_defaults(func=cmd_pipic)
    with_polytope("skeleton", "edges, parallel classes and 2-faces").set_defaults(func=cmd_skeleton)
    with_polytope("factor", "coordinate product decomposition", dot=False).set_defaults(func=cmd_factor)

    fan = sub.add_parser("fan", help="normal fan and decoration check")
    fan.add_argument("action", choices=["check", "show"])
    fan.add_argument("polytope")
    fan.set_defaults(func=cmd_fan)

    coc = sub.add_parser("cocycle", help="solve the cocycle conditions")
    coc.add_argument("action", choices=["solve"])
    coc.add_argument("--mode", choices=[EVEN, PI], default=EVEN)
    coc.add_argument("polytope")
    coc.set_defaults(func=cmd_cocycle)

    qgr = sub.add_parser("qgr", help="closed forms for QGr(r, n)")
    qgr.add_argument("which", choices=["pic", "pipic"])
    qgr.add_argument("r", type=int)
    qgr.add_argument("n", type=int)
    qgr.set_defaults(func=cmd_qgr)

    cat = sub.add_parser("catalog", help="list or show catalog entries")
    cat.add_argument("name", nargs="?")
    cat.set_defaults(func=cmd_catalog)
    return parser


def run(argv=None):
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InadmissibleInput, InvalidDirections) as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return EXIT_ADMISSIBILITY
    except InvariantFailure as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except SuperpicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return code or EXIT_OK


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
