"""``cxlab`` command-line front end.

Exit codes: 0 success, 1 the input fails a condition, 2 a property that
always holds was violated (a bug), 64 usage error, 65 malformed input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import automorphisms, complex_core, group_pair, homology, metric, nerve_ops, surface_models
from .errors import ConditionFailure, FaceCapExceeded, InputError, TheoremViolation

EXIT_OK, EXIT_CONDITION, EXIT_VIOLATION, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 64, 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _digest(path):
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _write_json(path, data):
    with open(path, "w") as fh:
        json.dump(data, fh, sort_keys=True, indent=1)
        fh.write("\n")


def _complex(args):
    return complex_core.from_json(_read_json(args.input), face_cap=args.face_cap)


def _catalog(args):
    return surface_models.catalog_from_json(_read_json(args.catalog))


# -- commands: each returns (result, exit code) --------------------------------

def cmd_nerve(args):
    nx = nerve_ops.nerve_of_maximal(_complex(args))
    result = {"nerve_vertices": nx.nerve.n_vertices,
              "nerve_maximal_ranks": [len(s) for s in nx.nerve.maximal]}
    dictionary = {k: list(v) for k, v in sorted(nx.dictionary.items())}
    if args.out:
        complex_core.dump_complex(nx.nerve, args.out)
    else:
        result["nerve"] = nx.nerve.to_json()
    if args.dict:
        _write_json(args.dict, dictionary)
    else:
        result["dictionary"] = dictionary
    return result, EXIT_OK


def cmd_check(args):
    report = nerve_ops.check_conditions(_complex(args))
    ok = report.separation_holds and report.extension_holds
    return report.to_json(), EXIT_OK if ok else EXIT_CONDITION


def cmd_nn(args):
    cx = _complex(args)
    try:
        return nerve_ops.beta_map(cx).to_json(), EXIT_OK
    except ConditionFailure as exc:
        nn = nerve_ops.nerve_of_maximal(nerve_ops.nerve_of_maximal(cx).nerve).nerve
        return {"isomorphic": automorphisms.are_isomorphic(cx, nn),
                "error": {"condition": exc.condition, "witness": exc.witness},
                "nn_vertices": nn.n_vertices,
                "nn_maximal_simplices": [list(s) for s in nn.maximal]}, EXIT_CONDITION


def cmd_aut(args):
    cx = _complex(args)
    if args.compare_nerve:
        return automorphisms.compare_aut(cx), EXIT_OK
    aut = automorphisms.automorphism_group(cx)
    return {"order": aut.order,
            "generators": [dict(sorted(m.items())) for m in aut.generator_mappings()]}, EXIT_OK


def cmd_homology(args):
    cx = _complex(args)
    if args.certify_nerve:
        return homology.nerve_homology_certificate(cx), EXIT_OK
    return homology.homology_profile(cx).to_json(), EXIT_OK


def cmd_qi(args):
    cx = _complex(args)
    name = args.input
    sample = args.pairs if args.pairs == "all" else int(args.pairs)
    return {"phi": metric.phi_check(cx, patch=name).to_json(),
            "constants": metric.qi_constants(cx, sample, seed=args.seed)}, EXIT_OK


def cmd_cic(args):
    if args.backend == "abelian":
        if args.subgroups is None or args.ambient_rank is None:
            raise UsageError("abelian backend needs --ambient-rank and --subgroups")
        data = _read_json(args.subgroups)
        subs = data["subgroups"] if isinstance(data, dict) else data
        backend = group_pair.AbelianBackend(args.ambient_rank, subs)
    else:
        if args.catalog:
            ref = surface_models.curve_patch(_catalog(args)).patch
        elif args.input:
            ref = _complex(args)
        else:
            raise UsageError(f"{args.backend} backend needs --catalog or --in")
        backend = (group_pair.NerveBackend if args.backend == "nerve"
                   else group_pair.MultitwistBackend)(ref)
    cic = group_pair.build_cic(backend, args.radius, args.max_arity, face_cap=args.face_cap)
    if args.out:
        complex_core.dump_complex(cic.complex, args.out)
    return cic.to_json(), EXIT_OK


def cmd_patch(args):
    rep = surface_models.curve_patch(_catalog(args))
    if args.out:
        complex_core.dump_complex(rep.patch, args.out)
    return rep.to_json(), EXIT_OK


def cmd_census(args):
    graphs = surface_models.pants_census(args.genus)
    return {"genus": args.genus, "model_for_n": len(graphs),
            "graphs": [g.to_json() for g in graphs]}, EXIT_OK


def cmd_embed6(args):
    return surface_models.coset_embedding(_catalog(args)), EXIT_OK


def cmd_audit_moves(args):
    return surface_models.elementary_move_audit(_catalog(args)), EXIT_OK


def cmd_equivalence_audit(args):
    if args.catalog:
        cx = surface_models.curve_patch(_catalog(args)).patch
    elif args.input:
        cx = _complex(args)
    else:
        raise UsageError("equivalence-audit needs --in or --catalog")
    return group_pair.equivalence_audit(cx, args.max_arity), EXIT_OK


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--face-cap", type=int, default=complex_core.DEFAULT_FACE_CAP)
    common.add_argument("--seed", type=int, default=0)
    parser = _Parser(prog="cxlab", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_, *flags):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        for f in flags:
            f(p)
        return p

    inp = lambda p: p.add_argument("--in", dest="input", required=True)  # noqa: E731
    inp_opt = lambda p: p.add_argument("--in", dest="input")  # noqa: E731
    cat = lambda p: p.add_argument("--catalog", required=True)  # noqa: E731
    cat_opt = lambda p: p.add_argument("--catalog")  # noqa: E731
    out = lambda p: p.add_argument("--out")  # noqa: E731
    arity = lambda p: p.add_argument("--max-arity", type=int, default=4)  # noqa: E731

    add("nerve", cmd_nerve, "nerve of the maximal simplices", inp, out,
        lambda p: p.add_argument("--dict"))
    add("check", cmd_check, "separation and extension conditions", inp)
    add("nn", cmd_nn, "reconstruct X from N(N(X))", inp)
    add("aut", cmd_aut, "automorphism group", inp,
        lambda p: p.add_argument("--compare-nerve", action="store_true"))
    add("homology", cmd_homology, "integer homology", inp,
        lambda p: p.add_argument("--certify-nerve", action="store_true"))
    add("qi", cmd_qi, "barycentre map properties and distortion constants", inp,
        lambda p: p.add_argument("--pairs", default="all"))
    add("cic", cmd_cic, "coset intersection complex", inp_opt, cat_opt, out, arity,
        lambda p: p.add_argument("--backend", choices=["abelian", "multitwist", "nerve"],
                                 required=True),
        lambda p: p.add_argument("--ambient-rank", type=int),
        lambda p: p.add_argument("--subgroups"),
        lambda p: p.add_argument("--radius", type=int, default=1))
    add("patch", cmd_patch, "curve-complex patch of a catalog", cat, out)
    add("census", cmd_census,
        f"trivalent pants graphs (genus 2..{surface_models.MAX_CENSUS_GENUS})",
        lambda p: p.add_argument("--genus", type=int, required=True))
    add("embed6", cmd_embed6, "curve complex into the commensurator coset complex", cat)
    add("audit-moves", cmd_audit_moves, "elementary move witnesses", cat)
    add("equivalence-audit", cmd_equivalence_audit,
        "stabilizer / multitwist / nerve predicate agreement", inp_opt, cat_opt, arity)
    return parser


def run(argv=None) -> tuple[dict, int]:
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
    except UsageError as exc:
        return {"command": None, "error": {"usage": str(exc)}}, EXIT_USAGE
    report = {"command": args.command, "inputs": {}}
    try:
        for flag in ("input", "catalog", "subgroups"):
            path = getattr(args, flag, None)
            if path:
                try:
                    report["inputs"][flag] = {"path": path, "sha256": _digest(path)}
                except OSError as exc:
                    raise InputError(f"{path}: {exc.strerror}") from None
        result, code = args.func(args)
        report["result"] = result
    except UsageError as exc:
        report["error"], code = {"usage": str(exc)}, EXIT_USAGE
    except TheoremViolation as exc:
        report["error"], code = {"violation": exc.statement, "witness": exc.witness}, EXIT_VIOLATION
    except ConditionFailure as exc:
        report["error"], code = {"condition": exc.condition, "witness": exc.witness}, EXIT_CONDITION
    except FaceCapExceeded as exc:
        report["error"], code = {"face_cap": exc.cap, "message": str(exc)}, EXIT_CONDITION
    except (InputError, KeyError, TypeError) as exc:
        report["error"], code = {"malformed": str(exc)}, EXIT_DATA
    report["exit_code"] = code
    report["timings"] = {"seconds": round(time.perf_counter() - start, 6)}
    return report, code


def main(argv=None) -> int:
    report, code = run(argv)
    json.dump(report, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")
    if code == EXIT_DATA:
        print(f"cxlab: {report['error']['malformed']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
