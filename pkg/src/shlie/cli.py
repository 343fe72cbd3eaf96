"""
Command line entry point.

    shlie gen lie-ideal --preset perturbed4 --out inst.json
    shlie gen random --seed 1 --dims 4,2 --out inst.json
    shlie check --instance inst.json
    shlie build --instance inst.json --out str.json
    shlie verify --structure str.json
    shlie truncate --instance inst.json --out trunc.json
    shlie example symplectic --samples 50 --seed 7 --max-freq 3

Reports are JSON with sorted keys, on stdout or in --report; a one-line
summary goes to stderr. Exit status: 0 all checks passed, 1 a mathematical
check failed (the report names a witness), 2 bad usage or input.
"""

import argparse
import json
import sys
from typing import List, Optional

from . import io
from .complex import build_contraction, homology, verify_contraction
from .core import (
    DEFAULT_MAX_ARITY, BoundaryClaimViolated, check_conditions, extend,
    truncate, verify_theorem2,
)
from .exactlin import fstr
from .instances import PRESETS, GenSeed, SpecInvalid, gen_random_acyclic

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got %d" % v)
    return v


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % text)
    if v < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer, got %d" % v)
    return v


def _dims(text):
    try:
        dims = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("--dims wants comma-separated integers, got %r" % text)
    if not dims or any(d < 0 for d in dims):
        raise argparse.ArgumentTypeError("--dims entries must be non-negative")
    return dims


def build_parser() -> argparse.ArgumentParser:
    p = ArgParser(prog="shlie", description="Exact sh-Lie structures on chain complexes.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=ArgParser)
    sub.required = True

    g = sub.add_parser("gen", help="generate an instance")
    gsub = g.add_subparsers(dest="kind", metavar="KIND", parser_class=ArgParser)
    gsub.required = True
    gl = gsub.add_parser("lie-ideal", help="a preset Lie-algebra-with-ideal instance")
    gl.add_argument("--preset", required=True, choices=sorted(PRESETS))
    gl.add_argument("--out")
    gr = gsub.add_parser("random", help="a seeded random instance, exact above degree 0")
    gr.add_argument("--seed", type=_nonneg, default=0)
    gr.add_argument("--dims", type=_dims, required=True)
    gr.add_argument("--height", type=_positive, default=9)
    gr.add_argument("--out")

    c = sub.add_parser("check", help="check the bracket conditions and the contraction")
    c.add_argument("--instance", required=True)
    c.add_argument("--report")

    b = sub.add_parser("build", help="build l_1..l_k from an instance")
    b.add_argument("--instance", required=True)
    b.add_argument("--max-arity", type=_positive, default=DEFAULT_MAX_ARITY)
    b.add_argument("--out", help="where to write the structure")
    b.add_argument("--report")

    v = sub.add_parser("verify", help="vanishing claims and relation sweep for a structure")
    v.add_argument("--structure", required=True)
    v.add_argument("--report")

    t = sub.add_parser("truncate", help="replace degrees >= 2 by the kernel of l_1")
    t.add_argument("--instance", required=True)
    t.add_argument("--out")

    e = sub.add_parser("example", help="sampled checks of the geometric examples")
    e.add_argument("which", nargs="?", choices=("courant", "symplectic"))
    e.add_argument("--which", dest="which_opt", choices=("courant", "symplectic"))
    e.add_argument("--samples", type=_positive, default=50)
    e.add_argument("--seed", type=_nonneg, default=0)
    e.add_argument("--max-freq", type=_positive, default=2)
    e.add_argument("--report")
    return p


def _read(path) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as err:
        raise UsageError("cannot read %s: %s" % (path, err.strerror))


def _write(path, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as err:
        raise UsageError("cannot write %s: %s" % (path, err.strerror))


def _emit(args, report: dict, summary: str, code: int) -> int:
    report = dict(report, passed=(code == OK))
    _write(getattr(args, "report", None), io.dumps(report))
    print(summary, file=sys.stderr)
    return code


def _load_instance(path):
    return io.load_instance(_read(path))


def cmd_gen(args) -> int:
    if args.kind == "lie-ideal":
        inst = PRESETS[args.preset]()
        what = "preset %s" % args.preset
    else:
        try:
            inst = gen_random_acyclic(GenSeed(args.seed, args.dims, args.height))
        except SpecInvalid as err:
            raise UsageError("--dims: %s" % err)
        what = "random seed %d dims %s" % (args.seed, ",".join(map(str, args.dims)))
    _write(args.out, io.dumps(io.instance_to_json(inst)))
    print("generated %s, dims %r" % (what, tuple(inst.complex.dims)), file=sys.stderr)
    return OK


def cmd_check(args) -> int:
    inst = _load_instance(args.instance)
    h = homology(inst.complex)
    cond = check_conditions(inst, h)
    report = {"conditions": cond.to_json(), "homology_dims": list(h.h_dims)}
    if not h.acyclic:
        report["contraction"] = None
        n = next(k for k, d in enumerate(h.h_dims) if k > 0 and d)
        report["witness"] = {"homology_degree": n, "dimension": h.h_dims[n]}
        return _emit(args, report, "FAIL: H_%d is nonzero" % n, FAILED)
    k = build_contraction(inst.complex, h)
    kr = verify_contraction(inst.complex, k)
    report["contraction"] = kr.to_json()
    if not cond.passed:
        name = cond.failed()[0]
        wit = (cond.witnesses_i if name == "i" else cond.witnesses_ii)[0]
        report["witness"] = dict(wit, condition=name)
        return _emit(args, report, "FAIL: condition (%s), witness %s"
                     % (name, json.dumps(wit, sort_keys=True)), FAILED)
    if not kr.passed:
        report["witness"] = kr.first_failure
        return _emit(args, report, "FAIL: contraction identity at %r" % kr.first_failure, FAILED)
    return _emit(args, report, "ok: conditions hold, contraction verified on %d basis vectors"
                 % kr.checked, OK)


def cmd_build(args) -> int:
    inst = _load_instance(args.instance)
    h = homology(inst.complex)
    cond = check_conditions(inst, h)
    if not cond.passed:
        name = cond.failed()[0]
        wit = (cond.witnesses_i if name == "i" else cond.witnesses_ii)[0]
        return _emit(args, {"conditions": cond.to_json(), "witness": dict(wit, condition=name)},
                     "FAIL: condition (%s) does not hold" % name, FAILED)
    if not h.acyclic:
        n = next(k for k, d in enumerate(h.h_dims) if k > 0 and d)
        return _emit(args, {"conditions": cond.to_json(),
                            "witness": {"homology_degree": n, "dimension": h.h_dims[n]}},
                     "FAIL: H_%d is nonzero" % n, FAILED)
    k = build_contraction(inst.complex, h)
    try:
        structure, report = extend(inst, k, args.max_arity, h=h, conditions=cond)
    except BoundaryClaimViolated as err:
        wit = {"arity": err.arity, "multidegree": list(err.multidegree),
               "args": [list(a) for a in err.witness], "value": [fstr(x) for x in err.value]}
        return _emit(args, {"conditions": cond.to_json(), "witness": wit},
                     "FAIL: boundary claim violated at %r" % (wit,), FAILED)
    report.theorem2 = verify_theorem2(structure)
    if args.out:
        _write(args.out, io.dumps(io.structure_to_json(structure)))
    out = report.to_json()
    t2 = report.theorem2
    for w in t2.warnings:
        print("warning: " + w, file=sys.stderr)
    if not report.passed:
        wit = (t2.vanishing_witnesses or t2.defect_witnesses or [None])[0]
        out["witness"] = wit
        return _emit(args, out, "FAIL: built structure fails verification at %r" % (wit,), FAILED)
    return _emit(args, out, "ok: built l_1..l_%d, %d lemma checks passed"
                 % (args.max_arity, len(report.lemma_checks)), OK)


def cmd_verify(args) -> int:
    structure = io.load_structure(_read(args.structure))
    t2 = verify_theorem2(structure)
    out = t2.to_json()
    out["max_arity"] = structure.max_arity
    l3 = structure[3].nonzero_multidegrees() if structure.max_arity >= 3 else []
    out["l3_nonzero_degree0"] = (0, 0, 0) in l3
    for w in t2.warnings:
        print("warning: " + w, file=sys.stderr)
    if not t2.passed:
        wit = (t2.vanishing_witnesses or t2.defect_witnesses)[0]
        out["witness"] = wit
        return _emit(args, out, "FAIL: %r" % (wit,), FAILED)
    return _emit(args, out, "ok: vanishing claims hold, relations 1..%d vanish on %d tuples"
                 % (structure.max_arity, sum(t2.tuples_checked.values())), OK)


def cmd_truncate(args) -> int:
    inst = _load_instance(args.instance)
    try:
        new = truncate(inst)
    except ValueError as err:
        raise UsageError(str(err))
    _write(args.out, io.dumps(io.instance_to_json(new)))
    print("truncated to dims %r" % (tuple(new.complex.dims),), file=sys.stderr)
    return OK


def cmd_example(args) -> int:
    from .geometry.verify import verify_example_structures

    which = args.which or args.which_opt
    if which is None:
        raise UsageError("example: name courant or symplectic")
    if args.which and args.which_opt and args.which != args.which_opt:
        raise UsageError("example: positional %r conflicts with --which %r"
                         % (args.which, args.which_opt))
    rep = verify_example_structures(which, args.samples, args.seed, args.max_freq)
    out = rep.to_json()
    total = sum(c["passed"] + c["failed"] for c in rep.checks.values())
    if not rep.passed:
        name, entry = sorted(rep.failures().items())[0]
        out["witness"] = dict(entry["witnesses"][0], check=name)
        return _emit(args, out, "FAIL: %s at sample %d" % (name, entry["witnesses"][0]["sample"]),
                     FAILED)
    return _emit(args, out, "ok: %s, %d exact checks over %d samples" % (which, total, args.samples),
                 OK)


COMMANDS = {"gen": cmd_gen, "check": cmd_check, "build": cmd_build, "verify": cmd_verify,
            "truncate": cmd_truncate, "example": cmd_example}


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as err:
        print("shlie: error: %s" % err, file=sys.stderr)
        return USAGE
    except io.SchemaError as err:
        print("shlie: invalid input: %s" % err, file=sys.stderr)
        return USAGE
    except ValueError as err:
        print("shlie: invalid input: %s" % err, file=sys.stderr)
        return USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
