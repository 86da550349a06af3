"""Command-line front end.

Exit codes: 0 ok, 1 usage, 2 parse error, 3 capacity exceeded, 4 a check
found a failure (postulate suite or solver disagreement), 5 solver error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import change, merge
from .canonical import canonical_dlp, canonical_glp
from .encodings import (
    DIALECTS,
    TASKS,
    CrosscheckPreconditionError,
    SolverError,
    bound_directive,
    crosscheck,
    emit_meta,
    relational_facts,
)
from .postulates import REVISION_OPERATORS, SUITES, run_suite, summarize
from .semantics import (
    MAX_ATOMS,
    CapacityError,
    IncompleteError,
    ModelSet,
    NotWellDefinedError,
    SEModelSet,
    answer_sets,
    classical_models,
    entails_s,
    read_se,
    render_se,
    se_models,
    se_to_json,
    strongly_equivalent,
)
from .syntax import AlphabetError, BeliefProfile, ParseError, check_atom, effective_alphabet, read_program, render_program

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_CAPACITY, EXIT_CHECK, EXIT_SOLVER = range(6)


class UsageError(Exception):
    pass


class InputFormatError(Exception):
    """A model-set file could not be read."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _alphabet_arg(text: str) -> tuple[str, ...]:
    atoms = tuple(a.strip() for a in text.split(",") if a.strip())
    try:
        return tuple(check_atom(a) for a in atoms)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", type=_alphabet_arg, help="comma-separated atoms; default: atoms of the inputs")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-atoms", type=_positive, default=MAX_ATOMS, help="refuse larger alphabets (default 14)")

    parser = _Parser(prog="lpchange", description="Belief change for logic programs via SE models.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    for verb, text in (("mod", "classical models"), ("se", "SE models"), ("as", "answer sets")):
        p = sub.add_parser(verb, parents=[common], help=f"list the {text} of a program")
        p.add_argument("file")
    for verb, text in (("equiv", "strong equivalence"), ("entails", "SE-model containment of FILE1 in FILE2")):
        p = sub.add_parser(verb, parents=[common], help=f"test {text}")
        p.add_argument("file1")
        p.add_argument("file2")

    p = sub.add_parser("expand", parents=[common], help="expansion P + Q")
    p.add_argument("p")
    p.add_argument("q")
    p = sub.add_parser("revise", parents=[common], help="revision of P by Q")
    p.add_argument("p")
    p.add_argument("q")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--weak", action="store_true", help="weak subset-based revision")
    kind.add_argument("--card", action="store_true", help="cardinality-based revision")

    p = sub.add_parser("arbitrate", parents=[common], help="arbitration of a profile")
    p.add_argument("files", nargs="+")
    p = sub.add_parser("merge", parents=[common], help="basic merging under a constraints program")
    p.add_argument("--constraints", required=True, metavar="FILE")
    p.add_argument("files", nargs="+")

    p = sub.add_parser("canonical", parents=[common], help="program realizing an SE-model set")
    p.add_argument("--from-se", required=True, metavar="FILE", dest="from_se")
    p.add_argument("--dlp", action="store_true", help="disjunctive program (needs a complete set)")

    p = sub.add_parser("check-postulates", help="run a seeded postulate suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--op", choices=REVISION_OPERATORS, default="revise")
    p.add_argument("--trials", type=_positive, default=100)
    p.add_argument("--atoms", type=int, choices=range(1, 7), default=3, metavar="{1..6}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--members", type=int, default=0, help="profile size for the ic suite (default: random 2-3)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("emit", help="print the meta-program for a task, plus facts for any input files")
    p.add_argument("--task", choices=tuple(TASKS), required=True)
    p.add_argument("--dialect", choices=DIALECTS, default="dlv")
    p.add_argument("files", nargs="*")

    p = sub.add_parser("crosscheck", parents=[common], help="compare an external solver with the native engine")
    p.add_argument("--task", choices=tuple(TASKS), required=True)
    p.add_argument("--solver-cmd", help="command template with a {files} placeholder")
    p.add_argument("--dialect", choices=DIALECTS)
    p.add_argument("--timeout", type=float, default=60.0)
    p.add_argument("files", nargs="+")
    return parser


# --- output --------------------------------------------------------------------------


def _dump(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


def _models_out(ms: ModelSet, fmt: str) -> str:
    if fmt == "json":
        return _dump({"alphabet": list(ms.alphabet.atoms), "models": [sorted(m) for m in ms.named()]})
    return str(ms) + ("\n" if len(ms) else "")


def _se_out(se: SEModelSet, fmt: str) -> str:
    if fmt == "json":
        return _dump({"alphabet": list(se.alphabet.atoms), "se_models": se_to_json(se)})
    return render_se(se)


def _result_out(se: SEModelSet, program_text: str, fmt: str, dropped: Sequence[str] = ()) -> str:
    if fmt == "json":
        return _dump({"alphabet": list(se.alphabet.atoms), "se_models": se_to_json(se), "program": program_text})
    out = ["% SE models\n", render_se(se)]
    if dropped:
        out.append("% dropped unsatisfiable inputs: " + ", ".join(dropped) + "\n")
    out += ["% program\n", program_text]
    return "".join(out)


# --- verbs -------------------------------------------------------------------------


def _run(args) -> tuple[int, str]:
    verb = args.verb
    if verb in ("mod", "se", "as"):
        prog = read_program(args.file)
        if verb == "se":
            return EXIT_OK, _se_out(se_models(prog, _alpha(args, [prog]), args.max_atoms), args.format)
        fn = classical_models if verb == "mod" else answer_sets
        return EXIT_OK, _models_out(fn(prog, _alpha(args, [prog]), args.max_atoms), args.format)

    if verb in ("equiv", "entails"):
        p, q = read_program(args.file1), read_program(args.file2)
        fn = strongly_equivalent if verb == "equiv" else entails_s
        value = fn(p, q, args.alphabet, args.max_atoms)
        if args.format == "json":
            return EXIT_OK, _dump({"alphabet": list(effective_alphabet([p, q], args.alphabet).atoms), "result": value})
        return EXIT_OK, f"{str(value).lower()}\n"

    if verb in ("expand", "revise"):
        p, q = read_program(args.p), read_program(args.q)
        op = "expand"
        if verb == "revise":
            op = "revise_weak" if args.weak else "revise_card" if args.card else "revise"
        res = change.apply(op, p, q, args.alphabet, args.max_atoms)
        return EXIT_OK, _result_out(res.se, str(res.program), args.format)

    if verb in ("arbitrate", "merge"):
        names = list(args.files) if verb == "arbitrate" else [args.constraints] + list(args.files)
        programs = [read_program(f) for f in names]
        if verb == "arbitrate":
            res = merge.arbitrate(programs, args.alphabet, args.max_atoms)
        else:
            res = merge.merge_basic(BeliefProfile(programs, has_constraints=True), args.alphabet, args.max_atoms)
        return EXIT_OK, _result_out(res.se, str(res.program), args.format, [names[i] for i in res.dropped])

    if verb == "canonical":
        try:
            se = read_se(args.from_se, args.alphabet)
        except (NotWellDefinedError, IncompleteError, AlphabetError):
            raise
        except ValueError as exc:
            raise InputFormatError(str(exc)) from None
        if args.max_atoms is not None and len(se.alphabet) > args.max_atoms:
            raise CapacityError(f"alphabet has {len(se.alphabet)} atoms, above the cap of {args.max_atoms}")
        cp = canonical_dlp(se) if args.dlp else canonical_glp(se)
        if args.format == "json":
            return EXIT_OK, _dump({"alphabet": list(se.alphabet.atoms), "se_models": se_to_json(se), "program": str(cp)})
        return EXIT_OK, render_program(cp.program)

    if verb == "check-postulates":
        reports = run_suite(args.suite, args.trials, args.seed, args.atoms, args.op, args.members)
        summary = summarize(reports)
        failed = [r for r in reports if not r.ok]
        code = EXIT_CHECK if failed else EXIT_OK
        if args.format == "json":
            data = {
                "suite": args.suite,
                "op": args.op,
                "seed": args.seed,
                "trials": args.trials,
                "atoms": args.atoms,
                "summary": summary,
                "failures": [r.to_dict() for r in failed],
            }
            return code, _dump(data)
        lines = [f"% suite {args.suite}, op {args.op}, seed {args.seed}, {args.trials} trials, {args.atoms} atoms"]
        for name, counts in summary.items():
            lines.append(f"{name}: pass {counts['pass']}, fail {counts['fail']}, n/a {counts['n/a']}")
        for r in failed[:3]:
            lines.append(f"% trial {r.trial} fails {', '.join(r.failures())}")
            for label, text in r.programs.items():
                lines.append(f"%   {label}: " + " ".join(text.splitlines()))
        return code, "\n".join(lines) + "\n"

    if verb == "emit":
        meta = emit_meta(args.task, args.dialect)
        out = meta.text
        if args.files:
            programs = [read_program(f) for f in args.files]
            facts = relational_facts(programs, start=0 if args.task == "basic-merge" else 1)
            out += "\n% facts\n" + bound_directive(facts, args.dialect) + facts.text()
        return EXIT_OK, out

    if verb == "crosscheck":
        programs = [read_program(f) for f in args.files]
        if args.alphabet is not None:
            raise UsageError("crosscheck always works over the atoms occurring in the inputs")
        rep = crosscheck(programs, args.task, args.solver_cmd, args.dialect, args.timeout, max_atoms=args.max_atoms)
        if args.format == "json":
            data = {
                "task": rep.task,
                "equal": rep.equal,
                "answer_sets": rep.answer_sets,
                "alphabet": list(rep.native_se.alphabet.atoms),
                "native": se_to_json(rep.native_se),
                "solver": se_to_json(rep.solver_se),
            }
            return (EXIT_OK if rep.equal else EXIT_CHECK), _dump(data)
        return (EXIT_OK if rep.equal else EXIT_CHECK), rep.describe() + "\n"

    raise UsageError(f"unknown verb {verb!r}")


def _alpha(args, programs):
    return effective_alphabet(programs, args.alphabet)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits on --help and on usage errors; report those as return codes
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        code, out = _run(args)
    except (ParseError, InputFormatError) as exc:
        return _fail(EXIT_PARSE, f"parse error: {exc}")
    except (NotWellDefinedError, IncompleteError) as exc:
        return _fail(EXIT_PARSE, f"input is not a valid SE-model set for this construction: {exc}")
    except CapacityError as exc:
        return _fail(EXIT_CAPACITY, f"capacity exceeded: {exc}")
    except SolverError as exc:
        return _fail(EXIT_SOLVER, f"solver error: {exc}")
    except (UsageError, AlphabetError, CrosscheckPreconditionError, ValueError) as exc:
        return _fail(EXIT_USAGE, f"error: {exc}")
    except OSError as exc:
        return _fail(EXIT_USAGE, f"cannot read input: {exc}")
    sys.stdout.write(out)
    return code


def _fail(code: int, message: str) -> int:
    print(f"lpchange: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
