"""Command-line interface.

Subcommands: ``check`` (verify premises, or a certificate against an
instance), ``solve`` (search for a certificate), ``translate`` (map an
instance to the other form), ``identity`` (compare the two routes to the
lcm-degree sequence of a chain pair), ``gen`` (emit a seeded random
instance) and ``repro-counterexample`` (run the weighted splitting variant
on the instance that falsifies it).

Exit codes, mutually exclusive:

* 0: success (verified, found, translated, identity holds, reproduced);
* 1: verification failed or nothing found;
* 2: malformed input;
* 3: node budget exceeded;
* 4: contradiction tripwire: a premise-satisfying instance with no
  solution, which the existence theorem rules out.  A bug-report artifact
  is written next to the working directory.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import jsonio
from .errors import ConclusionViolation, InputError, MajorchainError, PremiseViolation
from .generator import GeneratorConfig, InstanceGenerator
from .instances import (
    check_lemma_conclusion,
    check_lemma_premise,
    check_theorem_conclusion,
    check_theorem_premises,
    lemma_to_theorem,
    theorem_to_lemma,
)
from .partitions import Partition
from .chains import sigma_degree_sequence, sigma_identity_rhs
from .solve import (
    ABORTED,
    DEFAULT_BUDGET,
    FOUND,
    NO_SOLUTION,
    solve_lemma,
    solve_scaled_k1,
    solve_theorem,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_CONTRADICTION = 4


def _read_json(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}", path="") from exc
    return jsonio.load_json(text)


def _emit(obj) -> None:
    sys.stdout.write(jsonio.dumps(obj))


def _cmd_check(args) -> int:
    data = _read_json(args.instance)
    if args.mode == "lemma":
        inst = jsonio.parse_lemma_instance(data)
        if args.certificate is None:
            checks = check_lemma_premise(inst)
        else:
            certificate = jsonio.parse_f_certificate(_read_json(args.certificate))
            checks = check_lemma_conclusion(inst, certificate)
    else:
        inst = jsonio.parse_theorem_instance(data)
        if args.certificate is None:
            checks = check_theorem_premises(inst)
        else:
            certificate = jsonio.parse_beta_certificate(_read_json(args.certificate))
            checks = check_theorem_conclusion(inst, certificate)
    verified = all(check.holds is True for check in checks)
    _emit({"verified": verified, "checks": jsonio.transcript_to_obj(checks)})
    return EXIT_OK if verified else EXIT_FAILED


def _cmd_solve(args) -> int:
    data = _read_json(args.instance)
    if args.mode == "lemma":
        inst = jsonio.parse_lemma_instance(data)
        if args.weight is not None:
            if inst.k != 1:
                raise InputError(
                    f"the weighted solver handles exactly one pair, got {inst.k}",
                    path="$.pairs",
                )
            d, t = inst.pairs[0]
            report = solve_scaled_k1(
                d, t, inst.A, inst.B, args.weight, budget=args.budget, workers=args.workers
            )
            _emit(jsonio.solve_report_to_obj(report))
            if report.outcome == ABORTED:
                return EXIT_BUDGET
            return EXIT_OK if report.outcome == FOUND else EXIT_FAILED
        premise = inst.premise_holds
        report = solve_lemma(inst, budget=args.budget, workers=args.workers)
        _emit(jsonio.solve_report_to_obj(report))
        if report.outcome == ABORTED:
            return EXIT_BUDGET
        if report.outcome == FOUND:
            return EXIT_OK
        if premise:
            artifact = jsonio.write_contradiction_report(inst, report, args.report_dir)
            sys.stderr.write(
                "contradiction: the premise holds but no splitting exists; "
                f"report written to {artifact}\n"
            )
            return EXIT_CONTRADICTION
        return EXIT_FAILED
    inst = jsonio.parse_theorem_instance(data)
    premise_checks = check_theorem_premises(inst)
    if not all(check.holds is True for check in premise_checks):
        _emit(
            {
                "error": "premises do not hold",
                "checks": jsonio.transcript_to_obj(premise_checks),
            }
        )
        return EXIT_FAILED
    report = solve_theorem(inst, budget=args.budget, workers=args.workers)
    _emit(jsonio.solve_report_to_obj(report))
    if report.outcome == ABORTED:
        return EXIT_BUDGET
    if report.outcome == FOUND:
        return EXIT_OK
    translated = theorem_to_lemma(inst)
    artifact = jsonio.write_contradiction_report(
        translated, report, args.report_dir
    )
    sys.stderr.write(
        "contradiction: the premises hold but no middle chain exists; "
        f"report written to {artifact}\n"
    )
    return EXIT_CONTRADICTION


def _cmd_translate(args) -> int:
    data = _read_json(args.instance)
    if args.mode == "theorem":
        inst = jsonio.parse_theorem_instance(data)
        translated = theorem_to_lemma(inst)
        _emit(jsonio.lemma_instance_to_obj(translated))
    else:
        inst = jsonio.parse_lemma_instance(data)
        translated = lemma_to_theorem(inst)
        _emit(jsonio.theorem_instance_to_obj(translated))
    return EXIT_OK


def _cmd_identity(args) -> int:
    data = _read_json(args.instance)
    if not isinstance(data, dict) or "delta" not in data or "epsilon" not in data:
        raise InputError("expected an object with 'delta' and 'epsilon' chains", path="$")
    delta = jsonio.parse_chain(data["delta"], "$.delta")
    epsilon = jsonio.parse_chain(data["epsilon"], "$.epsilon")
    y = epsilon.length - delta.length
    if y < 0:
        raise InputError(
            "the epsilon chain must be at least as long as the delta chain", path="$"
        )
    lhs = sigma_degree_sequence(delta, epsilon, y)
    rhs = sigma_identity_rhs(delta, epsilon, y)
    _emit(
        {
            "degree_sequence": jsonio.partition_to_obj(lhs),
            "factor_local_form": jsonio.partition_to_obj(rhs),
            "match": lhs == rhs,
        }
    )
    return EXIT_OK if lhs == rhs else EXIT_FAILED


def _cmd_gen(args) -> int:
    config = GeneratorConfig(
        seed=args.seed,
        k=args.k,
        s=args.s,
        max_part=args.max_part,
        max_transfer_steps=args.transfers,
        mode=args.mode,
        use_rejection=args.rejection,
    )
    generator = InstanceGenerator(config)
    if args.mode == "theorem":
        _emit(jsonio.theorem_instance_to_obj(generator.theorem_instance()))
    else:
        _emit(jsonio.lemma_instance_to_obj(generator.lemma_instance()))
    return EXIT_OK


def _cmd_repro_counterexample(args) -> int:
    d = Partition((1, 1))
    t = Partition()
    A = Partition((1, 1))
    B = Partition((1, 1))
    report = solve_scaled_k1(d, t, A, B, w=2, budget=args.budget)
    _emit(jsonio.solve_report_to_obj(report))
    if report.outcome == ABORTED:
        return EXIT_BUDGET
    return EXIT_OK if report.outcome == NO_SOLUTION else EXIT_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="majorchain",
        description="Verify, solve, translate and generate chain-completion "
        "and partition-splitting instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mode(p):
        p.add_argument(
            "--mode",
            choices=("lemma", "theorem"),
            required=True,
            help="which instance form the input file holds",
        )

    p_check = sub.add_parser("check", help="verify premises, or a certificate")
    p_check.add_argument("--instance", required=True, metavar="FILE")
    p_check.add_argument("--certificate", metavar="FILE")
    add_mode(p_check)
    p_check.set_defaults(handler=_cmd_check)

    p_solve = sub.add_parser("solve", help="search for a certificate")
    p_solve.add_argument("--instance", required=True, metavar="FILE")
    add_mode(p_solve)
    p_solve.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="N")
    p_solve.add_argument("--workers", type=int, default=1, metavar="N")
    p_solve.add_argument(
        "--weight",
        type=int,
        metavar="W",
        help="scale the gaps by W (single-pair lemma instances only)",
    )
    p_solve.add_argument("--report-dir", default=".", metavar="DIR")
    p_solve.set_defaults(handler=_cmd_solve)

    p_translate = sub.add_parser("translate", help="map an instance to the other form")
    p_translate.add_argument("--instance", required=True, metavar="FILE")
    add_mode(p_translate)
    p_translate.set_defaults(handler=_cmd_translate)

    p_identity = sub.add_parser(
        "identity", help="compare both routes to the lcm-degree sequence"
    )
    p_identity.add_argument("--instance", required=True, metavar="FILE")
    p_identity.set_defaults(handler=_cmd_identity)

    p_gen = sub.add_parser("gen", help="emit a seeded random instance")
    p_gen.add_argument("--seed", type=int, required=True, metavar="N")
    p_gen.add_argument(
        "--mode", choices=("lemma", "theorem"), default="lemma", metavar="MODE"
    )
    p_gen.add_argument("--k", type=int, default=2)
    p_gen.add_argument("--s", type=int, default=3)
    p_gen.add_argument("--max-part", type=int, default=3, dest="max_part")
    p_gen.add_argument("--transfers", type=int, default=4)
    p_gen.add_argument("--rejection", action="store_true")
    p_gen.set_defaults(handler=_cmd_gen)

    p_repro = sub.add_parser(
        "repro-counterexample",
        help="run the weighted splitting variant on the instance that falsifies it",
    )
    p_repro.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="N")
    p_repro.set_defaults(handler=_cmd_repro_counterexample)

    return parser


def cli_dispatch(argv=None) -> int:
    """Parse arguments, run the subcommand, and return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage, matching the input-error code.
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.handler(args)
    except InputError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except (PremiseViolation, ConclusionViolation) as exc:
        sys.stderr.write(f"verification failed: {exc}\n")
        return EXIT_FAILED
    except MajorchainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(cli_dispatch())


if __name__ == "__main__":
    main()
