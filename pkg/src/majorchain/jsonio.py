"""JSON wire formats, with path-precise parse errors.

Formats (all UTF-8 JSON, no comments):

* partition: array of nonnegative integers, non-increasing;
* chain: {"length": L, "factors": [{"label", "degree", "exponents"}]};
* splitting instance: {"pairs": [{"d", "t"}], "A", "B"};
* completion instance: {"alpha", "gamma", "c", "r", "m", "p", "n"};
* certificates: {"fs": [partition]} or {"beta": chain};
* solve report: {"outcome", "certificate", "nodes", "budget", "space_size"};
* transcript: [{"name", "holds", "left", "right", "note"}].

Parsers reject out-of-schema values with an :class:`InputError` whose
message names the JSON path of the offending element.  Parts are capped at
the signed 64-bit maximum: anything larger is a parse error, never a silent
wrap.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .chains import Factor, PolyChain
from .errors import InputError, MajorchainError
from .instances import (
    BetaCertificate,
    ConditionCheck,
    FCertificate,
    LemmaInstance,
    TheoremInstance,
)
from .partitions import Partition
from .solve import ABORTED, FOUND, NO_SOLUTION, SolveReport, search_trace_hash

MAX_PART = 2**63 - 1
MAX_CHAIN_LENGTH = 2**20

_OUTCOMES = (FOUND, NO_SOLUTION, ABORTED)


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            path="",
        ) from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _require_int(value: Any, path: str, minimum: int = 0, maximum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"expected an integer, got {value!r}", path)
    if value < minimum:
        raise InputError(f"{value} is below the minimum {minimum}", path)
    if maximum is not None and value > maximum:
        raise InputError(f"{value} exceeds the maximum {maximum}", path)
    return value


def _require_list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise InputError(f"expected an array, got {type(value).__name__}", path)
    return value


def _require_object(value: Any, path: str, keys: tuple[str, ...]) -> dict:
    if not isinstance(value, dict):
        raise InputError(f"expected an object, got {type(value).__name__}", path)
    for key in keys:
        if key not in value:
            raise InputError(f"missing key {key!r}", path)
    return value


def partition_to_obj(partition: Partition) -> list[int]:
    return list(partition.parts)


def parse_partition(obj: Any, path: str = "$") -> Partition:
    items = _require_list(obj, path)
    previous = None
    for index, value in enumerate(items):
        here = f"{path}[{index}]"
        _require_int(value, here, minimum=0, maximum=MAX_PART)
        if previous is not None and value > previous:
            raise InputError(f"{value} exceeds the previous part {previous}", here)
        previous = value
    return Partition(items)


def chain_to_obj(chain: PolyChain) -> dict:
    return {
        "length": chain.length,
        "factors": [
            {
                "label": factor.label,
                "degree": factor.degree,
                "exponents": list(chain.exponent_vector(factor.label)),
            }
            for factor in chain.factors
        ],
    }


def parse_chain(obj: Any, path: str = "$") -> PolyChain:
    data = _require_object(obj, path, ("length", "factors"))
    length = _require_int(data["length"], f"{path}.length", maximum=MAX_CHAIN_LENGTH)
    rows = {}
    labels = set()
    for index, entry in enumerate(_require_list(data["factors"], f"{path}.factors")):
        here = f"{path}.factors[{index}]"
        record = _require_object(entry, here, ("label", "degree", "exponents"))
        label = record["label"]
        if not isinstance(label, str) or not label:
            raise InputError("label must be a nonempty string", f"{here}.label")
        if label in labels:
            raise InputError(f"duplicate label {label!r}", f"{here}.label")
        labels.add(label)
        degree = _require_int(record["degree"], f"{here}.degree", minimum=1)
        exponents = _require_list(record["exponents"], f"{here}.exponents")
        if len(exponents) != length:
            raise InputError(
                f"{len(exponents)} exponents for a length-{length} chain",
                f"{here}.exponents",
            )
        previous = None
        for pos, value in enumerate(exponents):
            spot = f"{here}.exponents[{pos}]"
            _require_int(value, spot, minimum=0, maximum=MAX_PART)
            if previous is not None and value < previous:
                raise InputError(
                    f"{value} is below the previous exponent {previous}; "
                    "chain entries must divide their successors",
                    spot,
                )
            previous = value
        rows[Factor(label, degree)] = tuple(exponents)
    return PolyChain(length, rows)


def lemma_instance_to_obj(inst: LemmaInstance) -> dict:
    return {
        "pairs": [
            {"d": partition_to_obj(d), "t": partition_to_obj(t)} for d, t in inst.pairs
        ],
        "A": partition_to_obj(inst.A),
        "B": partition_to_obj(inst.B),
    }


def parse_lemma_instance(obj: Any, path: str = "$") -> LemmaInstance:
    data = _require_object(obj, path, ("pairs", "A", "B"))
    pairs = []
    for index, entry in enumerate(_require_list(data["pairs"], f"{path}.pairs")):
        here = f"{path}.pairs[{index}]"
        record = _require_object(entry, here, ("d", "t"))
        pairs.append(
            (parse_partition(record["d"], f"{here}.d"), parse_partition(record["t"], f"{here}.t"))
        )
    A = parse_partition(data["A"], f"{path}.A")
    B = parse_partition(data["B"], f"{path}.B")
    try:
        return LemmaInstance(tuple(pairs), A, B)
    except MajorchainError as exc:
        raise InputError(str(exc), path) from exc


def theorem_instance_to_obj(inst: TheoremInstance) -> dict:
    return {
        "alpha": chain_to_obj(inst.alpha),
        "gamma": chain_to_obj(inst.gamma),
        "c": partition_to_obj(inst.c),
        "r": partition_to_obj(inst.r),
        "m": inst.m,
        "p": inst.p,
        "n": inst.n,
    }


def parse_theorem_instance(obj: Any, path: str = "$") -> TheoremInstance:
    data = _require_object(obj, path, ("alpha", "gamma", "c", "r", "m", "p"))
    alpha = parse_chain(data["alpha"], f"{path}.alpha")
    gamma = parse_chain(data["gamma"], f"{path}.gamma")
    c = parse_partition(data["c"], f"{path}.c")
    r = parse_partition(data["r"], f"{path}.r")
    m = _require_int(data["m"], f"{path}.m")
    p = _require_int(data["p"], f"{path}.p")
    if "n" in data:
        n = _require_int(data["n"], f"{path}.n")
        if n != alpha.length:
            raise InputError(
                f"n={n} disagrees with the inner chain length {alpha.length}",
                f"{path}.n",
            )
    try:
        return TheoremInstance(alpha, gamma, c, r, m=m, p=p)
    except MajorchainError as exc:
        raise InputError(str(exc), path) from exc
    except ValueError as exc:
        raise InputError(str(exc), path) from exc


def f_certificate_to_obj(certificate: FCertificate) -> dict:
    return {"fs": [partition_to_obj(f) for f in certificate.fs]}


def parse_f_certificate(obj: Any, path: str = "$") -> FCertificate:
    data = _require_object(obj, path, ("fs",))
    return FCertificate(
        tuple(
            parse_partition(entry, f"{path}.fs[{index}]")
            for index, entry in enumerate(_require_list(data["fs"], f"{path}.fs"))
        )
    )


def beta_certificate_to_obj(certificate: BetaCertificate) -> dict:
    return {"beta": chain_to_obj(certificate.beta)}


def parse_beta_certificate(obj: Any, path: str = "$") -> BetaCertificate:
    data = _require_object(obj, path, ("beta",))
    return BetaCertificate(parse_chain(data["beta"], f"{path}.beta"))


def certificate_to_obj(certificate: FCertificate | BetaCertificate | None):
    if certificate is None:
        return None
    if isinstance(certificate, FCertificate):
        return f_certificate_to_obj(certificate)
    return beta_certificate_to_obj(certificate)


def parse_certificate(obj: Any, path: str = "$") -> FCertificate | BetaCertificate | None:
    if obj is None:
        return None
    data = _require_object(obj, path, ())
    if "fs" in data:
        return parse_f_certificate(data, path)
    if "beta" in data:
        return parse_beta_certificate(data, path)
    raise InputError("expected a certificate with 'fs' or 'beta'", path)


def solve_report_to_obj(report: SolveReport) -> dict:
    return {
        "outcome": report.outcome,
        "certificate": certificate_to_obj(report.certificate),
        "nodes": report.nodes,
        "budget": report.budget,
        "space_size": report.space_size,
    }


def parse_solve_report(obj: Any, path: str = "$") -> SolveReport:
    data = _require_object(obj, path, ("outcome", "certificate", "nodes", "budget"))
    outcome = data["outcome"]
    if outcome not in _OUTCOMES:
        raise InputError(f"outcome must be one of {_OUTCOMES}", f"{path}.outcome")
    return SolveReport(
        outcome,
        parse_certificate(data["certificate"], f"{path}.certificate"),
        _require_int(data["nodes"], f"{path}.nodes"),
        _require_int(data["budget"], f"{path}.budget"),
        _require_int(data.get("space_size", 0), f"{path}.space_size"),
    )


def _compared_to_obj(value: Any):
    if value is None:
        return None
    if isinstance(value, Partition):
        return partition_to_obj(value)
    if isinstance(value, PolyChain):
        return chain_to_obj(value)
    if isinstance(value, tuple):
        return [_compared_to_obj(item) for item in value]
    return value


def transcript_to_obj(checks: list[ConditionCheck]) -> list[dict]:
    return [
        {
            "name": check.name,
            "holds": check.holds,
            "left": _compared_to_obj(check.left),
            "right": _compared_to_obj(check.right),
            "note": check.note,
        }
        for check in checks
    ]


def write_contradiction_report(
    inst: LemmaInstance, report: SolveReport, directory: str | Path = "."
) -> Path:
    """Serialize a premise-satisfying NoSolution as a bug-report artifact.

    That verdict contradicts the existence statement the solver certifies,
    so it is recorded with the instance and a hash of the full search trace
    for reproduction.  Returns the path written.
    """
    trace = search_trace_hash(inst, budget=report.budget)
    payload = {
        "instance": lemma_instance_to_obj(inst),
        "report": solve_report_to_obj(report),
        "trace_sha256": trace,
    }
    target = Path(directory) / f"contradiction-{trace[:16]}.json"
    target.write_text(dumps(payload), encoding="utf-8")
    return target
