"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Exhaustive grids are enumerated in full; randomized parts use fixed seeds.
Every expected value is either produced by an independent oracle in this
file (or helpers) or checked against the package's own verifiers, which the
unit suite validates against hand-computed cases.
"""

import random
import time
from itertools import combinations_with_replacement

from majorchain import (
    FOUND,
    NO_SOLUTION,
    FCertificate,
    Factor,
    GeneratorConfig,
    InstanceGenerator,
    LemmaInstance,
    Partition,
    PolyChain,
    TheoremInstance,
    beta_to_f,
    dual,
    f_to_beta,
    lemma_to_theorem,
    majorizes,
    plus,
    sigma_degree_sequence,
    sigma_identity_rhs,
    solve_lemma,
    solve_scaled_k1,
    solve_theorem,
    solve_theorem_direct,
    theorem_to_lemma,
    union,
    verify_lemma_conclusion,
    verify_theorem_conclusion,
    verify_theorem_premises,
    weight,
)
from majorchain.jsonio import dumps, solve_report_to_obj

from helpers import random_interlaced_pair, unit_transfer


def report(number, label, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[criterion {number}] {status} {label}{suffix}")
    assert ok, f"criterion {number} {label}{suffix}"


def sample_partition(rng, max_len=12, max_part=20):
    length = rng.randint(0, max_len)
    return Partition(sorted((rng.randint(0, max_part) for _ in range(length)), reverse=True))


def test_criterion_1_partition_algebra():
    rng = random.Random(20260808)
    rounds = 10_000
    failures = 0
    start = time.perf_counter()
    for _ in range(rounds):
        a = sample_partition(rng)
        b = sample_partition(rng)
        if dual(dual(a)) != a:
            failures += 1
        if dual(union(a, b)) != plus(dual(a), dual(b)):
            failures += 1
        if majorizes(a, b) != majorizes(dual(b), dual(a)):
            failures += 1
        middle = unit_transfer(rng, a)
        low = unit_transfer(rng, middle)
        if not (majorizes(middle, a) and majorizes(low, middle) and majorizes(low, a)):
            failures += 1
    elapsed = time.perf_counter() - start
    report(
        1,
        "partition algebra laws on 10,000 random partitions",
        failures == 0 and elapsed < 5.0,
        f"{failures} failures, {elapsed:.2f}s",
    )


def _interlaced_vector_pairs(x, y, max_exp):
    """All per-factor (inner, outer) exponent vector pairs, sandwiched."""
    evecs = []

    def grow_outer(acc):
        if len(acc) == x + y:
            evecs.append(tuple(acc))
            return
        for value in range(acc[-1] if acc else 0, max_exp + 1):
            acc.append(value)
            grow_outer(acc)
            acc.pop()

    grow_outer([])
    result = []
    for evec in evecs:
        def grow_inner(acc):
            if len(acc) == x:
                result.append((tuple(acc), evec))
                return
            i = len(acc)
            lo = max(evec[i], acc[-1] if acc else 0)
            for value in range(lo, evec[i + y] + 1):
                acc.append(value)
                grow_inner(acc)
                acc.pop()

        grow_inner([])
    return result


def test_criterion_2_degree_sequence_identity():
    checked = 0
    failures = 0

    def check(rows, y):
        nonlocal checked, failures
        x = len(rows[0][1])
        factors = [Factor(f"q{i + 1}", degree) for i, (degree, _, _) in enumerate(rows)]
        delta = PolyChain(x, {f: dv for f, (_, dv, _) in zip(factors, rows)})
        epsilon = PolyChain(x + y, {f: ev for f, (_, _, ev) in zip(factors, rows)})
        checked += 1
        if sigma_degree_sequence(delta, epsilon, y) != sigma_identity_rhs(delta, epsilon, y):
            failures += 1

    # Exhaustive grid: chain lengths at most 4, gaps at most 3, exponents at
    # most 3, one or two factors, degrees 1 (plain) and up to 3 (weighted).
    for y in range(4):
        for x in range(5 - y):
            vector_pairs = _interlaced_vector_pairs(x, y, 3)
            weighted = [
                (degree, dv, ev)
                for degree in (1, 2, 3)
                for dv, ev in vector_pairs
            ]
            for degree, dv, ev in weighted:
                check(((degree, dv, ev),), y)
            for row_a, row_b in combinations_with_replacement(weighted, 2):
                check((row_a, row_b), y)

    # Randomized larger pairs.
    rng = random.Random(4711)
    for _ in range(1000):
        x, y = rng.randint(0, 6), rng.randint(0, 4)
        delta, epsilon = random_interlaced_pair(
            rng, k=rng.randint(1, 3), x=x, y=y, max_exp=5, max_degree=3
        )
        checked += 1
        if sigma_degree_sequence(delta, epsilon, y) != sigma_identity_rhs(delta, epsilon, y):
            failures += 1

    report(
        2,
        "degree-sequence identity on the exhaustive grid and random pairs",
        failures == 0,
        f"{checked} pairs checked, {failures} failures",
    )


def test_criterion_3_translation_transport():
    failures = []
    for seed in range(1000):
        generator = InstanceGenerator(
            GeneratorConfig(seed=seed, k=2, s=3, max_part=3, mode="theorem")
        )
        source = generator.lemma_instance()
        inst = lemma_to_theorem(source)
        if not verify_theorem_premises(inst):
            failures.append((seed, "premises"))
            continue
        translated = theorem_to_lemma(inst)
        if not translated.premise_holds:
            failures.append((seed, "translated premise"))
            continue
        if translated.A[0] != inst.m or translated.B[0] != inst.p:
            failures.append((seed, "A1/B1"))
            continue
        if not translated.equivalent(source):
            failures.append((seed, "round trip"))
            continue
        solved = solve_lemma(translated)
        if solved.outcome != FOUND:
            failures.append((seed, "no splitting"))
            continue
        beta = f_to_beta(inst, solved.certificate)
        if not verify_theorem_conclusion(inst, beta):
            failures.append((seed, "transported certificate"))
            continue
        if beta_to_f(inst, beta) != solved.certificate:
            failures.append((seed, "transport inverse"))
            continue
        # Verifier agreement also on a candidate that need not verify.
        probe = FCertificate(tuple(t for _, t in translated.pairs))
        lemma_verdict = verify_lemma_conclusion(translated, probe)
        theorem_verdict = verify_theorem_conclusion(inst, f_to_beta(inst, probe))
        if lemma_verdict != theorem_verdict:
            failures.append((seed, "verdict agreement"))
    report(
        3,
        "translation and certificate transport on 1,000 generated instances",
        not failures,
        f"failures: {failures[:5]}" if failures else "1000/1000",
    )


def _partitions_up_to(max_len, max_part):
    out = [Partition()]

    def rec(prefix, remaining, cap):
        if remaining == 0:
            return
        for value in range(1, cap + 1):
            out.append(Partition(prefix + [value]))
            rec(prefix + [value], remaining - 1, value)

    rec([], max_len, max_part)
    return out


def _sub_partitions(d):
    res = []

    def rec(j, prev, acc):
        if j == len(d.parts):
            res.append(Partition(acc))
            return
        for value in range(0, min(d.parts[j], prev) + 1):
            acc.append(value)
            rec(j + 1, value, acc)
            acc.pop()

    rec(0, 10**9, [])
    return res


def test_criterion_4_splitting_completeness_tripwire():
    shapes = _partitions_up_to(3, 3)
    pairs = [(d, t) for d in shapes for t in _sub_partitions(d)]
    bounds_by_weight = {}
    for A in shapes:
        for B in shapes:
            bounds_by_weight.setdefault(weight(A) + weight(B), []).append(
                (A, B, plus(A, B))
            )

    start = time.perf_counter()
    solved = 0
    contradictions = []

    def attack(pair_list):
        nonlocal solved
        pooled = Partition()
        for d, t in pair_list:
            pooled = union(pooled, diff_sorted_cached(d, t))
        total = weight(pooled)
        if total > 8:
            return
        for A, B, bound in bounds_by_weight.get(total, ()):
            if not majorizes(pooled, bound):
                continue
            inst = LemmaInstance(tuple(pair_list), A, B)
            outcome = solve_lemma(inst).outcome
            solved += 1
            if outcome != FOUND:
                contradictions.append((pair_list, A, B, outcome))

    from majorchain import diff_sorted

    diff_cache = {}

    def diff_sorted_cached(d, t):
        key = (d.parts, t.parts)
        if key not in diff_cache:
            diff_cache[key] = diff_sorted(d, t)
        return diff_cache[key]

    for pair in pairs:
        attack([pair])
    for combo in combinations_with_replacement(pairs, 2):
        attack(list(combo))
    elapsed = time.perf_counter() - start

    report(
        4,
        "every premise-satisfying grid instance splits",
        not contradictions and elapsed < 120.0,
        f"{solved} instances, {len(contradictions)} contradictions, {elapsed:.1f}s",
    )


def test_criterion_5_weighted_variant_counterexample():
    # Doubling the gaps breaks the splitting statement: the premise holds
    # with equality, yet every candidate f pools a doubled gap of 2 under
    # parts of size 1 on one side or the other.
    data = (Partition([1, 1]), Partition(), Partition([1, 1]), Partition([1, 1]))
    doubled = solve_scaled_k1(data[0], data[1], data[2], data[3], w=2)
    premise = majorizes(
        Partition([2, 2]), plus(data[2], data[3])
    )  # doubled gaps against A+B
    ok = premise and doubled.outcome == NO_SOLUTION
    report(
        "5a",
        "doubled gaps: premise holds yet no splitting exists",
        ok,
        f"outcome {doubled.outcome}",
    )


def test_criterion_5_unweighted_verdict_on_the_same_data():
    # Recorded expectation: weight 1 on the same data reports a splitting.
    # That cannot happen under equal-total dominance: the gaps sum to 2
    # while the two targets demand 2 on each side (4 in total), so both
    # sides can never balance; see the passing contrast regression in
    # test_solve.py, which restores the premise with A=(1), B=(1).
    plain = solve_scaled_k1(
        Partition([1, 1]), Partition(), Partition([1, 1]), Partition([1, 1]), w=1
    )
    report(
        "5b",
        "unit weight on the same data reports a splitting",
        plain.outcome == FOUND,
        f"outcome {plain.outcome}",
    )


def _index_partitions(length, max_part):
    res = []

    def rec(acc, cap):
        if len(acc) == length:
            res.append(tuple(acc))
            return
        for value in range(1, cap + 1):
            acc.append(value)
            rec(acc, value)
            acc.pop()

    if length == 0:
        return [()]
    rec([], max_part)
    return res


def test_criterion_6_solver_oracle_agreement():
    start = time.perf_counter()
    solved = 0
    disagreements = []
    bad_certificates = []
    for n in range(3):
        for m in range(3):
            for p in range(3):
                y = m + p
                vector_pairs = _interlaced_vector_pairs(n, y, 2)
                singles = [(row,) for row in vector_pairs]
                doubles = combinations_with_replacement(vector_pairs, 2)
                for rows in [*singles, *doubles]:
                    factors = [Factor(f"q{i + 1}") for i in range(len(rows))]
                    alpha = PolyChain(n, {f: dv for f, (dv, _) in zip(factors, rows)})
                    gamma = PolyChain(n + y, {f: ev for f, (_, ev) in zip(factors, rows)})
                    degrees = sigma_degree_sequence(alpha, gamma, y)
                    total = weight(degrees)
                    cap = degrees[0] if degrees else 0
                    for u in _index_partitions(m, cap):
                        left = sum(u)
                        if left > total:
                            continue
                        for v in _index_partitions(p, cap):
                            if left + sum(v) != total:
                                continue
                            if not majorizes(union(Partition(u), Partition(v)), degrees):
                                continue
                            inst = TheoremInstance(
                                alpha,
                                gamma,
                                Partition([i - 1 for i in u]),
                                Partition([i - 1 for i in v]),
                                m=m,
                                p=p,
                            )
                            translated = solve_theorem(inst)
                            direct = solve_theorem_direct(inst)
                            solved += 1
                            if translated.outcome != direct.outcome:
                                disagreements.append(inst)
                                continue
                            if translated.outcome == FOUND:
                                if not (
                                    verify_theorem_conclusion(inst, translated.certificate)
                                    and verify_theorem_conclusion(inst, direct.certificate)
                                ):
                                    bad_certificates.append(inst)
                            else:
                                disagreements.append(inst)  # existence must hold here
    elapsed = time.perf_counter() - start
    report(
        6,
        "translated and direct searches agree on the theorem grid",
        not disagreements and not bad_certificates,
        f"{solved} instances, {len(disagreements)} disagreements, "
        f"{len(bad_certificates)} bad certificates, {elapsed:.1f}s",
    )


def test_criterion_7_determinism():
    mismatches = []
    for seed in range(25):
        inst = InstanceGenerator(
            GeneratorConfig(seed=seed, k=2, s=3, max_part=3)
        ).lemma_instance()
        first = solve_lemma(inst, workers=1)
        again = solve_lemma(inst, workers=1)
        fanned = solve_lemma(inst, workers=4)
        if not (first == again == fanned):
            mismatches.append(("lemma", seed))
        if dumps(solve_report_to_obj(first)) != dumps(solve_report_to_obj(fanned)):
            mismatches.append(("lemma json", seed))
    for seed in range(10):
        inst = InstanceGenerator(
            GeneratorConfig(seed=seed, k=2, s=2, max_part=2, mode="theorem")
        ).theorem_instance()
        first = solve_theorem(inst, workers=1)
        fanned = solve_theorem(inst, workers=3)
        direct_first = solve_theorem_direct(inst, workers=1)
        direct_fanned = solve_theorem_direct(inst, workers=3)
        if first != fanned or direct_first != direct_fanned:
            mismatches.append(("theorem", seed))
    # Aborted searches must replay identically too.
    squeeze = LemmaInstance(
        ((Partition([3, 2, 1]), Partition()), (Partition([3, 2, 1]), Partition())),
        Partition([3, 3]),
        Partition([3, 3]),
    )
    for budget in (0, 1, 7, 23, 1000):
        if solve_lemma(squeeze, budget=budget, workers=1) != solve_lemma(
            squeeze, budget=budget, workers=4
        ):
            mismatches.append(("abort", budget))
    report(
        7,
        "solver reports identical across reruns and worker counts",
        not mismatches,
        f"mismatches: {mismatches}" if mismatches else "all identical",
    )
