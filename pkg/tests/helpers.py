"""Shared sampling helpers and independent oracles for the test suite.

The oracles here recompute expected values along routes that do not share
code with the package: counting definitions for the partition operations,
explicit polynomial products for the chain degrees, and plain enumeration
for the solvers.
"""

from __future__ import annotations

import random
from itertools import product

from majorchain import (
    FCertificate,
    Factor,
    Partition,
    PolyChain,
    verify_lemma_conclusion,
)


def random_partition(rng: random.Random, max_len: int, max_part: int) -> Partition:
    length = rng.randint(0, max_len)
    return Partition(sorted((rng.randint(0, max_part) for _ in range(length)), reverse=True))


def unit_transfer(rng: random.Random, partition: Partition) -> Partition:
    """Move one box from a larger part to a strictly smaller (or new) slot."""
    parts = list(partition.parts)
    moves = [
        (u, v)
        for u in range(len(parts))
        for v in range(len(parts))
        if parts[u] > parts[v]
    ]
    moves += [(u, len(parts)) for u in range(len(parts)) if parts[u] > 0]
    if not moves:
        return partition
    u, v = rng.choice(moves)
    parts[u] -= 1
    if v == len(parts):
        parts.append(1)
    else:
        parts[v] += 1
    return Partition(sorted(parts, reverse=True))


def random_interlaced_pair(
    rng: random.Random,
    k: int,
    x: int,
    y: int,
    max_exp: int,
    max_degree: int = 1,
) -> tuple[PolyChain, PolyChain]:
    """A sandwiched chain pair: epsilon(i) <= delta(i) <= epsilon(i+y)."""
    delta_rows = {}
    epsilon_rows = {}
    for index in range(k):
        factor = Factor(f"q{index + 1}", rng.randint(1, max_degree))
        evec = sorted(rng.randint(0, max_exp) for _ in range(x + y))
        dvec = []
        prev = 0
        for i in range(x):
            lo = max(evec[i], prev)
            hi = evec[i + y]
            value = rng.randint(lo, hi)
            dvec.append(value)
            prev = value
        delta_rows[factor] = tuple(dvec)
        epsilon_rows[factor] = tuple(evec)
    return PolyChain(x, delta_rows), PolyChain(x + y, epsilon_rows)


def dual_by_counting(partition: Partition) -> tuple[int, ...]:
    """Conjugate by the counting definition: entry i is #{j : part_j >= i}."""
    first = partition[0] if partition else 0
    return tuple(
        sum(1 for part in partition.parts if part >= i) for i in range(1, first + 1)
    )


def pi_degree_by_products(i: int, delta: PolyChain, epsilon: PolyChain) -> int:
    """Degree of the i-th lcm product, multiplied out factor by factor."""
    labels = sorted(set(delta.labels) | set(epsilon.labels))
    degrees = {}
    for chain in (delta, epsilon):
        for factor in chain.factors:
            degrees[factor.label] = factor.degree
    exponents = dict.fromkeys(labels, 0)
    x = delta.length
    for j in range(1, x + i + 1):
        for label in labels:
            dvec = delta.exponent_vector(label)
            evec = epsilon.exponent_vector(label)
            d_exp = dvec[j - i - 1] if 1 <= j - i <= x else 0
            e_exp = evec[j - 1]
            exponents[label] += max(d_exp, e_exp)
    return sum(degrees[label] * exponents[label] for label in labels)


def all_splitting_candidates(pairs):
    """Every f list with t <= f <= d, each non-increasing, in lex order."""

    def pair_options(d: Partition, t: Partition):
        length = len(d)
        options = []

        def extend(j: int, prev: int, acc: list[int]):
            if j == length:
                options.append(tuple(acc))
                return
            for value in range(t[j], min(d[j], prev) + 1):
                acc.append(value)
                extend(j + 1, value, acc)
                acc.pop()

        extend(0, 10**9, [])
        return options

    per_pair = [pair_options(d, t) for d, t in pairs]
    for combo in product(*per_pair):
        yield tuple(Partition(values) for values in combo)


def oracle_lemma_solutions(inst):
    """All verified splitting certificates, ordered by concatenated tuple."""
    solutions = []
    for fs in all_splitting_candidates(inst.pairs):
        certificate = FCertificate(fs)
        if verify_lemma_conclusion(inst, certificate):
            key = tuple(
                value
                for f, (d, _) in zip(fs, inst.pairs)
                for value in f.pad(len(d))
            )
            solutions.append((key, certificate))
    solutions.sort(key=lambda item: item[0])
    return [certificate for _, certificate in solutions]


def oracle_scaled_solutions(d, t, A, B, w):
    """All verified weighted splittings for one pair, in lex order."""
    from majorchain import diff_sorted, majorizes, scaled

    solutions = []
    for (f,) in all_splitting_candidates([(d, t)]):
        in_bounds = all(d[j] >= f[j] >= t[j] for j in range(max(len(d), len(f))))
        if not in_bounds:
            continue
        if majorizes(scaled(diff_sorted(f, t), w), A) and majorizes(
            scaled(diff_sorted(d, f), w), B
        ):
            solutions.append(f)
    solutions.sort(key=lambda f: f.pad(len(d)))
    return solutions
