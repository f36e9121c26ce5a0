"""Bounded exhaustive searches that certify existence.

Both searches are depth-first over a fixed position order with candidate
values tried in ascending order, so the first complete solution reached is
the lexicographically smallest one (positions concatenated, compared as
integer tuples).  Pruning only ever cuts subtrees that provably contain no
solution, which keeps that property; a NoSolution verdict therefore means
the whole (pruned) space was exhausted.

Work is measured in nodes, one per candidate value tried at a position, so
reports are machine independent.  When the node budget would be exceeded
the search stops with an ``aborted`` outcome and ``nodes`` equal to the
budget.

A search may fan out the subtrees under the first position to parallel
workers.  Subtree results are merged back in the canonical (ascending)
order with node counts summed exactly as the sequential search would have
accumulated them, so outcome, certificate and node count are identical for
any worker count.

Every found certificate is passed through the public verifier before being
reported; a disagreement would be an engine bug and raises RuntimeError.
"""

from __future__ import annotations

import hashlib
from bisect import insort
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .chains import PolyChain
from .errors import NonLinearFactor, PremiseViolation
from .instances import (
    BetaCertificate,
    FCertificate,
    LemmaInstance,
    TheoremInstance,
    f_to_beta,
    theorem_to_lemma,
    verify_theorem_conclusion,
    verify_theorem_premises,
    verify_lemma_conclusion,
)
from .partitions import (
    Partition,
    as_partition,
    diff_sorted,
    majorizes,
    scaled,
    weight,
)

FOUND = "found"
NO_SOLUTION = "none"
ABORTED = "aborted"

DEFAULT_BUDGET = 1_000_000


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one search.

    ``nodes`` counts candidate assignments actually tried; ``space_size``
    is the raw number of value combinations in the unpruned search box,
    recorded so aborted reports still convey how large the task was.
    """

    outcome: str
    certificate: FCertificate | BetaCertificate | None
    nodes: int
    budget: int
    space_size: int

    @property
    def found(self) -> bool:
        return self.outcome == FOUND


class _BudgetHit(Exception):
    pass


def _run(search, budget: int, workers: int, trace=None):
    """Run a search, sequentially or with speculative parallel subtrees."""
    if isinstance(budget, bool) or not isinstance(budget, int) or budget < 0:
        raise ValueError(f"budget must be a nonnegative integer, got {budget!r}")
    if isinstance(workers, bool) or not isinstance(workers, int) or workers < 1:
        raise ValueError(f"workers must be a positive integer, got {workers!r}")
    if search.num_positions == 0:
        solution = search.empty_solution()
        if solution is None:
            return NO_SOLUTION, None, 0
        return FOUND, solution, 0
    roots = search.root_values()
    if workers == 1 or len(roots) <= 1 or trace is not None:
        remaining = budget
        consumed = 0
        for value in roots:
            status, solution, nodes = search.dfs_from(value, remaining, trace)
            consumed += nodes
            if status == "aborted":
                return ABORTED, None, consumed
            if status == "found":
                return FOUND, solution, consumed
            remaining -= nodes
        return NO_SOLUTION, None, consumed
    # Speculative mode: every subtree runs with the full budget, then the
    # results are replayed in canonical order against the real budget, which
    # reproduces the sequential report exactly.
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(search.dfs_from, value, budget, None) for value in roots]
        results = [future.result() for future in futures]
    remaining = budget
    consumed = 0
    for status, solution, nodes in results:
        if status == "aborted" or nodes > remaining:
            return ABORTED, None, budget
        if status == "found":
            return FOUND, solution, consumed + nodes
        consumed += nodes
        remaining -= nodes
    return NO_SOLUTION, None, consumed


class _SplitSearch:
    """DFS over candidate splittings f^i with t^i <= f^i <= d^i.

    Constraints checked incrementally, with ``w`` scaling every gap:
    the scaled lower gaps must pool to exactly |A| without any sorted
    prefix exceeding A's, and symmetrically for the upper gaps and B.
    Bounds on each candidate value come from the remaining mass on both
    sides; subtrees whose remaining positions cannot close the mass gap
    are cut.
    """

    def __init__(self, pairs, A: Partition, B: Partition, w: int):
        self.w = w
        self.pair_data = []
        for d, t in pairs:
            d, t = as_partition(d), as_partition(t)
            length = len(d)
            self.pair_data.append((d.pad(length), t.pad(length)))
        self.positions = [
            (i, j)
            for i, (d, _) in enumerate(self.pair_data)
            for j in range(len(d))
        ]
        self.num_positions = len(self.positions)
        gap_totals = [
            sum(dv - tv for dv, tv in zip(d, t)) for d, t in self.pair_data
        ]
        self.after_pair = [
            sum(gap_totals[i + 1 :]) for i in range(len(self.pair_data))
        ]
        # Gaps available strictly after each position, ignoring caps.
        self.rest_after = []
        for i, (d, t) in enumerate(self.pair_data):
            for j in range(len(d)):
                tail = sum(d[u] - t[u] for u in range(j + 1, len(d)))
                self.rest_after.append(tail + self.after_pair[i])
        self.total_a = weight(A)
        self.total_b = weight(B)
        self.pre_a = self._prefix_sums(A)
        self.pre_b = self._prefix_sums(B)
        size = 1
        for i, j in self.positions:
            d, t = self.pair_data[i]
            size *= d[j] - t[j] + 1
        self.space_size = size

    @staticmethod
    def _prefix_sums(partition: Partition) -> list[int]:
        sums = []
        run = 0
        for part in partition.parts:
            run += part
            sums.append(run)
        return sums

    def _solution_from(self, assigned) -> tuple[Partition, ...]:
        return tuple(Partition(values) for values in assigned)

    def empty_solution(self):
        if self.total_a == 0 and self.total_b == 0:
            return tuple(Partition() for _ in self.pair_data)
        return None

    def root_values(self) -> range:
        i, j = self.positions[0]
        d, t = self.pair_data[i]
        lo, hi = self._value_bounds(d, t, j, d[j], 0, 0)
        return range(lo, hi + 1)

    def _value_bounds(self, d, t, j, cap_prev, ca, cb):
        w = self.w
        hi = d[j] if d[j] < cap_prev else cap_prev
        allow_a = (self.total_a - w * ca) // w
        if t[j] + allow_a < hi:
            hi = t[j] + allow_a
        lo = t[j]
        allow_b = (self.total_b - w * cb) // w
        if d[j] - allow_b > lo:
            lo = d[j] - allow_b
        return lo, hi

    def dfs_from(self, first_value: int, cap: int, trace=None):
        w = self.w
        positions = self.positions
        pair_data = self.pair_data
        rest_after = self.rest_after
        after_pair = self.after_pair
        total_a, total_b = self.total_a, self.total_b
        pre_a, pre_b = self.pre_a, self.pre_b
        len_a, len_b = len(pre_a), len(pre_b)

        assigned = [list(t) for _, t in pair_data]
        lower_gaps: list[int] = []  # committed scaled gaps, ascending
        upper_gaps: list[int] = []
        nodes = 0

        def prefix_ok(values, pre, length, total) -> bool:
            run = 0
            rank = 0
            for value in reversed(values):
                run += value
                rank += 1
                if run > (pre[rank - 1] if rank <= length else total):
                    return False
            return True

        def descend(pos_idx: int, ca: int, cb: int, forced: int | None) -> bool:
            nonlocal nodes
            if pos_idx == self.num_positions:
                return w * ca == total_a and w * cb == total_b
            i, j = positions[pos_idx]
            d, t = pair_data[i]
            cap_prev = assigned[i][j - 1] if j else d[j]
            lo, hi = self._value_bounds(d, t, j, cap_prev, ca, cb)
            if forced is not None:
                if forced < lo or forced > hi:
                    return False
                lo = hi = forced
            rest = rest_after[pos_idx]
            for value in range(lo, hi + 1):
                if nodes >= cap:
                    raise _BudgetHit
                nodes += 1
                if trace is not None:
                    trace.update(b"%d:%d;" % (pos_idx, value))
                gap_lower = value - t[j]
                gap_upper = d[j] - value
                ca2 = ca + gap_lower
                cb2 = cb + gap_upper
                if w * (cb2 + rest) < total_b:
                    break  # larger values shrink the upper side further
                gain = 0
                for u in range(j + 1, len(d)):
                    top = d[u] if d[u] < value else value
                    gain += top - t[u]
                if w * (ca2 + gain + after_pair[i]) < total_a:
                    continue  # larger values can still reach the lower total
                scaled_lower = w * gap_lower
                scaled_upper = w * gap_upper
                if gap_lower:
                    insort(lower_gaps, scaled_lower)
                    if not prefix_ok(lower_gaps, pre_a, len_a, total_a):
                        lower_gaps.remove(scaled_lower)
                        break  # larger values make this prefix worse
                if gap_upper:
                    insort(upper_gaps, scaled_upper)
                    if not prefix_ok(upper_gaps, pre_b, len_b, total_b):
                        upper_gaps.remove(scaled_upper)
                        if gap_lower:
                            lower_gaps.remove(scaled_lower)
                        continue  # larger values shrink this gap
                assigned[i][j] = value
                if descend(pos_idx + 1, ca2, cb2, None):
                    return True
                if gap_lower:
                    lower_gaps.remove(scaled_lower)
                if gap_upper:
                    upper_gaps.remove(scaled_upper)
            return False

        try:
            if descend(0, 0, 0, first_value):
                return "found", self._solution_from(assigned), nodes
            return "exhausted", None, nodes
        except _BudgetHit:
            return "aborted", None, nodes


class _ChainSearch:
    """DFS over candidate middle chains inside the outer chain's bounds.

    Candidate exponents at each position range over the window allowed by
    the outer chain (condition: the chain must sit between gamma shifted by
    0 and by p), narrowed by the inner chain's sandwich and by the already
    chosen previous exponent of the same factor.  Every complete candidate
    is checked with the full conclusion verifier.
    """

    def __init__(self, inst: TheoremInstance):
        self.inst = inst
        self.factors = inst.factors
        n, m, p = inst.n, inst.m, inst.p
        self.chain_length = n + m
        self.positions = [
            (fi, q)
            for fi in range(len(self.factors))
            for q in range(1, self.chain_length + 1)
        ]
        self.num_positions = len(self.positions)
        self.bounds = []
        size = 1
        for fi, q in self.positions:
            label = self.factors[fi].label
            gamma_lo = inst.gamma.exponent(label, q)
            gamma_hi = inst.gamma.exponent(label, q + p)
            alpha_lo = inst.alpha.exponent(label, q - m) if q - m >= 1 else 0
            alpha_hi = inst.alpha.exponent(label, q) if q <= n else None
            lo = max(gamma_lo, alpha_lo)
            hi = gamma_hi if alpha_hi is None or gamma_hi <= alpha_hi else alpha_hi
            self.bounds.append((lo, hi))
            size *= max(gamma_hi - gamma_lo + 1, 0)
        self.space_size = size

    def _certificate_from(self, assigned) -> BetaCertificate:
        chain = PolyChain(
            self.chain_length,
            {factor: tuple(vec) for factor, vec in zip(self.factors, assigned)},
        )
        return BetaCertificate(chain)

    def empty_solution(self):
        certificate = self._certificate_from(
            [[] for _ in self.factors] if self.factors else []
        )
        if verify_theorem_conclusion(self.inst, certificate):
            return certificate
        return None

    def root_values(self) -> range:
        lo, hi = self.bounds[0]
        return range(lo, hi + 1)

    def dfs_from(self, first_value: int, cap: int, trace=None):
        positions = self.positions
        bounds = self.bounds
        assigned = [[0] * self.chain_length for _ in self.factors]
        nodes = 0

        def descend(pos_idx: int, forced: int | None) -> bool:
            nonlocal nodes
            if pos_idx == self.num_positions:
                return verify_theorem_conclusion(
                    self.inst, self._certificate_from(assigned)
                )
            fi, q = positions[pos_idx]
            lo, hi = bounds[pos_idx]
            if q >= 2 and assigned[fi][q - 2] > lo:
                lo = assigned[fi][q - 2]
            if forced is not None:
                if forced < lo or forced > hi:
                    return False
                lo = hi = forced
            for value in range(lo, hi + 1):
                if nodes >= cap:
                    raise _BudgetHit
                nodes += 1
                if trace is not None:
                    trace.update(b"%d:%d;" % (pos_idx, value))
                assigned[fi][q - 1] = value
                if descend(pos_idx + 1, None):
                    return True
            return False

        try:
            if descend(0, first_value):
                return "found", self._certificate_from(assigned), nodes
            return "exhausted", None, nodes
        except _BudgetHit:
            return "aborted", None, nodes


def solve_lemma(
    inst: LemmaInstance,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    trace=None,
) -> SolveReport:
    """Search for a splitting certificate of a partition-splitting instance.

    Runs whether or not the instance's premise holds; a NoSolution verdict
    on a premise-satisfying instance is significant (the existence statement
    says it cannot happen), which callers should treat as a tripwire.
    """
    search = _SplitSearch(inst.pairs, inst.A, inst.B, 1)
    outcome, solution, nodes = _run(search, budget, workers, trace)
    certificate = None
    if outcome == FOUND:
        certificate = FCertificate(solution)
        if not verify_lemma_conclusion(inst, certificate):
            raise RuntimeError("internal error: a found splitting failed verification")
    return SolveReport(outcome, certificate, nodes, budget, search.space_size)


def _scaled_conclusion_holds(d, t, A, B, w, f) -> bool:
    for j in range(max(len(d), len(t), len(f))):
        if not d[j] >= f[j] >= t[j]:
            return False
    return majorizes(scaled(diff_sorted(f, t), w), A) and majorizes(
        scaled(diff_sorted(d, f), w), B
    )


def solve_scaled_k1(
    d,
    t,
    A,
    B,
    w: int,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> SolveReport:
    """Single-pair splitting search with every gap scaled by ``w``.

    Finds f with t <= f <= d such that w*(f-t) pools under A and w*(d-f)
    pools under B.  With w=1 this is exactly the single-pair case of
    :func:`solve_lemma`; with w>=2 it probes the scaled variant of the
    splitting statement, which is not a theorem, so NoSolution is an
    ordinary outcome here rather than a tripwire.
    """
    if isinstance(w, bool) or not isinstance(w, int) or w < 1:
        raise ValueError(f"weight must be a positive integer, got {w!r}")
    d, t = as_partition(d), as_partition(t)
    A, B = as_partition(A), as_partition(B)
    diff_sorted(d, t)  # raises DominanceViolation unless t <= d componentwise
    search = _SplitSearch([(d, t)], A, B, w)
    outcome, solution, nodes = _run(search, budget, workers)
    certificate = None
    if outcome == FOUND:
        certificate = FCertificate(solution)
        if not _scaled_conclusion_holds(d, t, A, B, w, certificate.fs[0]):
            raise RuntimeError("internal error: a found splitting failed verification")
    return SolveReport(outcome, certificate, nodes, budget, search.space_size)


def solve_theorem(
    inst: TheoremInstance,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> SolveReport:
    """Search for a middle chain by translating and splitting.

    Translates the instance, runs :func:`solve_lemma`, and transports the
    found splitting back to a middle chain, which is verified against the
    instance.  Raises PremiseViolation (or NonLinearFactor) when the
    translation is not defined.
    """
    translated = theorem_to_lemma(inst)
    report = solve_lemma(translated, budget, workers)
    if report.outcome != FOUND:
        return SolveReport(report.outcome, None, report.nodes, budget, report.space_size)
    beta = f_to_beta(inst, report.certificate)
    if not verify_theorem_conclusion(inst, beta):
        raise RuntimeError("internal error: transported certificate failed verification")
    return SolveReport(FOUND, beta, report.nodes, budget, report.space_size)


def solve_theorem_direct(
    inst: TheoremInstance,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> SolveReport:
    """Search for a middle chain by direct enumeration.

    Independent cross-check for :func:`solve_theorem`: enumerates candidate
    chains inside the outer chain's exponent bounds and tests the conclusion
    conditions directly, touching none of the translation machinery.  The
    two searches must agree on existence; their certificates may differ.
    """
    for factor in inst.factors:
        if factor.degree != 1:
            raise NonLinearFactor(
                f"factor {factor.label!r} has degree {factor.degree}; the "
                "cross-check covers the degree-1 regime only"
            )
    if not verify_theorem_premises(inst):
        raise PremiseViolation("the chain-completion premises do not hold")
    search = _ChainSearch(inst)
    outcome, certificate, nodes = _run(search, budget, workers)
    return SolveReport(outcome, certificate, nodes, budget, search.space_size)


def search_trace_hash(inst: LemmaInstance, budget: int = DEFAULT_BUDGET) -> str:
    """SHA-256 over the node stream of the sequential splitting search.

    Reruns the (deterministic) search with tracing enabled; used when
    serializing a tripwire report so the exact explored tree is pinned.
    """
    digest = hashlib.sha256()
    solve_lemma(inst, budget=budget, workers=1, trace=digest)
    return digest.hexdigest()
