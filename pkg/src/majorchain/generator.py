"""Deterministic random instances whose premises hold by construction.

The default sampler never rejects: it draws A and B, pools them, loosens the
pooled partition with unit transfers (each moves one box from a larger part
to a strictly smaller one, which preserves the total and can only lower
prefix sums, so the result stays majorized by the original), splits the
loosened parts into per-pair gap groups, and adds each group onto a sampled
base t^i to make d^i.  The pooled gaps of the resulting instance are then
exactly the loosened partition, so the premise holds with no checking
needed, and with zero transfer steps it holds with equality.

A plain rejection sampler is kept behind a flag for comparing the shapes of
the two distributions.

Identical configurations produce identical instance streams.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .instances import LemmaInstance, TheoremInstance, lemma_to_theorem
from .partitions import Partition, plus

_REJECTION_ATTEMPTS = 100_000


@dataclass(frozen=True)
class GeneratorConfig:
    """Knobs of the instance sampler.

    ``k`` pairs of padded length up to ``s`` with parts up to ``max_part``;
    up to ``max_transfer_steps`` unit transfers loosen the premise from
    equality.  ``mode`` picks the emitted form: "lemma" or "theorem".
    """

    seed: int
    k: int = 2
    s: int = 3
    max_part: int = 3
    max_transfer_steps: int = 4
    mode: str = "lemma"
    use_rejection: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.s < 1:
            raise ValueError(f"s must be >= 1, got {self.s}")
        if self.max_part < 0:
            raise ValueError(f"max_part must be >= 0, got {self.max_part}")
        if self.max_transfer_steps < 0:
            raise ValueError(
                f"max_transfer_steps must be >= 0, got {self.max_transfer_steps}"
            )
        if self.mode not in ("lemma", "theorem"):
            raise ValueError(f"mode must be 'lemma' or 'theorem', got {self.mode!r}")


def _sample_partition(rng: random.Random, max_len: int, max_part: int) -> Partition:
    length = rng.randint(0, max_len)
    return Partition(sorted((rng.randint(0, max_part) for _ in range(length)), reverse=True))


def _transfer_step(rng: random.Random, parts: list[int], max_slots: int) -> list[int]:
    """One unit moved from a larger part to a strictly smaller one.

    The target may be a fresh zero slot as long as the number of nonzero
    parts stays within ``max_slots`` (so the parts remain groupable).
    Returns the re-sorted parts; unchanged when no move is possible.
    """
    slots = list(parts)
    can_extend = len(slots) < max_slots
    moves = []
    for u, source in enumerate(slots):
        for v, target in enumerate(slots):
            if source > target:
                moves.append((u, v))
        if can_extend and source > 1:
            # Target a fresh zero slot; the part count grows by one.
            moves.append((u, len(slots)))
    if not moves:
        return slots
    u, v = rng.choice(moves)
    slots[u] -= 1
    if v == len(slots):
        slots.append(1)
    else:
        slots[v] += 1
    slots.sort(reverse=True)
    while slots and slots[-1] == 0:
        slots.pop()
    return slots


class InstanceGenerator:
    """Seeded stream of premise-satisfying instances."""

    def __init__(self, config: GeneratorConfig):
        self.config = config
        self._rng = random.Random(config.seed)

    def lemma_instance(self) -> LemmaInstance:
        if self.config.use_rejection:
            return self._lemma_by_rejection()
        return self._lemma_by_construction()

    def theorem_instance(self) -> TheoremInstance:
        return lemma_to_theorem(self.lemma_instance())

    def instance(self) -> LemmaInstance | TheoremInstance:
        if self.config.mode == "theorem":
            return self.theorem_instance()
        return self.lemma_instance()

    def _lemma_by_construction(self) -> LemmaInstance:
        rng = self._rng
        cfg = self.config
        A = _sample_partition(rng, cfg.s, cfg.max_part)
        B = _sample_partition(rng, cfg.s, cfg.max_part)
        pooled = list(plus(A, B).parts)
        for _ in range(rng.randint(0, cfg.max_transfer_steps)):
            pooled = _transfer_step(rng, pooled, cfg.k * cfg.s)
        groups: list[list[int]] = [[] for _ in range(cfg.k)]
        order = list(pooled)
        rng.shuffle(order)
        for part in order:
            open_groups = [g for g in groups if len(g) < cfg.s]
            rng.choice(open_groups).append(part)
        pairs = []
        for group in groups:
            group.sort(reverse=True)
            t = _sample_partition(rng, cfg.s, cfg.max_part)
            d = plus(t, Partition(group))
            pairs.append((d, t))
        return LemmaInstance(tuple(pairs), A, B)

    def _lemma_by_rejection(self) -> LemmaInstance:
        rng = self._rng
        cfg = self.config
        for _ in range(_REJECTION_ATTEMPTS):
            pairs = []
            for _ in range(cfg.k):
                t = _sample_partition(rng, cfg.s, cfg.max_part)
                gap = _sample_partition(rng, cfg.s, cfg.max_part)
                pairs.append((plus(t, gap), t))
            candidate = LemmaInstance(
                tuple(pairs),
                _sample_partition(rng, cfg.s, cfg.max_part),
                _sample_partition(rng, cfg.s, cfg.max_part),
            )
            if candidate.premise_holds:
                return candidate
        raise RuntimeError("rejection sampling found no premise-satisfying instance")


def generate_lemma_instance(config: GeneratorConfig) -> LemmaInstance:
    """First lemma instance of the stream for this configuration."""
    return InstanceGenerator(config).lemma_instance()


def generate_theorem_instance(config: GeneratorConfig) -> TheoremInstance:
    """First theorem instance of the stream for this configuration."""
    return InstanceGenerator(config).theorem_instance()
