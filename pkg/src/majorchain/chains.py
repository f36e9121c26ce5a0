"""Divisibility chains of homogeneous polynomials, kept as factor exponents.

A chain of length L is a sequence p_1 | p_2 | ... | p_L of homogeneous
polynomials in two variables.  Nothing matters here beyond which irreducible
factors divide each entry and to what power, so a :class:`PolyChain` stores
one exponent vector per :class:`Factor` and no coefficients at all.
Divisibility of entries becomes "each exponent vector is non-decreasing",
lcm becomes a componentwise max, and the degree of an entry is the
degree-weighted sum of its exponents.

Position conventions, used by every function below:

* positions 1..L hold the stored exponents;
* positions <= 0 read as the constant polynomial 1 (exponent 0 everywhere);
* positions >= L+1 stand for the zero polynomial, whose degree is infinite.
  Reading an exponent there raises :class:`IndexOutOfRange`: the quantities
  computed in this module are index-safe whenever their preconditions hold,
  so such a read is a caller bug, not a value.

Reading a factor's exponents from position L down to position 1 yields a
partition (the elementary-divisor partition of that factor), which is how
chains and partitions are converted into each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    IndexOutOfRange,
    InterlaceViolation,
    LengthMismatch,
    LengthOverflow,
    NotAPartition,
)
from .partitions import Partition, as_partition, diff_sorted, dual, plus, scaled


@dataclass(frozen=True, order=True)
class Factor:
    """An irreducible factor: an opaque label plus its polynomial degree."""

    label: str
    degree: int = 1

    def __post_init__(self):
        if not isinstance(self.label, str) or not self.label:
            raise ValueError("factor label must be a nonempty string")
        if isinstance(self.degree, bool) or not isinstance(self.degree, int):
            raise ValueError("factor degree must be an integer")
        if self.degree < 1:
            raise ValueError(f"factor degree must be >= 1, got {self.degree}")


class PolyChain:
    """Immutable chain: a length and one exponent vector per factor.

    The constructor checks shapes (vector lengths, nonnegative entries,
    unique labels) but not the divisibility invariant; use
    :func:`chain_validate` for that, so that candidate chains read from
    files can be checked rather than rejected at construction.
    """

    __slots__ = ("_length", "_rows")

    def __init__(
        self,
        length: int,
        exponents: Mapping[Factor, Sequence[int]] | Iterable[tuple[Factor, Sequence[int]]] = (),
    ):
        if isinstance(length, bool) or not isinstance(length, int) or length < 0:
            raise ValueError(f"chain length must be a nonnegative integer, got {length!r}")
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        rows = []
        labels = set()
        for factor, vector in items:
            if not isinstance(factor, Factor):
                raise ValueError(f"expected a Factor, got {factor!r}")
            if factor.label in labels:
                raise ValueError(f"duplicate factor label {factor.label!r}")
            labels.add(factor.label)
            vec = tuple(vector)
            if len(vec) != length:
                raise LengthMismatch(
                    f"factor {factor.label!r}: {len(vec)} exponents for a length-{length} chain"
                )
            for pos, e in enumerate(vec):
                if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                    raise ValueError(
                        f"factor {factor.label!r}: exponent at position {pos + 1} "
                        f"must be a nonnegative integer, got {e!r}"
                    )
            rows.append((factor, vec))
        rows.sort(key=lambda row: row[0].label)
        self._length = length
        self._rows = tuple(rows)

    @property
    def length(self) -> int:
        return self._length

    @property
    def factors(self) -> tuple[Factor, ...]:
        """The factors, sorted by label. This order is the canonical one."""
        return tuple(factor for factor, _ in self._rows)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(factor.label for factor, _ in self._rows)

    def degree_of(self, label: str) -> int | None:
        for factor, _ in self._rows:
            if factor.label == label:
                return factor.degree
        return None

    def exponent_vector(self, label: str) -> tuple[int, ...]:
        """Exponents at positions 1..L; all zeros for an absent factor."""
        for factor, vec in self._rows:
            if factor.label == label:
                return vec
        return (0,) * self._length

    def exponent(self, label: str, position: int) -> int:
        """Exponent of ``label`` at a 1-based ``position``.

        Positions <= 0 read 0 (the constant 1); positions past the end
        raise, since they stand for the zero polynomial.
        """
        if position > self._length:
            raise IndexOutOfRange(
                f"position {position} of a length-{self._length} chain is the "
                "zero polynomial (infinite degree)"
            )
        if position <= 0:
            return 0
        return self.exponent_vector(label)[position - 1]

    def factor_partition(self, label: str) -> Partition:
        """The factor's exponents read from the last position down to the first."""
        vec = self.exponent_vector(label)
        try:
            return Partition(reversed(vec))
        except NotAPartition as exc:
            raise NotAPartition(
                f"factor {label!r}: exponents are not non-decreasing ({exc})"
            ) from exc

    @classmethod
    def from_partitions(
        cls, length: int, assignments: Mapping[Factor, "Partition | Sequence[int]"]
    ) -> "PolyChain":
        """Build the chain whose factor partitions are the given ones.

        Part j of a factor's partition becomes its exponent at position
        length+1-j.  A partition with more parts than the chain has
        positions cannot be embedded and raises :class:`LengthOverflow`.
        """
        exponents = {}
        for factor, given in assignments.items():
            partition = as_partition(given)
            if len(partition) > length:
                raise LengthOverflow(
                    f"factor {factor.label!r}: partition with {len(partition)} parts "
                    f"does not fit a length-{length} chain"
                )
            exponents[factor] = tuple(partition[length - i] for i in range(1, length + 1))
        return cls(length, exponents)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyChain):
            return self._length == other._length and self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._length, self._rows))

    def __repr__(self) -> str:
        table = ", ".join(f"{factor.label}:{list(vec)}" for factor, vec in self._rows)
        return f"PolyChain(length={self._length}, {{{table}}})"


def chain_validate(chain: PolyChain) -> bool:
    """True iff every factor's exponent vector is non-decreasing.

    That is exactly the condition for each chain entry to divide the next.
    """
    for label in chain.labels:
        vec = chain.exponent_vector(label)
        if any(vec[i] > vec[i + 1] for i in range(len(vec) - 1)):
            return False
    return True


def _merged_labels(delta: PolyChain, epsilon: PolyChain) -> list[str]:
    seen = dict.fromkeys(epsilon.labels)
    seen.update(dict.fromkeys(delta.labels))
    return sorted(seen)


def _merged_degrees(delta: PolyChain, epsilon: PolyChain) -> dict[str, int]:
    degrees: dict[str, int] = {}
    for chain in (epsilon, delta):
        for factor in chain.factors:
            known = degrees.get(factor.label)
            if known is not None and known != factor.degree:
                raise ValueError(
                    f"factor {factor.label!r} has degree {factor.degree} in one "
                    f"chain and {known} in the other"
                )
            degrees[factor.label] = factor.degree
    return degrees


def interlace_check(delta: PolyChain, epsilon: PolyChain, y: int) -> bool:
    """Divisibility sandwich between a chain and one longer by ``y``.

    True iff for every factor and every position i = 1..len(delta) the
    exponents satisfy  epsilon(i) <= delta(i) <= epsilon(i+y), i.e. each
    epsilon entry divides the matching delta entry, which divides the
    epsilon entry y further along.
    """
    if isinstance(y, bool) or not isinstance(y, int) or y < 0:
        raise LengthMismatch(f"gap must be a nonnegative integer, got {y!r}")
    if epsilon.length != delta.length + y:
        raise LengthMismatch(
            f"expected the outer chain to have length {delta.length} + {y}, "
            f"got {epsilon.length}"
        )
    for label in _merged_labels(delta, epsilon):
        dvec = delta.exponent_vector(label)
        evec = epsilon.exponent_vector(label)
        for i in range(delta.length):
            if not evec[i] <= dvec[i] <= evec[i + y]:
                return False
    return True


def pi_degree(i: int, delta: PolyChain, epsilon: PolyChain) -> int:
    """Degree of the i-th lcm product of the pair.

    The product runs over positions j = 1..len(delta)+i of
    lcm(delta entry j-i, epsilon entry j); on exponents the lcm is a
    componentwise max and the degree a degree-weighted sum.  Requires the
    sandwich (:func:`interlace_check`) to hold and 0 <= i <= y; every index
    touched is then in range, so the result is always finite.
    """
    y = epsilon.length - delta.length
    if y < 0:
        raise LengthMismatch(
            f"outer chain (length {epsilon.length}) is shorter than the inner "
            f"one (length {delta.length})"
        )
    if isinstance(i, bool) or not isinstance(i, int) or i < 0 or i > y:
        raise IndexOutOfRange(f"shift {i!r} outside 0..{y}")
    degrees = _merged_degrees(delta, epsilon)
    total = 0
    x = delta.length
    for label, degree in degrees.items():
        dvec = delta.exponent_vector(label)
        evec = epsilon.exponent_vector(label)
        for j in range(1, x + i + 1):
            d_exp = dvec[j - i - 1] if j - i >= 1 else 0
            e_exp = evec[j - 1]
            total += degree * (d_exp if d_exp >= e_exp else e_exp)
    return total


def sigma_degree_sequence(delta: PolyChain, epsilon: PolyChain, y: int) -> Partition:
    """Degrees of the successive lcm-product quotients, largest shift first.

    Returns (d_y, d_{y-1}, ..., d_1) where d_i = pi_degree(i) - pi_degree(i-1).
    Under the sandwich precondition this sequence is non-increasing; if it is
    not, a precondition was violated upstream and :class:`NotAPartition` is
    raised.  Calling this on a pair that fails :func:`interlace_check` is an
    error, not a defined value.
    """
    if not interlace_check(delta, epsilon, y):
        raise InterlaceViolation(
            "the divisibility sandwich does not hold; the degree sequence is "
            "undefined for this pair"
        )
    pis = [pi_degree(i, delta, epsilon) for i in range(y + 1)]
    steps = [pis[i] - pis[i - 1] for i in range(y, 0, -1)]
    try:
        return Partition(steps)
    except NotAPartition as exc:
        raise NotAPartition(f"degree increments {steps} are not a partition ({exc})") from exc


def sigma_identity_rhs(delta: PolyChain, epsilon: PolyChain, y: int) -> Partition:
    """The factor-local form of the degree sequence.

    Sums, over all factors, degree(factor) times the conjugate of the sorted
    gap between the conjugated factor partitions of the outer and inner
    chains.  For sandwiched pairs this equals
    :func:`sigma_degree_sequence`; it is computed along a completely
    different route, which is the point of keeping both.
    """
    if epsilon.length != delta.length + y:
        raise LengthMismatch(
            f"expected the outer chain to have length {delta.length} + {y}, "
            f"got {epsilon.length}"
        )
    degrees = _merged_degrees(delta, epsilon)
    total = Partition()
    for label in _merged_labels(delta, epsilon):
        inner = dual(delta.factor_partition(label))
        outer = dual(epsilon.factor_partition(label))
        term = dual(diff_sorted(outer, inner))
        total = plus(total, scaled(term, degrees[label]))
    return total
