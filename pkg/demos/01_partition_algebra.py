"""Partition values and the exact algebra on them.

Partitions are non-increasing tuples of nonnegative integers, equal up to
trailing zeros.  Everything below is exact integer arithmetic.
"""

from majorchain import Partition, diff_sorted, dual, majorizes, plus, union, weight

a = Partition([3, 1])
b = Partition([2, 2])

print("a =", a.parts, " b =", b.parts)
print("|a| =", weight(a))

# Conjugation transposes the Young diagram.
print("dual(a) =", dual(a).parts)
print("dual(dual(a)) == a:", dual(dual(a)) == a)

# Union pools parts; sum adds slotwise.  Conjugation swaps the two.
print("a u b =", union(a, b).parts)
print("a + b =", plus(a, b).parts)
print("dual(a u b) =", dual(union(a, b)).parts)
print("dual(a) + dual(b) =", plus(dual(a), dual(b)).parts)

# Sorted gaps: subtract slotwise (the left argument must dominate), re-sort.
print("(2,2) - (1)   =", diff_sorted(Partition([2, 2]), Partition([1])).parts)

# Dominance order: equal totals, prefix sums bounded.
print("(1,1) under (2):", majorizes(Partition([1, 1]), Partition([2])))
print("(2) under (1,1):", majorizes(Partition([2]), Partition([1, 1])))

# Conjugation reverses dominance.
x, y = Partition([2, 1, 1]), Partition([3, 1])
print("x under y:", majorizes(x, y), " dual(y) under dual(x):", majorizes(dual(y), dual(x)))
