"""Divisibility chains and their lcm-product degree sequence.

A chain is a run of homogeneous polynomials, each dividing the next, stored
as one exponent vector per irreducible factor.  For a chain sandwiched
inside a longer one, the successive lcm-product quotients have degrees that
form a partition, computable two ways: straight from the products, or
factor by factor from conjugated exponent partitions.  Both routes are
shown to agree here; the library keeps them separate so they can check
each other.
"""

from majorchain import (
    Factor,
    PolyChain,
    interlace_check,
    pi_degree,
    sigma_degree_sequence,
    sigma_identity_rhs,
)

x = Factor("x")

# inner chain:  x        (length 1)
# outer chain:  1 | x | x^2   (length 3, so the gap y is 2)
inner = PolyChain(1, {x: (1,)})
outer = PolyChain(3, {x: (0, 1, 2)})

print("inner:", inner)
print("outer:", outer)
print("sandwiched:", interlace_check(inner, outer, 2))

for i in range(3):
    print(f"lcm-product degree at shift {i}:", pi_degree(i, inner, outer))

print("degree sequence:", sigma_degree_sequence(inner, outer, 2).parts)
print("factor-local form:", sigma_identity_rhs(inner, outer, 2).parts)

# With two factors the products mix, but the factor-local form just sums.
y = Factor("y")
inner2 = PolyChain(2, {x: (0, 1), y: (1, 1)})
outer2 = PolyChain(4, {x: (0, 1, 1, 2), y: (0, 1, 2, 2)})
print("\ntwo factors, gap 2:")
print("degree sequence:", sigma_degree_sequence(inner2, outer2, 2).parts)
print("factor-local form:", sigma_identity_rhs(inner2, outer2, 2).parts)

# Factor degrees weight the sum: a degree-2 factor doubles its term.
heavy = Factor("x", 2)
inner3 = PolyChain(1, {heavy: (1,)})
outer3 = PolyChain(3, {heavy: (0, 1, 2)})
print("\ndegree-2 factor:")
print("degree sequence:", sigma_degree_sequence(inner3, outer3, 2).parts)
print("factor-local form:", sigma_identity_rhs(inner3, outer3, 2).parts)
