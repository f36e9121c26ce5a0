"""Why the splitting statement needs unit weights.

Scaling every gap by a factor w is what a degree-w irreducible factor would
contribute to the degree sequence.  For w = 2 the analogous splitting
statement is false, and this instance shows it: d = (1,1), t = (),
A = B = (1,1).  The doubled gaps (2,2) sit under A+B = (2,2) exactly, yet
every candidate f puts a doubled gap of 2 under parts of size 1 on one side
or the other, or fails the totals.

With unit weight the statement is a theorem; the contrast instance keeps
the same gaps and restores the premise with A = B = (1).
"""

from majorchain import Partition, diff_sorted, majorizes, plus, scaled, solve_scaled_k1

d, t = Partition([1, 1]), Partition()

A = B = Partition([1, 1])
doubled_gaps = scaled(d, 2)
print("doubled gaps:", doubled_gaps.parts, " A+B:", plus(A, B).parts)
print("premise holds:", majorizes(doubled_gaps, plus(A, B)))

report = solve_scaled_k1(d, t, A, B, w=2)
print("w=2 outcome:", report.outcome, f"(searched {report.nodes} nodes of {report.space_size})")

for parts in ((), (1,), (1, 1)):
    f = Partition(parts)
    lower = scaled(diff_sorted(f, t), 2)
    upper = scaled(diff_sorted(d, f), 2)
    print(
        f"  f={f.parts}: 2(f-t)={lower.parts} under A? {majorizes(lower, A)};",
        f"2(d-f)={upper.parts} under B? {majorizes(upper, B)}",
    )

contrast = solve_scaled_k1(d, t, Partition([1]), Partition([1]), w=1)
print("w=1 with A=B=(1):", contrast.outcome, "witness", contrast.certificate.fs[0].parts)
