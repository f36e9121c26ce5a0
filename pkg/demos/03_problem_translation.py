"""The two problem forms and the translation between them.

Chain-completion form: sandwich a middle chain beta (length n+m) between an
inner chain alpha (length n) and an outer chain gamma (length n+m+p) so
that the degree sequences against both neighbours dominate the shifted
column and row indices.

Partition-splitting form: given pairs t^i <= d^i whose pooled gaps sit
under A+B, split every gap with an f^i so the lower halves pool under A
and the upper halves pool under B.

Each form converts into the other by conjugating factor partitions, and
certificates convert right along with the instances.
"""

from majorchain import (
    FCertificate,
    Factor,
    Partition,
    PolyChain,
    TheoremInstance,
    beta_to_f,
    f_to_beta,
    lemma_to_theorem,
    theorem_to_lemma,
    verify_theorem_conclusion,
    verify_theorem_premises,
)

x = Factor("x")
inst = TheoremInstance(
    alpha=PolyChain(1, {x: (1,)}),
    gamma=PolyChain(3, {x: (0, 1, 2)}),
    c=Partition([0]),   # one column index 0
    r=Partition([0]),   # one row index 0
    m=1,
    p=1,
)
print("premises hold:", verify_theorem_premises(inst))

split_form = theorem_to_lemma(inst)
d, t = split_form.pairs[0]
print("pair: d =", d.parts, " t =", t.parts)
print("A =", split_form.A.parts, " B =", split_form.B.parts)
print("first part of A == m:", split_form.A[0] == inst.m)

back = lemma_to_theorem(split_form)
print("round trip equivalent:", theorem_to_lemma(back).equivalent(split_form))

# Transport a splitting certificate into a middle chain and back.
fs = FCertificate((Partition([1, 1]),))
beta = f_to_beta(inst, fs)
print("middle chain:", beta.beta)
print("verifies:", verify_theorem_conclusion(inst, beta))
print("back to the splitting:", [f.parts for f in beta_to_f(inst, beta).fs])
