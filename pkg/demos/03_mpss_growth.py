"""
Growing a maximal proper strongly connected subgraph
====================================================

Start from one vertex and keep attaching the shortest handle (a path that
leaves the current set, wanders outside and comes back).  Stop when the
next handle would swallow everything: the set is then maximal, and its
complement is a single path from omega_in to omega_out.
"""

from noncritical import MpssCertificate, gen_random_conditioned, grow_mpss, verify_lemma1
from noncritical.decomposition import enumerate_mpss, growth_steps

D = gen_random_conditioned(8, "Thm1", seed=2024)
print("arcs:", D.arc_count)

for step, S in enumerate(growth_steps(D, [0])):
    print(f"step {step}: {sorted(S)}")

cert = grow_mpss(D, 0)
print("complement path:", cert.complement)

# the boundary test agrees with brute force on which sets are maximal
for S in enumerate_mpss(D):
    verdict = "certified" if isinstance(verify_lemma1(D, S), MpssCertificate) else "rejected"
    print(sorted(S), verdict)

# and a non-maximal set is rejected with a reason
print(verify_lemma1(D, [0]))
