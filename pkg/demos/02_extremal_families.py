"""
The degree bounds are sharp
===========================

Each generated family sits exactly at a threshold.  One unit below n+1
there can be no noncritical vertex at all; at n+1 there can be just one;
and a strong tournament can have as few as two.
"""

from noncritical import classify_hypothesis, generate, noncritical_oracle
from noncritical.formats import export_dot

print(f"{'family':<11}{'n':>4}{'min sum':>9}{'class':>7}  noncritical")
for family, n in [("fig4", 8), ("fig5", 9), ("fig6", 9), ("fig7", 9), ("tournament", 9)]:
    D, spec = generate(family, n)
    cls = classify_hypothesis(D)
    names = [spec.labels[v] for v in sorted(noncritical_oracle(D))]
    print(f"{family:<11}{n:>4}{cls.min_adjacent_degree_sum:>9}{cls.label.label:>7}  {names}")

# Graphviz text for the smallest member, ready for `dot -Tpng`
D, spec = generate("fig4", 4)
print()
print(export_dot(D, spec, name="fig4"))
