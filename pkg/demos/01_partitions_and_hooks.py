"""Partitions, Young diagrams, and rim hooks.

Walks through the diagram-level toolkit: conjugation, hook lengths, and
how stripping rim hooks computes a core without any abacus machinery.
"""

from stcores import Partition


def diagram(p: Partition) -> str:
    return "\n".join("#" * part for part in p.parts) or "(empty)"


# A partition is just a weakly decreasing tuple of positive parts.
lam = Partition([5, 5])
print("lambda = (5,5), size", lam.size)
print(diagram(lam))

# Conjugation reflects the diagram across the main diagonal.
print("\nconjugate:", lam.conjugate().parts)
print(diagram(lam.conjugate()))

# Hook lengths: 1 + arm + leg per cell.  The multiset is conjugation-invariant.
print("\nhook lengths of (5,5), row-major:", lam.hook_lengths())
print("hook length at (1,3):", lam.hook_length(1, 3))

# Removing a rim hook leaves a smaller partition; the size drops by exactly
# the hook length of the chosen cell.
step1 = lam.remove_rim_hook(1, 3)
print("\nremove the rim 4-hook at (1,3):", step1.parts)
step2 = step1.remove_rim_hook(1, 2)
print("remove the remaining rim 4-hook at (1,2):", step2.parts)

# Repeating until no hook of length t remains gives the t-core, and the
# result does not depend on the removal order.
print("\n4-core of (5,5) by repeated removal:", lam.t_core_by_diagram(4).parts)
print("no hook of the 4-core is divisible by 4:",
      all(h % 4 for h in lam.t_core_by_diagram(4).hook_lengths()))

# The 1-core of anything is empty: every cell sits in a hook of length 1.
print("1-core of (3,2,2):", Partition([3, 2, 2]).t_core_by_diagram(1).parts)
