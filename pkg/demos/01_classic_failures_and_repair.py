# %% [markdown]
# # Where classic CoCoSo breaks, and how CoCoFISo ranks anyway
#
# Two student-housing matrices ship with the package. L1 has a criterion
# (PW, parent's workplace) that is identical for every student; L2 has a
# student (L221) who is worst on every criterion. Each breaks the classic
# method at a different step.

# %%
import numpy as np

from cocofiso import (DegenerateCriterion, Variant, ZeroMinAggregate, evaluate, load_dataset,
                      normalize_minmax, normalize_vector)

l1 = load_dataset("l1")
l2 = load_dataset("l2")
print(l1.shape, l1.names, l1.weights)

# %% [markdown]
# Min-max normalization divides by `max - min`, which is zero for PW in L1.

# %%
try:
    normalize_minmax(l1)
except DegenerateCriterion as exc:
    print("L1:", exc)

# %% [markdown]
# L2 normalizes fine, but L221 ends up with S = P = 0 and the classic k_ib
# divides by the minimum S and P.

# %%
print("L221 min-max row:", normalize_minmax(l2).row("L221"))
try:
    evaluate(l2, Variant.CLASSIC)
except ZeroMinAggregate as exc:
    print("L2:", exc)

# %% [markdown]
# CoCoFISo swaps in vector normalization (no max - min denominator) and a
# k_ib whose denominator never drops below 1.

# %%
print("L1 PC column, vector-normalized:", np.unique(normalize_vector(l1).values[:, 0].round(4)))
for name, m in (("L1", l1), ("L2", l2)):
    table, ranking = evaluate(m, Variant.COCOFISO, lam=0.5)
    print(f"\n{name}: top 3")
    for e in list(ranking)[:3]:
        row = table.row(e.alternative)
        print(f"  {e.rank:>2}  {e.alternative}  k={e.score:.4f}  S={row['S']:.3f}  P={row['P']:.3f}")
    print(f"  last: {ranking.bottom} (rank {ranking.entries[-1].rank})")

# %% [markdown]
# If dropping a constant criterion is acceptable, the classic method can be
# run with `auto_repair=True`; the remaining weights are rescaled to one.

# %%
import warnings

with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    _, repaired = evaluate(l1, Variant.CLASSIC, auto_repair=True)
print(caught[0].message)
print("classic (PW dropped) top:", repaired.top)
