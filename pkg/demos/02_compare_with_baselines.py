# %% [markdown]
# # Comparing CoCoFISo with WSM, TOPSIS and PROMETHEE II
#
# Rank correlation (Spearman on mid-ranks, Kendall tau-b) and the share of
# alternatives that receive exactly the same rank.

# %%
from cocofiso import agreement_percent, evaluate, kendall, load_dataset, promethee2, spearman, topsis, wsm

for name in ("l1", "l2"):
    m = load_dataset(name)
    ours = evaluate(m)[1]
    print(f"\n{name.upper()}            spearman  kendall  same rank")
    for method in (promethee2, wsm, topsis):
        other = method(m).ranking
        print(f"  vs {method.__name__:<11} {spearman(ours, other):8.3f} {kendall(ours, other):8.3f}"
              f" {agreement_percent(ours, other):8.1f}%")

# %% [markdown]
# PROMETHEE II here uses the strict "usual" preference function. A linear
# preference with per-criterion thresholds is available through `net_flows`.

# %%
from cocofiso.baselines import net_flows

m = load_dataset("l2")
flows = net_flows(m, "linear", thresholds=[5, 500, 2, 5, 5])
print(f"net flows sum to {abs(flows.sum()):.1e}")
