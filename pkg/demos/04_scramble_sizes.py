# %% [markdown]
# # How big do scrambled grids get?
#
# Histogram of (grid size, crossing count) over scrambles of one seed, and
# how simplification brings them back.

# %%
from collections import Counter

from gridband import ScramblePolicy, default_table, scramble, simplify
from gridband.scramble import size_stats

seed = default_table()["6_2"].seed
grids = [scramble(seed, ScramblePolicy(rng_seed=s)) for s in range(40)]
sizes = Counter(g.n for g in grids)
for n in sorted(sizes):
    print(f"{n:3d} {'#' * sizes[n]}")

# %%
hist = size_stats(grids)
print("mean crossings:", sum(c * k for (_, c), k in hist.items()) / len(grids))

# %%
after = Counter(simplify(g, rng=s).n for s, g in enumerate(grids))
print("sizes after simplify:", dict(sorted(after.items())), "(seed size", seed.n, ")")
