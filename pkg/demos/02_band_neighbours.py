# %% [markdown]
# # Which knots sit one band away from a scrambled trefoil?
#
# Scramble the seed, try every non-coherent band, identify each result.

# %%
from collections import Counter

from gridband import ScramblePolicy, apply_band, default_table, enumerate_bands, identify, scramble

table = default_table()
g = scramble(table["3_1"].seed, ScramblePolicy(moves=1000, max_size=20, rng_seed=1))
moves = enumerate_bands(g, "noncoherent")
print(f"scrambled to {g.n}x{g.n}; {len(moves)} non-coherent bands")

# %%
hits = Counter(identify(apply_band(g, m), table) for m in moves)
for name, count in hits.most_common():
    print(f"{name:>10}  {count}")

# %% [markdown]
# Coherent bands split the knot into a two-component link.

# %%
from gridband import classify_band

m = enumerate_bands(g, "coherent")[0]
print(m, classify_band(g, m))
