# %% [markdown]
# # Hunting chirally cosmetic bands on 5_1
#
# A band that turns 5_1 into its mirror 5_1m is rare.  A short search
# (about 20 s on one core) usually finds a few.

# %%
from gridband.explore import ExploreConfig, cosmetic_stats, explore, replay

witnesses = []
cfg = ExploreConfig(classes=("5_1",), scrambles_per_seed=30, base_seed=11)
report = explore(cfg, on_witness=witnesses.append)
for row in cosmetic_stats(report):
    print(f"{row.name}: {row.occurrences}/{row.sample} = {row.probability:.4f}")

# %% [markdown]
# Each witness is a (grid, band) record that can be re-checked from scratch.

# %%
cosmetic = [w for w in witnesses if w.dst == "5_1m"]
print(len(cosmetic), "cosmetic witnesses")
if cosmetic:
    w = cosmetic[0]
    print(w.move, replay(w))

# %%
print("distance-one neighbours found:", sorted(report.neighbours("5_1")))
