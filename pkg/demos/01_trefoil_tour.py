# %% [markdown]
# # A trefoil on a 5x5 grid
#
# Rows are listed bottom to top.  Row ``r`` holds an X in column ``xs[r]``
# and an O in column ``os[r]``.

# %%
from gridband import GridDiagram, components, crossing_count, key, mirror, to_planar
from gridband.invariants import jones_to_t
from gridband.moves import COL, StabSpec, commute, destabilizations, destabilize, stabilize, translate

g = GridDiagram(xs=(1, 0, 4, 3, 2), os=(4, 3, 2, 1, 0))
print(g)
print("components:", components(g), " crossings:", crossing_count(g))

# %% [markdown]
# Jones is stored in the bracket variable A; ``jones_to_t`` gives V(t).

# %%
k = key(g)
print("V(t) exponents -> coefficients:", {str(e): c for e, c in sorted(jones_to_t(k.jones).items())})
print("Alexander:", k.alexander.pretty("t"))
print("mirror has V(1/t):", key(mirror(g)).jones == k.jones.substitute_power(-1))

# %% [markdown]
# Cromwell moves keep the key fixed.

# %%
h = stabilize(g, StabSpec(row=2, kind="X", corner="SW"))
h = translate(h, COL, 3)
print("after stabilize + translate:", h.n, "x", h.n, "same key:", key(h) == k)
site = destabilizations(h)[0]
print("destabilize back:", destabilize(h, site).n)

# %%
d = to_planar(g)
print("PD code:", [tuple(x)[:4] for x in d.crossings], "writhe", d.writhe)
