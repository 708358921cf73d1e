# %% [markdown]
# Moving hyperplanes and their limits on a stratum.
#
# On X_T the i-th Kapranov map lands in the linear space P_sigma given by the
# branches at i. Restricting the hyperplane z_b + t z_c + t^2 z_1 + ... and
# keeping the lowest power of t says which branch gets separated from i.

# %%
from fractions import Fraction

from slidestrata.oracle import (
    INF, PSigma, StratumPoint, hyperplane_psi, iterated_limit, kapranov_coords,
    limit_condition, oracle_slide, restrict_to_stratum,
)
from slidestrata.slides import slide_i, slide_set
from slidestrata.trees import A, branches_at, from_splits, label_str
from slidestrata.serialize import sum_text, tree_text

curve = from_splits(4, [["1", "2", "3", "4"], ["1", "3"]])
sigma = PSigma(branches_at(curve, 4))
print("branches at 4:", [sorted(label_str(x) for x in b) for b in sigma.partition.blocks])
print("P_sigma for leaf 2:", PSigma(branches_at(curve, 2)).pattern(4))

# %%
s, t = Fraction(2), Fraction(5)
pt = StratumPoint.of(curve, 4, {4: INF, A: 0, 2: t, 1: s})
print("|psi_4| =", [str(x) for x in kapranov_coords(pt, 4)])   # [0:0:s:t:s]
print("|psi_2| =", [str(x) for x in kapranov_coords(pt, 2)])   # [0:0:s:s:s-t]

# %%
h = hyperplane_psi(4, 4)
res = restrict_to_stratum(h, curve, 4)
print(h)
print("restricted:", res, "-> y_%d = 0" % limit_condition(res))
print(sorted(tree_text(x) for x in oracle_slide(curve, 4)))
print(oracle_slide(curve, 4) == slide_i(curve, 4))

# %%
# Running every hyperplane in turn gives back the slide set.
for flavor in ("psi", "omega"):
    lim = iterated_limit((1, 0, 2), flavor)
    print(flavor, lim == slide_set((1, 0, 2), flavor), sum_text(lim))
