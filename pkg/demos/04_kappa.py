# %% [markdown]
# Kappa classes with multiplicities.
#
# kappa_i is the pushforward of psi_{n+1}^{i+1}. Expand the psi power by its
# slide set, forget leaf n+1, and keep the trees where n+1 sat at a trivalent
# vertex.

# %%
from slidestrata.kappa import generalized_kappa, kappa_expansion, kappa_expansion_via_degrees
from slidestrata.serialize import sum_text
from slidestrata.trees import all_splits

print("kappa_1 on M_0,5 =", sum_text(kappa_expansion(2, 1)))
print("same by degrees:", kappa_expansion_via_degrees(2, 1) == kappa_expansion(2, 1))

# %%
print(" n  terms  divisors")
for n in range(1, 8):
    k1 = kappa_expansion(n, 1)
    print(f"{n:2d}  {k1.total():5d}  {len(all_splits(n)):8d}")
# past n = 4 the terms outnumber the divisors, so repeats are forced

# %%
print("R_{2;(2,1)} =", sum_text(generalized_kappa(2, (2, 1))))
