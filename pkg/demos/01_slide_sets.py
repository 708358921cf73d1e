# %% [markdown]
# Slide sets: psi and omega products as sums of boundary points.
#
# A composition k = (k_1, ..., k_n) of n picks a monomial psi_1^k_1 ... psi_n^k_n
# on M_{0,n+3}. Sliding leaves one at a time turns the one-vertex tree into
# a set of trivalent trees, one per boundary point in the product.

# %%
from slidestrata import slide_set_omega, slide_set_psi, multinomial, verify_labeling
from slidestrata.counts import asym_multinomial, compositions, is_catalan
from slidestrata.serialize import sum_text, tree_text

psi = slide_set_psi((1, 0, 2))
omega = slide_set_omega((1, 0, 2))
print("psi_1 psi_3^2     =", sum_text(psi))
print("omega_1 omega_3^2 =", sum_text(omega))

# %% [markdown]
# Trees come out as split lists once the codimension passes two. The
# omega trees are a subset of the psi trees; the one left over fails the
# omega labeling at leaf 1.

# %%
for t in psi:
    lab = verify_labeling(t, (1, 0, 2), "omega")
    print(tree_text(t), "->", "omega ok" if lab else lab.reason)

# %%
# Stop one slide early and the strata have dimension one.
print(sum_text(slide_set_psi((0, 0, 2))))

# %% [markdown]
# The number of psi points is the multinomial coefficient; the omega count
# has no closed form here and is zero exactly off the Catalan compositions.

# %%
print(f"{'k':>10}  psi  omega  catalan")
for k in compositions(4):
    print(f"{str(k):>10}  {len(slide_set_psi(k)):3d}  {asym_multinomial(k):5d}  {is_catalan(k)}")
    assert len(slide_set_psi(k)) == multinomial(k)
