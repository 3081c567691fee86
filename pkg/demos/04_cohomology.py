# %% [markdown]
# # Line bundle cohomology on projective spaces and their products

# %%
from cicy_curves.cohomology import CohomologyQuery, IdealSheafQuery, h0_ideal_sheaf, h_product, h_projective_space

for b in range(-5, 4):
    print(b, [h_projective_space(2, b, p) for p in range(3)])

# %% [markdown]
# Kunneth: cohomology of O(b1, b2) on P^1 x P^2.

# %%
for p in range(4):
    print(p, h_product(CohomologyQuery((1, 2), (-3, 1), p)))

# %% [markdown]
# Sections of O(b) vanishing on a rational curve, assuming h^1 = 0. The
# minus one in each column is the projectivization.

# %%
print(h0_ideal_sheaf(IdealSheafQuery((2, 2), (2, 2), (3, 3))) - 1)
