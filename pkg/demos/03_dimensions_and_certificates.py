# %% [markdown]
# # Dimension counts and per-bidegree verdicts

# %%
from cicy_curves.configuration import validate_configuration
from cicy_curves.finiteness import fiber_dimension, finiteness_certificate

bicubic = validate_configuration((2, 2), [[3], [3]])
print(fiber_dimension(bicubic, (2, 2)))

# %% [markdown]
# The incidence variety has the same dimension as the family of complete
# intersections, so a generic member carries finitely many such curves.
# Extra h^1 adds to the fiber one for one.

# %%
for h1 in (0, 1, 3):
    r = fiber_dimension(bicubic, (2, 2), h1)
    print(h1, r.fiber_dim, r.dim_incidence - r.dim_family)

# %%
A = validate_configuration((2, 3), [[2, 1], [0, 4]])
for d in [(1, 1), (2, 3), (2, 4), (1, 5), (3, 3)]:
    c = finiteness_certificate(A, d)
    print(d, c.verdict.value, c.witness)

# %% [markdown]
# The Tian-Yau matrix certifies only (3,3), with a caveat attached.

# %%
ty = validate_configuration((3, 3), [[3, 1, 0], [0, 1, 3]])
c = finiteness_certificate(ty, (3, 3))
print(c.verdict.value, c.witness)
print(c.notes[0])
