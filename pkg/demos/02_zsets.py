# %% [markdown]
# # Bidegrees with a finiteness certificate
#
# For matrices with both a_i >= 2, Z_A is the set of bidegrees where each
# column satisfies the regularity inequality for some choice of (u, v).

# %%
from cicy_curves import enumerate_census
from cicy_curves.configuration import validate_configuration
from cicy_curves.finiteness import AmbientTooSmall, z_set
from cicy_curves.formats import format_zset, render_matrix_text

bicubic = validate_configuration((2, 2), [[3], [3]])
print(len(z_set(bicubic)), "bidegrees:", format_zset(z_set(bicubic)))

# %% [markdown]
# Most multi-column matrices certify only the corner (a1, a2).

# %%
census = enumerate_census(5)
for e in census:
    if e.z_set is not None and len(e.z_set) > 1 and e.codim > 1:
        print(render_matrix_text(e.matrix))
        print("   Z_A =", format_zset(e.z_set))

# %% [markdown]
# A P^1 factor is outside the hypotheses; the doubled partner on P^2 is not.

# %%
try:
    z_set(validate_configuration((1, 3), [[2], [4]]))
except AmbientTooSmall as exc:
    print("refused:", exc)
print(format_zset(z_set(validate_configuration((2, 3), [[2, 1], [0, 4]]))))
