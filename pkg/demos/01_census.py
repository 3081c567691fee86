# %% [markdown]
# # The census of configurations in P^a1 x P^a2
#
# Enumerate every admissible configuration matrix up to codimension 5 and
# look at how it is organized.

# %%
from cicy_curves import enumerate_census
from cicy_curves.census import census_partition_report, duplicate_pairs
from cicy_curves.formats import render_matrix_text

census = enumerate_census(5)
print(len(census), "configurations")
print(census.counts_by_codim)

# %% [markdown]
# The two hypersurfaces: a bidegree (2,4) threefold in P^1 x P^3 and the
# bicubic in P^2 x P^2. The star marks a P^1 factor.

# %%
for e in census:
    if e.codim == 1:
        print(render_matrix_text(e.matrix, star=e.has_p1_factor))
        print()

# %% [markdown]
# Seven families show up twice: replacing a P^1 by a conic in P^2 gives a
# second matrix for the same threefold.

# %%
for p, q in duplicate_pairs(census):
    print(f"({p.duplicate_class})")
    print(render_matrix_text(p.matrix, star=True))
    print(render_matrix_text(q.matrix))
    print()

# %%
print(census_partition_report(census))
