# %% [markdown]
# # Recompute everything and diff it against the embedded tables

# %%
from cicy_curves.verify import verify_paper

report = verify_paper()
print(report.render())

# %% [markdown]
# Without errata the one printed Z_A set that does not follow from the
# definition shows up as a mismatch.

# %%
strict = verify_paper(apply_errata=False)
print(strict.census_match)
for m in strict.zset_mismatches:
    print(m)
