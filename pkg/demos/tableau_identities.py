# %% [markdown]
# Littlewood-Richardson and shifted coefficients, and the identity checks
# exposed through the verification harness.

# %%
from spindec.tableaux import lr_coefficient, shifted_coefficient
from spindec.verify import REGISTRY, run_check

print(lr_coefficient((2, 1), (2, 1), (3, 2, 1)))
print(shifted_coefficient((3, 2, 1), (4, 2)), shifted_coefficient((2, 2, 2), (4, 2)))

# %%
for cid in ("L121223", "L111223_2", "t1", "bss"):
    print(run_check(cid, (REGISTRY[cid].default[0], 7)).summary())
