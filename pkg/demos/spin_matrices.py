# %% [markdown]
# Spin decomposition numbers in characteristic 2, derived from the ordinary
# decomposition matrix and the basic spin character.

# %%
from spindec.partitions import Partition, dbl, format_partition, strict_partitions
from spindec.spin import basic_spin_perm_expansion, epsilon_label, spin_decomposition_matrix

n = 7
sdm = spin_decomposition_matrix(n)
cols = strict_partitions(n)
print("lambda  eps ", " ".join(format_partition(c) for c in cols))
for lam in cols:
    print(format_partition(lam), epsilon_label(lam), [sdm.entry(lam, mu) for mu in cols])

# %%
# the basic spin module reduces to 2^{a(n)} copies of D^{dbl(n)}
for n in range(1, 9):
    top = Partition((n,))
    print(n, format_partition(dbl(top).to_partition()), spin_decomposition_matrix(n).full_row(top))

# %%
# the basic spin module as a virtual sum of two-row permutation modules
for n in range(2, 12):
    print(n, basic_spin_perm_expansion(n).t)
