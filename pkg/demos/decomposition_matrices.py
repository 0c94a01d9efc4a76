# %% [markdown]
# Decomposition matrices of S_n in characteristic 2, computed by chopping
# Specht modules over GF(2), and the two-row rows compared with the
# binary-digit formula.

# %%
from spindec.modrep import brauer_characters, decomposition_matrix
from spindec.partitions import Partition, format_partition
from spindec.spin import two_part_decomposition

dm = decomposition_matrix(6)
for lam, row in dm.rows.items():
    print(f"{format_partition(lam):>12}", {format_partition(m): v for m, v in row.items() if v})

# %%
# two-row Specht modules: [S^(n-h,h) : D^(n-k,k)] is 1 exactly when the binary digits fit
n = 8
for h in range(n // 2 + 1):
    want = {Partition((n - k, k)): v for k, v in two_part_decomposition(n, h).items()}
    got = {m: v for m, v in decomposition_matrix(n).row(Partition((n - h, h))).items() if v}
    print(h, got == want, sorted(format_partition(m) for m in got))

# %%
# Brauer characters of the simple modules on odd classes
for mu, phi in brauer_characters(dm).items():
    print(format_partition(mu), dict((format_partition(r), v) for r, v in phi.values.items()))
