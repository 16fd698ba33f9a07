"""
Rank weight distributions two ways
==================================

The rank of a codeword is the F_q-dimension of the span of its entries.
The distribution can be computed by enumerating codewords or by scanning
hyperplanes against the q-system of the code.  Both must agree.
"""

# %%
import numpy as np

from atwrank.gfcore import tower
from atwrank.rankcodes import gabidulin, is_mrd, random_code, rank_weight_distribution

C = gabidulin(tower(2, 4), 4, 2)
print(C)
print(rank_weight_distribution(C).counts)
print(rank_weight_distribution(C, method="hyperplanes").counts)
print("MRD:", is_mrd(C))

# %%
# Random codes over F_8 / F_2 give the same answer on both routes.
rng = np.random.default_rng(1)
for _ in range(5):
    D = random_code(rng, 2, 3, 3, 2)
    a = rank_weight_distribution(D).counts
    b = rank_weight_distribution(D, method="hyperplanes").counts
    print(a, a == b)
