"""
Antipodal two-weight codes
==========================

A two-weight [n, 2, d] rank code whose largest weight is n.  Two
constructions are shown: the subfield code and the expansion of an MRD
code over an intermediate field.
"""

# %%
from atwrank.atw import (
    analyze_atw,
    classify_half_distance,
    expand_mrd_to_atw,
    predicted_atw_counts,
    rank_correspondence,
    subfield_atw_code,
)
from atwrank.gfcore import tower
from atwrank.rankcodes import gabidulin, rank_weight_distribution

C = subfield_atw_code(2, 2, 4)
print(C.G)
print(rank_weight_distribution(C).counts, predicted_atw_counts(2, 4, 4, 2))
print(analyze_atw(C).to_dict())

# %%
# A [3, 2, 2] MRD code over F_64 / F_4 becomes a [6, 2, 4] code over F_64 / F_2.
mrd = gabidulin(tower(4, 3), 3, 2)
E = expand_mrd_to_atw(mrd)
print(rank_weight_distribution(E).counts)
print(rank_correspondence(mrd, E))

# %%
# Codes with d = n/2 have a canonical form tied to the subfield F_{q^d}.
res = classify_half_distance(C)
print(res.kind, res.subfield_degree, res.G)
