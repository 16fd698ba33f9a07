"""
Spreads from antipodal codes
============================

The hyperplanes meeting the q-system of an antipodal two-weight code cut
out a spread.  The spread splits into blocks forming a direct sum.
"""

# %%
from atwrank.atw import expand_mrd_to_atw, subfield_atw_code
from atwrank.gfcore import tower
from atwrank.rankcodes import gabidulin, hadamard_code
from atwrank.spreads import check_subspread_criterion, desarguesian_spread, direct_sum_split, spread_from_atw, verify_spread

for C in (subfield_atw_code(2, 2, 4), expand_mrd_to_atw(gabidulin(tower(4, 3), 3, 2))):
    S = spread_from_atw(C)
    print(S.N, S.t, S.count, verify_spread(S).ok, len(direct_sum_split(S)))

# %%
# The Desarguesian spread of F_2^6 into 2-dim pieces has 21 elements.
S = desarguesian_spread(3, 2, 2)
print(S.count, verify_spread(S).ok)

# %%
# The subspread test agrees with direct analysis, including the one-weight
# codes where every spread element meets the q-system.
for C in (subfield_atw_code(2, 2, 4), hadamard_code(2, 2, 2)):
    r = check_subspread_criterion(C)
    print(r.atw, r.subspread, r.hadamard_exception, r.agree)
