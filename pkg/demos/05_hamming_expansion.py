"""
Hamming expansion
=================

Each projective point of the q-system becomes one column of a Hamming
metric code over F_{q^m}.  Rank t maps to Hamming weight
(q^n - q^(n-t)) / (q - 1).
"""

# %%
from atwrank.atw import subfield_atw_code
from atwrank.hammingx import analyze_hamming_two_weight, hamming_expansion, weight_correspondence

C = subfield_atw_code(2, 2, 4)
H = hamming_expansion(C)
print(H.n, H.k, H.field.spec)
print(analyze_hamming_two_weight(H, C).to_dict())
print(weight_correspondence(C, H))
