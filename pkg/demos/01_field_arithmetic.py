"""
Field arithmetic and subfield embeddings
========================================

Elements of F_{p^D} are plain ints whose base-p digits are polynomial
coefficients.  This script builds F_16, does some arithmetic and embeds F_4.
"""

# %%
# Build a field from its spec string.  The default modulus is the smallest
# monic irreducible, so ``2^4`` means F_2[x]/(x^4 + x + 1), encoded as 19.
from atwrank.gfcore import parse_field_spec, tower

F = parse_field_spec("2^4")
print(F.spec, "order", F.order)

# %%
# Arithmetic goes through log/antilog tables for small fields.
a, b = 6, 11
print("a + b =", F.add(a, b))
print("a * b =", F.mul(a, b))
print("a / b =", F.div(a, b))
print("a^5   =", F.pow(a, 5))
print("primitive element:", F.primitive_element)

# %%
# The wrapper type makes interactive use shorter.
x = F(6)
print(x * x + F(1), (x**3).inverse())

# %%
# A canonical embedding F_4 -> F_16 sends the generator of F_4 to a root
# of its minimal polynomial inside F_16.
emb = tower(4, 2)
print([emb(c) for c in range(4)])
