"""
Umkehr maps
===========

A map is known by its pullback, its Umkehr map and its normal bundle.  The
Umkehr map is fixed either by f_*(1) (through the projection formula) or by
a table.
"""

from mod2coh import (
    check_functoriality,
    check_product_rule,
    check_projection_formula,
    compose,
    double_cover_pushpull,
    inclusion,
    product_with_space,
    projective_space,
    umkehr,
)
from mod2coh.catalog import builtin_catalog

RP = {n: projective_space(n) for n in range(6)}

# %%
f = inclusion(RP[2], RP[5])
for b in RP[2].ring.basis_elements():
    print(f"f_*({b}) =", umkehr(f, b))
print("projection formula:", check_projection_formula(f).status)

# %%
# Functoriality: RP^1 in RP^2 in RP^5 against RP^1 in RP^5
g = inclusion(RP[1], RP[2])
h = compose(f, g)
print("(f o g)_*(1) =", umkehr(h, RP[1].ring.one()))
print("functoriality:", check_functoriality(f, g, inclusion(RP[1], RP[5])).status)

# %%
# Products: (1 x f)_*(a x b) = a x f_*(b)
F = product_with_space(RP[2], inclusion(RP[1], RP[3]))
print("(1 x f)_*(1) =", umkehr(F, F.source.ring.one()))
print("product rule:", check_product_rule(RP[2], inclusion(RP[1], RP[3]), F).status)

# %%
# Finite covers of the circle: p_* p^* is multiplication by the number of sheets
cat = builtin_catalog()
for name, n in (("dbl", 2), ("tri", 3)):
    print(f"{name}: p_* p^* = {n} mod 2 ->", double_cover_pushpull(cat.maps[name], n).status)
