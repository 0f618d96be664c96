"""
Immersion formulas
==================

For f: M -> X of codimension k, the squares of f_*(1) are the Umkehr images
of the normal Stiefel-Whitney classes, and the internal operation
P_l(f_*(1)) is the Umkehr image of w_k(gamma_l (x) nu_f) over RP^l x X.
"""

from mod2coh import check_equivariant, check_thom, check_whitney_mod2, inclusion, projective_space, sq, sw
from mod2coh.verify import equivariant_sides, internal_op, restrict_to_fibre, thom_expansion

M, X = projective_space(2), projective_space(5)
f = inclusion(M, X)
alpha = f.push(M.ring.one())

# %%
print("f_*(1) =", alpha, "| w(nu) =", f.normal.total)
for i in range(f.codim + 1):
    print(f"Sq^{i} f_*(1) = {sq(i, alpha)}   f_* w_{i} = {f.push(sw(i, f.normal))}")
print("Thom:", check_thom(f).status, "| Whitney:", check_whitney_mod2(f).status)

# %%
# The internal operation restricts to the cup square away from the RP^l factor
P = internal_op(alpha, 3)
print("P_3(f_*(1)) =", P)
print("restricted:", restrict_to_fibre(P, X.ring), "= alpha^2:", alpha * alpha)

# %%
# Both sides of the equivariant formula, and the termwise Thom expansion between them
for ell in (1, 2, 4):
    lhs, rhs, _ = equivariant_sides(f, ell)
    print(f"ell={ell}: {lhs}  |  {rhs}  |  expansion agrees: {thom_expansion(f, ell) == lhs}")
    print("   ", check_equivariant(f, ell).status)
