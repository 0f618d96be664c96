"""
Stiefel-Whitney classes
=======================

Bundles are carried by rank and total class.  The top class of a line
bundle twisted by a rank-k bundle is computed by a closed formula and
compared with a splitting-principle expansion.
"""

from mod2coh import (
    VirtualBundle,
    euler_class,
    inclusion,
    projective_space,
    sw,
    twist_top_class,
    twist_top_oracle,
    whitney_sum,
)

RP3, RP6 = projective_space(3), projective_space(6)
R = RP3.ring
x = R.gen("x")

# %%
# The normal bundle of RP^3 in RP^6 is three copies of the tautological line
nu = inclusion(RP3, RP6).normal
print("w(nu) =", nu.total, "| rank", nu.rank)
print("w_i:", [str(sw(i, nu)) for i in range(4)])
print("Euler class:", euler_class(nu))

# %%
# Whitney sum multiplies total classes
gamma = VirtualBundle(R, 1, R.one() + x)
print("w(3 gamma) =", whitney_sum(whitney_sum(gamma, gamma), gamma).total)

# %%
# w_k(L (x) xi) two ways, for every degree-one class mu
xi = whitney_sum(gamma, VirtualBundle(R, 2, R.one() + x**2))
for mu in (R.zero(), x):
    a = twist_top_class(mu, xi)
    b = twist_top_oracle(mu, xi.rank, xi.total)
    print(f"mu = {mu}: formula {a}, splitting {b}, agree {a == b}")
