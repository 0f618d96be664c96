"""
Steenrod squares
================

The total square is extended multiplicatively from the generators, so the
Cartan formula holds by construction; the axioms and Adem relations are
checked.
"""

from mod2coh import adem_expansion, check_adem, check_axioms, rp_infinity, sq, sq_compose, sq_total
from mod2coh.catalog import builtin_catalog

R = rp_infinity(24).ring
x = R.gen("x")

# %%
# On RP^inf, Sq^i(x^j) = C(j, i) x^{i+j}
for j in range(1, 7):
    print(f"Sq(x^{j}) =", sq_total(x**j))

# %%
# The table of nonzero Sq^i x^j reproduces Pascal's triangle mod 2
for j in range(9):
    print("".join("#" if not sq(i, x**j).is_zero() else "." for i in range(j + 1)))

# %%
print("axioms on RP^inf to degree 24:", check_axioms(R, 24).status)

# %%
# Adem: Sq^a Sq^b for a < 2b as a sum of admissible composites
for a, b in [(1, 1), (1, 2), (2, 2), (3, 2), (2, 3), (3, 4)]:
    terms = " + ".join(f"Sq^{i}Sq^{j}" if j else f"Sq^{i}" for i, j in adem_expansion(a, b)) or "0"
    print(f"Sq^{a}Sq^{b} = {terms}")

print("Sq^2 Sq^3 x^3 =", sq_compose((2, 3), x**3), "=", sq(5, x**3) + sq_compose((4, 1), x**3))

# %%
# CP^4 needs an explicit rule: Sq(y) = y + y^2 with |y| = 2
cp4 = builtin_catalog().spaces["CP4"].ring
print("Sq(y^2) on CP^4 =", sq_total(cp4.gen("y") ** 2))
print("Adem 3,4 on CP^4:", check_adem(cp4, 3, 4, 8).status)
