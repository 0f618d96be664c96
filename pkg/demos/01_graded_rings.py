"""
Graded rings over GF(2)
=======================

Truncated polynomial rings, the degree cap for polynomial generators, and
Künneth products.
"""

from mod2coh import Generator, RingPresentation, parse_element, tensor

# %%
# H^*(RP^4) = GF(2)[x]/(x^5), with |x| = 1
R = RingPresentation([Generator("x", 1, 5)])
x = R.gen("x")
print("basis:", [str(b) for b in R.basis_elements()])
print("(1 + x)^4 =", (R.one() + x) ** 4)  # Frobenius: only x^4 survives
print("x^3 * x^2 =", x**3 * x**2)

# %%
# An untruncated generator needs a degree cap: RP^inf seen up to degree 12
Rinf = RingPresentation([Generator("x", 1, None)], cap=12)
print("dim of RP^inf up to degree 12:", Rinf.dimension)

# %%
# Elements round-trip through their canonical text
e = parse_element("x*x + 1 + x^2 + x^3", R)
print("canonical:", e, "| degrees", e.degrees())

# %%
# Künneth: the second factor's clashing names get a prime
T = tensor(R, RingPresentation([Generator("x", 1, 3)]))
print("generators:", T.names, "dimension:", T.dimension)
print("top degree:", T.top_degree, "| classes there:", len(T.basis_in_degree(T.top_degree)))
