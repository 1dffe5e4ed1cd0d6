"""
Cocycles and the constant of an invertible object
=================================================

The associativity constraint of Vect_{Z_n}^zeta is the 3-cocycle omega_zeta,
which is zeta^i when j + k wraps around n and 1 otherwise.  Every object X with
X^n ~ 1 carries a constant: the scalar of the associator (X^n) X -> X (X^n).
For delta_j it is zeta^(j^2).
"""

from cyclocat import CocycleSpec, omega, verify_cocycle, verify_pentagon
from cyclocat.pointed import constant_by_associators, constant_of, constant_of_generator

# %%
# The cocycle table for n = 4, zeta = theta, printed as theta-exponents.
spec = CocycleSpec(4, 1)
for i in range(4):
    rows = [" ".join(str(omega(spec, i, j, k).e) for k in range(4)) for j in range(4)]
    print(f"i={i}: " + " | ".join(rows))

# %%
# The cocycle identity and the pentagon hold for every zeta.
print(all(verify_cocycle(CocycleSpec(n, a)) for n in range(1, 13) for a in range(n)))
print(all(verify_pentagon(CocycleSpec(n, a)) for n in range(1, 13) for a in range(n)))

# %%
# Moving one delta_1 across delta_1^n collects omega(1, k, 1) for k = 1..n-1.
# Exactly one factor carries, so the product is zeta.
for a in range(5):
    print(f"n=5, zeta=theta^{a}: constant of delta_1 = {constant_of_generator(CocycleSpec(5, a))}")

# %%
# For delta_j the associator walk over explicit parenthesizations reproduces
# the closed form zeta^(j^2).
spec = CocycleSpec(8, 1)
for j in range(8):
    walk = constant_by_associators(spec, j)
    print(f"j={j}: walk {walk}, closed form {constant_of(spec, j)}")
