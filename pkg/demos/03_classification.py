"""
Classifying the categories Vect_{Z_n}^zeta
==========================================

Vect_{Z_n}^{theta^a} and Vect_{Z_n}^{theta^b} are equivalent exactly when
b j^2 = a (mod n) for a unit j.  Counting orbits of this action gives c(n),
and the autoequivalences form a 2-group with pi0 = {j : a j^2 = a} and
pi1 = Z_n.
"""

from cyclocat import aut_2group, count_classes_bruteforce, count_classes_formula, is_equivalent
from cyclocat.classify import orbits

# %%
# The first terms of c(n), from the product formula and from orbit counting.
print([count_classes_formula(n) for n in range(1, 21)])
print([count_classes_bruteforce(n) for n in range(1, 21)])

# %%
# The classes for n = 15, as orbits of a -> j^2 a.
print(orbits(15))

# %%
# A witness functor sends delta_1 to delta_j.
print(is_equivalent(5, 1, 4))
print(is_equivalent(5, 1, 2))

# %%
# The autoequivalence 2-group for a few parameters.
for n, a in [(5, 1), (8, 1), (12, 4), (9, 0)]:
    tg = aut_2group(n, a)
    print(f"n={n}, zeta=theta^{a}: pi0={tg.pi0}, |pi1|={tg.pi1_order}, non-unit solutions={tg.nonunit_solutions}")
