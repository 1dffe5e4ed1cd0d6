"""
Caps, cups and normal forms
===========================

Morphisms k -> l of the diagram category are words in strands, the n-legged
cap f and the n-legged cup g.  Every word rewrites to a scalar times a single
canonical diagram, and that scalar matches what the word evaluates to in
Vect_{Z_n}^zeta.
"""

import random

from cyclocat import CocycleSpec, evaluate_in_vect, normalize, parse, elaborate, print_word
from cyclocat.diagram import random_word, verify_snake

spec = CocycleSpec(3, 1)


def show(src):
    w = elaborate(parse(src), spec)
    trace = []
    form = normalize(w, trace=trace)
    print(f"{src!r}  ->  {form.scalar} * {form.shape()}")
    for step in trace:
        print("    " + step)


# %%
# The three defining relations: the bubble, cap-then-cup, and the slide.
show("g ; f")
show("f ; g")
show("id(1) # f")

# %%
# Sliding a cap across k strands costs zeta^k, so closing off f # f in
# different orders is consistent only because zeta^n = 1.
for k in range(4):
    show(f"id({k}) # f # id({3 - k}) ; f")

# %%
# Duals: with eval_k = zeta^-k times the cap, both zig-zags are identities.
print([verify_snake(CocycleSpec(6, a), k) for a in range(6) for k in range(6)].count(False), "failures")

# %%
# Rewriting and evaluation in Vect agree on random words.
rng = random.Random(1)
w = random_word(CocycleSpec(4, 3), rng, max_atoms=20)
print(print_word(w))
print(normalize(w) == evaluate_in_vect(w))
