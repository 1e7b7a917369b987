"""Seeing a torsion class die: an explicit coboundary witness.

In the chain group with d = (2, 4), H^2(G, Z) = Z^5 (+) Z_2. The Z_2
class is represented by a polynomial cocycle w whose double is trivial
in cohomology, so 2w must be a coboundary: 2w(g, g') = u(g) + u(g') -
u(g g') for some u: G -> Z. The witness search finds such a u among
integer polynomials of low weighted degree and validates it on fresh
random pairs. For w itself no witness can exist, and the search
(correctly) comes back empty-handed.

Run:  python3 demos/03_coboundary_witness.py
"""

import random

from nilcoh import (
    coboundary_witness,
    evaluate,
    families,
    h2,
    lemmax_generators,
    multiply,
    random_element,
    render,
)

P = families.divisor_chain_group((2, 4))
print("group: d = (2, 4),  H^2 =", h2(P, 1).total)

# --- the torsion representative ------------------------------------------
torsion = [w for w in lemmax_generators(P) if w.order]
w = torsion[0]
print("\norder-%d class, represented by  w(g, g') = %s" % (w.order, render(P, w)))

# --- the double is a coboundary ------------------------------------------
u = coboundary_witness(P, 2 * w, max_weight=3, trials=1000, seed=0)
print("\nwitness for 2w:  u =", u.render())

rng = random.Random(17)
checks = 0
for _ in range(500):
    g = random_element(P, 10, rng)
    h = random_element(P, 10, rng)
    delta = u.evaluate(g) + u.evaluate(h) - u.evaluate(multiply(P, g, h))
    checks += delta == evaluate(P, 2 * w, g, h)
print("delta(u) == 2w on fresh pairs: %d/500" % checks)

# --- the class itself is not a coboundary --------------------------------
# Absence of a witness in the ansatz space is a finding, not a proof;
# here nontriviality is already certified by the Z_2 summand above.
missing = coboundary_witness(P, w, max_weight=3, trials=200, seed=0)
print("\nwitness search for w itself:", missing)
