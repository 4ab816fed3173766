"""
Pfaffians of matrices skew along the anti-diagonal
==================================================

Numeric values, the determinant identity, and symbolic expansions.
"""

import random

from orthocone import AntiSkewMatrix, pfaffian
from orthocone.algebra import QQ, PrimeField, determinant
from orthocone.pfaffian import pfaffian_term_count

rng = random.Random(7)

# A random 6x6 anti-skew matrix over the rationals: det equals (-1)^n Pf^2 with n = 3.
A = AntiSkewMatrix.random(3, QQ, rng)
pf = pfaffian(A)
print("Pf =", pf, " det =", determinant(A.entries, QQ), " -Pf^2 =", -pf * pf)

# Same thing modulo a prime.
F = PrimeField(32003)
B = AntiSkewMatrix.random(3, F, rng)
print("mod p:", determinant(B.entries, F) == F.norm(-pfaffian(B) ** 2))

# The generic Pfaffian has (2n-1)!! terms.
for n in range(1, 5):
    q = pfaffian(AntiSkewMatrix.generic(n))
    print(f"n={n}: {len(q.terms)} terms (expected {pfaffian_term_count(n)})")
