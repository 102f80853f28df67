"""
Dirichlet characters as exact roots of unity
============================================

Every character modulo q is stored as a vector of exponents, one per
prime-power factor of q. Values come back as exact fractions of a turn, so
products and conjugates never drift.
"""

import numpy as np

from charsums import build_group

# The group modulo 15 is a product of the groups mod 3 and mod 5.
g = build_group(15)
print("q = 15, phi =", g.phi, "component orders:", g.orders)

# Index 0 is always the principal character.
for chi in g:
    row = [chi(n) for n in range(15)]
    shown = " ".join(f"{v.num}/{v.den}" if v.den else "  0" for v in row)
    print(f"chi_{chi.index:<2d} order {chi.order} {'odd ' if chi.is_odd else 'even'}  {shown}")

# Multiplication of characters is exact, and chi * conj(chi) is principal.
a, b = g[3], g[5]
print("chi_3 * chi_5 = chi_%d" % (a * b).index)
print("chi_3 * conj(chi_3) principal:", (a * a.conjugate()).is_principal)

# Conductors: a character is primitive when no smaller modulus induces it.
for chi in g:
    print(f"chi_{chi.index}: conductor {chi.conductor}, primitive {chi.is_primitive}")

# Orthogonality in matrix form: V V^* = phi I.
V = g.value_matrix()
print("max |V V* - phi I| =", np.abs(V @ V.conj().T - g.phi * np.eye(g.phi)).max())
