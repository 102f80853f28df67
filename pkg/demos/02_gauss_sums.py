"""
Gauss sums and the interpolation of a character
===============================================

For a primitive character the Gauss sum has modulus sqrt(q), and the
character itself can be rebuilt from its Gauss sum by a finite Fourier
series.
"""

import math

import numpy as np

from charsums import build_group, quadratic_character
from charsums.sums import gauss_sum, gauss_sums_all, interpolate_char, quadratic_gauss_sum

q = 13
chi = build_group(q)[1]
tau = gauss_sum(chi)
print(f"tau(chi) mod {q} = {tau:.6f},  |tau|^2 = {abs(tau)**2:.12f}")

# All twisted sums tau_a at once through one FFT.
taus = gauss_sums_all(chi)
a = 5
print("tau_5 / tau_1 =", taus[a] / taus[1], " conj(chi)(5) =", chi.value(a).conjugate())

# The quadratic character: sqrt(p) for p = 1 mod 4, i sqrt(p) for p = 3 mod 4.
for p in (5, 7, 13, 19):
    print(p, p % 4, gauss_sum(quadratic_character(p)), math.sqrt(p))

# The quadratic exponential sum vanishes exactly when q = 2 mod 4.
print("sum e(n^2/q) for q=6..9:", [round(abs(quadratic_gauss_sum(m)), 12) for m in range(6, 10)])

# Rebuilding chi(n) from tau: the cosine or sine half suffices, by parity.
err = max(abs(interpolate_char(chi, n).full - chi.value(n)) for n in range(q))
print("max interpolation error:", err)
odd = next(c for c in build_group(q) if c.is_odd and c.is_primitive)
it = interpolate_char(odd, 4)
print("odd character, n=4:", it.full, it.parity_form, odd.value(4))
