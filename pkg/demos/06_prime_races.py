"""
Prime races and Chebyshev's bias
================================

Primes 3 mod 4 lead primes 1 mod 4 for a long time; the first reversal is
at 26861. Modulo 3 the class 2 stays ahead far beyond a million.
"""

import numpy as np

from charsums import build_group
from charsums.verify import omega_track, race_series, sign_changes

rec = sign_changes(4, 1, 3, 10**5)
print(f"mod 4: first crossing {rec.first_crossing}, {rec.crossings} crossings below 1e5")
print(f"       class 3 leads on {rec.lead_b:.2%} of primes")

rec3 = sign_changes(3, 1, 2, 10**6)
print("mod 3: crossings below 1e6:", rec3.crossings)

# Error terms E(x, a, q) = pi(x, a, q) - li(x)/phi(q) on a geometric grid.
race = race_series(4, 10**6, "geometric", points=8)
for x, row in zip(race.x, race.errors):
    print(f"x = {x:>9.0f}  E(x,1,4) = {row[0]:+8.2f}  E(x,3,4) = {row[1]:+8.2f}")
print("partition holds:", race.partition_holds())

# |T(x, chi_4)| against sqrt(x) log log log x / log x around the crossing.
chi = build_group(4)[1]
for pt in omega_track(chi, [26800, 26861, 27000, 10**5]):
    print(f"x = {pt.x:>7.0f}  T = {pt.value.real:+4.0f}  ratio {pt.ratio:+.3f}")
