"""
Character sums over primes
==========================

T(x, chi) sums chi over primes up to x; rho(chi) twists primes below q by
e(p/q). Both are computed through exact exponent histograms.
"""

import math

from charsums import char_sum_primes, prime_exp_sum, quadratic_character, sum_series
from charsums.verify import collapse_check, pairing_check

for q in (3, 4):
    print(f"T(100, chi_{q}) =", char_sum_primes(quadratic_character(q), 100))

rho = prime_exp_sum(quadratic_character(5), 1)
print("rho(quadratic mod 5) =", rho, " golden ratio =", (1 + math.sqrt(5)) / 2)

# A series over a grid of x, as the CLI would export it.
series = sum_series(quadratic_character(4), [10, 100, 1000, 10_000, 100_000])
for x, v in zip(series.x, series.values):
    print(f"x = {x:>7.0f}  T = {v.real:+.0f}")

# The sum over characters collapses onto a single residue class.
c = collapse_check(quadratic_character(4), 10_000)
print("collapse: lhs", c.lhs, "rhs", c.rhs)
p = pairing_check(quadratic_character(4), 10_000)
print("pairing:  lhs", p.lhs, "rhs", p.rhs)
