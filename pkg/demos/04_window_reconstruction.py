"""
Incomplete sums through a Fourier window
========================================

A sum over p <= x with x < q is a complete sum weighted by the indicator
of an arc. Truncating that indicator's Fourier series at K terms gives an
approximation whose error shrinks roughly like 1/K, with Gibbs ripples on
the way.
"""

import numpy as np

from charsums import build_group, prime_pi
from charsums.window import (
    WindowSpec,
    fourier_coeffs,
    partial_window_sum,
    reconstruction_residuals,
    tail_sine_sum,
)

spec = WindowSpec(M=0, N=40, q=101)
c = fourier_coeffs(spec, 5)
print("a0 =", c.a0, " a_1..5 =", np.round(c.a, 4))

# The partial sum overshoots near a jump and settles at 1/2 on it.
for K in (8, 64, 512):
    near = partial_window_sum(spec, 2 * np.pi * 39.6 / 101, K)
    print(f"K = {K:<4d} S_K just inside the jump = {near:.4f}")

# Reconstruction residual for q = 1009, x = 500, all characters at once.
g = build_group(1009)
for K in (16, 64, 256, 1024, 4096):
    r = reconstruction_residuals(g, 500, K)[1:]
    print(f"K = {K:<5d} rms {np.sqrt((r**2).mean()):.4f}  max {r.max():.4f}")
print("scale 1e-2 pi(q) =", 1e-2 * prime_pi(1009))

# The tail of sin(mt)/m summed over t = 2 pi n/q is O((q/K) log K).
for K in (8, 64, 512):
    total, ratio = tail_sine_sum(1009, K, None)
    print(f"K = {K:<4d} tail {total:9.2f}  ratio {ratio:.3f}")
