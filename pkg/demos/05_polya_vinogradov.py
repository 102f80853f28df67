"""
Checking the Polya-Vinogradov inequality
========================================

max_x |sum_{n<=x} chi(n)| stays below 2 sqrt(q) log q. A parallel sweep
records the worst prefix for every nonprincipal character.
"""

import numpy as np

from charsums import bound_sweep
from charsums import report as rpt

rep = bound_sweep(range(3, 301), "pv", workers=2)
ratios = rep.ratios
print(f"{len(rep.records)} characters, {len(rep.violations)} violations")
print("ratio quantiles 50/90/99/100:", np.round(np.quantile(ratios, [0.5, 0.9, 0.99, 1]), 4))

worst = max(rep.records, key=lambda r: r.ratio)
print(f"worst: q={worst.q} chi_{worst.chi_index} |S|={worst.observed:.0f} at x={worst.arg_x}")

# The same table the CLI writes, first rows only.
print(rpt.serialize(rpt.bound_table(rep)).decode().splitlines()[:4])

# The prime-sum variants are reported, not asserted.
for kind in ("thm1", "rho", "paley"):
    r = bound_sweep(range(3, 301), kind)
    print(f"{kind:5s} max ratio {r.max_ratio():.3f}, {len(r.violations)} above 1")
