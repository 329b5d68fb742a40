"""
Marginal probabilities on the modified K8
=========================================

Removing 10 of K8's 28 edges breaks the symmetry that kept the marginals
uniform.  For small phi the probability of finding particle 1 on vertex 0
oscillates periodically; it grows more irregular as phi increases.  The
dominant frequencies of each series are listed from its power spectrum.
"""

# %%
import math

import numpy as np

from twowalk import InteractionScheme, catalog, equal_superposition_state, power_spectrum, record_series
from twowalk.spectral import peak_groups, tier_bins

g = catalog("k8-modified")
psi0 = equal_superposition_state(g)
for frac in (0.0, 0.01, 0.03, 0.1):
    rec = record_series(g, InteractionScheme(frac * math.pi), psi0, 500)
    p = rec.marginals1[:, 0]
    spec = power_spectrum(p)
    top = np.argsort(spec.power[1:])[::-1][:3] + 1
    print(f"phi={frac:4.2f}pi  P1(v0) in [{p.min():.4f}, {p.max():.4f}]  "
          f"top bins {[int(b) for b in top]}  tier-1 peak groups {peak_groups(spec)}")
