"""
Spectra barely depend on the initial state
==========================================

Compare the prominent entanglement frequencies on Q3 from the equal
superposition with those from several seeded random initial states.
"""

# %%
import math

import numpy as np

from twowalk import InteractionScheme, catalog, equal_superposition_state, power_spectrum, random_state, record_series
from twowalk.spectral import tier_bins

g = catalog("q3")
scheme = InteractionScheme(0.3 * math.pi)


def tier1(psi0):
    rec = record_series(g, scheme, psi0, 500, marginals=False)
    return set(np.flatnonzero(tier_bins(power_spectrum(rec.entanglement)) == 1))


reference = tier1(equal_superposition_state(g))
print("equal superposition tier-1 bins:", sorted(int(b) for b in reference))
for seed in (1, 2, 3, 1234):
    bins = tier1(random_state(g, seed))
    print(f"seed {seed:5d}: shared {len(bins & reference)}/{len(reference)}")
