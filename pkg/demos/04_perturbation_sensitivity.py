"""
Sensitivity to a 0.01 pi change in the interaction
===================================================

Entanglement responds strongly to a tiny change of phi (0.75 pi vs
0.76 pi) while the single-particle probabilities barely move.  On K8 the
probabilities do not move at all, since they are uniform for every phi.
"""

# %%
import math

import numpy as np

from twowalk import InteractionScheme, catalog, equal_superposition_state, record_series
from twowalk.graph import CATALOG_NAMES

for name in CATALOG_NAMES:
    g = catalog(name)
    psi0 = equal_superposition_state(g)
    a = record_series(g, InteractionScheme(0.75 * math.pi), psi0, 300)
    b = record_series(g, InteractionScheme(0.76 * math.pi), psi0, 300)
    d_e = np.max(np.abs(a.entanglement - b.entanglement))
    d_p = np.max(np.abs(a.marginals1[:, 0] - b.marginals1[:, 0]))
    print(f"{name:14s} max|dE| = {d_e:.3f} bits   max|dP1(v0)| = {d_p:.2e}")
