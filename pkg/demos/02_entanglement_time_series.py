"""
Entanglement time series on K8
==============================

Two particles start in the equal superposition on the complete graph K8.
Without interaction (phi = 0) they stay unentangled; any nonzero phi
produces oscillating entanglement whose structure gets richer with phi,
while the single-particle marginals stay exactly uniform.
"""

# %%
import math
from pathlib import Path

import numpy as np

from twowalk import InteractionScheme, catalog, equal_superposition_state, record_series

g = catalog("k8")
psi0 = equal_superposition_state(g)
records = {}
for frac in (0.0, 0.02, 0.1, 0.3, 0.6, 0.99):
    rec = record_series(g, InteractionScheme(frac * math.pi), psi0, 300)
    records[frac] = rec
    dev = np.max(np.abs(rec.marginals1 - 1 / 8))
    print(f"phi={frac:4.2f}pi  mean E={rec.entanglement.mean():.3f} bits  "
          f"max E={rec.entanglement.max():.3f}  max|P1-1/8|={dev:.1e}")

# %%
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    out = Path(__file__).with_name("output")
    out.mkdir(exist_ok=True)
    fig, axes = plt.subplots(3, 1, figsize=(8, 7), sharex=True)
    for ax, fracs in zip(axes, [(0.0, 0.02, 0.1), (0.3, 0.6), (0.99,)]):
        for frac in fracs:
            ax.plot(records[frac].entanglement, lw=0.8, label=f"phi={frac}pi")
        ax.legend(fontsize="small")
        ax.set_ylabel("E (bits)")
    axes[-1].set_xlabel("t")
    fig.tight_layout()
    fig.savefig(out / "k8_entanglement.svg")
    print("wrote", out / "k8_entanglement.svg")
