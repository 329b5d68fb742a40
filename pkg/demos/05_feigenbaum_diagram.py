"""
Frequency-versus-phi (Feigenbaum) diagrams
==========================================

For each phi on a grid, the entanglement series is detrended, tapered with
a Tukey window (alpha = 0.4), Fourier transformed, and the bins in the top
5 % (tier 1, black) and next 5 % (tier 2, grey) of power are kept.  Scatter
them against phi.  A 60-point grid keeps the runtime short; the CLI
default is 200.
"""

# %%
import math
from pathlib import Path

import numpy as np

from twowalk import catalog, feigenbaum_sweep

grid = np.linspace(0.0, math.pi, 60)
sweeps = {name: feigenbaum_sweep(catalog(name), grid, steps=500) for name in ("k8", "q3", "3ct2-unjoined")}
for name, data in sweeps.items():
    arr = data.as_array()
    print(f"{name:14s} {len(arr)} points; distinct tier-1 frequencies: {len(set(arr[arr[:, 2] == 1, 1]))}")

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
    fig, axes = plt.subplots(len(sweeps), 1, figsize=(7, 9), sharex=True)
    for ax, (name, data) in zip(axes, sweeps.items()):
        arr = data.as_array()
        for tier, color in ((2, "0.6"), (1, "k")):
            sel = arr[:, 2] == tier
            ax.plot(arr[sel, 0] / math.pi, arr[sel, 1], ".", ms=2, color=color)
        ax.set_title(name)
        ax.set_ylabel("cycles / step")
    axes[-1].set_xlabel("phi / pi")
    fig.tight_layout()
    fig.savefig(out / "feigenbaum.svg")
    print("wrote", out / "feigenbaum.svg")
