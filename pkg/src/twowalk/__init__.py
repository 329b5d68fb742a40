"""Interacting two-particle discrete-time quantum walks on small graphs.

Exact state-vector evolution under Grover coins with the phi-Grover
on-site interaction, entanglement/probability observables, and the
windowed power-spectrum pipeline used to build frequency-versus-phi
(Feigenbaum) diagrams.
"""

from .graph import (
    ArcTable,
    Graph,
    GraphError,
    build_arc_table,
    catalog,
    cayley_tree,
    complete_graph,
    hypercube,
    remove_edges,
)
from .observables import (
    SeriesRecord,
    entanglement_entropy,
    joint_probability,
    marginal_probabilities,
    record_series,
    reduced_density,
)
from .spectral import (
    FeigenbaumData,
    PowerSpectrum,
    feigenbaum_sweep,
    linear_detrend,
    power_spectrum,
    prominent_frequencies,
    tukey_window,
)
from .walk import (
    InteractionScheme,
    TwoParticleState,
    apply_coin,
    apply_shift,
    equal_superposition_state,
    evolve,
    grover_coin,
    random_state,
    step,
)

__version__ = "0.1.0"
