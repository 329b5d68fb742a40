"""Probabilities, reduced density matrix and entanglement entropy."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .numkernel import NumericalError, hermitian_eigenvalues
from .walk import InteractionScheme, TwoParticleState, evolve

CLAMP_WINDOW = 1e-12
BROKEN_EIGENVALUE = -1e-9


def joint_probability(state: TwoParticleState) -> np.ndarray:
    """n x n matrix with entry (i, k) = P(particle 1 at i, particle 2 at k)."""
    offsets = state.arcs.offsets[:-1]
    p = np.abs(state.amplitudes) ** 2
    return np.add.reduceat(np.add.reduceat(p, offsets, axis=0), offsets, axis=1)


def marginal_probabilities(state: TwoParticleState) -> tuple[np.ndarray, np.ndarray]:
    joint = joint_probability(state)
    return joint.sum(axis=1), joint.sum(axis=0)


def reduced_density(state: TwoParticleState) -> np.ndarray:
    """Partial trace over particle 2: ``rho[a, b] = sum_c psi[a, c] conj(psi[b, c])``."""
    psi = state.amplitudes
    return psi @ psi.conj().T


def entropy_from_eigenvalues(eigenvalues) -> float:
    """-sum lambda log2 lambda, with 0 log 0 = 0 and tiny negatives clamped."""
    lam = np.asarray(eigenvalues, dtype=float)
    if lam.size and lam.min() < BROKEN_EIGENVALUE:
        raise NumericalError(f"density matrix has eigenvalue {lam.min():.3e}")
    lam = lam[lam > 0.0]
    return float(max(0.0, -np.sum(lam * np.log2(lam))))


def entanglement_entropy(state: TwoParticleState) -> float:
    """von Neumann entropy (bits) of particle 1's reduced state."""
    return entropy_from_eigenvalues(hermitian_eigenvalues(reduced_density(state)))


@dataclass
class SeriesRecord:
    """Time series sampled at t = 0..steps."""

    entanglement: np.ndarray  # (steps + 1,)
    marginals1: np.ndarray  # (steps + 1, n)
    marginals2: np.ndarray  # (steps + 1, n)

    @property
    def t(self) -> np.ndarray:
        return np.arange(len(self.entanglement))


def record_series(
    graph: Graph,
    scheme: InteractionScheme,
    initial: TwoParticleState,
    steps: int,
    marginals: bool = True,
) -> SeriesRecord:
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if initial.graph != graph:
        raise ValueError("initial state belongs to a different graph")
    ent = np.empty(steps + 1)
    p1 = np.empty((steps + 1, graph.n)) if marginals else np.empty((0, graph.n))
    p2 = np.empty_like(p1)

    def observe(t, state):
        ent[t] = entanglement_entropy(state)
        if marginals:
            p1[t], p2[t] = marginal_probabilities(state)

    evolve(initial, scheme, steps, observe)
    return SeriesRecord(ent, p1, p2)
