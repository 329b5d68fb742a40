"""Two-particle coined walk: Grover coins, phi-Grover interaction, flip-flop shift.

The state is held as an ``A x A`` complex matrix ``psi[a1, a2]`` over pairs
of arcs (particle 1 first), so the flat basis index is ``a1 * A + a2``.
Because the arcs leaving a vertex are contiguous, the coin block for
positions (i, k) is the sub-matrix ``psi[arcs(i), arcs(k)]`` in exactly the
row-major order |c1,c1>, |c1,c2>, ..., and ``G(d_i) (x) G(d_k)`` acting on it
is ``G(d_i) @ block @ G(d_k).T``.  All blocks at once is therefore
``Gb @ psi @ Gb.T`` with ``Gb`` the block-diagonal single-particle coin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .graph import ArcTable, Graph, build_arc_table


@dataclass(frozen=True)
class InteractionScheme:
    """phi-Grover interaction: phase ``exp(i phi)`` on the coin when both
    particles sit on the same vertex."""

    phi: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.phi):
            raise ValueError(f"phi must be finite, got {self.phi}")

    @property
    def phase(self) -> complex:
        return complex(math.cos(self.phi), math.sin(self.phi))


@dataclass(frozen=True, eq=False)
class TwoParticleState:
    graph: Graph
    arcs: ArcTable
    amplitudes: np.ndarray  # (A, A) complex128

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    @property
    def vector(self) -> np.ndarray:
        """Flat amplitude vector of length A**2 (index ``a1 * A + a2``)."""
        return self.amplitudes.reshape(-1)

    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def with_amplitudes(self, amplitudes: np.ndarray) -> "TwoParticleState":
        return TwoParticleState(self.graph, self.arcs, amplitudes)

    def swapped(self) -> "TwoParticleState":
        """Exchange the roles of the two particles."""
        return self.with_amplitudes(self.amplitudes.T.copy())


def grover_coin(d: int) -> np.ndarray:
    """d x d Grover coin, entries ``2/d - delta``."""
    if d < 1:
        raise ValueError("Grover coin dimension must be >= 1")
    return np.full((d, d), 2.0 / d) - np.eye(d)


@lru_cache(maxsize=64)
def _arc_table(g: Graph) -> ArcTable:
    return build_arc_table(g)


@lru_cache(maxsize=64)
def _coin_structure(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    arcs = _arc_table(g)
    A = len(arcs)
    coin = np.zeros((A, A))
    for v, d in enumerate(g.degrees):
        s = slice(arcs.offsets[v], arcs.offsets[v + 1])
        coin[s, s] = grover_coin(d)
    tails = arcs.tails
    same_vertex = tails[:, None] == tails[None, :]
    coin.setflags(write=False)
    same_vertex.setflags(write=False)
    return coin, same_vertex


class Propagator:
    """Precomputed one-step evolution for a fixed graph and interaction."""

    def __init__(self, graph: Graph, scheme: InteractionScheme):
        self.graph = graph
        self.scheme = scheme
        self.arcs = _arc_table(graph)
        self.coin, same_vertex = _coin_structure(graph)
        self.coin_t = np.ascontiguousarray(self.coin.T)
        self.reverse = self.arcs.reverse
        # the phase is scalar per block, so it can be applied after G(x)G
        self.phase = np.where(same_vertex, scheme.phase, 1.0 + 0.0j) if scheme.phi != 0.0 else None

    def coin_step(self, psi: np.ndarray) -> np.ndarray:
        out = self.coin @ psi @ self.coin_t
        if self.phase is not None:
            out *= self.phase
        return out

    def shift_step(self, psi: np.ndarray) -> np.ndarray:
        # new[r(a1), r(a2)] = old[a1, a2]; r is an involution
        r = self.reverse
        return psi[r][:, r]

    def __call__(self, psi: np.ndarray) -> np.ndarray:
        return self.shift_step(self.coin_step(psi))


def apply_coin(state: TwoParticleState, scheme: InteractionScheme) -> TwoParticleState:
    return state.with_amplitudes(Propagator(state.graph, scheme).coin_step(state.amplitudes))


def apply_shift(state: TwoParticleState) -> TwoParticleState:
    r = state.arcs.reverse
    return state.with_amplitudes(state.amplitudes[r][:, r])


def step(state: TwoParticleState, scheme: InteractionScheme) -> TwoParticleState:
    """One step ``S (1 (x) C)``: coin first, then shift."""
    return state.with_amplitudes(Propagator(state.graph, scheme)(state.amplitudes))


def evolve(
    state: TwoParticleState,
    scheme: InteractionScheme,
    steps: int,
    observer: Optional[Callable[[int, TwoParticleState], None]] = None,
) -> TwoParticleState:
    """Apply ``steps`` steps; ``observer(t, state)`` sees t = 0, 1, ..., steps."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    prop = Propagator(state.graph, scheme)
    psi = state.amplitudes
    if observer is not None:
        observer(0, state)
    for t in range(1, steps + 1):
        psi = prop(psi)
        if observer is not None:
            observer(t, state.with_amplitudes(psi))
    return state.with_amplitudes(psi)


# -- initial states ----------------------------------------------------------


def equal_superposition_state(g: Graph) -> TwoParticleState:
    """Amplitude ``1 / (N sqrt(d_i d_k))`` on every basis state."""
    arcs = _arc_table(g)
    deg = np.asarray(g.degrees, dtype=float)[arcs.tails]
    single = 1.0 / np.sqrt(deg)
    amps = np.outer(single, single).astype(np.complex128) / g.n
    return TwoParticleState(g, arcs, amps)


def random_state(g: Graph, seed: int) -> TwoParticleState:
    """Real amplitudes drawn i.i.d. uniform on [0, 1), then normalised.

    Uses numpy's PCG64 generator (``default_rng(seed)``), filling the
    ``A x A`` matrix in row-major order.
    """
    arcs = _arc_table(g)
    A = len(arcs)
    rng = np.random.default_rng(seed)
    amps = rng.uniform(0.0, 1.0, size=(A, A))
    amps /= np.linalg.norm(amps)
    return TwoParticleState(g, arcs, amps.astype(np.complex128))


def product_state(g: Graph, u, w=None) -> TwoParticleState:
    """Product state ``u (x) w`` from single-particle arc vectors (normalised)."""
    arcs = _arc_table(g)
    u = np.asarray(u, dtype=np.complex128)
    w = u if w is None else np.asarray(w, dtype=np.complex128)
    if u.shape != (len(arcs),) or w.shape != (len(arcs),):
        raise ValueError(f"single-particle vectors must have length {len(arcs)}")
    u = u / np.linalg.norm(u)
    w = w / np.linalg.norm(w)
    return TwoParticleState(g, arcs, np.outer(u, w))


def basis_state(g: Graph, arc1: int, arc2: int) -> TwoParticleState:
    arcs = _arc_table(g)
    A = len(arcs)
    amps = np.zeros((A, A), dtype=np.complex128)
    amps[arc1, arc2] = 1.0
    return TwoParticleState(g, arcs, amps)


def initial_state(g: Graph, kind: str = "equal", seed: Optional[int] = None) -> TwoParticleState:
    if kind == "equal":
        return equal_superposition_state(g)
    if kind == "random":
        if seed is None:
            raise ValueError("a seed is required for a random initial state")
        return random_state(g, seed)
    raise ValueError(f"unknown initial state kind {kind!r}")
