"""Windowed power spectra of walk time series and phi sweeps over them.

Pipeline: remove the least-squares line, multiply by a tapered cosine
(Tukey) window, DFT, keep the one-sided power, normalise to unit sum.
Prominent frequencies are the bins whose power lies in the top 5 % (tier 1)
or the next 5 % (tier 2) of the non-DC bins.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .graph import Graph
from .numkernel import dft
from .observables import record_series
from .walk import InteractionScheme, initial_state

DEFAULT_ALPHA = 0.4
# series whose detrended, windowed samples never exceed this are treated as empty
EMPTY_TOL = 1e-9
TIER_FRACTIONS = (0.05, 0.10)


class SweepError(RuntimeError):
    def __init__(self, phi: float, cause: BaseException):
        super().__init__(f"sweep failed at phi={phi!r}: {cause}")
        self.phi = phi


def linear_detrend(series) -> np.ndarray:
    """Subtract the least-squares line ``a + b t`` (t = 0, 1, ...)."""
    x = np.asarray(series, dtype=float)
    if x.ndim != 1 or x.size < 2:
        raise ValueError("detrending needs at least two samples")
    t = np.arange(x.size, dtype=float)
    tc = t - t.mean()
    slope = np.dot(tc, x - x.mean()) / np.dot(tc, tc)
    return x - x.mean() - slope * tc


def tukey_window(length: int, alpha: float = DEFAULT_ALPHA) -> np.ndarray:
    """Symmetric tapered cosine window of ``length`` samples.

    Cosine lobes cover ``0 <= n <= alpha (N-1) / 2`` and the mirror-image
    stretch at the end; the middle is flat at 1.  ``alpha = 0`` gives the
    rectangular window and ``alpha = 1`` a Hann window.
    """
    if length < 2:
        raise ValueError("window length must be >= 2")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    w = np.ones(length)
    if alpha == 0.0:
        return w
    n = np.arange(length, dtype=float)
    m = length - 1
    edge = alpha * m / 2.0
    lead = n <= edge
    tail = n >= m * (1.0 - alpha / 2.0)
    w[lead] = 0.5 * (1.0 + np.cos(np.pi * (2.0 * n[lead] / (alpha * m) - 1.0)))
    w[tail] = 0.5 * (1.0 + np.cos(np.pi * (2.0 * n[tail] / (alpha * m) - 2.0 / alpha + 1.0)))
    return w


@dataclass
class PowerSpectrum:
    power: np.ndarray  # bins 0..L//2, unit sum (all zero if empty)
    length: int
    empty: bool = False

    @property
    def frequencies(self) -> np.ndarray:
        """Cycles per step for each bin."""
        return np.arange(self.power.size) / self.length


def power_spectrum(series, alpha: float = DEFAULT_ALPHA, empty_tol: float = EMPTY_TOL) -> PowerSpectrum:
    x = np.asarray(series, dtype=float)
    if x.ndim != 1 or x.size < 8:
        raise ValueError("spectral analysis needs a series of at least 8 samples")
    L = x.size
    windowed = linear_detrend(x) * tukey_window(L, alpha)
    nbins = L // 2 + 1
    if np.max(np.abs(windowed)) <= empty_tol:
        return PowerSpectrum(np.zeros(nbins), L, empty=True)
    power = np.abs(dft(windowed)[:nbins]) ** 2
    return PowerSpectrum(power / power.sum(), L)


def _top_fraction_threshold(values: np.ndarray, fraction: float) -> float:
    # nearest rank counted from the top: the ceil(fraction * n)-th largest value
    rank = max(1, math.ceil(fraction * values.size - 1e-9))
    return float(np.sort(values)[::-1][rank - 1])


def tier_bins(spec: PowerSpectrum) -> np.ndarray:
    """Tier per bin: 1, 2 or 0 (not prominent).  DC is never ranked."""
    tiers = np.zeros(spec.power.size, dtype=int)
    if spec.empty or spec.power.size < 2:
        return tiers
    amps = spec.power[1:]
    t1 = _top_fraction_threshold(amps, TIER_FRACTIONS[0])
    t2 = _top_fraction_threshold(amps, TIER_FRACTIONS[1])
    tiers[1:][amps >= t2] = 2
    tiers[1:][amps >= t1] = 1
    return tiers


def prominent_frequencies(spec: PowerSpectrum) -> list[tuple[float, int]]:
    tiers = tier_bins(spec)
    freqs = spec.frequencies
    return [(float(freqs[k]), int(tiers[k])) for k in np.flatnonzero(tiers)]


def peak_groups(spec: PowerSpectrum, max_tier: int = 1) -> int:
    """Number of runs of adjacent bins with tier in 1..max_tier.

    The tier-1 bin count is fixed by the percentile rule, so the number of
    separate peaks is the more telling complexity measure.
    """
    tiers = tier_bins(spec)
    hit = (tiers >= 1) & (tiers <= max_tier)
    return int(np.count_nonzero(hit[1:] & ~hit[:-1]) + hit[0])


@dataclass
class FeigenbaumData:
    points: list[tuple[float, float, int]] = field(default_factory=list)

    def at(self, phi: float, tier: Optional[int] = None) -> list[float]:
        return [f for p, f, t in self.points if p == phi and (tier is None or t == tier)]

    def as_array(self) -> np.ndarray:
        return np.array(self.points, dtype=float).reshape(-1, 3)


def sweep_point(
    graph: Graph,
    phi: float,
    steps: int,
    initial: str = "equal",
    seed: Optional[int] = None,
    alpha: float = DEFAULT_ALPHA,
) -> list[tuple[float, float, int]]:
    """Prominent (phi, frequency, tier) points of one entanglement series."""
    psi0 = initial_state(graph, initial, seed)
    rec = record_series(graph, InteractionScheme(phi), psi0, steps, marginals=False)
    spec = power_spectrum(rec.entanglement, alpha)
    return [(phi, f, tier) for f, tier in prominent_frequencies(spec)]


def _sweep_point_checked(args):
    graph, phi, *rest = args
    try:
        return sweep_point(graph, phi, *rest)
    except Exception as exc:
        raise SweepError(phi, exc) from exc


def feigenbaum_sweep(
    graph: Graph,
    phi_grid: Sequence[float],
    steps: int = 500,
    initial: str = "equal",
    seed: Optional[int] = None,
    alpha: float = DEFAULT_ALPHA,
    workers: int = 1,
) -> FeigenbaumData:
    """Prominent entanglement frequencies for every phi in ``phi_grid``.

    Per-phi runs are independent; with ``workers > 1`` they go to a process
    pool.  Output is sorted by (phi, frequency) either way.
    """
    phis = [float(p) for p in phi_grid]
    if not phis:
        raise ValueError("phi grid is empty")
    if steps < 8:
        raise ValueError("sweeps need steps >= 8")
    jobs = [(graph, phi, steps, initial, seed, alpha) for phi in phis]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sweep_point_checked, jobs))
    else:
        results = [_sweep_point_checked(job) for job in jobs]
    points = sorted(p for chunk in results for p in chunk)
    return FeigenbaumData([(p, f, t) for p, f, t in points])
