"""Slow, definition-level reference computations used only by the tests.

Nothing here shares code with the package's evolution or observable paths
beyond the Graph container itself.
"""

import numpy as np


def dft_direct(x):
    x = np.asarray(x, dtype=complex)
    L = x.size
    n = np.arange(L)
    return np.array([np.sum(x * np.exp(-2j * np.pi * k * n / L)) for k in range(L)])


def charpoly(m):
    """Characteristic polynomial coefficients (highest first) by Faddeev-LeVerrier."""
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    coeffs = [1.0 + 0j]
    mk = np.zeros_like(m)
    for k in range(1, n + 1):
        mk = m @ mk + coeffs[-1] * np.eye(n)
        coeffs.append(-np.trace(m @ mk) / k)
    return np.real(np.array(coeffs))


def bracketed_roots(coeffs, lo, hi, samples=200001, iters=200):
    """Real roots of a polynomial on [lo, hi] by sign-change bracketing + bisection."""
    xs = np.linspace(lo, hi, samples)
    ys = np.polyval(coeffs, xs)
    roots = []
    for i in np.flatnonzero(np.sign(ys[:-1]) * np.sign(ys[1:]) <= 0):
        a, b = xs[i], xs[i + 1]
        fa = np.polyval(coeffs, a)
        if fa == 0.0:
            roots.append(a)
            continue
        for _ in range(iters):
            mid = 0.5 * (a + b)
            fm = np.polyval(coeffs, mid)
            if np.sign(fm) == np.sign(fa):
                a, fa = mid, fm
            else:
                b = mid
        roots.append(0.5 * (a + b))
    # adjacent brackets can catch the same root at a grid point
    out = []
    for r in roots:
        if not out or abs(r - out[-1]) > 1e-9:
            out.append(r)
    return np.array(out)


def arc_list(g):
    return [(v, u) for v in range(g.n) for u in g.neighbors[v]]


def grover(d):
    g = np.empty((d, d))
    for i in range(d):
        for j in range(d):
            g[i, j] = 2.0 / d - (1.0 if i == j else 0.0)
    return g


def dense_single_operator(g):
    """A x A single-particle walk operator S1 C1 built entry by entry."""
    arcs = arc_list(g)
    A = len(arcs)
    pos = {a: i for i, a in enumerate(arcs)}
    C = np.zeros((A, A))
    for v in range(g.n):
        d = len(g.neighbors[v])
        G = grover(d)
        for p in range(d):
            for q in range(d):
                C[pos[(v, g.neighbors[v][p])], pos[(v, g.neighbors[v][q])]] = G[p, q]
    S = np.zeros((A, A))
    for (t, h), i in pos.items():
        S[pos[(h, t)], i] = 1.0
    return S @ C


def dense_two_particle_operator(g, phi):
    """Explicit A^2 x A^2 matrix of S (1 (x) C) for the phi-Grover walk.

    Coin blocks are assembled per vertex pair with np.kron in the listing
    order |c1,c1>, |c1,c2>, ...; the shift sends (v->u, w->x) to (u->v, x->w).
    """
    arcs = arc_list(g)
    A = len(arcs)
    pos = {a: i for i, a in enumerate(arcs)}
    dim = A * A
    C = np.zeros((dim, dim), dtype=complex)
    for i in range(g.n):
        for k in range(g.n):
            di, dk = len(g.neighbors[i]), len(g.neighbors[k])
            idx = [
                pos[(i, g.neighbors[i][j])] * A + pos[(k, g.neighbors[k][l])]
                for j in range(di)
                for l in range(dk)
            ]
            block = np.kron(grover(di), grover(dk)).astype(complex)
            if i == k:
                block = block * np.exp(1j * phi)
            C[np.ix_(idx, idx)] = block
    S = np.zeros((dim, dim))
    for (t1, h1), a1 in pos.items():
        for (t2, h2), a2 in pos.items():
            S[pos[(h1, t1)] * A + pos[(h2, t2)], a1 * A + a2] = 1.0
    return S @ C


def brute_partial_trace(vec, A):
    """rho_1 from the full projector |psi><psi| by explicit summation."""
    vec = np.asarray(vec, dtype=complex)
    full = np.outer(vec, vec.conj())
    rho = np.zeros((A, A), dtype=complex)
    for a in range(A):
        for b in range(A):
            s = 0.0j
            for c in range(A):
                s += full[a * A + c, b * A + c]
            rho[a, b] = s
    return rho


def entropy_dense(vec, A):
    """Entropy via full projector -> partial trace -> numpy eigvals (general solver)."""
    rho = brute_partial_trace(vec, A)
    lam = np.real(np.linalg.eigvals(rho))
    lam = lam[lam > 1e-15]
    return float(-np.sum(lam * np.log2(lam)))


def path_graph(n):
    from twowalk.graph import Graph

    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"path{n}")
