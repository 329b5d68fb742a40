"""Graph catalog and the arc (directed-edge) basis of the coined walk.

A single-particle basis state |v, c_p> is the arc ``(v, neighbors[v][p])``:
ports are numbered by ascending neighbour label, and arcs are sorted
lexicographically, which makes the arcs of one vertex a contiguous block.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Invalid graph construction or graph file."""


@dataclass(frozen=True)
class Graph:
    n: int
    neighbors: tuple[tuple[int, ...], ...]
    name: str | None = None

    def __post_init__(self):
        if self.n < 1 or len(self.neighbors) != self.n:
            raise GraphError("neighbour table does not match vertex count")
        for v, nbrs in enumerate(self.neighbors):
            if not nbrs:
                raise GraphError(f"vertex {v} is isolated")
            if any(b <= a for a, b in zip(nbrs, nbrs[1:])):
                raise GraphError(f"neighbours of {v} are not strictly ascending")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"vertex {v} has out-of-range neighbour {u}")
                if v not in self.neighbors[u]:
                    raise GraphError(f"adjacency not symmetric for ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in adj), name)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.neighbors)

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as ``(u, v)`` with ``u <= v``, sorted."""
        return [(u, v) for u, nbrs in enumerate(self.neighbors) for v in nbrs if u <= v]

    @property
    def num_edges(self) -> int:
        return len(self.edges())

    @property
    def num_self_loops(self) -> int:
        return sum(1 for v, nbrs in enumerate(self.neighbors) if v in nbrs)

    def is_connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for u in self.neighbors[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == self.n

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.neighbors[u]


@dataclass(frozen=True)
class ArcTable:
    """Ordered arcs of a graph plus the arc-reversal involution.

    ``offsets[v]:offsets[v+1]`` is the slice of arcs leaving ``v``; the
    position within that slice is the port index.
    """

    arcs: tuple[tuple[int, int], ...]
    reverse: np.ndarray
    offsets: np.ndarray

    def __len__(self) -> int:
        return len(self.arcs)

    def index(self, tail: int, head: int) -> int:
        start, stop = self.offsets[tail], self.offsets[tail + 1]
        for a in range(start, stop):
            if self.arcs[a][1] == head:
                return a
        raise KeyError((tail, head))

    @property
    def tails(self) -> np.ndarray:
        return np.array([t for t, _ in self.arcs], dtype=np.intp)


def build_arc_table(g: Graph) -> ArcTable:
    arcs = tuple((v, u) for v in range(g.n) for u in g.neighbors[v])
    lookup = {arc: i for i, arc in enumerate(arcs)}
    reverse = np.array([lookup[(h, t)] for t, h in arcs], dtype=np.intp)
    reverse.setflags(write=False)
    offsets = np.concatenate([[0], np.cumsum(g.degrees)]).astype(np.intp)
    offsets.setflags(write=False)
    return ArcTable(arcs, reverse, offsets)


def complete_graph(n: int, self_loops: bool = False) -> Graph:
    if n < 2:
        raise GraphError("complete graph needs n >= 2")
    nbrs = tuple(
        tuple(u for u in range(n) if self_loops or u != v) for v in range(n)
    )
    return Graph(n, nbrs, f"k{n}{'-loops' if self_loops else ''}")


def hypercube(dim: int) -> Graph:
    if dim < 1:
        raise GraphError("hypercube dimension must be >= 1")
    n = 1 << dim
    nbrs = tuple(tuple(sorted(v ^ (1 << b) for b in range(dim))) for v in range(n))
    return Graph(n, nbrs, f"q{dim}")


def cayley_tree(branching: int, generations: int, joined: bool = False) -> Graph:
    """Cayley tree with breadth-first labels; root is vertex 0.

    With ``joined`` the leaves are closed into one cycle in ascending label
    order, so each leaf gains two edges.
    """
    if branching < 2 or generations < 1:
        raise GraphError("cayley tree needs branching >= 2 and generations >= 1")
    edges = []
    frontier = [0]
    next_label = 1
    for gen in range(generations):
        children_per = branching if gen == 0 else branching - 1
        new_frontier = []
        for parent in frontier:
            for _ in range(children_per):
                edges.append((parent, next_label))
                new_frontier.append(next_label)
                next_label += 1
        frontier = new_frontier
    if joined:
        if len(frontier) < 3:
            raise GraphError("joining the leaves needs at least three of them")
        edges.extend(zip(frontier, frontier[1:] + frontier[:1]))
    tag = "joined" if joined else "unjoined"
    return Graph.from_edges(next_label, edges, f"{branching}ct{generations}-{tag}")


def remove_edges(
    g: Graph,
    edges: Sequence[tuple[int, int]],
    require_connected: bool = True,
    name: str | None = None,
) -> Graph:
    wanted = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in wanted:
            raise GraphError(f"edge {key} listed twice")
        if not g.has_edge(*key):
            raise GraphError(f"edge {key} is not in the graph")
        wanted.add(key)
    kept = [e for e in g.edges() if e not in wanted]
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in kept:
        adj[u].add(v)
        adj[v].add(u)
    isolated = [v for v in range(g.n) if not adj[v]]
    if isolated:
        raise GraphError(f"removal leaves isolated vertices {isolated}")
    out = Graph(g.n, tuple(tuple(sorted(s)) for s in adj), name)
    if require_connected and not out.is_connected():
        raise GraphError("removal disconnects the graph")
    return out


# Stand-in removal lists; only the removed-edge counts (10/28, 4/12) are fixed.
K8_MODIFIED_REMOVED = (
    (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (6, 7),
)
Q3_MODIFIED_REMOVED = ((0, 1), (0, 2), (3, 7), (5, 7))

CATALOG_NAMES = ("k8", "q3", "3ct2-joined", "k8-modified", "q3-modified", "3ct2-unjoined")


def catalog(name: str) -> Graph:
    if name == "k8":
        g = complete_graph(8, self_loops=False)
    elif name == "q3":
        g = hypercube(3)
    elif name == "3ct2-joined":
        g = cayley_tree(3, 2, joined=True)
    elif name == "3ct2-unjoined":
        g = cayley_tree(3, 2, joined=False)
    elif name == "k8-modified":
        g = remove_edges(complete_graph(8), K8_MODIFIED_REMOVED)
    elif name == "q3-modified":
        g = remove_edges(hypercube(3), Q3_MODIFIED_REMOVED)
    else:
        raise GraphError(f"unknown catalog graph {name!r}; known: {', '.join(CATALOG_NAMES)}")
    return Graph(g.n, g.neighbors, name)


# -- plain-text graph files ------------------------------------------------
#   n <count>
#   e <u> <v>      (u == v for a self-loop)
#   # comment


def format_graph(g: Graph) -> str:
    lines = [f"# {g.name}" if g.name else "# graph", f"n {g.n}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str, name: str | None = None) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "n" and len(parts) == 2 and n is None:
                n = int(parts[1])
            elif parts[0] == "e" and len(parts) == 3 and n is not None:
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise ValueError
        except ValueError:
            raise GraphError(f"line {lineno}: cannot parse {raw!r}") from None
    if n is None:
        raise GraphError("graph file has no 'n' line")
    seen = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
    return Graph.from_edges(n, edges, name)


def read_graph_file(path) -> Graph:
    path = Path(path)
    return parse_graph(path.read_text(), name=path.stem)


def write_graph_file(g: Graph, path) -> None:
    Path(path).write_text(format_graph(g))
