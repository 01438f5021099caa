"""Simple undirected graphs with cached degree statistics, plus the
small families used as extremal cases throughout the package."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for malformed vertex/edge input or bad family parameters."""


class Graph:
    """Immutable simple graph stored as a dense boolean adjacency matrix.

    Degree statistics are computed once at construction:

    * ``n``, ``m``          -- order and size
    * ``degrees``           -- tuple of vertex degrees
    * ``min_degree``, ``max_degree``
    * ``zagreb``            -- first Zagreb index, sum of squared degrees
    """

    __slots__ = ("n", "adjacency", "m", "degrees", "min_degree", "max_degree", "zagreb", "_connected")

    def __init__(self, adjacency) -> None:
        raw = np.asarray(adjacency)
        if raw.dtype != bool and raw.size and not np.isin(raw, (0, 1)).all():
            raise GraphError("adjacency entries must be 0 or 1")
        adj = np.array(raw, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1] or adj.shape[0] < 1:
            raise GraphError(f"adjacency must be a non-empty square matrix, got shape {adj.shape}")
        if adj.diagonal().any():
            raise GraphError("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise GraphError("adjacency must be symmetric")
        adj.setflags(write=False)
        degrees = tuple(int(d) for d in adj.sum(axis=1))
        object.__setattr__(self, "n", adj.shape[0])
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "m", sum(degrees) // 2)
        object.__setattr__(self, "min_degree", min(degrees))
        object.__setattr__(self, "max_degree", max(degrees))
        object.__setattr__(self, "zagreb", sum(d * d for d in degrees))
        object.__setattr__(self, "_connected", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, degrees={self.degrees})"

    @property
    def is_regular(self) -> bool:
        return self.min_degree == self.max_degree

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, in row-major order."""
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def neighbours(self, v: int) -> list[int]:
        return [int(u) for u in np.flatnonzero(self.adjacency[v])]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``perm[i]`` of the result playing the role of vertex ``i``."""
        p = np.asarray(perm)
        if sorted(p.tolist()) != list(range(self.n)):
            raise GraphError("perm must be a permutation of range(n)")
        adj = np.zeros_like(self.adjacency)
        adj[np.ix_(p, p)] = self.adjacency
        return Graph(adj)


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from vertex pairs; duplicates collapse."""
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u, v] = adj[v, u] = True
    return Graph(adj)


def is_connected(g: Graph) -> bool:
    """Breadth-first search from vertex 0; the answer is memoised on ``g``."""
    if g._connected is None:
        object.__setattr__(g, "_connected", _bfs_reaches_all(g))
    return g._connected


def _bfs_reaches_all(g: Graph) -> bool:
    seen = np.zeros(g.n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in np.flatnonzero(g.adjacency[v] & ~seen):
            seen[u] = True
            queue.append(int(u))
    return bool(seen.all())


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    adj = np.zeros((g1.n + g2.n, g1.n + g2.n), dtype=bool)
    adj[: g1.n, : g1.n] = g1.adjacency
    adj[g1.n :, g1.n :] = g2.adjacency
    return Graph(adj)


# --- families -----------------------------------------------------------------

def complete(n: int) -> Graph:
    _positive(n=n)
    return Graph(~np.eye(n, dtype=bool))


def empty(n: int) -> Graph:
    _positive(n=n)
    return Graph(np.zeros((n, n), dtype=bool))


def complete_bipartite(a: int, b: int) -> Graph:
    _positive(a=a, b=b)
    side = np.array([0] * a + [1] * b)
    return Graph(side[:, None] != side[None, :])


def star(k: int) -> Graph:
    """The star K_{1,k}; vertex 0 is the centre."""
    return complete_bipartite(1, k)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _positive(n=n)
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def matching_union(k: int) -> Graph:
    """k disjoint copies of K2; vertices 2i and 2i+1 are paired."""
    _positive(k=k)
    return make_graph(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def petersen() -> Graph:
    """Kneser graph K(5, 2): 2-subsets of {0..4}, adjacent when disjoint."""
    subsets = list(combinations(range(5), 2))
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not set(subsets[i]) & set(subsets[j])
    ]
    return make_graph(len(subsets), edges)


def _positive(**params: int) -> None:
    for name, value in params.items():
        if not isinstance(value, (int, np.integer)) or value < 1:
            raise GraphError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class GraphFamily:
    """A named family instance, e.g. ``GraphFamily("cycle", (5,))``.

    ``parse`` accepts the ``name:param[:param]`` mini-language used on the
    command line: ``complete:4``, ``bipartite:2:3``, ``cycle:5``, ``path:4``,
    ``matching:3``, ``star:3``, ``empty:4``, ``petersen``.
    """

    kind: str
    params: tuple[int, ...] = ()

    _ARITY = {
        "complete": 1,
        "bipartite": 2,
        "cycle": 1,
        "path": 1,
        "matching": 1,
        "star": 1,
        "empty": 1,
        "petersen": 0,
    }

    def __post_init__(self) -> None:
        arity = self._ARITY.get(self.kind)
        if arity is None:
            raise GraphError(f"unknown graph family {self.kind!r}; known: {sorted(self._ARITY)}")
        if len(self.params) != arity:
            raise GraphError(f"family {self.kind!r} takes {arity} parameter(s), got {len(self.params)}")

    @classmethod
    def parse(cls, text: str) -> "GraphFamily":
        name, *rest = text.strip().split(":")
        try:
            params = tuple(int(x) for x in rest)
        except ValueError:
            raise GraphError(f"non-integer parameter in family spec {text!r}") from None
        return cls(name, params)

    @property
    def is_regular(self) -> bool:
        if self.kind == "bipartite":
            return self.params[0] == self.params[1]
        if self.kind == "path":
            return self.params[0] <= 2
        if self.kind == "star":
            return self.params[0] == 1
        return True

    def __str__(self) -> str:
        return ":".join([self.kind, *map(str, self.params)])


_BUILDERS = {
    "complete": complete,
    "bipartite": complete_bipartite,
    "cycle": cycle,
    "path": path,
    "matching": matching_union,
    "star": star,
    "empty": empty,
    "petersen": petersen,
}


def generate(family: GraphFamily | str) -> Graph:
    if isinstance(family, str):
        family = GraphFamily.parse(family)
    return _BUILDERS[family.kind](*family.params)


# --- structural predicates used to state equality characterizations ------------

def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_perfect_matching(g: Graph) -> bool:
    """True for kK2, k >= 1."""
    return g.n % 2 == 0 and all(d == 1 for d in g.degrees)


def is_balanced_complete_bipartite(g: Graph) -> bool:
    """True for K_{n/2,n/2}: the complement is two disjoint cliques of size n/2."""
    n = g.n
    if n % 2 or not all(d == n // 2 for d in g.degrees):
        return False
    comp = ~g.adjacency & ~np.eye(n, dtype=bool)
    side = comp[0] | (np.arange(n) == 0)
    if side.sum() != n // 2:
        return False
    return bool(np.array_equal(comp, (side[:, None] == side[None, :]) & ~np.eye(n, dtype=bool)))
