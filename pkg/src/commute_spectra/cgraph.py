"""Commuting graphs and their decomposition into connected components."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .groups import FiniteGroup, GroupError


@dataclass(frozen=True, eq=False)
class CommutingGraph:
    """Graph on the non-central elements of ``group``.

    ``packed`` holds one bit row per vertex (``numpy.packbits`` along axis 1);
    vertices keep the group's element order.
    """

    group: FiniteGroup
    vertices: np.ndarray
    packed: np.ndarray
    complement: bool = False

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @cached_property
    def adjacency(self) -> np.ndarray:
        return np.unpackbits(self.packed, axis=1, count=self.vertex_count).astype(bool)

    @cached_property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[v])

    def dump(self) -> str:
        """Adjacency list text: vertex label then neighbour labels, tab separated."""
        labels = self.group.labels
        lines = []
        for v, x in enumerate(self.vertices):
            row = [labels[x]] + [labels[self.vertices[u]] for u in self.neighbors(v)]
            lines.append("\t".join(row))
        return "\n".join(lines) + "\n"


def _noncentral(G: FiniteGroup) -> np.ndarray:
    if G.is_abelian:
        raise GroupError(f"{G.name} is abelian: the commuting graph has no vertices")
    mask = np.ones(G.order, dtype=bool)
    mask[list(G.center)] = False
    return np.flatnonzero(mask)


def commuting_graph(G: FiniteGroup) -> CommutingGraph:
    """x ~ y iff xy = yx, on G \\ Z(G), without loops."""
    verts = _noncentral(G)
    n = len(verts)
    adj = np.empty((n, n), dtype=bool)
    for k, x in enumerate(verts):
        adj[k] = (G.row(x) == G.column(x))[verts]
    np.fill_diagonal(adj, False)
    return CommutingGraph(G, verts, np.packbits(adj, axis=1))


def non_commuting_graph(G: FiniteGroup) -> CommutingGraph:
    gamma = commuting_graph(G)
    adj = ~gamma.adjacency
    np.fill_diagonal(adj, False)
    return CommutingGraph(G, gamma.vertices, np.packbits(adj, axis=1), complement=True)


@dataclass(frozen=True)
class CliqueDecomposition:
    component_sizes: tuple[int, ...]
    is_clique_union: bool
    # component id per vertex, ids ordered by the smallest vertex they contain
    labels: tuple[int, ...] = ()


def clique_decomposition(gamma: CommutingGraph) -> CliqueDecomposition:
    adj = gamma.adjacency
    count, labels = connected_components(csr_matrix(adj), directed=False)
    sizes = np.bincount(labels, minlength=count)
    degree = adj.sum(axis=1)
    # a component of size s is complete iff each of its vertices has degree s - 1
    complete = bool(np.all(degree == sizes[labels] - 1))
    return CliqueDecomposition(tuple(sorted((int(s) for s in sizes), reverse=True)), complete, tuple(int(c) for c in labels))
