"""Adjacency spectra and graph energy.

Two independent routes: the closed form for disjoint unions of cliques
(integer exact) and a dense symmetric eigensolver whose output is
clustered and snapped to integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .cgraph import CommutingGraph, clique_decomposition, commuting_graph
from .groups import FiniteGroup, GroupError, centralizer_partition, is_ac_group

DEFAULT_MAX_ORACLE_VERTICES = 2000
SNAP_TOLERANCE = 1e-6


class SpectrumError(ValueError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues with multiplicities, ascending by eigenvalue."""

    entries: tuple[tuple[int | float, int], ...]
    exact: bool = True
    # largest |eigenvalue - snapped integer| seen while snapping (numeric path only)
    snap_error: float = 0.0

    def __post_init__(self):
        if any(m <= 0 for _, m in self.entries):
            raise SpectrumError(f"non-positive multiplicity in {self.entries}")

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> Spectrum:
        """Merge (eigenvalue, multiplicity) terms; zero multiplicities are dropped."""
        acc: Counter = Counter()
        for value, mult in terms:
            if mult < 0:
                raise SpectrumError(f"negative multiplicity {mult} for eigenvalue {value}")
            acc[value] += mult
        return cls(tuple(sorted((v, m) for v, m in acc.items() if m)))

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self) -> str:
        return self.render()

    def render(self) -> str:
        def fmt(v):
            return str(v) if isinstance(v, int) else f"{v:.9g}"

        return " ".join(f"({fmt(v)})^{m}" for v, m in self.entries)

    def as_dict(self) -> dict:
        return {v: m for v, m in self.entries}

    @property
    def size(self) -> int:
        return sum(m for _, m in self.entries)

    def moment(self, k: int):
        return sum(m * v**k for v, m in self.entries)

    @property
    def energy(self):
        return energy(self)


def energy(s: Spectrum):
    """Sum of |eigenvalue| with multiplicity."""
    return sum(m * abs(v) for v, m in s.entries)


def clique_union_spectrum(sizes: Iterable[int]) -> Spectrum:
    """Spectrum of K_{n_1} + ... + K_{n_l}: (-1)^(sum n_i - l) and n_i - 1 once each."""
    sizes = list(sizes)
    if not sizes:
        raise SpectrumError("empty clique list")
    if any(n < 1 for n in sizes):
        raise SpectrumError(f"clique sizes must be positive: {sizes}")
    terms = [(-1, sum(sizes) - len(sizes))] + [(n - 1, 1) for n in sizes]
    return Spectrum.from_terms(terms)


def ac_spectrum(G: FiniteGroup) -> Spectrum:
    """Spectrum of the commuting graph of an AC-group from its distinct centralizers."""
    if not is_ac_group(G):
        raise GroupError(f"{G.name} is not an AC-group")
    part = centralizer_partition(G)
    z = len(part.center)
    terms = [(-1, sum(part.sizes) - part.n * (z + 1))]
    terms += [(c - z - 1, 1) for c in part.sizes]
    return Spectrum.from_terms(terms)


def graph_spectrum(gamma: CommutingGraph) -> Spectrum:
    """Exact spectrum when the graph is a clique union, else the numeric one."""
    dec = clique_decomposition(gamma)
    if dec.is_clique_union:
        return clique_union_spectrum(dec.component_sizes)
    return numeric_spectrum(gamma)


def numeric_spectrum(gamma: CommutingGraph, *, max_vertices: int = DEFAULT_MAX_ORACLE_VERTICES) -> Spectrum:
    n = gamma.vertex_count
    if n > max_vertices:
        raise SpectrumError(f"{n} vertices exceeds the numeric oracle cap {max_vertices}")
    try:
        values = np.linalg.eigvalsh(gamma.adjacency.astype(np.float64))
    except np.linalg.LinAlgError as exc:
        raise SpectrumError(f"eigensolver failed: {exc}") from exc
    return spectrum_from_eigenvalues(values)


def spectrum_from_eigenvalues(values: np.ndarray, *, snap: float = SNAP_TOLERANCE) -> Spectrum:
    values = np.sort(np.asarray(values, dtype=np.float64))
    n = len(values)
    if n == 0:
        raise SpectrumError("no eigenvalues")
    gap = 1e-9 * max(n, 1)
    clusters: list[list[float]] = [[values[0]]]
    for v in values[1:]:
        if v - clusters[-1][-1] <= gap:
            clusters[-1].append(v)
        else:
            clusters.append([v])
    terms, exact, worst = [], True, 0.0
    for c in clusters:
        c = np.asarray(c)
        nearest = round(float(c.mean()))
        dev = float(np.max(np.abs(c - nearest)))
        if dev < snap:
            worst = max(worst, dev)
            terms.append((int(nearest), len(c)))
        else:
            exact = False
            terms.append((float(c.mean()), len(c)))
    acc: Counter = Counter()
    for v, m in terms:
        acc[v] += m
    return Spectrum(tuple(sorted(acc.items())), exact=exact, snap_error=worst)


def group_spectrum(G: FiniteGroup) -> Spectrum:
    return graph_spectrum(commuting_graph(G))
