"""Finite groups on dense element indices.

Every group is produced by :func:`closure`, which runs a breadth-first
search from the identity using right multiplication by the generators.
Besides the element list this records, for each generator g, the
permutations ``y -> y*g`` and ``y -> g*y`` on indices and, for each
element, the BFS edge that discovered it.  Rows and columns of the Cayley
table can then be produced by composing permutations, and the full table
is materialised column by column when the order is small enough.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Sequence

import numpy as np

DEFAULT_MAX_ORDER = 10_000
TABLE_LIMIT = 4096
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 200
RANDOM_TRIPLES = 100_000


class GroupError(ValueError):
    pass


class FiniteGroup:
    """A finite group with elements ``0 .. order-1``; index 0 is the identity."""

    def __init__(self, name, elements, labels, multiply, generators, right, left, parent, via, table):
        self.name = name
        self.elements = elements
        self.labels = labels
        self.generators = generators
        self._multiply = multiply
        self._index = {e: i for i, e in enumerate(elements)}
        self._right = right
        self._left = left
        self._parent = parent
        self._via = via
        self.table = table

    identity = 0

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.name} of order {self.order}>"

    def index(self, element: Hashable) -> int:
        return self._index[element]

    def mul(self, a: int, b: int) -> int:
        if self.table is not None:
            return int(self.table[a, b])
        return self._index[self._multiply(self.elements[a], self.elements[b])]

    def row(self, x: int) -> np.ndarray:
        """Array of x*y over all y."""
        if self.table is not None:
            return self.table[x]
        # x = p*g  =>  x*y = p*(g*y)
        out = np.arange(self.order)
        while x != 0:
            out = self._left[self._via[x]][out]
            x = self._parent[x]
        return out

    def column(self, y: int) -> np.ndarray:
        """Array of x*y over all x."""
        if self.table is not None:
            return self.table[:, y]
        path = []
        while y != 0:
            path.append(self._via[y])
            y = self._parent[y]
        out = np.arange(self.order)
        for k in reversed(path):
            out = self._right[k][out]
        return out

    @cached_property
    def inverse(self) -> np.ndarray:
        if self.table is not None:
            return np.argmax(self.table == 0, axis=1)
        left_inv = [np.argsort(perm) for perm in self._left]
        inv = np.zeros(self.order, dtype=np.int64)
        for x in range(1, self.order):
            # (p*g)^-1 = g^-1 * p^-1; BFS order guarantees the parent is done
            inv[x] = left_inv[self._via[x]][inv[self._parent[x]]]
        return inv

    def commutes(self, a: int, b: int) -> bool:
        return self.mul(a, b) == self.mul(b, a)

    @cached_property
    def center(self) -> tuple[int, ...]:
        central = np.ones(self.order, dtype=bool)
        for r, l in zip(self._right, self._left):
            central &= r == l
        return tuple(int(i) for i in np.flatnonzero(central))

    @property
    def is_abelian(self) -> bool:
        return len(self.center) == self.order

    def centralizer(self, x: int) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.row(x) == self.column(x)))

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of conjugation by the generators, sorted by (size, smallest member)."""
        parent = list(range(self.order))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for r, l in zip(self._right, self._left):
            conj = l[np.argsort(r)]  # x -> g x g^-1
            for x, y in enumerate(conj):
                rx, ry = find(x), find(int(y))
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        classes: dict[int, list[int]] = {}
        for x in range(self.order):
            classes.setdefault(find(x), []).append(x)
        return tuple(sorted((tuple(c) for c in classes.values()), key=lambda c: (len(c), c[0])))

    @property
    def class_count(self) -> int:
        return len(self.conjugacy_classes)

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.mul(y, x)
            k += 1
        return k

    def __iter__(self):
        return iter(range(self.order))


def closure(
    generators: Sequence[Hashable],
    multiply: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
    *,
    name: str = "G",
    label: Callable[[Hashable], str] = str,
    max_order: int = DEFAULT_MAX_ORDER,
    table_limit: int = TABLE_LIMIT,
    validate: bool = True,
) -> FiniteGroup:
    """Close ``generators`` under ``multiply`` and return the resulting group.

    Elements are numbered in order of discovery starting with the identity.
    Raises GroupError if the order exceeds ``max_order`` or if the rule fails
    validation (not closed, no inverses, not associative).
    """
    gens = list(generators)
    elements = [identity]
    index = {identity: 0}
    parent, via = [-1], [-1]
    right_lists: list[list[int]] = [[] for _ in gens]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        e = elements[i]
        for k, g in enumerate(gens):
            h = multiply(e, g)
            j = index.get(h)
            if j is None:
                if len(elements) >= max_order:
                    raise GroupError(f"{name}: closure exceeds order cap {max_order}")
                j = len(elements)
                index[h] = j
                elements.append(h)
                parent.append(i)
                via.append(k)
                queue.append(j)
            right_lists[k].append(j)
    n = len(elements)
    right = [np.asarray(r, dtype=np.int64) for r in right_lists]
    left = []
    for g in gens:
        try:
            left.append(np.fromiter((index[multiply(g, e)] for e in elements), dtype=np.int64, count=n))
        except KeyError:
            raise GroupError(f"{name}: multiplication rule is not closed on the generated set") from None
    table = None
    if n <= table_limit:
        dtype = np.int16 if n < 2**15 else np.int32
        table = np.empty((n, n), dtype=dtype)
        table[:, 0] = np.arange(n)
        for j in range(1, n):
            table[:, j] = right[via[j]][table[:, parent[j]]]
    group = FiniteGroup(
        name,
        tuple(elements),
        tuple(label(e) for e in elements),
        multiply,
        tuple(index[g] for g in gens),
        right,
        left,
        tuple(parent),
        tuple(via),
        table,
    )
    if validate:
        _validate(group)
    return group


def _validate(G: FiniteGroup) -> None:
    n = G.order
    rng = np.random.default_rng(0)
    if G._multiply(G.elements[0], G.elements[0]) != G.elements[0]:
        raise GroupError(f"{G.name}: supplied identity is not idempotent")
    for perm in G._right + G._left:
        if len(np.unique(perm)) != n:
            raise GroupError(f"{G.name}: a generator does not act as a permutation (no inverse)")
    if G.table is None:
        triples = rng.integers(0, n, size=(2000, 3))
        for a, b, c in triples:
            a, b, c = int(a), int(b), int(c)
            if G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)):
                raise GroupError(f"{G.name}: multiplication is not associative")
        return
    T = G.table.astype(np.int64)
    if not (np.array_equal(T[0], np.arange(n)) and np.array_equal(T[:, 0], np.arange(n))):
        raise GroupError(f"{G.name}: identity row/column is not the identity permutation")
    if not np.all(np.sort(T, axis=1) == np.arange(n)):
        raise GroupError(f"{G.name}: Cayley table rows are not permutations")
    # table entries against the representation
    if n * n <= 4096:
        pairs = [(a, b) for a in range(n) for b in range(n)]
    else:
        pairs = rng.integers(0, n, size=(4096, 2))
    for a, b in pairs:
        a, b = int(a), int(b)
        if G._index.get(G._multiply(G.elements[a], G.elements[b])) != T[a, b]:
            raise GroupError(f"{G.name}: multiplication is not associative (table disagrees with rule)")
    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
        T32 = T.astype(np.int32)
        lhs = T32[T32]  # [a, b, c] -> (a*b)*c
        rhs = T32[np.arange(n)[:, None, None], T32[None, :, :]]  # a*(b*c)
        ok = np.array_equal(lhs, rhs)
    else:
        a, b, c = rng.integers(0, n, size=(3, RANDOM_TRIPLES))
        ok = np.array_equal(T[T[a, b], c], T[a, T[b, c]])
    if not ok:
        raise GroupError(f"{G.name}: multiplication is not associative")


@dataclass(frozen=True)
class CentralizerPartition:
    center: tuple[int, ...]
    centralizers: tuple[tuple[int, ...], ...]
    count_total: int
    # centralizer of every non-central element, index into ``centralizers``
    assignment: dict[int, int]

    @property
    def n(self) -> int:
        return len(self.centralizers)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.centralizers)


def centralizer_partition(G: FiniteGroup) -> CentralizerPartition:
    """Distinct centralizers of non-central elements, sorted by (size, members)."""
    if G.is_abelian:
        raise GroupError(f"{G.name} is abelian: no non-central elements")
    center = set(G.center)
    found: dict[tuple[int, ...], list[int]] = {}
    for x in range(G.order):
        if x in center:
            continue
        found.setdefault(G.centralizer(x), []).append(x)
    ordered = sorted(found, key=lambda c: (len(c), c))
    pos = {c: i for i, c in enumerate(ordered)}
    assignment = {x: pos[c] for c, xs in found.items() for x in xs}
    return CentralizerPartition(G.center, tuple(ordered), len(ordered) + 1, assignment)


def centralizer_count(G: FiniteGroup) -> int:
    """|Cent(G)|; 1 for abelian groups."""
    return 1 if G.is_abelian else centralizer_partition(G).count_total


def is_abelian_subset(G: FiniteGroup, subset: Sequence[int]) -> bool:
    idx = np.asarray(subset)
    for x in subset:
        if not np.array_equal(G.row(x)[idx], G.column(x)[idx]):
            return False
    return True


def is_ac_group(G: FiniteGroup) -> bool:
    """True iff the centralizer of every non-central element is abelian."""
    part = centralizer_partition(G)
    return all(is_abelian_subset(G, c) for c in part.centralizers)


def noncentral_centralizer_sum(G: FiniteGroup) -> tuple[int, int]:
    """Both sides of sum_{g not central} |C(g)| == |G| (k(G) - |Z(G)|)."""
    center = set(G.center)
    lhs = sum(len(G.centralizer(x)) for x in range(G.order) if x not in center)
    return lhs, G.order * (G.class_count - len(center))


def direct_product(G: FiniteGroup, A: FiniteGroup, *, name: str | None = None, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if G.order * A.order > max_order:
        raise GroupError(f"product order {G.order * A.order} exceeds cap {max_order}")

    def multiply(x, y):
        return (G.mul(x[0], y[0]), A.mul(x[1], y[1]))

    gens = [(g, 0) for g in G.generators] + [(0, a) for a in A.generators]
    return closure(
        gens,
        multiply,
        (0, 0),
        name=name or f"{G.name}x{A.name}",
        label=lambda x: f"({G.labels[x[0]]},{A.labels[x[1]]})",
        max_order=max_order,
    )


def quotient_by_center(G: FiniteGroup) -> FiniteGroup:
    """G/Z(G) with cosets represented by their smallest member."""
    Z = np.asarray(G.center)
    rep = np.empty(G.order, dtype=np.int64)
    for x in range(G.order):
        rep[x] = G.row(x)[Z].min()

    def multiply(a, b):
        return int(rep[G.mul(a, b)])

    gens = sorted({int(rep[g]) for g in G.generators})
    return closure(gens, multiply, 0, name=f"{G.name}/Z", label=lambda c: f"{G.labels[c]}Z")


def order_profile(G: FiniteGroup) -> dict[int, int]:
    """Multiset of element orders as {order: count}."""
    out: dict[int, int] = {}
    for x in range(G.order):
        k = G.element_order(x)
        out[k] = out.get(k, 0) + 1
    return dict(sorted(out.items()))
