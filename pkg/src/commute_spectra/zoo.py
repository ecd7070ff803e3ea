"""Constructors for the group families whose commuting graphs are studied here.

Each family is reduced to a hashable element representation plus a
multiplication rule and handed to :func:`commute_spectra.groups.closure`.

* two-generator metacyclic presentations (dihedral, dicyclic, quasidihedral,
  M_2mn, U_6n, Sz(2), pq, two of the order-16 groups) use the normal form
  ``a^i b^j`` with ``b a b^-1 = a^r`` and ``b^N = a^s``;
* matrix families work on tuples of field-element indices;
* the two order-16 groups that are not metacyclic are obtained from their
  presentations by coset enumeration (sympy) and realised as permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from . import gf
from .groups import DEFAULT_MAX_ORDER, FiniteGroup, GroupError, closure, direct_product

ORDER16_NAMES = ("Z2xD8", "Z2xQ8", "M16", "Z4rZ4", "D8sZ4", "SG16_3")

FAMILIES = (
    "Dihedral",
    "Dicyclic",
    "Quasidihedral",
    "Metacyclic",
    "U6n",
    "Sz2",
    "GL2",
    "PSL2",
    "HanakiTheta",
    "HanakiP",
    "PQ",
    "Order16",
    "Cyclic",
    "Abelian",
    "Sym",
    "Product",
)


class SpecError(ValueError):
    """A family parameter violates the family's constraints."""


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SpecError(f"unknown family {self.family!r}")

    def __str__(self) -> str:
        f, p = self.family, self.params
        simple = {
            "Dihedral": lambda: f"D({2 * p[0]})",
            "Dicyclic": lambda: f"Q({4 * p[0]})",
            "Quasidihedral": lambda: f"QD({2 ** p[0]})",
            "Metacyclic": lambda: f"M({p[0]},{p[1]})",
            "U6n": lambda: f"U6({p[0]})",
            "Sz2": lambda: "Sz2",
            "GL2": lambda: f"GL2({p[0]})",
            "PSL2": lambda: f"PSL2({p[0]})",
            "HanakiTheta": lambda: f"ATheta({p[0]})",
            "HanakiP": lambda: f"AP({p[0]},{p[1]})",
            "PQ": lambda: f"PQ({p[0]},{p[1]})",
            "Order16": lambda: f"G16({p[0]})",
            "Cyclic": lambda: f"Z({p[0]})",
            "Abelian": lambda: "x".join(f"Z({n})" for n in p),
            "Sym": lambda: f"S({p[0]})",
            "Product": lambda: f"{p[0]}x{p[1]}",
        }
        return simple[f]()


# short constructors, mostly for tests and scripts
def Dihedral(m): return FamilySpec("Dihedral", (m,))
def Dicyclic(m): return FamilySpec("Dicyclic", (m,))
def Quasidihedral(n): return FamilySpec("Quasidihedral", (n,))
def Metacyclic(m, n): return FamilySpec("Metacyclic", (m, n))
def U6n(n): return FamilySpec("U6n", (n,))
def Sz2(): return FamilySpec("Sz2")
def GL2(q): return FamilySpec("GL2", (q,))
def PSL2(q): return FamilySpec("PSL2", (q,))
def HanakiTheta(n): return FamilySpec("HanakiTheta", (n,))
def HanakiP(n, p): return FamilySpec("HanakiP", (n, p))
def PQ(p, q): return FamilySpec("PQ", (p, q))
def Order16(name): return FamilySpec("Order16", (name,))
def Cyclic(n): return FamilySpec("Cyclic", (n,))
def Abelian(*ns): return FamilySpec("Abelian", tuple(ns))
def Sym(n): return FamilySpec("Sym", (n,))
def Product(a, b): return FamilySpec("Product", (a, b))


def _log2_exact(q: int) -> int | None:
    k = q.bit_length() - 1
    return k if q == 1 << k else None


def validate(spec: FamilySpec) -> None:
    """Raise SpecError if the parameters violate the family constraints."""
    f, p = spec.family, spec.params

    def need(cond, msg):
        if not cond:
            raise SpecError(f"{f}: {msg}")

    arity = {"Metacyclic": 2, "HanakiP": 2, "PQ": 2, "Product": 2, "Sz2": 0}.get(f, 1)
    if f != "Abelian":
        need(len(p) == arity, f"expected {arity} parameter(s), got {len(p)}")
    if f == "Product":
        validate(p[0])
        validate(p[1])
        return
    if f == "Order16":
        need(p[0] in ORDER16_NAMES, f"unknown order-16 group {p[0]!r}; choose from {', '.join(ORDER16_NAMES)}")
        return
    need(all(isinstance(x, int) for x in p), "parameters must be integers")
    if f == "Dihedral":
        need(p[0] >= 2, "requires m >= 2 (order >= 4)")
    elif f == "Dicyclic":
        need(p[0] >= 2, "requires m >= 2 (order >= 8)")
    elif f == "Quasidihedral":
        need(p[0] >= 4, "quasidihedral requires order >= 16 (n >= 4)")
    elif f == "Metacyclic":
        need(p[0] > 2, "requires m > 2")
        need(p[1] >= 1, "requires n >= 1")
    elif f == "U6n":
        need(p[0] >= 1, "requires n >= 1")
    elif f == "GL2":
        try:
            gf.prime_power(p[0])
        except gf.FieldError:
            raise SpecError(f"GL2: q = {p[0]} is not a prime power") from None
        need(p[0] > 2, "requires q > 2")
    elif f == "PSL2":
        k = _log2_exact(p[0])
        need(k is not None and k >= 2, f"requires q = 2^k with k >= 2, got {p[0]}")
    elif f == "HanakiTheta":
        need(p[0] >= 2, "requires n >= 2")
    elif f == "HanakiP":
        need(p[0] >= 1, "requires n >= 1")
        need(gf.is_prime(p[1]), f"p = {p[1]} is not prime")
    elif f == "PQ":
        need(gf.is_prime(p[0]) and gf.is_prime(p[1]), "p and q must be prime")
        need((p[1] - 1) % p[0] == 0, f"requires p | q-1, got p={p[0]}, q={p[1]}")
    elif f in ("Cyclic", "Sym"):
        need(p[0] >= 1, "requires n >= 1")
    elif f == "Abelian":
        need(len(p) >= 1 and all(x >= 1 for x in p), "requires positive cyclic factor orders")


def expected_order(spec: FamilySpec) -> int:
    validate(spec)
    f, p = spec.family, spec.params
    if f == "Dihedral":
        return 2 * p[0]
    if f == "Dicyclic":
        return 4 * p[0]
    if f == "Quasidihedral":
        return 2 ** p[0]
    if f == "Metacyclic":
        return 2 * p[0] * p[1]
    if f == "U6n":
        return 6 * p[0]
    if f == "Sz2":
        return 20
    if f == "GL2":
        q = p[0]
        return (q * q - 1) * (q * q - q)
    if f == "PSL2":
        q = p[0]
        return q * (q * q - 1)
    if f == "HanakiTheta":
        return 2 ** (2 * p[0])
    if f == "HanakiP":
        return p[1] ** (3 * p[0])
    if f == "PQ":
        return p[0] * p[1]
    if f == "Order16":
        return 16
    if f == "Cyclic":
        return p[0]
    if f == "Abelian":
        out = 1
        for n in p:
            out *= n
        return out
    if f == "Sym":
        out = 1
        for k in range(2, p[0] + 1):
            out *= k
        return out
    return expected_order(p[0]) * expected_order(p[1])


def construct(spec: FamilySpec, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Build the group described by ``spec``; raises SpecError or GroupError."""
    size = expected_order(spec)
    if size > max_order:
        raise GroupError(f"{spec}: order {size} exceeds cap {max_order}")
    return _construct(spec, max_order)


@lru_cache(maxsize=64)
def _construct(spec: FamilySpec, max_order: int) -> FiniteGroup:
    f, p = spec.family, spec.params
    name = str(spec)
    if f == "Dihedral":
        return metacyclic_group(p[0], 2, -1, 0, name=name, letters="rs")
    if f == "Dicyclic":
        m = p[0]
        return metacyclic_group(2 * m, 2, -1, m, name=name)
    if f == "Quasidihedral":
        n = p[0]
        return metacyclic_group(2 ** (n - 1), 2, 2 ** (n - 2) - 1, 0, name=name)
    if f == "Metacyclic":
        m, n = p
        return metacyclic_group(m, 2 * n, -1, 0, name=name)
    if f == "U6n":
        # a^{-1} b a = b^{-1} with <b> normal of order 3; normal form b^i a^j
        return metacyclic_group(3, 2 * p[0], -1, 0, name=name, letters="ba")
    if f == "Sz2":
        # b^{-1} a b = a^2  <=>  b a b^{-1} = a^3 (mod 5)
        return metacyclic_group(5, 4, 3, 0, name=name)
    if f == "PQ":
        pp, q = p
        return metacyclic_group(q, pp, pq_twist(pp, q), 0, name=name)
    if f == "GL2":
        return gl2(p[0], name=name)
    if f == "PSL2":
        return sl2_char2(p[0], name=name)
    if f == "HanakiTheta":
        return hanaki_theta(p[0], name=name)
    if f == "HanakiP":
        return hanaki_p(p[0], p[1], name=name)
    if f == "Order16":
        return order16(p[0])
    if f == "Cyclic":
        return abelian_group((p[0],), name=name)
    if f == "Abelian":
        return abelian_group(p, name=name)
    if f == "Sym":
        return symmetric_group(p[0], name=name)
    return direct_product(
        _construct(p[0], max_order), _construct(p[1], max_order), name=name, max_order=max_order
    )


def _power_label(letter: str, k: int) -> str:
    if k == 0:
        return ""
    return letter if k == 1 else f"{letter}^{k}"


def metacyclic_group(M: int, N: int, r: int, s: int, *, name: str, letters: str = "ab") -> FiniteGroup:
    """<a, b | a^M = 1, b^N = a^s, b a b^-1 = a^r> on normal forms a^i b^j."""
    r %= M
    if gcd(r, M) != 1 or pow(r, N, M) != 1 % M or (r * s - s) % M:
        raise GroupError(f"{name}: inconsistent metacyclic data M={M}, N={N}, r={r}, s={s}")
    twist = [pow(r, j, M) for j in range(N)]

    def multiply(x, y):
        i, j = x
        k, l = y
        a = (i + k * twist[j]) % M
        t = j + l
        if t >= N:
            a = (a + s) % M
            t -= N
        return (a, t)

    A, B = letters

    def label(x):
        return (_power_label(A, x[0]) + _power_label(B, x[1])) or "e"

    return closure([(1 % M, 0), (0, 1 % N)], multiply, (0, 0), name=name, label=label)


def pq_twist(p: int, q: int) -> int:
    """Smallest t in Z_q^* of multiplicative order exactly p."""
    for t in range(2, q):
        if pow(t, p, q) == 1:
            return t
    raise SpecError(f"no element of order {p} modulo {q}")


def primitive_element(F: gf.Field) -> int:
    for a in range(1, F.order):
        k, y = 1, a
        while y != 1:
            y = F.mul(y, a)
            k += 1
        if k == F.order - 1:
            return a
    raise gf.FieldError("no primitive element")  # pragma: no cover


def _matrix_group(F: gf.Field, generators, *, name: str) -> FiniteGroup:
    add = F.add_table.tolist()
    mul = F.mul_table.tolist()

    def multiply(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (
            add[mul[a][e]][mul[b][g]],
            add[mul[a][f]][mul[b][h]],
            add[mul[c][e]][mul[d][g]],
            add[mul[c][f]][mul[d][h]],
        )

    def label(x):
        return "[{},{};{},{}]".format(*x)

    return closure(generators, multiply, (1, 0, 0, 1), name=name, label=label)


def gl2(q: int, *, name: str | None = None) -> FiniteGroup:
    """GL(2, q) from a diagonal, a transvection and the coordinate swap."""
    F = gf.GF(*gf.prime_power(q))
    w = primitive_element(F)
    gens = [(w, 0, 0, 1), (1, 1, 0, 1), (0, 1, 1, 0)]
    return _matrix_group(F, gens, name=name or f"GL2({q})")


def sl2_char2(q: int, *, name: str | None = None) -> FiniteGroup:
    """SL(2, 2^k), which equals PSL(2, 2^k) since its center is trivial."""
    F = gf.GF(*gf.prime_power(q))
    if F.p != 2:
        raise GroupError("sl2_char2 needs characteristic 2")
    w = primitive_element(F)
    gens = [(1, 1, 0, 1), (1, 0, 1, 1), (w, 0, 0, F.inv(w))]
    return _matrix_group(F, gens, name=name or f"PSL2({q})")


def _basis(F: gf.Field) -> list[int]:
    return [F.p**i for i in range(F.n)]


def hanaki_theta(n: int, *, name: str | None = None) -> FiniteGroup:
    """A(n, theta): U(a,b) U(a',b') = U(a+a', b+b'+a' theta(a)) over GF(2^n)."""
    F = gf.GF(2, n)
    add = F.add_table.tolist()
    mul = F.mul_table.tolist()
    frob = [F.frobenius(a) for a in range(F.order)]

    def multiply(x, y):
        a, b = x
        a2, b2 = y
        return (add[a][a2], add[add[b][b2]][mul[a2][frob[a]]])

    gens = [(e, 0) for e in _basis(F)] + [(0, e) for e in _basis(F)]
    return closure(gens, multiply, (0, 0), name=name or f"ATheta({n})", label=lambda x: "U({},{})".format(*x))


def hanaki_p(n: int, p: int, *, name: str | None = None) -> FiniteGroup:
    """A(n, p): V(a,b,c) V(a',b',c') = V(a+a', b+b'+c a', c+c') over GF(p^n)."""
    F = gf.GF(p, n)
    add = F.add_table.tolist()
    mul = F.mul_table.tolist()

    def multiply(x, y):
        a, b, c = x
        a2, b2, c2 = y
        return (add[a][a2], add[add[b][b2]][mul[c][a2]], add[c][c2])

    basis = _basis(F)
    gens = [(e, 0, 0) for e in basis] + [(0, e, 0) for e in basis] + [(0, 0, e) for e in basis]
    return closure(gens, multiply, (0, 0, 0), name=name or f"AP({n},{p})", label=lambda x: "V({},{},{})".format(*x))


def abelian_group(orders, *, name: str) -> FiniteGroup:
    orders = tuple(orders)

    def multiply(x, y):
        return tuple((u + v) % n for u, v, n in zip(x, y, orders))

    gens = []
    for i, n in enumerate(orders):
        g = [0] * len(orders)
        g[i] = 1 % n
        gens.append(tuple(g))
    label = (lambda x: str(x[0])) if len(orders) == 1 else (lambda x: "(" + ",".join(map(str, x)) + ")")
    return closure(gens, multiply, tuple(0 for _ in orders), name=name, label=label)


def symmetric_group(n: int, *, name: str | None = None) -> FiniteGroup:
    def multiply(x, y):
        return tuple(x[i] for i in y)

    ident = tuple(range(n))
    gens = []
    if n >= 2:
        gens.append((1, 0) + ident[2:])
    if n >= 3:
        gens.append(ident[1:] + (0,))
    return closure(gens, multiply, ident, name=name or f"S({n})", label=lambda x: "".join(str(i + 1) for i in x))


def presentation_group(letters: str, relators: list[str], *, name: str) -> FiniteGroup:
    """Finite group from a presentation, via sympy coset enumeration.

    Relators are words in ``letters`` with upper case denoting inverses,
    e.g. ``"abAB"`` for the commutator of a and b.
    """
    from sympy.combinatorics.fp_groups import FpGroup
    from sympy.combinatorics.free_groups import free_group

    F, *syms = free_group(" ".join(letters))
    sym = dict(zip(letters, syms))

    def word(w):
        out = F.identity
        for ch in w:
            out = out * (sym[ch.lower()] ** (-1 if ch.isupper() else 1))
        return out

    C = FpGroup(F, [word(w) for w in relators]).coset_enumeration([])
    C.compress()
    C.standardize()
    perms = [tuple(row[2 * k] for row in C.table) for k in range(len(letters))]

    def multiply(x, y):
        # right action: c . (xy) = (c . x) . y
        return tuple(y[c] for c in x)

    ident = tuple(range(len(C.table)))
    words = _bfs_words(perms, multiply, ident, letters)
    return closure(perms, multiply, ident, name=name, label=words.__getitem__)


def _bfs_words(gens, multiply, ident, letters) -> dict:
    from collections import deque

    words = {ident: ""}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g, ch in zip(gens, letters):
            y = multiply(x, g)
            if y not in words:
                words[y] = words[x] + ch
                queue.append(y)
    return {k: _compress_word(v) for k, v in words.items()}


def _compress_word(w: str) -> str:
    if not w:
        return "e"
    out, i = [], 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append(_power_label(w[i], j - i))
        i = j
    return "".join(out)


def order16(which: str) -> FiniteGroup:
    name = f"G16({which})"
    if which == "Z2xD8":
        return direct_product(abelian_group((2,), name="Z(2)"), metacyclic_group(4, 2, -1, 0, name="D(8)", letters="rs"), name=name)
    if which == "Z2xQ8":
        return direct_product(abelian_group((2,), name="Z(2)"), metacyclic_group(4, 2, -1, 2, name="Q(8)"), name=name)
    if which == "M16":
        # a^8 = b^2 = 1, b a b = a^5
        return metacyclic_group(8, 2, 5, 0, name=name)
    if which == "Z4rZ4":
        # a^4 = b^4 = 1, b a b^-1 = a^-1
        return metacyclic_group(4, 4, -1, 0, name=name)
    if which == "D8sZ4":
        # a^4 = b^2 = c^2 = 1, ab = ba, ac = ca, bc = a^2 c b
        return presentation_group("abc", ["aaaa", "bb", "cc", "abAB", "acAC", "bcBCAA"], name=name)
    if which == "SG16_3":
        # a^4 = b^4 = 1, ab = b^-1 a^-1, a b^-1 = b a^-1
        return presentation_group("ab", ["aaaa", "bbbb", "abab", "aBaB"], name=name)
    raise SpecError(f"unknown order-16 group {which!r}")
