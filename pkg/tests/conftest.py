import itertools

import numpy as np
import pytest

from commute_spectra import zoo

ACCEPTANCE_RESULTS = []


def brute_mul(G, a, b):
    """Product straight from the element representation, bypassing the table."""
    return G.index(G._multiply(G.elements[a], G.elements[b]))


def brute_center(G):
    return {z for z in G if all(brute_mul(G, z, g) == brute_mul(G, g, z) for g in G)}


def brute_centralizer(G, x):
    return {y for y in G if brute_mul(G, x, y) == brute_mul(G, y, x)}


def brute_classes(G):
    inv = {g: next(h for h in G if brute_mul(G, g, h) == 0) for g in G}
    seen, out = set(), []
    for x in G:
        if x in seen:
            continue
        cls = {brute_mul(G, brute_mul(G, g, x), inv[g]) for g in G}
        seen |= cls
        out.append(cls)
    return out


def brute_adjacency(G):
    """Commuting-graph adjacency on non-central elements from the raw rule."""
    center = brute_center(G)
    verts = [x for x in G if x not in center]
    n = len(verts)
    A = np.zeros((n, n))
    for i, j in itertools.combinations(range(n), 2):
        x, y = verts[i], verts[j]
        if brute_mul(G, x, y) == brute_mul(G, y, x):
            A[i, j] = A[j, i] = 1
    return A


def numeric_multiset(A):
    """Eigenvalue multiset of a 0/1 matrix, rounded to integers, as {value: mult}."""
    vals = np.linalg.eigvalsh(A)
    out = {}
    for v in vals:
        k = int(round(v))
        assert abs(v - k) < 1e-6
        out[k] = out.get(k, 0) + 1
    return out


@pytest.fixture(scope="session")
def small_groups():
    specs = [
        zoo.Dihedral(3), zoo.Dihedral(4), zoo.Dihedral(6), zoo.Dicyclic(2), zoo.Dicyclic(3),
        zoo.Quasidihedral(4), zoo.Metacyclic(3, 2), zoo.Metacyclic(4, 2), zoo.U6n(2), zoo.Sz2(),
        zoo.GL2(3), zoo.PSL2(4), zoo.HanakiTheta(2), zoo.HanakiP(1, 2), zoo.HanakiP(1, 3),
        zoo.PQ(3, 7), zoo.Sym(4),
    ] + [zoo.Order16(n) for n in zoo.ORDER16_NAMES]
    return {str(s): zoo.construct(s) for s in specs}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        ACCEPTANCE_RESULTS.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
