"""One test (or parametrized family of tests) per acceptance criterion.

Expected energies below are closed forms quoted as targets; the oracle
spectrum they are compared against comes from the brute-force graph.
"""

import time

import numpy as np
import pytest

from commute_spectra import report, zoo
from commute_spectra.cgraph import clique_decomposition, commuting_graph
from commute_spectra.groups import is_ac_group
from commute_spectra.parse import parse_spec
from commute_spectra.report import MATCH, PAPER_SLIP
from commute_spectra.spectra import Spectrum, group_spectrum, numeric_spectrum


@pytest.fixture(scope="module")
def catalog_reports():
    return {r.group: r for r in report.verify_all(report.catalog_specs(controls=False))}


def family_row(rep):
    (row,) = [r for r in rep.rows if r.source.startswith("family:")]
    return row


def test_c1_a5_spectrum_and_runtime():
    zoo._construct.cache_clear()
    t0 = time.perf_counter()
    rep = report.verify_group("PSL2(4)")
    elapsed = time.perf_counter() - t0
    assert rep.spectrum == Spectrum.from_terms([(-1, 38), (1, 10), (2, 5), (3, 6)])
    assert rep.energy == 76
    assert family_row(rep).classification == MATCH
    assert elapsed < 5.0


def _odd_even(odd, even):
    return lambda m, n: odd(m, n) if m % 2 else even(m, n)


SWEEPS = {
    "dihedral": ([f"D({2 * m})" for m in range(3, 21)], lambda s: _odd_even(lambda m, _: 2 * m - 4, lambda m, _: 3 * m - 6)(s.params[0], None)),
    "metacyclic": (
        [f"M({m},{n})" for m in range(3, 10) for n in range(1, 5)],
        lambda s: _odd_even(lambda m, n: 4 * m * n - 2 * m - 2 * n - 2, lambda m, n: 4 * m * n - 4 * n - m - 2)(*s.params),
    ),
    "u6n": ([f"U6({n})" for n in range(1, 9)], lambda s: 10 * s.params[0] - 8),
    "quasidihedral": ([f"QD({2 ** n})" for n in range(4, 7)], lambda s: 2 ** s.params[0] + 2 ** (s.params[0] - 1) - 6),
    "pq": (["PQ(3,7)", "PQ(5,11)", "PQ(3,13)"], lambda s: 2 * s.params[1] * (s.params[0] - 1) - 3),
    "hanaki-theta": (["ATheta(2)", "ATheta(3)"], lambda s: 2 * (2 ** s.params[0] - 1) ** 2),
    "hanaki-p": (["AP(1,2)", "AP(1,3)", "AP(1,5)", "AP(2,2)"], lambda s: 2 * s.params[1] ** (3 * s.params[0]) - 4 * s.params[1] ** s.params[0] - 2),
    "gl2": (["GL2(3)", "GL2(4)", "GL2(5)", "GL2(7)"], None),
    "psl2": (["PSL2(4)", "PSL2(8)"], None),
}


@pytest.mark.parametrize("family", list(SWEEPS))
def test_c2_family_sweep(family):
    texts, closed_energy = SWEEPS[family]
    bad = []
    for text in texts:
        spec = parse_spec(text)
        rep = report.verify_group(spec)
        row = family_row(rep)
        if row.predicted_spectrum != rep.spectrum:
            bad.append(f"{text}: predicted {row.predicted_spectrum.render()} vs oracle {rep.spectrum.render()}")
        if closed_energy is not None and closed_energy(spec) != rep.energy:
            bad.append(f"{text}: closed-form energy {closed_energy(spec)} vs oracle {rep.energy}")
        if row.classification != MATCH:
            bad.append(f"{text}: {row.classification}")
    assert not bad, "\n".join(bad)


def test_c2_sweep_runtime():
    zoo._construct.cache_clear()
    t0 = time.perf_counter()
    for texts, _ in SWEEPS.values():
        for text in texts:
            report.verify_group(parse_spec(text))
    assert time.perf_counter() - t0 < 120.0


@pytest.mark.parametrize("m", range(2, 11))
def test_c3_dicyclic_slip(m):
    rep = report.verify_group(zoo.Dicyclic(m))
    row = family_row(rep)
    assert row.predicted_spectrum == rep.spectrum
    assert row.energy_paper == 6 * m - 3
    assert row.energy_from_spectrum == 6 * m - 6 == rep.energy
    assert row.classification == PAPER_SLIP and row.expected_slip


def test_c3_sz2_quotient_slip():
    rep = report.verify_group(zoo.Sz2())
    (row,) = [r for r in rep.rows if r.source == "quotient-sz2"]
    assert rep.center == 1
    assert row.predicted_spectrum == rep.spectrum
    assert row.energy_paper == 28 - 12
    assert row.energy_from_spectrum == 38 - 12 == rep.energy == 26
    assert row.classification == PAPER_SLIP and row.expected_slip


@pytest.mark.parametrize("name", zoo.ORDER16_NAMES)
def test_c4_order16(name):
    rep = report.verify_group(zoo.Order16(name))
    assert rep.spectrum == Spectrum.from_terms([(-1, 9), (3, 3)])
    assert rep.energy == 18
    (row,) = [r for r in rep.rows if r.source == "quotient-elementary-abelian"]
    assert row.classification == MATCH


def test_c5_ac_iff_clique_union(catalog_reports):
    for text, rep in catalog_reports.items():
        assert rep.is_ac and rep.is_clique_union, text
    for n in (4, 5):
        G = zoo.construct(zoo.Sym(n))
        assert not is_ac_group(G)
        assert not clique_decomposition(commuting_graph(G)).is_clique_union


def test_c6_centralizer_sum():
    groups = [zoo.construct(parse_spec(s)) for s in report.catalog_specs(controls=False)]
    groups += [zoo.construct(zoo.Sym(n)) for n in (3, 4, 5)]
    for G in groups:
        Z = set(G.center)
        lhs = sum(len(G.centralizer(g)) for g in range(G.order) if g not in Z)
        assert lhs == G.order * (len(G.conjugacy_classes) - len(Z)), G.name


def test_c7_numeric_oracle(catalog_reports):
    checked = 0
    for text, rep in catalog_reports.items():
        if rep.vertices > 600:
            continue
        G = zoo.construct(parse_spec(text))
        num = numeric_spectrum(commuting_graph(G))
        assert num.exact, text
        assert num.snap_error < 1e-6, text
        assert num == rep.spectrum, text
        checked += 1
    assert checked > 50


def test_c8_trace_identities(catalog_reports):
    for text, rep in catalog_reports.items():
        assert rep.spectrum.moment(1) == 0, text
        assert rep.spectrum.moment(2) == 2 * rep.edges, text
        assert isinstance(rep.spectrum.moment(2), (int, np.integer)), text


@pytest.mark.parametrize("spec", [zoo.Dihedral(4), zoo.Dicyclic(2)], ids=str)
def test_c9_four_centralizer(spec):
    rep = report.verify_group(spec)
    assert rep.centralizers == 4
    (row,) = [r for r in rep.rows if r.source == "four-centralizer"]
    assert row.energy_paper == 6 * (rep.center - 1) == 6 == rep.energy


@pytest.mark.parametrize("p", [2, 3])
def test_c9_p_plus_two_centralizer(p):
    rep = report.verify_group(zoo.HanakiP(1, p))
    assert rep.centralizers == p + 2
    (row,) = [r for r in rep.rows if r.source == "p-plus-two-centralizer"]
    expected = 2 * ((p * p - 1) * rep.center - p - 1)
    assert row.energy_paper == expected == rep.energy
    assert row.classification == MATCH


def test_c9_five_centralizer():
    rep = report.verify_group("D(6)xZ(2)")
    assert rep.centralizers == 5
    z = rep.center
    assert rep.energy in {8 * (2 * z - 1), 10 * z - 8}
    (row,) = [r for r in rep.rows if r.source == "five-centralizer"]
    assert row.classification == MATCH
