"""Verification of closed-form predictions against the brute-force oracle."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from . import formulas, zoo
from .cgraph import clique_decomposition, commuting_graph
from .groups import (
    DEFAULT_MAX_ORDER,
    FiniteGroup,
    GroupError,
    centralizer_count,
    centralizer_partition,
    is_ac_group,
    noncentral_centralizer_sum,
)
from .parse import parse_spec
from .spectra import (
    DEFAULT_MAX_ORACLE_VERTICES,
    Spectrum,
    SpectrumError,
    clique_union_spectrum,
    energy,
    numeric_spectrum,
)

SCHEMA_VERSION = 1
MATCH, PAPER_SLIP, FAIL, NOT_APPLICABLE = "MATCH", "PAPER_SLIP", "FAIL", "NOT_APPLICABLE"


@lru_cache(maxsize=None)
def load_catalog() -> dict:
    with resources.files("commute_spectra").joinpath("data/catalog.json").open(encoding="utf-8") as fh:
        return json.load(fh)


def expected_slips() -> frozenset[str]:
    return frozenset(item["source"] for item in load_catalog()["paper_slips"])


@dataclass
class Row:
    source: str
    statement: str
    classification: str
    predicted_spectrum: Spectrum | None = None
    energy_paper: int | None = None
    energy_from_spectrum: int | None = None
    energy_choices: tuple[int, ...] | None = None
    expected_slip: bool = False
    note: str = ""

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "statement": self.statement,
            "classification": self.classification,
            "predicted_spectrum": _spectrum_json(self.predicted_spectrum),
            "energy_paper": self.energy_paper,
            "energy_from_spectrum": self.energy_from_spectrum,
            "energy_choices": list(self.energy_choices) if self.energy_choices is not None else None,
            "expected_slip": self.expected_slip,
            "note": self.note,
        }


@dataclass
class VerificationReport:
    group: str
    order: int
    center: int
    classes: int
    centralizers: int
    is_ac: bool
    is_clique_union: bool
    clique_sizes: tuple[int, ...]
    vertices: int
    edges: int
    spectrum: Spectrum
    energy: int | float
    numeric: dict
    centralizer_sum: tuple[int, int]
    rows: list[Row] = field(default_factory=list)
    seconds: float | None = None

    @property
    def invariant_failures(self) -> list[str]:
        out = []
        if self.is_ac != self.is_clique_union:
            out.append("AC-group status disagrees with clique-union structure")
        if self.centralizer_sum[0] != self.centralizer_sum[1]:
            out.append("sum of centralizer orders over non-central elements != |G|(k(G)-|Z(G)|)")
        if self.numeric.get("checked") and not self.numeric.get("agrees"):
            out.append("numeric spectrum disagrees with the combinatorial spectrum")
        if self.spectrum.exact and (self.spectrum.moment(1) != 0 or self.spectrum.moment(2) != 2 * self.edges):
            out.append("trace identities violated")
        return out

    @property
    def ok(self) -> bool:
        if self.invariant_failures:
            return False
        for row in self.rows:
            if row.classification == FAIL:
                return False
            if row.classification == PAPER_SLIP and not row.expected_slip:
                return False
        return True

    def to_json(self, *, timing: bool = False) -> dict:
        out = {
            "group": self.group,
            "order": self.order,
            "center": self.center,
            "classes": self.classes,
            "centralizers": self.centralizers,
            "is_ac": self.is_ac,
            "is_clique_union": self.is_clique_union,
            "clique_sizes": list(self.clique_sizes),
            "vertices": self.vertices,
            "edges": self.edges,
            "spectrum": _spectrum_json(self.spectrum),
            "energy": self.energy,
            "numeric": self.numeric,
            "noncentral_centralizer_sum": list(self.centralizer_sum),
            "invariant_failures": self.invariant_failures,
            "rows": [r.to_json() for r in self.rows],
            "ok": self.ok,
        }
        if timing:
            out["seconds"] = self.seconds
        return out


def _spectrum_json(s: Spectrum | None):
    if s is None:
        return None
    return {"rendered": s.render(), "entries": [[v, m] for v, m in s.entries], "exact": s.exact}


def classify(pred: formulas.Prediction, oracle: Spectrum, oracle_energy) -> str:
    """MATCH, PAPER_SLIP or FAIL for one applicable prediction."""
    spectrum_ok = pred.spectrum is None or pred.spectrum == oracle
    if pred.energy_choices is not None:
        energy_ok = oracle_energy in pred.energy_choices
    else:
        energy_ok = pred.energy_paper is None or pred.energy_paper == oracle_energy
    if spectrum_ok and energy_ok:
        return MATCH
    if pred.spectrum is not None and spectrum_ok and pred.energy_from_spectrum == oracle_energy:
        return PAPER_SLIP
    return FAIL


def _row(pred: formulas.Prediction, oracle: Spectrum, oracle_energy, slips: frozenset[str], vertex_count: int) -> Row:
    cls = classify(pred, oracle, oracle_energy)
    notes = []
    if not pred.fits(vertex_count):
        notes.append(
            f"predicted multiplicities sum to {pred.spectrum.size} with trace {pred.spectrum.moment(1)}"
            f" on {vertex_count} vertices"
        )
    if not pred.internally_consistent:
        notes.append(f"printed energy {pred.energy_paper} != {pred.energy_from_spectrum} from the predicted spectrum")
    return Row(
        pred.source,
        pred.statement,
        cls,
        pred.spectrum,
        pred.energy_paper,
        pred.energy_from_spectrum,
        pred.energy_choices,
        expected_slip=cls == PAPER_SLIP and pred.source in slips,
        note="; ".join(notes),
    )


def _abelian_factor(spec: zoo.FamilySpec) -> tuple[zoo.FamilySpec, int] | None:
    """(base, |A|) when spec is base x A with A abelian."""
    if spec.family != "Product":
        return None
    base, other = spec.params
    if other.family in ("Cyclic", "Abelian"):
        return base, zoo.expected_order(other)
    return None


def verify_group(
    spec: zoo.FamilySpec | str,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    max_oracle_vertices: int = DEFAULT_MAX_ORACLE_VERTICES,
) -> VerificationReport:
    started = time.perf_counter()
    if isinstance(spec, str):
        spec = parse_spec(spec)
    G = zoo.construct(spec, max_order=max_order)
    gamma = commuting_graph(G)
    dec = clique_decomposition(gamma)
    ac = is_ac_group(G)
    numeric: dict = {"checked": False}
    oracle: Spectrum
    if dec.is_clique_union:
        oracle = clique_union_spectrum(dec.component_sizes)
    if gamma.vertex_count <= max_oracle_vertices:
        num = numeric_spectrum(gamma, max_vertices=max_oracle_vertices)
        if dec.is_clique_union:
            if ac and not num.exact:
                raise SpectrumError(f"{G.name}: numeric spectrum of an AC-group did not snap to integers")
            numeric = {"checked": True, "agrees": num == oracle, "snap_error": num.snap_error}
        else:
            oracle = num
            numeric = {"checked": True, "agrees": True, "snap_error": num.snap_error, "oracle": True}
    else:
        numeric["note"] = f"skipped: {gamma.vertex_count} vertices > {max_oracle_vertices}"
        if not dec.is_clique_union:
            raise SpectrumError(f"{G.name}: graph is not a clique union and too large for the numeric oracle")
    oracle_energy = energy(oracle)
    slips = expected_slips()
    n_vertices = gamma.vertex_count
    rows = []
    preds = list(formulas.predict_family(spec))
    if ac:
        preds.append(formulas.predict_ac(G))
    else:
        rows.append(Row("ac-centralizers", "AC-group closed forms", NOT_APPLICABLE, note="not an AC-group"))
    preds += formulas.predict_quotient(G)
    preds += formulas.predict_centralizer_class(G)
    product = _abelian_factor(spec)
    if product is not None:
        base = zoo.construct(product[0], max_order=max_order)
        if not base.is_abelian and is_ac_group(base):
            preds.append(formulas.predict_product(base, product[1]))
        else:
            rows.append(Row("product-with-abelian", "G x A closed form", NOT_APPLICABLE, note="base is not a non-abelian AC-group"))
    rows += [_row(p, oracle, oracle_energy, slips, n_vertices) for p in preds]
    rows.sort(key=lambda r: r.source)
    part = centralizer_partition(G)
    return VerificationReport(
        group=str(spec),
        order=G.order,
        center=len(G.center),
        classes=G.class_count,
        centralizers=part.count_total,
        is_ac=ac,
        is_clique_union=dec.is_clique_union,
        clique_sizes=dec.component_sizes,
        vertices=n_vertices,
        edges=gamma.edge_count,
        spectrum=oracle,
        energy=oracle_energy,
        numeric=numeric,
        centralizer_sum=noncentral_centralizer_sum(G),
        rows=rows,
        seconds=time.perf_counter() - started,
    )


def catalog_specs(*, controls: bool = True) -> list[str]:
    cat = load_catalog()
    return list(cat["groups"]) + (list(cat["controls"]) if controls else [])


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("COMMUTE_SPECTRA_THREADS", "1")))
    except ValueError:
        return 1


def verify_all(specs: list[str] | None = None, **kwargs) -> list[VerificationReport]:
    specs = catalog_specs() if specs is None else specs
    workers = thread_count()
    if workers == 1:
        return [verify_group(s, **kwargs) for s in specs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda s: verify_group(s, **kwargs), specs))


def group_info(G: FiniteGroup) -> dict:
    info = {
        "group": G.name,
        "order": G.order,
        "center": len(G.center),
        "classes": G.class_count,
        "centralizers": centralizer_count(G),
        "is_abelian": G.is_abelian,
    }
    if not G.is_abelian:
        info["is_ac"] = is_ac_group(G)
        info["clique_sizes"] = list(clique_decomposition(commuting_graph(G)).component_sizes)
    return info


__all__ = [
    "FAIL",
    "MATCH",
    "NOT_APPLICABLE",
    "PAPER_SLIP",
    "Row",
    "VerificationReport",
    "catalog_specs",
    "classify",
    "group_info",
    "load_catalog",
    "verify_all",
    "verify_group",
    "GroupError",
]
