"""Commuting graphs of finite groups: construction, exact spectra and energy."""

from .cgraph import CliqueDecomposition, CommutingGraph, clique_decomposition, commuting_graph, non_commuting_graph
from .formulas import (
    Prediction,
    predict_ac,
    predict_centralizer_class,
    predict_family,
    predict_product,
    predict_quotient,
)
from .gf import GF, Field, FieldElement
from .groups import (
    CentralizerPartition,
    FiniteGroup,
    GroupError,
    centralizer_partition,
    closure,
    direct_product,
    is_ac_group,
    noncentral_centralizer_sum,
    quotient_by_center,
)
from .parse import ParseError, parse_spec
from .report import VerificationReport, verify_all, verify_group
from .spectra import Spectrum, ac_spectrum, clique_union_spectrum, energy, graph_spectrum, numeric_spectrum
from .zoo import FamilySpec, SpecError, construct

__version__ = "0.1.0"
