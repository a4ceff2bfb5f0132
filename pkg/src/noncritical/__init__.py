"""Noncritical vertices of strongly connected digraphs.

A vertex is noncritical when deleting it keeps the digraph strongly
connected.  The package finds such vertices by brute force and by the
constructive degree-sum argument, certifies maximal proper strongly
connected subgraphs, generates the extremal families showing the degree
bounds are tight, and runs exhaustive and randomized verification sweeps.
"""

from .decomposition import (
    HandlePath,
    MpssCertificate,
    Violation,
    enumerate_mpss,
    grow_mpss,
    grow_mpss_from_set,
    shortest_handle,
    verify_lemma1,
)
from .digraph import (
    Digraph,
    Hypothesis,
    HypothesisClass,
    adjacent_pairs,
    build_digraph,
    classify_hypothesis,
    complete_digraph,
    degree,
    directed_cycle,
    induced_subgraph,
    is_strongly_connected,
    strongly_connected_components,
)
from .errors import HypothesisNotMet, TheoremContradicted
from .families import (
    FamilySpec,
    family_spec,
    gen_fig4,
    gen_fig5,
    gen_fig6,
    gen_fig7,
    gen_random_conditioned,
    gen_tournament,
    generate,
)
from .formats import export_dot, parse_edge_list, serialize_edge_list
from .report import AnalysisReport, analyze, parse_report, serialize_report
from .witness import (
    CaseTag,
    LevelTree,
    WitnessCertificate,
    build_level_tree,
    constructive_noncritical,
    leaf_sets,
    noncritical_oracle,
    two_noncritical,
)

__version__ = "0.1.0"
