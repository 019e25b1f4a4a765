"""Paired 2-disjoint path covers of Johnson graphs and stacked Johnson graphs."""

from .covers import EndpointQuad, P2CSolution
from .graphs import (
    GenericGraph,
    JohnsonGraph,
    LevelSpec,
    QJGraph,
    fig1_counterexample,
    to_dot,
    to_generic,
)
from .hamilton import (
    Path,
    hamilton_bruteforce,
    hamilton_complete,
    hamilton_johnson,
    hamilton_qj,
)
from .p2c_johnson import p2c_complete, p2c_johnson
from .p2c_qj import absorb_apex, ep2c_expand, p2c_qj, pick_one_avoiding, pick_two_avoiding
from .subsets import (
    ElementSet,
    Relabeling,
    apply_relabeling,
    complement,
    down_neighbors,
    johnson_adjacent,
    k_subsets,
    qj_cross_adjacent,
    same_level_neighbors,
    up_neighbors,
)
from .verify import (
    CheckReport,
    SweepSummary,
    check_hamilton,
    check_p2c,
    p2c_bruteforce,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "ElementSet",
    "EndpointQuad",
    "GenericGraph",
    "JohnsonGraph",
    "LevelSpec",
    "P2CSolution",
    "Path",
    "QJGraph",
    "Relabeling",
    "SweepSummary",
    "absorb_apex",
    "apply_relabeling",
    "check_hamilton",
    "check_p2c",
    "complement",
    "down_neighbors",
    "ep2c_expand",
    "fig1_counterexample",
    "hamilton_bruteforce",
    "hamilton_complete",
    "hamilton_johnson",
    "hamilton_qj",
    "johnson_adjacent",
    "k_subsets",
    "p2c_bruteforce",
    "p2c_complete",
    "p2c_johnson",
    "p2c_qj",
    "pick_one_avoiding",
    "pick_two_avoiding",
    "qj_cross_adjacent",
    "same_level_neighbors",
    "sweep",
    "to_dot",
    "to_generic",
    "up_neighbors",
]
