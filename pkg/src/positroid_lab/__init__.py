"""Unit interval positroids, their externally ordered bases, and the
Catalan recursion on trivial UIPs."""

from .errors import (
    AxiomError,
    ContractError,
    DimensionError,
    LabelingError,
    OrderError,
    PositroidLabError,
)
from .external import (
    BasisPoset,
    ExternalData,
    active_set,
    epsilon,
    external_poset,
    external_set,
    leq_ext,
    leq_ext_lex,
    poset_equal,
    to_dot,
    transitive_closure,
    transitive_reduction,
)
from .gamma import GammaTrace, build_up, gamma, grow_spine, reinforce, verify_recursion
from .linalg import RationalMatrix, det, is_positroid_matrix, k_set, maximal_minors, psi
from .matroid import (
    Matroid,
    are_isomorphic,
    circuits,
    contract,
    delete,
    is_independent,
    matroid_from_bases,
    matroid_from_matrix,
    minor,
)
from .positroid import UnitIntervalPositroid, trivial_circuits, trivial_uip, uip
from .uio import (
    UnitIntervalOrder,
    antiadjacency,
    catalan,
    enumerate_uios,
    uio_from_intervals,
)

__version__ = "0.1.0"
