"""Classification invariants of Leavitt path algebras of finite graphs.

The library computes, for a finite directed multigraph, the pointed K0
group of its Leavitt path algebra (via exact Smith normal form of
I - A^t), the sign of det(I - A^t), the graph conditions for purely
infinite simplicity, and a brute-force graph-monoid oracle; on top of
these it applies the restricted algebraic Kirchberg-Phillips criterion
to decide isomorphism of pairs, including the complete classification
of the algebras of the Cayley graphs of the cyclic groups Z/nZ.
"""

from .classify import (
    CanonicalAlgebra,
    CayleyClass,
    KPVerdict,
    canonical_form,
    cayley_class,
    det_sign,
    kp_decide,
)
from .graphs import (
    Edge,
    Graph,
    PISReport,
    adjacency_matrix,
    cayley_graph,
    graph_from_dict,
    graph_to_dict,
    pis_report,
    rose_graph,
    stemmed_rose_graph,
)
from .intlinalg import (
    CirculantRow,
    IntMatrix,
    SmithDecomposition,
    circulant_det_product,
    det_exact,
    smith_normal_form,
)
from .ktheory import (
    INFINITE,
    AbelianGroup,
    GroupElement,
    PointedK0,
    b_matrix,
    cokernel_pointed,
    element_order,
    pointed_iso_exists,
)
from .monoid import (
    NOT_CLOSED,
    CongruenceClasses,
    FiniteGroupTable,
    MonoidPresentation,
    crosscheck_cokernel,
    mstar_group,
    presentation,
    saturate,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "CanonicalAlgebra",
    "CayleyClass",
    "CirculantRow",
    "CongruenceClasses",
    "Edge",
    "FiniteGroupTable",
    "Graph",
    "GroupElement",
    "INFINITE",
    "IntMatrix",
    "KPVerdict",
    "MonoidPresentation",
    "NOT_CLOSED",
    "PISReport",
    "PointedK0",
    "SmithDecomposition",
    "adjacency_matrix",
    "b_matrix",
    "canonical_form",
    "cayley_class",
    "cayley_graph",
    "circulant_det_product",
    "cokernel_pointed",
    "crosscheck_cokernel",
    "det_exact",
    "det_sign",
    "element_order",
    "graph_from_dict",
    "graph_to_dict",
    "kp_decide",
    "mstar_group",
    "pis_report",
    "pointed_iso_exists",
    "presentation",
    "rose_graph",
    "saturate",
    "smith_normal_form",
    "stemmed_rose_graph",
]
