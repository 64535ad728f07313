"""lefcon: exact simplicial homology certificates for discrete control systems.

The engine computes homology of simplicial pairs over the rationals with
exact arithmetic, the classical and graded Lefschetz invariants of
simplicial maps, and uses them to certify equilibria, controllability,
surjectivity and removability preconditions, each cross-checkable by an
exact brute-force oracle.
"""

from .complexes import (
    ChainComplexData,
    SimplicialComplex,
    SimplicialPair,
    chain_complex,
    euler_characteristic,
    validate_pair,
)
from .control import (
    ControllabilityChain,
    DiscreteSystem,
    RemovabilityReport,
    boundary_input_subcomplex,
    compose_system_map,
    controllability_chain_search,
    equilibrium_certificate,
    fixed_point_class,
    reachability_oracle,
    removability_precondition,
    sphere_criteria,
    surjectivity_certificate,
    surjectivity_oracle,
)
from .duality import (
    FundamentalClassData,
    cap,
    cross,
    degree,
    kronecker,
    orient,
    poincare_dual,
    poincare_dual_inverse,
)
from .homology import HomologyBasis, betti_numbers, homology_basis
from .kernel import BACKEND as KERNEL_BACKEND
from .lefschetz import (
    CoincidenceVerdict,
    CoincidenceWitness,
    GradedEndomorphism,
    coincidence_certificate,
    coincidence_endomorphism,
    coincidence_oracle,
    lefschetz_class,
    lefschetz_coincidence_number,
    lefschetz_homomorphism,
    lefschetz_number_self,
)
from .maps import (
    SimplicialMapSpec,
    constant_map,
    identity_map,
    induced_cohomology_map,
    induced_homology_map,
)
from .matrix import RationalMatrix, kernel_basis, rref, solve, trace
from .products import ProductData, product_pair
from .workspace import WorkspaceDocument, parse_workspace, serialize_workspace

__version__ = "0.1.0"
