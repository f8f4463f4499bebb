"""Exact computations with nilpotent orbits shared between a simple Lie
algebra and a larger one.

The layers, bottom up:

* :mod:`.rootsys` -- root systems, subsystems, foldings;
* :mod:`.chevalley` -- Chevalley bases with integer structure constants;
* :mod:`.characters`, :mod:`.modules` -- characters and explicit modules;
* :mod:`.nilorbits` -- orbit representatives, sl2-triples, gradings;
* :mod:`.sharedpairs` -- the degree-2 symmetry algebra and the catalog of pairs;
* :mod:`.poisson` -- Lie-Poisson brackets, the symplectic model, semidirect sums.

All arithmetic is over the rationals.
"""

from .characters import (
    Character,
    adjoint_character,
    branch_character,
    freudenthal_character,
    peel_decompose,
    weyl_dim,
)
from .chevalley import LieAlgebraData, ad_matrix, bracket, chevalley_algebra, chevalley_basis, killing_nondegenerate
from .modules import ModuleRealization, dual_module, module_from_generators, realize_module
from .nilorbits import (
    GradingDecomposition,
    OrbitSpec,
    Sl2Triple,
    centralizer,
    h_grading,
    jacobson_morozov,
    orbit_dim,
    orbit_element,
    partition_orbit_dim,
)
from .rootsys import (
    Embedding,
    FoldingMap,
    RootSystem,
    SimpleType,
    build_root_system,
    closed_subsystem,
    fold,
    highest_roots,
    long_root_subsystem,
)
from .sharedpairs import (
    CoverSpec,
    PairRecord,
    VerificationReport,
    catalog,
    normality_obstruction,
    r1_detect,
    r2_decomposition,
    rank_rule_check,
    v2_dimension,
    verify_chain,
    verify_pair,
)
from .poisson import (
    GradedPolynomial,
    SemidirectSum,
    SymplecticModel,
    grading_check,
    heisenberg_check,
    lie_poisson_bracket,
    sp_min_cover_model,
    theorem7_transitivity,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
