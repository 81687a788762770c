"""Exact Hochschild cohomology of smash products.

Pipeline: a Koszul skew-polynomial algebra A and a semisimple Hopf algebra H
acting on it combine into the smash product A#H; the cohomology ring
HH^*(A#H) is computed from the differential graded algebra built out of the
Koszul dual of A, followed by projection onto H-invariants with an integral.
All arithmetic is exact over the rationals.
"""

from .cochain import Cochain, CochainAlgebra
from .cohomology import (ClassSolver, CohomologyBasis, CupTable, class_equal,
                         cohomology_at, cup_structure, invariants)
from .hopf import (HopfData, check_hopf_axioms, group_algebra, integral,
                   kac_paljutkin, trivial_hopf)
from .koszul import KoszulDual, koszul_complex_check
from .qalgebra import (HActionOnA, SkewPolyAlgebra, check_module_algebra,
                       quantum_plane, smash_multiply)
from .rationals import Rat, rat
from .scenario import Scenario, builtin_scenario, load_scenario

__all__ = [
    "Cochain", "CochainAlgebra", "ClassSolver", "CohomologyBasis", "CupTable",
    "class_equal", "cohomology_at", "cup_structure", "invariants", "HopfData",
    "check_hopf_axioms", "group_algebra", "integral", "kac_paljutkin",
    "trivial_hopf", "KoszulDual", "koszul_complex_check", "HActionOnA",
    "SkewPolyAlgebra", "check_module_algebra", "quantum_plane",
    "smash_multiply", "Rat", "rat", "Scenario", "builtin_scenario",
    "load_scenario",
]

__version__ = "0.1.0"
