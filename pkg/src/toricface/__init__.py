"""Exact computations with rational pointed fans and their toric face rings."""

from .config import AnalysisConfig
from .errors import (
    DimensionMismatch, InputError, NotAFan, NotCohenMacaulay, NotPointed, NotPure, ParseError,
    SearchBudgetExceeded, ToricFaceError,
)
from .fan import (
    Fan, StarRef, SubfanRef, boundary_subfan, build_fan, closure, embed_fan, fan_from_rays, fan_of_cone,
    is_euler_fan, join_fan, rho, sigma_minus_star, star, star_of_point,
)
from .geometry import (
    BoxSpec, Cone, cone_from_generators, cone_from_halfspaces, faces, intersect_cones, join_point_cone,
    lattice_points, relint_contains, zero_cone,
)
from .homology import GF, QQ, FieldSpec, GradedDims, cohomology_profile, reduced_cohomology, star_cohomology
from .ring import (
    EulerSelf, GorensteinWitness, IdealSubfan, NoGradedEmbedding, NotGorenstein, analyze,
    canonical_ideal_subfan, cross_validate_via_join, gorenstein_check, is_cohen_macaulay,
    local_cohomology_hilbert, manifold_boundary_duality_check, omega_hilbert,
)
from .shelling import (
    CleanWitness, NotClean, NotSemishellable, NotShellable, SemishellingCertificate, ShellingCertificate,
    clean_consequence_check, cleanness_check, semishellability_check, shellability_search, step_ideal_report,
)

__version__ = "0.1.0"
