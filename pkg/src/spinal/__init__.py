"""Constant spinal groups: section calculus, periodicity criteria and element orders."""

from .basilica import LetterCode, basilica
from .constructions import build_ggs, build_gs_beta, build_semidirect
from .criteria import (
    CheckReport,
    SNotGenerating,
    check_abelian_criterion,
    check_gs_conditions,
    check_theorem_A,
    check_theorem_B,
    is_orbitwise_abelian,
    is_stable,
    is_strongly_orbitwise_abelian,
    perfect_cycle_obstruction,
)
from .dynsys import (
    Lambda_image,
    Sigma_image,
    StepGraph,
    build_step_graph,
    export_dot,
    frak_C,
    frak_X,
    is_eventually_trivial,
    lambda_b,
    lambda_b_at,
    sigma,
)
from .groupfile import load_group, load_shipped
from .order import Finite, InfiniteCertified, Unknown, order_of, orbit_reps_level1
from .permcore import Perm, PermGroup
from .selfsim import CSGroup, DirectedElem, GroupWord, canonicalize, validate_cs
