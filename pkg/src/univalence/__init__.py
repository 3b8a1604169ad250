"""Class-U radii for the transform g(z) = (z/f(z) - 1)/(-a2) of univalent functions."""
from .analysis import (
    ReciprocalRep,
    SchwarzFunction,
    area_theorem_bound,
    extract_omega,
    g_from_omega,
    g_transform,
    lemma1_criterion,
    splus_criterion,
    u_eval,
    u_functional,
)
from .radii import (
    RadiusResult,
    eq11_lhs,
    phi,
    phi_maximizer,
    radius_half_a2,
    radius_theorem1,
    radius_theorem3,
    u_bound_theorem1,
)
from .series import NormalizedFunction, TruncatedSeries
from .verify import (
    DiskGrid,
    MembershipReport,
    Quantity,
    build_f_from_omega,
    check_on_disk,
    sharpness_f1,
    univalence_oracle,
)

__version__ = "0.1.0"
