"""Bohr radii for self-maps of the disk and harmonic mapping classes."""
from .classes import (
    ADMISSIBLE_M,
    HarmonicPH0Extremal,
    HarmonicWH0Extremal,
    MoebiusExtremal,
    admissible_M_bound,
    coeff,
    dist_lower_bound,
    growth_ph0,
    growth_wh0,
    harmonic_bohr_sum,
)
from .errors import (
    AdmissibilityError,
    BohrError,
    ConvergenceError,
    DomainError,
    SignCheckError,
    ToleranceUnreachable,
)
from .families import PhiFamily, check_in_g, eval_dphi, eval_phi, parse_family, poly_weight, power, shift_weight
from .radius import (
    RadiusEquation,
    RootResult,
    build_ph0_equation,
    build_wh0_equation,
    classical_radius,
    solve_radius,
    table_generate,
)
from .series import (
    WeightedSumSpec,
    boundary_constant_ph0,
    boundary_constant_wh0,
    closed_form_ph0,
    moebius_series,
    sum_weighted,
)
from .specfun import SeriesValue, digamma, gauss_2f1, h_alpha, lerch_phi, lerch_phi_via_digamma
from .verify import (
    VerificationReport,
    eval_a1_majorant,
    eval_l1,
    poly_f,
    sharpness_probe_thm22,
    verify_harmonic_bohr,
    verify_thm22,
)

__version__ = "0.1.0"
