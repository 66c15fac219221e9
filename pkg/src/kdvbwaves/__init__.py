"""Closed-form travelling waves of the KdV-Burgers and compound KdV-Burgers
equations, built through operator factorization of the reduced ODE, with
independent residual and Runge-Kutta verification of every family."""

from .errors import ParameterDomainError, PoleError, UnsupportedDomainError
from .factorizer import (
    CompoundFactorization,
    FactorizationCheck,
    KdvbFactorization,
    Sign,
    factorize_compound,
    factorize_kdvb,
    verify_factorization,
)
from .params import (
    PhysicalParams,
    ReducedParams,
    reduce,
    reduced_amplitude,
    to_physical_amplitude,
    to_physical_coordinate,
    to_reduced_coordinate,
)
from .solutions import (
    Family,
    PhaseSweep,
    SweepSurface,
    WaveSolution,
    compound_discriminant_root,
    compound_solution,
    compound_solution_from_physical,
    constant_solution,
    eval_compound,
    eval_compound_physical,
    eval_kdvb_physical,
    eval_rational,
    eval_rational_physical,
    eval_solution,
    eval_solution_physical,
    eval_universal,
    kdvb_solution_from_physical,
    locked_rational_velocity,
    phase_sweep_surface,
    physical_discriminant_root,
    physical_jet,
    rational_solution,
    rational_solution_from_physical,
    solution_jet,
    stable_coth,
    stable_tanh,
    sweep_rows,
    universal_solution,
)
from .verify import (
    AuditFinding,
    CheckOutcome,
    EquationTag,
    ResidualReport,
    SuiteResult,
    Trajectory,
    check_first_integral_consistency,
    oracle_integrate_bernoulli,
    oracle_integrate_riccati,
    rational_form_audit,
    residual_first_integral,
    residual_pde,
    verification_suite,
)

__version__ = "0.1.0"

__all__ = [
    "AuditFinding",
    "CheckOutcome",
    "CompoundFactorization",
    "EquationTag",
    "FactorizationCheck",
    "Family",
    "KdvbFactorization",
    "ParameterDomainError",
    "PhaseSweep",
    "PhysicalParams",
    "PoleError",
    "ReducedParams",
    "ResidualReport",
    "Sign",
    "SuiteResult",
    "SweepSurface",
    "Trajectory",
    "UnsupportedDomainError",
    "WaveSolution",
    "check_first_integral_consistency",
    "compound_discriminant_root",
    "compound_solution",
    "compound_solution_from_physical",
    "constant_solution",
    "eval_compound",
    "eval_compound_physical",
    "eval_kdvb_physical",
    "eval_rational",
    "eval_rational_physical",
    "eval_solution",
    "eval_solution_physical",
    "eval_universal",
    "factorize_compound",
    "factorize_kdvb",
    "kdvb_solution_from_physical",
    "locked_rational_velocity",
    "oracle_integrate_bernoulli",
    "oracle_integrate_riccati",
    "phase_sweep_surface",
    "physical_discriminant_root",
    "physical_jet",
    "rational_form_audit",
    "rational_solution",
    "rational_solution_from_physical",
    "reduce",
    "reduced_amplitude",
    "residual_first_integral",
    "residual_pde",
    "solution_jet",
    "stable_coth",
    "stable_tanh",
    "sweep_rows",
    "to_physical_amplitude",
    "to_physical_coordinate",
    "to_reduced_coordinate",
    "universal_solution",
    "verification_suite",
    "verify_factorization",
]
