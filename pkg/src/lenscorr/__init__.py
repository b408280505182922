"""Exact Dedekind-Rademacher sums and Heegaard Floer correction terms of lens spaces."""

from .arith import bernoulli1, floor_rat, frac_part, mod_inverse, sawtooth
from .correction import (
    CorrectionTable,
    LensSpace,
    conjugate_spinc,
    d_closed,
    d_recursive,
    d_table,
    d_tange,
    normalize_lens,
    reciprocity_rhs,
)
from .dedekind import dedekind_sum, knuth_e_factor, rademacher_sum, s_sigma_delta, sigma_sum, solve_kq
from .invariants import (
    AlexanderPolynomial,
    ObstructionReport,
    average_d,
    casson_walker,
    casson_walker_surgery,
    check_integrality,
    d_surgery,
    injectivity_report,
    theorem2_divisibility,
    torsion_coefficient,
    vanishing_spinc,
)
from .kernels import BACKEND

__version__ = "0.1.0"
