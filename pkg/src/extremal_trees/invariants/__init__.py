"""Tree invariants: exact counts and polynomials, rho functionals, spectra, oracles."""

from .counting import (
    SolvabilityPair,
    distance_distribution,
    eta_root,
    harary,
    hosoya,
    independence_count,
    m0_poly,
    matching_poly,
    rsf_pair,
    rsf_poly,
    sigma0,
    solvability,
    steiner_wiener,
    subtree_count,
    w_ab,
    wiener,
    wiener_like,
)
from .oracles import (
    ORACLE_BOUND,
    gf2_rank,
    independence_deletion,
    kelmans_forest_sum,
    laplacian_charpoly_oracle,
    matching_poly_deletion,
    rsf_from_charpoly,
    solvability_bruteforce,
    steiner_wiener_bruteforce,
    steiner_wiener_sw1,
    wiener_bfs,
)
from .polynomial import IntPolynomial, fraction_str, parse_fraction
from .rho import SELECTORS, RhoRule, branch_values, get_rule, parse_selector, rho, rho_values
from .spectral import energy, incidence_energy, jacobi_eigenvalues, lel

__all__ = [name for name in dir() if not name.startswith("_")]
