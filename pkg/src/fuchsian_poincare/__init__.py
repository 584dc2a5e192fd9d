"""Lattices, Coxeter-type isometries and Poincaré series of Fuchsian
singularities, in exact integer arithmetic."""

from .coxeter import (AlmostRootBasis, extend, hilbert_poincare_series,
                      lp_identity_check, random_basis, tau0, tau_plus)
from .exactmath import (IntPolynomial, RationalFunction, TruncatedSeries,
                        poly_arith, series_equal, series_from_rational)
from .fuchsian import (CATALOG, FuchsianData, FuchsianReport, full_report,
                       poincare_direct, poincare_orbit, poincare_theorem,
                       star_lattice, validate)
from .isometry import (Isometry, char_poly_reversed, compose, eichler_siegel,
                       inverse, psi_map, reflection)
from .lattice import Lattice, Vector, hyperbolic_plane, orthogonal_sum

__version__ = "0.1.0"
