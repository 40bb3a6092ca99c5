"""Numerical laboratory for phase-twisted Euler products: Hardy-space
approximation of analytic targets, doubling schedules converging to zeta,
Tikhonov-cube measure diagnostics, and argument-principle zero censuses."""

from .approx import (ApproximationResult, DoublingSchedule, approximate_on_disc,
                     doubling_bound, doubling_scheme, greedy_rearrange,
                     minimal_eps, series_convergence_diagnostic)
from .census import (CensusReport, Circle, Contour, Rectangle, ScanRow,
                     rouche_margin, strip_scan, winding_count)
from .cube import (CubePoint, FinitePermutation, TikhonovSphere, box_hit_measure,
                   c_constant, curve_point, discrepancy, hitting_measure_mc,
                   measure_schedule, tikhonov_dist, volume_continuity_check,
                   weighted_box_volume, apply_permutation)
from .errors import CapacityError, DomainError, PoleError, PrecisionError
from .hardy import (BetaVector, HardyElement, beta_coeffs, delta_x, entire_F,
                    eta_inner, inner, norm_sq, peak_scan, wave_element)
from .primes import (Frequency, PrimeTable, frequencies, frequency,
                     nearest_relation, primes_in_log_interval, sieve,
                     verify_log_independence)
from .products import (MeanSquareReport, PhaseAssignment, ProductValue,
                       factor_eval, log_factor, mean_square_bound,
                       mean_square_tail_experiment, product_eval, residual_h)
from .zeta import ZetaValue, sup_on_disc, zeta_em

__version__ = "0.1.0"
