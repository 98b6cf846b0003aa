#pragma once

#include <cstddef>

namespace levykit::defaults {

// Single source for the numeric knobs the CLI documents via `levykit defaults`.

// Quadrature (Fourier inversion of exp(-t psi)).
inline constexpr double quad_target_abs_tol = 1e-8;
inline constexpr double quad_tail_exponent = 40.0;   // truncate where t*Re psi >= 40
inline constexpr int quad_nodes_per_panel = 16;
inline constexpr int quad_max_panels = 1 << 17;
inline constexpr double contour_shift_factor = 0.75;  // shift = factor * m

// Growth-bound certificate sampling.
inline constexpr int cert_rays = 6;
inline constexpr int cert_points_per_ray = 48;
inline constexpr double cert_radius_lo = 1e-2;
inline constexpr double cert_radius_hi = 3e2;
inline constexpr double cert_strip_fill = 0.9;  // sample up to this fraction of m

// Stated-m default: fraction of the table supremum.
inline constexpr double m_default_factor = 0.9;

// Envelope audit.
inline constexpr double audit_ratio_ceiling = 1e6;
inline constexpr double audit_refine_fail_factor = 1.5;  // >50% drift under refinement: FAIL
inline constexpr int audit_times = 20;
inline constexpr int audit_points = 41;

// Parametrix lattice and internals (d=1).
inline constexpr int ptx_lattice_times = 10;     // geometric in [T/100, T]
inline constexpr int ptx_lattice_points = 41;
inline constexpr int ptx_lattice_yprobes = 5;
inline constexpr double ptx_grid_halfwidth = 16.0;
inline constexpr std::size_t ptx_grid_size = 1 << 14;  // uniform x/z grid
inline constexpr int ptx_sgrid_size = 40;        // log-spaced kernel-stage time grid
inline constexpr double ptx_sgrid_floor = 2e-4;  // fraction of T; power-law below
inline constexpr int ptx_time_nodes = 10;        // midpoint nodes per u^2-substituted half
inline constexpr int ptx_beta_nodes = 7;         // Chebyshev nodes over the index codomain
inline constexpr int ptx_max_orders = 6;
inline constexpr double ptx_resid_dt_frac = 0.01;  // central-difference step t/100

// Monte Carlo.
inline constexpr int mc_cdf_nodes = 2048;
inline constexpr double mc_tail_mass = 1e-7;     // per-side mass beyond the CDF table
inline constexpr double ks_99 = 1.63;            // 99% Kolmogorov-Smirnov coefficient

// Misc.
inline constexpr double envelope_horizon = 1.0;  // default T
inline constexpr double singularity_switch_radius = 1e-4;

}  // namespace levykit::defaults
