#pragma once

// Central numerical tolerances. Everything that classifies, clamps or
// validates goes through these constants so the acceptance suite has a
// single knob.

namespace entmix::tol {

// Hermiticity defect allowed on inputs, max_ij |m(i,j) - conj(m(j,i))|.
inline constexpr double hermiticity = 1e-12;

// Eigenvalues of a density matrix may go this far negative before the
// state is rejected; anything in (-psd_clamp, 0) is clamped to zero.
inline constexpr double psd_clamp = 1e-10;

// Trace-one tolerance for density matrices.
inline constexpr double unit_trace = 1e-10;

// Reconstruction / factorization residual budget (Frobenius norm).
inline constexpr double residual = 1e-9;

// Jacobi sweeps stop when the off-diagonal Frobenius norm drops below
// this (scaled by the matrix norm when that exceeds one).
inline constexpr double jacobi_off_diagonal = 1e-14;
inline constexpr int jacobi_max_sweeps = 100;

// Guard band for strict inequalities in separability criteria, so that
// boundary states classify as separable.
inline constexpr double criterion_guard = 1e-12;

// A bound check counts as satisfied while slack >= -bound_slack.
inline constexpr double bound_slack = 1e-9;

// Purity deviation allowed when a state must be pure.
inline constexpr double pure_state = 1e-8;

// Parameter-domain checks (x1 + x2 <= 1 and friends) use this guard.
inline constexpr double param_guard = 1e-12;

}  // namespace entmix::tol
