#pragma once

// Reference computations used only by the tests. None of these call into the
// library's eigensolver, thermodynamics or optimisation code paths.

#include "wex/linalg.hpp"
#include "wex/states.hpp"

#include <cstddef>
#include <vector>

namespace wex::oracle {

// det(M - λI) by Gaussian elimination with partial pivoting (real part; the
// characteristic polynomial of a Hermitian matrix is real on the real line).
double char_poly(const CMatrix& m, double lambda);

// Roots of det(M - λI) on [-‖M‖_F, ‖M‖_F] by a fine sign scan plus bisection,
// sorted non-increasing. Assumes simple eigenvalues.
std::vector<double> eigenvalues_by_bisection(const CMatrix& m, std::size_t scan = 20000);

// exp(M) by scaling and squaring with a `terms`-term Taylor series.
CMatrix taylor_exp(const CMatrix& m, std::size_t terms = 40);

// Σ_i p_i (ln p_i - ln q_i) for commuting diagonal states, 0 ln 0 = 0.
double classical_relative_entropy_nats(const std::vector<double>& p, const std::vector<double>& q);

// Direct Δ for diagonal ρ and diagonal H from W and W_inf written term by term.
double diagonal_delta(const std::vector<double>& p, const std::vector<double>& energies, double kbt);

// Trace norm via the characteristic-polynomial eigenvalues.
double trace_norm_by_bisection(const CMatrix& m);

struct WitnessBounds {
	// max over the λ-grid of g(H_λ), H_λ = εI + (δ-ε)·(rank-k spectral
	// projector of ρ - Σλ_j η_j) for every k; a feasible, hence lower, bound.
	double lower = 0.0;
	// min over the λ-grid of (δ-ε)·‖ρ - Σλ_j η_j‖₁/2, an upper bound by weak duality.
	double upper = 0.0;
};

// Three extreme points, simplex grid with `steps` subdivisions per axis,
// followed by a compass search on λ from the best grid point.
WitnessBounds witness_grid(const DensityMatrix& rho, const std::vector<DensityMatrix>& free, double eps,
                           double delta_max, std::size_t steps);

// log₂ of the best ratio Δ_MU(ρ,H)/Δ(𝕀/d,H) on a points×points grid of
// diagonal qubit Hamiltonians diag(a, b), a, b ∈ [eps, delta], skipping
// |a - b| < min_spread. Terms evaluated from the raw closed form.
double qubit_measure_grid(const std::vector<double>& populations, double eps, double delta_max, std::size_t points,
                          double min_spread, double kbt);

} // namespace wex::oracle
