#pragma once

namespace wex {

// Every numerical threshold used by the library lives here so callers (and the
// CLI's --tol flag) can override them in one place.
struct Tolerances {
	// Largest |M - M^†| entry accepted (and symmetrised away) at construction.
	double construction = 1e-8;
	// Relative Frobenius residual allowed for V diag(λ) V^† against the input.
	double reconstruction = 1e-9;
	// Generic equality of computed scalars and matrices.
	double equality = 1e-9;
	// |tr ρ - 1| and the most negative eigenvalue accepted for a state.
	double trace = 1e-10;
	double psd = 1e-10;
	// One-sided slack for majorisation gaps and Δ-gap verdicts.
	double verdict = 1e-10;
	// Orthonormality of user supplied bases, unit norm of bipartite amplitudes.
	double basis = 1e-10;
	// Eigenvalues of σ below this are treated as outside its support.
	double support = 1e-12;
	// Δ definition vs closed form; larger gaps raise ConsistencyError.
	double consistency = 1e-6;
};

} // namespace wex
