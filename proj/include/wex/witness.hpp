#pragma once

#include "wex/free_set.hpp"
#include "wex/states.hpp"
#include "wex/tolerances.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace wex {

// Projected supergradient ascent on g(H) = min_j tr(H(ρ - η_j)) over
// εI ≤ H ≤ δI. Each phase runs `iterations` steps of size
// step_scale·shrink^phase/√k along the normalised supergradient, restarting
// from the best iterate so far.
struct AscentOptions {
	std::size_t iterations = 500;
	std::size_t phases = 8;
	// 0 selects δ - ε.
	double step_scale = 0.0;
	double shrink = 0.25;
	// A witness needs gap above this.
	double found_threshold = 1e-9;
	// Best-gap improvement during the final phase, relative to δ - ε, below
	// which the ascent counts as converged.
	double convergence = 1e-7;
	double kbt = 1.0;
};

struct WitnessResult {
	bool found = false;
	std::optional<Hamiltonian> hamiltonian;
	// Δ(ρ,H) - max_η Δ(η,H) at the best H.
	double gap = 0.0;
	std::size_t iterations = 0;
	// No witness found and the ascent had not settled.
	bool inconclusive = false;
	// Closed-form optimum (singleton free set).
	bool analytic = false;
};

WitnessResult witness_search(const DensityMatrix& rho, const FreeSet& free, double eps, double delta_max,
                             const AscentOptions& options = {}, const Tolerances& tol = {});

// max over the extreme points of Δ(η, H).
double free_set_max_delta(const FreeSet& free, const Hamiltonian& h);

// How the measure's maximisation over Hamiltonians is sampled. Both terms of
// the ratio depend on H only through its spectrum (the numerator by the
// passive-state bound, the denominator because 𝕀/d is basis independent), so
// candidates are spectra E = ε + s·u with u ∈ [0,1]^d, max u = 1, min u = 0:
//  - shapes: the indicator vectors of H_k (k = 0..d-2) and `random_shapes`
//    seeded uniform draws;
//  - spreads s: (δ-ε)·ladder_ratio^j down to spread_threshold, which is the
//    closest allowed approach to H ∝ 𝕀 (where the ratio is 0/0);
//  - refinement: coordinate-wise golden-section on the best shape at the best
//    spread, then golden-section on the spread between its ladder neighbours.
struct MeasurePlan {
	double kbt = 1.0;
	std::size_t random_shapes = 64;
	double spread_threshold = 1e-6;
	double ladder_ratio = 0.5;
	std::size_t refine_sweeps = 60;
	std::uint64_t seed = 0;
};

struct MeasureResult {
	double value = 0.0;
	// Spectrum (non-increasing) of the best Hamiltonian.
	std::vector<double> best_energies;
	double best_ratio = 1.0;
	double best_spread = 0.0;
	// The maximiser sits on the excluded neighbourhood of H ∝ 𝕀.
	bool at_exclusion_threshold = false;
	std::size_t candidates = 0;
};

// log₂ max_H Δ_MU(ρ,H) / Δ(𝕀/d,H) over εI ≤ H ≤ δI, floored at zero.
// Throws InconclusiveError if no candidate Hamiltonian is non-degenerate.
MeasureResult measure_m(const DensityMatrix& rho, double eps, double delta_max, const MeasurePlan& plan = {});

} // namespace wex
