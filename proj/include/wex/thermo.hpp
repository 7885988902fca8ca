#pragma once

#include "wex/free_set.hpp"
#include "wex/states.hpp"
#include "wex/tolerances.hpp"

#include <span>

namespace wex {

// Energies are reported in the units of H; kBT lives on the Hamiltonian.
// Internally everything is in nats, so kBT·ln2·(bits) = kBT·(nats).

struct WorkReport {
	double w = 0.0;
	double w_inf = 0.0;
	// w - w_inf
	double delta = 0.0;
	// tr(Hρ) + kBT ln tr e^{-H/kBT} - kBT ln d
	double delta_closed_form = 0.0;
	double consistency_gap = 0.0;
};

struct RelativeEntropy {
	double bits = 0.0;
	// ρ has weight outside the support of σ; bits is +inf.
	bool infinite = false;
};

// e^{-H/kBT} / Z, evaluated with the ground energy shifted out.
DensityMatrix thermal_state(const Hamiltonian& h);
// ln tr e^{-H/kBT}
double log_partition(const Hamiltonian& h);

RelativeEntropy relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, const Tolerances& tol = {});
// Von Neumann entropy in nats, 0·ln 0 = 0.
double entropy_nats(const DensityMatrix& rho);

// kBT ln2 · D(ρ‖γ_H)
double work(const DensityMatrix& rho, const Hamiltonian& h);
// W(ρ, H = 0) = kBT (ln d - S(ρ))
double work_inf(const DensityMatrix& rho, double kbt = 1.0);

// Computes Δ both as W - W_inf and from the closed form; throws
// ConsistencyError if they disagree by more than tol.consistency (scaled by
// the energy range of H).
WorkReport delta(const DensityMatrix& rho, const Hamiltonian& h, const Tolerances& tol = {});
double delta_closed_form(const DensityMatrix& rho, const Hamiltonian& h);

// max over unitaries of Δ(UρU^†, H) = Σ ρ_i↓ E_i↓ + kBT (ln Z - ln d).
// Requires H ≥ 0 (PreconditionError otherwise).
double delta_mu_assisted(const DensityMatrix& rho, const Hamiltonian& h, const Tolerances& tol = {});

// Assisted Δ under mixtures of the identity and free-state preparations:
// max(Δ(ρ,H), max_η Δ(η,H)). Δ is affine in the state, so only the two ends
// of each mixture matter.
double delta_omin_assisted(const DensityMatrix& rho, const Hamiltonian& h, const FreeSet& free);

namespace spectral {

// Δ(𝕀/d, H) = kBT ln( (1/d) Σ e^{-(E_i - Ē)/kBT} ) from the energies alone.
// Non-negative, zero iff all energies coincide. Stable for nearly degenerate
// spectra, where it behaves like Var(E)/(2 kBT).
double uniform_state_delta(std::span<const double> energies, double kbt);

// Σ_i p_i E_i + kBT (ln Z - ln d) for populations p aligned with energies.
// With both sorted non-increasing this is the unitarily assisted value.
double aligned_delta(std::span<const double> populations, std::span<const double> energies, double kbt);

} // namespace spectral

} // namespace wex
