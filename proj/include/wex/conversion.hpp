#pragma once

#include "wex/majorisation.hpp"
#include "wex/states.hpp"
#include "wex/tolerances.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wex {

enum class ConversionRoute { unital_mu, locc_pure };

std::string to_string(ConversionRoute route);

struct ConversionVerdict {
	bool convertible = false;
	ConversionRoute via = ConversionRoute::unital_mu;
	// Δ(ρ↓, H_k) - Δ(σ↓, H_k) for k = 0..d-2, in units of H (kBT energy units).
	std::vector<double> delta_gaps;
	MajorisationReport majorisation_report;
	std::optional<ConversionCertificate> certificate;
	// A gap sits within tolerance of zero; the verdict counts it as convertible.
	bool boundary = false;
};

// Decides ρ → σ under unital (equivalently mixed-unitary) channels twice: from
// Δ-gaps on the two-level family H_k and from spectral partial sums. The two
// must agree (RouteDisagreement otherwise). Attaches a certificate when the
// conversion is possible.
ConversionVerdict unital_convertible(const DensityMatrix& rho, const DensityMatrix& sigma, double omega = 1.0,
                                     double kbt = 1.0, const Tolerances& tol = {});

struct FalsificationViolation {
	// Index into the deterministic family (k) or the random sample index.
	std::size_t index = 0;
	bool from_two_level_family = false;
	// Δ_MU(ρ,H) - Δ_MU(σ,H)
	double gap = 0.0;
	std::vector<double> energies;
};

struct FalsificationReport {
	std::size_t hamiltonians_checked = 0;
	double min_gap = 0.0;
	std::vector<FalsificationViolation> violations;
};

// Searches for a Hamiltonian εI ≤ H ≤ δI with Δ_MU(ρ,H) < Δ_MU(σ,H), which
// disproves ρ → σ. Checks the family εI + (δ-ε)·H_k/ω for k = 0..d-2 and
// `samples` random Hamiltonians (spectrum i.i.d. U[ε,δ], Haar basis). Sample
// i draws from stream (seed, i), so results do not depend on `threads`.
// Violations are sorted: family first by k, then samples by index.
FalsificationReport falsification_sampling_check(const DensityMatrix& rho, const DensityMatrix& sigma, double eps,
                                       double delta_max, std::size_t samples, std::uint64_t seed,
                                       double kbt = 1.0, unsigned threads = 1, const Tolerances& tol = {});

// |ψ> → |φ> by LOCC iff φ's reduced state majorises ψ's; decided through
// unital_convertible(φ_A, ψ_A) with via = locc_pure and no certificate.
ConversionVerdict nielsen_locc_check(const PureBipartiteState& psi, const PureBipartiteState& phi, double omega = 1.0,
                                     double kbt = 1.0, const Tolerances& tol = {});

} // namespace wex
