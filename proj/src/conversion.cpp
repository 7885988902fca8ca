#include "wex/conversion.hpp"

#include "wex/errors.hpp"
#include "wex/parallel.hpp"
#include "wex/random.hpp"
#include "wex/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <limits>

namespace wex {

std::string to_string(ConversionRoute route) {
	switch (route) {
	case ConversionRoute::unital_mu:
		return "unital_mu";
	case ConversionRoute::locc_pure:
		return "locc_pure";
	}
	return "unknown";
}

ConversionVerdict unital_convertible(const DensityMatrix& rho, const DensityMatrix& sigma, double omega, double kbt,
                                     const Tolerances& tol) {
	if (rho.dim() != sigma.dim()) {
		std::ostringstream msg;
		msg << "conversion needs equal dimensions, got " << rho.dim() << " and " << sigma.dim();
		throw ArgumentError(msg.str());
	}
	if (!(omega > 0.0) || !std::isfinite(omega)) {
		throw ArgumentError("omega must be positive and finite");
	}
	const std::size_t d = rho.dim();
	const DensityMatrix rho_down = reorder_descending(rho);
	const DensityMatrix sigma_down = reorder_descending(sigma);

	ConversionVerdict v;
	bool thermo_holds = true;
	for (std::size_t k = 0; k + 1 < d; ++k) {
		const Hamiltonian hk = two_level_hamiltonian(d, k, omega, kbt);
		const double gap = delta(rho_down, hk, tol).delta - delta(sigma_down, hk, tol).delta;
		v.delta_gaps.push_back(gap);
		// Gaps scale with ω; compare them in units of ω so the verdict is scale free.
		if (gap / omega < -tol.verdict) {
			thermo_holds = false;
		}
		if (std::abs(gap / omega) <= tol.verdict) {
			v.boundary = true;
		}
	}
	v.majorisation_report = majorises(rho, sigma, tol);
	if (thermo_holds != v.majorisation_report.holds) {
		std::ostringstream msg;
		msg << "Delta-gap verdict (" << thermo_holds << ") disagrees with partial-sum verdict ("
		    << v.majorisation_report.holds << ")";
		throw RouteDisagreement(msg.str());
	}
	v.convertible = thermo_holds;
	v.boundary = v.boundary || v.majorisation_report.boundary;
	if (v.convertible) {
		v.certificate = build_mixed_unitary_certificate(rho, sigma, tol);
	}
	return v;
}

FalsificationReport falsification_sampling_check(const DensityMatrix& rho, const DensityMatrix& sigma, double eps,
                                       double delta_max, std::size_t samples, std::uint64_t seed, double kbt,
                                       unsigned threads, const Tolerances& tol) {
	if (!(eps >= 0.0 && eps < delta_max) || !std::isfinite(delta_max)) {
		std::ostringstream msg;
		msg << "energy scales must satisfy 0 <= eps < delta, got (" << eps << ", " << delta_max << ")";
		throw ArgumentError(msg.str());
	}
	if (samples == 0) {
		throw ArgumentError("falsification_sampling_check needs n_samples >= 1");
	}
	if (rho.dim() != sigma.dim()) {
		throw ArgumentError("conversion needs equal dimensions");
	}
	const std::size_t d = rho.dim();
	const double width = delta_max - eps;
	const double slack = tol.verdict * width;
	const auto& p = rho.spectrum().values();
	const auto& q = sigma.spectrum().values();

	FalsificationReport report;
	report.min_gap = std::numeric_limits<double>::infinity();
	auto record = [&](std::size_t index, bool family, double gap, std::vector<double> energies) {
		report.min_gap = std::min(report.min_gap, gap);
		if (gap < -slack) {
			report.violations.push_back({index, family, gap, std::move(energies)});
		}
	};

	for (std::size_t k = 0; k + 1 < d; ++k) {
		std::vector<double> e(d, eps);
		for (std::size_t i = 0; i <= k; ++i) {
			e[i] = delta_max;
		}
		const double gap = spectral::aligned_delta(p, e, kbt) - spectral::aligned_delta(q, e, kbt);
		++report.hamiltonians_checked;
		record(k, true, gap, std::move(e));
	}

	std::vector<double> gaps(samples);
	std::vector<std::vector<double>> energies(samples);
	parallel_for(samples, threads, [&](std::size_t i) {
		Rng rng = make_rng(seed, i);
		const Hamiltonian h = sample_bounded_hamiltonian(d, eps, delta_max, kbt, rng);
		gaps[i] = delta_mu_assisted(rho, h, tol) - delta_mu_assisted(sigma, h, tol);
		energies[i] = h.energies().values();
	});
	for (std::size_t i = 0; i < samples; ++i) {
		++report.hamiltonians_checked;
		record(i, false, gaps[i], std::move(energies[i]));
	}
	return report;
}

ConversionVerdict nielsen_locc_check(const PureBipartiteState& psi, const PureBipartiteState& phi, double omega,
                                     double kbt, const Tolerances& tol) {
	if (psi.local_dim() != phi.local_dim()) {
		std::ostringstream msg;
		msg << "pure states have different local dimensions " << psi.local_dim() << " and " << phi.local_dim();
		throw ArgumentError(msg.str());
	}
	// |ψ> → |φ> iff ψ_A ≺ φ_A: the reduced-state conversion runs backwards.
	ConversionVerdict v = unital_convertible(reduced_state(phi), reduced_state(psi), omega, kbt, tol);
	v.via = ConversionRoute::locc_pure;
	v.certificate.reset();
	return v;
}

} // namespace wex
