#include "wex/thermo.hpp"

#include "wex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

namespace wex {

namespace {

// tr ρ ln ρ - tr ρ ln σ with σ = Σ_j exp(log_sigma_j) |s_j><s_j|.
// Entries of log_sigma equal to -inf mark σ's kernel.
RelativeEntropy relative_entropy_nats(const DensityMatrix& rho, const CMatrix& sigma_vectors,
                                      const std::vector<double>& log_sigma, double weight_tol) {
	const auto& p = rho.spectrum().values();
	const RMatrix overlap = (rho.eigenvectors().adjoint() * sigma_vectors).cwiseAbs2();
	double value = 0.0;
	for (std::size_t i = 0; i < p.size(); ++i) {
		if (p[i] > 0.0) {
			value += p[i] * std::log(p[i]);
		}
	}
	for (std::size_t j = 0; j < log_sigma.size(); ++j) {
		double weight = 0.0;
		for (std::size_t i = 0; i < p.size(); ++i) {
			weight += p[i] * overlap(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
		}
		if (std::isinf(log_sigma[j])) {
			if (weight > weight_tol) {
				return {std::numeric_limits<double>::infinity(), true};
			}
			continue;
		}
		value -= weight * log_sigma[j];
	}
	// Exact zero is the minimum; anything slightly below is rounding.
	if (value < 0.0 && value > -1e-12) {
		value = 0.0;
	}
	return {value, false};
}

std::vector<double> thermal_log_populations(const Hamiltonian& h) {
	const auto& e = h.energies().values();
	const double lnz = log_partition(h);
	std::vector<double> out(e.size());
	for (std::size_t i = 0; i < e.size(); ++i) {
		out[i] = -e[i] / h.kbt() - lnz;
	}
	return out;
}

double mean(std::span<const double> v) {
	double s = 0.0;
	for (double x : v) {
		s += x;
	}
	return s / static_cast<double>(v.size());
}

// e^{-x} - 1 + x
double boltzmann_excess(double x) {
	if (std::abs(x) < 1e-2) {
		// Alternating Taylor tail, truncation error below x^10/10!.
		const double x2 = x * x;
		return x2 * (0.5 - x / 6.0 + x2 / 24.0 - x2 * x / 120.0 + x2 * x2 / 720.0 - x2 * x2 * x / 5040.0 +
		             x2 * x2 * x2 / 40320.0 - x2 * x2 * x2 * x / 362880.0);
	}
	return std::expm1(-x) + x;
}

} // namespace

double log_partition(const Hamiltonian& h) {
	const auto& e = h.energies().values();
	const double ground = e.back();
	double s = 0.0;
	for (double x : e) {
		s += std::exp(-(x - ground) / h.kbt());
	}
	return -ground / h.kbt() + std::log(s);
}

DensityMatrix thermal_state(const Hamiltonian& h) {
	const auto& e = h.energies().values();
	const double ground = e.back();
	std::vector<double> pop(e.size());
	double z = 0.0;
	for (std::size_t i = 0; i < e.size(); ++i) {
		pop[i] = std::exp(-(e[i] - ground) / h.kbt());
		z += pop[i];
	}
	for (double& x : pop) {
		x /= z;
	}
	return DensityMatrix::from(HermitianMatrix::hermitian_part(compose(h.eigenvectors(), pop)));
}

RelativeEntropy relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, const Tolerances& tol) {
	if (rho.dim() != sigma.dim()) {
		throw ArgumentError("relative entropy needs states of equal dimension");
	}
	const auto& q = sigma.spectrum().values();
	std::vector<double> log_q(q.size());
	for (std::size_t j = 0; j < q.size(); ++j) {
		log_q[j] = q[j] < tol.support ? -std::numeric_limits<double>::infinity() : std::log(q[j]);
	}
	RelativeEntropy r = relative_entropy_nats(rho, sigma.eigenvectors(), log_q, tol.psd);
	if (!r.infinite) {
		r.bits /= std::numbers::ln2;
	}
	return r;
}

double entropy_nats(const DensityMatrix& rho) {
	double s = 0.0;
	for (double p : rho.spectrum().values()) {
		if (p > 0.0) {
			s -= p * std::log(p);
		}
	}
	return s;
}

double work(const DensityMatrix& rho, const Hamiltonian& h) {
	if (rho.dim() != h.dim()) {
		throw ArgumentError("state and Hamiltonian dimensions differ");
	}
	// γ is full rank, so the result is always finite.
	const RelativeEntropy d = relative_entropy_nats(rho, h.eigenvectors(), thermal_log_populations(h), 0.0);
	return h.kbt() * d.bits;
}

double work_inf(const DensityMatrix& rho, double kbt) {
	if (!(kbt > 0.0) || !std::isfinite(kbt)) {
		throw ArgumentError("kBT must be positive and finite");
	}
	const double value = std::log(static_cast<double>(rho.dim())) - entropy_nats(rho);
	return kbt * std::max(value, 0.0);
}

double delta_closed_form(const DensityMatrix& rho, const Hamiltonian& h) {
	if (rho.dim() != h.dim()) {
		throw ArgumentError("state and Hamiltonian dimensions differ");
	}
	const auto& e = h.energies().values();
	const double energy = (h.matrix() * rho.matrix()).trace().real();
	return energy - mean(e) + spectral::uniform_state_delta(e, h.kbt());
}

WorkReport delta(const DensityMatrix& rho, const Hamiltonian& h, const Tolerances& tol) {
	WorkReport r;
	r.w = work(rho, h);
	r.w_inf = work_inf(rho, h.kbt());
	r.delta = r.w - r.w_inf;
	r.delta_closed_form = delta_closed_form(rho, h);
	r.consistency_gap = std::abs(r.delta - r.delta_closed_form);
	const double scale = std::max({1.0, std::abs(h.energies().max()), std::abs(h.energies().min())});
	if (!(r.consistency_gap <= tol.consistency * scale)) {
		std::ostringstream msg;
		msg << "Delta definition and closed form disagree by " << r.consistency_gap;
		throw ConsistencyError(msg.str());
	}
	return r;
}

double delta_mu_assisted(const DensityMatrix& rho, const Hamiltonian& h, const Tolerances& tol) {
	if (rho.dim() != h.dim()) {
		throw ArgumentError("state and Hamiltonian dimensions differ");
	}
	if (h.energies().min() < -tol.psd) {
		std::ostringstream msg;
		msg << "unitarily assisted Delta requires H >= 0, lowest energy is " << h.energies().min();
		throw PreconditionError(msg.str());
	}
	return spectral::aligned_delta(rho.spectrum().values(), h.energies().values(), h.kbt());
}

double delta_omin_assisted(const DensityMatrix& rho, const Hamiltonian& h, const FreeSet& free) {
	if (free.dim() != rho.dim()) {
		throw ArgumentError("free set and state dimensions differ");
	}
	double best = delta(rho, h).delta;
	for (const auto& eta : free.extreme_points()) {
		best = std::max(best, delta(eta, h).delta);
	}
	return best;
}

namespace spectral {

double uniform_state_delta(std::span<const double> energies, double kbt) {
	const double centre = mean(energies);
	double spread = 0.0;
	for (double e : energies) {
		spread = std::max(spread, std::abs(e - centre) / kbt);
	}
	const auto n = static_cast<double>(energies.size());
	if (spread <= 1.0) {
		double acc = 0.0;
		for (double e : energies) {
			acc += boltzmann_excess((e - centre) / kbt);
		}
		return kbt * std::log1p(acc / n);
	}
	// log-sum-exp route for wide spectra
	double top = -std::numeric_limits<double>::infinity();
	for (double e : energies) {
		top = std::max(top, -(e - centre) / kbt);
	}
	double acc = 0.0;
	for (double e : energies) {
		acc += std::exp(-(e - centre) / kbt - top);
	}
	return kbt * std::max(0.0, top + std::log(acc / n));
}

double aligned_delta(std::span<const double> populations, std::span<const double> energies, double kbt) {
	if (populations.size() != energies.size()) {
		throw ArgumentError("populations and energies differ in length");
	}
	const double centre = mean(energies);
	const double uniform = 1.0 / static_cast<double>(energies.size());
	double linear = 0.0;
	for (std::size_t i = 0; i < energies.size(); ++i) {
		linear += (populations[i] - uniform) * (energies[i] - centre);
	}
	return linear + uniform_state_delta(energies, kbt);
}

} // namespace spectral

} // namespace wex
