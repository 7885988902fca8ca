#include "wex/verify.hpp"

#include "wex/conversion.hpp"
#include "wex/errors.hpp"
#include "wex/majorisation.hpp"
#include "wex/parallel.hpp"
#include "wex/random.hpp"
#include "wex/thermo.hpp"
#include "wex/witness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace wex {

namespace {

// One check per instance; returns true when the property held.
using Check = std::function<bool(std::size_t index, Rng& rng)>;

struct Property {
	std::string name;
	Check check;
};

PropertyOutcome run_property(const std::string& suite, const Property& p, const VerifyOptions& o,
                             std::uint64_t salt) {
	std::vector<char> ok(o.n, 0);
	parallel_for(o.n, o.threads, [&](std::size_t i) {
		Rng rng = make_rng(o.seed ^ salt, i);
		try {
			ok[i] = p.check(i, rng) ? 1 : 0;
		} catch (const Error&) {
			ok[i] = 0;
		}
	});
	PropertyOutcome out{suite, p.name, o.n, 0};
	out.failed = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 0));
	return out;
}

DensityMatrix conjugate(const DensityMatrix& rho, const CMatrix& u) {
	return DensityMatrix::from(HermitianMatrix::hermitian_part(u * rho.matrix() * u.adjoint()));
}

DensityMatrix through(const MixedUnitaryChannel& ch, const DensityMatrix& rho) {
	return DensityMatrix::from(HermitianMatrix::hermitian_part(ch.apply(rho.matrix())));
}

PureBipartiteState random_bipartite(std::size_t d, Rng& rng) {
	const CMatrix g = complex_gaussian(d, d, rng);
	return PureBipartiteState::from(g / g.norm());
}

std::vector<Property> thermo_properties() {
	return {
	    {"closed_form_consistency",
	     [](std::size_t i, Rng& rng) {
		     const std::size_t d = 2 + i % 3;
		     std::uniform_real_distribution<double> kt(0.5, 2.0);
		     const DensityMatrix rho = sample_hs_state(d, rng);
		     const Hamiltonian h = sample_bounded_hamiltonian(d, 0.0, 1.0, kt(rng), rng);
		     return delta(rho, h).consistency_gap < 1e-8;
	     }},
	    {"gap_linearity",
	     [](std::size_t i, Rng& rng) {
		     const std::size_t d = 2 + i % 3;
		     const DensityMatrix rho = sample_hs_state(d, rng);
		     const DensityMatrix sigma = sample_hs_state(d, rng);
		     const Hamiltonian h = sample_bounded_hamiltonian(d, 0.0, 1.0, 1.0, rng);
		     const double lhs = delta(rho, h).delta - delta(sigma, h).delta;
		     const double rhs = (h.matrix() * (rho.matrix() - sigma.matrix())).trace().real();
		     return std::abs(lhs - rhs) < 1e-9;
	     }},
	    {"w_inf_unitary_invariance",
	     [](std::size_t i, Rng& rng) {
		     const std::size_t d = 2 + i % 3;
		     const DensityMatrix rho = sample_hs_state(d, rng);
		     const DensityMatrix rotated = conjugate(rho, sample_haar_unitary(d, rng));
		     return std::abs(work_inf(rho) - work_inf(rotated)) < 1e-9;
	     }},
	    {"passive_bound_dominance",
	     [](std::size_t i, Rng& rng) {
		     const std::size_t d = 2 + i % 3;
		     const DensityMatrix rho = sample_hs_state(d, rng);
		     const Hamiltonian h = sample_bounded_hamiltonian(d, 0.0, 1.0, 1.0, rng);
		     const double assisted = delta_mu_assisted(rho, h);
		     for (int t = 0; t < 20; ++t) {
			     if (delta(conjugate(rho, sample_haar_unitary(d, rng)), h).delta > assisted + 1e-12) {
				     return false;
			     }
		     }
		     const DensityMatrix aligned = DensityMatrix::from(
		         HermitianMatrix::hermitian_part(compose(h.eigenvectors(), rho.spectrum().values())));
		     return std::abs(delta(aligned, h).delta - assisted) < 1e-6;
	     }},
	    {"work_nonnegative",
	     [](std::size_t i, Rng& rng) {
		     const std::size_t d = 2 + i % 3;
		     const DensityMatrix rho = sample_hs_state(d, rng);
		     const Hamiltonian h = sample_bounded_hamiltonian(d, 0.0, 1.0, 1.0, rng);
		     return work(rho, h) >= 0.0 && work(thermal_state(h), h) < 1e-9;
	     }},
	};
}

std::vector<Property> majorisation_properties() {
	struct Pair {
		std::size_t d;
		DensityMatrix rho;
		DensityMatrix sigma;
		MixedUnitaryChannel ch;
	};
	auto draw = [](std::size_t i, Rng& rng) {
		const std::size_t d = 2 + i % 5;
		DensityMatrix rho = sample_hs_state(d, rng);
		MixedUnitaryChannel ch = sample_mixed_unitary(d, 1 + i % 4, rng);
		DensityMatrix sigma = through(ch, rho);
		return Pair{d, std::move(rho), std::move(sigma), std::move(ch)};
	};
	return {
	    {"certificate_soundness",
	     [draw](std::size_t i, Rng& rng) {
		     const Pair p = draw(i, rng);
		     const auto cert = build_mixed_unitary_certificate(p.rho, p.sigma);
		     return trace_distance(cert.apply(p.rho.matrix()), p.sigma.matrix()) < 1e-7;
	     }},
	    {"certificate_unitality",
	     [draw](std::size_t i, Rng& rng) {
		     const Pair p = draw(i, rng);
		     const auto cert = build_mixed_unitary_certificate(p.rho, p.sigma);
		     const CMatrix mixed = DensityMatrix::maximally_mixed(p.d).matrix();
		     return (cert.apply(mixed) - mixed).cwiseAbs().maxCoeff() < 1e-9;
	     }},
	    {"chain_length_and_replay",
	     [draw](std::size_t i, Rng& rng) {
		     const Pair p = draw(i, rng);
		     const auto chain = t_transform_chain(p.rho.spectrum(), p.sigma.spectrum());
		     std::vector<double> x = p.rho.spectrum().values();
		     for (const auto& tr : chain) {
			     apply(tr, x);
		     }
		     double err = 0.0;
		     for (std::size_t k = 0; k < x.size(); ++k) {
			     err = std::max(err, std::abs(x[k] - p.sigma.spectrum()[k]));
		     }
		     return chain.size() + 1 <= p.d && err < 1e-9;
	     }},
	    {"birkhoff_term_bound",
	     [draw](std::size_t i, Rng& rng) {
		     const Pair p = draw(i, rng);
		     const auto cert = build_mixed_unitary_certificate(p.rho, p.sigma);
		     validate(cert);
		     return cert.birkhoff_terms.size() <= (p.d - 1) * (p.d - 1) + 1;
	     }},
	    {"transitivity",
	     [draw](std::size_t i, Rng& rng) {
		     const Pair p = draw(i, rng);
		     const DensityMatrix tau = through(sample_mixed_unitary(p.d, 2, rng), p.sigma);
		     return majorises(p.rho, p.sigma).holds && majorises(p.sigma, tau).holds &&
		            majorises(p.rho, tau).holds;
	     }},
	};
}

std::vector<Property> conversion_properties(const VerifyOptions& o) {
	const double partial_sum_slack = o.corrupt_tolerance ? -1e-2 : o.tol.verdict;
	return {
	    {"two_level_equivalence",
	     [partial_sum_slack, tol = o.tol](std::size_t i, Rng& rng) {
		     const std::size_t d = 2 + i % 5;
		     const DensityMatrix rho = sample_hs_state(d, rng);
		     const DensityMatrix sigma = sample_hs_state(d, rng);
		     const DensityMatrix rho_down = reorder_descending(rho);
		     const DensityMatrix sigma_down = reorder_descending(sigma);
		     bool by_delta = true;
		     bool by_sums = true;
		     double acc = 0.0;
		     for (std::size_t k = 0; k + 1 < d; ++k) {
			     const Hamiltonian hk = two_level_hamiltonian(d, k, 1.0);
			     by_delta = by_delta && delta(rho_down, hk).delta - delta(sigma_down, hk).delta >= -tol.verdict;
			     acc += rho.spectrum()[k] - sigma.spectrum()[k];
			     by_sums = by_sums && acc >= -partial_sum_slack;
		     }
		     bool by_certificate = true;
		     try {
			     build_mixed_unitary_certificate(rho, sigma, tol);
		     } catch (const NotConvertibleError&) {
			     by_certificate = false;
		     }
		     return by_delta == by_sums && by_sums == by_certificate;
	     }},
	    {"omega_scale_invariance",
	     [](std::size_t i, Rng& rng) {
		     const std::size_t d = 2 + i % 5;
		     const DensityMatrix rho = sample_hs_state(d, rng);
		     const DensityMatrix sigma = sample_hs_state(d, rng);
		     const bool base = unital_convertible(rho, sigma, 1.0).convertible;
		     return unital_convertible(rho, sigma, 1e-3).convertible == base &&
		            unital_convertible(rho, sigma, 1e3).convertible == base;
	     }},
	    {"forward_falsification",
	     [](std::size_t i, Rng& rng) {
		     const std::size_t d = 2 + i % 5;
		     const DensityMatrix rho = sample_hs_state(d, rng);
		     const DensityMatrix sigma = through(sample_mixed_unitary(d, 3, rng), rho);
		     const auto forward = falsification_sampling_check(rho, sigma, 0.0, 1.0, 50, rng());
		     if (!forward.violations.empty()) {
			     return false;
		     }
		     const DensityMatrix other = sample_hs_state(d, rng);
		     if (majorises(rho, other).holds) {
			     return true;
		     }
		     const auto backward = falsification_sampling_check(rho, other, 0.0, 1.0, 1, rng());
		     return !backward.violations.empty() && backward.violations.front().from_two_level_family;
	     }},
	    {"nielsen_agreement",
	     [](std::size_t i, Rng& rng) {
		     const std::size_t d = 2 + i % 3;
		     const PureBipartiteState psi = random_bipartite(d, rng);
		     const PureBipartiteState phi = random_bipartite(d, rng);
		     const bool direct = majorises(reduced_state(phi), reduced_state(psi)).holds;
		     return nielsen_locc_check(psi, phi).convertible == direct;
	     }},
	};
}

std::vector<Property> witness_properties() {
	constexpr double eps = 0.1;
	constexpr double top = 1.0;
	return {
	    {"singleton_completeness",
	     [](std::size_t i, Rng& rng) {
		     const std::size_t d = 2 + i % 3;
		     const DensityMatrix rho = sample_hs_state(d, rng);
		     const DensityMatrix mixed = DensityMatrix::maximally_mixed(d);
		     const WitnessResult w = witness_search(rho, FreeSet::maximally_mixed(d), eps, top);
		     const double expected = (top - eps) * trace_norm(rho.matrix() - mixed.matrix()) / 2.0;
		     return w.found && std::abs(w.gap - expected) < 1e-9;
	     }},
	    {"witness_soundness",
	     [](std::size_t i, Rng& rng) {
		     const std::size_t d = 2 + i % 3;
		     const DensityMatrix rho = sample_hs_state(d, rng);
		     std::vector<DensityMatrix> pts;
		     for (int k = 0; k < 3; ++k) {
			     pts.push_back(sample_hs_state(d, rng));
		     }
		     const FreeSet free = FreeSet::from(std::move(pts));
		     const WitnessResult w = witness_search(rho, free, eps, top);
		     if (!w.found) {
			     return !w.inconclusive;
		     }
		     return delta(rho, *w.hamiltonian).delta - free_set_max_delta(free, *w.hamiltonian) > 0.0;
	     }},
	    {"ascent_feasibility",
	     [](std::size_t i, Rng& rng) {
		     const std::size_t d = 2 + i % 3;
		     const DensityMatrix rho = sample_hs_state(d, rng);
		     const FreeSet free = FreeSet::from({sample_hs_state(d, rng), sample_hs_state(d, rng)});
		     const WitnessResult w = witness_search(rho, free, eps, top);
		     const auto& e = w.hamiltonian->energies();
		     return e.min() >= eps - 1e-9 && e.max() <= top + 1e-9;
	     }},
	    {"measure_properties",
	     [](std::size_t i, Rng& rng) {
		     const std::size_t d = 2 + i % 2;
		     const DensityMatrix rho = sample_hs_state(d, rng);
		     if (measure_m(DensityMatrix::maximally_mixed(d), eps, top).value >= 1e-9) {
			     return false;
		     }
		     const double m = measure_m(rho, eps, top).value;
		     if (!(m > 0.0)) {
			     return false;
		     }
		     for (int t = 0; t < 5; ++t) {
			     const DensityMatrix out = through(sample_mixed_unitary(d, 2, rng), rho);
			     if (measure_m(out, eps, top).value > m + 1e-6) {
				     return false;
			     }
		     }
		     return true;
	     }},
	};
}

} // namespace

const std::vector<std::string>& verification_suites() {
	static const std::vector<std::string> names{"thermo", "majorisation", "conversion", "witness", "all"};
	return names;
}

std::vector<PropertyOutcome> run_verification(const std::string& suite, const VerifyOptions& options) {
	if (std::find(verification_suites().begin(), verification_suites().end(), suite) == verification_suites().end()) {
		throw ArgumentError("unknown verification suite '" + suite + "'");
	}
	std::vector<PropertyOutcome> out;
	auto run = [&](const std::string& name, const std::vector<Property>& props, std::uint64_t salt) {
		if (suite != name && suite != "all") {
			return;
		}
		for (std::size_t k = 0; k < props.size(); ++k) {
			out.push_back(run_property(name, props[k], options, salt + k));
		}
	};
	run("thermo", thermo_properties(), 0x100);
	run("majorisation", majorisation_properties(), 0x200);
	run("conversion", conversion_properties(options), 0x300);
	run("witness", witness_properties(), 0x400);
	return out;
}

} // namespace wex
