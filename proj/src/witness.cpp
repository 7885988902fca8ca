#include "wex/witness.hpp"

#include "wex/errors.hpp"
#include "wex/random.hpp"
#include "wex/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace wex {

namespace {

void check_scales(double eps, double delta_max) {
	if (!(eps >= 0.0 && eps < delta_max) || !std::isfinite(delta_max)) {
		std::ostringstream msg;
		msg << "energy scales must satisfy 0 <= eps < delta, got (" << eps << ", " << delta_max << ")";
		throw ArgumentError(msg.str());
	}
}

// Frobenius-nearest point of {εI ≤ H ≤ δI}.
CMatrix clip_spectrum(const CMatrix& h, double eps, double delta_max) {
	Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (h + h.adjoint()));
	if (solver.info() != Eigen::Success) {
		throw NumericalError("eigensolver failed while projecting onto the energy box", std::nan(""));
	}
	const RVector clipped = solver.eigenvalues().cwiseMax(eps).cwiseMin(delta_max);
	const CMatrix& v = solver.eigenvectors();
	CMatrix out = v * clipped.cast<cplx>().asDiagonal() * v.adjoint();
	return 0.5 * (out + out.adjoint());
}

double inner(const CMatrix& h, const CMatrix& a) {
	// tr(H A) for Hermitian H, A
	return (h.cwiseProduct(a.conjugate())).sum().real();
}

struct Evaluation {
	double value;
	std::size_t active;
};

Evaluation evaluate(const CMatrix& h, const std::vector<CMatrix>& diffs) {
	Evaluation e{std::numeric_limits<double>::infinity(), 0};
	for (std::size_t j = 0; j < diffs.size(); ++j) {
		const double v = inner(h, diffs[j]);
		if (v < e.value) {
			e = {v, j};
		}
	}
	return e;
}

WitnessResult finish(WitnessResult r, const CMatrix& h, double eps, double delta_max, double kbt) {
	r.hamiltonian = Hamiltonian::from(HermitianMatrix::hermitian_part(h), kbt, EnergyBounds{eps, delta_max});
	return r;
}

} // namespace

WitnessResult witness_search(const DensityMatrix& rho, const FreeSet& free, double eps, double delta_max,
                             const AscentOptions& options, const Tolerances&) {
	check_scales(eps, delta_max);
	if (free.dim() != rho.dim()) {
		throw ArgumentError("free set and state dimensions differ");
	}
	const auto d = static_cast<Eigen::Index>(rho.dim());
	const double width = delta_max - eps;
	std::vector<CMatrix> diffs;
	for (const auto& eta : free.extreme_points()) {
		diffs.push_back(rho.matrix() - eta.matrix());
	}

	WitnessResult r;
	if (diffs.size() == 1) {
		// Optimum: full energy on the positive part of ρ - η.
		Eigen::SelfAdjointEigenSolver<CMatrix> solver(diffs.front());
		RVector levels(d);
		double positive = 0.0;
		for (Eigen::Index i = 0; i < d; ++i) {
			const double lambda = solver.eigenvalues()(i);
			levels(i) = lambda > 0.0 ? delta_max : eps;
			positive += std::max(lambda, 0.0);
		}
		const CMatrix& v = solver.eigenvectors();
		const CMatrix h = v * levels.cast<cplx>().asDiagonal() * v.adjoint();
		r.analytic = true;
		r.gap = width * positive;
		r.found = r.gap > options.found_threshold;
		return finish(r, h, eps, delta_max, options.kbt);
	}

	const double step = options.step_scale > 0.0 ? options.step_scale : width;
	CMatrix h = CMatrix::Identity(d, d) * (0.5 * (eps + delta_max));
	CMatrix best_h = h;
	double best = evaluate(h, diffs).value;
	double phase_start_best = best;
	for (std::size_t phase = 0; phase < options.phases; ++phase) {
		phase_start_best = best;
		h = best_h;
		const double scale = step * std::pow(options.shrink, static_cast<double>(phase));
		for (std::size_t k = 1; k <= options.iterations; ++k) {
			const Evaluation e = evaluate(h, diffs);
			++r.iterations;
			if (e.value > best) {
				best = e.value;
				best_h = h;
			}
			const CMatrix& g = diffs[e.active];
			const double norm = g.norm();
			if (norm == 0.0) {
				// ρ is an extreme point: g ≤ 0 everywhere and the centre attains 0.
				break;
			}
			h = clip_spectrum(h + (scale / std::sqrt(static_cast<double>(k)) / norm) * g, eps, delta_max);
		}
	}
	const Evaluation last = evaluate(h, diffs);
	if (last.value > best) {
		best = last.value;
		best_h = h;
	}
	r.gap = best;
	r.found = best > options.found_threshold;
	const bool converged = best - phase_start_best <= options.convergence * width;
	r.inconclusive = !r.found && !converged;
	return finish(r, best_h, eps, delta_max, options.kbt);
}

double free_set_max_delta(const FreeSet& free, const Hamiltonian& h) {
	if (free.dim() != h.dim()) {
		throw ArgumentError("free set and Hamiltonian dimensions differ");
	}
	double best = -std::numeric_limits<double>::infinity();
	for (const auto& eta : free.extreme_points()) {
		best = std::max(best, delta(eta, h).delta);
	}
	return best;
}

namespace {

class RatioObjective {
public:
	RatioObjective(const std::vector<double>& populations, double eps, double kbt)
	    : p_(populations), eps_(eps), kbt_(kbt), energies_(populations.size()) {}

	// NaN when the spectrum is degenerate.
	double operator()(const std::vector<double>& shape, double spread) {
		for (std::size_t i = 0; i < shape.size(); ++i) {
			energies_[i] = eps_ + spread * shape[i];
		}
		const double den = spectral::uniform_state_delta(energies_, kbt_);
		if (!(den > 0.0)) {
			return std::nan("");
		}
		return spectral::aligned_delta(p_, energies_, kbt_) / den;
	}

private:
	const std::vector<double>& p_;
	double eps_;
	double kbt_;
	std::vector<double> energies_;
};

template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, std::size_t iterations) {
	const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
	double a = lo;
	double b = hi;
	double c = b - inv_phi * (b - a);
	double e = a + inv_phi * (b - a);
	double fc = f(c);
	double fe = f(e);
	for (std::size_t i = 0; i < iterations && b - a > 1e-13 * std::max(1.0, std::abs(b)); ++i) {
		if (fc >= fe || std::isnan(fe)) {
			b = e;
			e = c;
			fe = fc;
			c = b - inv_phi * (b - a);
			fc = f(c);
		} else {
			a = c;
			c = e;
			fc = fe;
			e = a + inv_phi * (b - a);
			fe = f(e);
		}
	}
	double x = 0.5 * (a + b);
	double fx = f(x);
	// Endpoints can win when the maximiser sits on the boundary.
	for (double cand : {lo, hi}) {
		const double fv = f(cand);
		if (!std::isnan(fv) && (std::isnan(fx) || fv > fx)) {
			x = cand;
			fx = fv;
		}
	}
	return {x, fx};
}

} // namespace

MeasureResult measure_m(const DensityMatrix& rho, double eps, double delta_max, const MeasurePlan& plan) {
	check_scales(eps, delta_max);
	if (!(plan.spread_threshold > 0.0) || !(plan.ladder_ratio > 0.0 && plan.ladder_ratio < 1.0)) {
		throw ArgumentError("measure plan needs spread_threshold > 0 and 0 < ladder_ratio < 1");
	}
	const std::size_t d = rho.dim();
	const double width = delta_max - eps;
	if (d < 2 || width < plan.spread_threshold) {
		throw InconclusiveError("every admissible Hamiltonian is within the degenerate exclusion zone");
	}
	const std::vector<double>& p = rho.spectrum().values();
	RatioObjective ratio(p, eps, plan.kbt);

	std::vector<std::vector<double>> shapes;
	for (std::size_t k = 0; k + 1 < d; ++k) {
		std::vector<double> u(d, 0.0);
		std::fill(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k + 1), 1.0);
		shapes.push_back(std::move(u));
	}
	if (d > 2) {
		Rng rng = make_rng(plan.seed, 0x6d65617375726dULL);
		std::uniform_real_distribution<double> uni(0.0, 1.0);
		for (std::size_t n = 0; n < plan.random_shapes; ++n) {
			std::vector<double> u(d);
			for (double& x : u) {
				x = uni(rng);
			}
			std::sort(u.begin(), u.end(), std::greater<>());
			const double top = u.front();
			const double bottom = u.back();
			if (!(top > bottom)) {
				continue;
			}
			for (double& x : u) {
				x = (x - bottom) / (top - bottom);
			}
			u.front() = 1.0;
			u.back() = 0.0;
			shapes.push_back(std::move(u));
		}
	}
	std::vector<double> ladder;
	for (double s = width; s > plan.spread_threshold; s *= plan.ladder_ratio) {
		ladder.push_back(s);
	}
	ladder.push_back(plan.spread_threshold);

	MeasureResult result;
	double best = -std::numeric_limits<double>::infinity();
	std::size_t best_shape = 0;
	std::size_t best_level = 0;
	for (std::size_t level = 0; level < ladder.size(); ++level) {
		for (std::size_t si = 0; si < shapes.size(); ++si) {
			const double v = ratio(shapes[si], ladder[level]);
			++result.candidates;
			if (!std::isnan(v) && v > best) {
				best = v;
				best_shape = si;
				best_level = level;
			}
		}
	}
	if (!std::isfinite(best)) {
		throw InconclusiveError("all sampled Hamiltonians were degenerate");
	}

	std::vector<double> shape = shapes[best_shape];
	double spread = ladder[best_level];
	auto refine_shape = [&] {
		for (std::size_t sweep = 0; sweep < plan.refine_sweeps; ++sweep) {
			const double before = best;
			for (std::size_t i = 1; i + 1 < d; ++i) {
				const double lo = shape[i + 1];
				const double hi = shape[i - 1];
				const double keep = shape[i];
				auto [x, fx] = golden_max(
				    [&](double t) {
					    shape[i] = t;
					    return ratio(shape, spread);
				    },
				    lo, hi, 200);
				if (!std::isnan(fx) && fx >= best) {
					shape[i] = x;
					best = fx;
				} else {
					shape[i] = keep;
				}
			}
			if (best - before <= 1e-15 * std::abs(best)) {
				break;
			}
		}
	};
	refine_shape();
	if (best_level + 1 < ladder.size()) {
		const double lo = std::log(ladder[best_level + 1]);
		const double hi = std::log(best_level == 0 ? ladder[0] : ladder[best_level - 1]);
		auto [x, fx] = golden_max([&](double t) { return ratio(shape, std::exp(t)); }, lo, hi, 200);
		if (!std::isnan(fx) && fx > best) {
			best = fx;
			spread = std::exp(x);
			refine_shape();
		}
	}

	result.best_ratio = best;
	result.best_spread = spread;
	result.best_energies.resize(d);
	for (std::size_t i = 0; i < d; ++i) {
		result.best_energies[i] = eps + spread * shape[i];
	}
	result.at_exclusion_threshold = spread <= plan.spread_threshold * (1.0 + 1e-9);
	result.value = std::max(0.0, std::log2(best));
	return result;
}

} // namespace wex
