#include "wex/majorisation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace wex {

MajorisationReport majorises(const Spectrum& x, const Spectrum& y, const Tolerances& tol) {
	if (x.size() != y.size()) {
		std::ostringstream msg;
		msg << "majorisation needs equal dimensions, got " << x.size() << " and " << y.size();
		throw ArgumentError(msg.str());
	}
	MajorisationReport r;
	double acc = 0.0;
	double worst = 0.0;
	for (std::size_t k = 0; k + 1 < x.size(); ++k) {
		acc += x[k] - y[k];
		r.partial_sum_gaps.push_back(acc);
		if (k == 0 || acc < worst) {
			worst = acc;
			r.worst_k = k;
		}
		if (acc < -tol.verdict) {
			r.holds = false;
		}
		if (std::abs(acc) <= tol.verdict) {
			r.boundary = true;
		}
	}
	return r;
}

MajorisationReport majorises(const DensityMatrix& rho, const DensityMatrix& sigma, const Tolerances& tol) {
	return majorises(rho.spectrum(), sigma.spectrum(), tol);
}

void apply(const TTransform& tr, std::vector<double>& x) {
	const double xi = x[tr.i];
	const double xj = x[tr.j];
	x[tr.i] = tr.t * xi + (1.0 - tr.t) * xj;
	x[tr.j] = (1.0 - tr.t) * xi + tr.t * xj;
}

RMatrix to_matrix(const TTransform& tr, std::size_t dim) {
	RMatrix m = RMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
	const auto i = static_cast<Eigen::Index>(tr.i);
	const auto j = static_cast<Eigen::Index>(tr.j);
	m(i, i) = tr.t;
	m(j, j) = tr.t;
	m(i, j) = 1.0 - tr.t;
	m(j, i) = 1.0 - tr.t;
	return m;
}

std::vector<TTransform> t_transform_chain(const Spectrum& x, const Spectrum& y, const Tolerances& tol) {
	const MajorisationReport report = majorises(x, y, tol);
	if (!report.holds) {
		std::ostringstream msg;
		msg << "x does not majorise y: partial sum gap at k=" << report.worst_k << " is "
		    << report.partial_sum_gaps[report.worst_k];
		throw NotConvertibleError(msg.str(), report);
	}
	for (const Spectrum* s : {&x, &y}) {
		if (std::abs(s->sum() - 1.0) > tol.equality) {
			throw ArgumentError("T-transform chain needs probability vectors summing to 1");
		}
	}
	const std::size_t d = x.size();
	// Differences below this are treated as already matched.
	const double settle = 1e-15;
	std::vector<double> cur = x.values();
	const auto& target = y.values();
	std::vector<TTransform> chain;
	while (chain.size() + 1 < std::max<std::size_t>(d, 1)) {
		std::size_t a = d;
		for (std::size_t i = d; i-- > 0;) {
			if (cur[i] - target[i] > settle) {
				a = i;
				break;
			}
		}
		if (a == d) {
			break;
		}
		std::size_t b = d;
		for (std::size_t i = a + 1; i < d; ++i) {
			if (target[i] - cur[i] > settle) {
				b = i;
				break;
			}
		}
		if (b == d) {
			// Only rounding-level excess remains above a.
			break;
		}
		const double excess = cur[a] - target[a];
		const double deficit = target[b] - cur[b];
		const double move = std::min(excess, deficit);
		const double span = cur[a] - cur[b];
		const TTransform tr{1.0 - move / span, a, b};
		chain.push_back(tr);
		if (excess <= deficit) {
			cur[b] += excess;
			cur[a] = target[a];
		} else {
			cur[a] -= deficit;
			cur[b] = target[b];
		}
	}
	return chain;
}

RMatrix permutation_matrix(const std::vector<std::size_t>& permutation) {
	const auto n = static_cast<Eigen::Index>(permutation.size());
	RMatrix p = RMatrix::Zero(n, n);
	for (std::size_t i = 0; i < permutation.size(); ++i) {
		p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(permutation[i])) = 1.0;
	}
	return p;
}

namespace {

// Kuhn's augmenting paths; each row tries its columns by decreasing entry.
class SupportMatcher {
public:
	SupportMatcher(const RMatrix& m, double threshold) : m_(m), n_(static_cast<std::size_t>(m.rows())) {
		order_.resize(n_);
		for (std::size_t i = 0; i < n_; ++i) {
			for (std::size_t j = 0; j < n_; ++j) {
				if (m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) > threshold) {
					order_[i].push_back(j);
				}
			}
			std::stable_sort(order_[i].begin(), order_[i].end(), [&](std::size_t a, std::size_t b) {
				return m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a)) >
				       m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(b));
			});
		}
	}

	bool perfect(std::vector<std::size_t>& row_to_col) {
		col_owner_.assign(n_, n_);
		for (std::size_t i = 0; i < n_; ++i) {
			seen_.assign(n_, false);
			if (!augment(i)) {
				return false;
			}
		}
		row_to_col.assign(n_, 0);
		for (std::size_t j = 0; j < n_; ++j) {
			row_to_col[col_owner_[j]] = j;
		}
		return true;
	}

private:
	bool augment(std::size_t row) {
		for (std::size_t col : order_[row]) {
			if (seen_[col]) {
				continue;
			}
			seen_[col] = true;
			if (col_owner_[col] == n_ || augment(col_owner_[col])) {
				col_owner_[col] = row;
				return true;
			}
		}
		return false;
	}

	const RMatrix& m_;
	std::size_t n_;
	std::vector<std::vector<std::size_t>> order_;
	std::vector<std::size_t> col_owner_;
	std::vector<bool> seen_;
};

void check_doubly_stochastic(const RMatrix& d, double slack) {
	if (d.rows() == 0 || d.rows() != d.cols()) {
		throw ArgumentError("doubly stochastic matrix must be square and non-empty");
	}
	const double row_err = (d.rowwise().sum().array() - 1.0).abs().maxCoeff();
	const double col_err = (d.colwise().sum().array() - 1.0).abs().maxCoeff();
	if (row_err > slack || col_err > slack || d.minCoeff() < -slack) {
		std::ostringstream msg;
		msg << "matrix is not doubly stochastic: row error " << row_err << ", column error " << col_err
		    << ", min entry " << d.minCoeff();
		throw ValidationError(msg.str());
	}
}

} // namespace

std::vector<BirkhoffTerm> birkhoff_decompose(const RMatrix& doubly_stochastic, const Tolerances&) {
	check_doubly_stochastic(doubly_stochastic, 1e-8);
	const std::size_t n = static_cast<std::size_t>(doubly_stochastic.rows());
	const double zero = 1e-14;
	RMatrix rest = doubly_stochastic.cwiseMax(0.0);
	std::vector<BirkhoffTerm> terms;
	double covered = 0.0;
	const std::size_t max_terms = (n - 1) * (n - 1) + 1;
	while (1.0 - covered > 1e-13 && terms.size() < max_terms) {
		SupportMatcher matcher(rest, zero);
		std::vector<std::size_t> perm;
		if (!matcher.perfect(perm)) {
			if (1.0 - covered > 1e-9) {
				std::ostringstream msg;
				msg << "no perfect matching on the support with " << 1.0 - covered << " weight left";
				throw DecompositionError(msg.str());
			}
			break;
		}
		double w = 1.0;
		for (std::size_t i = 0; i < n; ++i) {
			w = std::min(w, rest(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i])));
		}
		for (std::size_t i = 0; i < n; ++i) {
			double& e = rest(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i]));
			e -= w;
			if (e < zero) {
				e = 0.0;
			}
		}
		covered += w;
		terms.push_back({w, std::move(perm)});
	}
	if (terms.empty()) {
		throw DecompositionError("Birkhoff decomposition produced no terms");
	}
	for (auto& t : terms) {
		t.weight /= covered;
	}
	RMatrix rebuilt = RMatrix::Zero(doubly_stochastic.rows(), doubly_stochastic.cols());
	for (const auto& t : terms) {
		rebuilt += t.weight * permutation_matrix(t.permutation);
	}
	const double err = (rebuilt - doubly_stochastic).cwiseAbs().maxCoeff();
	if (err > 1e-8) {
		std::ostringstream msg;
		msg << "Birkhoff reconstruction error " << err << " exceeds 1e-8";
		throw DecompositionError(msg.str());
	}
	return terms;
}

MixedUnitaryChannel ConversionCertificate::channel() const {
	MixedUnitaryChannel ch;
	for (const auto& t : birkhoff_terms) {
		ch.weights.push_back(t.weight);
		ch.unitaries.push_back(basis_out * permutation_matrix(t.permutation).cast<cplx>() * basis_in.adjoint());
	}
	return ch;
}

CMatrix ConversionCertificate::apply(const CMatrix& x) const {
	return channel().apply(x);
}

void validate(const ConversionCertificate& cert, const Tolerances& tol) {
	const RMatrix& d = cert.doubly_stochastic;
	if (d.rows() == 0 || d.rows() != d.cols()) {
		throw ValidationError("doubly_stochastic must be a non-empty square matrix");
	}
	const double row_err = (d.rowwise().sum().array() - 1.0).abs().maxCoeff();
	const double col_err = (d.colwise().sum().array() - 1.0).abs().maxCoeff();
	if (row_err > tol.equality || col_err > tol.equality) {
		throw ValidationError("doubly_stochastic rows/columns do not sum to 1");
	}
	if (d.minCoeff() < -1e-12) {
		throw ValidationError("doubly_stochastic has a negative entry");
	}
	const auto n = static_cast<std::size_t>(d.rows());
	double total = 0.0;
	RMatrix rebuilt = RMatrix::Zero(d.rows(), d.cols());
	for (const auto& t : cert.birkhoff_terms) {
		if (!(t.weight > 0.0 && t.weight <= 1.0 + tol.equality)) {
			throw ValidationError("birkhoff weight outside (0, 1]");
		}
		std::vector<std::size_t> sorted = t.permutation;
		std::sort(sorted.begin(), sorted.end());
		if (sorted.size() != n || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
		    (n > 0 && sorted.back() >= n)) {
			throw ValidationError("birkhoff term is not a permutation of 0..d-1");
		}
		total += t.weight;
		rebuilt += t.weight * permutation_matrix(t.permutation);
	}
	if (std::abs(total - 1.0) > tol.equality) {
		throw ValidationError("birkhoff weights do not sum to 1");
	}
	if ((rebuilt - d).cwiseAbs().maxCoeff() > 1e-8) {
		throw ValidationError("birkhoff terms do not reconstruct doubly_stochastic");
	}
	for (const CMatrix* b : {&cert.basis_in, &cert.basis_out}) {
		if (b->rows() != d.rows() || b->cols() != d.cols() || unitarity_defect(*b) > tol.equality) {
			throw ValidationError("certificate basis is not a d x d unitary");
		}
	}
}

ConversionCertificate build_mixed_unitary_certificate(const DensityMatrix& rho, const DensityMatrix& sigma,
                                                      const Tolerances& tol) {
	const MajorisationReport report = majorises(rho, sigma, tol);
	if (!report.holds) {
		std::ostringstream msg;
		msg << "rho does not majorise sigma (worst partial-sum gap " << report.partial_sum_gaps[report.worst_k]
		    << " at k=" << report.worst_k << ")";
		throw NotConvertibleError(msg.str(), report);
	}
	const std::size_t d = rho.dim();
	const auto chain = t_transform_chain(rho.spectrum(), sigma.spectrum(), tol);
	RMatrix ds = RMatrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
	for (const auto& tr : chain) {
		ds = to_matrix(tr, d) * ds;
	}
	ConversionCertificate cert{ds, birkhoff_decompose(ds, tol), rho.eigenvectors(), sigma.eigenvectors()};

	Eigen::Map<const RVector> x(rho.spectrum().values().data(), static_cast<Eigen::Index>(d));
	Eigen::Map<const RVector> y(sigma.spectrum().values().data(), static_cast<Eigen::Index>(d));
	const double spectral_err = (ds * x - y).cwiseAbs().maxCoeff();
	if (spectral_err > 1e-8) {
		std::ostringstream msg;
		msg << "doubly stochastic factor misses the target spectrum by " << spectral_err;
		throw DecompositionError(msg.str());
	}
	return cert;
}

} // namespace wex
