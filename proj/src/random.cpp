#include "wex/random.hpp"

#include "wex/errors.hpp"

#include <cmath>

namespace wex {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
	std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
	                  static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), 0x5eedu};
	return Rng(seq);
}

CMatrix complex_gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
	std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
	CMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
	for (Eigen::Index j = 0; j < g.cols(); ++j) {
		for (Eigen::Index i = 0; i < g.rows(); ++i) {
			const double re = normal(rng);
			const double im = normal(rng);
			g(i, j) = cplx(re, im);
		}
	}
	return g;
}

CMatrix sample_haar_unitary(std::size_t dim, Rng& rng) {
	if (dim == 0) {
		throw ArgumentError("dimension must be >= 1");
	}
	const CMatrix g = complex_gaussian(dim, dim, rng);
	Eigen::HouseholderQR<CMatrix> qr(g);
	CMatrix q = qr.householderQ();
	const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
	for (Eigen::Index i = 0; i < q.cols(); ++i) {
		const cplx rii = r(i, i);
		const double mag = std::abs(rii);
		q.col(i) *= mag > 0.0 ? rii / mag : cplx(1.0, 0.0);
	}
	return q;
}

CMatrix sample_haar_unitary(std::size_t dim, std::uint64_t seed) {
	Rng rng = make_rng(seed);
	return sample_haar_unitary(dim, rng);
}

DensityMatrix sample_hs_state(std::size_t dim, Rng& rng) {
	if (dim == 0) {
		throw ArgumentError("dimension must be >= 1");
	}
	const CMatrix g = complex_gaussian(dim, dim, rng);
	const CMatrix w = g * g.adjoint();
	return DensityMatrix::from(HermitianMatrix::hermitian_part(w / w.trace().real()));
}

DensityMatrix sample_hs_state(std::size_t dim, std::uint64_t seed) {
	Rng rng = make_rng(seed);
	return sample_hs_state(dim, rng);
}

MixedUnitaryChannel sample_mixed_unitary(std::size_t dim, std::size_t terms, Rng& rng) {
	if (terms == 0) {
		throw ArgumentError("a mixed-unitary channel needs at least one term");
	}
	std::exponential_distribution<double> expo(1.0);
	MixedUnitaryChannel ch;
	double total = 0.0;
	for (std::size_t m = 0; m < terms; ++m) {
		ch.weights.push_back(expo(rng));
		total += ch.weights.back();
		ch.unitaries.push_back(sample_haar_unitary(dim, rng));
	}
	for (double& w : ch.weights) {
		w /= total;
	}
	return ch;
}

Hamiltonian sample_bounded_hamiltonian(std::size_t dim, double lower, double upper, double kbt, Rng& rng) {
	std::uniform_real_distribution<double> uni(lower, upper);
	std::vector<double> e(dim);
	for (double& x : e) {
		x = uni(rng);
	}
	const CMatrix u = sample_haar_unitary(dim, rng);
	return Hamiltonian::from(HermitianMatrix::hermitian_part(compose(u, e)), kbt, EnergyBounds{lower, upper});
}

} // namespace wex
