#include "wex/linalg.hpp"

#include "wex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace wex {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
	for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
		if (values_[i] < values_[i + 1]) {
			std::ostringstream msg;
			msg << "spectrum not non-increasing at index " << i << ": " << values_[i] << " < "
			    << values_[i + 1];
			throw ValidationError(msg.str());
		}
	}
	sum_ = std::accumulate(values_.begin(), values_.end(), 0.0);
}

Spectrum Spectrum::sorted(std::vector<double> values) {
	std::sort(values.begin(), values.end(), std::greater<>());
	return Spectrum(std::move(values));
}

HermitianMatrix HermitianMatrix::from(const CMatrix& m, const Tolerances& tol) {
	if (m.rows() == 0 || m.rows() != m.cols()) {
		throw ValidationError("Hermitian matrix must be square with dimension >= 1");
	}
	for (Eigen::Index i = 0; i < m.rows(); ++i) {
		for (Eigen::Index j = 0; j < m.cols(); ++j) {
			if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
				std::ostringstream msg;
				msg << "non-finite entry at (" << i << ", " << j << ")";
				throw ValidationError(msg.str());
			}
		}
	}
	const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
	if (asym > tol.construction) {
		std::ostringstream msg;
		msg << "matrix is not Hermitian: max |M - M^dagger| = " << asym << " exceeds "
		    << tol.construction;
		throw ValidationError(msg.str());
	}
	CMatrix h = 0.5 * (m + m.adjoint());
	return HermitianMatrix(std::move(h));
}

HermitianMatrix HermitianMatrix::hermitian_part(const CMatrix& m) {
	if (m.rows() == 0 || m.rows() != m.cols()) {
		throw ValidationError("Hermitian matrix must be square with dimension >= 1");
	}
	return HermitianMatrix(0.5 * (m + m.adjoint()));
}

HermitianMatrix HermitianMatrix::real_diagonal(std::span<const double> diag) {
	if (diag.empty()) {
		throw ValidationError("Hermitian matrix must have dimension >= 1");
	}
	CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(diag.size()), static_cast<Eigen::Index>(diag.size()));
	for (std::size_t i = 0; i < diag.size(); ++i) {
		m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag[i];
	}
	return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
	std::vector<double> ones(dim, 1.0);
	return real_diagonal(ones);
}

EigenDecomposition eigh(const HermitianMatrix& m, const Tolerances& tol) {
	const Eigen::Index n = static_cast<Eigen::Index>(m.dim());
	Eigen::SelfAdjointEigenSolver<CMatrix> solver(m.matrix());
	if (solver.info() != Eigen::Success) {
		throw NumericalError("Hermitian eigensolver did not converge", std::nan(""));
	}
	// Eigen returns ascending order; flip to non-increasing.
	std::vector<double> values(static_cast<std::size_t>(n));
	CMatrix vectors(n, n);
	for (Eigen::Index i = 0; i < n; ++i) {
		values[static_cast<std::size_t>(i)] = solver.eigenvalues()(n - 1 - i);
		vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
	}
	const double scale = std::max(1.0, m.matrix().norm());
	const double residual = (compose(vectors, values) - m.matrix()).norm();
	if (!(residual <= tol.reconstruction * scale)) {
		std::ostringstream msg;
		msg << "Hermitian eigendecomposition residual " << residual << " exceeds tolerance";
		throw NumericalError(msg.str(), residual);
	}
	return {Spectrum(std::move(values)), std::move(vectors)};
}

CMatrix compose(const CMatrix& vectors, std::span<const double> values) {
	RVector v(static_cast<Eigen::Index>(values.size()));
	for (std::size_t i = 0; i < values.size(); ++i) {
		v(static_cast<Eigen::Index>(i)) = values[i];
	}
	return vectors * v.cast<cplx>().asDiagonal() * vectors.adjoint();
}

HermitianMatrix herm_func(const EigenDecomposition& eig, const std::function<double(double)>& f) {
	std::vector<double> mapped(eig.values.size());
	for (std::size_t i = 0; i < mapped.size(); ++i) {
		const double x = eig.values[i];
		mapped[i] = f(x);
		if (!std::isfinite(mapped[i])) {
			std::ostringstream msg;
			msg.precision(17);
			msg << "function undefined at eigenvalue " << x;
			throw DomainError(msg.str());
		}
	}
	return HermitianMatrix::hermitian_part(compose(eig.vectors, mapped));
}

HermitianMatrix herm_func(const HermitianMatrix& m, const std::function<double(double)>& f,
                          const Tolerances& tol) {
	return herm_func(eigh(m, tol), f);
}

double trace_norm(const CMatrix& hermitian) {
	Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
	return solver.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const CMatrix& a, const CMatrix& b) {
	const CMatrix diff = a - b;
	return 0.5 * trace_norm(0.5 * (diff + diff.adjoint()));
}

double unitarity_defect(const CMatrix& u) {
	return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).norm();
}

} // namespace wex
