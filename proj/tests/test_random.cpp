#include "wex/errors.hpp"
#include "wex/random.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace wex;

TEST(HaarUnitary, DimensionOneIsAPhase) {
	const CMatrix u = sample_haar_unitary(1, 7u);
	ASSERT_EQ(u.rows(), 1);
	EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-14);
}

TEST(HaarUnitary, SeededReplayIsExact) {
	EXPECT_EQ(sample_haar_unitary(2, 42u), sample_haar_unitary(2, 42u));
	EXPECT_NE(sample_haar_unitary(2, 42u), sample_haar_unitary(2, 43u));
	EXPECT_LT(unitarity_defect(sample_haar_unitary(6, 1u)), 1e-13);
}

TEST(HaarUnitary, SecondMomentMatchesOneOverD) {
	constexpr std::size_t samples = 10000;
	Rng rng = make_rng(2024);
	double sum = 0.0;
	double sum_sq = 0.0;
	for (std::size_t n = 0; n < samples; ++n) {
		const double x = std::norm(sample_haar_unitary(3, rng)(0, 0));
		sum += x;
		sum_sq += x * x;
	}
	const double mean = sum / samples;
	const double var = sum_sq / samples - mean * mean;
	const double se = std::sqrt(var / samples);
	EXPECT_LT(std::abs(mean - 1.0 / 3.0), 3.0 * se) << "mean " << mean << " se " << se;
}

TEST(HsState, DimensionOneIsOne) {
	const DensityMatrix rho = sample_hs_state(1, 3u);
	EXPECT_NEAR(rho.matrix()(0, 0).real(), 1.0, 1e-15);
}

TEST(HsState, AlwaysAValidState) {
	Rng rng = make_rng(5);
	for (int n = 0; n < 200; ++n) {
		const DensityMatrix rho = sample_hs_state(1 + n % 6, rng);
		EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
		EXPECT_GE(rho.spectrum().min(), -1e-12);
	}
}

// For the Hilbert–Schmidt measure E tr ρ² = (d + K)/(dK + 1) with K = d, i.e.
// 4/5 for a qubit; equivalently the squared Bloch radius 2 tr ρ² - 1 has mean 3/5.
TEST(HsState, QubitMeanPurityIsFourFifths) {
	constexpr std::size_t samples = 10000;
	Rng rng = make_rng(99);
	double sum = 0.0;
	double sum_sq = 0.0;
	for (std::size_t n = 0; n < samples; ++n) {
		const DensityMatrix rho = sample_hs_state(2, rng);
		const double purity = (rho.matrix() * rho.matrix()).trace().real();
		sum += purity;
		sum_sq += purity * purity;
	}
	const double mean = sum / samples;
	const double se = std::sqrt((sum_sq / samples - mean * mean) / samples);
	EXPECT_LT(std::abs(mean - 0.8), 3.0 * se) << "mean " << mean << " se " << se;
	EXPECT_LT(std::abs((2.0 * mean - 1.0) - 0.6), 6.0 * se) << "Bloch radius squared " << 2.0 * mean - 1.0;
}

TEST(MixedUnitary, IsUnitalAndTracePreserving) {
	Rng rng = make_rng(11);
	const MixedUnitaryChannel ch = sample_mixed_unitary(3, 4, rng);
	double total = 0.0;
	for (double w : ch.weights) {
		EXPECT_GT(w, 0.0);
		total += w;
	}
	EXPECT_NEAR(total, 1.0, 1e-14);
	EXPECT_LT((ch.apply(CMatrix::Identity(3, 3)) - CMatrix::Identity(3, 3)).norm(), 1e-13);
	const DensityMatrix rho = sample_hs_state(3, rng);
	EXPECT_NEAR(ch.apply(rho.matrix()).trace().real(), 1.0, 1e-13);
	EXPECT_THROW(sample_mixed_unitary(3, 0, rng), ArgumentError);
}

TEST(BoundedHamiltonian, SpectrumInsideTheBox) {
	Rng rng = make_rng(12);
	for (int n = 0; n < 50; ++n) {
		const Hamiltonian h = sample_bounded_hamiltonian(4, 0.1, 1.0, 1.0, rng);
		EXPECT_GE(h.energies().min(), 0.1 - 1e-12);
		EXPECT_LE(h.energies().max(), 1.0 + 1e-12);
		ASSERT_TRUE(h.bounds().has_value());
		EXPECT_EQ(h.bounds()->lower, 0.1);
	}
}
