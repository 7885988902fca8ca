#include "wex/conversion.hpp"
#include "wex/errors.hpp"
#include "wex/random.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace wex;

namespace {

DensityMatrix diag_state(std::vector<double> p) {
	return DensityMatrix::diagonal(p);
}

PureBipartiteState schmidt_state(const std::vector<double>& squares) {
	const auto d = static_cast<Eigen::Index>(squares.size());
	CMatrix a = CMatrix::Zero(d, d);
	for (Eigen::Index i = 0; i < d; ++i) {
		a(i, i) = std::sqrt(squares[static_cast<std::size_t>(i)]);
	}
	return PureBipartiteState::from(a);
}

PureBipartiteState random_pure(std::size_t d, Rng& rng) {
	const CMatrix g = complex_gaussian(d, d, rng);
	return PureBipartiteState::from(g / g.norm());
}

// Schmidt coefficients straight from the singular values of the amplitude matrix.
bool schmidt_majorised(const PureBipartiteState& psi, const PureBipartiteState& phi) {
	const RVector a = Eigen::JacobiSVD<CMatrix>(psi.amplitudes()).singularValues().array().square();
	const RVector b = Eigen::JacobiSVD<CMatrix>(phi.amplitudes()).singularValues().array().square();
	double sa = 0.0;
	double sb = 0.0;
	for (Eigen::Index k = 0; k + 1 < a.size(); ++k) {
		sa += a(k);
		sb += b(k);
		if (sb - sa < -1e-10) {
			return false;
		}
	}
	return true;
}

} // namespace

TEST(UnitalConvertible, IdentityConversion) {
	const DensityMatrix rho = sample_hs_state(4, 17u);
	const ConversionVerdict v = unital_convertible(rho, rho);
	EXPECT_TRUE(v.convertible);
	EXPECT_TRUE(v.boundary);
	EXPECT_EQ(v.via, ConversionRoute::unital_mu);
	for (double g : v.delta_gaps) {
		EXPECT_NEAR(g, 0.0, 1e-12);
	}
	ASSERT_TRUE(v.certificate.has_value());
	EXPECT_EQ(v.certificate->birkhoff_terms.size(), 1u);
}

TEST(UnitalConvertible, PureToUniform) {
	const ConversionVerdict v = unital_convertible(diag_state({0.0, 1.0, 0.0}), DensityMatrix::maximally_mixed(3));
	EXPECT_TRUE(v.convertible);
	EXPECT_FALSE(v.boundary);
}

TEST(UnitalConvertible, DeltaGapsEqualOmegaTimesPartialSums) {
	for (double omega : {1.0, 0.25, 3.0}) {
		const ConversionVerdict v =
		    unital_convertible(diag_state({0.5, 0.3, 0.2}), diag_state({0.35, 0.4, 0.25}), omega);
		EXPECT_TRUE(v.convertible);
		ASSERT_EQ(v.delta_gaps.size(), 2u);
		EXPECT_NEAR(v.delta_gaps[0], omega * 0.1, 1e-12);
		EXPECT_NEAR(v.delta_gaps[1], omega * 0.05, 1e-12);
	}
}

TEST(UnitalConvertible, GapsAreTemperatureIndependent) {
	for (double kbt : {0.1, 1.0, 10.0}) {
		const ConversionVerdict v = unital_convertible(diag_state({0.5, 0.3, 0.2}), diag_state({0.4, 0.35, 0.25}), 1.0, kbt);
		EXPECT_NEAR(v.delta_gaps[0], 0.1, 1e-11);
	}
}

TEST(UnitalConvertible, UniformToPureFails) {
	const ConversionVerdict v = unital_convertible(DensityMatrix::maximally_mixed(3), diag_state({1.0, 0.0, 0.0}));
	EXPECT_FALSE(v.convertible);
	EXPECT_FALSE(v.certificate.has_value());
	EXPECT_EQ(v.majorisation_report.worst_k, 0u);
	EXPECT_LT(v.delta_gaps[0], 0.0);
}

TEST(UnitalConvertible, ArgumentErrors) {
	EXPECT_THROW(unital_convertible(DensityMatrix::maximally_mixed(2), DensityMatrix::maximally_mixed(3)),
	             ArgumentError);
	EXPECT_THROW(unital_convertible(DensityMatrix::maximally_mixed(2), DensityMatrix::maximally_mixed(2), 0.0),
	             ArgumentError);
}

TEST(UnitalConvertible, RoutesAgreeOnRandomPairs) {
	Rng rng = make_rng(8);
	std::size_t yes = 0;
	for (int n = 0; n < 400; ++n) {
		const std::size_t d = 2 + static_cast<std::size_t>(n % 5);
		const ConversionVerdict v = unital_convertible(sample_hs_state(d, rng), sample_hs_state(d, rng));
		EXPECT_EQ(v.convertible, v.majorisation_report.holds);
		EXPECT_EQ(v.convertible, v.certificate.has_value());
		yes += v.convertible;
	}
	EXPECT_GT(yes, 0u);
	EXPECT_LT(yes, 400u);
}

TEST(FalsificationCheck, MajorisingPairHasNoViolations) {
	Rng rng = make_rng(9);
	const DensityMatrix rho = sample_hs_state(3, rng);
	const MixedUnitaryChannel ch = sample_mixed_unitary(3, 4, rng);
	const DensityMatrix sigma = DensityMatrix::from(HermitianMatrix::hermitian_part(ch.apply(rho.matrix())));
	const FalsificationReport r = falsification_sampling_check(rho, sigma, 0.0, 1.0, 500, 42);
	EXPECT_TRUE(r.violations.empty());
	EXPECT_EQ(r.hamiltonians_checked, 502u);
	EXPECT_GE(r.min_gap, -1e-10);
}

TEST(FalsificationCheck, NonMajorisingPairIsCaughtByTheFamily) {
	const FalsificationReport r = falsification_sampling_check(diag_state({0.4, 0.35, 0.25}), diag_state({0.5, 0.3, 0.2}),
	                                                 0.1, 1.0, 50, 1);
	ASSERT_FALSE(r.violations.empty());
	EXPECT_TRUE(r.violations.front().from_two_level_family);
	EXPECT_EQ(r.violations.front().index, 0u);
	EXPECT_NEAR(r.violations.front().gap, -0.9 * 0.1, 1e-12);
}

TEST(FalsificationCheck, SelfConversionGapsAreZero) {
	const DensityMatrix rho = sample_hs_state(4, 10u);
	const FalsificationReport r = falsification_sampling_check(rho, rho, 0.0, 1.0, 100, 3);
	EXPECT_TRUE(r.violations.empty());
	EXPECT_GE(r.min_gap, -1e-10);
}

TEST(FalsificationCheck, ThreadCountDoesNotChangeResults) {
	const DensityMatrix rho = sample_hs_state(3, 11u);
	const DensityMatrix sigma = sample_hs_state(3, 12u);
	const FalsificationReport a = falsification_sampling_check(rho, sigma, 0.0, 1.0, 200, 5, 1.0, 1);
	const FalsificationReport b = falsification_sampling_check(rho, sigma, 0.0, 1.0, 200, 5, 1.0, 4);
	ASSERT_EQ(a.violations.size(), b.violations.size());
	EXPECT_EQ(a.min_gap, b.min_gap);
	for (std::size_t i = 0; i < a.violations.size(); ++i) {
		EXPECT_EQ(a.violations[i].index, b.violations[i].index);
		EXPECT_EQ(a.violations[i].gap, b.violations[i].gap);
	}
}

TEST(FalsificationCheck, ArgumentErrors) {
	const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
	EXPECT_THROW(falsification_sampling_check(rho, rho, 1.0, 0.5, 10, 0), ArgumentError);
	EXPECT_THROW(falsification_sampling_check(rho, rho, 0.0, 1.0, 0, 0), ArgumentError);
}

TEST(Nielsen, MaximallyEntangledConvertsToAnything) {
	Rng rng = make_rng(13);
	const PureBipartiteState psi = schmidt_state({1.0 / 3, 1.0 / 3, 1.0 / 3});
	for (int n = 0; n < 20; ++n) {
		const ConversionVerdict v = nielsen_locc_check(psi, random_pure(3, rng));
		EXPECT_TRUE(v.convertible);
		EXPECT_EQ(v.via, ConversionRoute::locc_pure);
		EXPECT_FALSE(v.certificate.has_value());
	}
}

TEST(Nielsen, ProductCannotBecomeEntangled) {
	EXPECT_FALSE(nielsen_locc_check(schmidt_state({1.0, 0.0}), schmidt_state({0.5, 0.5})).convertible);
}

TEST(Nielsen, QubitExample) {
	const ConversionVerdict v = nielsen_locc_check(schmidt_state({0.6, 0.4}), schmidt_state({0.8, 0.2}), 2.0);
	EXPECT_TRUE(v.convertible);
	ASSERT_EQ(v.delta_gaps.size(), 1u);
	EXPECT_NEAR(v.delta_gaps[0], 2.0 * 0.2, 1e-12);
	EXPECT_FALSE(nielsen_locc_check(schmidt_state({0.8, 0.2}), schmidt_state({0.6, 0.4})).convertible);
}

TEST(Nielsen, AgreesWithSchmidtMajorisation) {
	Rng rng = make_rng(14);
	for (int n = 0; n < 300; ++n) {
		const std::size_t d = 2 + static_cast<std::size_t>(n % 3);
		const PureBipartiteState psi = random_pure(d, rng);
		const PureBipartiteState phi = random_pure(d, rng);
		EXPECT_EQ(nielsen_locc_check(psi, phi).convertible, schmidt_majorised(psi, phi));
	}
}

TEST(Nielsen, DimensionMismatch) {
	EXPECT_THROW(nielsen_locc_check(schmidt_state({1.0, 0.0}), schmidt_state({1.0, 0.0, 0.0})), ArgumentError);
}
