#include "oracles.hpp"
#include "wex/errors.hpp"
#include "wex/random.hpp"
#include "wex/thermo.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace wex;

namespace {

// Reference values evaluated at 30 significant digits.
constexpr double gamma0 = 0.731058578630004879;
constexpr double gamma1 = 0.268941421369995121;
constexpr double d_nats = 0.000926542899414484;
constexpr double d_bits = 0.00133671884615616;
constexpr double w_inf_q = 0.130812035941136959;
constexpr double delta_q = -0.129885493041722475;
constexpr double delta_mu_q = 0.370114506958277525;

DensityMatrix qubit(double a, double b) {
	const std::vector<double> p{a, b};
	return DensityMatrix::diagonal(p);
}

Hamiltonian diag_h(std::vector<double> e, double kbt = 1.0) {
	return Hamiltonian::diagonal(e, kbt);
}

} // namespace

TEST(ThermalState, DegenerateHamiltonianGivesMaximallyMixed) {
	const Hamiltonian h = Hamiltonian::from(HermitianMatrix::from(2.5 * CMatrix::Identity(3, 3)));
	EXPECT_LT((thermal_state(h).matrix() - CMatrix::Identity(3, 3) / 3.0).norm(), 1e-15);
}

TEST(ThermalState, QubitPopulations) {
	const DensityMatrix g = thermal_state(diag_h({0.0, 1.0}));
	EXPECT_NEAR(g.matrix()(0, 0).real(), gamma0, 1e-15);
	EXPECT_NEAR(g.matrix()(1, 1).real(), gamma1, 1e-15);
	EXPECT_NEAR(log_partition(diag_h({0.0, 1.0})), std::log1p(std::exp(-1.0)), 1e-15);
}

TEST(ThermalState, HighTemperatureLimit) {
	const DensityMatrix g = thermal_state(diag_h({0.0, 0.3, 1.0}, 1e6));
	EXPECT_LT((g.matrix() - CMatrix::Identity(3, 3) / 3.0).cwiseAbs().maxCoeff(), 1e-5);
}

TEST(ThermalState, LargeEnergiesDoNotOverflow) {
	const DensityMatrix g = thermal_state(diag_h({5000.0, 5001.0}));
	EXPECT_NEAR(g.matrix()(0, 0).real(), gamma0, 1e-12);
	EXPECT_TRUE(std::isfinite(log_partition(diag_h({-5000.0, -5001.0}))));
}

TEST(RelativeEntropy, SelfIsZero) {
	const DensityMatrix rho = sample_hs_state(4, 8u);
	const RelativeEntropy r = relative_entropy(rho, rho);
	EXPECT_FALSE(r.infinite);
	EXPECT_NEAR(r.bits, 0.0, 1e-10);
}

TEST(RelativeEntropy, PureAgainstMaximallyMixedIsOneBit) {
	EXPECT_NEAR(relative_entropy(qubit(1.0, 0.0), DensityMatrix::maximally_mixed(2)).bits, 1.0, 1e-14);
}

TEST(RelativeEntropy, QubitAgainstThermal) {
	const RelativeEntropy r = relative_entropy(qubit(0.75, 0.25), qubit(gamma0, gamma1));
	EXPECT_NEAR(r.bits, d_bits, 1e-12);
	const double oracle = oracle::classical_relative_entropy_nats({0.75, 0.25}, {gamma0, gamma1});
	EXPECT_NEAR(oracle, d_nats, 1e-15);
}

TEST(RelativeEntropy, SupportMismatchIsInfinite) {
	const RelativeEntropy r = relative_entropy(qubit(0.5, 0.5), qubit(1.0, 0.0));
	EXPECT_TRUE(r.infinite);
	EXPECT_TRUE(std::isinf(r.bits));
	EXPECT_FALSE(relative_entropy(qubit(1.0, 0.0), qubit(1.0, 0.0)).infinite);
	EXPECT_THROW(relative_entropy(qubit(1.0, 0.0), DensityMatrix::maximally_mixed(3)), ArgumentError);
}

TEST(Work, ThermalStateExtractsNothing) {
	Rng rng = make_rng(21);
	const Hamiltonian h = sample_bounded_hamiltonian(3, 0.0, 2.0, 0.7, rng);
	EXPECT_NEAR(work(thermal_state(h), h), 0.0, 1e-9);
}

TEST(Work, QubitValue) {
	EXPECT_NEAR(work(qubit(0.75, 0.25), diag_h({0.0, 1.0})), d_nats, 1e-12);
}

TEST(Work, GroundStateAtLargeGapVanishes) {
	EXPECT_NEAR(work(qubit(1.0, 0.0), diag_h({0.0, 40.0})), 0.0, 1e-15);
	EXPECT_NEAR(work(qubit(1.0, 0.0), diag_h({0.0, 5.0})), std::log1p(std::exp(-5.0)), 1e-15);
}

TEST(WorkInf, Values) {
	EXPECT_NEAR(work_inf(DensityMatrix::maximally_mixed(3)), 0.0, 1e-15);
	EXPECT_NEAR(work_inf(qubit(1.0, 0.0)), std::log(2.0), 1e-15);
	EXPECT_NEAR(work_inf(qubit(0.75, 0.25)), w_inf_q, 1e-15);
	EXPECT_NEAR(work_inf(qubit(0.75, 0.25), 2.0), 2.0 * w_inf_q, 1e-15);
	EXPECT_THROW(work_inf(qubit(1.0, 0.0), -1.0), ArgumentError);
}

TEST(Delta, ZeroHamiltonianAndDegenerateCases) {
	const DensityMatrix rho = sample_hs_state(3, 4u);
	EXPECT_NEAR(delta(rho, diag_h({0.0, 0.0, 0.0})).delta, 0.0, 1e-12);
	EXPECT_NEAR(delta(DensityMatrix::maximally_mixed(2), diag_h({0.4, 0.4})).delta, 0.0, 1e-15);
}

TEST(Delta, QubitValueMatchesBothRoutes) {
	const WorkReport r = delta(qubit(0.75, 0.25), diag_h({0.0, 1.0}));
	EXPECT_NEAR(r.w, d_nats, 1e-12);
	EXPECT_NEAR(r.w_inf, w_inf_q, 1e-15);
	EXPECT_NEAR(r.delta, delta_q, 1e-12);
	EXPECT_NEAR(r.delta_closed_form, delta_q, 1e-15);
	EXPECT_NEAR(0.25 + std::log1p(std::exp(-1.0)) - std::log(2.0), delta_q, 1e-15);
	EXPECT_LT(r.consistency_gap, 1e-12);
}

TEST(Delta, MatchesTermByTermOracleOnDiagonalInputs) {
	Rng rng = make_rng(31);
	std::uniform_real_distribution<double> uni(0.0, 3.0);
	for (int n = 0; n < 100; ++n) {
		const std::size_t d = 2 + static_cast<std::size_t>(n % 4);
		std::vector<double> p(d);
		std::vector<double> e(d);
		double total = 0.0;
		for (std::size_t i = 0; i < d; ++i) {
			p[i] = uni(rng) + 0.01;
			total += p[i];
			e[i] = uni(rng);
		}
		for (double& x : p) {
			x /= total;
		}
		const double kbt = 0.3 + uni(rng);
		const WorkReport r = delta(DensityMatrix::diagonal(p), Hamiltonian::diagonal(e, kbt));
		EXPECT_NEAR(r.delta, oracle::diagonal_delta(p, e, kbt), 1e-10);
	}
}

TEST(Delta, DimensionMismatch) {
	EXPECT_THROW(delta(qubit(1.0, 0.0), diag_h({0.0, 1.0, 2.0})), ArgumentError);
}

TEST(DeltaMuAssisted, MaximallyMixedEqualsDelta) {
	const Hamiltonian h = diag_h({0.2, 0.9, 0.5});
	const DensityMatrix mm = DensityMatrix::maximally_mixed(3);
	EXPECT_NEAR(delta_mu_assisted(mm, h), delta(mm, h).delta, 1e-14);
}

TEST(DeltaMuAssisted, QubitValue) {
	EXPECT_NEAR(delta_mu_assisted(qubit(0.25, 0.75), diag_h({1.0, 0.0})), delta_mu_q, 1e-15);
	EXPECT_NEAR(0.75 + std::log1p(std::exp(-1.0)) - std::log(2.0), delta_mu_q, 1e-15);
}

TEST(DeltaMuAssisted, DominatesHaarRandomUnitaryTrials) {
	Rng rng = make_rng(77);
	for (int n = 0; n < 10; ++n) {
		const DensityMatrix rho = sample_hs_state(3, rng);
		const Hamiltonian h = sample_bounded_hamiltonian(3, 0.0, 1.0, 1.0, rng);
		const double bound = delta_mu_assisted(rho, h);
		double best = -1e300;
		for (int t = 0; t < 1000; ++t) {
			const CMatrix u = sample_haar_unitary(3, rng);
			const DensityMatrix rotated = DensityMatrix::from(HermitianMatrix::hermitian_part(u * rho.matrix() * u.adjoint()));
			best = std::max(best, delta(rotated, h).delta);
		}
		EXPECT_LE(best, bound + 1e-12);
		const DensityMatrix passive_inverse = reorder_descending(rho, h.eigenvectors());
		EXPECT_NEAR(delta(passive_inverse, h).delta, bound, 1e-9);
	}
}

TEST(DeltaMuAssisted, RejectsNegativeEnergies) {
	EXPECT_THROW(delta_mu_assisted(qubit(0.5, 0.5), diag_h({-1.0, 1.0})), PreconditionError);
}

TEST(DeltaOminAssisted, FreeStateReturnsFreeMaximum) {
	const DensityMatrix a = qubit(0.9, 0.1);
	const DensityMatrix b = qubit(0.3, 0.7);
	const FreeSet free = FreeSet::from({a, b});
	const Hamiltonian h = diag_h({0.4, 0.0});
	EXPECT_NEAR(delta_omin_assisted(a, h, free), std::max(delta(a, h).delta, delta(b, h).delta), 1e-15);
}

TEST(DeltaOminAssisted, PureQubitAgainstMaximallyMixed) {
	const DensityMatrix rho = qubit(1.0, 0.0);
	const Hamiltonian h = diag_h({1.0, 0.0});
	const FreeSet free = FreeSet::maximally_mixed(2);
	const double value = delta_omin_assisted(rho, h, free);
	EXPECT_NEAR(delta(rho, h).delta - delta(DensityMatrix::maximally_mixed(2), h).delta, 0.5, 1e-14);
	EXPECT_NEAR(value, delta(rho, h).delta, 1e-15);
}

TEST(DeltaOminAssisted, MatchesMixtureGridOracle) {
	Rng rng = make_rng(55);
	std::uniform_real_distribution<double> uni(0.0, 1.0);
	for (int n = 0; n < 20; ++n) {
		auto draw = [&] {
			const double x = uni(rng);
			return std::vector<double>{x, 1.0 - x};
		};
		const std::vector<double> p = draw();
		const std::vector<double> f0 = draw();
		const std::vector<double> f1 = draw();
		const std::vector<double> e{uni(rng), uni(rng)};
		const FreeSet free = FreeSet::from({DensityMatrix::diagonal(f0), DensityMatrix::diagonal(f1)});
		double best = -1e300;
		for (const auto& eta : {f0, f1}) {
			for (int k = 0; k <= 100; ++k) {
				const double w = 0.01 * k;
				const std::vector<double> mix{w * p[0] + (1 - w) * eta[0], w * p[1] + (1 - w) * eta[1]};
				best = std::max(best, oracle::diagonal_delta(mix, e, 1.0));
			}
		}
		EXPECT_NEAR(delta_omin_assisted(DensityMatrix::diagonal(p), Hamiltonian::diagonal(e), free), best, 1e-9);
	}
}

TEST(Spectral, UniformStateDeltaIsStableNearDegeneracy) {
	const std::vector<double> e{1.0 + 1e-7, 1.0 - 1e-7};
	// Var(E)/2 for a tiny symmetric split
	EXPECT_NEAR(spectral::uniform_state_delta(e, 1.0), 0.5e-14, 1e-20);
	const std::vector<double> flat{0.3, 0.3, 0.3};
	EXPECT_EQ(spectral::uniform_state_delta(flat, 1.0), 0.0);
	const std::vector<double> wide{0.0, 80.0};
	EXPECT_NEAR(spectral::uniform_state_delta(wide, 1.0), 40.0 + std::log1p(std::exp(-80.0)) - std::log(2.0), 1e-12);
	EXPECT_THROW(spectral::aligned_delta(std::vector<double>{1.0}, e, 1.0), ArgumentError);
}
