#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qcorr/measures.hpp"
#include "qcorr/models.hpp"
#include "test_support.hpp"

using namespace qcorr;
using testsupport::cc_grid_oracle;
constexpr double kPi = std::numbers::pi;

namespace {

DensityMatrix bell() { return werner(1.0, kPi / 4, BasisPair::Aligned); }

DensityMatrix maximally_mixed() {
    return *validate(cplx(0.25) * CMatrix::identity(4)).state;
}

// Spectrum route for the Werner mutual information: eigenvalues are
// 3 x (1-p)/4 and (1+3p)/4, both marginals maximally mixed.
double werner_mutual_info_closed_form(double p) {
    auto term = [](double lam) { return lam > 0.0 ? -lam * std::log2(lam) : 0.0; };
    const double s_ab = 3.0 * term((1.0 - p) / 4.0) + term((1.0 + 3.0 * p) / 4.0);
    return 2.0 - s_ab;
}

double werner_classical_corr_closed_form(double p) {
    auto half = [](double v) { return v > 0.0 ? 0.5 * v * std::log2(v) : 0.0; };
    return half(1.0 - p) + half(1.0 + p);
}

}  // namespace

TEST_CASE("measurement basis projectors") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const MeasurementBasis basis{u(rng) * kPi, u(rng) * 2.0 * kPi};
        const auto [plus, minus] = basis.projectors();
        CHECK(hs_dist(plus + minus, CMatrix::identity(2)) < 1e-14);
        CHECK(hs_dist(plus * plus, plus) < 1e-12);
        CHECK(hs_dist(minus * minus, minus) < 1e-12);
    }
}

TEST_CASE("von Neumann entropy fixed values") {
    CHECK(von_neumann_entropy(bell()) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(von_neumann_entropy(maximally_mixed()) == doctest::Approx(2.0).epsilon(1e-12));

    CMatrix two_level(4);
    two_level(0, 0) = 0.5;
    two_level(1, 1) = 0.5;
    CHECK(von_neumann_entropy(two_level) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mutual information") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix prod = testsupport::random_product_state(rng);
        CHECK(std::abs(mutual_information(prod)) < 1e-9);
    }
    CHECK(mutual_information(bell()) == doctest::Approx(2.0).epsilon(1e-10));

    const DensityMatrix w = werner(0.5, kPi / 4, BasisPair::Aligned);
    CHECK(mutual_information(w) ==
          doctest::Approx(werner_mutual_info_closed_form(0.5)).epsilon(1e-10));
}

TEST_CASE("conditional entropy fixed cases") {
    std::mt19937 rng(33);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const MeasurementBasis basis{u(rng) * kPi, u(rng) * 2.0 * kPi};
        CHECK(conditional_entropy(bell(), basis, Subsystem::B) ==
              doctest::Approx(0.0).epsilon(1e-10));
    }

    for (int trial = 0; trial < 5; ++trial) {
        const CMatrix ra = testsupport::ginibre_density(2, rng);
        const CMatrix rb = testsupport::ginibre_density(2, rng);
        const DensityMatrix prod = *validate(kron(ra, rb)).state;
        const MeasurementBasis basis{u(rng) * kPi, u(rng) * 2.0 * kPi};
        CHECK(conditional_entropy(prod, basis, Subsystem::B) ==
              doctest::Approx(von_neumann_entropy(ra)).epsilon(1e-10));
    }

    CMatrix cc(4);
    cc(0, 0) = 0.5;
    cc(3, 3) = 0.5;
    CHECK(conditional_entropy(*validate(cc).state, MeasurementBasis{0.0, 0.0},
                              Subsystem::B) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("classical correlation endpoints and the Werner oracle") {
    std::mt19937 rng(34);
    for (int trial = 0; trial < 5; ++trial) {
        const auto cc = classical_correlation(testsupport::random_product_state(rng));
        CHECK(cc.value == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(cc.converged);
    }

    CHECK(classical_correlation(bell()).value == doctest::Approx(1.0).epsilon(1e-9));

    const DensityMatrix w = werner(0.5, kPi / 4, BasisPair::Aligned);
    const double opt = classical_correlation(w).value;
    CHECK(opt == doctest::Approx(cc_grid_oracle(w, Subsystem::B, 512, 1024)).epsilon(1e-4));
    CHECK(opt == doctest::Approx(werner_classical_corr_closed_form(0.5)).epsilon(1e-6));
}

TEST_CASE("optimizer matches the exhaustive grid on assorted states") {
    std::mt19937 rng(35);
    std::vector<DensityMatrix> states;
    states.push_back(werner(0.8, kPi / 3, BasisPair::AntiAligned));
    states.push_back(testsupport::random_density(rng));
    states.push_back(testsupport::random_density(rng));
    states.push_back(testsupport::random_classical_quantum(rng));
    states.push_back(cavity_state({0.7, kPi / 4, 0.0, 1.3, Model::Cavity}));
    states.push_back(dephasing_state({0.5, kPi / 60, 1.0, 2.1, Model::Dephasing}));
    for (const auto& rho : states) {
        for (Subsystem side : {Subsystem::A, Subsystem::B}) {
            const double opt = classical_correlation(rho, side).value;
            const double grid = cc_grid_oracle(rho, side, 512, 1024);
            CHECK(std::abs(opt - grid) < 1e-4);
            CHECK(opt >= grid - 1e-9);  // refinement never loses to its own grid
        }
    }
}

TEST_CASE("quantum discord fixed values") {
    CHECK(quantum_discord(bell()) == doctest::Approx(1.0).epsilon(1e-9));

    std::mt19937 rng(36);
    for (int trial = 0; trial < 5; ++trial) {
        const DensityMatrix chi = testsupport::random_classical_quantum(rng);
        CHECK(quantum_discord(chi, Subsystem::A) < 1e-6);
    }

    const DensityMatrix w = werner(0.5, kPi / 4, BasisPair::Aligned);
    const double oracle =
        mutual_information(w) - cc_grid_oracle(w, Subsystem::B, 512, 1024);
    CHECK(quantum_discord(w) == doctest::Approx(oracle).epsilon(1e-4));
    const double closed = werner_mutual_info_closed_form(0.5) -
                          werner_classical_corr_closed_form(0.5);
    CHECK(quantum_discord(w) == doctest::Approx(closed).epsilon(1e-6));
}

TEST_CASE("geometric discord closed forms") {
    CHECK(gmqd(maximally_mixed()) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(gmqd(bell()) == doctest::Approx(0.5).epsilon(1e-12));
    for (double p : {0.1, 0.3, 0.6, 0.9})
        CHECK(gmqd(werner(p, kPi / 4, BasisPair::Aligned)) ==
              doctest::Approx(p * p / 2).epsilon(1e-12));
}

TEST_CASE("geometric discord is locally unitary invariant") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = testsupport::random_density(rng);
        const DensityMatrix rot = testsupport::conjugate_local(
            rho, testsupport::random_unitary2(rng), testsupport::random_unitary2(rng));
        CHECK(std::abs(gmqd(rho) - gmqd(rot)) < 1e-9);
    }
}

TEST_CASE("negativity closed forms and separable states") {
    std::mt19937 rng(38);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(negativity(testsupport::random_product_state(rng)) == 0.0);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(negativity(testsupport::random_classical_quantum(rng)) == 0.0);

    CHECK(negativity(bell()) == doctest::Approx(1.0).epsilon(1e-12));
    for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0})
        CHECK(negativity(werner(p, kPi / 4, BasisPair::Aligned)) ==
              doctest::Approx(std::max(0.0, (3 * p - 1) / 2)).epsilon(1e-9));
}

TEST_CASE("entropy concavity spot check") {
    std::mt19937 rng(39);
    for (int trial = 0; trial < 200; ++trial) {
        const DensityMatrix r1 = testsupport::random_density(rng);
        const DensityMatrix r2 = testsupport::random_density(rng);
        const CMatrix mix = cplx(0.5) * r1.mat + cplx(0.5) * r2.mat;
        const double lhs = von_neumann_entropy(mix);
        const double rhs = 0.5 * von_neumann_entropy(r1) + 0.5 * von_neumann_entropy(r2);
        CHECK(lhs >= rhs - 1e-9);
    }
}

TEST_CASE("classical correlation bounds") {
    std::mt19937 rng(40);
    for (int trial = 0; trial < 60; ++trial) {
        const DensityMatrix rho = testsupport::random_density(rng);
        const double cc = classical_correlation(rho).value;
        const double sa = von_neumann_entropy(partial_trace(rho.mat, Subsystem::A));
        const double sb = von_neumann_entropy(partial_trace(rho.mat, Subsystem::B));
        CHECK(cc >= -1e-9);
        CHECK(cc <= std::min(sa, sb) + 1e-9);
    }
}

TEST_CASE("discord is non-negative before clamping on 1000 random states") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        const DensityMatrix rho = testsupport::random_density(rng);
        const double raw = mutual_information(rho) - classical_correlation(rho).value;
        CHECK(raw >= -1e-9);
    }
}

TEST_CASE("discord and mutual information are locally unitary invariant") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 12; ++trial) {
        const DensityMatrix rho = testsupport::random_density(rng);
        const DensityMatrix rot = testsupport::conjugate_local(
            rho, testsupport::random_unitary2(rng), testsupport::random_unitary2(rng));
        CHECK(std::abs(mutual_information(rho) - mutual_information(rot)) < 1e-6);
        CHECK(std::abs(quantum_discord(rho) - quantum_discord(rot)) < 1e-6);
    }
}

TEST_CASE("correlation report composition") {
    const CorrelationReport zero = correlation_report(maximally_mixed());
    CHECK(zero.mutual_info == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(zero.classical_corr == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(zero.discord == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(zero.gmqd == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(zero.negativity == doctest::Approx(0.0).epsilon(1e-10));

    const CorrelationReport b = correlation_report(bell());
    CHECK(b.mutual_info == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(b.classical_corr == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(b.discord == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(b.gmqd == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(b.negativity == doctest::Approx(1.0).epsilon(1e-9));

    // the cavity state at lambda_t = 0, p = 1, theta = pi/4 is the same state
    const CorrelationReport cav =
        correlation_report(cavity_state({1.0, kPi / 4, 0.0, 0.0, Model::Cavity}));
    CHECK(cav.mutual_info == doctest::Approx(b.mutual_info).epsilon(1e-9));
    CHECK(cav.discord == doctest::Approx(b.discord).epsilon(1e-9));
    CHECK(cav.gmqd == doctest::Approx(b.gmqd).epsilon(1e-9));
    CHECK(cav.negativity == doctest::Approx(b.negativity).epsilon(1e-9));
}

TEST_CASE("correlation report invariants on random states") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const DensityMatrix rho = testsupport::random_density(rng);
        const CorrelationReport rep = correlation_report(rho);
        CHECK(rep.mutual_info >= 0.0);
        CHECK(rep.mutual_info <= 2.0 + 1e-9);
        CHECK(rep.classical_corr >= 0.0);
        CHECK(rep.discord >= 0.0);
        CHECK(rep.gmqd >= 0.0);
        CHECK(rep.negativity >= 0.0);
        CHECK(rep.negativity <= 1.0 + 1e-9);
        CHECK(std::abs(rep.discord - (rep.mutual_info - rep.classical_corr)) < 1e-9);
        CHECK(rep.argmax_basis.theta_m >= 0.0);
        CHECK(rep.argmax_basis.theta_m <= kPi + 1e-12);
        CHECK(rep.argmax_basis.phi_m >= 0.0);
        CHECK(rep.argmax_basis.phi_m < 2.0 * kPi + 1e-12);
    }
}
