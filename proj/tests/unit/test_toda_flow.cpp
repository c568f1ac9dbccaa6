#include <catch_amalgamated.hpp>

#include <cmath>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "flagcoh/blowup.hpp"
#include "flagcoh/errors.hpp"
#include "flagcoh/toda_flow.hpp"

using namespace flagcoh;
using Catch::Matchers::WithinRel;
using Catch::Matchers::WithinAbs;

namespace {

Eigen::MatrixXd companion(const std::vector<double>& lam) {
    // prod (x - lambda) = x^n + a_{n-1} x^{n-1} + ... + a_0
    std::vector<double> a{1.0};
    for (double l : lam) {
        std::vector<double> b(a.size() + 1, 0.0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            b[i + 1] += a[i];
            b[i] -= l * a[i];
        }
        a = b;
    }
    const auto n = static_cast<Eigen::Index>(lam.size());
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) c(i, i + 1) = 1;
    for (Eigen::Index i = 0; i < n; ++i) c(n - 1, i) = -a[static_cast<std::size_t>(i)];
    return c;
}

double expm_minor(int j, const SpectralData& spec, Coset coset, const std::vector<double>& higher, double t) {
    const auto c = companion(spec.eigenvalues());
    Eigen::MatrixXd gen = t * c;
    Eigen::MatrixXd pw = c * c;
    for (double h : higher) {
        gen += h * pw;
        pw = pw * c;
    }
    const Eigen::MatrixXd e = gen.exp();
    const auto n = e.rows();
    const Eigen::Index col0 = coset == Coset::LongestElement ? n - j : 0;
    return e.block(0, col0, j, j).determinant();
}

int eta_wstar_a(int l) { return eta_longest(LieType(Family::A, l), SignVector::all_minus(l)); }

}  // namespace

TEST_CASE("spectral data validation") {
    SpectralData s({1.0, -1.0, 0.0});
    CHECK(s.eigenvalues() == std::vector<double>{-1.0, 0.0, 1.0});
    CHECK(s.rank() == 2);
    CHECK(s.min_gap() == 1.0);
    CHECK_THROWS_AS(SpectralData({0.0}), DegenerateSpectrum);
    CHECK_THROWS_AS(SpectralData({1.0, 1.0, -2.0}), DegenerateSpectrum);
    CHECK_THROWS_AS(SpectralData({1.0, 0.5}), DegenerateSpectrum);
    CHECK_THROWS_AS(SpectralData({11.0, -11.0}), DegenerateSpectrum);
    CHECK_THROWS_AS(SpectralData({NAN, 0.0}), DegenerateSpectrum);
}

TEST_CASE("random spectra") {
    std::mt19937_64 rng(5);
    for (int l = 1; l <= 6; ++l) {
        auto s = random_spectrum(l, rng);
        CHECK(s.rank() == l);
        CHECK(s.min_gap() >= 0.25);
        double sum = 0;
        for (double v : s.eigenvalues()) sum += v;
        CHECK_THAT(sum, WithinAbs(0.0, 1e-9));
    }
}

TEST_CASE("tau functions are minors of the matrix exponential") {
    std::mt19937_64 rng(17);
    for (int l = 1; l <= 4; ++l) {
        auto s = random_spectrum(l, rng, 1.5, 0.3);
        auto higher = generic_higher_times(s);
        for (auto coset : {Coset::LongestElement, Coset::Identity})
            for (int j = 1; j <= l; ++j) {
                auto sig = companion_tau(j, s, coset, higher);
                CHECK(sig.rates.size() == sig.coefficients.size());
                for (double t : {-1.3, -0.4, 0.0, 0.7, 1.9}) {
                    INFO("l=" << l << " j=" << j << " t=" << t);
                    const double want = expm_minor(j, s, coset, higher, t);
                    CHECK_THAT(sig(t), WithinAbs(want, 1e-7 * std::max(1.0, std::abs(want))));
                }
            }
    }
}

TEST_CASE("scaled signal keeps the sign") {
    std::mt19937_64 rng(2);
    auto s = random_spectrum(3, rng);
    auto sig = companion_tau(2, s, Coset::LongestElement, generic_higher_times(s));
    for (double t = -5; t <= 5; t += 0.37) {
        const double a = sig(t), b = sig.scaled(t);
        CHECK((a > 0) == (b > 0));
    }
    CHECK(std::isfinite(sig.scaled(1e4)));
}

TEST_CASE("zero counting") {
    // (e^t - 2)(e^t - 3) = e^{2t} - 5 e^t + 6
    TauSignal sig{1, {2.0, 1.0, 0.0}, {1.0, -5.0, 6.0}};
    auto z = count_zeros(sig, 20.0);
    REQUIRE(z.count == 2);
    CHECK_THAT(z.zeros[0], WithinRel(std::log(2.0), 1e-9));
    CHECK_THAT(z.zeros[1], WithinRel(std::log(3.0), 1e-9));
    CHECK_THROWS_AS(count_zeros(sig, 0.9), WindowTooSmall);
    CHECK_THROWS_AS(count_zeros(sig, -1.0), Error);
    TauSignal flat{1, {1.0}, {0.0}};
    CHECK_THROWS_AS(count_zeros(flat, 1.0), DegenerateSpectrum);
}

TEST_CASE("parity of the zero count follows the asymptotic signs") {
    std::mt19937_64 rng(23);
    for (int n = 0; n < 30; ++n) {
        auto s = random_spectrum(3, rng);
        const double T = default_window(s);
        for (int j = 1; j <= 3; ++j) {
            auto sig = companion_tau(j, s, Coset::LongestElement, generic_higher_times(s));
            auto z = count_zeros(sig, T);
            const bool flip = (sig.scaled(-T) > 0) != (sig.scaled(T) > 0);
            CHECK((z.count % 2 == 1) == flip);
        }
    }
}

TEST_CASE("total blow-ups equal eta of the longest element") {
    std::mt19937_64 rng(1);
    for (int l = 1; l <= 5; ++l) {
        const int want = eta_wstar_a(l);
        for (int n = 0; n < (l <= 3 ? 20 : 5); ++n) {
            auto s = random_spectrum(l, rng);
            auto rep = total_blowups(s);
            INFO("l=" << l << " spectrum[0]=" << s.eigenvalues()[0]);
            CHECK(rep.total == want);
            CHECK(static_cast<int>(rep.per_tau.size()) == l);
            CHECK(rep.window == default_window(s));
        }
    }
}

TEST_CASE("fixed spectra") {
    auto a2 = total_blowups(SpectralData({-1.0, 0.0, 1.0}));
    CHECK(a2.per_tau == std::vector<int>{0, 2});
    auto a3 = total_blowups(SpectralData({-3.0, -1.0, 1.0, 3.0}));
    CHECK(a3.per_tau == std::vector<int>{1, 2, 1});
    CHECK(a3.total == 4);
}

TEST_CASE("special lines") {
    // through the most singular point the count collapses
    FlowOptions lit;
    lit.higher = std::vector<double>{};
    CHECK(total_blowups(SpectralData({-1.0, 0.0, 1.0}), lit).total == 0);
    FlowOptions id;
    id.coset = Coset::Identity;
    CHECK(total_blowups(SpectralData({-1.0, 1.0}), id).total == 0);
    CHECK(total_blowups(SpectralData({-1.0, 0.0, 1.0}), id).total == 0);
    CHECK_THROWS_AS(companion_tau(0, SpectralData({-1.0, 1.0})), IndexOutOfRange);
    CHECK_THROWS_AS(companion_tau(2, SpectralData({-1.0, 1.0})), IndexOutOfRange);
}
