#include "flagcoh/toda_flow.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "flagcoh/errors.hpp"

namespace flagcoh {

SpectralData::SpectralData(std::vector<double> eigenvalues) : values_(std::move(eigenvalues)) {
    if (values_.size() < 2) throw DegenerateSpectrum("need at least two eigenvalues");
    std::sort(values_.begin(), values_.end());
    double sum = 0, scale = 0;
    for (double v : values_) {
        if (!std::isfinite(v) || std::abs(v) > 10.0) throw DegenerateSpectrum("eigenvalues must lie in [-10, 10]");
        sum += v;
        scale = std::max(scale, std::abs(v));
    }
    if (std::abs(sum) > 1e-9 * std::max(1.0, scale)) throw DegenerateSpectrum("eigenvalues must sum to zero");
    if (min_gap() <= 1e-9 * std::max(1.0, scale)) throw DegenerateSpectrum("eigenvalues must be distinct");
}

double SpectralData::min_gap() const {
    double g = INFINITY;
    for (std::size_t i = 1; i < values_.size(); ++i) g = std::min(g, values_[i] - values_[i - 1]);
    return g;
}

SpectralData random_spectrum(int rank, std::mt19937_64& rng, double spread, double min_gap) {
    std::uniform_real_distribution<double> u(-spread, spread);
    for (;;) {
        std::vector<double> v(static_cast<std::size_t>(rank + 1));
        for (auto& x : v) x = u(rng);
        const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
        for (auto& x : v) x -= mean;
        std::sort(v.begin(), v.end());
        bool ok = true;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] - v[i - 1] < min_gap) ok = false;
        if (ok) return SpectralData(std::move(v));
    }
}

double TauSignal::operator()(double t) const {
    double s = 0;
    for (std::size_t k = 0; k < rates.size(); ++k) s += coefficients[k] * std::exp(t * rates[k]);
    return s;
}

double TauSignal::scaled(double t) const {
    double m = -INFINITY;
    for (double r : rates) m = std::max(m, t * r);
    double s = 0;
    for (std::size_t k = 0; k < rates.size(); ++k) s += coefficients[k] * std::exp(t * rates[k] - m);
    return s;
}

namespace {

std::vector<std::vector<int>> subsets(int n, int j) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == j) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

double minor_det(const Eigen::MatrixXd& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Eigen::MatrixXd s(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) s(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = m(rows[a], cols[b]);
    return s.determinant();
}

}  // namespace

TauSignal companion_tau(int j, const SpectralData& spec, Coset coset, const std::vector<double>& higher) {
    const auto& lam = spec.eigenvalues();
    const int n = static_cast<int>(lam.size());
    if (j < 1 || j >= n) throw IndexOutOfRange("tau index must lie in 1.." + std::to_string(n - 1));
    // C = superdiagonal ones + last row; eigenvector of lambda is (1, lambda, ..., lambda^{n-1}).
    Eigen::MatrixXd v(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) v(r, c) = std::pow(lam[static_cast<std::size_t>(c)], r);
    const Eigen::MatrixXd vinv = v.fullPivLu().inverse();

    std::vector<int> rows(static_cast<std::size_t>(j));
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<int> cols(static_cast<std::size_t>(j));
    std::iota(cols.begin(), cols.end(), coset == Coset::LongestElement ? n - j : 0);

    // Cauchy-Binet on V diag(exp(t lambda)) V^{-1}.
    TauSignal sig;
    sig.j = j;
    for (const auto& k : subsets(n, j)) {
        const double c = minor_det(v, rows, k) * minor_det(vinv, k, cols);
        double rate = 0, shift = 0;
        for (int i : k) {
            const double x = lam[static_cast<std::size_t>(i)];
            rate += x;
            for (std::size_t m = 0; m < higher.size(); ++m) shift += higher[m] * std::pow(x, static_cast<double>(m + 2));
        }
        sig.rates.push_back(rate);
        sig.coefficients.push_back(c * std::exp(shift));
    }
    return sig;
}

double default_window(const SpectralData& spec) { return 30.0 / spec.min_gap(); }

namespace {

int sign_of(double x) { return (x > 0) - (x < 0); }

// Sign of the surviving exponential as t -> +inf (dir = 1) or -inf (dir = -1).
int asymptotic_sign(const TauSignal& sig, int dir) {
    int best = -1;
    for (std::size_t k = 0; k < sig.rates.size(); ++k) {
        if (sig.coefficients[k] == 0) continue;
        if (best < 0 || dir * sig.rates[k] > dir * sig.rates[static_cast<std::size_t>(best)] + 1e-12) best = static_cast<int>(k);
    }
    if (best < 0) throw DegenerateSpectrum("tau function vanishes identically");
    return sign_of(sig.coefficients[static_cast<std::size_t>(best)]);
}

}  // namespace

ZeroCount count_zeros(const TauSignal& sig, double T, int samples) {
    if (!(T > 0) || samples < 2) throw Error("window and sample count must be positive");
    if (sign_of(sig.scaled(T)) != asymptotic_sign(sig, 1) || sign_of(sig.scaled(-T)) != asymptotic_sign(sig, -1))
        throw WindowTooSmall("endpoint sign disagrees with the dominant exponential at T = " + std::to_string(T));
    ZeroCount out;
    const double h = 2 * T / (samples - 1);
    double prev_t = -T;
    int prev_s = sign_of(sig.scaled(-T));
    for (int i = 1; i < samples; ++i) {
        const double t = -T + h * i;
        const int s = sign_of(sig.scaled(t));
        if (s == 0) continue;
        if (prev_s != 0 && s != prev_s) {
            double a = prev_t, b = t;
            const int sa = prev_s;
            while (b - a > 1e-12 * std::max(1.0, std::abs(a) + std::abs(b))) {
                const double mid = 0.5 * (a + b);
                const int sm = sign_of(sig.scaled(mid));
                if (sm == 0) {
                    a = b = mid;
                    break;
                }
                (sm == sa ? a : b) = mid;
            }
            out.zeros.push_back(0.5 * (a + b));
            ++out.count;
        }
        prev_t = t;
        prev_s = s;
    }
    return out;
}

std::vector<double> generic_higher_times(const SpectralData& spec) {
    const auto& lam = spec.eigenvalues();
    const double spread = lam.back() - lam.front();
    std::vector<double> out;
    for (int k = 2; k <= spec.rank(); ++k)
        out.push_back((k % 2 == 0 ? 0.31 : -0.23) / std::pow(spread, static_cast<double>(k)));
    return out;
}

FlowReport total_blowups(const SpectralData& spec, const FlowOptions& opt) {
    FlowReport rep;
    rep.window = opt.window > 0 ? opt.window : default_window(spec);
    rep.higher = opt.higher ? *opt.higher : generic_higher_times(spec);
    for (int j = 1; j <= spec.rank(); ++j) {
        const int z = count_zeros(companion_tau(j, spec, opt.coset, rep.higher), rep.window, opt.samples).count;
        rep.per_tau.push_back(z);
        rep.total += z;
    }
    return rep;
}

}  // namespace flagcoh
