#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace flagcoh {

/// Distinct real eigenvalues lambda_0 < ... < lambda_l with zero sum.
class SpectralData {
public:
    /// Sorts the input; throws DegenerateSpectrum on repeated values, a nonzero
    /// trace or |lambda| > 10.
    explicit SpectralData(std::vector<double> eigenvalues);

    const std::vector<double>& eigenvalues() const noexcept { return values_; }
    int rank() const noexcept { return static_cast<int>(values_.size()) - 1; }
    double min_gap() const;

private:
    std::vector<double> values_;
};

/// Uniform draw in [-spread, spread], recentred to zero sum, redrawn until the
/// minimal gap is at least `min_gap`.
SpectralData random_spectrum(int rank, std::mt19937_64& rng, double spread = 4.0, double min_gap = 0.25);

enum class Coset { LongestElement, Identity };

/// tau_j(t) = sum_K c_K exp(t * sum_{i in K} lambda_i) over j-subsets K.
struct TauSignal {
    int j = 0;
    std::vector<double> rates;
    std::vector<double> coefficients;

    double operator()(double t) const;
    /// exp(-t * max rate) * tau(t) or similar: same sign, never overflows.
    double scaled(double t) const;
};

/// Leading principal j x j minor of exp(t C) times the coset representative, C the
/// companion matrix of prod (x - lambda_i), via its Vandermonde diagonalization.
/// `higher` holds the times t_2, t_3, ... of the starting point exp(sum_k t_k C^k) w*;
/// empty means all zero, which puts the t_1-line through the most singular point.
TauSignal companion_tau(int j, const SpectralData& spec, Coset coset = Coset::LongestElement,
                        const std::vector<double>& higher = {});

double default_window(const SpectralData& spec);

/// Sign changes of tau on a uniform grid over [-T, T], each refined by bisection.
/// Throws WindowTooSmall if an endpoint sign disagrees with the dominant exponential.
struct ZeroCount {
    int count = 0;
    std::vector<double> zeros;
};
ZeroCount count_zeros(const TauSignal& sig, double T, int samples = 20001);

/// Fixed nonzero times t_2..t_l, scaled by the spectral spread, moving the
/// t_1-line off the most singular point.
std::vector<double> generic_higher_times(const SpectralData& spec);

struct FlowOptions {
    Coset coset = Coset::LongestElement;
    double window = 0;  // 0 selects default_window
    int samples = 20001;
    std::optional<std::vector<double>> higher;  // unset selects generic_higher_times
};

struct FlowReport {
    std::vector<int> per_tau;
    int total = 0;
    double window = 0;
    std::vector<double> higher;
};
FlowReport total_blowups(const SpectralData& spec, const FlowOptions& opt = {});

}  // namespace flagcoh
