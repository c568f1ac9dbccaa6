#pragma once

#include <string>
#include <vector>

#include "flagcoh/cartan.hpp"
#include "flagcoh/multipoly.hpp"

namespace flagcoh {

/// Variables of a tau family: t_j for j in `times` (in that order), then s if present.
struct TauVariables {
    std::vector<int> times;
    bool has_s = false;

    int count() const noexcept { return static_cast<int>(times.size()) + (has_s ? 1 : 0); }
    int s_index() const;
    std::vector<std::string> names() const;
};

/// Complete homogeneous function h_k with only the listed times nonzero.
/// Variable i of the result is t_{active[i]}; `nvars` may reserve trailing variables.
MultiPoly h_poly(int k, const std::vector<int>& active, int nvars = -1);

/// Linear combination sum_i c_i h_{n_i}; the t_1-derivative shifts every index down by one.
struct HTerm {
    MultiPoly coeff;
    int index;
};
using HCombo = std::vector<HTerm>;

/// Determinant (d^{b-1} f_a / dt_1^{b-1}), f_a given as h-combinations.
MultiPoly wronskian(const std::vector<HCombo>& fs, const TauVariables& vars);

/// S_(i_1..i_k) = |h_{i_a - b + 1}|.
MultiPoly schur_wronskian(const std::vector<int>& indices, const std::vector<int>& active);

enum class TauTag { Plain, Squared, Product };
std::string tag_name(TauTag t);

struct TauEntry {
    int index;  // k of tau_k; for Product the lower index l-1
    TauTag tag;
    MultiPoly poly;
};

struct TauFamily {
    LieType type;
    TauVariables vars;
    std::vector<TauEntry> taus;
};

constexpr int kDefaultTauDimension = 6;

/// Nilpotent tau functions near the most singular point. Throws UnsupportedType
/// for E and F, and for determinants larger than `max_dim`.
TauFamily nilpotent_tau(const LieType& type, int max_dim = kDefaultTauDimension);

/// Minimal degree of tau_1..tau_l, squared entries halved and the product split.
std::vector<int> min_degrees(const TauFamily& f);
int multiplicity(const TauFamily& f);
int multiplicity(const LieType& type);

}  // namespace flagcoh
