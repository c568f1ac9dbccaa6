#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace flagcoh {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple split type such as A3 or E8. Construction validates the rank.
class LieType {
public:
    LieType(Family family, int rank);

    /// Parses "A2", "D4", "E8" (family letter followed by a decimal rank).
    static LieType parse(std::string_view text);

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    std::string str() const;

    friend bool operator==(const LieType&, const LieType&) = default;

private:
    Family family_;
    int rank_;
};

/// Integer Cartan matrix, indexed so that at(j, i) is C_{j,i} in the
/// convention s_i(alpha_j) = alpha_j - C_{j,i} alpha_i. Indices are 0-based.
class CartanMatrix {
public:
    explicit CartanMatrix(int rank);
    CartanMatrix(int rank, std::vector<int> row_major);

    int rank() const noexcept { return rank_; }
    int at(int j, int i) const { return entries_[static_cast<std::size_t>(j * rank_ + i)]; }
    void set(int j, int i, int value) { entries_[static_cast<std::size_t>(j * rank_ + i)] = value; }

    CartanMatrix transpose() const;
    long long determinant() const;
    std::vector<std::vector<int>> rows() const;
    const std::vector<int>& row_major() const noexcept { return entries_; }

    friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

private:
    int rank_;
    std::vector<int> entries_;
};

// Convention: B_l carries C_{l-1,l} = -2 (long root row, short root column);
// C_l is its transpose; G2 has C_{1,2} = -1 and C_{2,1} = -3.
CartanMatrix cartan_matrix(const LieType& type);

/// B_l and C_l are exchanged, everything else is fixed.
LieType dual_type(const LieType& type);

/// Data of the maximal compact subgroup of the dual split group: the invariant
/// degrees d_i (a multiset), g = #degrees, r = sum(d_i - 1), dim = sum(2 d_i - 1).
struct DualCompactData {
    std::string name;
    std::vector<int> degrees;
    int g = 0;
    int r = 0;
    int dimK = 0;

    int degree_sum() const;
};

DualCompactData compact_dual_data(const LieType& type);

/// Diagram automorphism sigma with w*(alpha_i) = -alpha_{sigma(i)}.
std::vector<int> longest_element_permutation(const LieType& type);

}  // namespace flagcoh
