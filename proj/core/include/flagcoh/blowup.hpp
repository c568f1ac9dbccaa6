#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "flagcoh/cartan.hpp"
#include "flagcoh/qpoly.hpp"
#include "flagcoh/weyl.hpp"

namespace flagcoh {

/// Element of {+,-}^l. Bit i set means component i is '-'.
class SignVector {
public:
    SignVector(int rank, std::uint32_t minus_mask);

    static SignVector parse(std::string_view text);  // "--+"
    static SignVector all_minus(int rank);
    static SignVector all_plus(int rank) { return SignVector(rank, 0); }
    /// All 2^l vectors ordered by mask.
    static std::vector<SignVector> all(int rank);

    int rank() const noexcept { return rank_; }
    std::uint32_t mask() const noexcept { return mask_; }
    bool minus(int i) const { return (mask_ >> i) & 1U; }
    bool is_all_minus() const noexcept { return mask_ == full(); }
    std::string str() const;

    friend bool operator==(const SignVector&, const SignVector&) = default;

private:
    std::uint32_t full() const noexcept { return rank_ == 32 ? ~0U : ((1U << rank_) - 1U); }
    int rank_;
    std::uint32_t mask_;
};

/// Precomputed sign action of each generator: s_i flips component j iff
/// C_{j,i} is odd and component i is '-'.
class SignAction {
public:
    explicit SignAction(const CartanMatrix& c);
    std::uint32_t apply(int i, std::uint32_t mask) const {
        return ((mask >> i) & 1U) ? mask ^ flips_[static_cast<std::size_t>(i)] : mask;
    }
    int rank() const noexcept { return static_cast<int>(flips_.size()); }

private:
    std::vector<std::uint32_t> flips_;
};

SignVector sign_act(int i, const SignVector& eps, const CartanMatrix& c);

/// Count of letters j_k of the word at which the accumulated vector
/// s_{j_{k-1}}...s_{j_1} eps has a '-' in position j_k.
int eta(const WeylElement& w, const SignVector& eps, const CartanMatrix& c);
int eta_word(const std::vector<int>& word, const SignVector& eps, const CartanMatrix& c);
/// The accumulated vector after the whole word, i.e. w^{-1} eps.
SignVector local_sign(const std::vector<int>& word, const SignVector& eps, const CartanMatrix& c);

/// eta computed with the transposed Cartan matrix.
int eta_dual(const WeylElement& w, const SignVector& eps, const CartanMatrix& c);

/// eta(w*, eps) from the greedy longest word; E8 works without enumeration.
int eta_longest(const LieType& type, const SignVector& eps);

struct EtaTable {
    SignVector eps;
    std::vector<int> values;             // by group index
    std::vector<std::uint32_t> local;    // w^{-1} eps as a minus-mask
};

EtaTable eta_table(const WeylGroup& group, const SignVector& eps);

/// (-1)^{l(w*)} sum_w (-1)^{l(w)} q^{eta(w,eps)}
QPoly p_poly(const WeylGroup& group, const EtaTable& table);
QPoly p_poly(const WeylGroup& group, const SignVector& eps);
QPoly p_poly(const LieType& type, const SignVector& eps, std::uint64_t cap = kDefaultCap);

/// Same alternating sum restricted to a subset of elements.
QPoly p_poly_restricted(const WeylGroup& group, const EtaTable& table,
                        const std::vector<WeylGroup::Index>& subset);

/// Elements w with w^{-1}(-...-) = (-...-), ascending by index.
std::vector<WeylGroup::Index> w_minus(const WeylGroup& group);

}  // namespace flagcoh
