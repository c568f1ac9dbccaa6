#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "flagcoh/cartan.hpp"

namespace flagcoh {

inline constexpr std::uint64_t kDefaultCap = 3'000'000;

/// Order of W(t) from the classical formulas; works for E8 without enumeration.
std::uint64_t weyl_order(const LieType& type);

/// Number of positive roots, i.e. the length of the longest element.
int positive_root_count(const LieType& type);

/// A Weyl group element as an integer matrix on the root lattice. Column j of
/// `action` (stored row-major) holds the simple-root coordinates of w(alpha_j).
/// Generator indices in `word` are 0-based.
struct WeylElement {
    int rank = 0;
    std::vector<int> action;
    int length = 0;
    std::vector<int> word;

    int at(int row, int col) const { return action[static_cast<std::size_t>(row * rank + col)]; }
    bool operator==(const WeylElement& o) const { return action == o.action; }
};

WeylElement identity_element(int rank);
WeylElement simple_reflection(int i, const CartanMatrix& c);

/// Builds w = s_{word[0]} ... s_{word[k-1]}; `word` must be reduced.
WeylElement from_reduced_word(const std::vector<int>& word, const CartanMatrix& c);

/// Action of w^{-1}, computed from the reversed word.
std::vector<int> inverse_action(const WeylElement& w, const CartanMatrix& c);

std::vector<int> multiply_actions(const std::vector<int>& a, const std::vector<int>& b, int rank);

/// w* via -sigma and greedy peeling of descents; no enumeration needed.
WeylElement longest_element(const LieType& type);

/// Positive roots in simple-root coordinates, generated as the W-orbit of the simple roots.
std::vector<std::vector<int>> positive_roots(const CartanMatrix& c);

/// The reflections of W, one per positive root, as action matrices.
class ReflectionSet {
public:
    explicit ReflectionSet(const CartanMatrix& c);

    std::size_t size() const noexcept { return matrices_.size(); }
    const std::vector<std::vector<int>>& matrices() const noexcept { return matrices_; }
    bool contains(const std::vector<int>& action) const;

private:
    int rank_;
    std::vector<std::vector<int>> matrices_;  // sorted
};

/// w1 covers-below w2 in Bruhat order: l(w2) = l(w1)+1 and w1^{-1} w2 is a reflection.
bool bruhat_cover(const WeylElement& w1, const WeylElement& w2, const ReflectionSet& refl,
                  const CartanMatrix& c);

/// Fully enumerated Weyl group. Elements are indexed 0..order-1 in BFS order
/// (index 0 is the identity); right multiplication by generators is tabulated.
class WeylGroup {
public:
    using Index = std::uint32_t;

    static WeylGroup enumerate(const LieType& type, std::uint64_t cap = kDefaultCap);
    static WeylGroup enumerate(const CartanMatrix& c, std::uint64_t cap = kDefaultCap);

    int rank() const noexcept { return rank_; }
    const CartanMatrix& cartan() const noexcept { return cartan_; }
    std::size_t order() const noexcept { return length_.size(); }

    Index identity() const noexcept { return 0; }
    Index longest() const noexcept { return longest_; }
    int max_length() const noexcept { return length_[longest_]; }

    int length(Index w) const { return length_[w]; }
    Index times_generator(Index w, int i) const {
        return cayley_[static_cast<std::size_t>(w) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(i)];
    }
    bool is_right_descent(Index w, int i) const { return length(times_generator(w, i)) < length(w); }

    /// BFS tree: w = parent(w) * s_{last_generator(w)}; undefined for the identity.
    Index parent(Index w) const { return parent_[w]; }
    int last_generator(Index w) const { return last_gen_[w]; }

    /// The reduced word discovered first by BFS (smallest generator on ties).
    std::vector<int> word(Index w) const;
    WeylElement element(Index w) const;
    std::vector<int> action(Index w) const;
    std::string key(Index w) const;  // row-major serialization of the action

    /// Index of the element with this action, or order() if absent.
    Index find(const std::vector<int>& action) const;

    Index multiply(Index a, Index b) const;
    Index multiply_word(Index a, const std::vector<int>& word) const;
    Index inverse(Index w) const;

    /// Count of elements of each length 0..l(w*).
    std::vector<std::uint64_t> length_distribution() const;

    /// True iff w is a reflection (w - 1 has rank one).
    bool is_reflection(Index w) const;

    /// All w2 with w ⋖ w2, ascending by index.
    std::vector<Index> upper_covers(Index w, const ReflectionSet& refl) const;
    bool bruhat_cover(Index w1, Index w2) const;
    /// upper_covers for every element.
    std::vector<std::vector<Index>> all_upper_covers() const;

private:
    WeylGroup(CartanMatrix c) : cartan_(std::move(c)), rank_(cartan_.rank()) {}

    const std::int8_t* raw(Index w) const {
        return mats_.data() + static_cast<std::size_t>(w) * static_cast<std::size_t>(rank_ * rank_);
    }
    std::size_t slot_of(const std::int8_t* m) const;

    CartanMatrix cartan_;
    int rank_;
    std::vector<std::int8_t> mats_;
    std::vector<int> length_;
    std::vector<Index> parent_;
    std::vector<std::int8_t> last_gen_;
    std::vector<Index> cayley_;
    std::vector<Index> table_;  // open addressing; kEmpty marks a free slot
    Index longest_ = 0;
};

}  // namespace flagcoh
