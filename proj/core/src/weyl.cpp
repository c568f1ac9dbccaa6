#include "flagcoh/weyl.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "flagcoh/errors.hpp"

namespace flagcoh {

namespace {

constexpr WeylGroup::Index kEmpty = std::numeric_limits<WeylGroup::Index>::max();

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

std::size_t idx(int row, int col, int rank) { return static_cast<std::size_t>(row * rank + col); }

// action * s_i, in place: column j -= C_{j,i} * column i.
template <typename T>
void right_apply(T* m, int i, const CartanMatrix& c) {
    const int l = c.rank();
    for (int j = 0; j < l; ++j) {
        const int cji = c.at(j, i);
        if (j == i) continue;
        if (cji == 0) continue;
        for (int r = 0; r < l; ++r) m[idx(r, j, l)] = static_cast<T>(m[idx(r, j, l)] - cji * m[idx(r, i, l)]);
    }
    for (int r = 0; r < l; ++r) m[idx(r, i, l)] = static_cast<T>(-m[idx(r, i, l)]);
}

bool column_negative(const std::vector<int>& m, int col, int rank) {
    for (int r = 0; r < rank; ++r)
        if (m[idx(r, col, rank)] < 0) return true;
    return false;
}

std::size_t hash_bytes(const std::int8_t* p, std::size_t n) {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t k = 0; k < n; ++k) {
        h ^= static_cast<std::uint8_t>(p[k]);
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace

std::uint64_t weyl_order(const LieType& type) {
    const int l = type.rank();
    switch (type.family()) {
    case Family::A: return factorial(l + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << l) * factorial(l);
    case Family::D: return (std::uint64_t{1} << (l - 1)) * factorial(l);
    case Family::E: return l == 6 ? 51840 : l == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
    }
    return 0;
}

int positive_root_count(const LieType& type) {
    const int l = type.rank();
    switch (type.family()) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    }
    return 0;
}

WeylElement identity_element(int rank) {
    WeylElement e;
    e.rank = rank;
    e.action.assign(static_cast<std::size_t>(rank * rank), 0);
    for (int i = 0; i < rank; ++i) e.action[idx(i, i, rank)] = 1;
    return e;
}

WeylElement simple_reflection(int i, const CartanMatrix& c) {
    if (i < 0 || i >= c.rank()) {
        throw IndexOutOfRange("generator index " + std::to_string(i + 1) + " outside 1.." +
                              std::to_string(c.rank()));
    }
    WeylElement s = identity_element(c.rank());
    right_apply(s.action.data(), i, c);
    s.length = 1;
    s.word = {i};
    return s;
}

WeylElement from_reduced_word(const std::vector<int>& word, const CartanMatrix& c) {
    WeylElement w = identity_element(c.rank());
    for (int i : word) {
        if (i < 0 || i >= c.rank()) throw IndexOutOfRange("generator index out of range in word");
        right_apply(w.action.data(), i, c);
    }
    w.word = word;
    w.length = static_cast<int>(word.size());
    return w;
}

std::vector<int> inverse_action(const WeylElement& w, const CartanMatrix& c) {
    WeylElement inv = identity_element(c.rank());
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) right_apply(inv.action.data(), *it, c);
    return inv.action;
}

std::vector<int> multiply_actions(const std::vector<int>& a, const std::vector<int>& b, int rank) {
    std::vector<int> out(static_cast<std::size_t>(rank * rank), 0);
    for (int r = 0; r < rank; ++r)
        for (int k = 0; k < rank; ++k) {
            const int ark = a[idx(r, k, rank)];
            if (ark == 0) continue;
            for (int col = 0; col < rank; ++col) out[idx(r, col, rank)] += ark * b[idx(k, col, rank)];
        }
    return out;
}

WeylElement longest_element(const LieType& type) {
    const CartanMatrix c = cartan_matrix(type);
    const int l = c.rank();
    const std::vector<int> sigma = longest_element_permutation(type);
    std::vector<int> m(static_cast<std::size_t>(l * l), 0);
    for (int i = 0; i < l; ++i) m[idx(sigma[static_cast<std::size_t>(i)], i, l)] = -1;

    std::vector<int> peeled;
    for (;;) {
        int descent = -1;
        for (int i = 0; i < l; ++i)
            if (column_negative(m, i, l)) { descent = i; break; }
        if (descent < 0) break;
        right_apply(m.data(), descent, c);
        peeled.push_back(descent);
    }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (m[idx(i, j, l)] != (i == j ? 1 : 0)) throw Error("longest element peeling did not reach identity");

    std::reverse(peeled.begin(), peeled.end());
    return from_reduced_word(peeled, c);
}

std::vector<std::vector<int>> positive_roots(const CartanMatrix& c) {
    const int l = c.rank();
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < l; ++i) {
        std::vector<int> a(static_cast<std::size_t>(l), 0);
        a[static_cast<std::size_t>(i)] = 1;
        if (seen.insert(a).second) queue.push_back(a);
    }
    while (!queue.empty()) {
        auto beta = queue.front();
        queue.pop_front();
        for (int i = 0; i < l; ++i) {
            // s_i(beta) = beta - (sum_j beta_j C_{j,i}) alpha_i
            int pairing = 0;
            for (int j = 0; j < l; ++j) pairing += beta[static_cast<std::size_t>(j)] * c.at(j, i);
            auto img = beta;
            img[static_cast<std::size_t>(i)] -= pairing;
            const bool positive = std::all_of(img.begin(), img.end(), [](int v) { return v >= 0; });
            if (positive && seen.insert(img).second) queue.push_back(img);
        }
    }
    std::vector<std::vector<int>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const int ha = std::accumulate(a.begin(), a.end(), 0);
        const int hb = std::accumulate(b.begin(), b.end(), 0);
        return ha != hb ? ha < hb : a > b;
    });
    return out;
}

ReflectionSet::ReflectionSet(const CartanMatrix& c) : rank_(c.rank()) {
    // Orbit of (alpha_i, s_i) under conjugation: s_{s_j beta} = s_j s_beta s_j.
    const int l = c.rank();
    std::map<std::vector<int>, std::vector<int>> by_root;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < l; ++i) {
        std::vector<int> a(static_cast<std::size_t>(l), 0);
        a[static_cast<std::size_t>(i)] = 1;
        by_root[a] = simple_reflection(i, c).action;
        queue.push_back(a);
    }
    std::vector<std::vector<int>> gens;
    for (int j = 0; j < l; ++j) gens.push_back(simple_reflection(j, c).action);
    while (!queue.empty()) {
        auto beta = queue.front();
        queue.pop_front();
        const auto refl = by_root.at(beta);
        for (int j = 0; j < l; ++j) {
            int pairing = 0;
            for (int k = 0; k < l; ++k) pairing += beta[static_cast<std::size_t>(k)] * c.at(k, j);
            auto img = beta;
            img[static_cast<std::size_t>(j)] -= pairing;
            if (std::any_of(img.begin(), img.end(), [](int v) { return v < 0; })) continue;
            if (by_root.count(img)) continue;
            const auto& s = gens[static_cast<std::size_t>(j)];
            by_root[img] = multiply_actions(multiply_actions(s, refl, l), s, l);
            queue.push_back(img);
        }
    }
    for (auto& [root, m] : by_root) matrices_.push_back(m);
    std::sort(matrices_.begin(), matrices_.end());
}

bool ReflectionSet::contains(const std::vector<int>& action) const {
    return std::binary_search(matrices_.begin(), matrices_.end(), action);
}

bool bruhat_cover(const WeylElement& w1, const WeylElement& w2, const ReflectionSet& refl,
                  const CartanMatrix& c) {
    if (w1.rank != w2.rank || w1.rank != c.rank()) throw TypeMismatch("elements from different groups");
    if (w2.length != w1.length + 1) return false;
    return refl.contains(multiply_actions(inverse_action(w1, c), w2.action, c.rank()));
}

WeylGroup WeylGroup::enumerate(const LieType& type, std::uint64_t cap) {
    const std::uint64_t order = weyl_order(type);
    if (order > cap) throw CapExceeded(order, cap);
    return enumerate(cartan_matrix(type), cap);
}

std::size_t WeylGroup::slot_of(const std::int8_t* m) const {
    const std::size_t n = static_cast<std::size_t>(rank_ * rank_);
    const std::size_t mask = table_.size() - 1;
    std::size_t s = hash_bytes(m, n) & mask;
    while (table_[s] != kEmpty && std::memcmp(raw(table_[s]), m, n) != 0) s = (s + 1) & mask;
    return s;
}

WeylGroup WeylGroup::enumerate(const CartanMatrix& c, std::uint64_t cap) {
    WeylGroup g(c);
    const int l = g.rank_;
    const std::size_t n = static_cast<std::size_t>(l * l);

    std::size_t capacity = 1024;
    auto rehash = [&](std::size_t new_cap) {
        g.table_.assign(new_cap, kEmpty);
        for (Index w = 0; w < g.length_.size(); ++w) g.table_[g.slot_of(g.raw(w))] = w;
    };
    rehash(capacity);

    auto push = [&](const std::int8_t* m, int len, Index parent, int gen) -> Index {
        if (g.length_.size() >= cap) throw CapExceeded(g.length_.size() + 1, cap);
        const Index w = static_cast<Index>(g.length_.size());
        g.mats_.insert(g.mats_.end(), m, m + n);
        g.length_.push_back(len);
        g.parent_.push_back(parent);
        g.last_gen_.push_back(static_cast<std::int8_t>(gen));
        g.cayley_.insert(g.cayley_.end(), static_cast<std::size_t>(l), kEmpty);
        if (2 * g.length_.size() > g.table_.size()) {
            rehash(g.table_.size() * 2);
        } else {
            g.table_[g.slot_of(g.raw(w))] = w;
        }
        return w;
    };

    std::vector<std::int8_t> buf(n, 0);
    for (int i = 0; i < l; ++i) buf[idx(i, i, l)] = 1;
    push(buf.data(), 0, kEmpty, -1);

    for (Index w = 0; w < g.length_.size(); ++w) {
        for (int i = 0; i < l; ++i) {
            const std::size_t cell = static_cast<std::size_t>(w) * static_cast<std::size_t>(l) + static_cast<std::size_t>(i);
            if (g.cayley_[cell] != kEmpty) continue;
            std::memcpy(buf.data(), g.raw(w), n);
            right_apply(buf.data(), i, c);
            const std::size_t s = g.slot_of(buf.data());
            Index v = g.table_[s];
            if (v == kEmpty) v = push(buf.data(), g.length_[w] + 1, w, i);
            g.cayley_[cell] = v;
            g.cayley_[static_cast<std::size_t>(v) * static_cast<std::size_t>(l) + static_cast<std::size_t>(i)] = w;
        }
    }
    g.longest_ = static_cast<Index>(g.length_.size() - 1);
    return g;
}

std::vector<int> WeylGroup::word(Index w) const {
    std::vector<int> out;
    while (w != 0) {
        out.push_back(last_gen_[w]);
        w = parent_[w];
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<int> WeylGroup::action(Index w) const {
    const std::int8_t* m = raw(w);
    return std::vector<int>(m, m + rank_ * rank_);
}

WeylElement WeylGroup::element(Index w) const {
    WeylElement e;
    e.rank = rank_;
    e.action = action(w);
    e.length = length_[w];
    e.word = word(w);
    return e;
}

std::string WeylGroup::key(Index w) const {
    std::string out;
    const std::int8_t* m = raw(w);
    for (int k = 0; k < rank_ * rank_; ++k) {
        if (k) out += ',';
        out += std::to_string(static_cast<int>(m[k]));
    }
    return out;
}

WeylGroup::Index WeylGroup::find(const std::vector<int>& act) const {
    if (act.size() != static_cast<std::size_t>(rank_ * rank_)) return static_cast<Index>(order());
    std::vector<std::int8_t> m(act.size());
    for (std::size_t k = 0; k < act.size(); ++k) {
        if (act[k] < -128 || act[k] > 127) return static_cast<Index>(order());
        m[k] = static_cast<std::int8_t>(act[k]);
    }
    const Index v = table_[slot_of(m.data())];
    return v == kEmpty ? static_cast<Index>(order()) : v;
}

WeylGroup::Index WeylGroup::multiply_word(Index a, const std::vector<int>& w) const {
    for (int i : w) a = times_generator(a, i);
    return a;
}

WeylGroup::Index WeylGroup::multiply(Index a, Index b) const { return multiply_word(a, word(b)); }

WeylGroup::Index WeylGroup::inverse(Index w) const {
    auto wd = word(w);
    std::reverse(wd.begin(), wd.end());
    return multiply_word(identity(), wd);
}

std::vector<std::uint64_t> WeylGroup::length_distribution() const {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(max_length() + 1), 0);
    for (int len : length_) ++out[static_cast<std::size_t>(len)];
    return out;
}

bool WeylGroup::is_reflection(Index w) const {
    const int l = rank_;
    const std::int8_t* m = raw(w);
    std::vector<int> d(static_cast<std::size_t>(l * l));
    for (int r = 0; r < l; ++r)
        for (int col = 0; col < l; ++col) d[idx(r, col, l)] = m[idx(r, col, l)] - (r == col ? 1 : 0);
    int pr = -1, pc = -1;
    for (int r = 0; r < l && pr < 0; ++r)
        for (int col = 0; col < l; ++col)
            if (d[idx(r, col, l)] != 0) { pr = r; pc = col; break; }
    if (pr < 0) return false;
    for (int r = 0; r < l; ++r)
        for (int col = 0; col < l; ++col)
            if (d[idx(r, col, l)] * d[idx(pr, pc, l)] != d[idx(r, pc, l)] * d[idx(pr, col, l)]) return false;
    return true;
}

std::vector<WeylGroup::Index> WeylGroup::upper_covers(Index w, const ReflectionSet& refl) const {
    std::vector<Index> out;
    const auto a = action(w);
    for (const auto& t : refl.matrices()) {
        const Index v = find(multiply_actions(a, t, rank_));
        if (v < order() && length_[v] == length_[w] + 1) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<WeylGroup::Index>> WeylGroup::all_upper_covers() const {
    const ReflectionSet refl(cartan_);
    std::vector<std::vector<Index>> out(order());
    for (Index w = 0; w < order(); ++w) out[w] = upper_covers(w, refl);
    return out;
}

bool WeylGroup::bruhat_cover(Index w1, Index w2) const {
    if (length_[w2] != length_[w1] + 1) return false;
    return is_reflection(multiply(inverse(w1), w2));
}

}  // namespace flagcoh
