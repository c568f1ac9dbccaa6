#include "flagcoh/blowup.hpp"

#include "flagcoh/errors.hpp"

namespace flagcoh {

SignVector::SignVector(int rank, std::uint32_t minus_mask) : rank_(rank), mask_(minus_mask) {
    if (rank < 1 || rank > 31) throw InvalidType("sign vector rank out of range");
    if (mask_ & ~full()) throw InvalidType("sign mask has bits beyond rank");
}

SignVector SignVector::parse(std::string_view text) {
    if (text.empty() || text.size() > 31) throw InvalidType("sign vector must have 1..31 entries");
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '-') mask |= 1U << i;
        else if (text[i] != '+') throw InvalidType("sign vector may only contain '+' and '-'");
    }
    return SignVector(static_cast<int>(text.size()), mask);
}

SignVector SignVector::all_minus(int rank) {
    SignVector v(rank, 0);
    v.mask_ = v.full();
    return v;
}

std::vector<SignVector> SignVector::all(int rank) {
    std::vector<SignVector> out;
    const std::uint32_t n = 1U << rank;
    for (std::uint32_t m = 0; m < n; ++m) out.emplace_back(rank, m);
    return out;
}

std::string SignVector::str() const {
    std::string s(static_cast<std::size_t>(rank_), '+');
    for (int i = 0; i < rank_; ++i)
        if (minus(i)) s[static_cast<std::size_t>(i)] = '-';
    return s;
}

SignAction::SignAction(const CartanMatrix& c) : flips_(static_cast<std::size_t>(c.rank()), 0) {
    for (int i = 0; i < c.rank(); ++i)
        for (int j = 0; j < c.rank(); ++j)
            if (c.at(j, i) % 2 != 0) flips_[static_cast<std::size_t>(i)] |= 1U << j;
}

SignVector sign_act(int i, const SignVector& eps, const CartanMatrix& c) {
    if (eps.rank() != c.rank()) throw TypeMismatch("sign vector length differs from rank");
    if (i < 0 || i >= c.rank()) throw IndexOutOfRange("generator index out of range");
    return SignVector(eps.rank(), SignAction(c).apply(i, eps.mask()));
}

int eta_word(const std::vector<int>& word, const SignVector& eps, const CartanMatrix& c) {
    if (eps.rank() != c.rank()) throw TypeMismatch("sign vector length differs from rank");
    const SignAction act(c);
    std::uint32_t m = eps.mask();
    int count = 0;
    for (int j : word) {
        if ((m >> j) & 1U) ++count;
        m = act.apply(j, m);
    }
    return count;
}

SignVector local_sign(const std::vector<int>& word, const SignVector& eps, const CartanMatrix& c) {
    if (eps.rank() != c.rank()) throw TypeMismatch("sign vector length differs from rank");
    const SignAction act(c);
    std::uint32_t m = eps.mask();
    for (int j : word) m = act.apply(j, m);
    return SignVector(eps.rank(), m);
}

int eta(const WeylElement& w, const SignVector& eps, const CartanMatrix& c) {
    return eta_word(w.word, eps, c);
}

int eta_dual(const WeylElement& w, const SignVector& eps, const CartanMatrix& c) {
    return eta_word(w.word, eps, c.transpose());
}

int eta_longest(const LieType& type, const SignVector& eps) {
    const WeylElement w = longest_element(type);
    return eta_word(w.word, eps, cartan_matrix(type));
}

EtaTable eta_table(const WeylGroup& group, const SignVector& eps) {
    if (eps.rank() != group.rank()) throw TypeMismatch("sign vector length differs from rank");
    const SignAction act(group.cartan());
    EtaTable t{eps, std::vector<int>(group.order(), 0), std::vector<std::uint32_t>(group.order(), 0)};
    t.local[0] = eps.mask();
    // BFS order guarantees the parent is filled first.
    for (WeylGroup::Index w = 1; w < group.order(); ++w) {
        const auto p = group.parent(w);
        const int i = group.last_generator(w);
        const std::uint32_t m = t.local[p];
        t.values[w] = t.values[p] + static_cast<int>((m >> i) & 1U);
        t.local[w] = act.apply(i, m);
    }
    return t;
}

QPoly p_poly(const WeylGroup& group, const EtaTable& table) {
    std::vector<WeylGroup::Index> all(group.order());
    for (WeylGroup::Index w = 0; w < group.order(); ++w) all[w] = w;
    return p_poly_restricted(group, table, all);
}

QPoly p_poly(const WeylGroup& group, const SignVector& eps) { return p_poly(group, eta_table(group, eps)); }

QPoly p_poly(const LieType& type, const SignVector& eps, std::uint64_t cap) {
    return p_poly(WeylGroup::enumerate(type, cap), eps);
}

QPoly p_poly_restricted(const WeylGroup& group, const EtaTable& table,
                        const std::vector<WeylGroup::Index>& subset) {
    std::vector<long long> acc(static_cast<std::size_t>(group.max_length() + 1), 0);
    const bool flip = group.max_length() % 2 != 0;
    for (auto w : subset) {
        const bool odd = (group.length(w) % 2 != 0) != flip;
        acc[static_cast<std::size_t>(table.values[w])] += odd ? -1 : 1;
    }
    QPoly p;
    for (std::size_t e = 0; e < acc.size(); ++e) p.add_term(static_cast<int>(e), acc[e]);
    return p;
}

std::vector<WeylGroup::Index> w_minus(const WeylGroup& group) {
    const EtaTable t = eta_table(group, SignVector::all_minus(group.rank()));
    const std::uint32_t full = SignVector::all_minus(group.rank()).mask();
    std::vector<WeylGroup::Index> out;
    for (WeylGroup::Index w = 0; w < group.order(); ++w)
        if (t.local[w] == full) out.push_back(w);
    return out;
}

}  // namespace flagcoh
