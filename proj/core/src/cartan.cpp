#include "flagcoh/cartan.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "flagcoh/errors.hpp"

namespace flagcoh {

namespace {

bool rank_valid(Family family, int rank) {
    switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
    }
    return false;
}

void link(CartanMatrix& m, int a, int b) {
    m.set(a, b, -1);
    m.set(b, a, -1);
}

}  // namespace

LieType::LieType(Family family, int rank) : family_(family), rank_(rank) {
    if (!rank_valid(family, rank)) {
        throw InvalidType("invalid rank " + std::to_string(rank) + " for family " +
                          std::string(1, static_cast<char>(family)));
    }
}

LieType LieType::parse(std::string_view text) {
    if (text.size() < 2) throw InvalidType("cannot parse Lie type '" + std::string(text) + "'");
    const char letter = text.front();
    Family family;
    switch (letter) {
    case 'A': family = Family::A; break;
    case 'B': family = Family::B; break;
    case 'C': family = Family::C; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    case 'F': family = Family::F; break;
    case 'G': family = Family::G; break;
    default: throw InvalidType("unknown family in '" + std::string(text) + "'");
    }
    int rank = 0;
    const auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw InvalidType("cannot parse rank in '" + std::string(text) + "'");
    }
    return LieType(family, rank);
}

std::string LieType::str() const {
    return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

CartanMatrix::CartanMatrix(int rank)
    : rank_(rank), entries_(static_cast<std::size_t>(rank * rank), 0) {
    for (int i = 0; i < rank; ++i) set(i, i, 2);
}

CartanMatrix::CartanMatrix(int rank, std::vector<int> row_major)
    : rank_(rank), entries_(std::move(row_major)) {
    if (entries_.size() != static_cast<std::size_t>(rank * rank)) {
        throw InvalidType("Cartan matrix entry count does not match rank");
    }
}

CartanMatrix CartanMatrix::transpose() const {
    CartanMatrix t(rank_);
    for (int j = 0; j < rank_; ++j)
        for (int i = 0; i < rank_; ++i) t.set(i, j, at(j, i));
    return t;
}

long long CartanMatrix::determinant() const {
    // Bareiss fraction-free elimination; exact for integer input.
    std::vector<long long> a(entries_.begin(), entries_.end());
    const int n = rank_;
    long long sign = 1;
    long long prev = 1;
    auto el = [&](int r, int c) -> long long& { return a[static_cast<std::size_t>(r * n + c)]; };
    for (int k = 0; k < n - 1; ++k) {
        if (el(k, k) == 0) {
            int swap = -1;
            for (int r = k + 1; r < n; ++r)
                if (el(r, k) != 0) { swap = r; break; }
            if (swap < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(el(k, c), el(swap, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c)
                el(r, c) = (el(r, c) * el(k, k) - el(r, k) * el(k, c)) / prev;
        prev = el(k, k);
    }
    return sign * el(n - 1, n - 1);
}

std::vector<std::vector<int>> CartanMatrix::rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(rank_));
    for (int j = 0; j < rank_; ++j)
        for (int i = 0; i < rank_; ++i) out[static_cast<std::size_t>(j)].push_back(at(j, i));
    return out;
}

CartanMatrix cartan_matrix(const LieType& type) {
    const int l = type.rank();
    CartanMatrix m(l);
    switch (type.family()) {
    case Family::A:
        for (int i = 0; i + 1 < l; ++i) link(m, i, i + 1);
        break;
    case Family::B:
        for (int i = 0; i + 1 < l; ++i) link(m, i, i + 1);
        m.set(l - 2, l - 1, -2);
        break;
    case Family::C:
        for (int i = 0; i + 1 < l; ++i) link(m, i, i + 1);
        m.set(l - 1, l - 2, -2);
        break;
    case Family::D:
        for (int i = 0; i + 2 < l - 1; ++i) link(m, i, i + 1);
        link(m, l - 3, l - 2);
        link(m, l - 3, l - 1);
        break;
    case Family::E:
        // Bourbaki labels: 1-3-4-5-...-l with 2 attached to 4.
        link(m, 0, 2);
        link(m, 1, 3);
        for (int i = 2; i + 1 < l; ++i) link(m, i, i + 1);
        break;
    case Family::F:
        link(m, 0, 1);
        link(m, 1, 2);
        link(m, 2, 3);
        m.set(1, 2, -2);
        break;
    case Family::G:
        m.set(0, 1, -1);
        m.set(1, 0, -3);
        break;
    }
    return m;
}

LieType dual_type(const LieType& type) {
    switch (type.family()) {
    case Family::B: return LieType(Family::C, type.rank());
    case Family::C: return LieType(Family::B, type.rank());
    default: return type;
    }
}

int DualCompactData::degree_sum() const {
    return std::accumulate(degrees.begin(), degrees.end(), 0);
}

DualCompactData compact_dual_data(const LieType& type) {
    const int l = type.rank();
    DualCompactData d;
    auto doubled_evens = [&](int upto) {
        for (int k = 2; k <= upto; k += 2) {
            d.degrees.push_back(k);
            d.degrees.push_back(k);
        }
    };
    switch (type.family()) {
    case Family::A:
        d.name = "SO(" + std::to_string(l + 1) + ")";
        if (l % 2 == 0) {
            for (int k = 2; k <= l; k += 2) d.degrees.push_back(k);
        } else {
            for (int k = 2; k <= l - 1; k += 2) d.degrees.push_back(k);
            d.degrees.push_back((l + 1) / 2);
        }
        break;
    case Family::B:
        d.name = "U(" + std::to_string(l) + ")";
        for (int k = 1; k <= l; ++k) d.degrees.push_back(k);
        break;
    case Family::C:
        d.name = "SO(" + std::to_string(l) + ")xSO(" + std::to_string(l + 1) + ")";
        if (l % 2 == 0) {
            doubled_evens(l - 2);
            d.degrees.push_back(l);
            d.degrees.push_back(l / 2);
        } else {
            doubled_evens(l - 1);
            d.degrees.push_back((l + 1) / 2);
        }
        break;
    case Family::D:
        d.name = "SO(" + std::to_string(l) + ")xSO(" + std::to_string(l) + ")";
        if (l % 2 == 0) {
            doubled_evens(l - 2);
            d.degrees.push_back(l / 2);
            d.degrees.push_back(l / 2);
        } else {
            doubled_evens(l - 1);
        }
        break;
    case Family::E:
        if (l == 6) {
            d.name = "Sp(4)";
            d.degrees = {2, 4, 6, 8};
        } else if (l == 7) {
            d.name = "SU(8)";
            d.degrees = {2, 3, 4, 5, 6, 7, 8};
        } else {
            d.name = "SO(16)";
            d.degrees = {2, 4, 6, 8, 10, 12, 14, 8};
        }
        break;
    case Family::F:
        d.name = "Sp(1)xSp(3)";
        d.degrees = {2, 2, 4, 6};
        break;
    case Family::G:
        d.name = "SU(2)xSU(2)";
        d.degrees = {2, 2};
        break;
    }
    std::sort(d.degrees.begin(), d.degrees.end());
    d.g = static_cast<int>(d.degrees.size());
    for (int deg : d.degrees) {
        d.r += deg - 1;
        d.dimK += 2 * deg - 1;
    }
    return d;
}

std::vector<int> longest_element_permutation(const LieType& type) {
    const int l = type.rank();
    std::vector<int> sigma(static_cast<std::size_t>(l));
    std::iota(sigma.begin(), sigma.end(), 0);
    switch (type.family()) {
    case Family::A:
        std::reverse(sigma.begin(), sigma.end());
        break;
    case Family::D:
        if (l % 2 == 1) std::swap(sigma[static_cast<std::size_t>(l - 2)], sigma[static_cast<std::size_t>(l - 1)]);
        break;
    case Family::E:
        if (l == 6) {
            std::swap(sigma[0], sigma[5]);
            std::swap(sigma[2], sigma[4]);
        }
        break;
    default:
        break;
    }
    return sigma;
}

}  // namespace flagcoh
