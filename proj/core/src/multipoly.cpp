#include "flagcoh/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "flagcoh/errors.hpp"

namespace flagcoh {

namespace {

int total(const MultiPoly::Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw IndexOutOfRange("variable index " + std::to_string(index) + " out of range");
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    MultiPoly p(nvars);
    p.add_term(e, 1);
    return p;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw TypeMismatch("exponent length does not match variable count");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::min_degree() const {
    if (terms_.empty()) throw ZeroPolynomial("minimal degree of the zero polynomial");
    int best = -1;
    for (const auto& [e, c] : terms_) {
        const int d = total(e);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

int MultiPoly::max_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, total(e));
    return best;
}

int MultiPoly::degree_in(int var) const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, e[static_cast<std::size_t>(var)]);
    return best;
}

MultiPoly MultiPoly::lowest_form() const {
    const int d = min_degree();
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_)
        if (total(e) == d) out.terms_.emplace(e, c);
    return out;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        Exponent f = e;
        --f[static_cast<std::size_t>(var)];
        out.add_term(f, c * k);
    }
    return out;
}

void MultiPoly::check(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw TypeMismatch("polynomials over different variable sets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    out += o;
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check(o);
    MultiPoly out(nvars_);
    Exponent e(static_cast<std::size_t>(nvars_));
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest degree first, lexicographic within a degree.
    std::vector<std::pair<Exponent, Rational>> order(terms_.rbegin(), terms_.rend());
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& x, const auto& y) { return total(x.first) > total(y.first); });
    for (const auto& [e, c] : order) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << mag.str();
        } else if (mag == 1) {
            os << mono;
        } else {
            os << mag.str() << "*" << mono;
        }
    }
    return os.str();
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly::constant(0, 1);
    if (n > 20) throw Error("determinant dimension too large");
    const int nv = m[0][0].nvars();
    for (const auto& row : m)
        if (row.size() != n) throw TypeMismatch("determinant of a non-square matrix");
    // minor(rows k..n-1, columns in mask), where popcount(mask) = n - k
    std::unordered_map<unsigned, MultiPoly> memo;
    auto minor = [&](auto&& self, std::size_t k, unsigned mask) -> MultiPoly {
        if (k == n) return MultiPoly::constant(nv, 1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        MultiPoly acc(nv);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!((mask >> c) & 1U)) continue;
            if (!m[k][c].is_zero()) {
                MultiPoly t = m[k][c] * self(self, k + 1, mask & ~(1U << c));
                acc += sign > 0 ? t : -t;
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return minor(minor, 0, (n == 32 ? 0U : (1U << n)) - 1U);
}

}  // namespace flagcoh
