#include "flagcoh/qpoly.hpp"

#include <algorithm>

#include "flagcoh/errors.hpp"

namespace flagcoh {

QPoly::QPoly(std::initializer_list<std::pair<const int, BigInt>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

QPoly QPoly::monomial(int exponent, BigInt coeff) {
    QPoly p;
    p.add_term(exponent, coeff);
    return p;
}

QPoly QPoly::cyclotomic_factor(int d) {
    QPoly p;
    p.add_term(d, 1);
    p.add_term(0, -1);
    return p;
}

void QPoly::add_term(int exponent, const BigInt& coeff) {
    if (exponent < 0) throw Error("negative exponent in QPoly");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt QPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int QPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

BigInt QPoly::evaluate(const BigInt& q) const {
    BigInt acc = 0;
    int e = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        while (e > it->first) { acc *= q; --e; }
        acc += it->second;
    }
    for (; e > 0; --e) acc *= q;
    return acc;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r = *this;
    r += o;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& monic) const {
    if (monic.is_zero() || monic.terms_.rbegin()->second != 1) throw Error("divisor must be monic");
    const int dd = monic.degree();
    QPoly rem = *this;
    QPoly quot;
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        const BigInt lead = rem.terms_.rbegin()->second;
        quot.add_term(shift, lead);
        for (const auto& [e, c] : monic.terms_) rem.add_term(e + shift, -lead * c);
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

int QPoly::multiplicity_at_one() const {
    if (is_zero()) throw ZeroPolynomial("zero polynomial has no root multiplicity");
    int m = 0;
    QPoly cur = *this;
    const QPoly lin = cyclotomic_factor(1);
    while (auto q = cur.divide_exact(lin)) {
        cur = *q;
        ++m;
    }
    return m;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = mag == 1;
        if (!unit || e == 0) out += mag.str();
        if (e > 0) {
            if (!unit) out += "*";
            out += "q";
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

std::optional<std::pair<int, std::vector<int>>> QPoly::cyclotomic_factorization() const {
    if (is_zero()) return std::nullopt;
    QPoly cur = *this;
    std::vector<int> degrees;
    while (cur.degree() > 0) {
        bool divided = false;
        for (int d = cur.degree(); d >= 1; --d) {
            if (auto q = cur.divide_exact(cyclotomic_factor(d))) {
                // Largest-first division can strand a factor; require the
                // quotient to keep vanishing at q = 1 or be constant.
                if (q->degree() > 0 && q->evaluate(1) != 0) continue;
                cur = *q;
                degrees.push_back(d);
                divided = true;
                break;
            }
        }
        if (!divided) return std::nullopt;
    }
    const BigInt c = cur.coeff(0);
    if (c != 1 && c != -1) return std::nullopt;
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    return std::make_pair(c == 1 ? 1 : -1, degrees);
}

std::optional<std::string> QPoly::factored_str() const {
    auto f = cyclotomic_factorization();
    if (!f) return std::nullopt;
    std::vector<int> degs = f->second;
    std::sort(degs.begin(), degs.end());
    std::string out = f->first < 0 ? "-" : "";
    for (std::size_t k = 0; k < degs.size();) {
        std::size_t run = k;
        while (run < degs.size() && degs[run] == degs[k]) ++run;
        const int d = degs[k];
        out += "(q" + (d > 1 ? "^" + std::to_string(d) : std::string()) + "-1)";
        if (run - k > 1) out += "^" + std::to_string(run - k);
        k = run;
    }
    if (degs.empty()) out += "1";
    return out;
}

}  // namespace flagcoh
