#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace flagcoh {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial in one variable q, sparse; zero coefficients are never stored.
class QPoly {
public:
    QPoly() = default;
    QPoly(std::initializer_list<std::pair<const int, BigInt>> terms);

    static QPoly monomial(int exponent, BigInt coeff = 1);
    /// q^d - 1
    static QPoly cyclotomic_factor(int d);

    void add_term(int exponent, const BigInt& coeff);
    BigInt coeff(int exponent) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    const std::map<int, BigInt>& terms() const noexcept { return terms_; }

    BigInt evaluate(const BigInt& q) const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    bool operator==(const QPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    /// Exact division by a monic divisor; nullopt if the remainder is nonzero.
    std::optional<QPoly> divide_exact(const QPoly& monic) const;

    /// Multiplicity of the root q = 1.
    int multiplicity_at_one() const;

    /// "q^2 - 1" style rendering, highest degree first.
    std::string str() const;

    /// Writes the polynomial as ±prod (q^d - 1) when possible; returns the
    /// degrees (largest first) and the sign.
    std::optional<std::pair<int, std::vector<int>>> cyclotomic_factorization() const;
    /// Human-readable factored form, e.g. "(q-1)(q^2-1)(q^3-1)", or nullopt.
    std::optional<std::string> factored_str() const;

private:
    std::map<int, BigInt> terms_;
};

}  // namespace flagcoh
