#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace flagcoh {

using Rational = boost::multiprecision::cpp_rational;

/// Sparse polynomial with exact rational coefficients in a fixed number of variables.
class MultiPoly {
public:
    using Exponent = std::vector<int>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int index);

    int nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }

    void add_term(const Exponent& e, const Rational& c);
    Rational coeff(const Exponent& e) const;

    /// Least total degree over stored terms; throws ZeroPolynomial.
    int min_degree() const;
    int max_degree() const;
    /// Largest exponent of one variable.
    int degree_in(int var) const;
    /// Homogeneous component of least total degree.
    MultiPoly lowest_form() const;
    MultiPoly derivative(int var) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// e.g. "1/720*t1^6 + t1*t5"
    std::string str(const std::vector<std::string>& names) const;

private:
    void check(const MultiPoly& o) const;

    int nvars_;
    std::map<Exponent, Rational> terms_;
};

/// Exact determinant by Laplace expansion with memoized minors.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);

}  // namespace flagcoh
