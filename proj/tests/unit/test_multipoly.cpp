#include <catch_amalgamated.hpp>

#include "flagcoh/errors.hpp"
#include "flagcoh/multipoly.hpp"

using namespace flagcoh;

namespace {

MultiPoly x(int i, int n = 3) { return MultiPoly::variable(n, i); }

}  // namespace

TEST_CASE("ring operations") {
    auto p = x(0) * x(0) + x(1) * Rational(1, 2);
    CHECK(p.coeff({2, 0, 0}) == 1);
    CHECK(p.coeff({0, 1, 0}) == Rational(1, 2));
    CHECK(p.coeff({0, 0, 1}) == 0);
    CHECK((p - p).is_zero());
    CHECK((p * MultiPoly::constant(3, 0)).is_zero());
    CHECK(-(-p) == p);
    auto q = p * p;
    CHECK(q.coeff({2, 1, 0}) == 1);
    CHECK(q.coeff({0, 2, 0}) == Rational(1, 4));
    CHECK(q.max_degree() == 4);
    CHECK(q.min_degree() == 2);
    CHECK(q.degree_in(1) == 2);
    CHECK_THROWS_AS(MultiPoly(3).min_degree(), ZeroPolynomial);
    CHECK_THROWS_AS(x(0, 2) + x(0, 3), Error);
    MultiPoly acc(3);
    acc += p;
    acc.add_term({2, 0, 0}, -1);
    CHECK(acc == x(1) * Rational(1, 2));
}

TEST_CASE("lowest form and derivative") {
    auto p = x(0) * x(1) + x(2) + x(0) * x(0) * x(0);
    CHECK(p.lowest_form() == x(2));
    auto d = p.derivative(0);
    CHECK(d == x(1) + x(0) * x(0) * Rational(3));
    CHECK(MultiPoly::constant(3, 5).derivative(1).is_zero());
}

TEST_CASE("rendering") {
    MultiPoly p(2);
    p.add_term({6, 0}, Rational(1, 720));
    p.add_term({1, 1}, 1);
    CHECK(p.str({"t1", "t5"}) == "1/720*t1^6 + t1*t5");
    MultiPoly q(2);
    q.add_term({0, 2}, -1);
    q.add_term({0, 0}, 3);
    CHECK(q.str({"a", "b"}) == "-b^2 + 3");
    CHECK(MultiPoly(2).str({"a", "b"}) == "0");
}

TEST_CASE("Vandermonde determinant") {
    const int n = 4;
    std::vector<std::vector<MultiPoly>> m(n);
    for (int r = 0; r < n; ++r) {
        MultiPoly pw = MultiPoly::constant(n, 1);
        for (int c = 0; c < n; ++c) {
            m[static_cast<std::size_t>(c)].push_back(pw);
            pw = pw * x(r, n);
        }
    }
    // rows are powers, columns variables
    MultiPoly want = MultiPoly::constant(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) want = want * (x(j, n) - x(i, n));
    CHECK(determinant(m) == want);
    CHECK(determinant({}) == MultiPoly::constant(0, 1));
}

TEST_CASE("determinant of a singular matrix") {
    auto a = x(0) + x(1);
    std::vector<std::vector<MultiPoly>> m{{a, a * x(2)}, {a * Rational(2), a * x(2) * Rational(2)}};
    CHECK(determinant(m).is_zero());
}
