#include <catch_amalgamated.hpp>

#include "flagcoh/qpoly.hpp"

using namespace flagcoh;

TEST_CASE("arithmetic") {
    QPoly a{{2, 1}, {0, -1}};
    QPoly b = QPoly::cyclotomic_factor(2);
    CHECK(a == b);
    CHECK((a - b).is_zero());
    CHECK((a * a).str() == "q^4 - 2*q^2 + 1");
    CHECK((-a).coeff(0) == 1);
    CHECK(a.degree() == 2);
    CHECK(QPoly().degree() == -1);
    CHECK(a.evaluate(5) == 24);
    CHECK(QPoly::monomial(3, 2).evaluate(-2) == -16);
    QPoly c;
    c += a;
    c.add_term(2, -1);
    CHECK(c == QPoly::monomial(0, -1));
}

TEST_CASE("exact division") {
    auto p = QPoly::cyclotomic_factor(6);
    auto q = p.divide_exact(QPoly::cyclotomic_factor(3));
    REQUIRE(q);
    CHECK(*q == QPoly{{3, 1}, {0, 1}});
    CHECK_FALSE(QPoly::cyclotomic_factor(5).divide_exact(QPoly::cyclotomic_factor(2)));
}

TEST_CASE("multiplicity at one") {
    auto p = QPoly::cyclotomic_factor(2) * QPoly::cyclotomic_factor(3) * QPoly::cyclotomic_factor(3);
    CHECK(p.multiplicity_at_one() == 3);
    CHECK(QPoly::monomial(4).multiplicity_at_one() == 0);
}

TEST_CASE("cyclotomic factorization") {
    auto p = QPoly::cyclotomic_factor(1) * QPoly::cyclotomic_factor(2) * QPoly::cyclotomic_factor(3);
    auto f = p.cyclotomic_factorization();
    REQUIRE(f);
    CHECK(f->first == 1);
    CHECK(f->second == std::vector<int>{3, 2, 1});
    CHECK(p.factored_str().value_or("") == "(q-1)(q^2-1)(q^3-1)");
    CHECK((p * QPoly::cyclotomic_factor(2)).factored_str().value_or("") == "(q-1)(q^2-1)^2(q^3-1)");
    auto neg = (-p).cyclotomic_factorization();
    REQUIRE(neg);
    CHECK(neg->first == -1);
    CHECK_FALSE(QPoly{{2, 1}, {0, 1}}.cyclotomic_factorization());
    CHECK_FALSE(QPoly().cyclotomic_factorization());
}
