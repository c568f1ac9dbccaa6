#include <catch_amalgamated.hpp>

#include "flagcoh/cartan.hpp"
#include "flagcoh/errors.hpp"

using namespace flagcoh;

namespace {

// symmetrizable with positive definite symmetrization <=> all leading minors positive
bool leading_minors_positive(const CartanMatrix& c) {
    for (int k = 1; k <= c.rank(); ++k) {
        CartanMatrix sub(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.set(i, j, c.at(i, j));
        if (sub.determinant() <= 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("parse round trip and rank limits") {
    for (auto s : {"A1", "B2", "C7", "D4", "E6", "E7", "E8", "F4", "G2", "A12"})
        CHECK(LieType::parse(s).str() == s);
    for (auto s : {"", "A", "A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "H3", "a2", "A2x", "A-1"})
        CHECK_THROWS_AS(LieType::parse(s), InvalidType);
}

TEST_CASE("small matrices") {
    CHECK(cartan_matrix(LieType::parse("A2")).rows() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK(cartan_matrix(LieType::parse("B2")).rows() == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
    CHECK(cartan_matrix(LieType::parse("C2")).rows() == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
    CHECK(cartan_matrix(LieType::parse("G2")).rows() == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
}

TEST_CASE("determinants match the index of connection") {
    // |P/Q|: A_l l+1, B/C 2, D 4, E6 3, E7 2, E8 F4 G2 1
    struct Row { const char* t; long long det; };
    for (auto r : {Row{"A1", 2}, Row{"A5", 6}, Row{"B3", 2}, Row{"C4", 2}, Row{"D4", 4}, Row{"D5", 4},
                   Row{"E6", 3}, Row{"E7", 2}, Row{"E8", 1}, Row{"F4", 1}, Row{"G2", 1}}) {
        auto c = cartan_matrix(LieType::parse(r.t));
        CHECK(c.determinant() == r.det);
        CHECK(leading_minors_positive(c));
    }
}

TEST_CASE("B and C are transposes") {
    for (int l = 2; l <= 6; ++l) {
        auto b = cartan_matrix(LieType(Family::B, l));
        auto c = cartan_matrix(LieType(Family::C, l));
        CHECK(b.transpose() == c);
        CHECK(dual_type(LieType(Family::B, l)) == LieType(Family::C, l));
    }
    CHECK(dual_type(LieType::parse("F4")) == LieType::parse("F4"));
}

TEST_CASE("compact dual has dimension equal to the positive root count") {
    // |Phi+| by the classical counts
    struct Row { const char* t; int npos; int g; };
    for (auto r : {Row{"A1", 1, 1}, Row{"A2", 3, 1}, Row{"A3", 6, 2}, Row{"A6", 21, 3}, Row{"B2", 4, 2},
                   Row{"B4", 16, 4}, Row{"C3", 9, 3}, Row{"C4", 16, 4}, Row{"D4", 12, 4}, Row{"D5", 20, 4},
                   Row{"E6", 36, 4}, Row{"E7", 63, 7}, Row{"E8", 120, 8}, Row{"F4", 24, 4}, Row{"G2", 6, 2}}) {
        INFO(r.t);
        auto d = compact_dual_data(LieType::parse(r.t));
        CHECK(d.dimK == r.npos);
        CHECK(d.g == r.g);
    }
    auto a3 = compact_dual_data(LieType::parse("A3"));
    CHECK(a3.degrees == std::vector<int>{2, 2});
    CHECK(a3.r == 2);
}

TEST_CASE("longest element permutation") {
    CHECK(longest_element_permutation(LieType::parse("A3")) == std::vector<int>{2, 1, 0});
    CHECK(longest_element_permutation(LieType::parse("B3")) == std::vector<int>{0, 1, 2});
    CHECK(longest_element_permutation(LieType::parse("D5")) == std::vector<int>{0, 1, 2, 4, 3});
    CHECK(longest_element_permutation(LieType::parse("D4")) == std::vector<int>{0, 1, 2, 3});
    auto e6 = longest_element_permutation(LieType::parse("E6"));
    int moved = 0;
    for (int i = 0; i < 6; ++i) moved += e6[static_cast<std::size_t>(i)] != i;
    CHECK(moved == 4);
}
