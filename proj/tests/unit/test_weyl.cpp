#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "flagcoh/errors.hpp"
#include "flagcoh/weyl.hpp"

using namespace flagcoh;

namespace {

// Coxeter degrees; the length generating function is prod [d]_t
std::vector<int> coxeter_degrees(const LieType& t) {
    const int l = t.rank();
    std::vector<int> d;
    switch (t.family()) {
    case Family::A: for (int k = 2; k <= l + 1; ++k) d.push_back(k); break;
    case Family::B:
    case Family::C: for (int k = 1; k <= l; ++k) d.push_back(2 * k); break;
    case Family::D:
        for (int k = 1; k < l; ++k) d.push_back(2 * k);
        d.push_back(l);
        break;
    case Family::E:
        if (l == 6) d = {2, 5, 6, 8, 9, 12};
        else if (l == 7) d = {2, 6, 8, 10, 12, 14, 18};
        else d = {2, 8, 12, 14, 18, 20, 24, 30};
        break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::G: d = {2, 6}; break;
    }
    return d;
}

std::vector<std::uint64_t> poincare(const LieType& t) {
    std::vector<std::uint64_t> p{1};
    for (int d : coxeter_degrees(t)) {
        std::vector<std::uint64_t> q(p.size() + static_cast<std::size_t>(d - 1), 0);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (int k = 0; k < d; ++k) q[i + static_cast<std::size_t>(k)] += p[i];
        p = q;
    }
    return p;
}

}  // namespace

TEST_CASE("orders and longest lengths from formulas") {
    struct Row { const char* t; std::uint64_t order; int npos; };
    for (auto r : {Row{"A1", 2, 1}, Row{"A4", 120, 10}, Row{"B3", 48, 9}, Row{"C5", 3840, 25},
                   Row{"D4", 192, 12}, Row{"D6", 23040, 30}, Row{"E6", 51840, 36},
                   Row{"E7", 2903040, 63}, Row{"E8", 696729600, 120}, Row{"F4", 1152, 24},
                   Row{"G2", 12, 6}}) {
        INFO(r.t);
        CHECK(weyl_order(LieType::parse(r.t)) == r.order);
        CHECK(positive_root_count(LieType::parse(r.t)) == r.npos);
        CHECK(longest_element(LieType::parse(r.t)).length == r.npos);
        auto c = cartan_matrix(LieType::parse(r.t));
        CHECK(static_cast<int>(positive_roots(c).size()) == r.npos);
        CHECK(static_cast<int>(ReflectionSet(c).size()) == r.npos);
    }
}

TEST_CASE("length distribution is the Poincare polynomial") {
    for (auto s : {"A1", "A2", "A3", "A5", "B2", "B3", "B4", "C3", "D4", "D5", "F4", "G2", "E6"}) {
        INFO(s);
        auto t = LieType::parse(s);
        auto g = WeylGroup::enumerate(t);
        CHECK(g.order() == weyl_order(t));
        CHECK(g.length_distribution() == poincare(t));
        CHECK(g.max_length() == positive_root_count(t));
        CHECK(g.length(g.longest()) == g.max_length());
    }
}

TEST_CASE("cap") {
    CHECK_THROWS_AS(WeylGroup::enumerate(LieType::parse("E7"), 1'000'000), CapExceeded);
    try {
        WeylGroup::enumerate(LieType::parse("B4"), 100);
        FAIL("no throw");
    } catch (const CapExceeded& e) {
        CHECK(e.order() == 384);
        CHECK(e.cap() == 100);
    }
}

TEST_CASE("group structure") {
    auto g = WeylGroup::enumerate(LieType::parse("B3"));
    const auto& c = g.cartan();
    for (WeylGroup::Index w = 0; w < g.order(); ++w) {
        auto word = g.word(w);
        CHECK(static_cast<int>(word.size()) == g.length(w));
        CHECK(g.multiply_word(g.identity(), word) == w);
        CHECK(g.find(from_reduced_word(word, c).action) == w);
        auto inv = g.inverse(w);
        CHECK(g.multiply(w, inv) == g.identity());
        CHECK(g.length(inv) == g.length(w));
        CHECK(g.action(inv) == inverse_action(g.element(w), c));
        // w* w has length l(w*) - l(w)
        CHECK(g.length(g.multiply(g.longest(), w)) == g.max_length() - g.length(w));
    }
    CHECK(g.find(std::vector<int>(9, 7)) == g.order());
}

TEST_CASE("longest element agrees with enumeration") {
    for (auto s : {"A3", "B4", "D5", "E6", "F4", "G2"}) {
        auto t = LieType::parse(s);
        auto g = WeylGroup::enumerate(t);
        CHECK(longest_element(t).action == g.action(g.longest()));
        // w*(alpha_i) = -alpha_sigma(i)
        auto sigma = longest_element_permutation(t);
        auto w = longest_element(t);
        for (int i = 0; i < t.rank(); ++i)
            for (int r = 0; r < t.rank(); ++r)
                CHECK(w.at(r, i) == (r == sigma[static_cast<std::size_t>(i)] ? -1 : 0));
    }
}

TEST_CASE("reflections counted by matrix rank") {
    auto g = WeylGroup::enumerate(LieType::parse("F4"));
    std::size_t n = 0;
    for (WeylGroup::Index w = 0; w < g.order(); ++w) n += g.is_reflection(w);
    CHECK(n == 24);
}

TEST_CASE("Bruhat covers by the subword property") {
    // w' < w covers iff w' is a reduced single deletion of a reduced word of w
    for (auto s : {"A3", "B3", "G2", "C3", "D4"}) {
        INFO(s);
        auto g = WeylGroup::enumerate(LieType::parse(s));
        std::vector<std::set<WeylGroup::Index>> oracle(g.order());
        for (WeylGroup::Index w = 1; w < g.order(); ++w) {
            auto word = g.word(w);
            for (std::size_t j = 0; j < word.size(); ++j) {
                auto sub = word;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
                auto v = g.multiply_word(g.identity(), sub);
                if (g.length(v) == g.length(w) - 1) oracle[v].insert(w);
            }
        }
        auto covers = g.all_upper_covers();
        ReflectionSet refl(g.cartan());
        for (WeylGroup::Index w = 0; w < g.order(); ++w) {
            std::vector<WeylGroup::Index> want(oracle[w].begin(), oracle[w].end());
            CHECK(covers[w] == want);
            CHECK(g.upper_covers(w, refl) == want);
            for (auto u : want) {
                CHECK(g.bruhat_cover(w, u));
                CHECK(bruhat_cover(g.element(w), g.element(u), refl, g.cartan()));
            }
        }
    }
}

TEST_CASE("simple reflections act as in the convention") {
    auto c = cartan_matrix(LieType::parse("B2"));
    auto s0 = simple_reflection(0, c);
    // s_0(alpha_1) = alpha_1 - C_{1,0} alpha_0 = alpha_1 + alpha_0
    CHECK(s0.at(0, 1) == 1);
    CHECK(s0.at(1, 1) == 1);
    auto s1 = simple_reflection(1, c);
    // s_1(alpha_0) = alpha_0 - C_{0,1} alpha_1 = alpha_0 + 2 alpha_1
    CHECK(s1.at(1, 0) == 2);
}
