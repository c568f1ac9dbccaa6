#include <catch_amalgamated.hpp>

#include "flagcoh/chevalley.hpp"
#include "flagcoh/errors.hpp"

using namespace flagcoh;

namespace {

// direct count of tuples with sum of squares 1
std::uint64_t raw_sphere(int n, std::uint64_t p) {
    std::vector<std::uint64_t> x(static_cast<std::size_t>(n + 1), 0);
    std::uint64_t hits = 0;
    while (true) {
        std::uint64_t s = 0;
        for (auto v : x) s = (s + v * v) % p;
        hits += s == 1;
        std::size_t k = 0;
        while (k < x.size() && ++x[k] == p) x[k++] = 0;
        if (k == x.size()) break;
    }
    return hits;
}

BigInt ipow(std::uint64_t q, int e) { return pow(BigInt(q), static_cast<unsigned>(e)); }

// split special orthogonal groups
BigInt so_classical(int n, std::uint64_t q) {
    const int m = n / 2;
    BigInt out = 1;
    if (n % 2 == 1) {
        out = ipow(q, m * m);
        for (int i = 1; i <= m; ++i) out *= ipow(q, 2 * i) - 1;
    } else {
        out = ipow(q, m * (m - 1)) * (ipow(q, m) - 1);
        for (int i = 1; i < m; ++i) out *= ipow(q, 2 * i) - 1;
    }
    return out;
}

}  // namespace

TEST_CASE("fields") {
    CHECK(PrimeField(5).splits());
    CHECK_FALSE(PrimeField(3).splits());
    CHECK(PrimeField(13).splits());
    CHECK_FALSE(PrimeField(7).splits());
    for (std::uint64_t bad : {0ULL, 1ULL, 2ULL, 9ULL, 15ULL, 91ULL}) CHECK_THROWS_AS(PrimeField(bad), Error);
}

TEST_CASE("sphere counts") {
    CHECK(sphere_count(1, PrimeField(5)).points == 4);
    CHECK(sphere_count(2, PrimeField(5)).points == 30);
    auto s3 = sphere_count(1, PrimeField(3));
    CHECK(s3.points == 4);
    CHECK(s3.field_not_split);
    CHECK_FALSE(sphere_count(1, PrimeField(5)).field_not_split);
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL})
        for (int n = 1; n <= 3; ++n) {
            if (n == 3 && p > 7) continue;
            INFO("p=" << p << " n=" << n);
            CHECK(sphere_count(n, PrimeField(p)).points == raw_sphere(n, p));
        }
    CHECK_THROWS_AS(sphere_count(0, PrimeField(5)), Error);
    CHECK_THROWS_AS(sphere_count(20, PrimeField(13)), BudgetExceeded);
    CHECK_THROWS_AS(sphere_count(2, PrimeField(13), 1000), BudgetExceeded);
    CHECK_NOTHROW(sphere_count(2, PrimeField(13), 2197));
}

TEST_CASE("orthogonal group orders") {
    CHECK(so_order_bruteforce(3, PrimeField(5)) == 120);
    CHECK(so_order_bruteforce(2, PrimeField(13)) == 12);
    CHECK(so_order_bruteforce(4, PrimeField(5)) == 14400);
    for (std::uint64_t p : {5ULL, 13ULL, 17ULL})
        for (int n = 2; n <= 5; ++n) {
            if (p > 5 && n > 4) continue;
            INFO("p=" << p << " n=" << n);
            CHECK(so_order_bruteforce(n, PrimeField(p)) == so_classical(n, p));
        }
    CHECK_THROWS_AS(so_order_bruteforce(3, PrimeField(3)), FieldNotSplit);
    CHECK_THROWS_AS(so_order_bruteforce(3, PrimeField(7)), FieldNotSplit);
}

TEST_CASE("SO(3) over F5 by matrices") {
    // M^T M = 1 and det M = 1
    const int p = 5;
    std::uint64_t count = 0;
    std::vector<int> m(9, 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
            for (int j = 0; j < 3 && ok; ++j) {
                int s = 0;
                for (int k = 0; k < 3; ++k) s += m[static_cast<std::size_t>(3 * k + i)] * m[static_cast<std::size_t>(3 * k + j)];
                ok = ((s % p) == (i == j ? 1 : 0));
            }
        if (ok) {
            int d = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
                    m[2] * (m[3] * m[7] - m[4] * m[6]);
            count += ((d % p) + p) % p == 1;
        }
        std::size_t k = 0;
        while (k < 9 && ++m[k] == p) m[k++] = 0;
        if (k == 9) break;
    }
    CHECK(count == 120);
}

TEST_CASE("order polynomials") {
    for (auto s : {"A1", "A2", "A3", "B3", "C4", "D4", "G2", "F4", "E6", "E7", "E8"}) {
        INFO(s);
        auto t = LieType::parse(s);
        auto op = order_poly(t);
        auto c = op.reduced.coeff(0);
        CHECK((c == 1 || c == -1));
        CHECK(op.reduced.multiplicity_at_one() == compact_dual_data(t).g);
        CHECK(op.full().degree() == compact_dual_data(t).dimK);
    }
    CHECK(order_poly(LieType::parse("A2")).reduced.str() == "q^2 - 1");
    CHECK(order_poly(LieType::parse("A2")).r == 1);
}

TEST_CASE("blow-up sums count the compact groups") {
    for (auto s : {"A2", "A3", "A4", "C2", "C3", "C4", "D4"})
        for (std::uint64_t p : {5ULL, 13ULL}) {
            INFO(s << " p=" << p);
            auto rep = verify_order(LieType::parse(s), PrimeField(p));
            CHECK(rep.match);
            CHECK(rep.from_pq == rep.brute_force);
        }
    auto a2 = verify_order(LieType::parse("A2"), PrimeField(13));
    CHECK(a2.brute_force == 2184);
    CHECK(a2.so_factors == std::vector<int>{3});
    CHECK(verify_order(LieType::parse("C2"), PrimeField(5)).so_factors == std::vector<int>{2, 3});
    CHECK_THROWS_AS(verify_order(LieType::parse("B3"), PrimeField(5)), UnsupportedType);
    CHECK_THROWS_AS(verify_order(LieType::parse("A2"), PrimeField(3)), FieldNotSplit);
}
