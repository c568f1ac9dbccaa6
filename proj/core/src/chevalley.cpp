#include "flagcoh/chevalley.hpp"

#include "flagcoh/blowup.hpp"
#include "flagcoh/errors.hpp"

namespace flagcoh {

QPoly OrderPoly::full() const { return QPoly::monomial(r) * reduced; }

OrderPoly order_poly(const LieType& type) {
    const auto data = compact_dual_data(type);
    OrderPoly out;
    out.r = data.r;
    out.reduced = QPoly::monomial(0);
    for (int d : data.degrees) out.reduced = out.reduced * QPoly::cyclotomic_factor(d);
    return out;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    bool prime = p >= 3 && p % 2 == 1;
    for (std::uint64_t d = 3; prime && d * d <= p; d += 2)
        if (p % d == 0) prime = false;
    if (!prime) throw Error(std::to_string(p) + " is not an odd prime");
}

SphereCount sphere_count(int n, const PrimeField& f, std::uint64_t budget) {
    if (n < 1) throw Error("sphere dimension must be positive");
    const std::uint64_t p = f.p();
    std::uint64_t tuples = 1;
    for (int k = 0; k <= n; ++k) {
        if (tuples > budget / p) throw BudgetExceeded("p^(n+1) tuples exceed the budget");
        tuples *= p;
    }
    // squares[a] = #{x : x^2 = a}; dist = distribution of the running sum of squares.
    std::vector<BigInt> squares(p, 0);
    for (std::uint64_t x = 0; x < p; ++x) squares[x * x % p] += 1;
    std::vector<BigInt> dist = squares;
    for (int k = 1; k <= n; ++k) {
        std::vector<BigInt> next(p, 0);
        for (std::uint64_t a = 0; a < p; ++a) {
            if (dist[a] == 0) continue;
            for (std::uint64_t b = 0; b < p; ++b)
                if (squares[b] != 0) next[(a + b) % p] += dist[a] * squares[b];
        }
        dist = std::move(next);
    }
    return SphereCount{dist[1], !f.splits()};
}

BigInt so_order_bruteforce(int n, const PrimeField& f, std::uint64_t budget) {
    if (!f.splits())
        throw FieldNotSplit("p = " + std::to_string(f.p()) + " is not 1 mod 4; the orthogonal group is not split");
    if (n < 1) throw Error("SO(n) needs n >= 1");
    BigInt out = 1;
    for (int k = 1; k < n; ++k) out *= sphere_count(k, f, budget).points;
    return out;
}

OrderReport verify_order(const LieType& type, const PrimeField& f, std::uint64_t cap, std::uint64_t budget) {
    OrderReport rep{type, f.p(), {}, 0, 0, 0, false};
    const int l = type.rank();
    switch (type.family()) {
        case Family::A: rep.so_factors = {l + 1}; break;
        case Family::C: rep.so_factors = {l, l + 1}; break;
        case Family::D: rep.so_factors = {l, l}; break;
        default:
            throw UnsupportedType("compact dual of " + type.str() + " is not a product of SO groups");
    }
    const BigInt q = f.p();
    const auto op = order_poly(type);
    rep.closed_form = op.full().evaluate(q);
    const BigInt qr = pow(q, static_cast<unsigned>(op.r));
    rep.from_pq = qr * p_poly(type, SignVector::all_minus(l), cap).evaluate(q);
    rep.brute_force = 1;
    for (int n : rep.so_factors) rep.brute_force *= so_order_bruteforce(n, f, budget);
    rep.match = rep.closed_form == rep.brute_force && rep.from_pq == rep.brute_force;
    return rep;
}

}  // namespace flagcoh
