#pragma once

#include <cstdint>
#include <vector>

#include "flagcoh/cartan.hpp"
#include "flagcoh/qpoly.hpp"
#include "flagcoh/weyl.hpp"

namespace flagcoh {

/// |K(F_q)| = q^r * prod (q^{d_i} - 1).
struct OrderPoly {
    int r = 0;
    QPoly reduced;

    QPoly full() const;
};

OrderPoly order_poly(const LieType& type);

/// Odd prime field F_p.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }
    /// x^2 + 1 factors, i.e. p = 1 mod 4.
    bool splits() const noexcept { return p_ % 4 == 1; }

private:
    std::uint64_t p_;
};

constexpr std::uint64_t kDefaultTupleBudget = 100'000'000;

struct SphereCount {
    BigInt points;
    bool field_not_split = false;
};

/// Solutions of x_1^2 + ... + x_{n+1}^2 = 1 over F_p. Throws BudgetExceeded
/// when p^{n+1} exceeds the tuple budget.
SphereCount sphere_count(int n, const PrimeField& f, std::uint64_t budget = kDefaultTupleBudget);

/// |SO(n)| as the product of sphere counts S^1 ... S^{n-1}; needs p = 1 mod 4.
BigInt so_order_bruteforce(int n, const PrimeField& f, std::uint64_t budget = kDefaultTupleBudget);

struct OrderReport {
    LieType type;
    std::uint64_t p = 0;
    std::vector<int> so_factors;  // K = SO(a) x SO(b) ...
    BigInt closed_form;           // q^r prod (q^{d_i} - 1) at q = p
    BigInt from_pq;               // p^r p(p) with p(q) from the blow-up sum
    BigInt brute_force;
    bool match = false;
};

/// Compares the alternating blow-up sum against brute-force point counts for the
/// types whose compact dual is a product of special orthogonal groups (A, C, D).
OrderReport verify_order(const LieType& type, const PrimeField& f, std::uint64_t cap = kDefaultCap,
                         std::uint64_t budget = kDefaultTupleBudget);

}  // namespace flagcoh
