#pragma once

#include <cstddef>
#include <vector>

#include "flagcoh/qpoly.hpp"

namespace flagcoh {

/// Dense integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    bool is_zero() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

struct SmithForm {
    int rank = 0;
    std::vector<BigInt> divisors;  // nonzero diagonal, positive, each dividing the next
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace flagcoh
