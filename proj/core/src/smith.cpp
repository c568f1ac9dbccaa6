#include "flagcoh/smith.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "flagcoh/errors.hpp"

namespace flagcoh {

bool IntMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw TypeMismatch("matrix dimensions do not compose");
    IntMatrix out(x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r)
        for (int k = 0; k < x.cols; ++k) {
            const long long v = x.at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < y.cols; ++c) out.at(r, c) += v * y.at(k, c);
        }
    return out;
}

namespace {

struct Overflow {};

// Checked int64 arithmetic; the BigInt overloads never fail.
inline long long sub_mul(long long x, long long f, long long y) {
    long long p = 0, r = 0;
    if (__builtin_mul_overflow(f, y, &p) || __builtin_sub_overflow(x, p, &r)) throw Overflow{};
    return r;
}
inline BigInt sub_mul(const BigInt& x, const BigInt& f, const BigInt& y) { return x - f * y; }
inline long long magnitude(long long v) {
    if (v == std::numeric_limits<long long>::min()) throw Overflow{};
    return v < 0 ? -v : v;
}
inline BigInt magnitude(const BigInt& v) { return abs(v); }

template <typename T>
class Work {
public:
    explicit Work(const IntMatrix& m) : rows(m.rows), cols(m.cols), a(m.a.begin(), m.a.end()) {}

    T& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }

    void swap_rows(int r1, int r2) {
        if (r1 == r2) return;
        for (int c = 0; c < cols; ++c) std::swap(at(r1, c), at(r2, c));
    }
    void swap_cols(int c1, int c2) {
        if (c1 == c2) return;
        for (int r = 0; r < rows; ++r) std::swap(at(r, c1), at(r, c2));
    }
    // row dst -= f * row src, from column `from` onward
    void row_axpy(int dst, int src, const T& f, int from) {
        for (int c = from; c < cols; ++c)
            if (at(src, c) != 0) at(dst, c) = sub_mul(at(dst, c), f, at(src, c));
    }
    void col_axpy(int dst, int src, const T& f, int from) {
        for (int r = from; r < rows; ++r)
            if (at(r, src) != 0) at(r, dst) = sub_mul(at(r, dst), f, at(r, src));
    }

    int rows;
    int cols;
    std::vector<T> a;
};

template <typename T>
SmithForm reduce(const IntMatrix& m) {
    Work<T> w(m);
    SmithForm out;
    const int n = std::min(w.rows, w.cols);
    for (int k = 0; k < n; ++k) {
        // Pivot on the smallest nonzero magnitude of the trailing block.
        int pr = -1, pc = -1;
        T best = 0;
        for (int r = k; r < w.rows; ++r) {
            for (int c = k; c < w.cols; ++c) {
                const T& v = w.at(r, c);
                if (v == 0) continue;
                const T mag = magnitude(v);
                if (pr < 0 || mag < best) { best = mag; pr = r; pc = c; }
                if (best == 1) break;
            }
            if (best == 1) break;
        }
        if (pr < 0) break;
        w.swap_rows(k, pr);
        w.swap_cols(k, pc);

        for (;;) {
            bool clean = true;
            for (int r = k + 1; r < w.rows; ++r) {
                if (w.at(r, k) == 0) continue;
                const T f = w.at(r, k) / w.at(k, k);
                w.row_axpy(r, k, f, k);
                if (w.at(r, k) != 0) clean = false;
            }
            for (int c = k + 1; c < w.cols; ++c) {
                if (w.at(k, c) == 0) continue;
                const T f = w.at(k, c) / w.at(k, k);
                w.col_axpy(c, k, f, k);
                if (w.at(k, c) != 0) clean = false;
            }
            if (!clean) {
                // A smaller remainder exists in row k or column k; move it to the pivot.
                int br = k, bc = k;
                T bm = magnitude(w.at(k, k));
                for (int r = k + 1; r < w.rows; ++r)
                    if (w.at(r, k) != 0 && magnitude(w.at(r, k)) < bm) { bm = magnitude(w.at(r, k)); br = r; bc = k; }
                for (int c = k + 1; c < w.cols; ++c)
                    if (w.at(k, c) != 0 && magnitude(w.at(k, c)) < bm) { bm = magnitude(w.at(k, c)); br = k; bc = c; }
                w.swap_rows(k, br);
                w.swap_cols(k, bc);
                continue;
            }
            int bad = -1;
            const T p = w.at(k, k);
            if (p != 1 && p != -1)
                for (int r = k + 1; r < w.rows && bad < 0; ++r)
                    for (int c = k + 1; c < w.cols; ++c)
                        if (w.at(r, c) % p != 0) { bad = r; break; }
            if (bad < 0) break;
            w.row_axpy(k, bad, T(-1), k);
        }
        out.divisors.push_back(BigInt(magnitude(w.at(k, k))));
        ++out.rank;
    }
    return out;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    try {
        return reduce<long long>(m);
    } catch (const Overflow&) {
        return reduce<BigInt>(m);
    }
}

}  // namespace flagcoh
