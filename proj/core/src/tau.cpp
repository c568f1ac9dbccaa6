#include "flagcoh/tau.hpp"

#include <algorithm>
#include <numeric>

#include "flagcoh/errors.hpp"

namespace flagcoh {

int TauVariables::s_index() const {
    if (!has_s) throw IndexOutOfRange("tau family has no s variable");
    return static_cast<int>(times.size());
}

std::vector<std::string> TauVariables::names() const {
    std::vector<std::string> out;
    for (int j : times) out.push_back("t" + std::to_string(j));
    if (has_s) out.emplace_back("s");
    return out;
}

MultiPoly h_poly(int k, const std::vector<int>& active, int nvars) {
    if (nvars < 0) nvars = static_cast<int>(active.size());
    if (nvars < static_cast<int>(active.size())) throw TypeMismatch("fewer variables than active times");
    if (k < 0) return MultiPoly(nvars);
    // k h_k = sum_j j t_j h_{k-j}
    std::vector<MultiPoly> h;
    h.push_back(MultiPoly::constant(nvars, 1));
    for (int n = 1; n <= k; ++n) {
        MultiPoly acc(nvars);
        for (std::size_t v = 0; v < active.size(); ++v) {
            const int j = active[v];
            if (j > n) continue;
            acc += MultiPoly::variable(nvars, static_cast<int>(v)) * h[static_cast<std::size_t>(n - j)] * Rational(j);
        }
        h.push_back(acc * Rational(1, n));
    }
    return h.back();
}

MultiPoly wronskian(const std::vector<HCombo>& fs, const TauVariables& vars) {
    const int nv = vars.count();
    const std::size_t k = fs.size();
    int top = 0;
    for (const auto& f : fs)
        for (const auto& t : f) top = std::max(top, t.index);
    std::vector<MultiPoly> h;
    for (int n = 0; n <= top; ++n) h.push_back(h_poly(n, vars.times, nv));
    auto realize = [&](const HCombo& f, int shift) {
        MultiPoly acc(nv);
        for (const auto& t : f) {
            const int n = t.index - shift;
            if (n >= 0) acc += t.coeff * h[static_cast<std::size_t>(n)];
        }
        return acc;
    };
    std::vector<std::vector<MultiPoly>> m(k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) m[a].push_back(realize(fs[a], static_cast<int>(b)));
    return determinant(m);
}

MultiPoly schur_wronskian(const std::vector<int>& indices, const std::vector<int>& active) {
    if (indices.empty() || !std::is_sorted(indices.begin(), indices.end()) ||
        std::adjacent_find(indices.begin(), indices.end()) != indices.end() || indices.front() < 1)
        throw Error("Schur indices must be strictly increasing and positive");
    TauVariables vars{active, false};
    std::vector<HCombo> fs;
    for (int i : indices) fs.push_back({HTerm{MultiPoly::constant(vars.count(), 1), i}});
    return wronskian(fs, vars);
}

std::string tag_name(TauTag t) {
    switch (t) {
        case TauTag::Plain: return "plain";
        case TauTag::Squared: return "squared";
        case TauTag::Product: return "product";
    }
    return "plain";
}

namespace {

std::vector<int> odd_times(int upto) {
    std::vector<int> out;
    for (int j = 1; j <= upto; j += 2) out.push_back(j);
    return out;
}

HCombo h_of(int n, int nv, const Rational& c = 1) { return {HTerm{MultiPoly::constant(nv, c), n}}; }

void check_dim(const LieType& t, int dim, int max_dim) {
    if (dim > max_dim)
        throw UnsupportedType("tau functions of " + t.str() + " need a " + std::to_string(dim) +
                              "-dimensional determinant (limit " + std::to_string(max_dim) + ")");
}

TauFamily type_a(const LieType& t, int max_dim) {
    const int l = t.rank();
    check_dim(t, l, max_dim);
    TauFamily f{t, {}, {}};
    for (int j = 1; j <= l; ++j) f.vars.times.push_back(j);
    for (int k = 1; k <= l; ++k) {
        std::vector<int> idx;
        for (int i = l - k + 1; i <= l; ++i) idx.push_back(i);
        MultiPoly p = schur_wronskian(idx, f.vars.times);
        if ((k * (k - 1) / 2) % 2 == 1) p = -p;
        f.taus.push_back({k, TauTag::Plain, std::move(p)});
    }
    return f;
}

TauFamily type_b(const LieType& t, int max_dim) {
    const int l = t.rank();
    check_dim(t, l, max_dim);
    TauFamily f{t, {odd_times(2 * l - 1), false}, {}};
    const int nv = f.vars.count();
    auto wr = [&](int k) {
        std::vector<HCombo> fs;
        for (int a = 0; a < k; ++a) fs.push_back(h_of(2 * l - a, nv));
        return wronskian(fs, f.vars);
    };
    for (int k = 1; k < l; ++k) f.taus.push_back({k, TauTag::Plain, wr(k)});
    f.taus.push_back({l, TauTag::Squared, wr(l)});
    return f;
}

TauFamily type_c(const LieType& t, int max_dim) {
    const int l = t.rank();
    check_dim(t, l, max_dim);
    TauFamily f{t, {odd_times(2 * l - 1), false}, {}};
    const int nv = f.vars.count();
    for (int k = 1; k <= l; ++k) {
        std::vector<HCombo> fs;
        for (int a = 0; a < k; ++a) fs.push_back(h_of(2 * l - 1 - a, nv));
        f.taus.push_back({k, TauTag::Plain, wronskian(fs, f.vars)});
    }
    return f;
}

TauFamily type_d(const LieType& t, int max_dim) {
    const int l = t.rank();
    check_dim(t, l, max_dim);
    TauFamily f{t, {odd_times(2 * l - 3), true}, {}};
    const int nv = f.vars.count();
    const MultiPoly s = MultiPoly::variable(nv, f.vars.s_index());
    const MultiPoly one = MultiPoly::constant(nv, 1);
    const MultiPoly two = MultiPoly::constant(nv, 2);
    const bool even = l % 2 == 0;

    // f_m, m = 1..l-1
    std::vector<HCombo> fs;
    for (int m = 1; m < l; ++m) {
        if (even) {
            fs.push_back({HTerm{s, l - m}, HTerm{two, 2 * l - 1 - m}});
        } else if (m == 1) {
            fs.push_back({HTerm{s * s, 0}, HTerm{two, 2 * l - 2}});
        } else {
            fs.push_back({HTerm{two, 2 * l - 1 - m}});
        }
    }
    auto wr = [&](int k) { return wronskian(std::vector<HCombo>(fs.begin(), fs.begin() + k), f.vars); };
    for (int k = 1; k <= l - 2; ++k) f.taus.push_back({k, TauTag::Plain, wr(k)});
    f.taus.push_back({l - 1, TauTag::Product, wr(l - 1)});

    // Bordered determinant for tau_l^2.
    const int n = l - 1;
    std::vector<MultiPoly> h;
    for (int k = 0; k <= 2 * l; ++k) h.push_back(h_poly(k, f.vars.times, nv));
    auto hh = [&](int k) { return k < 0 ? MultiPoly(nv) : h[static_cast<std::size_t>(k)]; };
    std::vector<std::vector<MultiPoly>> m(static_cast<std::size_t>(l), std::vector<MultiPoly>(static_cast<std::size_t>(l), MultiPoly(nv)));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            MultiPoly e(nv);
            for (const auto& term : fs[static_cast<std::size_t>(a - 1)]) e += term.coeff * hh(term.index - (b - 1));
            m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = e;
        }
    for (int a = 1; a <= n; ++a) {
        MultiPoly border = hh(l - a);
        if (a == 1) border += s;
        m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(n)] = border;
        m[static_cast<std::size_t>(n)][static_cast<std::size_t>(a - 1)] = border;
    }
    m[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] = even ? MultiPoly(nv) : one;
    f.taus.push_back({l, TauTag::Squared, determinant(m)});
    return f;
}

TauFamily type_g(const LieType& t) {
    TauFamily f{t, {{1, 5}, false}, {}};
    const int nv = f.vars.count();
    f.taus.push_back({1, TauTag::Plain, h_poly(6, f.vars.times)});
    f.taus.push_back({2, TauTag::Plain, wronskian({h_of(6, nv), h_of(5, nv)}, f.vars)});
    return f;
}

}  // namespace

TauFamily nilpotent_tau(const LieType& type, int max_dim) {
    switch (type.family()) {
        case Family::A: return type_a(type, max_dim);
        case Family::B: return type_b(type, max_dim);
        case Family::C: return type_c(type, max_dim);
        case Family::D: return type_d(type, max_dim);
        case Family::G: return type_g(type);
        default: break;
    }
    throw UnsupportedType("no nilpotent tau functions for type " + type.str());
}

std::vector<int> min_degrees(const TauFamily& f) {
    std::vector<int> out(static_cast<std::size_t>(f.type.rank()), 0);
    int product = -1;
    for (const auto& e : f.taus) {
        const int d = e.poly.min_degree();
        switch (e.tag) {
            case TauTag::Plain: out[static_cast<std::size_t>(e.index - 1)] = d; break;
            case TauTag::Squared:
                if (d % 2 != 0)
                    throw OddSquaredDegree("tau_" + std::to_string(e.index) + "^2 has odd minimal degree " +
                                           std::to_string(d));
                out[static_cast<std::size_t>(e.index - 1)] = d / 2;
                break;
            case TauTag::Product: product = d; break;
        }
    }
    if (product >= 0) out[static_cast<std::size_t>(f.type.rank() - 2)] = product - out.back();
    return out;
}

int multiplicity(const TauFamily& f) {
    const auto d = min_degrees(f);
    return std::accumulate(d.begin(), d.end(), 0);
}

int multiplicity(const LieType& type) { return multiplicity(nilpotent_tau(type)); }

}  // namespace flagcoh
