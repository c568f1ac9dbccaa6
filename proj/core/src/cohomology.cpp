#include "flagcoh/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

#include "flagcoh/errors.hpp"

namespace flagcoh {

namespace {

using Index = WeylGroup::Index;

struct Diamond {
    Index bottom;
    Index top;
    std::vector<Index> middles;
};

std::vector<Diamond> length_two_intervals(const IncidenceData& d) {
    std::vector<Diamond> out;
    for (Index w = 0; w < d.group.order(); ++w) {
        std::map<Index, std::vector<Index>> tops;
        for (Index v : d.covers[w])
            for (Index u : d.covers[v]) tops[u].push_back(v);
        for (auto& [u, mids] : tops) {
            std::sort(mids.begin(), mids.end());
            out.push_back(Diamond{w, u, std::move(mids)});
        }
    }
    return out;
}

std::map<std::pair<Index, Index>, int> edge_ids(const IncidenceData& d) {
    std::map<std::pair<Index, Index>, int> ids;
    const auto& g = d.build.graph;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& [a, b] = g.edges[e];
        ids[{g.vertices[static_cast<std::size_t>(a)].element, g.vertices[static_cast<std::size_t>(b)].element}] =
            static_cast<int>(e);
    }
    return ids;
}

ChainComplex assemble(const IncidenceData& d, std::vector<int> signs);

}  // namespace

IncidenceData IncidenceData::make(const LieType& type, const SignVector& eps, std::uint64_t cap) {
    WeylGroup group = WeylGroup::enumerate(type, cap);
    EtaTable table = eta_table(group, eps);
    CoverRelation covers = group.all_upper_covers();
    GraphBuild build = build_graph(group, table, covers, type.str());
    return IncidenceData{std::move(group), std::move(table), std::move(covers), std::move(build)};
}

DiamondReport diamond_check(const IncidenceData& d) {
    const auto ids = edge_ids(d);
    DiamondReport r;
    for (const auto& dm : length_two_intervals(d)) {
        ++r.intervals;
        if (dm.middles.size() != 2) {
            ++r.malformed;
            r.violations.emplace_back(dm.bottom, dm.top);
            continue;
        }
        int paths = 0;
        for (Index v : dm.middles)
            if (ids.count({dm.bottom, v}) && ids.count({v, dm.top})) ++paths;
        if (paths == 2) ++r.complete;
        if (paths == 1) r.violations.emplace_back(dm.bottom, dm.top);
    }
    return r;
}

bool ChainComplex::is_complex() const {
    for (std::size_t k = 0; k + 1 < delta.size(); ++k)
        if (!(delta[k + 1] * delta[k]).is_zero()) return false;
    return true;
}

ChainComplex assign_signs(const IncidenceData& d, Gauge gauge) {
    const auto report = diamond_check(d);
    if (!report.ok()) {
        const auto& [w, u] = report.violations.front();
        throw DiamondViolation("interval [" + word_label(d.group.word(w)) + ", " + word_label(d.group.word(u)) +
                               "] has a single complete two-edge path");
    }
    const auto& g = d.build.graph;
    const auto ids = edge_ids(d);
    const std::size_t m = g.edges.size();

    // Gauge: cell sign flips act on edge bits by cuts, so a spanning forest can be pinned to 0.
    std::vector<bool> pinned(m, false);
    {
        std::vector<std::size_t> parent(g.vertices.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<std::size_t> order(m);
        std::iota(order.begin(), order.end(), 0);
        if (gauge == Gauge::Reversed) std::reverse(order.begin(), order.end());
        for (std::size_t e : order) {
            const auto a = find(static_cast<std::size_t>(g.edges[e].first));
            const auto b = find(static_cast<std::size_t>(g.edges[e].second));
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
                pinned[e] = true;
            }
        }
    }
    std::vector<int> column(m, -1);
    std::vector<std::size_t> free_edges;
    for (std::size_t e = 0; e < m; ++e)
        if (!pinned[e]) {
            column[e] = static_cast<int>(free_edges.size());
            free_edges.push_back(e);
        }
    const std::size_t nv = free_edges.size();

    // sigma(e1) sigma(e2) = -sigma(e3) sigma(e4)  <=>  x1 + x2 + x3 + x4 = 1 over F2.
    std::vector<boost::dynamic_bitset<>> rows;
    for (const auto& dm : length_two_intervals(d)) {
        if (dm.middles.size() != 2) continue;
        std::vector<int> es;
        for (Index v : dm.middles) {
            auto lo = ids.find({dm.bottom, v});
            auto hi = ids.find({v, dm.top});
            if (lo == ids.end() || hi == ids.end()) break;
            es.push_back(lo->second);
            es.push_back(hi->second);
        }
        if (es.size() != 4) continue;
        boost::dynamic_bitset<> row(nv + 1);
        row.set(nv);
        for (int e : es)
            if (column[static_cast<std::size_t>(e)] >= 0) row.flip(static_cast<std::size_t>(column[static_cast<std::size_t>(e)]));
        rows.push_back(std::move(row));
    }

    std::vector<int> pivot_row_of(nv, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nv && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p].test(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].test(c)) rows[r] ^= rows[rank];
        pivot_row_of[c] = static_cast<int>(rank);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r].test(nv)) throw Unsolvable("no sign assignment makes every diamond anticommute");

    const bool free_value = gauge == Gauge::Reversed;
    std::vector<bool> x(nv, free_value);
    for (std::size_t c = 0; c < nv; ++c) {
        if (pivot_row_of[c] < 0) continue;
        const auto& row = rows[static_cast<std::size_t>(pivot_row_of[c])];
        bool v = row.test(nv);
        for (std::size_t f = 0; f < nv; ++f)
            if (f != c && row.test(f) && pivot_row_of[f] < 0) v ^= x[f];
        x[c] = v;
    }

    std::vector<int> signs(m, 1);
    for (std::size_t c = 0; c < nv; ++c)
        if (x[c]) signs[free_edges[c]] = -1;
    ChainComplex cx = assemble(d, std::move(signs));
    cx.sign_freedom = static_cast<int>(nv - rank);
    if (!cx.is_complex()) throw Unsolvable("sign assignment does not square to zero");
    return cx;
}

namespace {

ChainComplex assemble(const IncidenceData& d, std::vector<int> signs) {
    const auto& g = d.build.graph;
    const std::size_t m = g.edges.size();
    ChainComplex cx;
    cx.edge_sign = std::move(signs);
    const int top = d.group.max_length();
    cx.basis.assign(static_cast<std::size_t>(top + 1), {});
    std::vector<int> pos_in_degree(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        auto& b = cx.basis[static_cast<std::size_t>(g.vertices[v].length)];
        pos_in_degree[v] = static_cast<int>(b.size());
        b.push_back(static_cast<int>(v));
    }
    for (int k = 0; k < top; ++k)
        cx.delta.emplace_back(static_cast<int>(cx.basis[static_cast<std::size_t>(k + 1)].size()),
                              static_cast<int>(cx.basis[static_cast<std::size_t>(k)].size()));
    for (std::size_t e = 0; e < m; ++e) {
        const auto [a, b] = g.edges[e];
        const int k = g.vertices[static_cast<std::size_t>(a)].length;
        cx.delta[static_cast<std::size_t>(k)].at(pos_in_degree[static_cast<std::size_t>(b)],
                                                 pos_in_degree[static_cast<std::size_t>(a)]) = 2 * cx.edge_sign[e];
    }
    return cx;
}

}  // namespace

namespace {

// Cube parametrizations of the dual flag manifold. Roots and torus elements use the
// transposed Cartan matrix; the Coxeter group itself is shared with the primal one.
class CellOrientation {
public:
    explicit CellOrientation(const WeylGroup& g) : g_(g), c_(g.cartan().transpose()), l_(g.rank()) {
        for (int a = 0; a < l_; ++a) {
            std::vector<int> r(static_cast<std::size_t>(l_), 0);
            r[static_cast<std::size_t>(a)] = 1;
            root_id_[r] = static_cast<int>(roots_.size());
            roots_.push_back(r);
            ref_word_.emplace_back();
        }
        for (std::size_t k = 0; k < roots_.size(); ++k)
            for (int j = 0; j < l_; ++j) {
                auto b = reflect(roots_[k], j);
                if (std::any_of(b.begin(), b.end(), [](int v) { return v < 0; }) || root_id_.count(b)) continue;
                root_id_[b] = static_cast<int>(roots_.size());
                roots_.push_back(b);
                auto w = ref_word_[k];
                w.insert(w.begin(), j);
                ref_word_.push_back(std::move(w));
            }
        // Tits lift of the inverse reference word, using s^{-1} = s h_i.
        for (const auto& r : ref_word_) {
            Index u = 0;
            unsigned h = 0;
            for (auto it = r.rbegin(); it != r.rend(); ++it) {
                mul_s(u, h, *it);
                h ^= 1U << *it;
            }
            ref_inverse_.emplace_back(u, h);
        }
    }

    // Value of the character alpha_a on the order-two torus element h.
    bool chi_negative(int a, unsigned h) const {
        int s = 0;
        for (int c = 0; c < l_; ++c)
            if ((h >> c) & 1U) s += c_.at(a, c);
        return (s & 1) != 0;
    }

    int orient(const std::vector<int>& word) const {
        int sign = 1;
        std::vector<int> ids;
        std::vector<std::vector<int>> cols(static_cast<std::size_t>(l_), std::vector<int>(static_cast<std::size_t>(l_), 0));
        for (int a = 0; a < l_; ++a) cols[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = 1;
        std::vector<int> pre;
        for (int letter : word) {
            const int id = root_id_.at(cols[static_cast<std::size_t>(letter)]);
            ids.push_back(id);
            auto [u, h] = ref_inverse_[static_cast<std::size_t>(id)];
            for (int i : pre) mul_s(u, h, i);
            if (chi_negative(letter, h)) sign = -sign;
            pre.push_back(letter);
            const auto ci = cols[static_cast<std::size_t>(letter)];
            for (int j = 0; j < l_; ++j) {
                if (j == letter) continue;
                const int a = c_.at(j, letter);
                if (a == 0) continue;
                auto& cj = cols[static_cast<std::size_t>(j)];
                for (int r = 0; r < l_; ++r) cj[static_cast<std::size_t>(r)] -= a * ci[static_cast<std::size_t>(r)];
            }
            for (auto& v : cols[static_cast<std::size_t>(letter)]) v = -v;
        }
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b)
                if (ids[a] > ids[b]) sign = -sign;
        return sign;
    }

private:
    std::vector<int> reflect(std::vector<int> b, int j) const {
        int p = 0;
        for (int c = 0; c < l_; ++c) p += b[static_cast<std::size_t>(c)] * c_.at(c, j);
        b[static_cast<std::size_t>(j)] -= p;
        return b;
    }

    unsigned act(int i, unsigned h) const { return chi_negative(i, h) ? h ^ (1U << i) : h; }

    // (u, h) stands for the Tits lift of u times h.
    void mul_s(Index& u, unsigned& h, int i) const {
        h = act(i, h);
        const Index v = g_.times_generator(u, i);
        if (g_.length(v) < g_.length(u)) h ^= 1U << i;
        u = v;
    }

    const WeylGroup& g_;
    CartanMatrix c_;
    int l_;
    std::vector<std::vector<int>> roots_;
    std::map<std::vector<int>, int> root_id_;
    std::vector<std::vector<int>> ref_word_;
    std::vector<std::pair<Index, unsigned>> ref_inverse_;
};

}  // namespace

ChainComplex orientation_complex(const IncidenceData& d) {
    const auto& g = d.build.graph;
    const auto ids = edge_ids(d);
    const CellOrientation geo(d.group);
    const unsigned full = (1U << d.group.rank()) - 1U;
    const unsigned lam = ~d.table.eps.mask() & full;

    std::vector<int> signs(g.edges.size(), 0);
    std::size_t found = 0;
    std::vector<int> orient_of(d.group.order(), 0);
    auto ref_orient = [&](Index y) {
        auto& o = orient_of[y];
        if (o == 0) o = geo.orient(d.group.word(y));
        return o;
    };
    for (Index y = 0; y < d.group.order(); ++y) {
        const auto word = d.group.word(y);
        for (std::size_t j = 0; j < word.size(); ++j) {
            auto sub = word;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
            const Index yp = d.group.multiply_word(d.group.identity(), sub);
            if (d.group.length(yp) != static_cast<int>(sub.size())) continue;
            unsigned c = 1U << word[j];
            int flips = 0;
            for (std::size_t k = j + 1; k < word.size(); ++k)
                if (geo.chi_negative(word[k], c)) {
                    ++flips;
                    c ^= 1U << word[k];
                }
            const bool twisted = (__builtin_popcount(c & lam) & 1) != 0;
            if (twisted == ((flips & 1) != 0)) continue;
            const auto it = ids.find({d.group.inverse(yp), d.group.inverse(y)});
            if (it == ids.end())
                throw Mismatch("cell incidence " + word_label(sub) + " < " + word_label(word) +
                               " is not an edge of the blow-up graph");
            const int r = geo.orient(sub) * ref_orient(yp);
            signs[static_cast<std::size_t>(it->second)] = (j % 2 == 0 ? -1 : 1) * r;
            ++found;
        }
    }
    if (found != g.edges.size()) throw Mismatch("blow-up graph has edges with no cell incidence");
    ChainComplex cx = assemble(d, std::move(signs));
    if (!cx.is_complex()) throw Unsolvable("cell incidences do not square to zero");
    return cx;
}

SignMethod parse_sign_method(const std::string& name) {
    if (name == "orientation") return SignMethod::Orientation;
    if (name == "forward") return SignMethod::SolveForward;
    if (name == "reversed") return SignMethod::SolveReversed;
    throw UnknownFormat("unknown sign method '" + name + "'");
}

ChainComplex build_complex(const IncidenceData& d, SignMethod method) {
    switch (method) {
        case SignMethod::SolveForward: return assign_signs(d, Gauge::Forward);
        case SignMethod::SolveReversed: return assign_signs(d, Gauge::Reversed);
        case SignMethod::Orientation: break;
    }
    ChainComplex cx = orientation_complex(d);
    cx.sign_freedom = assign_signs(d, Gauge::Forward).sign_freedom;
    return cx;
}

CohomologyGroups integral_cohomology(const ChainComplex& cx) {
    const int top = cx.top_degree();
    std::vector<SmithForm> snf;
    for (const auto& dk : cx.delta) snf.push_back(smith_normal_form(dk));
    CohomologyGroups h;
    for (int k = 0; k <= top; ++k) {
        CohomologyGroup grp;
        const int dim = static_cast<int>(cx.basis[static_cast<std::size_t>(k)].size());
        const int out_rank = k < top ? snf[static_cast<std::size_t>(k)].rank : 0;
        const int in_rank = k > 0 ? snf[static_cast<std::size_t>(k - 1)].rank : 0;
        grp.free_rank = dim - out_rank - in_rank;
        if (k > 0)
            for (const auto& dv : snf[static_cast<std::size_t>(k - 1)].divisors)
                if (dv > 1) {
                    grp.torsion.push_back(dv);
                    if (dv != 2)
                        h.warnings.push_back("degree " + std::to_string(k) + " has torsion Z/" + dv.str());
                }
        h.degrees.push_back(std::move(grp));
    }
    return h;
}

CohomologyGroups integral_cohomology(const LieType& type, const SignVector& eps, std::uint64_t cap,
                                     SignMethod method) {
    return integral_cohomology(build_complex(IncidenceData::make(type, eps, cap), method));
}

std::vector<int> rational_betti(const CohomologyGroups& h) {
    std::vector<int> out;
    for (const auto& g : h.degrees) out.push_back(g.free_rank);
    return out;
}

std::vector<int> rational_betti(const LieType& type, const SignVector& eps, std::uint64_t cap) {
    return rational_betti(integral_cohomology(type, eps, cap));
}

std::vector<int> expected_betti(const LieType& type) {
    std::vector<int> poly{1};
    for (int d : compact_dual_data(type).degrees) {
        const std::size_t shift = static_cast<std::size_t>(2 * d - 1);
        std::vector<int> next(poly.size() + shift, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + shift] += poly[k];
        }
        poly = std::move(next);
    }
    return poly;
}

std::vector<std::uint64_t> mod2_dims(const WeylGroup& group) { return group.length_distribution(); }

std::vector<std::uint64_t> mod2_dims(const LieType& type, std::uint64_t cap) {
    return mod2_dims(WeylGroup::enumerate(type, cap));
}

std::vector<std::uint64_t> mod2_from_integral(const CohomologyGroups& h) {
    auto even_torsion = [&](std::size_t k) -> std::uint64_t {
        if (k >= h.degrees.size()) return 0;
        return static_cast<std::uint64_t>(std::count_if(h.degrees[k].torsion.begin(), h.degrees[k].torsion.end(),
                                                        [](const BigInt& v) { return v % 2 == 0; }));
    };
    std::vector<std::uint64_t> out;
    for (std::size_t k = 0; k < h.degrees.size(); ++k)
        out.push_back(static_cast<std::uint64_t>(h.degrees[k].free_rank) + even_torsion(k) + even_torsion(k + 1));
    return out;
}

std::string group_str(const CohomologyGroup& g) {
    std::vector<std::string> parts;
    if (g.free_rank == 1) parts.push_back("Z");
    else if (g.free_rank > 1) parts.push_back("Z^" + std::to_string(g.free_rank));
    for (const auto& t : g.torsion) parts.push_back("Z/" + t.str());
    if (parts.empty()) return "0";
    std::string s = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) s += " + " + parts[k];
    return s;
}

}  // namespace flagcoh
