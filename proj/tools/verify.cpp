#include "verify.hpp"

#include <random>
#include <sstream>

#include "flagcoh/blowup.hpp"
#include "flagcoh/chevalley.hpp"
#include "flagcoh/cohomology.hpp"
#include "flagcoh/errors.hpp"
#include "flagcoh/graph.hpp"
#include "flagcoh/tau.hpp"
#include "flagcoh/toda_flow.hpp"
#include "flagcoh/weyl.hpp"

namespace flagcoh::cli {

int eta_longest_closed_form(const LieType& type) {
    const int l = type.rank();
    switch (type.family()) {
        case Family::A: return l % 2 == 0 ? l * (l + 2) / 4 : (l + 1) * (l + 1) / 4;
        case Family::B:
        case Family::C: return l * (l + 1) / 2;
        case Family::D: return l % 2 == 0 ? l * l / 2 : (l * l - 1) / 2;
        case Family::E: return l == 6 ? 20 : l == 7 ? 35 : 64;
        case Family::F: return 14;
        case Family::G: return 4;
    }
    return -1;
}

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

// A uniformly chosen descent at each step gives a random reduced word of w.
std::vector<int> random_reduced_word(const WeylGroup& g, WeylGroup::Index w, std::mt19937_64& rng) {
    std::vector<int> rev;
    while (g.length(w) > 0) {
        std::vector<int> desc;
        for (int i = 0; i < g.rank(); ++i)
            if (g.is_right_descent(w, i)) desc.push_back(i);
        const int i = desc[std::uniform_int_distribution<std::size_t>(0, desc.size() - 1)(rng)];
        rev.push_back(i);
        w = g.times_generator(w, i);
    }
    return {rev.rbegin(), rev.rend()};
}

}  // namespace

std::vector<CheckResult> verify_type(const LieType& type, std::uint64_t cap) {
    std::vector<CheckResult> out;
    const int l = type.rank();
    const auto all_minus = SignVector::all_minus(l);
    const auto dual = compact_dual_data(type);

    {
        const int got = eta_longest(type, all_minus);
        const int want = eta_longest_closed_form(type);
        out.push_back({"eta_longest", got == want && dual.degree_sum() == want, false,
                       "eta(w*)=" + std::to_string(got) + " closed form " + std::to_string(want) + " sum d_i " +
                           std::to_string(dual.degree_sum())});
    }

    if (weyl_order(type) > cap) {
        out.push_back({"enumeration", true, true,
                       "|W|=" + std::to_string(weyl_order(type)) + " exceeds cap; enumeration checks skipped"});
        return out;
    }
    const auto group = WeylGroup::enumerate(type, cap);
    const auto table = eta_table(group, all_minus);

    {
        const QPoly p = p_poly(group, table);
        const QPoly want = order_poly(type).reduced;
        out.push_back({"pq_closed_form", p == want, false, p.str() + " vs " + want.str()});
        const auto wm = w_minus(group);
        out.push_back({"pq_restricted_to_w_minus", p_poly_restricted(group, table, wm) == p, false,
                       "|W-|=" + std::to_string(wm.size())});
    }

    if (group.order() << l <= 20'000'000ULL) {
        int nonzero = 0;
        for (const auto& eps : SignVector::all(l))
            if (!eps.is_all_minus() && !p_poly(group, eps).is_zero()) ++nonzero;
        out.push_back({"pq_vanishes_off_all_minus", nonzero == 0, false,
                       std::to_string(nonzero) + " sign vectors with nonzero p"});
    }

    {
        const auto top = table.values[group.longest()];
        std::size_t bad = 0;
        for (WeylGroup::Index w = 0; w < group.order(); ++w)
            if (table.values[group.multiply(group.longest(), w)] + table.values[w] != top) ++bad;
        out.push_back({"poincare_duality", bad == 0, false, std::to_string(bad) + " failures"});
    }

    {
        std::mt19937_64 rng(20240601);
        std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
        int bad = 0;
        const int trials = 1000;
        for (int k = 0; k < trials; ++k) {
            const auto w = static_cast<WeylGroup::Index>(pick(rng));
            const auto eps = SignVector(l, static_cast<std::uint32_t>(rng()) & ((1U << l) - 1U));
            if (eta_word(random_reduced_word(group, w, rng), eps, group.cartan()) !=
                eta_word(group.word(w), eps, group.cartan()))
                ++bad;
        }
        out.push_back({"eta_word_independence", bad == 0, false,
                       std::to_string(bad) + " of " + std::to_string(trials) + " random word pairs differ"});
    }

    {
        const auto covers = group.all_upper_covers();
        const auto g = build_graph(group, table, covers, type.str()).graph;
        const auto comps = components(g).count;
        std::string detail = std::to_string(comps) + " components";
        bool pass = true;
        const std::string s = type.str();
        const int known = s == "A1" ? 2 : s == "A2" ? 4 : s == "A3" ? 10 : s == "B3" ? 17 : -1;
        if (known >= 0) {
            pass = comps == known;
            detail += ", expected " + std::to_string(known);
        }
        out.push_back({"graph_components", pass, false, detail});
        const int neg = negative_components(g);
        out.push_back({"negative_components_2^g", neg == (1 << dual.g), true,
                       std::to_string(neg) + " vs 2^g=" + std::to_string(1 << dual.g)});
    }

    if (group.order() <= 2000) {
        const auto data = IncidenceData::make(type, all_minus, cap);
        const auto cx = build_complex(data);
        const auto h = integral_cohomology(cx);
        const auto betti = rational_betti(h);
        const auto want = expected_betti(type);
        out.push_back({"delta_squared_zero", cx.is_complex(), false, ""});
        out.push_back({"rational_betti", betti == want, false, join(betti) + " vs " + join(want)});
        out.push_back({"mod2_universal_coefficients", mod2_from_integral(h) == mod2_dims(group), false, ""});
        out.push_back({"torsion_exponent_two", h.warnings.empty(), true,
                       h.warnings.empty() ? "" : h.warnings.front()});
        if (l <= 3) {
            int bad = 0;
            for (const auto& eps : SignVector::all(l)) {
                if (eps.is_all_minus()) continue;
                const auto b = rational_betti(integral_cohomology(build_complex(IncidenceData::make(type, eps, cap))));
                for (int x : b)
                    if (x != 0) {
                        ++bad;
                        break;
                    }
            }
            out.push_back({"twisted_rational_vanishing", bad == 0, false, std::to_string(bad) + " sign vectors"});
        }
    }

    const bool tau_family = type.family() != Family::E && type.family() != Family::F;
    if (tau_family && (type.family() == Family::A ? l <= 6 : l <= 4)) {
        const int d = multiplicity(type);
        out.push_back({"tau_multiplicity", d == eta_longest_closed_form(type), false,
                       "d=" + std::to_string(d) + " min degrees " + join(min_degrees(nilpotent_tau(type)))});
    }

    if (type.family() == Family::A || type.family() == Family::C || type.family() == Family::D) {
        for (std::uint64_t p : {5ULL, 13ULL}) {
            try {
                const auto rep = verify_order(type, PrimeField(p), cap);
                out.push_back({"chevalley_order_p" + std::to_string(p), rep.match, false,
                               rep.closed_form.str() + " / " + rep.brute_force.str()});
            } catch (const BudgetExceeded& e) {
                out.push_back({"chevalley_order_p" + std::to_string(p), true, true, e.what()});
            }
        }
    }

    if (type.family() == Family::A && l <= 4) {
        std::mt19937_64 rng(7 + static_cast<std::uint64_t>(l));
        int bad = 0;
        std::string first;
        for (int k = 0; k < 20; ++k) {
            const auto spec = random_spectrum(l, rng);
            const auto rep = total_blowups(spec);
            if (rep.total != eta_longest_closed_form(type)) {
                ++bad;
                if (first.empty()) {
                    std::ostringstream os;
                    for (double x : spec.eigenvalues()) os << x << " ";
                    first = "spectrum " + os.str();
                }
            }
        }
        out.push_back({"toda_flow_blowups", bad == 0, false, std::to_string(bad) + " of 20 spectra " + first});
    }
    return out;
}

}  // namespace flagcoh::cli
