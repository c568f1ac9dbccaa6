#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagcoh/blowup.hpp"
#include "flagcoh/chevalley.hpp"
#include "flagcoh/cohomology.hpp"
#include "flagcoh/errors.hpp"
#include "flagcoh/graph.hpp"
#include "flagcoh/tau.hpp"
#include "flagcoh/toda_flow.hpp"
#include "flagcoh/weyl.hpp"
#include "verify.hpp"

namespace flagcoh::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : Error {
    using Error::Error;
};

std::uint64_t resolve_cap(std::uint64_t flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("FLAGCOH_CAP")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) throw UsageError("FLAGCOH_CAP must be a positive integer");
        return v;
    }
    return kDefaultCap;
}

SignVector parse_eps(const std::string& text, const LieType& type) {
    const auto eps = SignVector::parse(text);
    if (eps.rank() != type.rank())
        throw UsageError("sign vector '" + text + "' has length " + std::to_string(eps.rank()) + ", type " +
                         type.str() + " has rank " + std::to_string(type.rank()));
    return eps;
}

std::vector<SignVector> parse_eps_list(const std::string& text, const LieType& type) {
    if (text == "all") return SignVector::all(type.rank());
    if (text.empty()) return {SignVector::all_minus(type.rank())};
    return {parse_eps(text, type)};
}

Json poly_json(const QPoly& p) {
    Json a = Json::array();
    for (const auto& [e, c] : p.terms()) a.push_back(Json::array({e, c.str()}));
    return a;
}

Json words_json(const std::vector<int>& word) {
    Json a = Json::array();
    for (int i : word) a.push_back(i + 1);
    return a;
}

Json header(const std::string& command, const LieType& type) {
    Json j;
    j["command"] = command;
    j["type"] = type.str();
    j["rank"] = type.rank();
    return j;
}

Json group_json(const CohomologyGroup& g, int degree) {
    Json j;
    j["degree"] = degree;
    j["free_rank"] = g.free_rank;
    Json t = Json::array();
    for (const auto& d : g.torsion) t.push_back(d.str());
    j["torsion"] = t;
    j["text"] = group_str(g);
    return j;
}

struct Emitter {
    std::ostream& out;
    std::string path;

    void emit(const std::string& text) const {
        if (path.empty()) {
            out << text;
            if (text.empty() || text.back() != '\n') out << '\n';
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw UsageError("cannot open output file '" + path + "'");
        f << text;
        if (text.empty() || text.back() != '\n') f << '\n';
    }
    void emit(const Json& j) const { emit(j.dump(2)); }
};

// CLI11 reads "--" and "-+" as option syntax; glue such values to their flag.
std::vector<std::string> glue_values(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const auto& a = args[i];
        if ((a == "--eps" || a == "--spectrum") && i + 1 < args.size()) {
            out.push_back(a + "=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(a);
        }
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Blow-up combinatorics of the Toda lattice and cohomology of real flag manifolds", "flagcoh"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string type_text, eps_text, emit_mode, format = "json", out_path, ring = "Z", signs = "orientation";
    std::string spectrum_text, window_text = "auto", coset_text = "longest";
    std::uint64_t cap_flag = 0, prime = 5, seed = 1;
    int sphere = 0, samples = 20001, random_count = 0, rank = 0;
    bool verify_flag = false, longest_only = false;

    auto add_type = [&](CLI::App* s) { s->add_option("--type", type_text, "Lie type such as A3, G2, E8")->required(); };
    auto add_common = [&](CLI::App* s) {
        s->add_option("--cap", cap_flag, "Weyl group enumeration cap (overrides FLAGCOH_CAP)");
        s->add_option("--out", out_path, "Write the result to a file");
    };

    auto* weyl = app.add_subcommand("weyl", "Weyl group data");
    add_type(weyl);
    add_common(weyl);
    weyl->add_option("--emit", emit_mode, "lengths|order|word-of-longest")
        ->check(CLI::IsMember({"lengths", "order", "word-of-longest"}))
        ->required();

    auto* eta_cmd = app.add_subcommand("eta", "Blow-up counts eta(w, eps)");
    add_type(eta_cmd);
    add_common(eta_cmd);
    eta_cmd->add_option("--eps", eps_text, "Sign vector such as '-+' or 'all' (default all minus)");
    eta_cmd->add_flag("--longest", longest_only, "Only eta(w*), without enumerating W");

    auto* pq = app.add_subcommand("pq", "Alternating blow-up polynomial p_eps(q)");
    add_type(pq);
    add_common(pq);
    pq->add_option("--eps", eps_text, "Sign vector or 'all' (default all minus)");

    auto* graph = app.add_subcommand("graph", "Incidence graph");
    add_type(graph);
    add_common(graph);
    graph->add_option("--eps", eps_text, "Sign vector (default all minus)");
    graph->add_option("--format", format, "dot|json")->check(CLI::IsMember({"dot", "json"}));

    auto* coh = app.add_subcommand("cohomology", "Cohomology of the 0/±2 complex");
    add_type(coh);
    add_common(coh);
    coh->add_option("--eps", eps_text, "Sign vector or 'all' (default all minus)");
    coh->add_option("--ring", ring, "Z|Q|F2")->check(CLI::IsMember({"Z", "Q", "F2"}));
    coh->add_option("--signs", signs, "orientation|forward|reversed")
        ->check(CLI::IsMember({"orientation", "forward", "reversed"}));

    auto* tau = app.add_subcommand("tau", "Nilpotent tau functions");
    add_type(tau);
    add_common(tau);
    tau->add_option("--emit", emit_mode, "min-degrees|multiplicity|poly")
        ->check(CLI::IsMember({"min-degrees", "multiplicity", "poly"}))
        ->required();

    auto* chev = app.add_subcommand("chevalley", "Finite Chevalley group orders and point counts");
    chev->add_option("--type", type_text, "Lie type");
    add_common(chev);
    chev->add_option("--prime", prime, "Odd prime p");
    chev->add_flag("--verify", verify_flag, "Compare against brute-force sphere counts");
    chev->add_option("--sphere", sphere, "Count points of the n-sphere instead");

    auto* flow = app.add_subcommand("flow", "Zeros of A-type tau functions along the t_1 flow");
    add_common(flow);
    flow->add_option("--rank", rank, "Rank l of A_l")->required()->check(CLI::Range(1, 9));
    flow->add_option("--spectrum", spectrum_text, "Comma separated eigenvalues with zero sum");
    flow->add_option("--random", random_count, "Number of random spectra instead");
    flow->add_option("--seed", seed, "Seed for --random");
    flow->add_option("--window", window_text, "Half width T or 'auto'");
    flow->add_option("--samples", samples, "Grid points")->check(CLI::Range(3, 10'000'000));
    flow->add_option("--coset", coset_text, "longest|identity")->check(CLI::IsMember({"longest", "identity"}));

    auto* verify = app.add_subcommand("verify", "Run every applicable cross-check");
    add_type(verify);
    add_common(verify);

    const auto args = glue_values(raw_args);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "flagcoh: " << e.what() << "\n";
        return kUsage;
    }

    const Emitter em{out, out_path};
    try {
        const std::uint64_t cap = resolve_cap(cap_flag);

        if (*weyl) {
            const auto type = LieType::parse(type_text);
            Json j = header("weyl", type);
            if (emit_mode == "order") {
                j["order"] = weyl_order(type);
                j["positive_roots"] = positive_root_count(type);
            } else if (emit_mode == "lengths") {
                const auto g = WeylGroup::enumerate(type, cap);
                j["order"] = g.order();
                j["lengths"] = g.length_distribution();
            } else {
                const auto w = longest_element(type);
                j["length"] = w.length;
                j["word"] = words_json(w.word);
            }
            em.emit(j);
            return kOk;
        }

        if (*eta_cmd) {
            const auto type = LieType::parse(type_text);
            const auto list = parse_eps_list(eps_text, type);
            Json results = Json::array();
            if (longest_only) {
                for (const auto& eps : list) {
                    Json r;
                    r["eps"] = eps.str();
                    r["eta_longest"] = eta_longest(type, eps);
                    results.push_back(r);
                }
            } else {
                const auto g = WeylGroup::enumerate(type, cap);
                for (const auto& eps : list) {
                    const auto t = eta_table(g, eps);
                    Json table = Json::object();
                    for (WeylGroup::Index w = 0; w < g.order(); ++w) table[word_label(g.word(w))] = t.values[w];
                    Json r;
                    r["eps"] = eps.str();
                    r["eta"] = table;
                    r["eta_longest"] = t.values[g.longest()];
                    results.push_back(r);
                }
            }
            Json j = header("eta", type);
            j["results"] = results;
            em.emit(j);
            return kOk;
        }

        if (*pq) {
            const auto type = LieType::parse(type_text);
            const auto g = WeylGroup::enumerate(type, cap);
            Json results = Json::array();
            for (const auto& eps : parse_eps_list(eps_text, type)) {
                const auto p = p_poly(g, eps);
                Json r;
                r["eps"] = eps.str();
                r["poly"] = poly_json(p);
                r["text"] = p.str();
                if (const auto f = p.factored_str()) r["factored"] = *f;
                results.push_back(r);
            }
            Json j = header("pq", type);
            j["w_minus_size"] = w_minus(g).size();
            j["results"] = results;
            em.emit(j);
            return kOk;
        }

        if (*graph) {
            const auto type = LieType::parse(type_text);
            const auto eps = eps_text.empty() ? SignVector::all_minus(type.rank()) : parse_eps(eps_text, type);
            em.emit(export_graph(build_graph(type, eps, cap), parse_graph_format(format)));
            return kOk;
        }

        if (*coh) {
            const auto type = LieType::parse(type_text);
            const auto method = parse_sign_method(signs);
            Json results = Json::array();
            for (const auto& eps : parse_eps_list(eps_text, type)) {
                const auto data = IncidenceData::make(type, eps, cap);
                const auto cx = build_complex(data, method);
                Json r;
                r["eps"] = eps.str();
                r["delta_squared_zero"] = cx.is_complex();
                r["sign_freedom"] = cx.sign_freedom;
                if (ring == "F2") {
                    r["dims"] = mod2_dims(data.group);
                } else {
                    const auto h = integral_cohomology(cx);
                    if (ring == "Q") {
                        r["betti"] = rational_betti(h);
                    } else {
                        Json degs = Json::array();
                        for (std::size_t k = 0; k < h.degrees.size(); ++k)
                            degs.push_back(group_json(h.degrees[k], static_cast<int>(k)));
                        r["degrees"] = degs;
                    }
                    r["warnings"] = h.warnings;
                }
                results.push_back(r);
            }
            Json j = header("cohomology", type);
            j["ring"] = ring;
            j["signs"] = signs;
            j["results"] = results;
            em.emit(j);
            return kOk;
        }

        if (*tau) {
            const auto type = LieType::parse(type_text);
            const auto fam = nilpotent_tau(type);
            Json j = header("tau", type);
            if (emit_mode == "min-degrees") {
                j["min_degrees"] = min_degrees(fam);
            } else if (emit_mode == "multiplicity") {
                j["multiplicity"] = multiplicity(fam);
            } else {
                const auto names = fam.vars.names();
                j["variables"] = names;
                Json taus = Json::array();
                for (const auto& e : fam.taus) {
                    Json t;
                    t["index"] = e.index;
                    t["tag"] = tag_name(e.tag);
                    t["min_degree"] = e.poly.min_degree();
                    t["text"] = e.poly.str(names);
                    Json terms = Json::array();
                    for (const auto& [ex, c] : e.poly.terms()) {
                        Json term;
                        term["exponents"] = ex;
                        term["num"] = numerator(c).str();
                        term["den"] = denominator(c).str();
                        terms.push_back(term);
                    }
                    t["terms"] = terms;
                    taus.push_back(t);
                }
                j["taus"] = taus;
            }
            em.emit(j);
            return kOk;
        }

        if (*chev) {
            const PrimeField f(prime);
            Json j;
            j["command"] = "chevalley";
            j["prime"] = prime;
            j["splits"] = f.splits();
            if (sphere > 0) {
                const auto s = sphere_count(sphere, f);
                j["sphere"] = sphere;
                j["points"] = s.points.str();
                j["field_not_split"] = s.field_not_split;
                em.emit(j);
                return kOk;
            }
            if (type_text.empty()) throw UsageError("chevalley needs --type or --sphere");
            const auto type = LieType::parse(type_text);
            j["type"] = type.str();
            const auto op = order_poly(type);
            j["r"] = op.r;
            j["degrees"] = compact_dual_data(type).degrees;
            j["compact_dual"] = compact_dual_data(type).name;
            j["reduced"] = poly_json(op.reduced);
            j["closed_form"] = op.full().evaluate(prime).str();
            if (!verify_flag) {
                em.emit(j);
                return kOk;
            }
            const auto rep = verify_order(type, f, cap);
            j["so_factors"] = rep.so_factors;
            j["from_pq"] = rep.from_pq.str();
            j["brute_force"] = rep.brute_force.str();
            j["match"] = rep.match;
            em.emit(j);
            return rep.match ? kOk : kFailure;
        }

        if (*flow) {
            const int expected = eta_longest_closed_form(LieType(Family::A, rank));
            std::vector<SpectralData> spectra;
            if (random_count > 0) {
                std::mt19937_64 rng(seed);
                for (int k = 0; k < random_count; ++k) spectra.push_back(random_spectrum(rank, rng));
            } else {
                std::vector<double> v;
                std::stringstream ss(spectrum_text);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    try {
                        v.push_back(std::stod(item));
                    } catch (const std::exception&) {
                        throw UsageError("cannot parse eigenvalue '" + item + "'");
                    }
                }
                if (static_cast<int>(v.size()) != rank + 1)
                    throw UsageError("--spectrum needs rank+1 = " + std::to_string(rank + 1) + " eigenvalues");
                spectra.emplace_back(v);
            }
            FlowOptions opt;
            opt.samples = samples;
            opt.coset = coset_text == "identity" ? Coset::Identity : Coset::LongestElement;
            if (window_text != "auto") {
                try {
                    opt.window = std::stod(window_text);
                } catch (const std::exception&) {
                    throw UsageError("--window must be a number or 'auto'");
                }
            }
            Json runs = Json::array();
            bool all = true;
            for (const auto& s : spectra) {
                const auto rep = total_blowups(s, opt);
                Json r;
                r["spectrum"] = s.eigenvalues();
                r["window"] = rep.window;
                r["higher_times"] = rep.higher;
                r["per_tau_zeros"] = rep.per_tau;
                r["total"] = rep.total;
                const bool match = opt.coset == Coset::LongestElement ? rep.total == expected : rep.total == 0;
                r["match"] = match;
                all = all && match;
                runs.push_back(r);
            }
            Json j;
            j["command"] = "flow";
            j["type"] = LieType(Family::A, rank).str();
            j["coset"] = coset_text;
            j["eta_wstar"] = opt.coset == Coset::LongestElement ? expected : 0;
            if (runs.size() == 1) {
                for (auto& [k, v] : runs[0].items()) j[k] = v;
            } else {
                j["runs"] = runs;
                j["match"] = all;
            }
            em.emit(j);
            return all ? kOk : kFailure;
        }

        if (*verify) {
            const auto type = LieType::parse(type_text);
            const auto checks = verify_type(type, cap);
            bool pass = true;
            Json arr = Json::array();
            for (const auto& c : checks) {
                Json r;
                r["name"] = c.name;
                r["pass"] = c.pass;
                r["soft"] = c.soft;
                r["detail"] = c.detail;
                arr.push_back(r);
                if (!c.pass && !c.soft) pass = false;
            }
            Json j = header("verify", type);
            j["checks"] = arr;
            j["pass"] = pass;
            em.emit(j);
            return pass ? kOk : kFailure;
        }
    } catch (const UsageError& e) {
        err << "flagcoh: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidType& e) {
        err << "flagcoh: " << e.what() << "\n";
        return kUsage;
    } catch (const UnknownFormat& e) {
        err << "flagcoh: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "flagcoh: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

}  // namespace flagcoh::cli
