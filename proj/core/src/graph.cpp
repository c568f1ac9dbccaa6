#include "flagcoh/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "flagcoh/errors.hpp"

namespace flagcoh {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

Components label_components(const IncidenceGraph& g, const std::vector<bool>& keep) {
    DisjointSets ds(g.vertices.size());
    for (const auto& [a, b] : g.edges)
        if (keep[static_cast<std::size_t>(a)] && keep[static_cast<std::size_t>(b)])
            ds.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    Components c;
    c.label.assign(g.vertices.size(), -1);
    std::vector<int> root_label(g.vertices.size(), -1);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (!keep[v]) continue;
        const std::size_t r = ds.find(v);
        if (root_label[r] < 0) root_label[r] = c.count++;
        c.label[v] = root_label[r];
    }
    return c;
}

}  // namespace

std::string word_label(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string s;
    for (int i : word) s += "s" + std::to_string(i + 1);
    return s;
}

GraphBuild build_graph(const WeylGroup& group, const EtaTable& table, const CoverRelation& covers,
                       const std::string& type_label) {
    if (table.values.size() != group.order() || covers.size() != group.order())
        throw TypeMismatch("eta table or cover relation does not belong to this group");

    const int l = group.rank();
    std::vector<WeylGroup::Index> order(group.order());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<int>> actions(group.order());
    for (WeylGroup::Index w = 0; w < group.order(); ++w) actions[w] = group.action(w);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
        if (group.length(a) != group.length(b)) return group.length(a) < group.length(b);
        return actions[a] < actions[b];
    });

    GraphBuild out;
    out.graph.type = type_label;
    out.graph.eps = table.eps.str();
    out.vertex_of.assign(group.order(), -1);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const auto w = order[pos];
        out.vertex_of[w] = static_cast<int>(pos);
        out.graph.vertices.push_back(GraphVertex{w, group.key(w), group.word(w), group.length(w),
                                                 table.values[w], SignVector(l, table.local[w]).str()});
    }

    for (WeylGroup::Index w = 0; w < group.order(); ++w) {
        for (auto v : covers[w]) {
            auto& s = out.stats;
            ++s.covers;
            const bool c = table.values[w] == table.values[v];
            const bool d = table.local[w] == table.local[v];
            s.eta_equal += c;
            s.sign_equal += d;
            s.sign_without_eta += d && !c;
            s.eta_without_sign += c && !d;
            if (c && d) out.graph.edges.emplace_back(out.vertex_of[w], out.vertex_of[v]);
        }
    }
    std::sort(out.graph.edges.begin(), out.graph.edges.end());

    for (const auto& [a, b] : out.graph.edges) {
        const auto& va = out.graph.vertices[static_cast<std::size_t>(a)];
        const auto& vb = out.graph.vertices[static_cast<std::size_t>(b)];
        if (va.eta != vb.eta || va.local_sign != vb.local_sign || vb.length != va.length + 1)
            throw Error("incidence graph edge violates its defining conditions");
    }
    return out;
}

IncidenceGraph build_graph(const LieType& type, const SignVector& eps, std::uint64_t cap) {
    const WeylGroup group = WeylGroup::enumerate(type, cap);
    return build_graph(group, eta_table(group, eps), group.all_upper_covers(), type.str()).graph;
}

Components components(const IncidenceGraph& g) {
    return label_components(g, std::vector<bool>(g.vertices.size(), true));
}

int negative_components(const IncidenceGraph& g) {
    std::vector<bool> keep(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        keep[v] = g.vertices[v].local_sign.find('+') == std::string::npos;
    return label_components(g, keep).count;
}

GraphFormat parse_graph_format(const std::string& name) {
    if (name == "dot") return GraphFormat::Dot;
    if (name == "json") return GraphFormat::Json;
    throw UnknownFormat("unknown graph format '" + name + "'");
}

std::string export_graph(const IncidenceGraph& g, GraphFormat format) {
    if (format == GraphFormat::Dot) {
        std::ostringstream os;
        os << "digraph incidence {\n";
        os << "  label=\"" << g.type << " eps=" << g.eps << "\";\n";
        os << "  node [shape=box];\n";
        for (std::size_t v = 0; v < g.vertices.size(); ++v) {
            const auto& x = g.vertices[v];
            os << "  v" << v << " [label=\"" << word_label(x.word) << " | l=" << x.length
               << " | \xCE\xB7=" << x.eta << "\"];\n";
        }
        for (const auto& [a, b] : g.edges) os << "  v" << a << " -> v" << b << ";\n";
        os << "}\n";
        return os.str();
    }

    nlohmann::ordered_json j;
    j["type"] = g.type;
    j["eps"] = g.eps;
    auto& verts = j["vertices"] = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const auto& x = g.vertices[v];
        std::vector<int> word1;
        for (int i : x.word) word1.push_back(i + 1);
        verts.push_back({{"id", v},
                         {"element", x.element},
                         {"label", word_label(x.word)},
                         {"word", word1},
                         {"key", x.key},
                         {"length", x.length},
                         {"eta", x.eta},
                         {"local_sign", x.local_sign}});
    }
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    return j.dump(2) + "\n";
}

IncidenceGraph parse_graph_json(const std::string& text) {
    IncidenceGraph g;
    try {
        const auto j = nlohmann::json::parse(text);
        g.type = j.at("type").get<std::string>();
        g.eps = j.at("eps").get<std::string>();
        for (const auto& v : j.at("vertices")) {
            GraphVertex x;
            x.element = v.at("element").get<std::uint32_t>();
            x.key = v.at("key").get<std::string>();
            for (int i : v.at("word").get<std::vector<int>>()) x.word.push_back(i - 1);
            x.length = v.at("length").get<int>();
            x.eta = v.at("eta").get<int>();
            x.local_sign = v.at("local_sign").get<std::string>();
            g.vertices.push_back(std::move(x));
        }
        for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw UnknownFormat(std::string("malformed graph JSON: ") + e.what());
    }
    return g;
}

}  // namespace flagcoh
