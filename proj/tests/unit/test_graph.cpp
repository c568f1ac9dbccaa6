#include <catch_amalgamated.hpp>

#include <queue>

#include <json.hpp>

#include "flagcoh/errors.hpp"
#include "flagcoh/graph.hpp"

using namespace flagcoh;

namespace {

int bfs_components(const IncidenceGraph& g, bool negative_only) {
    const std::size_t n = g.vertices.size();
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : g.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    auto keep = [&](std::size_t v) {
        return !negative_only || g.vertices[v].local_sign.find('+') == std::string::npos;
    };
    std::vector<bool> seen(n);
    int count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s] || !keep(s)) continue;
        ++count;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            auto v = q.front();
            q.pop();
            for (int u : adj[v]) {
                auto x = static_cast<std::size_t>(u);
                if (!seen[x] && keep(x)) {
                    seen[x] = true;
                    q.push(x);
                }
            }
        }
    }
    return count;
}

GraphBuild build(const char* s, const char* eps) {
    auto t = LieType::parse(s);
    auto g = WeylGroup::enumerate(t);
    return build_graph(g, eta_table(g, SignVector::parse(eps)), g.all_upper_covers(), t.str());
}

std::string minus(int l) { return std::string(static_cast<std::size_t>(l), '-'); }

}  // namespace

TEST_CASE("A1 graph") {
    auto g = build_graph(LieType::parse("A1"), SignVector::parse("-"));
    REQUIRE(g.vertices.size() == 2);
    CHECK(g.edges.empty());
    CHECK(components(g).count == 2);
    auto plus = build_graph(LieType::parse("A1"), SignVector::parse("+"));
    CHECK(plus.edges.size() == 1);
    CHECK(components(plus).count == 1);
}

TEST_CASE("component counts") {
    struct Row { const char* t; int comps; };
    for (auto r : {Row{"A2", 4}, Row{"A3", 10}, Row{"B3", 17}}) {
        INFO(r.t);
        auto g = build_graph(LieType::parse(r.t), SignVector::all_minus(LieType::parse(r.t).rank()));
        CHECK(components(g).count == r.comps);
        CHECK(bfs_components(g, false) == r.comps);
    }
}

TEST_CASE("negative components") {
    struct Row { const char* t; int comps; };
    for (auto r : {Row{"A1", 2}, Row{"A2", 2}, Row{"A3", 4}}) {
        INFO(r.t);
        auto g = build_graph(LieType::parse(r.t), SignVector::all_minus(LieType::parse(r.t).rank()));
        CHECK(negative_components(g) == r.comps);
        CHECK(bfs_components(g, true) == r.comps);
    }
}

TEST_CASE("labels number components by first vertex") {
    auto g = build_graph(LieType::parse("B3"), SignVector::parse("-+-"));
    auto c = components(g);
    CHECK(c.count == bfs_components(g, false));
    int next = 0;
    for (int lab : c.label) {
        CHECK(lab <= next);
        if (lab == next) ++next;
    }
    for (const auto& [a, b] : g.edges)
        CHECK(c.label[static_cast<std::size_t>(a)] == c.label[static_cast<std::size_t>(b)]);
}

TEST_CASE("vertex order and edge conditions") {
    auto b = build("C3", "---");
    const auto& g = b.graph;
    for (std::size_t v = 1; v < g.vertices.size(); ++v) {
        const auto& x = g.vertices[v - 1];
        const auto& y = g.vertices[v];
        CHECK(x.length <= y.length);
    }
    for (const auto& [a, c] : g.edges) {
        const auto& x = g.vertices[static_cast<std::size_t>(a)];
        const auto& y = g.vertices[static_cast<std::size_t>(c)];
        CHECK(y.length == x.length + 1);
        CHECK(x.eta == y.eta);
        CHECK(x.local_sign == y.local_sign);
    }
    std::uint64_t covers = 0, both = 0;
    auto grp = WeylGroup::enumerate(LieType::parse("C3"));
    auto t = eta_table(grp, SignVector::parse("---"));
    const auto up = grp.all_upper_covers();
    for (const auto& row : up) covers += row.size();
    for (WeylGroup::Index w = 0; w < grp.order(); ++w)
        for (auto u : up[w]) both += t.values[w] == t.values[u] && t.local[w] == t.local[u];
    CHECK(b.stats.covers == covers);
    CHECK(g.edges.size() == both);
    CHECK(b.stats.eta_equal - b.stats.eta_without_sign == both);
    CHECK(b.stats.sign_equal - b.stats.sign_without_eta == both);
}

TEST_CASE("equal local sign without equal eta") {
    // all-minus covers where local signs agree but eta jumps
    struct Row { const char* t; std::uint64_t d_not_c; };
    for (auto r : {Row{"A1", 1}, Row{"B2", 4}, Row{"B3", 32}}) {
        INFO(r.t);
        std::uint64_t total = 0;
        auto t = LieType::parse(r.t);
        auto g = WeylGroup::enumerate(t);
        auto covers = g.all_upper_covers();
        total = build_graph(g, eta_table(g, SignVector::all_minus(t.rank())), covers, t.str()).stats.sign_without_eta;
        CHECK(total == r.d_not_c);
    }
}

TEST_CASE("json round trip and dot") {
    auto g = build_graph(LieType::parse("G2"), SignVector::parse("-+"));
    auto text = export_graph(g, GraphFormat::Json);
    CHECK(parse_graph_json(text) == g);
    auto j = nlohmann::json::parse(text);
    CHECK(j["vertices"].size() == 12);
    auto dot = export_graph(g, GraphFormat::Dot);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("v0 [label=\"e") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '>') == static_cast<long>(g.edges.size()));
    CHECK_THROWS_AS(parse_graph_format("svg"), UnknownFormat);
    CHECK_THROWS_AS(parse_graph_json("{\"vertices\": 3}"), Error);
    CHECK(word_label({0, 1, 0}) == "s1s2s1");
    CHECK(word_label({}) == "e");
}

TEST_CASE("mismatched inputs") {
    auto a2 = WeylGroup::enumerate(LieType::parse("A2"));
    auto a3 = WeylGroup::enumerate(LieType::parse("A3"));
    CHECK_THROWS_AS(build_graph(a2, eta_table(a3, SignVector::parse("---")), a2.all_upper_covers(), "A2"),
                    TypeMismatch);
}
