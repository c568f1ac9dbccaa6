#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flagcoh/blowup.hpp"
#include "flagcoh/weyl.hpp"

namespace flagcoh {

struct GraphVertex {
    std::uint32_t element = 0;  // index in the enumerated group
    std::string key;            // row-major action matrix
    std::vector<int> word;      // 0-based generators
    int length = 0;
    int eta = 0;
    std::string local_sign;     // w^{-1} eps

    friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

/// Vertices sorted by (length, action matrix); edges (from, to) are vertex
/// positions, directed upward in length, sorted.
struct IncidenceGraph {
    std::string type;
    std::string eps;
    std::vector<GraphVertex> vertices;
    std::vector<std::pair<int, int>> edges;

    friend bool operator==(const IncidenceGraph&, const IncidenceGraph&) = default;
};

/// Tallies of how the edge conditions co-occur over all Bruhat covers.
struct ConditionStats {
    std::uint64_t covers = 0;
    std::uint64_t eta_equal = 0;
    std::uint64_t sign_equal = 0;
    std::uint64_t sign_without_eta = 0;  // d holds, c fails
    std::uint64_t eta_without_sign = 0;  // c holds, d fails
};

struct GraphBuild {
    IncidenceGraph graph;
    ConditionStats stats;
    std::vector<int> vertex_of;  // group index -> vertex position
};

using CoverRelation = std::vector<std::vector<WeylGroup::Index>>;

/// Edge w1 => w2 iff w1 ⋖ w2, equal eta and equal local sign.
GraphBuild build_graph(const WeylGroup& group, const EtaTable& table, const CoverRelation& covers,
                       const std::string& type_label);
IncidenceGraph build_graph(const LieType& type, const SignVector& eps, std::uint64_t cap = kDefaultCap);

struct Components {
    int count = 0;
    std::vector<int> label;  // per vertex, numbered in vertex order of first appearance
};

Components components(const IncidenceGraph& g);

/// Components of the subgraph induced on vertices whose local sign is all '-'.
int negative_components(const IncidenceGraph& g);

enum class GraphFormat { Dot, Json };
GraphFormat parse_graph_format(const std::string& name);

std::string export_graph(const IncidenceGraph& g, GraphFormat format);
IncidenceGraph parse_graph_json(const std::string& text);

/// "e" or "s1s2s1" (1-based).
std::string word_label(const std::vector<int>& word);

}  // namespace flagcoh
