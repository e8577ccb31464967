#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/resolve.hpp"
#include "json.hpp"

namespace cremona {

// Weighted digraph with an arc i -> j when base point i is proximate to base point j.
struct ProximityGraph {
  std::vector<int> weights;
  std::vector<std::pair<int, int>> arcs;

  int size() const { return static_cast<int>(weights.size()); }
  bool has_arc(int i, int j) const;
  int outdegree(int i) const;
  int indegree(int i) const;
};

// A cubic graph together with the optional line through three simple vertices.
struct EnrichedGraph {
  ProximityGraph graph;
  std::optional<std::array<int, 3>> line;
};

ProximityGraph graph_of(const BasePointTree& t);
EnrichedGraph enriched_graph_of(const BasePointTree& t);

// Admissibility (acyclic, outdegree <= 2, targets of an outdegree-2 vertex joined by an
// arc, at most one common proximate vertex per pair) and the proximity inequalities.
// On failure the reason is stored in why when given.
bool is_admissible(const ProximityGraph& g, std::string* why = nullptr);

// Canonical encodings; equal iff the graphs are isomorphic.
std::vector<int> canonical_form(const ProximityGraph& g);
std::vector<int> canonical_form(const EnrichedGraph& g);
bool isomorphic(const ProximityGraph& a, const ProximityGraph& b);
bool isomorphic(const EnrichedGraph& a, const EnrichedGraph& b);

// All cubic weighted graphs, built arc by arc from the graph without arcs, in table order.
std::vector<ProximityGraph> enumerate_cubic_graphs();
// All enriched cubic graphs, in table order.
std::vector<EnrichedGraph> enumerate_enriched();

// Reference tables of the 21 graphs and the 31 enriched graphs (row n at index n - 1).
const std::vector<ProximityGraph>& graph_table();
const std::vector<EnrichedGraph>& enriched_table();

// Row number (1-based) of the matching table entry, or 0.
int graph_row(const ProximityGraph& g);
int enriched_row(const EnrichedGraph& g);

nlohmann::json graph_to_json(const ProximityGraph& g, int row = 0);
nlohmann::json graph_to_json(const EnrichedGraph& g, int row = 0);
std::string graph_to_dot(const ProximityGraph& g, const std::string& name = "G");
std::string graph_to_dot(const EnrichedGraph& g, const std::string& name = "G");

}  // namespace cremona
