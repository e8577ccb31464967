#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "cremona/catalog.hpp"
#include "cremona/proximity.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

int components(const ProximityGraph& g) {
  std::vector<int> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  for (auto [a, b] : g.arcs) parent[find(a)] = find(b);
  int n = 0;
  for (int v = 0; v < g.size(); ++v) n += find(v) == v;
  return n;
}

ProximityGraph permuted(const ProximityGraph& g, const std::vector<int>& perm) {
  ProximityGraph h;
  h.weights.resize(g.size());
  for (int v = 0; v < g.size(); ++v) h.weights[perm[v]] = g.weights[v];
  for (auto [a, b] : g.arcs) h.arcs.emplace_back(perm[a], perm[b]);
  std::sort(h.arcs.begin(), h.arcs.end());
  return h;
}

}  // namespace

TEST_CASE("graphs of the quadratic maps") {
  ProximityGraph s = graph_of(resolve_base_points(sigma_map()));
  CHECK(s.weights == std::vector<int>{1, 1, 1});
  CHECK(s.arcs.empty());
  ProximityGraph t = graph_of(resolve_base_points(tau_map()));
  CHECK(t.arcs.size() == 2);
  CHECK(components(t) == 1);
  ProximityGraph g1 = graph_of(resolve_base_points(type_record(1).reference_map()));
  CHECK(g1.arcs.size() == 5);
  CHECK(graph_row(g1) == 1);
}

TEST_CASE("admissibility examples") {
  ProximityGraph bad;
  bad.weights = {2, 1, 1, 1, 1};
  bad.arcs = {{1, 2}, {3, 2}};
  std::string why;
  CHECK(!is_admissible(bad, &why));
  CHECK(!why.empty());
  ProximityGraph empty;
  empty.weights = {2, 1, 1, 1, 1};
  CHECK(is_admissible(empty));
  ProximityGraph single;
  single.weights = {1};
  CHECK(is_admissible(single));
}

TEST_CASE("enumeration counts") {
  auto gs = enumerate_cubic_graphs();
  CHECK(gs.size() == 21);
  std::map<int, int> hist;
  for (const auto& g : gs) {
    CHECK(is_admissible(g));
    ++hist[static_cast<int>(g.arcs.size())];
  }
  CHECK(hist == std::map<int, int>{{0, 1}, {1, 2}, {2, 5}, {3, 7}, {4, 5}, {5, 1}});
  auto es = enumerate_enriched();
  CHECK(es.size() == 31);
  std::map<int, std::vector<int>> by_graph;
  for (const auto& e : es) by_graph[graph_row(e.graph)].push_back(enriched_row(e));
  for (auto& [k, v] : by_graph) std::sort(v.begin(), v.end());
  CHECK(by_graph[21] == std::vector<int>{30, 31});
  CHECK(by_graph[18] == std::vector<int>{17, 18, 19});
}

TEST_CASE("table rows are pairwise non-isomorphic") {
  const auto& t0 = graph_table();
  for (size_t i = 0; i < t0.size(); ++i)
    for (size_t j = i + 1; j < t0.size(); ++j) CHECK(!isomorphic(t0[i], t0[j]));
  CHECK(!isomorphic(t0[18], t0[19]));
  const auto& t2 = enriched_table();
  for (size_t i = 0; i < t2.size(); ++i)
    for (size_t j = i + 1; j < t2.size(); ++j) CHECK(!isomorphic(t2[i], t2[j]));
  CHECK(!isomorphic(t2[27], t2[28]));
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937 rng(2);
  for (const auto& g : graph_table()) {
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      ProximityGraph h = permuted(g, perm);
      CHECK(canonical_form(h) == canonical_form(g));
      CHECK(graph_row(h) == graph_row(g));
    }
  }
}

TEST_CASE("catalog maps realize their enriched rows") {
  for (const auto& t : catalog()) {
    BasePointTree tree = resolve_base_points(t.reference_map());
    EnrichedGraph g = enriched_graph_of(tree);
    CHECK(enriched_row(g) == t.id);
    int proper = 0;
    for (int v = 0; v < g.graph.size(); ++v) {
      CHECK((g.graph.outdegree(v) == 0) == tree.entries[v].point.is_proper());
      proper += tree.entries[v].point.is_proper();
    }
    CHECK(components(g.graph) == proper);
    if (g.line)
      for (int v : *g.line) CHECK(g.graph.weights[v] == 1);
  }
}
