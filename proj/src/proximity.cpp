#include "cremona/proximity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cremona {

bool ProximityGraph::has_arc(int i, int j) const {
  return std::find(arcs.begin(), arcs.end(), std::make_pair(i, j)) != arcs.end();
}

int ProximityGraph::outdegree(int i) const {
  int d = 0;
  for (const auto& a : arcs) d += a.first == i;
  return d;
}

int ProximityGraph::indegree(int i) const {
  int d = 0;
  for (const auto& a : arcs) d += a.second == i;
  return d;
}

ProximityGraph graph_of(const BasePointTree& t) {
  ProximityGraph g;
  for (const auto& e : t.entries) g.weights.push_back(e.mult);
  g.arcs = t.arrows;
  return g;
}

EnrichedGraph enriched_graph_of(const BasePointTree& t) {
  EnrichedGraph e{graph_of(t), std::nullopt};
  if (t.line) e.line = t.line->members;
  return e;
}

bool is_admissible(const ProximityGraph& g, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  int n = g.size();
  for (const auto& [a, b] : g.arcs)
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) return fail("invalid arc");
  // Acyclic: repeatedly strip vertices without outgoing arcs to remaining vertices.
  std::vector<bool> removed(n, false);
  for (int round = 0; round < n; ++round)
    for (int v = 0; v < n; ++v) {
      if (removed[v]) continue;
      bool sink = true;
      for (const auto& [a, b] : g.arcs) sink = sink && !(a == v && !removed[b]);
      if (sink) removed[v] = true;
    }
  if (std::find(removed.begin(), removed.end(), false) != removed.end()) return fail("the graph has a cycle");
  for (int v = 0; v < n; ++v) {
    std::vector<int> out;
    for (const auto& [a, b] : g.arcs)
      if (a == v) out.push_back(b);
    if (out.size() > 2) return fail("vertex " + std::to_string(v) + " has outdegree " + std::to_string(out.size()));
    if (out.size() == 2 && !g.has_arc(out[0], out[1]) && !g.has_arc(out[1], out[0]))
      return fail("the targets of vertex " + std::to_string(v) + " are not joined");
  }
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      int common = 0;
      for (int u = 0; u < n; ++u) common += g.has_arc(u, v) && g.has_arc(u, w);
      if (common > 1)
        return fail("vertices " + std::to_string(v) + " and " + std::to_string(w) + " have two common proximate vertices");
    }
  for (int v = 0; v < n; ++v) {
    int load = 0;
    for (const auto& [a, b] : g.arcs)
      if (b == v) load += g.weights[a];
    if (load > g.weights[v]) return fail("proximity inequality fails at vertex " + std::to_string(v));
  }
  return true;
}

namespace {

// Encoding under the relabelling perm (new index -> old index).
std::vector<int> encode(const ProximityGraph& g, const std::vector<int>& perm, const std::optional<std::array<int, 3>>& line) {
  int n = g.size();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  std::vector<int> code;
  code.push_back(n);
  for (int i = 0; i < n; ++i) code.push_back(g.weights[perm[i]]);
  std::vector<int> adj(n * n, 0);
  for (const auto& [a, b] : g.arcs) adj[inv[a] * n + inv[b]] = 1;
  code.insert(code.end(), adj.begin(), adj.end());
  if (line) {
    std::vector<int> mark(n, 0);
    for (int v : *line) mark[inv[v]] = 1;
    code.insert(code.end(), mark.begin(), mark.end());
  } else {
    code.push_back(-1);
  }
  return code;
}

std::vector<int> canonical(const ProximityGraph& g, const std::optional<std::array<int, 3>>& line) {
  int n = g.size();
  // Only permutations keeping vertices sorted by decreasing weight.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.weights[a] > g.weights[b]; });
  std::vector<int> best;
  std::vector<int> perm(n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      auto c = encode(g, perm, line);
      if (best.empty() || c < best) best = std::move(c);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || g.weights[v] != g.weights[order[k]]) continue;
      used[v] = true;
      perm[k] = v;
      self(self, k + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
  return best;
}

ProximityGraph make_graph(const std::vector<std::pair<int, int>>& arcs) { return {{2, 1, 1, 1, 1}, arcs}; }

// The cubic constraints: satellite points only at the double point.
bool cubic_ok(const ProximityGraph& g) {
  for (int v = 0; v < g.size(); ++v) {
    std::vector<int> out;
    for (const auto& [a, b] : g.arcs)
      if (a == v) out.push_back(b);
    if (out.size() == 2) {
      int grand = g.has_arc(out[0], out[1]) ? out[1] : out[0];
      if (g.weights[grand] != 2) return false;
    }
  }
  return is_admissible(g);
}

// Parent of an infinitely near vertex: the target that is itself proximate to the other target.
int parent_of(const ProximityGraph& g, int v) {
  std::vector<int> out;
  for (const auto& [a, b] : g.arcs)
    if (a == v) out.push_back(b);
  if (out.empty()) return -1;
  if (out.size() == 1) return out[0];
  return g.has_arc(out[0], out[1]) ? out[0] : out[1];
}

int root_of(const ProximityGraph& g, int v) {
  while (parent_of(g, v) >= 0) v = parent_of(g, v);
  return v;
}

}  // namespace

std::vector<int> canonical_form(const ProximityGraph& g) { return canonical(g, std::nullopt); }
std::vector<int> canonical_form(const EnrichedGraph& g) { return canonical(g.graph, g.line); }
bool isomorphic(const ProximityGraph& a, const ProximityGraph& b) { return canonical_form(a) == canonical_form(b); }
bool isomorphic(const EnrichedGraph& a, const EnrichedGraph& b) { return canonical_form(a) == canonical_form(b); }

const std::vector<ProximityGraph>& graph_table() {
  static const std::vector<ProximityGraph> table = [] {
    std::vector<std::vector<std::pair<int, int>>> rows = {
        {{4, 3}, {3, 2}, {2, 1}, {1, 0}, {2, 0}},
        {{4, 3}, {2, 1}, {1, 0}, {2, 0}},
        {{3, 2}, {2, 1}, {1, 0}, {2, 0}},
        {{4, 3}, {3, 0}, {2, 1}, {1, 0}},
        {{4, 3}, {3, 2}, {1, 0}, {2, 0}},
        {{4, 3}, {3, 2}, {2, 1}, {1, 0}},
        {{2, 1}, {1, 0}, {2, 0}},
        {{3, 2}, {1, 0}, {2, 0}},
        {{4, 3}, {1, 0}, {2, 0}},
        {{3, 2}, {2, 1}, {1, 0}},
        {{4, 3}, {2, 1}, {1, 0}},
        {{4, 3}, {3, 2}, {1, 0}},
        {{4, 3}, {3, 2}, {2, 1}},
        {{1, 0}, {2, 0}},
        {{2, 1}, {1, 0}},
        {{4, 3}, {1, 0}},
        {{4, 3}, {2, 1}},
        {{4, 3}, {3, 2}},
        {{1, 0}},
        {{4, 3}},
        {},
    };
    std::vector<ProximityGraph> out;
    for (const auto& r : rows) out.push_back(make_graph(r));
    return out;
  }();
  return table;
}

const std::vector<EnrichedGraph>& enriched_table() {
  static const std::vector<EnrichedGraph> table = [] {
    struct Row {
      std::vector<std::pair<int, int>> arcs;
      std::vector<int> line;
    };
    std::vector<Row> rows = {
        {{{4, 3}, {3, 2}, {2, 1}, {1, 0}, {2, 0}}, {}},
        {{{4, 3}, {3, 2}, {2, 1}, {1, 0}}, {}},
        {{{4, 3}, {3, 2}, {1, 0}, {2, 0}}, {}},
        {{{4, 3}, {3, 0}, {2, 1}, {1, 0}}, {}},
        {{{3, 2}, {2, 1}, {1, 0}, {2, 0}}, {}},
        {{{3, 2}, {1, 0}, {2, 0}}, {}},
        {{{3, 2}, {2, 1}, {1, 0}}, {}},
        {{{4, 3}, {3, 2}, {2, 1}}, {1, 2, 3}},
        {{{4, 3}, {3, 2}, {2, 1}}, {}},
        {{{4, 3}, {3, 2}, {1, 0}}, {2, 3, 4}},
        {{{4, 3}, {3, 2}, {1, 0}}, {}},
        {{{4, 3}, {2, 1}, {1, 0}, {2, 0}}, {}},
        {{{4, 3}, {2, 1}, {1, 0}}, {}},
        {{{4, 3}, {1, 0}, {2, 0}}, {}},
        {{{2, 1}, {1, 0}, {2, 0}}, {}},
        {{{2, 1}, {1, 0}}, {}},
        {{{4, 3}, {3, 2}}, {1, 2, 3}},
        {{{4, 3}, {3, 2}}, {2, 3, 4}},
        {{{4, 3}, {3, 2}}, {}},
        {{{4, 3}, {2, 1}}, {1, 2, 3}},
        {{{4, 3}, {2, 1}}, {}},
        {{{4, 3}, {1, 0}}, {2, 3, 4}},
        {{{4, 3}, {1, 0}}, {}},
        {{{4, 3}}, {1, 2, 3}},
        {{{4, 3}}, {2, 3, 4}},
        {{{4, 3}}, {}},
        {{{1, 0}, {2, 0}}, {}},
        {{{1, 0}}, {2, 3, 4}},
        {{{1, 0}}, {}},
        {{}, {2, 3, 4}},
        {{}, {}},
    };
    std::vector<EnrichedGraph> out;
    for (const auto& r : rows) {
      EnrichedGraph e{make_graph(r.arcs), std::nullopt};
      if (!r.line.empty()) e.line = std::array<int, 3>{r.line[0], r.line[1], r.line[2]};
      out.push_back(e);
    }
    return out;
  }();
  return table;
}

int graph_row(const ProximityGraph& g) {
  static const std::map<std::vector<int>, int> index = [] {
    std::map<std::vector<int>, int> m;
    const auto& t = graph_table();
    for (size_t i = 0; i < t.size(); ++i) m[canonical_form(t[i])] = static_cast<int>(i) + 1;
    return m;
  }();
  auto it = index.find(canonical_form(g));
  return it == index.end() ? 0 : it->second;
}

int enriched_row(const EnrichedGraph& g) {
  static const std::map<std::vector<int>, int> index = [] {
    std::map<std::vector<int>, int> m;
    const auto& t = enriched_table();
    for (size_t i = 0; i < t.size(); ++i) m[canonical_form(t[i])] = static_cast<int>(i) + 1;
    return m;
  }();
  auto it = index.find(canonical_form(g));
  return it == index.end() ? 0 : it->second;
}

std::vector<ProximityGraph> enumerate_cubic_graphs() {
  std::map<std::vector<int>, ProximityGraph> found;
  std::vector<ProximityGraph> layer = {make_graph({})};
  found[canonical_form(layer[0])] = layer[0];
  while (!layer.empty()) {
    std::vector<ProximityGraph> next;
    for (const auto& g : layer)
      for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b) {
          if (a == b || g.has_arc(a, b)) continue;
          ProximityGraph h = g;
          h.arcs.emplace_back(a, b);
          if (!cubic_ok(h)) continue;
          auto c = canonical_form(h);
          if (found.count(c)) continue;
          found[c] = h;
          next.push_back(h);
        }
    layer = std::move(next);
  }
  std::vector<ProximityGraph> out;
  for (const auto& [c, g] : found) out.push_back(g);
  // Table order where known, then by decreasing arc count.
  std::stable_sort(out.begin(), out.end(), [](const ProximityGraph& x, const ProximityGraph& y) {
    int rx = graph_row(x), ry = graph_row(y);
    if ((rx == 0) != (ry == 0)) return rx != 0;
    if (rx != ry) return rx < ry;
    return x.arcs.size() > y.arcs.size();
  });
  return out;
}

std::vector<EnrichedGraph> enumerate_enriched() {
  std::map<std::vector<int>, EnrichedGraph> found;
  for (const auto& g : enumerate_cubic_graphs()) {
    EnrichedGraph plain{g, std::nullopt};
    found[canonical_form(plain)] = plain;
    int dbl = -1;
    for (int v = 0; v < g.size(); ++v)
      if (g.weights[v] == 2) dbl = v;
    std::vector<int> free;
    for (int v = 0; v < g.size(); ++v)
      if (g.weights[v] == 1 && root_of(g, v) != dbl) free.push_back(v);
    // Three simple vertices away from the double point; an infinitely near member needs its parent.
    for (size_t i = 0; i < free.size(); ++i)
      for (size_t j = i + 1; j < free.size(); ++j)
        for (size_t k = j + 1; k < free.size(); ++k) {
          std::array<int, 3> line{free[i], free[j], free[k]};
          bool closed = true;
          for (int v : line) {
            int p = parent_of(g, v);
            closed = closed && (p < 0 || std::find(line.begin(), line.end(), p) != line.end());
          }
          if (!closed) continue;
          EnrichedGraph e{g, line};
          found.emplace(canonical_form(e), e);
        }
  }
  std::vector<EnrichedGraph> out;
  for (const auto& [c, e] : found) out.push_back(e);
  std::stable_sort(out.begin(), out.end(), [](const EnrichedGraph& x, const EnrichedGraph& y) {
    int rx = enriched_row(x), ry = enriched_row(y);
    if ((rx == 0) != (ry == 0)) return rx != 0;
    return rx < ry;
  });
  return out;
}

nlohmann::json graph_to_json(const ProximityGraph& g, int row) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& [a, b] : g.arcs) arcs.push_back({a, b});
  nlohmann::json j = {{"weights", g.weights}, {"arcs", arcs}};
  if (row > 0) j["row"] = row;
  return j;
}

nlohmann::json graph_to_json(const EnrichedGraph& g, int row) {
  nlohmann::json j = graph_to_json(g.graph, row);
  j["line"] = g.line ? nlohmann::json(*g.line) : nlohmann::json(nullptr);
  return j;
}

std::string graph_to_dot(const ProximityGraph& g, const std::string& name) {
  return graph_to_dot(EnrichedGraph{g, std::nullopt}, name);
}

std::string graph_to_dot(const EnrichedGraph& g, const std::string& name) {
  std::ostringstream s;
  s << "digraph " << name << " {\n";
  for (int v = 0; v < g.graph.size(); ++v) {
    bool proper = g.graph.outdegree(v) == 0;
    s << "  v" << v << " [label=\"" << g.graph.weights[v] << "\"" << (proper ? ", color=red" : "") << "];\n";
  }
  for (const auto& [a, b] : g.graph.arcs) s << "  v" << a << " -> v" << b << ";\n";
  if (g.line) {
    const auto& l = *g.line;
    s << "  v" << l[0] << " -> v" << l[1] << " [dir=none, style=dashed, color=blue];\n";
    s << "  v" << l[1] << " -> v" << l[2] << " [dir=none, style=dashed, color=blue];\n";
  }
  s << "}\n";
  return s.str();
}

}  // namespace cremona
