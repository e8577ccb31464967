#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cremona/catalog.hpp"
#include "cremona/classify.hpp"
#include "cremona/errors.hpp"
#include "cremona/lengths.hpp"
#include "cremona/map_language.hpp"
#include "cremona/proximity.hpp"
#include "cremona/resolve.hpp"
#include "cremona/tables.hpp"
#include "json.hpp"

using namespace cremona;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kNegative = 1, kInputError = 2, kUnsupported = 3, kInternal = 4;

Bindings parse_bindings(const std::vector<std::string>& specs) {
  Bindings b;
  for (const auto& s : specs) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects name=value, got '" + s + "'");
    std::string name = s.substr(0, eq);
    if (name == "gamma") name = "γ";
    b[name] = parse_scalar(s.substr(eq + 1));
  }
  return b;
}

// A map text, or a decomposition such as "[x:z:y] o sigma o [y:x:z]".
CremonaMap read_map(const std::string& text, const Bindings& b) {
  try {
    return parse_map(text, b);
  } catch (const ParseError& first) {
    try {
      return compose_factors(parse_decomposition(text, b));
    } catch (const ParseError&) {
      throw first;
    }
  }
}

std::vector<Scalar> read_params(const std::vector<std::string>& args, const Bindings& b) {
  std::vector<Scalar> out;
  for (const auto& a : args) {
    size_t start = 0;
    while (start <= a.size()) {
      size_t comma = a.find(',', start);
      std::string piece = a.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!piece.empty()) out.push_back(parse_scalar(piece, b));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

std::string params_text(const std::vector<Scalar>& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].to_string();
  return s + ")";
}

void emit(const json& j, bool pretty, const std::string& summary) {
  if (pretty)
    std::cout << summary;
  else
    std::cout << j.dump(2) << "\n";
}

std::string classify_summary(const ClassificationResult& r) {
  std::string s = "degree " + std::to_string(r.degree) + ", " + r.kind;
  if (r.type > 0) s += " type " + std::to_string(r.type);
  if (!r.params.empty()) s += ", parameters " + params_text(r.params);
  s += "\n";
  if (r.has_witness) s += "witness: " + r.post.to_string() + " o f o " + r.pre.to_string() + " = " + reference_map(r).to_string() + "\n";
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"Plane Cremona maps: resolution, proximity graphs, classification of cubic maps, lengths"};
  app.require_subcommand(1);
  std::vector<std::string> param_specs;
  bool pretty = false;
  app.add_option("--param", param_specs, "Bind a parameter, e.g. --param γ=5 --param a=2")->allow_extra_args(false);
  app.add_flag("--pretty", pretty, "Human-readable summary instead of JSON");
  app.fallthrough();

  std::string map1, map2;
  std::vector<std::string> maps;
  int orbit_type = 0;
  bool enriched = false, dot = false;
  int table = -1;
  std::string factors;

  auto* c_classify = app.add_subcommand("classify", "Classify a map up to automorphisms on both sides");
  c_classify->add_option("map", map1, "Map or decomposition")->required();
  auto* c_compose = app.add_subcommand("compose", "Compose maps, outermost first");
  // The maps are read from the leftover arguments: a vector option would take "[...]" for an array.
  c_compose->allow_extras();
  app.allow_extras();
  auto* c_base = app.add_subcommand("base-points", "Base points with multiplicities and proximities");
  c_base->add_option("map", map1, "Map or decomposition")->required();
  auto* c_graph = app.add_subcommand("graph", "Weighted proximity graph of a map");
  c_graph->add_option("map", map1, "Map or decomposition")->required();
  c_graph->add_flag("--enriched", enriched, "Include the line through three simple base points");
  c_graph->add_flag("--dot", dot, "Graphviz output");
  auto* c_enum = app.add_subcommand("enumerate", "Enumerate the weighted (or enriched) cubic graphs");
  c_enum->add_flag("--enriched", enriched, "Enriched graphs");
  c_enum->add_flag("--dot", dot, "Graphviz output");
  auto* c_equiv = app.add_subcommand("equivalent", "Decide equivalence of two maps");
  c_equiv->add_option("first", map1, "Map")->required();
  c_equiv->add_option("second", map2, "Map")->required();
  auto* c_orbit = app.add_subcommand("orbit", "Parameter orbit of a type, e.g. orbit 31 2 3");
  c_orbit->allow_extras();
  c_orbit->add_option("type", orbit_type, "Type number")->required();
  auto* c_verify = app.add_subcommand("verify-tables", "Check the reference tables");
  c_verify->add_option("--table", table, "Only this table (0-4)")->check(CLI::Range(0, 4));
  auto* c_lengths = app.add_subcommand("lengths", "Heights, length bounds and facts");
  c_lengths->add_option("target", map1, "Map, decomposition or type number")->required();
  c_lengths->add_option("--factors", factors, "Decomposition to verify against the map");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (*c_compose || *c_orbit) {
    maps = app.remaining();
  } else if (!app.remaining().empty()) {
    std::string extra;
    for (const auto& a : app.remaining()) extra += " " + a;
    throw InputError("unexpected arguments:" + extra);
  }
  Bindings b = parse_bindings(param_specs);

  if (*c_classify) {
    ClassificationResult r = classify(read_map(map1, b));
    emit(result_to_json(r), pretty, classify_summary(r));
    return kOk;
  }
  if (*c_compose) {
    if (maps.empty()) throw InputError("compose expects at least one map");
    CremonaMap f;
    for (const auto& m : maps) f = compose(f, read_map(m, b));
    json j{{"map", f.to_string()}, {"degree", f.degree()}};
    emit(j, pretty, f.to_string() + "\n");
    return kOk;
  }
  if (*c_base) {
    BasePointTree t = resolve_base_points(read_map(map1, b));
    std::string s;
    for (const auto& e : t.entries) s += e.point.to_string() + " mult " + std::to_string(e.mult) + "\n";
    emit(tree_to_json(t), pretty, s);
    return kOk;
  }
  if (*c_graph) {
    BasePointTree t = resolve_base_points(read_map(map1, b));
    if (enriched) {
      EnrichedGraph g = enriched_graph_of(t);
      int row = t.degree == 3 ? enriched_row(g) : 0;
      if (dot) std::cout << graph_to_dot(g);
      else emit(graph_to_json(g, row), pretty, "enriched row " + std::to_string(row) + "\n");
    } else {
      ProximityGraph g = graph_of(t);
      int row = t.degree == 3 ? graph_row(g) : 0;
      if (dot) std::cout << graph_to_dot(g);
      else emit(graph_to_json(g, row), pretty, "row " + std::to_string(row) + "\n");
    }
    return kOk;
  }
  if (*c_enum) {
    json list = json::array();
    std::string s;
    if (enriched) {
      auto gs = enumerate_enriched();
      for (const auto& g : gs) {
        int row = enriched_row(g);
        if (dot) s += graph_to_dot(g, "G" + std::to_string(row));
        list.push_back(graph_to_json(g, row));
      }
    } else {
      auto gs = enumerate_cubic_graphs();
      for (const auto& g : gs) {
        int row = graph_row(g);
        if (dot) s += graph_to_dot(g, "G" + std::to_string(row));
        list.push_back(graph_to_json(g, row));
      }
    }
    if (dot) {
      std::cout << s;
      return kOk;
    }
    std::map<int, int> hist;
    for (const auto& g : list) ++hist[static_cast<int>(g["arcs"].size())];
    json h = json::object();
    for (const auto& [k, v] : hist) h[std::to_string(k)] = v;
    json j{{"count", list.size()}, {"arrow_histogram", h}, {"graphs", list}};
    emit(j, pretty, std::to_string(list.size()) + " graphs\n");
    return kOk;
  }
  if (*c_equiv) {
    Equivalence e = equivalent(read_map(map1, b), read_map(map2, b));
    std::string s = e.equivalent ? "equivalent\n" : "not equivalent\n";
    if (e.has_witness) s += "witness: " + e.post.to_string() + " o second o " + e.pre.to_string() + " = first\n";
    emit(equivalence_to_json(e), pretty, s);
    return e.equivalent ? kOk : kNegative;
  }
  if (*c_orbit) {
    int type = orbit_type;
    const TypeRecord& rec = type_record(type);
    std::vector<Scalar> params = read_params(maps, b);
    if (static_cast<int>(params.size()) != rec.param_count)
      throw InputError("type " + std::to_string(type) + " takes " + std::to_string(rec.param_count) + " parameter(s)");
    if (!params_in_domain(type, params)) throw InputError("parameters outside the domain of type " + std::to_string(type));
    auto orbit = param_orbit(type, params);
    json o = json::array();
    std::string s;
    for (const auto& p : orbit) {
      o.push_back(params_to_json(p));
      s += params_text(p) + "\n";
    }
    json j{{"type", type}, {"parameters", params_to_json(params)}, {"canonical", params_to_json(canonical_params(type, params))},
           {"size", orbit.size()}, {"orbit", o}};
    emit(j, pretty, s);
    return kOk;
  }
  if (*c_verify) {
    unsigned threads = default_threads();
    json tables = json::array();
    bool pass = true;
    std::string s;
    for (int t = 0; t <= 4; ++t) {
      if (table >= 0 && t != table) continue;
      auto rows = verify_table(t, threads);
      json r = table_report_to_json(t, rows);
      pass = pass && r["pass"].get<bool>();
      for (const auto& row : rows)
        s += "table " + std::to_string(t) + " row " + row.row + ": " + (row.pass ? "pass" : "FAIL " + row.detail.dump()) + "\n";
      tables.push_back(r);
    }
    emit(json{{"pass", pass}, {"tables", tables}}, pretty, s);
    return pass ? kOk : kNegative;
  }
  if (*c_lengths) {
    bool is_type = !map1.empty() && map1.find_first_not_of("0123456789") == std::string::npos;
    if (is_type) {
      LengthFacts f = length_facts(std::stoi(map1));
      json j = length_facts_to_json(f);
      j["heights"] = heights_to_json(heights(type_record(f.type).reference_map()));
      emit(j, pretty,
           "type " + map1 + ": q = " + std::to_string(f.q) + ", oq = " + std::to_string(f.oq) + ", lower bound " +
               std::to_string(f.lower_bound) + "\n");
      return kOk;
    }
    CremonaMap m = read_map(map1, b);
    json j;
    j["map"] = m.to_string();
    j["degree"] = m.degree();
    if (m.degree() >= 2) {
      BasePointTree t = resolve_base_points(m);
      j["heights"] = heights_to_json(heights(m));
      j["de_jonquieres"] = is_de_jonquieres(t);
      j["oq_lower_bound"] = oq_lower_bound(m);
    } else {
      j["oq_lower_bound"] = 0;
    }
    std::string s = "degree " + std::to_string(m.degree()) + ", oq lower bound " + j["oq_lower_bound"].dump() + "\n";
    int code = kOk;
    if (m.degree() == 3) {
      ClassificationResult r = classify(m);
      j["type"] = r.type;
      j["facts"] = length_facts_to_json(length_facts(r.type));
    }
    if (!factors.empty()) {
      DecompositionReport d = verify_decomposition(m, parse_decomposition(factors, b));
      j["decomposition"] = decomposition_to_json(d);
      s += std::string("decomposition ") + (d.equal ? "composes to the map" : "does not compose to the map") + ", " +
           std::to_string(d.quadratic) + " quadratic factors\n";
      if (!d.equal) code = kNegative;
    }
    emit(j, pretty, s);
    return code;
  }
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UnsupportedError& e) {
    std::cerr << json{{"error", "unsupported"}, {"message", e.what()}}.dump() << "\n";
    return kUnsupported;
  } catch (const NotBirationalError& e) {
    std::cerr << json{{"error", "not_birational"}, {"message", e.what()}}.dump() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << json{{"error", "parse"}, {"line", e.line()}, {"column", e.col()}, {"message", e.reason()}}.dump() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return kInternal;
  }
}
