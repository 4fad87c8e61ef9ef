#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cosetkit/catalog.hpp"
#include "cosetkit/covering.hpp"
#include "cosetkit/duality.hpp"
#include "cosetkit/format.hpp"

namespace cosetkit {

using Json = nlohmann::ordered_json;

inline GroupSpec spec_from_json(const Json& j) {
  GroupSpec s;
  try {
    if (!j.is_object()) fail(ErrorCode::MalformedSpec, "group spec must be a JSON object");
    s.name = j.value("name", std::string("group"));
    if (!j.contains("generators") || !j["generators"].is_array())
      fail(ErrorCode::MalformedSpec, "missing \"generators\" array");
    const bool table = j.contains("table");
    if (table == j.contains("degree")) fail(ErrorCode::MalformedSpec, "give exactly one of \"degree\" and \"table\"");
    if (table) {
      s.table = j["table"].get<std::vector<std::vector<std::uint32_t>>>();
      if (s.table.empty()) fail(ErrorCode::MalformedSpec, "empty multiplication table");
    } else {
      s.degree = j["degree"].get<std::uint32_t>();
    }
    for (const auto& gj : j["generators"]) {
      GeneratorSpec g;
      g.label = gj.at("label").get<std::string>();
      if (table) {
        g.element = gj.at("element").get<std::uint32_t>();
      } else {
        g.perm = gj.at("perm").get<std::vector<std::uint32_t>>();
      }
      s.generators.push_back(std::move(g));
    }
  } catch (const Json::exception& e) {
    fail(ErrorCode::MalformedSpec, e.what());
  }
  return s;
}

inline Json spec_to_json(const GroupSpec& s) {
  Json j;
  j["name"] = s.name;
  if (s.is_table()) {
    j["table"] = s.table;
  } else {
    j["degree"] = s.degree;
  }
  Json gens = Json::array();
  for (const auto& g : s.generators) {
    Json gj;
    gj["label"] = g.label;
    if (s.is_table()) {
      gj["element"] = *g.element;
    } else {
      gj["perm"] = g.perm;
    }
    gens.push_back(std::move(gj));
  }
  j["generators"] = std::move(gens);
  return j;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) fail(ErrorCode::Io, "cannot write '" + path + "'");
}

inline Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::MalformedSpec, origin + ": " + e.what());
  }
}

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// A group read from disk, or from "catalog:<entry>" such as
/// "catalog:dihedral_reflections(4)". The digest covers the bytes read, or the
/// emitted spec for catalog input.
struct LoadedGroup {
  GroupSpec spec;
  std::string digest;
};

inline LoadedGroup load_group(const std::string& source) {
  LoadedGroup out;
  if (source.rfind("catalog:", 0) == 0) {
    out.spec = catalog::make_entry(source.substr(8));
    out.digest = fnv1a64(spec_to_json(out.spec).dump());
  } else {
    const auto text = read_file(source);
    out.spec = spec_from_json(parse_json(text, source));
    out.digest = fnv1a64(text);
  }
  return out;
}

inline Json mask_json(const Group& G, GenMask m) { return G.mask_labels(m); }

/// Vertex as its canonical word; permutation groups add cycle notation.
inline Json vertex_json(const Group& G, Vertex v) {
  Json j;
  j["index"] = v;
  j["word"] = G.word_of(v);
  if (auto c = G.cycle_notation(v)) j["perm"] = *c;
  return j;
}

inline Json coset_json(const CayleyGraph& g, Coset c) {
  Json j;
  j["mask"] = mask_json(g.group(), c.mask);
  auto span = members(g, c);
  j["members"] = std::vector<Vertex>(span.begin(), span.end());
  return j;
}

/// Alternating word / label-list array.
inline Json path_json(const Group& G, const CosetPath& p) {
  Json j = Json::array();
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i > 0) j.push_back(mask_json(G, p.labels[i - 1]));
    j.push_back(G.word_of(p.vertices[i]));
  }
  return j;
}

inline Json cycle_json(const Group& G, const CosetCycle& c) {
  Json j = Json::array();
  for (std::size_t i = 0; i < c.length(); ++i) {
    Json link = Json::array();
    link.push_back(vertex_json(G, c.vertices[i]));
    link.push_back(mask_json(G, c.labels[i]));
    j.push_back(std::move(link));
  }
  return j;
}

inline Json distance_json(std::optional<unsigned> d) { return d ? Json(*d) : Json("inf"); }

inline Json hypergraph_json(const Hypergraph& h) {
  Json j;
  const auto& names = h.names();
  j["vertices"] = names;
  Json edges = Json::array();
  for (const auto& e : h.edges()) {
    Json ej = Json::array();
    for (Node a : e) ej.push_back(names[a]);
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);
  return j;
}

/// The dual hypergraph with the colour of every vertex, aligned with
/// "vertices".
inline Json dual_json(const DualHypergraph& d) {
  Json j = hypergraph_json(d.hypergraph());
  Json colors = Json::array();
  for (Node n = 0; n < d.vertex_count(); ++n) colors.push_back(mask_json(d.cayley().group(), d.color(n)));
  j["colors"] = std::move(colors);
  return j;
}

inline Hypergraph hypergraph_from_json(const Json& j) {
  try {
    std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
    std::map<std::string, Node> index;
    for (Node a = 0; a < names.size(); ++a)
      if (!index.emplace(names[a], a).second) fail(ErrorCode::MalformedSpec, "duplicate vertex '" + names[a] + "'");
    std::vector<NodeSet> edges;
    for (const auto& ej : j.at("edges")) {
      NodeSet e;
      for (const auto& n : ej) {
        auto it = index.find(n.get<std::string>());
        if (it == index.end()) fail(ErrorCode::MalformedSpec, "edge mentions unknown vertex '" + n.get<std::string>() + "'");
        e.push_back(it->second);
      }
      edges.push_back(std::move(e));
    }
    const std::size_t n = names.size();
    return Hypergraph(n, std::move(edges), std::move(names));
  } catch (const Json::exception& e) {
    fail(ErrorCode::MalformedSpec, e.what());
  }
}

inline Json decomposition_json(const Hypergraph& h, const TreeDecomposition& td) {
  Json j;
  Json tree = Json::array();
  for (auto [a, b] : td.tree) tree.push_back(Json::array({a, b}));
  j["tree"] = std::move(tree);
  Json bags = Json::array();
  for (const auto& e : h.edges()) {
    Json bag = Json::array();
    for (Node a : e) bag.push_back(h.names()[a]);
    bags.push_back(std::move(bag));
  }
  j["bags"] = std::move(bags);
  return j;
}

/// Versioned report shell. "timing_ms" is the only field that may differ
/// between runs on the same input.
inline Json make_report(const std::string& command, const std::vector<std::string>& args, const std::string& digest) {
  Json r;
  r["schema"] = "cosetkit-report/1";
  r["command"] = command;
  r["args"] = args;
  r["input_digest"] = digest;
  r["results"] = Json::object();
  r["verdicts"] = Json::array();
  return r;
}

inline void add_verdict(Json& report, const std::string& name, Status status, const std::string& witness = {}) {
  Json v;
  v["check"] = name;
  v["status"] = std::string(to_string(status));
  if (!witness.empty()) v["witness"] = witness;
  report["verdicts"].push_back(std::move(v));
}

}  // namespace cosetkit
