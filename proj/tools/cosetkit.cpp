#include <chrono>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cosetkit/cosetkit.hpp"

using namespace cosetkit;

namespace {

struct Globals {
  bool json = false;
  unsigned threads = 1;
  unsigned cap = 8;
};

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::BudgetExceeded: return 3;
    case ErrorCode::NotTwoAcyclic:
    case ErrorCode::ConstructionFailed: return 2;
    default: return 1;
  }
}

/// Exit status implied by the verdicts of a finished report.
int verdict_code(const Json& report) {
  int code = 0;
  for (const auto& v : report["verdicts"]) {
    const auto s = v["status"].get<std::string>();
    if (s == "refuted") return 2;
    if (s == "budget-exceeded") code = 3;
  }
  return code;
}

Vertex parse_vertex(const Group& G, const std::string& text) {
  if (text == "1" && !G.label_index("1")) return G.identity();
  return G.eval_word(text);
}

GenMask parse_labels(const Group& G, const std::string& text) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else if (c != '{' && c != '}' && c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) names.push_back(cur);
  return G.parse_mask(names);
}

void print_flat(const Json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      print_flat(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    return;
  }
  if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) std::cout << prefix << "[" << i << "]: " << j[i].dump() << "\n";
    return;
  }
  std::cout << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

void emit(const Globals& g, Json& report, double ms) {
  if (g.json) {
    report["timing_ms"] = std::round(ms * 1000.0) / 1000.0;
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::cout << report["command"].get<std::string>() << "  input " << report["input_digest"].get<std::string>() << "\n";
  print_flat(report["results"], "");
  for (const auto& v : report["verdicts"]) {
    std::cout << "[" << v["status"].get<std::string>() << "] " << v["check"].get<std::string>();
    if (v.contains("witness")) std::cout << "  " << v["witness"].get<std::string>();
    std::cout << "\n";
  }
}

SearchOptions search(const Globals& g) {
  SearchOptions o;
  o.threads = g.threads;
  return o;
}

Json analyze(const Globals& gl, const std::string& file, unsigned max_len, const std::vector<std::string>& args) {
  auto in = load_group(file);
  Json r = make_report("analyze", args, in.digest);
  CayleyGraph g(build_group(in.spec));
  const auto& G = g.group();
  auto& res = r["results"];
  res["name"] = G.name();
  res["order"] = g.size();
  res["generators"] = G.labels();
  res["girth"] = distance_json(girth(g));

  auto two = is_2_acyclic(g);
  res["two_acyclic"] = two.acyclic;
  if (two.witness) {
    auto c = two.witness->as_cycle();
    res["two_cycle"] = cycle_json(G, c);
    add_verdict(r, "two-cycle-valid", validate_cycle(g, c) ? Status::verified : Status::refuted, format_cycle(G, c));
  }
  const auto opts = search(gl);
  auto cycle = find_coset_cycle(g, std::max(2u, max_len), opts);
  if (cycle) {
    res["shortest_cycle"] = cycle_json(G, *cycle);
    std::string why;
    add_verdict(r, "cycle-valid", validate_cycle(g, *cycle, &why) ? Status::verified : Status::refuted, why);
  } else {
    res["shortest_cycle"] = nullptr;
  }
  const bool agree = two.acyclic == !(cycle && cycle->length() == 2);
  add_verdict(r, "cutchar-agreement", agree ? Status::verified : Status::refuted);
  const unsigned level = cycle ? static_cast<unsigned>(cycle->length()) - 1 : std::max(2u, max_len);
  res["acyclicity_level"] = two.acyclic ? level : 1u;
  res["level_cap"] = std::max(2u, max_len);

  if (two.acyclic) {
    const unsigned dual_cap = std::min(6u, std::max(3u, max_len));
    Budget budget(opts.budget);
    DualHypergraph d(g, &budget);
    const unsigned dual = dual_acyclicity_level(d, dual_cap, &budget);
    const unsigned coset = std::min(level, dual_cap);
    res["dual"] = Json{{"vertices", d.vertex_count()}, {"hyperedges", d.hypergraph().edges().size()},
                       {"level", dual}, {"level_cap", dual_cap}};
    add_verdict(r, "dual-transfer", coset == dual ? Status::verified : Status::refuted,
                "coset level " + std::to_string(coset) + ", dual level " + std::to_string(dual));
  } else {
    add_verdict(r, "dual-transfer", Status::unverified_guard, "graph is not 2-acyclic");
  }
  return r;
}

Json distance_cmd(const Globals& gl, const std::string& file, const std::string& from, const std::string& to,
                  const std::optional<std::string>& gamma_text, std::string constraint,
                  const std::vector<std::string>& args) {
  auto in = load_group(file);
  Json r = make_report("distance", args, in.digest);
  CayleyGraph g(build_group(in.spec));
  const auto& G = g.group();
  const Vertex v = parse_vertex(G, from), u = parse_vertex(G, to);
  if (v == u) fail(ErrorCode::Precondition, "--from and --to denote the same vertex");
  require_two_acyclic(g, "distance");
  std::optional<GenMask> gamma;
  if (gamma_text) gamma = parse_labels(G, *gamma_text);
  if (constraint.empty()) constraint = gamma ? "non-t" : "nontrivial";

  PathConstraint c;
  if (constraint == "nontrivial") {
    c = PathConstraint::non_trivial();
  } else if (constraint == "inner") {
    c = PathConstraint::inner();
  } else if (constraint == "non-t") {
    if (!gamma) fail(ErrorCode::Precondition, "--constraint non-t needs --gamma");
    c = PathConstraint::non_t(*gamma);
  } else if (constraint == "any") {
    c = PathConstraint::any();
  } else {
    fail(ErrorCode::Precondition, "unknown constraint '" + constraint + "'");
  }
  const auto opts = search(gl);
  const GenMask gen = gen_set(g, v, u);
  auto& res = r["results"];
  res["from"] = vertex_json(G, v);
  res["to"] = vertex_json(G, u);
  res["gen"] = mask_json(G, gen);
  res["constraint"] = constraint;
  if (gamma) res["gamma"] = mask_json(G, *gamma);
  auto p = find_min_path(g, v, u, c, static_cast<unsigned>(g.size()), opts);
  res["distance"] = distance_json(p ? std::optional<unsigned>(static_cast<unsigned>(p->length())) : std::nullopt);
  res["path"] = p ? path_json(G, *p) : Json(nullptr);

  // The dual side is measured with t = ρ(v, γ); γ = gen(v,u) gives d(v,u).
  const GenMask cut = gamma.value_or(gen);
  DualHypergraph d(g);
  auto two = check_two_distances(d, v, u, cut, opts);
  res["crosscheck"] = Json{{"gamma", mask_json(G, cut)},
                           {"canonical", two.canonical},
                           {"coset", distance_json(two.coset_side)},
                           {"dual", distance_json(two.dual_side)}};
  add_verdict(r, "two-distances", two.status,
              two.status == Status::refuted ? "offset between coset and dual distance is not 1" : "");
  if (p) {
    auto cls = validate_path(g, *p, gamma, std::nullopt);
    const bool ok = cls.valid && (c.kind != PathKind::non_trivial || cls.non_trivial) &&
                    (c.kind != PathKind::inner || cls.inner) && (c.kind != PathKind::non_t || cls.non_t.value_or(false));
    add_verdict(r, "path-valid", ok ? Status::verified : Status::refuted, cls.reason);
  }
  return r;
}

Json dual_cmd(const Globals& gl, const std::string& file, std::optional<unsigned> check, const std::string& emit_path,
              const std::vector<std::string>& args) {
  auto in = load_group(file);
  Json r = make_report("dual", args, in.digest);
  CayleyGraph g(build_group(in.spec));
  Budget budget(search(gl).budget);
  DualHypergraph d(g, &budget);
  auto& res = r["results"];
  res["vertices"] = d.vertex_count();
  res["hyperedges"] = d.hypergraph().edges().size();
  Json colors = Json::object();
  for (std::size_t b = 0; b < g.mask_count(); ++b) {
    const GenMask m(static_cast<std::uint32_t>(b));
    colors[format_mask(g.group(), m)] = g.partition(m).class_count();
  }
  res["color_classes"] = std::move(colors);
  if (check) {
    if (*check < 3) fail(ErrorCode::Precondition, "--check-acyclic needs N ≥ 3");
    const bool dual = is_n_acyclic(d.hypergraph(), *check, &budget);
    res["dual_n_acyclic"] = dual;
    res["n"] = *check;
    if (two_acyclic(g)) {
      const bool coset = is_n_acyclic(g, *check, search(gl));
      res["coset_n_acyclic"] = coset;
      add_verdict(r, "dual-transfer", coset == dual ? Status::verified : Status::refuted);
    } else {
      add_verdict(r, "dual-transfer", Status::unverified_guard, "graph is not 2-acyclic");
    }
  }
  if (!emit_path.empty()) {
    write_file(emit_path, dual_json(d).dump(2) + "\n");
    res["written"] = emit_path;
  }
  return r;
}

Json closure_cmd(const Globals& gl, const std::string& file, const std::vector<std::string>& cosets, unsigned m,
                 const std::vector<std::string>& args) {
  auto in = load_group(file);
  Json r = make_report("closure", args, in.digest);
  CayleyGraph g(build_group(in.spec));
  const auto& G = g.group();
  std::vector<Coset> P;
  for (const auto& text : cosets) {
    auto colon = text.find(':');
    if (colon == std::string::npos) fail(ErrorCode::Precondition, "coset '" + text + "' must read WORD:LABELS");
    P.push_back(coset(g, parse_vertex(G, text.substr(0, colon)), parse_labels(G, text.substr(colon + 1))));
  }
  DualHypergraph d(g);
  auto rep = convex_closure_cayley(d, P, m, gl.cap, search(gl));
  auto list = [&](const std::vector<Coset>& cs) {
    Json j = Json::array();
    for (const auto& c : cs) j.push_back(format_coset(G, c));
    return j;
  };
  auto& res = r["results"];
  res["m"] = m;
  res["closure"] = list(rep.closure);
  res["closure_size"] = rep.closure.size();
  res["dual_closure"] = list(rep.dual_closure);
  res["dual_closure_size"] = rep.dual_closure.size();
  res["contained"] = rep.contained;
  add_verdict(r, "closure-containment", rep.status);
  return r;
}

Json cover_cmd(const std::string& gfile, const std::string& hfile, bool verify, const std::vector<std::string>& args) {
  auto gin = load_group(gfile), hin = load_group(hfile);
  Json r = make_report("cover", args, fnv1a64(gin.digest + hin.digest));
  const Group G = build_group(gin.spec), H = build_group(hin.spec);
  auto& res = r["results"];
  res["source"] = Json{{"name", G.name()}, {"order", G.order()}};
  res["target"] = Json{{"name", H.name()}, {"order", H.order()}};
  auto c = check_compatible(G, H);
  res["compatible"] = c.compatible;
  if (!c.compatible) {
    res["witness"] = *c.witness;
    add_verdict(r, "compatible", Status::refuted, *c.witness);
    return r;
  }
  add_verdict(r, "compatible", Status::verified);
  auto m = covering_map(G, H);
  res["fibre_sizes"] = m.fibre_sizes();
  if (verify) {
    auto v = verify_covering(m);
    res["covering"] = v.covering;
    if (v.witness) res["offending_vertex"] = vertex_json(G, *v.witness);
    if (!v.covering) res["reason"] = v.reason;
    add_verdict(r, "covering", v.covering ? Status::verified : Status::refuted, v.reason);
  }
  return r;
}

Json verify_cmd(const Globals& gl, const std::string& file, const std::string& suite,
                const std::vector<std::string>& args) {
  std::vector<std::pair<std::string, GroupSpec>> instances;
  std::string digest;
  if (file == "catalog") {
    for (const auto& e : catalog::entries()) {
      auto spec = catalog::make_entry(e.id);
      if (e.order <= 48 && spec.generators.size() <= 4) instances.emplace_back(e.id, std::move(spec));
    }
    digest = fnv1a64("catalog");
  } else {
    auto in = load_group(file);
    instances.emplace_back(in.spec.name, in.spec);
    digest = in.digest;
  }
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(suite);
  }
  Json r = make_report("verify", args, digest);
  VerifyOptions o;
  o.cap = gl.cap;
  o.search = search(gl);
  Json rows = Json::array();
  for (const auto& [name, spec] : instances) {
    CayleyGraph g(build_group(spec));
    for (const auto& s : suites) {
      auto rep = run_suite(s, g, o);
      Json row{{"instance", name}, {"suite", s}, {"status", std::string(to_string(rep.status))}, {"checks", rep.checks}};
      for (const auto& [k, v] : rep.notes) row[k] = v;
      rows.push_back(std::move(row));
      add_verdict(r, s + "@" + name, rep.status, rep.witness);
    }
  }
  r["results"]["runs"] = std::move(rows);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coset acyclicity toolkit for Cayley graphs of involutive generator sets"};
  app.require_subcommand(1);
  Globals gl;
  app.add_flag("--json", gl.json, "Emit a JSON report");
  app.add_option("--threads", gl.threads, "Worker threads for cycle searches")->check(CLI::Range(1u, 256u));
  app.add_option("--cap", gl.cap, "Cap for acyclicity level searches")->check(CLI::Range(2u, 64u));

  std::string file, file2, from, to, constraint, emit_path, suite, family, params, out;
  std::optional<std::string> gamma;
  std::optional<unsigned> check;
  unsigned max_len = 8, m = 2;
  bool verify = false;
  std::vector<std::string> cosets;

  auto* a = app.add_subcommand("analyze", "Girth, 2-acyclicity, shortest coset cycle and dual comparison");
  a->add_option("group", file, "Group JSON file or catalog:<entry>")->required();
  a->add_option("--max-cycle-len", max_len, "Longest coset cycle searched for");

  auto* dist = app.add_subcommand("distance", "Coset path distance between two vertices");
  dist->add_option("group", file)->required();
  dist->add_option("--from", from, "Start vertex as a word; empty is the identity")->required();
  dist->add_option("--to", to, "End vertex as a word")->required();
  dist->add_option("--gamma", gamma, "Generator labels of the cut, comma separated");
  dist->add_option("--constraint", constraint, "nontrivial, inner, non-t or any");

  auto* du = app.add_subcommand("dual", "Dual hypergraph of the Cayley graph");
  du->add_option("group", file)->required();
  du->add_option("--check-acyclic", check, "Check n-acyclicity of the dual for this n");
  du->add_option("--emit-hypergraph", emit_path, "Write the dual hypergraph JSON here");

  auto* cl = app.add_subcommand("closure", "Convex closure of a set of cosets");
  cl->add_option("group", file)->required();
  cl->add_option("--coset", cosets, "Coset as WORD:LABELS, repeatable")->required();
  cl->add_option("-m", m, "Path length bound")->check(CLI::Range(2u, 16u));

  auto* co = app.add_subcommand("cover", "Compatibility and covering check G -> H");
  co->add_option("G", file)->required();
  co->add_option("H", file2)->required();
  co->add_flag("--verify", verify, "Check the 1-neighbourhood isomorphism");

  auto* cat = app.add_subcommand("catalog", "Built-in groups");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "List catalog entries");
  auto* em = cat->add_subcommand("emit", "Write a catalog group spec");
  em->add_option("name", family)->required();
  em->add_option("params", params);
  em->add_option("-o", out, "Output file; stdout when absent");

  auto* ver = app.add_subcommand("verify", "Run a property sweep");
  ver->add_option("group", file, "Group JSON file, catalog:<entry>, or catalog for all small entries")->required();
  ver->add_option("suite", suite, "Suite name or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Json report;
    if (*a) {
      report = analyze(gl, file, max_len, args);
    } else if (*dist) {
      report = distance_cmd(gl, file, from, to, gamma, constraint, args);
    } else if (*du) {
      report = dual_cmd(gl, file, check, emit_path, args);
    } else if (*cl) {
      report = closure_cmd(gl, file, cosets, m, args);
    } else if (*co) {
      report = cover_cmd(file, file2, verify, args);
    } else if (*ver) {
      report = verify_cmd(gl, file, suite, args);
    } else if (*list) {
      report = make_report("catalog list", args, fnv1a64("catalog"));
      Json rows = Json::array();
      for (const auto& e : catalog::entries())
        rows.push_back(Json{{"entry", e.id},
                            {"order", e.order},
                            {"girth", distance_json(e.girth)},
                            {"level", e.level ? Json(*e.level) : Json(nullptr)},
                            {"two_acyclic", e.two_acyclic}});
      report["results"]["entries"] = std::move(rows);
    } else if (*em) {
      const auto spec = catalog::make(family, params);
      const auto text = spec_to_json(spec).dump(2) + "\n";
      if (out.empty()) {
        std::cout << text;
      } else {
        write_file(out, text);
      }
      return 0;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit(gl, report, ms);
    return verdict_code(report);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
}
