// Command-line driver: almost-positive roots and tau orbits, the
// universal-coefficients seed, mutation words, finite-type exchange-graph
// closure, orbit quivers of configuration categories, and the verification
// pipeline. Exit 0 on success/PASS, 1 on FAIL, 2 on usage errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cluscat/categorify.hpp"

using json = nlohmann::ordered_json;
using namespace cluscat;

namespace {

struct Options {
  std::string type = "A";
  int rank = 0;
  std::string orientation = "bipartite-default";
  std::string config = "full";
  int f_power = 1;
  std::string out;
  std::string format = "text";
  long budget = 100000;
  bool allow_large = false;
  std::string word;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DynkinDiagram parse_diagram(const Options& o) {
  const auto fam = family_from_letter(o.type.size() == 1 ? o.type[0] : '?');
  if (!fam) throw Usage("unknown type '" + o.type + "' (expected A, D, or E)");
  try {
    return DynkinDiagram::make(*fam, o.rank);
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  }
}

DynkinQuiver parse_quiver(const Options& o) {
  DynkinDiagram d = parse_diagram(o);
  if (o.orientation == "bipartite-default") return DynkinQuiver::bipartite_default(std::move(d));
  std::vector<std::pair<int, int>> arrows;
  std::stringstream ss(o.orientation);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int a = 0, b = 0;
    char gt = 0;
    std::stringstream t(tok);
    if (!(t >> a >> gt >> b) || gt != '>' || !(t >> std::ws).eof())
      throw Usage("bad orientation token '" + tok + "' (expected i>j)");
    arrows.emplace_back(a - 1, b - 1);
  }
  auto q = DynkinQuiver::from_arrow_list(std::move(d), arrows);
  if (!q) throw Usage("orientation does not direct each diagram edge exactly once");
  return *q;
}

Configuration parse_config(const Options& o) {
  if (o.config == "full") return Configuration::all();
  std::vector<RQVertex> reps;
  std::stringstream ss(o.config);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    int i = 0, p = 0;
    char l = 0, c = 0, r = 0;
    std::stringstream t(tok);
    if (!(t >> l >> i >> c >> p >> r) || l != '(' || c != ',' || r != ')' ||
        !(t >> std::ws).eof())
      throw Usage("bad configuration token '" + tok + "' (expected (i,p))");
    reps.push_back({i - 1, p, false});
  }
  if (reps.empty()) throw Usage("empty configuration");
  return Configuration::orbits(std::move(reps));
}

std::vector<int> parse_word(const std::string& word, int n) {
  std::vector<int> out;
  std::stringstream ss(word);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int k = 0;
    std::stringstream t(tok);
    if (!(t >> k) || !(t >> std::ws).eof() || k < 1 || k > n)
      throw Usage("bad mutation word entry '" + tok + "' (expected 1.." + std::to_string(n) +
                  ")");
    out.push_back(k - 1);
  }
  if (out.empty()) throw Usage("empty mutation word");
  return out;
}

void require_bipartite(const DynkinQuiver& q, const char* what) {
  if (!q.is_bipartite()) throw Usage(std::string(what) + " needs a bipartite orientation");
}

json diagram_json(const Options& o, const DynkinQuiver& q) {
  json j;
  j["type"] = o.type;
  j["rank"] = o.rank;
  json arr = json::array();
  for (const auto& [s, d] : q.arrows) arr.push_back({s + 1, d + 1});
  j["orientation"] = arr;
  return j;
}

// stdout gets the selected format; --out DIR gets every rendering
struct Rendered {
  std::string text;
  json js;
  std::vector<std::pair<std::string, std::string>> dots;  // filename -> content
};

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
}

int emit(const Options& o, const std::string& stem, const Rendered& r) {
  const std::string js = r.js.dump(2) + "\n";
  if (o.format == "text") {
    std::cout << r.text;
  } else if (o.format == "json") {
    std::cout << js;
  } else {
    if (r.dots.empty()) throw Usage("this command has no dot rendering");
    std::cout << r.dots.front().second;
  }
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    write_file(std::filesystem::path(o.out) / (stem + ".txt"), r.text);
    write_file(std::filesystem::path(o.out) / (stem + ".json"), js);
    for (const auto& [name, content] : r.dots)
      write_file(std::filesystem::path(o.out) / name, content);
  }
  return 0;
}

json seed_json(const Options& o, const RootSystem& rs, const DynkinQuiver& q, const Seed& s) {
  std::vector<std::string> xn, pn = universal_frozen_names(rs);
  for (int i = 0; i < s.n(); ++i) xn.push_back("x" + std::to_string(i + 1));
  json j;
  j["schema"] = "cluscat/seed/1";
  j.update(diagram_json(o, q));
  j["n"] = s.n();
  j["m"] = s.m();
  j["frozen"] = pn;
  json b = json::array();
  for (int i = 0; i < s.ice.total(); ++i) {
    json row = json::array();
    for (int k = 0; k < s.ice.total(); ++k) row.push_back(s.ice.b(i, k));
    b.push_back(row);
  }
  j["b"] = b;
  json cl = json::array(), cr = json::array(), dn = json::array();
  for (const Laurent& v : s.cluster) {
    cl.push_back(v.to_string(xn, pn));
    cr.push_back(variable_name(rs, v));
    dn.push_back(v.denominator_x());
  }
  j["cluster"] = cl;
  j["cluster_roots"] = cr;
  j["denominators"] = dn;
  j["y"] = s.y;
  return j;
}

std::vector<std::string> seed_names(const RootSystem& rs, const Seed& s) {
  std::vector<std::string> names;
  for (int i = 0; i < s.n(); ++i) names.push_back("x" + std::to_string(i + 1));
  for (const std::string& nm : universal_frozen_names(rs)) names.push_back(nm);
  return names;
}

int cmd_roots(const Options& o) {
  const DynkinQuiver q = parse_quiver(o);
  require_bipartite(q, "the tau involutions");
  const RootSystem rs(q.diagram);
  const auto& ap = rs.almost_positive();
  const auto orbits = tau_orbits(rs, q);

  std::ostringstream text;
  text << "almost positive roots of " << o.type << o.rank << ": " << ap.size() << "\n";
  for (const IVec& a : ap) text << "  " << rs.root_string(a) << "\n";
  text << "tau_plus / tau_minus / tau:\n";
  for (const IVec& a : ap)
    text << "  " << rs.root_string(a) << " -> " << rs.root_string(tau_eps(rs, q, +1, a))
         << " / " << rs.root_string(tau_eps(rs, q, -1, a)) << " / "
         << rs.root_string(tau_root(rs, q, a)) << "\n";
  text << "tau orbits: " << orbits.size() << "\n";
  for (const auto& orb : orbits) {
    text << "  size " << orb.size() << ":";
    for (const IVec& a : orb) text << " " << rs.root_string(a);
    text << "\n";
  }

  json j;
  j["schema"] = "cluscat/roots/1";
  j.update(diagram_json(o, q));
  json roots = json::array(), tp = json::array(), tm = json::array(), tt = json::array();
  for (const IVec& a : ap) {
    roots.push_back(rs.root_string(a));
    tp.push_back(rs.root_string(tau_eps(rs, q, +1, a)));
    tm.push_back(rs.root_string(tau_eps(rs, q, -1, a)));
    tt.push_back(rs.root_string(tau_root(rs, q, a)));
  }
  j["roots"] = roots;
  j["tau_plus"] = tp;
  j["tau_minus"] = tm;
  j["tau"] = tt;
  json jo = json::array();
  for (const auto& orb : orbits) {
    json one = json::array();
    for (const IVec& a : orb) one.push_back(rs.root_string(a));
    jo.push_back(one);
  }
  j["tau_orbits"] = jo;

  std::ostringstream dot;
  dot << "digraph tau_orbits {\n  rankdir=LR;\n";
  for (const auto& orb : orbits)
    for (size_t k = 0; k < orb.size(); ++k)
      dot << "  \"" << rs.root_string(orb[k]) << "\" -> \""
          << rs.root_string(orb[(k + 1) % orb.size()]) << "\";\n";
  dot << "}\n";

  return emit(o, "roots", {text.str(), std::move(j), {{"roots.dot", dot.str()}}});
}

int cmd_universal_seed(const Options& o) {
  const DynkinQuiver q = parse_quiver(o);
  require_bipartite(q, "the universal seed");
  const RootSystem rs(q.diagram);
  const Seed s = universal_seed(rs, q);
  const std::vector<std::string> names = seed_names(rs, s);

  std::ostringstream text;
  text << "universal seed of " << o.type << o.rank << ": " << s.n() << " mutable + " << s.m()
       << " frozen\n";
  for (const auto& [src, dst, mult] : s.ice.arrows()) {
    text << "  " << names[src] << " -> " << names[dst];
    if (mult > 1) text << " x" << mult;
    text << "\n";
  }
  return emit(o, "seed",
              {text.str(), seed_json(o, rs, q, s), {{"seed.dot", s.ice.to_dot(names)}}});
}

int cmd_mutate(const Options& o) {
  const DynkinQuiver q = parse_quiver(o);
  require_bipartite(q, "the universal seed");
  const RootSystem rs(q.diagram);
  Seed s = universal_seed(rs, q);
  const std::vector<int> word = parse_word(o.word, s.n());
  const auto namer = [&rs](const Laurent& v) { return variable_name(rs, v); };
  const std::vector<std::string> frozen = universal_frozen_names(rs);

  std::ostringstream text;
  json rels = json::array();
  for (int k : word) {
    ExchangeRelation rel;
    s = mutate_seed(s, k, &rel);
    const std::string line = relation_string(rel, namer, frozen);
    text << "mutate at " << (k + 1) << ": " << line << "\n";
    rels.push_back(line);
  }
  text << "final cluster:";
  for (const Laurent& v : s.cluster) text << " " << variable_name(rs, v);
  text << "\n";

  json j;
  j["schema"] = "cluscat/mutate/1";
  json w = json::array();
  for (int k : word) w.push_back(k + 1);
  j["word"] = w;
  j["relations"] = rels;
  j["seed"] = seed_json(o, rs, q, s);
  return emit(o, "mutate",
              {text.str(), std::move(j), {{"mutate.dot", s.ice.to_dot(seed_names(rs, s))}}});
}

int cmd_exchange_graph(const Options& o) {
  const DynkinQuiver q = parse_quiver(o);
  require_bipartite(q, "the universal seed");
  const RootSystem rs(q.diagram);
  const Seed start = universal_seed(rs, q);
  const ExchangeGraph eg = exchange_graph(start, size_t(o.budget));
  const auto namer = [&rs](const Laurent& v) { return variable_name(rs, v); };
  const std::vector<std::string> frozen = universal_frozen_names(rs);

  // every variable must be Laurent in the initial cluster with a root label
  for (const Laurent& v : eg.variables)
    if (!variable_root_label(rs, v))
      throw std::runtime_error("cluster variable without an almost-positive root label");

  std::ostringstream text;
  text << "exchange graph of " << o.type << o.rank << " (universal coefficients)\n";
  text << "seeds: " << eg.seeds.size() << "\n";
  text << "edges: " << eg.edges.size() << "\n";
  text << "cluster variables: " << eg.variables.size()
       << " (almost positive roots: " << rs.almost_positive().size() << ")\n";
  text << "variables:";
  for (const Laurent& v : eg.variables) text << " " << variable_name(rs, v);
  text << "\nrelations:\n";
  for (const ExchangeRelation& rel : eg.relations)
    text << "  " << relation_string(rel, namer, frozen) << "\n";

  json j;
  j["schema"] = "cluscat/exchange-graph/1";
  j.update(diagram_json(o, q));
  j["seeds"] = eg.seeds.size();
  json edges = json::array();
  for (const auto& [from, k, to] : eg.edges) edges.push_back({from, k + 1, to});
  j["edges"] = edges;
  json vars = json::array();
  for (const Laurent& v : eg.variables) {
    json one;
    one["name"] = variable_name(rs, v);
    one["denominator"] = v.denominator_x();
    vars.push_back(one);
  }
  j["variables"] = vars;
  json rels = json::array();
  for (const ExchangeRelation& rel : eg.relations)
    rels.push_back(relation_string(rel, namer, frozen));
  j["relations"] = rels;

  std::ostringstream dot;
  dot << "graph exchange_graph {\n";
  for (size_t i = 0; i < eg.seeds.size(); ++i) {
    std::vector<std::string> names;
    for (const Laurent& v : eg.seeds[i].cluster) names.push_back(variable_name(rs, v));
    std::sort(names.begin(), names.end());
    dot << "  s" << i << " [label=\"";
    for (size_t k = 0; k < names.size(); ++k) dot << (k ? " " : "") << names[k];
    dot << "\"];\n";
  }
  for (const auto& [from, k, to] : eg.edges)
    dot << "  s" << from << " -- s" << to << " [label=\"" << (k + 1) << "\"];\n";
  dot << "}\n";

  return emit(o, "exchange_graph", {text.str(), std::move(j), {{"exchange_graph.dot", dot.str()}}});
}

int cmd_ar_quiver(const Options& o) {
  const DynkinQuiver q = parse_quiver(o);
  ConfigCategory cc(q, parse_config(o), o.f_power);
  if (!cc.admissibility().admissible) {
    const RQVertex v = *cc.admissibility().failing;
    throw Usage("configuration is not admissible: no nonzero morphism from (" +
                std::to_string(v.i + 1) + "," + std::to_string(v.p) + ") into it");
  }
  const OrbitQuiver& oq = cc.orbit_quiver();

  std::ostringstream text;
  text << "orbit quiver of " << o.type << o.rank << ", F = Sigma";
  if (o.f_power > 1) text << "^" << o.f_power;
  text << " tau^-1, configuration " << o.config << "\n";
  text << "vertices: " << oq.vertices.size() << " (" << oq.non_frozen << " non-frozen)\n";
  for (const OrbitVertex& v : oq.vertices)
    text << "  " << v.label << (v.frozen ? " [frozen]" : "") << " rep=(" << (v.rep.i + 1)
         << "," << v.rep.p << ")\n";
  text << "arrows:\n";
  for (const OrbitArrow& a : oq.arrows) {
    text << "  " << oq.vertices[a.src].label << " -> " << oq.vertices[a.dst].label;
    if (a.mult > 1) text << " x" << a.mult;
    text << "\n";
  }

  json j;
  j["schema"] = "cluscat/orbit-quiver/1";
  j.update(diagram_json(o, q));
  j["f_power"] = o.f_power;
  j["configuration"] = o.config;
  j["non_frozen"] = oq.non_frozen;
  json verts = json::array();
  for (const OrbitVertex& v : oq.vertices) {
    json one;
    one["label"] = v.label;
    one["frozen"] = v.frozen;
    one["rep"] = {v.rep.i + 1, v.rep.p};
    verts.push_back(one);
  }
  j["vertices"] = verts;
  json arrows = json::array();
  for (const OrbitArrow& a : oq.arrows) arrows.push_back({a.src, a.dst, a.mult});
  j["arrows"] = arrows;

  return emit(o, "orbit_quiver",
              {text.str(), std::move(j),
               {{"orbit_quiver.dot", oq.to_dot()}, {"window.dot", cc.config_quiver_dot()}}});
}

// checks that stay meaningful beyond the theorem's scope (higher F powers,
// proper subconfigurations)
VerificationReport structural_report(const ConfigCategory& cc, const std::string& na_reason) {
  VerificationReport rep;
  const OrbitQuiver& oq = cc.orbit_quiver();

  int kept = 0;
  std::vector<int> size(oq.vertices.size(), 0);
  bool orbit_ok = true;
  for (const RQVertex& v : cc.window().vertices()) {
    if (!cc.kept(v)) continue;
    ++kept;
    const int orb = cc.orbit_of(v);
    if (orb < 0 || orb >= int(size.size()))
      orbit_ok = false;
    else
      ++size[orb];
  }
  int covered = 0;
  for (int s : size) {
    covered += s;
    if (s == 0) orbit_ok = false;
  }
  rep.checks.push_back({"orbits partition the window", orbit_ok && covered == kept, ""});

  bool ff = false;
  for (const OrbitArrow& a : oq.arrows)
    if (oq.vertices[a.src].frozen && oq.vertices[a.dst].frozen) ff = true;
  rep.checks.push_back({"no arrows between frozen orbits", !ff, ""});

  if (cc.f_power() == 1) {
    const ClusterTilting t = cluster_tilting(cc);
    rep.checks.push_back({"distinguished object is rigid", t.rigid, ""});
    rep.checks.push_back({"distinguished object is maximal rigid", t.maximal, ""});
    const int n = cc.cluster_quiver().diagram.rank;
    rep.checks.push_back(
        {"summand census", int(t.x_orbits.size()) == n && !t.p_orbits.empty(), ""});
  }
  rep.checks.push_back({"main theorem: N/A (" + na_reason + ")", true, ""});
  return rep;
}

int cmd_verify(const Options& o) {
  const bool desk = (o.type == "A" && o.rank <= 4) || (o.type == "D" && o.rank == 4);
  if (!desk && !o.allow_large)
    throw Usage("size beyond the desk-scale set (A1..A4, D4); pass --allow-large to run anyway");
  const DynkinQuiver q = parse_quiver(o);
  require_bipartite(q, "the verification pipeline");

  VerificationReport rep;
  std::string mode;
  if (o.f_power == 1 && o.config == "full") {
    mode = "main-theorem";
    rep = verify_main_theorem(q);
  } else {
    mode = "structural";
    ConfigCategory cc(q, parse_config(o), o.f_power);
    if (!cc.admissibility().admissible) throw Usage("configuration is not admissible");
    rep = structural_report(cc, o.f_power > 1 ? "orbit map power " + std::to_string(o.f_power)
                                              : "proper subconfiguration");
  }

  json j;
  j["schema"] = "cluscat/verify/1";
  j.update(diagram_json(o, q));
  j["f_power"] = o.f_power;
  j["configuration"] = o.config;
  j["mode"] = mode;
  json checks = json::array();
  for (const VerificationCheck& c : rep.checks) {
    json one;
    one["name"] = c.name;
    one["pass"] = c.pass;
    one["detail"] = c.detail;
    checks.push_back(one);
  }
  j["checks"] = checks;
  j["pass"] = rep.pass();

  Rendered r{report_text(rep), std::move(j), {}};
  // three-way figure dump when the ice quivers are in play and disagree
  if (mode == "main-theorem" && !rep.pass()) {
    r.dots = {{"universal.dot", rep.universal.to_dot(rep.vertex_names)},
              {"direct.dot", rep.direct.to_dot(rep.vertex_names)},
              {"oracle.dot", rep.oracle.to_dot(rep.vertex_names)}};
  }
  const int rc = emit(o, "verify", r);
  if (rc != 0) return rc;
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"exact cluster-algebra and orbit-category toolkit"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--type", o.type, "diagram family: A, D, or E")->required();
    cmd->add_option("--rank", o.rank, "diagram rank")->required();
    cmd->add_option("--orientation", o.orientation,
                    "arrow list like 1>2,3>2 (default bipartite-default)");
    cmd->add_option("--out", o.out, "directory for the rendered files");
    cmd->add_option("--format", o.format, "stdout format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    return cmd;
  };
  const auto add_category = [&](CLI::App* cmd) {
    cmd->add_option("--config", o.config, "full or orbit representatives (i,p);(j,q)");
    cmd->add_option("--f-power", o.f_power, "n in F = Sigma^n tau^-1 (default 1)")
        ->check(CLI::PositiveNumber);
    return cmd;
  };

  CLI::App* roots = add_common(app.add_subcommand(
      "roots", "almost-positive roots with the tau involutions and orbits"));
  CLI::App* useed = add_common(app.add_subcommand(
      "universal-seed", "the universal-coefficients seed of the orientation"));
  CLI::App* mutate = add_common(app.add_subcommand(
      "mutate", "apply a mutation word to the universal seed"));
  mutate->add_option("--word", o.word, "comma-separated 1-based vertex word")->required();
  CLI::App* egraph = add_common(app.add_subcommand(
      "exchange-graph", "breadth-first closure under mutation with all exchange relations"));
  egraph->add_option("--budget", o.budget, "seed cap for the closure")
      ->check(CLI::PositiveNumber);
  CLI::App* arq = add_category(add_common(app.add_subcommand(
      "ar-quiver", "labeled orbit quiver of the configuration category")));
  CLI::App* verify = add_category(add_common(app.add_subcommand(
      "verify", "check the categorification of the universal seed")));
  verify->add_flag("--allow-large", o.allow_large,
                   "run sizes beyond A1..A4, D4 (may need substantial time and memory)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (roots->parsed()) return cmd_roots(o);
    if (useed->parsed()) return cmd_universal_seed(o);
    if (mutate->parsed()) return cmd_mutate(o);
    if (egraph->parsed()) return cmd_exchange_graph(o);
    if (arq->parsed()) return cmd_ar_quiver(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
