// sidonlab: exact classification, solving, construction, and extremal search
// for Sidon-type point sets.
//
// Verbs: check, hypergraph, solve, bounds, construct, concat, search,
// fekete, verify-paper. Every verb reads exact rationals, computes with
// exact arithmetic, and (with --json) emits values as strings so nothing is
// rounded on the way out.
//
// Exit codes: 0 success; 1 usage or input error; 2 fatal inconsistency (a
// computed certificate contradicts a theorem or a cross-check) or a failed
// verification run.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sidonlab/ap_hypergraph.hpp"
#include "sidonlab/constructions.hpp"
#include "sidonlab/errors.hpp"
#include "sidonlab/fekete.hpp"
#include "sidonlab/point_set.hpp"
#include "sidonlab/predicates.hpp"
#include "sidonlab/rational.hpp"
#include "sidonlab/records.hpp"
#include "sidonlab/search.hpp"
#include "sidonlab/solver.hpp"
#include "sidonlab/verify.hpp"

namespace {

using nlohmann::json;
using namespace sidonlab;

constexpr int kSchemaVersion = 1;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PointSet read_set(const std::string& path) {
  return parse_point_set(slurp(path));
}

PropertyMode parse_mode(const std::string& text) {
  if (text == "weak" || text == "weak-sidon") return PropertyMode::WeakSidon;
  if (text == "45" || text == "four-five" || text == "4,5")
    return PropertyMode::FourFive;
  throw std::invalid_argument("unknown mode '" + text +
                              "' (expected weak-sidon or four-five)");
}

int env_solver_cap() {
  const char* raw = std::getenv("SIDONLAB_CAP");
  if (raw == nullptr || *raw == '\0') return default_solver_cap;
  char* end = nullptr;
  long cap = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || cap < 1 || cap > 100000)
    throw std::invalid_argument(
        "SIDONLAB_CAP must be a positive integer, got '" + std::string(raw) +
        "'");
  return static_cast<int>(cap);
}

json set_to_json(const PointSet& a) {
  json arr = json::array();
  for (const Rational& v : a) arr.push_back(to_string(v));
  return arr;
}

json values_to_json(const std::vector<Integer>& values) {
  json arr = json::array();
  for (const Integer& v : values) arr.push_back(to_string(Rational(v)));
  return arr;
}

json edge_values(const TripleSystem& h, const Edge& e) {
  return json::array({to_string(h.labels()[e[0]]), to_string(h.labels()[e[1]]),
                      to_string(h.labels()[e[2]])});
}

std::string edge_text(const TripleSystem& h, const Edge& e) {
  return "{" + to_string(h.labels()[e[0]]) + ", " +
         to_string(h.labels()[e[1]]) + ", " + to_string(h.labels()[e[2]]) +
         "}";
}

const char* yes_no(bool b) { return b ? "YES" : "NO"; }

json check_to_json(const Classification& c) {
  json witnesses;
  if (c.sidon_witness.has_value())
    witnesses["sidon"] = {{"x", to_string(c.sidon_witness->x)},
                          {"y", to_string(c.sidon_witness->y)},
                          {"u", to_string(c.sidon_witness->u)},
                          {"v", to_string(c.sidon_witness->v)}};
  else
    witnesses["sidon"] = nullptr;
  if (c.four_five_witness.has_value()) {
    json quad = json::array();
    for (const Rational& q : c.four_five_witness->quad)
      quad.push_back(to_string(q));
    json diffs = json::array();
    for (const Rational& d : c.four_five_witness->differences)
      diffs.push_back(to_string(d));
    witnesses["four_five"] = {
        {"quad", quad},
        {"differences", diffs},
        {"distinct_count", c.four_five_witness->distinct_count}};
  } else {
    witnesses["four_five"] = nullptr;
  }
  if (c.weak_sidon_witness.has_value())
    witnesses["weak_sidon"] = {{"x", to_string(c.weak_sidon_witness->x)},
                               {"y", to_string(c.weak_sidon_witness->y)},
                               {"u", to_string(c.weak_sidon_witness->u)},
                               {"v", to_string(c.weak_sidon_witness->v)}};
  else
    witnesses["weak_sidon"] = nullptr;
  return json{{"schema_version", kSchemaVersion},
              {"command", "check"},
              {"sidon", c.sidon},
              {"four_five", c.four_five},
              {"weak_sidon", c.weak_sidon},
              {"witnesses", witnesses}};
}

int cmd_check(const std::string& file, bool as_json) {
  PointSet a = read_set(file);
  Classification c = classify(a);
  if (as_json) {
    std::cout << check_to_json(c).dump(2) << "\n";
    return 0;
  }
  std::cout << "points: " << a.size() << "\n";
  std::cout << "sidon: " << yes_no(c.sidon);
  if (c.sidon_witness.has_value())
    std::cout << "  (collision " << to_string(c.sidon_witness->x) << " + "
              << to_string(c.sidon_witness->y) << " = "
              << to_string(c.sidon_witness->u) << " + "
              << to_string(c.sidon_witness->v) << ")";
  std::cout << "\n";
  std::cout << "four-five: " << yes_no(c.four_five);
  if (c.four_five_witness.has_value()) {
    std::cout << "  (quad";
    for (const Rational& q : c.four_five_witness->quad)
      std::cout << " " << to_string(q);
    std::cout << " has " << c.four_five_witness->distinct_count
              << " distinct differences)";
  }
  std::cout << "\n";
  std::cout << "weak-sidon: " << yes_no(c.weak_sidon);
  if (c.weak_sidon_witness.has_value())
    std::cout << "  (collision " << to_string(c.weak_sidon_witness->x)
              << " + " << to_string(c.weak_sidon_witness->y) << " = "
              << to_string(c.weak_sidon_witness->u) << " + "
              << to_string(c.weak_sidon_witness->v) << ")";
  std::cout << "\n";
  return 0;
}

int cmd_hypergraph(const std::string& file, bool as_json) {
  PointSet a = read_set(file);
  TripleSystem h = build_ap_hypergraph(a);
  MidpointReport mid = midpoint_map(h);
  auto [linear, offender] = is_linear(h);
  std::optional<bool> f7_free;
  if (linear && h.edges().size() <= 64) f7_free = !contains_f7(h).first;
  if (as_json) {
    json edges = json::array();
    for (const Edge& e : h.edges()) edges.push_back(edge_values(h, e));
    json mids = json::array();
    for (int v : mid.midpoint_of_edge)
      mids.push_back(to_string(h.labels()[v]));
    json out{{"schema_version", kSchemaVersion},
             {"command", "hypergraph"},
             {"n", h.vertex_count()},
             {"m", h.edges().size()},
             {"edges", edges},
             {"midpoints",
              {{"midpoint_of_edge", mids},
               {"injective", mid.injective},
               {"avoids_extremes", mid.avoids_extremes}}},
             {"linear", linear}};
    if (offender.has_value())
      out["offending_pair"] = json::array({edge_values(h, offender->first),
                                           edge_values(h, offender->second)});
    else
      out["offending_pair"] = nullptr;
    if (f7_free.has_value())
      out["f7_free"] = *f7_free;
    else
      out["f7_free"] = nullptr;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "vertices: " << h.vertex_count() << "\n";
  std::cout << "edges (3-term progressions): " << h.edges().size() << "\n";
  for (const Edge& e : h.edges()) std::cout << "  " << edge_text(h, e) << "\n";
  std::cout << "midpoints injective: " << yes_no(mid.injective)
            << ", avoid extremes: " << yes_no(mid.avoids_extremes) << "\n";
  std::cout << "linear: " << yes_no(linear);
  if (offender.has_value())
    std::cout << "  (" << edge_text(h, offender->first) << " and "
              << edge_text(h, offender->second) << " share two vertices)";
  std::cout << "\n";
  if (f7_free.has_value())
    std::cout << "F7-free: " << yes_no(*f7_free) << "\n";
  return 0;
}

int cmd_solve(const std::string& file, bool with_oracle, int cap,
              bool as_json) {
  PointSet a = read_set(file);
  SolveResult r = max_sidon_subset(a, cap);
  std::optional<int> oracle_h;
  if (with_oracle) {
    oracle_h = exhaustive_h_oracle(a);
    if (*oracle_h != r.h)
      throw FatalInconsistency(
          "solver found h = " + std::to_string(r.h) +
          " but the exhaustive oracle found h = " + std::to_string(*oracle_h));
  }
  if (as_json) {
    json out{{"schema_version", kSchemaVersion},
             {"command", "solve"},
             {"n", a.size()},
             {"h", r.h},
             {"witness", set_to_json(r.witness)},
             {"alpha", r.alpha},
             {"tau", r.tau},
             {"method", std::string(method_name(r.method))}};
    if (oracle_h.has_value())
      out["oracle_h"] = *oracle_h;
    else
      out["oracle_h"] = nullptr;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "n = " << a.size() << "\n";
  std::cout << "h = " << r.h << "\n";
  std::cout << "witness: " << r.witness.to_text() << "\n";
  std::cout << "alpha = " << r.alpha << ", tau = " << r.tau << "\n";
  std::cout << "method: " << method_name(r.method) << "\n";
  if (oracle_h.has_value())
    std::cout << "exhaustive oracle: h = " << *oracle_h << " (agrees)\n";
  return 0;
}

json bound_check_json(const BoundCheck& c) {
  return json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds},
              {"tight", c.tight}};
}

void bound_check_text(const char* name, const std::optional<BoundCheck>& c) {
  if (!c.has_value()) return;
  std::cout << name << ": " << c->lhs << " <= " << c->rhs << "  "
            << (c->holds ? (c->tight ? "HOLDS (tight)" : "HOLDS")
                         : "VIOLATED")
            << "\n";
}

int cmd_bounds(const std::string& file, int cap, bool as_json) {
  PointSet a = read_set(file);
  BoundsReport rep = bounds_report(a, cap);
  if (as_json) {
    json out{{"schema_version", kSchemaVersion},
             {"command", "bounds"},
             {"n", rep.n},
             {"m", rep.m},
             {"h", rep.h},
             {"tau", rep.tau},
             {"sidon", rep.sidon},
             {"weak_sidon", rep.weak_sidon},
             {"four_five", rep.four_five},
             {"linear", rep.linear},
             {"consistent", rep.consistent()}};
    if (rep.f7_free.has_value())
      out["f7_free"] = *rep.f7_free;
    else
      out["f7_free"] = nullptr;
    json checks{{"cmt", bound_check_json(rep.cmt)}};
    auto opt = [&](const char* key, const std::optional<BoundCheck>& c) {
      if (c.has_value())
        checks[key] = bound_check_json(*c);
      else
        checks[key] = nullptr;
    };
    opt("hy", rep.hy);
    opt("edge_bound", rep.edge_bound);
    opt("weak_lower", rep.weak_lower);
    opt("ff_lower", rep.ff_lower);
    out["checks"] = checks;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n = " << rep.n << ", m = " << rep.m << ", h = " << rep.h
              << ", tau = " << rep.tau << "\n";
    std::cout << "sidon " << yes_no(rep.sidon) << ", four-five "
              << yes_no(rep.four_five) << ", weak-sidon "
              << yes_no(rep.weak_sidon) << ", linear " << yes_no(rep.linear);
    if (rep.f7_free.has_value())
      std::cout << ", F7-free " << yes_no(*rep.f7_free);
    std::cout << "\n";
    bound_check_text("4tau <= n+m", rep.cmt);
    bound_check_text("17tau <= 5n+3m", rep.hy);
    bound_check_text("m <= n-2", rep.edge_bound);
    bound_check_text("ceil((n+1)/2) <= h", rep.weak_lower);
    bound_check_text("ceil(9n/17) <= h", rep.ff_lower);
    std::cout << "consistent: " << yes_no(rep.consistent()) << "\n";
  }
  if (!rep.consistent())
    throw FatalInconsistency(
        "a proven bound is violated by exact computation");
  return 0;
}

int cmd_construct(const std::string& family, int n, bool as_json) {
  if (family == "base-block") {
    PointSet a = base_block();
    if (as_json) {
      std::cout << json{{"schema_version", kSchemaVersion},
                        {"command", "construct"},
                        {"family", "base-block"},
                        {"set", set_to_json(a)}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << a.to_text() << "\n";
    }
    return 0;
  }
  if (family != "a2n1")
    throw std::invalid_argument("unknown family '" + family +
                                "' (expected a2n1 or base-block)");
  A2n1Family fam = build_a2n1(n);
  auto aps = enumerate_a2n1_aps(fam);
  if (as_json) {
    json progressions = json::array();
    for (const auto& t : aps)
      progressions.push_back(json::array({to_string(Rational(t[0])),
                                          to_string(Rational(t[1])),
                                          to_string(Rational(t[2]))}));
    std::cout << json{{"schema_version", kSchemaVersion},
                      {"command", "construct"},
                      {"family", "a2n1"},
                      {"n", n},
                      {"size", fam.set.size()},
                      {"set", set_to_json(fam.set)},
                      {"x", values_to_json(fam.x)},
                      {"y", values_to_json(fam.y)},
                      {"progressions", progressions}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "A_" << 2 * n + 1 << " = " << fam.set.to_text() << "\n";
    std::cout << "X side:";
    for (const Integer& x : fam.x) std::cout << " " << to_string(Rational(x));
    std::cout << "\nY side:";
    for (const Integer& y : fam.y) std::cout << " " << to_string(Rational(y));
    std::cout << "\nprogressions (" << aps.size() << "):\n";
    for (const auto& t : aps)
      std::cout << "  {" << to_string(Rational(t[0])) << ", "
                << to_string(Rational(t[1])) << ", "
                << to_string(Rational(t[2])) << "}\n";
  }
  return 0;
}

int cmd_concat(const std::string& file_a, const std::string& file_b,
               const std::string& mode_text, bool as_json) {
  PropertyMode mode = parse_mode(mode_text);
  PointSet a = read_set(file_a);
  PointSet b = read_set(file_b);
  ConcatPlan plan = plan_concat(a, b, mode);
  PointSet c = concat(a, b, plan);
  if (as_json) {
    json ratios = json::array();
    for (const Rational& r : plan.forbidden_ratios)
      ratios.push_back(to_string(r));
    std::cout << json{{"schema_version", kSchemaVersion},
                      {"command", "concat"},
                      {"mode", std::string(mode_name(mode))},
                      {"a", set_to_json(a)},
                      {"b", set_to_json(b)},
                      {"plan",
                       {{"scale", to_string(plan.scale)},
                        {"separation", to_string(plan.separation)},
                        {"forbidden_ratios", ratios},
                        {"diameter_a", to_string(plan.diameter_a)},
                        {"diameter_b", to_string(plan.diameter_b)}}},
                      {"result", set_to_json(c)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "mode: " << mode_name(mode) << "\n";
    std::cout << "scale q = " << to_string(plan.scale)
              << ", separation t = " << to_string(plan.separation) << "\n";
    std::cout << "C (" << c.size() << " points) = " << c.to_text() << "\n";
  }
  return 0;
}

int cmd_search(int n, const std::string& max_text, const std::string& mode_text,
               const std::string& shard_text, long long budget,
               const std::string& seed_file, const std::string& records_file,
               int cap, bool as_json) {
  SearchSpec spec;
  spec.size = n;
  if (!detail::is_integer_token(max_text))
    throw std::invalid_argument("--max must be an integer, got '" + max_text +
                                "'");
  spec.max_coord = detail::to_integer(max_text);
  spec.mode = parse_mode(mode_text);
  spec.solver_cap = cap;
  spec.node_budget = budget;
  if (!shard_text.empty()) {
    auto slash = shard_text.find('/');
    if (slash == std::string::npos)
      throw std::invalid_argument("--shard expects i/k, got '" + shard_text +
                                  "'");
    spec.shard.index = std::stoi(shard_text.substr(0, slash));
    spec.shard.count = std::stoi(shard_text.substr(slash + 1));
  }
  if (!seed_file.empty()) spec.seed = read_set(seed_file);
  SearchResult r = search_extremal(spec);

  const char* fn = spec.mode == PropertyMode::WeakSidon ? "g" : "f";
  std::string arg = "(" + std::to_string(n) + ")";
  if (as_json) {
    json out{{"schema_version", kSchemaVersion},
             {"command", "search"},
             {"size", n},
             {"max_coord", to_string(spec.max_coord)},
             {"mode", std::string(mode_name(spec.mode))},
             {"shard", {{"index", spec.shard.index},
                        {"count", spec.shard.count}}},
             {"budget", spec.node_budget},
             {"nodes", r.nodes},
             {"candidates", r.candidates},
             {"complete", r.complete},
             {"best_h", r.best_h},
             {"lower_bound", r.lower_bound}};
    if (r.witness.has_value())
      out["witness"] = set_to_json(*r.witness);
    else
      out["witness"] = nullptr;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "search size=" << n << " within [0, "
              << to_string(spec.max_coord) << "], mode " << mode_name(spec.mode)
              << ", shard " << spec.shard.index << "/" << spec.shard.count
              << "\n";
    std::cout << "explored " << r.nodes << " nodes, " << r.candidates
              << " candidates "
              << (r.complete ? "(complete)" : "(budget exhausted, incomplete)")
              << "\n";
    if (r.witness.has_value()) {
      std::cout << "certified upper bound: " << fn << arg << " <= " << r.best_h
                << "   [proven lower bound: " << fn << arg
                << " >= " << r.lower_bound << "]\n";
      std::cout << "witness: " << r.witness->to_text() << "\n";
    } else {
      std::cout << "no candidate found (proven lower bound: " << fn << arg
                << " >= " << r.lower_bound << ")\n";
    }
  }
  if (!records_file.empty() && r.witness.has_value()) {
    SearchRecord rec;
    rec.size = n;
    rec.mode = spec.mode;
    rec.best_h = r.best_h;
    rec.witness = *r.witness;
    rec.exact = r.complete;
    rec.params = {{"max_coord", to_string(spec.max_coord)},
                  {"shard_index", spec.shard.index},
                  {"shard_count", spec.shard.count},
                  {"budget", spec.node_budget},
                  {"nodes", r.nodes},
                  {"candidates", r.candidates}};
    store_record(records_file, rec, cap);
    if (!as_json)
      std::cout << "recorded to " << records_file << "\n";
  }
  return 0;
}

int cmd_fekete(const std::string& series, const std::string& records_file,
               int cap, bool as_json) {
  if (series != "f" && series != "g")
    throw std::invalid_argument("--series must be f or g, got '" + series +
                                "'");
  PropertyMode mode =
      series == "f" ? PropertyMode::FourFive : PropertyMode::WeakSidon;
  LoadResult loaded = load_records(records_file, cap);
  for (const FlaggedRecord& f : loaded.flagged)
    std::cerr << "warning: " << records_file << ":" << f.line
              << " flagged: " << f.message << "\n";
  FeketeTable table = fekete_table_from_records(loaded.records, mode);
  if (table.empty())
    throw std::invalid_argument("no verified " +
                                std::string(mode_name(mode)) + " records in " +
                                records_file);
  FeketeReport report = fekete_report(table);
  const char* constant = series == "f" ? "c*" : "gamma*";
  if (as_json) {
    json entries = json::array();
    for (std::size_t i = 0; i < table.size(); ++i) {
      Rational ratio = table[i].value / Rational(static_cast<long>(table[i].index));
      ratio.canonicalize();
      entries.push_back({{"index", table[i].index},
                         {"value", to_string(table[i].value)},
                         {"ratio", to_string(ratio)},
                         {"running_inf", to_string(report.running[i])}});
    }
    std::cout << json{{"schema_version", kSchemaVersion},
                      {"command", "fekete"},
                      {"series", series},
                      {"entries", entries},
                      {"infimum", to_string(report.infimum)},
                      {"attained_at", report.attained_at},
                      {"constant", constant}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "series " << series << " (" << mode_name(mode) << "), "
              << table.size() << " sizes from records\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
      Rational ratio = table[i].value / Rational(static_cast<long>(table[i].index));
      ratio.canonicalize();
      std::cout << "  k=" << table[i].index << "  v<=" << to_string(table[i].value)
                << "  ratio " << to_string(ratio) << "  running inf "
                << to_string(report.running[i]) << "\n";
    }
    std::cout << "infimum: " << to_string(report.infimum) << " attained at k="
              << report.attained_at << "\n";
    std::cout << "implied bound: " << constant << " <= "
              << to_string(report.infimum)
              << " (record values are upper bounds)\n";
  }
  return 0;
}

int cmd_verify(const std::string& base_block_file, int cap) {
  VerifyOptions opts;
  opts.solver_cap = cap;
  if (!base_block_file.empty())
    opts.base_block_override = read_set(base_block_file);
  VerifyOutcome outcome = verify_paper(std::cout, opts);
  return outcome.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for Sidon-type point sets: classification, "
               "A.P.-hypergraphs, exact h/alpha/tau, transversal bounds, "
               "constructions, and extremal search"};
  app.require_subcommand(1);

  std::string file, file_b, mode_text = "weak-sidon", family, shard_text;
  std::string seed_file, records_file, series = "g", base_block_file;
  std::string max_text = "0";
  int n = 0;
  long long budget = 0;
  bool as_json = false, with_oracle = false;

  CLI::App* check = app.add_subcommand("check", "classify a point set");
  check->add_option("file", file, "point-set file")->required();
  check->add_flag("--json", as_json, "JSON output");

  CLI::App* hyper = app.add_subcommand(
      "hypergraph", "3-term progression hypergraph of a point set");
  hyper->add_option("file", file, "point-set file")->required();
  hyper->add_flag("--json", as_json, "JSON output");

  CLI::App* solve =
      app.add_subcommand("solve", "maximum Sidon subset, alpha and tau");
  solve->add_option("file", file, "point-set file")->required();
  solve->add_flag("--oracle", with_oracle,
                  "cross-check against the exhaustive oracle (|A| <= 20)");
  solve->add_flag("--json", as_json, "JSON output");

  CLI::App* bounds =
      app.add_subcommand("bounds", "evaluate every applicable proven bound");
  bounds->add_option("file", file, "point-set file")->required();
  bounds->add_flag("--json", as_json, "JSON output");

  CLI::App* construct =
      app.add_subcommand("construct", "built-in extremal families");
  construct->add_option("family", family, "a2n1 or base-block")->required();
  construct->add_option("--n", n, "family parameter n >= 2 (a2n1)");
  construct->add_flag("--json", as_json, "JSON output");

  CLI::App* conc = app.add_subcommand(
      "concat", "scale-separated concatenation preserving a property");
  conc->add_option("file_a", file, "first point-set file")->required();
  conc->add_option("file_b", file_b, "second point-set file")->required();
  conc->add_option("--mode", mode_text, "weak-sidon or four-five")
      ->required();
  conc->add_flag("--json", as_json, "JSON output");

  CLI::App* search = app.add_subcommand(
      "search", "extremal witness search over an integer grid");
  search->add_option("--n", n, "target set size")->required();
  search->add_option("--max", max_text, "coordinate bound M")->required();
  search->add_option("--mode", mode_text, "weak-sidon or four-five");
  search->add_option("--shard", shard_text, "i/k deterministic work split");
  search->add_option("--budget", budget, "node budget (0 = unlimited)");
  search->add_option("--seed", seed_file, "file with a known witness");
  search->add_option("--records", records_file,
                     "append the result to this JSON-lines store");
  search->add_flag("--json", as_json, "JSON output");

  CLI::App* fekete = app.add_subcommand(
      "fekete", "running infimum of v(k)/k from recorded upper bounds");
  fekete->add_option("--series", series, "f (four-five) or g (weak-sidon)")
      ->required();
  fekete->add_option("--records", records_file, "JSON-lines record store")
      ->required();
  fekete->add_flag("--json", as_json, "JSON output");

  CLI::App* verify = app.add_subcommand(
      "verify-paper", "recompute and verify every built-in claim");
  verify->add_option("--base-block", base_block_file,
                     "override the built-in 14-point base block");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);  // --help exits 0, usage errors nonzero
  }

  try {
    const int cap = env_solver_cap();
    if (check->parsed()) return cmd_check(file, as_json);
    if (hyper->parsed()) return cmd_hypergraph(file, as_json);
    if (solve->parsed()) return cmd_solve(file, with_oracle, cap, as_json);
    if (bounds->parsed()) return cmd_bounds(file, cap, as_json);
    if (construct->parsed()) return cmd_construct(family, n, as_json);
    if (conc->parsed()) return cmd_concat(file, file_b, mode_text, as_json);
    if (search->parsed())
      return cmd_search(n, max_text, mode_text, shard_text, budget, seed_file,
                        records_file, cap, as_json);
    if (fekete->parsed()) return cmd_fekete(series, records_file, cap, as_json);
    if (verify->parsed()) return cmd_verify(base_block_file, cap);
    std::cerr << "error: no command\n";
    return 1;
  } catch (const FatalInconsistency& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
