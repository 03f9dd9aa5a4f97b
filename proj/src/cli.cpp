#include "maxtoll/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "maxtoll/error.hpp"
#include "maxtoll/exact.hpp"
#include "maxtoll/explore.hpp"
#include "maxtoll/generators.hpp"
#include "maxtoll/io.hpp"

namespace maxtoll {

namespace {

using Json = nlohmann::ordered_json;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot write '" + path + "'");
  out << text;
}

Json path_json(const Network& net, const PathSeq& path) {
  Json ids = Json::array();
  for (ArcIndex a : path) ids.push_back(net.arc(a).id);
  return ids;
}

// (id, toll) for every toll arc on the path, in path order.
std::vector<std::pair<std::string, Rational>> on_path_tolls(const Network& net, const PathSeq& path,
                                                            const TollAssignment& tolls) {
  std::vector<std::pair<std::string, Rational>> out;
  for (ArcIndex a : path) {
    if (!net.arc(a).is_toll()) continue;
    out.emplace_back(net.arc(a).id, tolls.is_blocked(a) ? Rational(0) : tolls.toll(a));
  }
  return out;
}

Json tolls_json(const std::vector<std::pair<std::string, Rational>>& tolls) {
  Json obj = Json::object();
  for (const auto& [id, value] : tolls) obj[id] = value.to_string();
  return obj;
}

std::string pad(const std::string& text, std::size_t width) {
  return text.size() >= width ? text + " " : text + std::string(width - text.size(), ' ');
}

// ---------------------------------------------------------------------------

struct Options {
  std::string instance;
  std::string solution;
  std::string out_path;
  std::string family;
  std::string cnf;
  std::string p_toll = "1/2";
  bool json = false;
  bool parallel = false;
  bool balanced = false;
  bool no_exact = false;
  std::size_t k = 1;
  std::size_t kmax = 8;
  std::size_t count = 10;
  std::size_t cap = kDefaultPathCap;
  std::size_t layers = 3;
  std::size_t width = 2;
  std::int64_t cmax = 4;
  std::uint64_t seed = 0;
};

int cmd_solve(const Options& o, std::ostream& out) {
  Network net = parse_instance(read_file(o.instance));
  ExploreOptions explore;
  explore.parallel = o.parallel;
  Solution sol = solve(net, explore);

  SolutionFile file;
  file.revenue = sol.revenue;
  file.lp = sol.lp;
  file.guarantee = sol.guarantee;
  file.path = net.arc_ids(sol.path);
  file.tolls = on_path_tolls(net, sol.path, sol.tolls);

  if (!o.out_path.empty()) write_file(o.out_path, serialize_solution(file));
  if (o.json) {
    Json j;
    j["revenue"] = file.revenue.to_string();
    j["lp"] = file.lp.to_string();
    j["guarantee"] = file.guarantee.to_string();
    j["path"] = file.path;
    j["tolls"] = tolls_json(file.tolls);
    j["path_bound"] = sol.path_bound.to_string();
    j["l0"] = sol.l0.to_string();
    j["linf"] = sol.linf.to_string();
    j["initial_toll_count"] = sol.initial_toll_count;
    j["recursion_calls"] = sol.recursion_calls;
    out << j.dump() << '\n';
  } else {
    out << serialize_solution(file, {"path_bound " + sol.path_bound.to_string(),
                                     "initial_toll_count " + std::to_string(sol.initial_toll_count),
                                     "recursion_calls " + std::to_string(sol.recursion_calls)});
  }
  return kExitOk;
}

int cmd_exact(const Options& o, std::ostream& out) {
  Network net = parse_instance(read_file(o.instance));
  ExactResult r = exact_opt(net, o.cap);
  auto tolls = on_path_tolls(net, r.best_path, r.best_tolls);
  if (o.json) {
    Json j;
    j["opt"] = r.opt.to_string();
    j["paths"] = r.paths_enumerated;
    j["valid"] = r.valid_paths;
    j["truncated"] = r.truncated;
    j["path"] = path_json(net, r.best_path);
    j["tolls"] = tolls_json(tolls);
    out << j.dump() << '\n';
  } else {
    out << "opt " << r.opt << '\n';
    out << "paths " << r.paths_enumerated << '\n';
    out << "valid " << r.valid_paths << '\n';
    out << "truncated " << (r.truncated ? 1 : 0) << '\n';
    out << "path";
    for (ArcIndex a : r.best_path) out << ' ' << net.arc(a).id;
    out << '\n';
    for (const auto& [id, value] : tolls) out << "toll " << id << ' ' << value << '\n';
  }
  return kExitOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
  Network net = parse_instance(read_file(o.instance));
  Bounds b = compute_bounds(net);
  if (o.json) {
    Json j;
    j["l0"] = b.l0.to_string();
    j["linf"] = b.linf.to_string();
    j["lp"] = b.lp.to_string();
    out << j.dump() << '\n';
  } else {
    out << "l0 " << b.l0 << "\nlinf " << b.linf << "\nlp " << b.lp << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Network net = parse_instance(read_file(o.instance));
  SolutionFile sol = parse_solution(read_file(o.solution));

  auto report = [&](bool ok, const std::string& detail) {
    if (o.json) {
      Json j;
      j["status"] = ok ? "consistent" : "inconsistent";
      if (!detail.empty()) j["detail"] = detail;
      if (ok) j["revenue"] = sol.revenue.to_string();
      out << j.dump() << '\n';
    } else if (ok) {
      out << "consistent\nrevenue " << sol.revenue << '\n';
    } else {
      out << "inconsistent: " << detail << '\n';
    }
    return ok ? kExitOk : kExitDiagnostic;
  };

  PathSeq path = net.path_from_ids(sol.path);
  if (!is_simple_path(net, path, net.source(), net.sink())) return report(false, "path is not a simple s-t path");

  TollAssignment tolls = TollAssignment::blocked(net);
  std::vector<bool> on_path(net.arc_count(), false);
  for (ArcIndex a : path) on_path[a] = true;
  Rational total;
  for (const auto& [id, value] : sol.tolls) {
    ArcIndex a = net.arc_index(id);
    if (!net.arc(a).is_toll()) return report(false, "toll on toll-free arc '" + id + "'");
    if (!on_path[a]) return report(false, "toll on off-path arc '" + id + "'");
    tolls.set(a, value);
    total += value;
  }
  for (ArcIndex a : path) {
    if (net.arc(a).is_toll() && tolls.is_blocked(a)) return report(false, "no toll for '" + net.arc(a).id + "'");
  }

  bool has_toll = std::any_of(path.begin(), path.end(), [&net](ArcIndex a) { return net.arc(a).is_toll(); });
  if (has_toll) {
    auto decomposed = try_decompose(net, path);
    if (!decomposed) return report(false, "path is not valid");
    if (!is_consistent_oracle(net, decomposed->path, tolls)) return report(false, "path is not shortest under the tolls");
  } else {
    auto own = path_length(net, path, TollRegime::free_only());
    auto best = distances_from(net, net.source(), TollRegime::zero_tolls())[net.sink()];
    if (!own || best.is_infinite() || *own != best.value()) return report(false, "toll-free path is not shortest");
  }
  if (total != sol.revenue) return report(false, "revenue " + sol.revenue.to_string() + " differs from toll sum " +
                                                     total.to_string());
  if (sol.lp != lp_bound(net)) return report(false, "lp " + sol.lp.to_string() + " differs from the network's");
  return report(true, "");
}

Generated generate(const Options& o) {
  if (o.family == "z") return gen_z(o.k);
  if (o.family == "z_mod") return gen_z_mod(o.k);
  if (o.family == "sat") return gen_sat(parse_dimacs(read_file(o.cnf)));
  if (o.family == "fig2" || o.family == "fig7") {
    Generated g{o.family == "fig2" ? fixture_fig2() : fixture_fig7(), {}};
    g.meta.family = Family::Fixture;
    return g;
  }
  RandomSpec spec;
  spec.layers = o.layers;
  spec.width = o.width;
  spec.p_toll = Rational::parse(o.p_toll);
  spec.cmax = o.cmax;
  spec.seed = o.seed;
  return gen_random(spec);
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.family == "sat" && o.cnf.empty()) throw CLI::ValidationError("--cnf", "family 'sat' needs --cnf <file>");
  Generated g = generate(o);
  std::string text = serialize_instance(g.network, metadata_comments(g.meta));
  if (!o.out_path.empty()) write_file(o.out_path, text);
  if (o.json) {
    Json j;
    j["family"] = std::string(to_string(g.meta.family));
    j["parameter"] = g.meta.parameter;
    j["scale"] = g.meta.scale;
    Json expected = Json::object();
    if (g.meta.expected.lp) expected["lp"] = g.meta.expected.lp->to_string();
    if (g.meta.expected.opt) expected["opt"] = g.meta.expected.opt->to_string();
    if (g.meta.expected.app) expected["app"] = g.meta.expected.app->to_string();
    j["expected"] = expected;
    j["instance"] = text;
    out << j.dump() << '\n';
  } else if (o.out_path.empty()) {
    out << text;
  }
  return kExitOk;
}

int cmd_alpha(const Options& o, std::ostream& out) {
  if (o.k == 0) throw CLI::ValidationError("--k", "k must be positive");
  Rational value = o.balanced ? alpha_balanced(o.k) : alpha(o.k);
  if (o.json) {
    Json j;
    j["k"] = o.k;
    j["alpha"] = value.to_string();
    out << j.dump() << '\n';
  } else {
    out << value << '\n';
  }
  return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  struct Row {
    std::string label;
    std::size_t m = 0;
    Rational lp, app;
    std::optional<Rational> opt;
  };
  std::vector<Row> rows;
  ExploreOptions explore;
  explore.parallel = o.parallel;

  auto measure = [&](std::string label, const Network& net) {
    Row row;
    row.label = std::move(label);
    Solution sol = solve(net, explore);
    row.m = sol.initial_toll_count;
    row.lp = sol.lp;
    row.app = sol.revenue;
    if (!o.no_exact) {
      ExactResult ex = exact_opt(net, o.cap);
      if (!ex.truncated) row.opt = ex.opt;
    }
    rows.push_back(std::move(row));
  };

  if (o.family == "z" || o.family == "z_mod") {
    for (std::size_t k = 1; k <= o.kmax; ++k) {
      measure(std::to_string(k), (o.family == "z" ? gen_z(k) : gen_z_mod(k)).network);
    }
  } else {
    RandomSpec spec;
    spec.layers = o.layers;
    spec.width = o.width;
    spec.p_toll = Rational::parse(o.p_toll);
    spec.cmax = o.cmax;
    for (std::size_t i = 0; i < o.count; ++i) {
      spec.seed = o.seed + i;
      measure(std::to_string(spec.seed), gen_random(spec).network);
    }
  }

  auto ratio = [](const Rational& num, const Rational& den) {
    return den.is_zero() ? std::string("-") : (num / den).to_string();
  };
  const std::string key = o.family == "random" ? "seed" : "k";
  if (o.json) {
    Json j;
    j["family"] = o.family;
    j["rows"] = Json::array();
    for (const Row& r : rows) {
      Json row;
      row[key] = r.label;
      row["m"] = r.m;
      row["lp"] = r.lp.to_string();
      row["app"] = r.app.to_string();
      row["opt"] = r.opt ? Json(r.opt->to_string()) : Json(nullptr);
      row["lp_over_app"] = ratio(r.lp, r.app);
      row["opt_over_app"] = r.opt ? Json(ratio(*r.opt, r.app)) : Json(nullptr);
      j["rows"].push_back(row);
    }
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << pad(key, 8) << pad("m", 6) << pad("lp", 12) << pad("app", 10) << pad("opt", 10) << pad("lp/app", 12)
      << "opt/app\n";
  for (const Row& r : rows) {
    out << pad(r.label, 8) << pad(std::to_string(r.m), 6) << pad(r.lp.to_string(), 12) << pad(r.app.to_string(), 10)
        << pad(r.opt ? r.opt->to_string() : "-", 10) << pad(ratio(r.lp, r.app), 12)
        << (r.opt ? ratio(*r.opt, r.app) : "-") << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Toll optimization toolkit: approximate and exact revenue maximization on toll networks", "maxtoll"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto* solve_cmd = app.add_subcommand("solve", "Approximate the maximum revenue and print a solution");
  solve_cmd->add_option("instance", o.instance, "Instance file (.mt)")->required();
  solve_cmd->add_option("--out", o.out_path, "Also write the solution to this file");
  solve_cmd->add_flag("--parallel", o.parallel, "Explore descendant subtrees concurrently");

  auto* exact_cmd = app.add_subcommand("exact", "Exact optimum by simple-path enumeration");
  exact_cmd->add_option("instance", o.instance, "Instance file (.mt)")->required();
  exact_cmd->add_option("--cap", o.cap, "Maximum number of enumerated paths")->check(CLI::PositiveNumber);

  auto* bound_cmd = app.add_subcommand("bound", "Print L0, Linf and the LP bound");
  bound_cmd->add_option("instance", o.instance, "Instance file (.mt)")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a solution file against an instance");
  verify_cmd->add_option("instance", o.instance, "Instance file (.mt)")->required();
  verify_cmd->add_option("solution", o.solution, "Solution file (.mts)")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("family", o.family, "z, z_mod, sat, fig2, fig7 or random")
      ->required()
      ->check(CLI::IsMember({"z", "z_mod", "sat", "fig2", "fig7", "random"}));
  gen_cmd->add_option("--k", o.k, "Size parameter of z / z_mod")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--cnf", o.cnf, "DIMACS CNF file for family sat");
  gen_cmd->add_option("--out", o.out_path, "Write the instance to this file instead of stdout");

  auto* alpha_cmd = app.add_subcommand("alpha", "Print the approximation factor alpha(k)");
  alpha_cmd->add_option("--k", o.k, "Toll arc count")->required()->check(CLI::PositiveNumber);
  alpha_cmd->add_flag("--balanced", o.balanced, "Use the balanced-split evaluation");

  auto* bench_cmd = app.add_subcommand("bench", "Tabulate LP, APP and OPT over an instance family");
  bench_cmd->add_option("family", o.family, "z, z_mod or random")
      ->required()
      ->check(CLI::IsMember({"z", "z_mod", "random"}));
  bench_cmd->add_option("--kmax", o.kmax, "Largest k for z / z_mod")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--count", o.count, "Number of random instances");
  bench_cmd->add_option("--cap", o.cap, "Path cap for the exact column")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--no-exact", o.no_exact, "Skip the exact column");
  bench_cmd->add_flag("--parallel", o.parallel, "Explore descendant subtrees concurrently");

  for (auto* cmd : {gen_cmd, bench_cmd}) {
    cmd->add_option("--layers", o.layers, "Random: number of layers")->check(CLI::Range(2, 64));
    cmd->add_option("--width", o.width, "Random: nodes per layer")->check(CLI::Range(1, 64));
    cmd->add_option("--p-toll", o.p_toll, "Random: toll probability as p/q");
    cmd->add_option("--cmax", o.cmax, "Random: largest arc cost")->check(CLI::Range(1, 1'000'000));
    cmd->add_option("--seed", o.seed, "Random: seed (first seed for bench)");
  }
  for (auto* cmd : {solve_cmd, exact_cmd, bound_cmd, verify_cmd, gen_cmd, alpha_cmd, bench_cmd}) {
    cmd->add_flag("--json", o.json, "Print the report as one JSON object");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (solve_cmd->parsed()) return cmd_solve(o, out);
    if (exact_cmd->parsed()) return cmd_exact(o, out);
    if (bound_cmd->parsed()) return cmd_bound(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (gen_cmd->parsed()) return cmd_gen(o, out);
    if (alpha_cmd->parsed()) return cmd_alpha(o, out);
    if (bench_cmd->parsed()) return cmd_bench(o, out);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitDiagnostic;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitDiagnostic;
  }
}

}  // namespace maxtoll
