#include <iostream>

#include "CLI11.hpp"
#include "tdom/app.hpp"

using namespace tdom;

int main(int argc, char** argv) {
  CLI::App cli{"Domination numbers of direct products of complete multipartite graphs and unitary Cayley graphs"};
  cli.require_subcommand(1);
  cli.fallthrough();

  app::Options opts;
  std::uint64_t nodes = opts.budget.max_nodes;
  double time_limit = 60;
  bool no_cache = false;
  cli.add_option("--nodes", nodes, "search node budget per instance")->capture_default_str();
  cli.add_option("--time-limit", time_limit, "seconds per instance")->capture_default_str();
  cli.add_flag("--deterministic", opts.budget.deterministic, "report the lexicographically smallest optimal witness");
  cli.add_flag("--no-cache", no_cache, "neither read nor write the result cache");
  cli.add_option("--cache", opts.cache_path, "cache file (default $TDOM_CACHE or ~/.cache/tdom/results.jsonl)");
  cli.add_flag("--table", opts.table, "aligned columns instead of JSON lines");
  cli.add_option("-j,--jobs", opts.jobs, "worker threads for scan and reproduce (0 = all cores)");

  std::string quantity = "gamma", descriptor, name, param, suite, target, range;
  std::int64_t m = 0, j = 1, p1 = 0, p2 = 0;
  int family = 0;
  std::uint64_t scan_limit = theory::WitnessOptions{}.scan_limit;

  auto* solve = cli.add_subcommand("solve", "exact gamma, gammat or upper for one graph");
  solve->add_option("quantity", quantity, "gamma | gammat | upper")->required();
  solve->add_option("descriptor", descriptor, "e.g. ucg:30 or K[1,2]xK[1,3]")->required();

  auto* bounds = cli.add_subcommand("bounds", "proven interval with the rules that give it");
  bounds->add_option("descriptor", descriptor)->required();
  bounds->add_option("--quantity", quantity, "gamma | upper")->capture_default_str();

  auto* construct = cli.add_subcommand("construct", "build and verify an explicit vertex set");
  construct->add_option("name", name, "consecutive | diagonal | theorem3 | cube-corner | prop2")->required();
  construct->add_option("param", param, "n for consecutive, otherwise a product descriptor")->required();
  construct->add_option("--m", m, "diagonal: extra vertices beyond t+1")->capture_default_str();

  auto* witness = cli.add_subcommand("witness", "certificates that n lies in M or M_t");
  witness->require_subcommand(1);
  witness->fallthrough();
  auto* thm6 = witness->add_subcommand("thm6", "n with omega(n) >= j and gamma_t(X_n) < g(n)");
  thm6->add_option("--j", j, "required number of prime factors")->required();
  thm6->add_option("--scan-limit", scan_limit, "largest n also verified by a full residue scan")->capture_default_str();
  auto* prop1 = witness->add_subcommand("prop1", "n = 2 p1 p2 or 6 p1 p2 with gamma(X_n) < g(n)");
  prop1->add_option("--family", family, "1 or 2")->required();
  prop1->add_option("--p1", p1)->required();
  prop1->add_option("--p2", p2)->required();

  auto* conjecture = cli.add_subcommand("conjecture", "compare exact upper domination with n / b_1");
  conjecture->add_option("descriptor", descriptor)->required();

  auto* jacobsthal = cli.add_subcommand("jacobsthal", "g(n) and a longest run of non-coprime residues");
  jacobsthal->add_option("n", range, "n or a..b")->required();

  auto* reproduce = cli.add_subcommand("reproduce", "solver against closed forms, as CSV");
  reproduce->add_option("suite", suite, "eq7 | thm1 | thm4 | upperdom-small | gammat")->required();

  auto* scan = cli.add_subcommand("scan", "search a range for members of M or M_t");
  scan->add_option("target", target, "M | Mt")->required();
  scan->add_option("range", range, "a..b")->required();
  scan->add_flag("--all", opts.all, "also report non-members");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : app::bad_input;
  }

  opts.budget.max_nodes = nodes;
  opts.budget.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(time_limit * 1000));
  opts.use_cache = !no_cache;

  return app::guarded(std::cerr, [&] {
    app::Context cx(opts, std::cout, std::cerr);
    if (*solve) return app::cmd_solve(cx, quantity, descriptor);
    if (*bounds) return app::cmd_bounds(cx, descriptor, quantity);
    if (*construct) return app::cmd_construct(cx, name, param, m);
    if (*thm6) return app::cmd_witness_thm6(cx, j, scan_limit);
    if (*prop1) return app::cmd_witness_prop1(cx, family, p1, p2);
    if (*conjecture) return app::cmd_conjecture(cx, descriptor);
    if (*jacobsthal) return app::cmd_jacobsthal(cx, range);
    if (*reproduce) return app::cmd_reproduce(cx, suite);
    return app::cmd_scan(cx, target, range);
  });
}
