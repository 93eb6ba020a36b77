// relayctl: solve, check, bound, generate and draw relay placement instances.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relay/bruteforce.hpp"
#include "relay/errors.hpp"
#include "relay/instances.hpp"
#include "relay/io.hpp"
#include "relay/render.hpp"
#include "relay/solvers.hpp"
#include "relay/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Config {
  std::string input;
  std::string output;
  std::string solution;
  std::string report;
  std::string certificate;
  std::string algorithm = "one-tier-greedy";
  std::string tier = "one";
  int k = 3;
  int m = 4;
  double eps = 1e-9;
  double exact_stab_limit = relay::kExactStabLimit;
  bool serial = false;
  int max_relays = 4;
  // generate
  int n = 50;
  int groups = 5;
  int b = 5;
  double width = 10.0;
  double spread = 1.0;
  double r = 2.0;
  std::uint64_t seed = 1;
  std::string graph;
  std::vector<int> cover;
  int vertices = 0;
  bool no_disks = false;
  bool no_hulls = false;
};

relay::Tier parse_tier(const std::string& t) { return t == "two" ? relay::Tier::two : relay::Tier::one; }

relay::Instance load(const Config& cfg) {
  relay::Instance inst = relay::read_instance(cfg.input);
  inst.tol.eps = cfg.eps;
  inst.validate();
  return inst;
}

void print_feasibility(const relay::Feasibility& f) {
  if (f.feasible) {
    std::cout << "feasible (" << f.relays << " relays)\n";
    return;
  }
  std::cout << "infeasible";
  if (f.uncovered) std::cout << ": sensor " << *f.uncovered << " has no relay within 1";
  if (f.disconnected) {
    std::cout << (f.uncovered ? "; " : ": ") << "sensors " << f.disconnected->first << " and "
              << f.disconnected->second << " are disconnected";
  }
  std::cout << "\n";
}

int cmd_solve(const Config& cfg) {
  const relay::Instance inst = load(cfg);
  relay::SolverOptions opts;
  opts.k = cfg.k;
  opts.m = cfg.m;
  opts.exec = cfg.serial ? relay::Exec::serial : relay::Exec::parallel;
  relay::Solution sol;
  try {
    sol = relay::solve(cfg.algorithm, inst, opts);
  } catch (const std::domain_error& e) {
    std::cerr << "relayctl: " << e.what() << "\n";
    return kFailed;
  }
  const relay::Feasibility f =
      relay::check_feasibility(inst, sol.relays, relay::algorithm_tier(cfg.algorithm));
  const relay::BoundsReport bounds = relay::lower_bounds(inst, cfg.exact_stab_limit);

  if (!cfg.output.empty()) relay::write_solution(cfg.output, sol.relays);
  if (!cfg.report.empty()) {
    relay::write_text(cfg.report, relay::report_to_json(sol.report, bounds, f.feasible));
  }
  std::cout << relay::report_to_text(sol.report, bounds, f.feasible);
  if (!f.feasible) {
    print_feasibility(f);
    return kFailed;
  }
  return sol.report.all_certificates_hold() ? kOk : kFailed;
}

int cmd_verify(const Config& cfg) {
  const relay::Instance inst = load(cfg);
  const relay::RelaySet rs = relay::read_solution(cfg.solution);
  const relay::Feasibility f = relay::check_feasibility(inst, rs, parse_tier(cfg.tier));
  print_feasibility(f);
  return f.feasible ? kOk : kFailed;
}

int cmd_bounds(const Config& cfg) {
  const relay::Instance inst = load(cfg);
  const relay::BoundsReport b = relay::lower_bounds(inst, cfg.exact_stab_limit);
  std::cout << "lb_forest " << b.lb_forest << "\nlb_stab " << b.lb_stab << " (" << b.stab_mode
            << ")\nlb_clouds " << b.lb_clouds << "\nmax_lower_bound " << b.max_lower_bound
            << "\n";
  return kOk;
}

std::vector<std::vector<int>> parse_graph(const std::string& edges_text, int vertices) {
  std::vector<std::pair<int, int>> edges;
  int nv = vertices;
  std::stringstream ss(edges_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw relay::ParseError("--graph: expected u-v, got '" + item + "'");
    const int u = std::stoi(item.substr(0, dash));
    const int v = std::stoi(item.substr(dash + 1));
    edges.emplace_back(u, v);
    nv = std::max({nv, u + 1, v + 1});
  }
  std::vector<std::vector<int>> adj(nv);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

int cmd_generate(const std::string& kind, const Config& cfg) {
  relay::Instance inst;
  relay::RelaySet cert;
  if (kind == "uniform") {
    inst = relay::gen_uniform(cfg.n, cfg.width, cfg.r, cfg.seed);
  } else if (kind == "clustered") {
    inst = relay::gen_clustered(cfg.n, cfg.groups, cfg.width, cfg.spread, cfg.r, cfg.seed);
  } else if (kind == "figure8") {
    relay::Figure8 f = relay::gen_figure8(cfg.b, cfg.r);
    inst = f.instance;
    cert = f.certificate;
  } else {
    relay::Hardness h = relay::gen_hardness(parse_graph(cfg.graph, cfg.vertices), cfg.cover);
    inst = h.instance;
    for (const relay::Point& p : h.certificate.relay_points) cert.points.push_back({p, relay::Color::plain});
    std::cout << "blobs " << h.expected_blobs << ", certificate relays "
              << h.certificate.expected_count << "\n";
  }
  relay::write_instance(cfg.output, inst);
  if (!cfg.certificate.empty()) relay::write_solution(cfg.certificate, cert);
  return kOk;
}

int cmd_render(const Config& cfg) {
  const relay::Instance inst = load(cfg);
  relay::RenderOptions opts;
  opts.disks = !cfg.no_disks;
  opts.hulls = !cfg.no_hulls;
  if (cfg.solution.empty()) {
    relay::write_text(cfg.output, relay::render_svg(inst, nullptr, opts));
  } else {
    const relay::RelaySet rs = relay::read_solution(cfg.solution);
    relay::write_text(cfg.output, relay::render_svg(inst, &rs, opts));
  }
  return kOk;
}

int cmd_bruteforce(const Config& cfg) {
  const relay::Instance inst = load(cfg);
  const auto best = relay::optimum_bruteforce(
      inst, cfg.max_relays, parse_tier(cfg.tier),
      cfg.serial ? relay::Exec::serial : relay::Exec::parallel);
  if (!best) {
    std::cout << "no solution with at most " << cfg.max_relays << " candidate relays\n";
    return kFailed;
  }
  std::cout << "optimum over candidates: " << best->points.size() << " relays\n";
  if (!cfg.output.empty()) relay::write_solution(cfg.output, *best);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relay placement for sensor networks"};
  app.require_subcommand(1);
  Config cfg;

  auto* solve = app.add_subcommand("solve", "Place relays and write a solution and report");
  solve->add_option("-i,--input", cfg.input, "Instance file")->required();
  solve->add_option("-o,--output", cfg.output, "Solution file");
  solve->add_option("--report", cfg.report, "Machine-readable report file");
  solve->add_option("--algo", cfg.algorithm, "Algorithm")
      ->check(CLI::IsMember(relay::algorithm_names()));
  solve->add_option("--k", cfg.k, "Exact stabbing threshold (greedy)")->check(CLI::PositiveNumber);
  solve->add_option("--m", cfg.m, "Grid parameter (sparse two-tier)")->check(CLI::PositiveNumber);
  solve->add_option("--exact-stab-limit", cfg.exact_stab_limit, "Subset budget for lb_stab");
  solve->add_flag("--serial", cfg.serial, "Use the serial kernels");

  auto* verify = app.add_subcommand("verify", "Check a solution for feasibility");
  verify->add_option("-i,--input", cfg.input, "Instance file")->required();
  verify->add_option("-s,--solution", cfg.solution, "Solution file")->required();
  verify->add_option("--tier", cfg.tier, "one or two")->check(CLI::IsMember({"one", "two"}));

  auto* bounds = app.add_subcommand("bounds", "Print lower bounds");
  bounds->add_option("-i,--input", cfg.input, "Instance file")->required();
  bounds->add_option("--exact-stab-limit", cfg.exact_stab_limit, "Subset budget for lb_stab");

  auto* generate = app.add_subcommand("generate", "Write a generated instance");
  std::string kind = "uniform";
  generate->add_option("kind", kind, "uniform, clustered, figure8 or hardness")
      ->check(CLI::IsMember({"uniform", "clustered", "figure8", "hardness"}));
  generate->add_option("-o,--output", cfg.output, "Instance file")->required();
  generate->add_option("--certificate", cfg.certificate, "Certificate solution file");
  generate->add_option("--n", cfg.n, "Sensor count");
  generate->add_option("--groups", cfg.groups, "Cluster count");
  generate->add_option("--width", cfg.width, "Square side");
  generate->add_option("--spread", cfg.spread, "Cluster radius");
  generate->add_option("--r", cfg.r, "Relay range");
  generate->add_option("--seed", cfg.seed, "Random seed");
  generate->add_option("--b", cfg.b, "Blob count (figure8)");
  generate->add_option("--graph", cfg.graph, "Edges as u-v,u-v,... (hardness)");
  generate->add_option("--vertices", cfg.vertices, "Vertex count, for isolated vertices");
  generate->add_option("--cover", cfg.cover, "Vertex cover (hardness)")->delimiter(',');

  auto* render = app.add_subcommand("render", "Draw an instance and solution as SVG");
  render->add_option("-i,--input", cfg.input, "Instance file")->required();
  render->add_option("-s,--solution", cfg.solution, "Solution file");
  render->add_option("-o,--output", cfg.output, "SVG file")->required();
  render->add_flag("--no-disks", cfg.no_disks, "Omit sensor disks");
  render->add_flag("--no-hulls", cfg.no_hulls, "Omit blob and cloud hulls");

  auto* brute = app.add_subcommand("bruteforce", "Smallest candidate solution (tiny inputs)");
  brute->add_option("-i,--input", cfg.input, "Instance file")->required();
  brute->add_option("-o,--output", cfg.output, "Solution file");
  brute->add_option("--tier", cfg.tier, "one or two")->check(CLI::IsMember({"one", "two"}));
  brute->add_option("--max", cfg.max_relays, "Largest subset size (<= 4)")->check(CLI::Range(0, 4));
  brute->add_flag("--serial", cfg.serial, "Search serially");

  auto* eps = app.add_option("--eps", cfg.eps, "Distance tolerance");
  eps->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (bounds->parsed()) return cmd_bounds(cfg);
    if (generate->parsed()) return cmd_generate(kind, cfg);
    if (render->parsed()) return cmd_render(cfg);
    if (brute->parsed()) return cmd_bruteforce(cfg);
  } catch (const relay::ParseError& e) {
    std::cerr << "relayctl: " << e.what() << "\n";
    return kUsage;
  } catch (const relay::LimitError& e) {
    std::cerr << "relayctl: " << e.what() << "\n";
    return kFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "relayctl: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "relayctl: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
