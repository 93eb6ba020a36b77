// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every criterion is run twice; criterion 10 compares the files written by the
// two passes byte for byte.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "relay/bruteforce.hpp"
#include "relay/decomposition.hpp"
#include "relay/forest.hpp"
#include "relay/instances.hpp"
#include "relay/io.hpp"
#include "relay/solvers.hpp"
#include "relay/verify.hpp"

using namespace relay;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Result {
  bool pass = true;
  std::string detail;
};

void fail(Result& r, const std::string& why) {
  if (r.pass) r.detail = why;
  r.pass = false;
}

// Everything a pass writes, keyed by file name. Written to disk per pass and
// compared for criterion 10.
using Artifacts = std::map<std::string, std::string>;

void record(Artifacts& out, const std::string& name, const Instance& inst, const Solution& sol) {
  const bool feasible = check_feasibility(inst, sol.relays, sol.report.tier).feasible;
  out[name + ".solution.json"] = solution_to_json(sol.relays);
  out[name + ".report.json"] = report_to_json(sol.report, lower_bounds(inst), feasible);
}

Instance scaled(const Instance& inst, double factor) {
  Instance out = inst;
  for (Point& p : out.sensors) p = factor * p;
  return out;
}

// Sensor set spread out until D >= m * n * r, so the sparse solver applies.
Instance sparse_companion(const Instance& inst, int m) {
  const Sparsity sp = is_sparse(inst, m);
  if (sp.sparse) return inst;
  const double diam = sp.D + 1.0;
  const double factor = 1.01 * (sp.threshold + 1.0) / std::max(diam, 1e-6);
  return scaled(inst, std::max(factor, 1.0));
}

struct SweepRun {
  std::string name;
  Instance inst;
  Solution sol;
};

struct Sweep {
  std::vector<SweepRun> runs;
  double seconds = 0.0;
  int infeasible = 0;
  std::string first_infeasible;
};

Sweep run_sweep(Artifacts& out) {
  const int ns[] = {20, 100, 200};
  const double rs[] = {1.0, 2.0, 4.0};
  Sweep sw;
  const auto start = Clock::now();
  for (int i = 0; i < 60; ++i) {
    const int n = ns[i % 3];
    const double r = rs[(i / 3) % 3];
    const double width = 1.5 * std::sqrt(static_cast<double>(n)) * (1.0 + (i / 9) % 3);
    const Instance inst = gen_uniform(n, width, r, static_cast<std::uint64_t>(i));
    for (const std::string& algo : algorithm_names()) {
      const Instance use = algo == "two-tier-sparse" ? sparse_companion(inst, 4) : inst;
      SweepRun run{"c1_" + std::to_string(i) + "_" + algo, use, solve(algo, use)};
      if (!check_feasibility(use, run.sol.relays, run.sol.report.tier).feasible) {
        if (sw.infeasible++ == 0) sw.first_infeasible = run.name;
      }
      record(out, run.name, use, run.sol);
      sw.runs.push_back(std::move(run));
    }
  }
  sw.seconds = seconds_since(start);
  return sw;
}

Result criterion1(const Sweep& sw) {
  Result r;
  if (sw.infeasible > 0) {
    fail(r, std::to_string(sw.infeasible) + " infeasible runs, first " + sw.first_infeasible);
  }
  if (sw.seconds >= 120.0) fail(r, "sweep took " + std::to_string(sw.seconds) + " s");
  if (r.pass) {
    r.detail = std::to_string(sw.runs.size()) + " runs feasible in " +
               std::to_string(static_cast<int>(sw.seconds * 1000)) + " ms";
  }
  return r;
}

Result criterion2(const Sweep& sw) {
  Result r;
  int clouds = 0;
  for (const SweepRun& run : sw.runs) {
    for (const CloudRecord& rec : run.sol.report.cloud_records) {
      if (rec.method == "stitch") continue;
      ++clouds;
      if (rec.red > 2 * rec.stabs - 1) {
        fail(r, run.name + " cloud " + std::to_string(rec.cloud) + ": " + std::to_string(rec.red) +
                    " hubs from " + std::to_string(rec.stabs) + " stabs");
      }
    }
  }
  if (r.pass) r.detail = std::to_string(clouds) + " stabbed clouds, 0 violations";
  return r;
}

Result criterion3(const Sweep& sw) {
  Result r;
  int clouds = 0;
  for (const SweepRun& run : sw.runs) {
    for (const CloudRecord& rec : run.sol.report.cloud_records) {
      if (rec.method != "stitch") continue;
      ++clouds;
      if (rec.red > rec.blobs - 1) {
        fail(r, run.name + " cloud " + std::to_string(rec.cloud) + ": " + std::to_string(rec.red) +
                    " red for " + std::to_string(rec.blobs) + " blobs");
      }
    }
  }
  if (r.pass) r.detail = std::to_string(clouds) + " stitched clouds, 0 violations";
  return r;
}

Result criterion4(const Sweep& sw) {
  Result r;
  int runs = 0;
  for (const SweepRun& run : sw.runs) {
    if (run.sol.report.algorithm != "one-tier-greedy") continue;
    ++runs;
    const Decomposition dec = build_decomposition(run.inst);
    long long greens = 0;
    for (const ColoredPoint& cp : expand_colored(run.sol.relays)) greens += cp.color == Color::green;
    const long long cap = dec.blob_count() <= 1 ? 0 : 2LL * dec.cloud_count() - 2;
    if (greens > cap) {
      fail(r, run.name + ": " + std::to_string(greens) + " greens > " + std::to_string(cap));
    }
  }
  if (r.pass) r.detail = std::to_string(runs) + " greedy runs, 0 violations";
  return r;
}

Result criterion5(const Sweep& sw) {
  Result r;
  int runs = 0;
  for (const SweepRun& run : sw.runs) {
    if (run.sol.report.algorithm != "one-tier-simple") continue;
    ++runs;
    const Decomposition dec = build_decomposition(run.inst);
    long long expect = 0;
    if (dec.blob_count() > 1) {
      expect = 2LL * (dec.cloud_count() - 1);
      for (const ForestEdge& e : msfn(run.inst, dec).edges) {
        expect += static_cast<long long>(std::floor(dist(e.a, e.b) / run.inst.r));
      }
    }
    long long chains = 0;
    for (const Chain& c : run.sol.relays.chains) chains += static_cast<long long>(c.nominal_count());
    if (chains != expect || run.sol.report.forest_relays_raw != expect) {
      fail(r, run.name + ": forest relays " + std::to_string(chains) + " (reported " +
                  std::to_string(run.sol.report.forest_relays_raw) + ") vs " +
                  std::to_string(expect));
    }
  }
  if (r.pass) r.detail = std::to_string(runs) + " exact matches";
  return r;
}

Result criterion6(Artifacts& out) {
  Result r;
  const auto start = Clock::now();
  Rng rng(6);
  int evaluated = 0, skipped = 0;
  double worst = 0.0;
  int by_size[5] = {};
  for (int attempt = 0; evaluated < 50 && attempt < 500; ++attempt) {
    const int n = 2 + attempt % 5;
    const double rr = attempt % 2 == 0 ? 1.0 : 2.0;
    Instance inst;
    inst.r = rr;
    const double width = 2.0 + attempt % 3;
    for (int i = 0; i < n; ++i) inst.sensors.push_back({rng.uniform(0, width), rng.uniform(0, width)});
    const auto best = optimum_bruteforce(inst, 4, Tier::one);
    if (!best) {
      ++skipped;
      continue;
    }
    ++evaluated;
    const std::string tag = "c6_" + std::to_string(attempt);
    const long long opt = static_cast<long long>(best->points.size());
    ++by_size[opt];
    out[tag + ".bruteforce.json"] = solution_to_json(*best);
    const long long lb = lower_bounds(inst).max_lower_bound;
    if (lb > opt) fail(r, tag + ": lower bound " + std::to_string(lb) + " > optimum " + std::to_string(opt));
    for (const std::string& algo : algorithm_names()) {
      if (algo == "two-tier-sparse" && !is_sparse(inst, 4).sparse) continue;
      const Solution sol = solve(algo, inst);
      record(out, tag + "_" + algo, inst, sol);
      if (sol.report.relay_count < opt) {
        fail(r, tag + ": " + algo + " count " + std::to_string(sol.report.relay_count) +
                    " < optimum " + std::to_string(opt));
      }
      if (algo == "one-tier-simple") {
        if (static_cast<double>(sol.report.relay_count) > 6.73 * static_cast<double>(opt) + 1.0) {
          fail(r, tag + ": simple count " + std::to_string(sol.report.relay_count) +
                      " > 6.73 * " + std::to_string(opt) + " + 1");
        }
        if (opt > 0) worst = std::max(worst, static_cast<double>(sol.report.relay_count) / opt);
      }
    }
  }
  const double secs = seconds_since(start);
  if (evaluated < 50) fail(r, "only " + std::to_string(evaluated) + " instances resolved by the oracle");
  if (secs >= 300.0) fail(r, "took " + std::to_string(secs) + " s");
  if (r.pass) {
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "%d instances (optimum 0/1/2/3/4: %d/%d/%d/%d/%d, %d skipped), worst "
                  "simple/opt %.2f, %.1f s",
                  evaluated, by_size[0], by_size[1], by_size[2], by_size[3], by_size[4], skipped,
                  worst, secs);
    r.detail = buf;
  }
  return r;
}

Result criterion7(Artifacts& out) {
  Result r;
  std::string ratios;
  for (int b : {5, 10, 20}) {
    const Figure8 f = gen_figure8(b, 4.0);
    const std::string tag = "c7_b" + std::to_string(b);
    out[tag + ".instance.json"] = instance_to_json(f.instance);
    out[tag + ".certificate.json"] = solution_to_json(f.certificate);
    if (f.certificate.nominal_count() != static_cast<std::uint64_t>(b) ||
        !check_one_tier(f.instance, f.certificate)) {
      fail(r, tag + ": certificate of " + std::to_string(b) + " relays rejected");
    }
    const Solution sol = solve_one_tier_greedy(f.instance);
    record(out, tag + "_greedy", f.instance, sol);
    if (!check_one_tier(f.instance, sol.relays)) fail(r, tag + ": greedy solution infeasible");
    const double ratio = static_cast<double>(sol.report.relay_count) / b;
    if (ratio < 1.0 || ratio > 3.2) fail(r, tag + ": ratio " + std::to_string(ratio));
    char buf[48];
    std::snprintf(buf, sizeof buf, "%sb=%d: %.2f", ratios.empty() ? "" : ", ", b, ratio);
    ratios += buf;
  }
  if (r.pass) r.detail = "greedy/b " + ratios;
  return r;
}

std::vector<std::vector<int>> complete_graph(int n) {
  std::vector<std::vector<int>> adj(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) adj[a].push_back(b);
    }
  }
  return adj;
}

Result criterion8(Artifacts& out) {
  Result r;
  struct Case {
    int n;
    std::vector<int> cover;
    int blobs;
    int relays;
  };
  const Case cases[] = {{3, {0, 1}, 13, 9}, {4, {0, 1, 2}, 25, 16}};
  std::string detail;
  for (const Case& c : cases) {
    const std::string tag = "c8_K" + std::to_string(c.n);
    const Hardness h = gen_hardness(complete_graph(c.n), c.cover);
    out[tag + ".instance.json"] = instance_to_json(h.instance);
    RelaySet cert;
    for (const Point& p : h.certificate.relay_points) cert.points.push_back({p, Color::plain});
    out[tag + ".certificate.json"] = solution_to_json(cert);
    const int blobs = build_decomposition(h.instance).blob_count();
    const int relays = static_cast<int>(expand_relays(cert).size());
    const int edges = c.n * (c.n - 1) / 2;
    if (blobs != 4 * edges + 1 || blobs != c.blobs) {
      fail(r, tag + ": " + std::to_string(blobs) + " blobs");
    }
    if (relays != static_cast<int>(c.cover.size()) + 2 * edges + 1 || relays != c.relays) {
      fail(r, tag + ": certificate has " + std::to_string(relays) + " relays");
    }
    if (!check_one_tier(h.instance, cert)) fail(r, tag + ": certificate infeasible");
    detail += (detail.empty() ? "" : ", ") + tag.substr(3) + ": " + std::to_string(blobs) +
              " blobs / " + std::to_string(relays) + " relays";
  }
  if (r.pass) r.detail = detail;
  return r;
}

Result criterion9(Artifacts& out) {
  Result r;
  Instance inst;
  inst.sensors = {{0, 0}, {1000, 0}};
  inst.r = 2.0;
  SolverOptions opts;
  opts.m = 4;
  const Solution sol = solve_two_tier_sparse(inst, opts);
  record(out, "c9_sparse", inst, sol);
  const long long count = static_cast<long long>(expand_relays(sol.relays).size());
  if (count < 500 || count > 510) fail(r, "expanded count " + std::to_string(count));
  if (!check_two_tier(inst, sol.relays)) fail(r, "solution infeasible");
  const double lb = is_sparse(inst, 4).D / inst.r;
  if (r.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%lld relays, ratio to D/r %.4f", count, count / lb);
    r.detail = buf;
  }
  return r;
}

struct Pass {
  std::vector<Result> results;
  Artifacts files;
};

Pass run_pass() {
  Pass p;
  const Sweep sw = run_sweep(p.files);
  p.results.push_back(criterion1(sw));
  p.results.push_back(criterion2(sw));
  p.results.push_back(criterion3(sw));
  p.results.push_back(criterion4(sw));
  p.results.push_back(criterion5(sw));
  p.results.push_back(criterion6(p.files));
  p.results.push_back(criterion7(p.files));
  p.results.push_back(criterion8(p.files));
  p.results.push_back(criterion9(p.files));
  return p;
}

void write_all(const fs::path& dir, const Artifacts& files) {
  fs::create_directories(dir);
  for (const auto& [name, text] : files) write_text((dir / name).string(), text);
}

Result criterion10(const fs::path& a, const fs::path& b, std::size_t expected) {
  Result r;
  std::size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    const fs::path other = b / entry.path().filename();
    if (!fs::exists(other)) {
      fail(r, entry.path().filename().string() + " missing from second run");
      continue;
    }
    ++compared;
    if (read_text(entry.path().string()) != read_text(other.string())) {
      fail(r, entry.path().filename().string() + " differs between runs");
    }
  }
  if (compared != expected) fail(r, "compared " + std::to_string(compared) + " of " + std::to_string(expected) + " files");
  if (r.pass) r.detail = std::to_string(compared) + " files byte-identical";
  return r;
}

}  // namespace

int main() {
  const fs::path root = fs::temp_directory_path() / "relay_acceptance";
  fs::remove_all(root);

  Pass first;
  Pass second;
  try {
    first = run_pass();
    write_all(root / "run1", first.files);
    second = run_pass();
    write_all(root / "run2", second.files);
  } catch (const std::exception& e) {
    std::printf("FAIL  acceptance run aborted: %s\n", e.what());
    return 1;
  }

  std::vector<Result> results = first.results;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!second.results[i].pass) fail(results[i], "second run: " + second.results[i].detail);
  }
  results.push_back(criterion10(root / "run1", root / "run2", first.files.size()));

  static const char* titles[] = {
      "feasibility sweep",         "hubs <= 2|stabs| - 1",      "stitch red <= |B_C| - 1",
      "greens <= 2|C| - 2",        "forest relay identity",     "lower-bound sandwich",
      "figure-eight family",       "hardness gadget",           "sparse two-tier line",
      "determinism"};
  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    std::printf("%s  C%-2zu %-26s %s\n", results[i].pass ? "PASS" : "FAIL", i + 1, titles[i],
                results[i].detail.c_str());
    failed += !results[i].pass;
  }
  fs::remove_all(root);
  return failed == 0 ? 0 : 1;
}
