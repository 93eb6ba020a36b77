#include "relay/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "relay/forest.hpp"
#include "relay/placement.hpp"

namespace relay {

namespace {

using Clock = std::chrono::steady_clock;

Certificate bound(std::string name, long long lhs, long long rhs) {
  return {std::move(name), lhs, rhs, lhs <= rhs};
}

Certificate identity(std::string name, long long lhs, long long rhs) {
  return {std::move(name), lhs, rhs, lhs == rhs};
}

void finish(Solution& sol, const Instance& inst, Clock::time_point start) {
  SolveReport& rep = sol.report;
  rep.nominal_count = static_cast<long long>(sol.relays.nominal_count());
  const std::vector<ColoredPoint> all = expand_colored(sol.relays, kDefaultExpandLimit, inst.tol);
  rep.relay_count = static_cast<long long>(all.size());
  for (const ColoredPoint& cp : all) {
    switch (cp.color) {
      case Color::red: ++rep.red; break;
      case Color::green: ++rep.green; break;
      case Color::yellow: ++rep.yellow; break;
      case Color::plain: ++rep.plain; break;
    }
  }
  rep.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Solution start_report(const std::string& algo, Tier tier, const Decomposition& dec) {
  Solution sol;
  sol.report.algorithm = algo;
  sol.report.tier = tier;
  sol.report.clouds = dec.cloud_count();
  sol.report.blobs = dec.blob_count();
  sol.report.clusters = dec.cloud_count();
  return sol;
}

// Prim's algorithm on the complete Euclidean graph; ties go to lower indices.
std::vector<std::pair<int, int>> euclidean_mst(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::pair<int, int>> edges;
  if (n < 2) return edges;
  std::vector<double> best(n, INFINITY);
  std::vector<int> from(n, -1);
  std::vector<char> in(n, 0);
  best[0] = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    int u = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (!in[i] && (u < 0 || best[i] < best[u])) u = static_cast<int>(i);
    }
    in[u] = 1;
    if (from[u] >= 0) edges.emplace_back(from[u], u);
    for (std::size_t i = 0; i < n; ++i) {
      if (in[i]) continue;
      const double d = dist(pts[u], pts[i]);
      if (d < best[i]) {
        best[i] = d;
        from[i] = u;
      }
    }
  }
  return edges;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

bool SolveReport::all_certificates_hold() const {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const Certificate& c) { return c.holds; });
}

Solution solve_one_tier_simple(const Instance& inst, const SolverOptions& opts) {
  const auto start = Clock::now();
  inst.validate();
  const Decomposition dec = build_decomposition(inst);
  Solution sol = start_report("one-tier-simple", Tier::one, dec);
  SolveReport& rep = sol.report;
  if (dec.blob_count() <= 1) {
    rep.notes.push_back("single blob: sensors are already connected");
    finish(sol, inst, start);
    return sol;
  }

  const StabSet stabs = greedy_stabs(inst, dec, opts.exec);
  rep.stabs = static_cast<long long>(stabs.size());
  long long hubs_total = 0;
  long long hub_budget = 0;
  bool hubs_ok = true;
  for (int c = 0; c < dec.cloud_count(); ++c) {
    const StabSet local = stabs_in_cloud(stabs, dec, c);
    const HubSet hubs = stabs_to_hubs(inst, dec, c, local);
    for (const Point& p : hubs.points) sol.relays.points.push_back({p, Color::red});
    const int s = static_cast<int>(local.size());
    const int h = static_cast<int>(hubs.points.size());
    rep.cloud_records.push_back({c, static_cast<int>(dec.blobs_in_cloud[c].size()),
                                 "greedy-stabs", s, h});
    hubs_total += h;
    hub_budget += 2 * s - 1;
    hubs_ok = hubs_ok && h <= 2 * s - 1;
  }
  rep.certificates.push_back({"hubs <= 2*stabs - 1 in every cloud", hubs_total, hub_budget, hubs_ok});

  const CloudGaps gaps(inst, dec, opts.exec);
  const ForestPlan plan = msfn(inst, dec, gaps);
  long long floors = 0;
  for (const ForestEdge& e : plan.edges) {
    const Chain chain{e.a, e.b, inst.r, Color::plain};
    sol.relays.chains.push_back(chain);
    rep.forest_relays_raw += static_cast<long long>(chain.nominal_count());
    floors += static_cast<long long>(std::floor(e.length / inst.r));
  }
  rep.certificates.push_back(identity("forest relays = 2(|C|-1) + sum floor(|e|/r)",
                                      rep.forest_relays_raw,
                                      2LL * (dec.cloud_count() - 1) + floors));
  finish(sol, inst, start);
  return sol;
}

Solution solve_one_tier_greedy(const Instance& inst, const SolverOptions& opts) {
  const auto start = Clock::now();
  inst.validate();
  if (opts.k < 1) throw std::invalid_argument("k must be >= 1");
  const Decomposition dec = build_decomposition(inst);
  Solution sol = start_report("one-tier-greedy", Tier::one, dec);
  SolveReport& rep = sol.report;
  if (dec.blob_count() <= 1) {
    rep.notes.push_back("single blob: sensors are already connected");
    finish(sol, inst, start);
    return sol;
  }

  long long exact_red = 0, exact_budget = 0, stitch_red = 0, stitch_budget = 0;
  bool exact_ok = true, stitch_ok = true;
  for (int c = 0; c < dec.cloud_count(); ++c) {
    const int blobs = static_cast<int>(dec.blobs_in_cloud[c].size());
    if (const auto ex = exact_stabs(inst, dec, c, opts.k, kExactStabBudget, opts.exec)) {
      const HubSet hubs = stabs_to_hubs(inst, dec, c, *ex);
      for (const Point& p : hubs.points) sol.relays.points.push_back({p, Color::red});
      const int i = static_cast<int>(ex->size());
      const int red = static_cast<int>(hubs.points.size());
      rep.cloud_records.push_back({c, blobs, "exact-stabs", i, red});
      rep.stabs += i;
      exact_red += red;
      exact_budget += 2 * i - 1;
      exact_ok = exact_ok && red <= 2 * i - 1;
    } else {
      const std::vector<Point> red = stitch_cloud(inst, dec, c, opts.exec);
      for (const Point& p : red) sol.relays.points.push_back({p, Color::red});
      const int count = static_cast<int>(red.size());
      rep.cloud_records.push_back({c, blobs, "stitch", 0, count});
      stitch_red += count;
      stitch_budget += blobs - 1;
      stitch_ok = stitch_ok && count <= blobs - 1;
    }
  }
  rep.certificates.push_back({"red <= 2i - 1 per exactly stabbed cloud", exact_red, exact_budget,
                              exact_ok});
  rep.certificates.push_back({"red <= |B_C| - 1 per stitched cloud", stitch_red, stitch_budget,
                              stitch_ok});

  const CloudGaps gaps(inst, dec, opts.exec);
  const ClusterState clusters = merge_clusters_green(inst, dec, gaps, {}, opts.exec);
  for (const Point& p : clusters.green_relays) sol.relays.points.push_back({p, Color::green});
  rep.certificates.push_back(bound("merge greens <= 2 * merges",
                                   static_cast<long long>(clusters.green_relays.size()),
                                   2LL * clusters.merges()));
  rep.clusters = clusters.cluster_count();

  const ForestPlan plan = msfn_prime(inst, dec, gaps, clusters);
  long long greens = static_cast<long long>(clusters.green_relays.size());
  for (const ForestEdge& e : plan.edges) {
    sol.relays.points.push_back({e.a, Color::green});
    sol.relays.points.push_back({e.b, Color::green});
    greens += 2;
    sol.relays.chains.push_back({e.a, e.b, inst.r, Color::yellow});
    rep.forest_relays_raw += e.weight;
  }
  rep.certificates.push_back(bound("greens <= 2|C| - 2", greens, 2LL * dec.cloud_count() - 2));
  if (clusters.phase3_capped) rep.notes.push_back("four-cluster search stopped at its pair cap");
  finish(sol, inst, start);
  return sol;
}

Sparsity is_sparse(const Instance& inst, int m, Exec exec) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  Sparsity sp;
  sp.D = max_pairwise_distance(inst.sensors, exec) - 1.0;
  sp.threshold = static_cast<double>(m) * static_cast<double>(inst.sensors.size()) * inst.r;
  sp.sparse = sp.D >= sp.threshold;
  return sp;
}

Solution solve_two_tier_sparse(const Instance& inst, const SolverOptions& opts) {
  const auto start = Clock::now();
  inst.validate();
  const std::size_t n = inst.sensors.size();
  if (n < 2) throw std::domain_error("two-tier-sparse needs at least 2 sensors");
  const Sparsity sp = is_sparse(inst, opts.m, opts.exec);
  if (!sp.sparse) {
    throw std::domain_error("instance is dense: D = " + fmt_double(sp.D) + " < m*n*r = " +
                            fmt_double(sp.threshold));
  }
  const Decomposition dec = build_decomposition(inst);
  Solution sol = start_report("two-tier-sparse", Tier::two, dec);

  const double s = sp.D / (static_cast<double>(n) * opts.m);
  Point origin = inst.sensors[0];
  for (const Point& p : inst.sensors) {
    origin.x = std::min(origin.x, p.x);
    origin.y = std::min(origin.y, p.y);
  }
  std::vector<Point> rounded;
  for (const Point& p : inst.sensors) {
    rounded.push_back({origin.x + s * std::round((p.x - origin.x) / s),
                       origin.y + s * std::round((p.y - origin.y) / s)});
  }
  std::vector<Point> nodes;
  for (int i : lex_order(rounded)) {
    if (nodes.empty() || !(nodes.back() == rounded[i])) nodes.push_back(rounded[i]);
  }

  for (const auto& [a, b] : euclidean_mst(nodes)) {
    sol.relays.chains.push_back({nodes[a], nodes[b], inst.r, Color::plain});
  }
  for (std::size_t i = 0; i < n; ++i) {
    sol.relays.chains.push_back({inst.sensors[i], rounded[i], inst.r, Color::plain});
  }
  sol.report.notes.push_back("grid spacing s = " + fmt_double(s) + ", D = " + fmt_double(sp.D));
  sol.report.notes.push_back(
      "tree over rounded sensors is a minimum spanning tree, so the factor is a constant rather "
      "than 1 + O(1/m)");
  finish(sol, inst, start);
  return sol;
}

Solution solve_two_tier_cover_connect(const Instance& inst, const SolverOptions& opts) {
  const auto start = Clock::now();
  inst.validate();
  const Decomposition dec = build_decomposition(inst);
  Solution sol = start_report("two-tier-cover", Tier::two, dec);
  const std::size_t n = inst.sensors.size();

  const std::vector<Point> raw = candidate_points(inst.sensors, 1.0, inst.tol);
  std::vector<Point> cand;
  for (int i : lex_order(raw)) cand.push_back(raw[i]);
  std::vector<int> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<int>(i);
  const auto covers = coverage_sets(cand, inst.sensors, ids, 1.0, inst.tol, opts.exec);

  std::vector<char> covered(n, 0);
  std::size_t remaining = n;
  std::vector<Point> cover;
  while (remaining > 0) {
    int best = -1;
    int best_gain = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      int gain = 0;
      for (int s : covers[i]) gain += !covered[s];
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) throw std::logic_error("cover: a sensor has no candidate");
    for (int s : covers[best]) {
      if (!covered[s]) {
        covered[s] = 1;
        --remaining;
      }
    }
    cover.push_back(cand[best]);
    sol.relays.points.push_back({cand[best], Color::red});
  }
  for (const auto& [a, b] : euclidean_mst(cover)) {
    sol.relays.chains.push_back({cover[a], cover[b], inst.r, Color::yellow});
  }
  finish(sol, inst, start);
  return sol;
}

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"one-tier-simple", "one-tier-greedy",
                                              "two-tier-sparse", "two-tier-cover"};
  return names;
}

Tier algorithm_tier(const std::string& name) {
  if (name == "one-tier-simple" || name == "one-tier-greedy") return Tier::one;
  if (name == "two-tier-sparse" || name == "two-tier-cover") return Tier::two;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

Solution solve(const std::string& algorithm, const Instance& inst, const SolverOptions& opts) {
  if (algorithm == "one-tier-simple") return solve_one_tier_simple(inst, opts);
  if (algorithm == "one-tier-greedy") return solve_one_tier_greedy(inst, opts);
  if (algorithm == "two-tier-sparse") return solve_two_tier_sparse(inst, opts);
  if (algorithm == "two-tier-cover") return solve_two_tier_cover_connect(inst, opts);
  throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
}

}  // namespace relay
