#include "relay/io.hpp"

#include <charconv>
#include <fstream>
#include "json.hpp"
#include <sstream>
#include <stdexcept>

#include "relay/errors.hpp"

namespace relay {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) line += text[i] == '\n';
  return std::to_string(line);
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("line " + line_of(text, e.byte) + ": malformed JSON (" + e.what() + ")");
  }
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  return v.get<double>();
}

double number_field(const json& obj, const std::string& key, const std::string& where) {
  return number(field(obj, key, where), where + "." + key);
}

Color color_field(const json& obj, const std::string& where, bool required) {
  auto it = obj.find("color");
  if (it == obj.end()) {
    if (required) throw ParseError(where + ": missing field 'color'");
    return Color::plain;
  }
  if (!it->is_string()) throw ParseError(where + ".color: expected a string");
  try {
    return parse_color(it->get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ".color: " + e.what());
  }
}

std::string tier_name(Tier t) { return t == Tier::one ? "one" : "two"; }

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string instance_to_json(const Instance& inst) {
  std::string out = "{\n  \"r\": " + format_double(inst.r) + ",\n  \"sensors\": [";
  for (std::size_t i = 0; i < inst.sensors.size(); ++i) {
    out += i == 0 ? "\n    [" : ",\n    [";
    out += format_double(inst.sensors[i].x) + ", " + format_double(inst.sensors[i].y) + "]";
  }
  out += inst.sensors.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

Instance instance_from_json(std::string_view text) {
  const json doc = parse(text);
  Instance inst;
  inst.r = number_field(doc, "r", "instance");
  const json& sensors = field(doc, "sensors", "instance");
  if (!sensors.is_array()) throw ParseError("instance.sensors: expected an array");
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    const std::string where = "instance.sensors[" + std::to_string(i) + "]";
    const json& s = sensors[i];
    if (!s.is_array() || s.size() != 2) throw ParseError(where + ": expected an [x, y] pair");
    inst.sensors.push_back({number(s[0], where), number(s[1], where)});
  }
  return inst;
}

std::string solution_to_json(const RelaySet& rs) {
  std::string out = "{\n  \"points\": [";
  for (std::size_t i = 0; i < rs.points.size(); ++i) {
    const ColoredPoint& cp = rs.points[i];
    out += i == 0 ? "\n    " : ",\n    ";
    out += "{\"x\": " + format_double(cp.p.x) + ", \"y\": " + format_double(cp.p.y) +
           ", \"color\": \"" + std::string(color_name(cp.color)) + "\"}";
  }
  out += rs.points.empty() ? "],\n  \"chains\": [" : "\n  ],\n  \"chains\": [";
  for (std::size_t i = 0; i < rs.chains.size(); ++i) {
    const Chain& c = rs.chains[i];
    out += i == 0 ? "\n    " : ",\n    ";
    out += "{\"ax\": " + format_double(c.a.x) + ", \"ay\": " + format_double(c.a.y) +
           ", \"bx\": " + format_double(c.b.x) + ", \"by\": " + format_double(c.b.y) +
           ", \"spacing\": " + format_double(c.spacing) + ", \"color\": \"" +
           std::string(color_name(c.color)) + "\"}";
  }
  out += rs.chains.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

RelaySet solution_from_json(std::string_view text) {
  const json doc = parse(text);
  RelaySet rs;
  const json& points = field(doc, "points", "solution");
  if (!points.is_array()) throw ParseError("solution.points: expected an array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string where = "solution.points[" + std::to_string(i) + "]";
    const json& p = points[i];
    rs.points.push_back({{number_field(p, "x", where), number_field(p, "y", where)},
                         color_field(p, where, true)});
  }
  const json& chains = field(doc, "chains", "solution");
  if (!chains.is_array()) throw ParseError("solution.chains: expected an array");
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const std::string where = "solution.chains[" + std::to_string(i) + "]";
    const json& c = chains[i];
    Chain chain{{number_field(c, "ax", where), number_field(c, "ay", where)},
                {number_field(c, "bx", where), number_field(c, "by", where)},
                number_field(c, "spacing", where),
                color_field(c, where, false)};
    if (!(chain.spacing > 0.0)) throw ParseError(where + ".spacing: must be positive");
    rs.chains.push_back(chain);
  }
  return rs;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Instance read_instance(const std::string& path) {
  try {
    return instance_from_json(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_instance(const std::string& path, const Instance& inst) {
  write_text(path, instance_to_json(inst));
}

RelaySet read_solution(const std::string& path) {
  try {
    return solution_from_json(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_solution(const std::string& path, const RelaySet& rs) {
  write_text(path, solution_to_json(rs));
}

std::string report_to_json(const SolveReport& rep, const BoundsReport& bounds, bool feasible) {
  const bool one_tier = rep.tier == Tier::one;
  ordered_json j;
  j["algorithm"] = rep.algorithm;
  j["tier"] = tier_name(rep.tier);
  j["feasible"] = feasible;
  j["relay_count"] = rep.relay_count;
  j["nominal_count"] = rep.nominal_count;
  j["counts"] = {{"stabs", one_tier ? json(rep.stabs) : json(nullptr)},
                 {"red", rep.red},
                 {"green", rep.green},
                 {"yellow", rep.yellow},
                 {"plain", rep.plain}};
  j["clouds"] = rep.clouds;
  j["blobs"] = rep.blobs;
  j["clusters"] = rep.algorithm == "one-tier-greedy" ? json(rep.clusters) : json(nullptr);
  j["forest_relays_raw"] = one_tier ? json(rep.forest_relays_raw) : json(nullptr);

  ordered_json clouds = ordered_json::array();
  for (const CloudRecord& c : rep.cloud_records) {
    clouds.push_back({{"cloud", c.cloud}, {"blobs", c.blobs}, {"method", c.method},
                      {"stabs", c.stabs}, {"red", c.red}});
  }
  j["cloud_records"] = clouds;
  ordered_json certs = ordered_json::array();
  for (const Certificate& c : rep.certificates) {
    certs.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}});
  }
  j["certificates"] = certs;
  j["notes"] = rep.notes;

  j["lower_bounds"] = {{"lb_forest", bounds.lb_forest},
                       {"lb_stab", bounds.lb_stab},
                       {"lb_clouds", bounds.lb_clouds},
                       {"max_lower_bound", bounds.max_lower_bound},
                       {"stab_mode", bounds.stab_mode},
                       {"msfn_length", bounds.msfn_length}};
  if (bounds.max_lower_bound > 0) {
    j["ratio_to_lower_bound"] =
        static_cast<double>(rep.relay_count) / static_cast<double>(bounds.max_lower_bound);
  } else {
    j["ratio_to_lower_bound"] = nullptr;
  }
  j["optimal_certified"] = rep.relay_count == bounds.max_lower_bound;
  return j.dump(2) + "\n";
}

std::string report_to_text(const SolveReport& rep, const BoundsReport& bounds, bool feasible) {
  std::ostringstream os;
  os << "algorithm:      " << rep.algorithm << " (" << tier_name(rep.tier) << "-tier)\n";
  os << "feasible:       " << (feasible ? "yes" : "NO") << "\n";
  os << "relays:         " << rep.relay_count << " (nominal " << rep.nominal_count << ")\n";
  os << "  red " << rep.red << ", green " << rep.green << ", yellow " << rep.yellow << ", plain "
     << rep.plain << "\n";
  os << "blobs/clouds:   " << rep.blobs << " / " << rep.clouds << "\n";
  os << "lower bound:    " << bounds.max_lower_bound << " (forest " << bounds.lb_forest
     << ", stab " << bounds.lb_stab << " [" << bounds.stab_mode << "], clouds "
     << bounds.lb_clouds << ")\n";
  if (bounds.max_lower_bound > 0) {
    os << "ratio:          "
       << static_cast<double>(rep.relay_count) / static_cast<double>(bounds.max_lower_bound)
       << "\n";
  } else if (rep.relay_count == 0) {
    os << "ratio:          optimal (no relays needed)\n";
  }
  for (const Certificate& c : rep.certificates) {
    os << (c.holds ? "  ok    " : "  FAIL  ") << c.name << ": " << c.lhs << " vs " << c.rhs
       << "\n";
  }
  for (const std::string& n : rep.notes) os << "note: " << n << "\n";
  os << "time:           " << rep.wall_time_ms << " ms\n";
  return os.str();
}

}  // namespace relay
