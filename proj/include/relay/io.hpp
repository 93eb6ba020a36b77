#pragma once

#include <string>
#include <string_view>

#include "relay/decomposition.hpp"
#include "relay/relay_set.hpp"
#include "relay/solvers.hpp"
#include "relay/verify.hpp"

namespace relay {

/// Decimal text with 17 significant digits (trailing zeros dropped); parses
/// back to the same double.
std::string format_double(double v);

/// {"r": ..., "sensors": [[x, y], ...]}
std::string instance_to_json(const Instance& inst);
/// Throws ParseError naming the line or field at fault.
Instance instance_from_json(std::string_view text);

/// {"points": [{"x", "y", "color"}], "chains": [{"ax", "ay", "bx", "by", "spacing", "color"}]}
/// Chain "color" is optional on input.
std::string solution_to_json(const RelaySet& rs);
RelaySet solution_from_json(std::string_view text);

/// File wrappers; I/O failures throw std::runtime_error, bad content ParseError.
Instance read_instance(const std::string& path);
void write_instance(const std::string& path, const Instance& inst);
RelaySet read_solution(const std::string& path);
void write_solution(const std::string& path, const RelaySet& rs);

std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

/// Machine-readable report. The field set is the same for every algorithm;
/// fields that do not apply are null. Wall time is left out so that reruns
/// produce identical bytes.
std::string report_to_json(const SolveReport& rep, const BoundsReport& bounds, bool feasible);
/// Human-readable summary of the same content, wall time included.
std::string report_to_text(const SolveReport& rep, const BoundsReport& bounds, bool feasible);

}  // namespace relay
