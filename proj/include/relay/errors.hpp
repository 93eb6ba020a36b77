#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace relay {

/// Malformed instance or solution text. The message names the offending field
/// or line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relay chain expansion would exceed the configured cap.
class LimitError : public std::runtime_error {
 public:
  LimitError(const std::string& what, std::uint64_t would_be)
      : std::runtime_error(what), would_be_(would_be) {}

  /// Number of relays the expansion would have produced before dedup.
  std::uint64_t would_be() const { return would_be_; }

 private:
  std::uint64_t would_be_;
};

}  // namespace relay
