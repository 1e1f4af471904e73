#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trivalent {

enum class errc {
  invalid_input,         // wrong table length, label out of range, n = 0
  not_permutation,       // a table repeats a value
  order_three_violated,  // black permutation is not of order dividing 3
  involution_violated,   // white permutation is not an involution
  not_transitive,        // more than one orbit
  not_connected,         // relabel traversal did not reach every element
  not_regular,           // fixed point in either permutation
  size_too_large,        // oracle bound exceeded
  parse_error,           // malformed text line
};

inline const char *to_string(errc e) {
  switch (e) {
  case errc::invalid_input: return "InvalidInput";
  case errc::not_permutation: return "NotPermutation";
  case errc::order_three_violated: return "OrderThreeViolated";
  case errc::involution_violated: return "InvolutionViolated";
  case errc::not_transitive: return "NotTransitive";
  case errc::not_connected: return "NotConnected";
  case errc::not_regular: return "NotRegular";
  case errc::size_too_large: return "SizeTooLarge";
  case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Raised by every fallible operation of the library. `index()` carries the
/// offending 1-based edge label when one exists, 0 otherwise.
class error : public std::invalid_argument {
public:
  error(errc code, std::size_t index, const std::string &what)
      : std::invalid_argument(std::string(to_string(code)) + ": " + what),
        code_(code), index_(index) {}

  errc code() const noexcept { return code_; }
  std::size_t index() const noexcept { return index_; }

private:
  errc code_;
  std::size_t index_;
};

} // namespace trivalent
