#pragma once

#include <stdexcept>
#include <string>

namespace sierpinski {

enum class Errc {
  malformed_input,
  self_loop,
  duplicate_edge,
  label_out_of_range,
  order_too_small,
  invalid_parameter,
  length_mismatch,
  letter_out_of_range,
  rank_out_of_range,
  cap_exceeded,
  negative_exponent,
  not_a_tree,
  internal_inconsistency,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_input: return "malformed_input";
    case Errc::self_loop: return "self_loop";
    case Errc::duplicate_edge: return "duplicate_edge";
    case Errc::label_out_of_range: return "label_out_of_range";
    case Errc::order_too_small: return "order_too_small";
    case Errc::invalid_parameter: return "invalid_parameter";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::letter_out_of_range: return "letter_out_of_range";
    case Errc::rank_out_of_range: return "rank_out_of_range";
    case Errc::cap_exceeded: return "cap_exceeded";
    case Errc::negative_exponent: return "negative_exponent";
    case Errc::not_a_tree: return "not_a_tree";
    case Errc::internal_inconsistency: return "internal_inconsistency";
  }
  return "unknown";
}

/// Domain error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sierpinski
