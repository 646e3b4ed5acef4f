#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dearr {

enum class Errc {
  parse_error,
  invalid_input,
  no_minimum,
  not_a_partial_order,
  missing_meet,
  rank_violation,
  unknown_flat,
  negative_coefficient,
  duplicate_hyperplane,
  flat_not_in_lattice,
  dimension_mismatch,
  cap_exceeded,
  out_of_range,
  repeated_crossing,
  unsupported_kind,
  param_error,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_input: return "InvalidInput";
    case Errc::no_minimum: return "NoMinimum";
    case Errc::not_a_partial_order: return "NotAPartialOrder";
    case Errc::missing_meet: return "MissingMeet";
    case Errc::rank_violation: return "RankViolation";
    case Errc::unknown_flat: return "UnknownFlat";
    case Errc::negative_coefficient: return "NegativeCoefficient";
    case Errc::duplicate_hyperplane: return "DuplicateHyperplane";
    case Errc::flat_not_in_lattice: return "FlatNotInLattice";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::repeated_crossing: return "RepeatedCrossing";
    case Errc::unsupported_kind: return "UnsupportedKind";
    case Errc::param_error: return "ParamError";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-checkable code; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dearr
