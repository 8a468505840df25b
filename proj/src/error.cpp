#include "mw/error.hpp"

namespace mw {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::NotMultiBoundedAbove: return "not_multi_bounded_above";
    case ErrorCode::NotMultiBoundedBelow: return "not_multi_bounded_below";
    case ErrorCode::NotInSumWedge: return "not_in_sum_wedge";
    case ErrorCode::InconsistentValues: return "inconsistent_values";
    case ErrorCode::InvalidInstance: return "invalid_instance";
    case ErrorCode::RdpViolated: return "rdp_violated";
    case ErrorCode::ZeroSpace: return "zero_space";
    case ErrorCode::EmptyMultiSupremum: return "empty_multi_supremum";
  }
  return "unknown";
}

}  // namespace mw
