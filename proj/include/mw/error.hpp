#ifndef MW_ERROR_HPP
#define MW_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mw {

enum class ErrorCode {
  DimensionMismatch,
  NotMultiBoundedAbove,
  NotMultiBoundedBelow,
  NotInSumWedge,
  InconsistentValues,
  InvalidInstance,
  RdpViolated,
  ZeroSpace,
  EmptyMultiSupremum,
};

/// Stable machine-readable identifier, e.g. "not_multi_bounded_above".
std::string_view error_name(ErrorCode code);

/// Domain error raised by the library. Results such as an empty multi-supremum
/// set or an infeasible decomposition are values, not errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mw

#endif  // MW_ERROR_HPP
