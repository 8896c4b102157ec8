#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace msi {

enum class Errc {
  DimensionMismatch,
  InvalidArgument,
  ZeroDivisorIdeal,
  ZeroIdeal,
  NotCofinite,
  UnsupportedDimension,
  NegativeWeight,
  UnboundedComplement,
  NonpositiveScale,
  EmptyRegion,
  RankMismatch,
  ZeroDirection,
  NotRegionExpressible,
  ZeroIdealInDirection,
  EvaluationOutOfDomain,
  Parse,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace msi
