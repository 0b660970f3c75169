#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace agorum {

// Instance-size limits for the exhaustive searches. Exceeding a limit raises
// ErrorCode::budget_exceeded; nothing is ever approximated.
struct Budget {
  std::uint64_t profiles = 1'000'000;  // |J(Φ)|^n for single-profile scans
  std::uint64_t rules = 100'000;       // rules produced by class enumeration
  std::size_t subset_members = 16;     // |Φ| of one variable-connected component
  std::size_t qbf_variables = 14;
  std::size_t max_k = 6;               // largest k accepted for kMP

  // Defaults, with `profiles` replaced by AGORUM_BUDGET when that variable
  // holds a positive integer.
  static Budget from_environment();

  // Throws budget_exceeded naming `what` when `amount > limit`.
  static void require(std::uint64_t amount, std::uint64_t limit, std::string_view what);
};

// Saturating base^exponent, used to size profile spaces without overflow.
std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exponent);

}  // namespace agorum
