#include "agorum/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "agorum/error.hpp"

namespace agorum {

Budget Budget::from_environment() {
  Budget budget;
  if (const char* raw = std::getenv("AGORUM_BUDGET")) {
    std::uint64_t value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec == std::errc{} && ptr == end && value > 0) budget.profiles = value;
  }
  return budget;
}

void Budget::require(std::uint64_t amount, std::uint64_t limit, std::string_view what) {
  if (amount > limit) {
    throw Error(ErrorCode::budget_exceeded,
                std::string(what) + " needs " + std::to_string(amount) +
                    " but the budget allows " + std::to_string(limit));
  }
}

std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exponent) {
  constexpr std::uint64_t cap = ~std::uint64_t{0};
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > cap / base) return cap;
    result *= base;
  }
  return result;
}

}  // namespace agorum
