#include "stubborn/common.hpp"

#include <cmath>

namespace stubborn {

std::optional<Value> checked_pow(Value base, unsigned exp) {
  Value result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > kValueLimit / base) return std::nullopt;
    result *= base;
    if (result > kValueLimit) return std::nullopt;
  }
  return result;
}

unsigned digit_length(Value n, unsigned base) {
  unsigned len = 1;
  while (n >= base) {
    n /= base;
    ++len;
  }
  return len;
}

Value isqrt(Value n) {
  if (n == 0) return 0;
  auto r = static_cast<Value>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

}  // namespace stubborn
