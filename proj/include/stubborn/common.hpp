#pragma once

#include <cstdint>
#include <optional>

namespace stubborn {

// Every value the toolkit handles stays below 2^63. Configurations whose
// altered values could cross the limit are rejected up front.
using Value = std::uint64_t;
inline constexpr Value kValueLimit = Value{1} << 63;

// base^exp, or nullopt when the result would exceed kValueLimit.
// kValueLimit itself is allowed: it serves as an exclusive range bound.
std::optional<Value> checked_pow(Value base, unsigned exp);

// Number of digits of n in the given base; 1 for n = 0.
unsigned digit_length(Value n, unsigned base);

// Exact integer square root.
Value isqrt(Value n);

}  // namespace stubborn
