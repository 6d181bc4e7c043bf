#pragma once

#include "stubborn/bitset.hpp"
#include "stubborn/common.hpp"

namespace stubborn {

// 0 and 1 are neither prime nor composite; alterations produce both, so the
// verdicts are first-class.
enum class PrimalityVerdict { Zero, One, Prime, Composite };

// Exact, deterministic verdict for any n below kValueLimit. Small-prime trial
// division followed by a strong-pseudoprime test with a witness set proven
// exact for all 64-bit inputs. Throws std::out_of_range beyond the limit.
PrimalityVerdict classify(Value n);

// True iff classify(n) == Composite.
bool is_composite(Value n);

// True iff classify(n) == Prime.
bool is_prime(Value n);

// Slow, obviously-correct reference bitmap built by classifying each element.
// Interval length capped at 10^7 (std::invalid_argument beyond).
PrimeBitmap primes_in_interval_oracle(Value lo, Value hi);

const char* to_string(PrimalityVerdict verdict);

}  // namespace stubborn
