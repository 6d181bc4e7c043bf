#pragma once

// Test-only reference implementations, deliberately naive and structured
// differently from the library: trial division instead of pseudoprime tests,
// whole-vector enumeration instead of position loops.

#include <cstdint>
#include <set>
#include <vector>

#include "stubborn/common.hpp"
#include "stubborn/digits.hpp"

namespace oracles {

inline bool trial_division_is_prime(stubborn::Value n) {
  if (n < 2) return false;
  for (stubborn::Value d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool trial_division_is_composite(stubborn::Value n) {
  return n > 1 && !trial_division_is_prime(n);
}

inline std::vector<unsigned> digits_of(stubborn::Value n, unsigned base) {
  std::vector<unsigned> d;
  if (n == 0) d.push_back(0);
  while (n > 0) {
    d.push_back(static_cast<unsigned>(n % base));
    n /= base;
  }
  return d;
}

inline stubborn::Value value_of(const std::vector<unsigned>& digits, unsigned base) {
  stubborn::Value v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * base + digits[i];
  return v;
}

// Values reachable from n by legal alterations, found by scanning every digit
// vector of the same length and keeping those within the allowed Hamming
// distance. Only practical for short representations.
inline std::set<stubborn::Value> naive_altered_values(stubborn::Value n, unsigned base,
                                                      stubborn::ChangeCount count,
                                                      stubborn::MsdPolicy policy) {
  using stubborn::CountMode;
  const auto orig = digits_of(n, base);
  const std::size_t len = orig.size();
  const std::size_t msd = len - 1;
  std::set<stubborn::Value> out;

  std::vector<unsigned> probe(len, 0);
  while (true) {
    unsigned distance = 0;
    for (std::size_t i = 0; i < len; ++i)
      if (probe[i] != orig[i]) ++distance;
    const bool distance_ok = count.mode == CountMode::AtMost
                                 ? distance <= count.limit
                                 : distance == count.limit;
    bool policy_ok = true;
    if (policy == stubborn::MsdPolicy::NoMsdZero && probe[msd] == 0 &&
        orig[msd] != 0)
      policy_ok = false;
    if (distance_ok && policy_ok) out.insert(value_of(probe, base));

    std::size_t pos = 0;
    while (pos < len && ++probe[pos] == base) probe[pos++] = 0;
    if (pos == len) break;
  }
  return out;
}

inline bool naive_is_solution(stubborn::Value n, unsigned base,
                              stubborn::ChangeCount count, stubborn::MsdPolicy policy) {
  if (!trial_division_is_composite(n)) return false;
  for (stubborn::Value v : naive_altered_values(n, base, count, policy))
    if (!trial_division_is_composite(v)) return false;
  return true;
}

}  // namespace oracles
