#include "stubborn/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stubborn {

double pi_hat(Value n) {
  if (n < 2) return 0.0;
  const double x = static_cast<double>(n);
  return x / std::log(x);
}

namespace {

Value unit_size_checked(unsigned base, unsigned exponent, Value unit) {
  const auto size = checked_pow(base, exponent + 1);
  if (!size) throw std::out_of_range("unit size out of range");
  if (unit + 1 > kValueLimit / *size)
    throw std::out_of_range("unit beyond supported range");
  return *size;
}

}  // namespace

double unit_prime_density(unsigned base, unsigned exponent, Value unit) {
  const Value B = unit_size_checked(base, exponent, unit);
  const double q = (pi_hat((unit + 1) * B) - pi_hat(unit * B)) / static_cast<double>(B);
  return std::clamp(q, 0.0, 1.0);
}

UnitEstimate unit_solution_probability(unsigned base, unsigned exponent, Value unit,
                                       MsdPolicy policy) {
  const Value B = unit_size_checked(base, exponent, unit);
  UnitEstimate est;
  est.unit = unit;
  est.q = unit_prime_density(base, exponent, unit);
  const unsigned length = digit_length((unit + 1) * B - 1, base);
  est.alteration_exponent =
      alteration_count(length, base, ChangeCount::at_most(2), policy) - 1;
  if (est.q >= 1.0) {
    est.p = 0.0;
  } else {
    est.p = std::exp(static_cast<double>(est.alteration_exponent) *
                     std::log1p(-est.q));
  }
  return est;
}

std::vector<UnitEstimate> order_units(unsigned base, unsigned exponent, Value first,
                                      Value last, MsdPolicy policy) {
  if (first > last) throw std::invalid_argument("unit range out of order");
  std::vector<UnitEstimate> units;
  units.reserve(static_cast<std::size_t>(last - first + 1));
  for (Value u = first;; ++u) {
    units.push_back(unit_solution_probability(base, exponent, u, policy));
    if (u == last) break;
  }
  std::sort(units.begin(), units.end(), [](const UnitEstimate& a, const UnitEstimate& b) {
    if (a.q != b.q) return a.q < b.q;
    return a.unit < b.unit;
  });
  return units;
}

}  // namespace stubborn
