#pragma once

#include <vector>

#include "stubborn/common.hpp"
#include "stubborn/digits.hpp"

namespace stubborn {

// pi(n) ~ n / ln(n); 0 for n in {0, 1}.
double pi_hat(Value n);

// Estimated probability q(u) that a number in unit u is prime:
// (pi_hat((u+1) b^(e+1)) - pi_hat(u b^(e+1))) / b^(e+1), clamped into [0, 1].
double unit_prime_density(unsigned base, unsigned exponent, Value unit);

struct UnitEstimate {
  Value unit = 0;
  double q = 0.0;  // per-number prime probability
  double p = 0.0;  // per-candidate solution probability, (1 - q)^A
  Value alteration_exponent = 0;  // A: proper alteration outcomes per candidate
};

// A counts the alteration outcomes other than the identity (the candidate is
// a multiple of the base, composite by construction), for the digit length of
// the unit's top number. p is evaluated in log space, so huge A cannot
// underflow the comparison.
UnitEstimate unit_solution_probability(unsigned base, unsigned exponent, Value unit,
                                       MsdPolicy policy);

// Units of [first, last], most promising first. Sorted by ascending q with
// ties broken by ascending unit, which equals descending p whenever the units
// share a digit length.
std::vector<UnitEstimate> order_units(unsigned base, unsigned exponent, Value first,
                                      Value last, MsdPolicy policy);

}  // namespace stubborn
