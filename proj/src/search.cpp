#include "stubborn/search.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "stubborn/verifier.hpp"

namespace stubborn {

namespace {

void check_base(unsigned base) {
  if (base < 2 || base > 16) throw std::invalid_argument("base must be in [2, 16]");
}

// Neighbor slots: for digit position i of k in [0, b^e),
//   slot_i(k) = (k / b^(i+1)) * b^i + (k % b^i), in [0, b^(e-1)).
// Two block indexes share slot_i exactly when they differ at most in digit i,
// so an OR-aggregate per (i, slot) answers "is any block one digit-i change
// away flagged" in O(1).
void compute_slots(const std::vector<unsigned>& digits, const std::vector<Value>& pw,
                   unsigned exponent, unsigned base, std::vector<Value>& slots) {
  Value high = 0;  // digits above position i, read top-down
  for (unsigned i = exponent; i-- > 0;) {
    slots[i] = high;
    high = high * base + digits[i];
  }
  Value low = 0;  // k mod b^i, accumulated bottom-up
  for (unsigned i = 0; i < exponent; ++i) {
    slots[i] = slots[i] * pw[i] + low;
    low += digits[i] * pw[i];
  }
}

void increment_odometer(std::vector<unsigned>& digits, unsigned base) {
  for (auto& d : digits) {
    if (++d < base) return;
    d = 0;
  }
}

Bitset survivors_impl(const Bitset& flags, unsigned base, unsigned exponent,
                      bool unit_zero, MsdPolicy policy) {
  check_base(base);
  const auto nblocks_opt = checked_pow(base, exponent);
  if (!nblocks_opt || *nblocks_opt == kValueLimit)
    throw std::out_of_range("block count out of range");
  const std::size_t nblocks = static_cast<std::size_t>(*nblocks_opt);
  if (flags.size() != nblocks)
    throw std::invalid_argument("flag array length must be base^exponent");

  Bitset out(nblocks);
  if (exponent == 0) {
    if (!flags.test(0)) out.set(0);
    return out;
  }

  const std::size_t slot_space = static_cast<std::size_t>(*checked_pow(base, exponent - 1));
  const bool need_nonzero = unit_zero && policy == MsdPolicy::NoMsdZero;

  std::vector<Value> pw(exponent);
  pw[0] = 1;
  for (unsigned i = 1; i < exponent; ++i) pw[i] = pw[i - 1] * base;

  std::vector<Bitset> any(exponent, Bitset(slot_space));
  std::vector<Bitset> nonzero;
  if (need_nonzero) nonzero.assign(exponent, Bitset(slot_space));

  std::vector<unsigned> digits(exponent, 0);
  std::vector<Value> slots(exponent);

  for (std::size_t k = 0; k < nblocks; ++k) {
    if (flags.test(k)) {
      compute_slots(digits, pw, exponent, base, slots);
      for (unsigned i = 0; i < exponent; ++i) {
        any[i].set(static_cast<std::size_t>(slots[i]));
        if (need_nonzero && digits[i] != 0)
          nonzero[i].set(static_cast<std::size_t>(slots[i]));
      }
    }
    increment_odometer(digits, base);
  }

  std::fill(digits.begin(), digits.end(), 0);
  for (std::size_t k = 0; k < nblocks; ++k) {
    bool dead = flags.test(k);
    if (!dead) {
      compute_slots(digits, pw, exponent, base, slots);
      unsigned top = exponent - 1;
      if (unit_zero) {
        top = 0;
        for (unsigned i = exponent; i-- > 0;)
          if (digits[i] != 0) {
            top = i;
            break;
          }
      }
      for (unsigned i = 0; i <= top && !dead; ++i) {
        if (unit_zero && need_nonzero && i == top)
          dead = nonzero[i].test(static_cast<std::size_t>(slots[i]));
        else
          dead = any[i].test(static_cast<std::size_t>(slots[i]));
      }
    }
    if (!dead) out.set(k);
    increment_odometer(digits, base);
  }
  return out;
}

}  // namespace

Bitset block_flags(const PrimeBitmap& a, unsigned base) {
  check_base(base);
  if (a.bits.size() % base != 0)
    throw std::invalid_argument("bitmap length must be divisible by base");
  Bitset flags(a.bits.size() / base);
  a.bits.for_each_set([&](std::size_t i) { flags.set(i / base); });
  return flags;
}

Bitset survivors(const Bitset& flags, unsigned base, unsigned exponent) {
  return survivors_impl(flags, base, exponent, false, MsdPolicy::AllowMsdZero);
}

Bitset unit_survivors(const Bitset& flags, unsigned base, unsigned exponent,
                      Value unit, MsdPolicy policy) {
  return survivors_impl(flags, base, exponent, unit == 0, policy);
}

UnitResult unit_search(const UnitTask& task, MsdPolicy policy,
                       const SieveOptions& options) {
  check_base(task.base);
  const auto unit_size = checked_pow(task.base, task.exponent + 1);
  if (!unit_size) throw std::out_of_range("unit size out of range");
  const Value B = *unit_size;
  if (task.unit + 1 > kValueLimit / B)
    throw std::out_of_range("unit beyond supported range");
  const Value lo = task.unit * B;
  const Value hi = lo + B;
  // The verifier needs headroom for every altered value of the candidates.
  if (!checked_pow(task.base, digit_length(hi - 1, task.base)))
    throw std::out_of_range("altered values could exceed the supported range");

  UnitResult result;
  result.task = task;
  result.policy = policy;

  const Value nblocks = *checked_pow(task.base, task.exponent);
  Bitset flags(static_cast<std::size_t>(nblocks));
  for_each_sieve_segment(lo, hi, task.sieve, options, [&](const PrimeBitmap& segment) {
    result.counters.primes_found += segment.bits.count();
    const Value offset = segment.lo - lo;
    segment.bits.for_each_set([&](std::size_t i) {
      flags.set(static_cast<std::size_t>((offset + i) / task.base));
    });
  });
  result.counters.blocks_flagged = flags.count();

  const Bitset surviving = unit_survivors(flags, task.base, task.exponent,
                                          task.unit, policy);
  result.counters.survivors = surviving.count();

  const Value prefix = task.unit * nblocks;
  surviving.for_each_set([&](std::size_t k) {
    ++result.counters.direct_checks;
    const Value n = task.base * (prefix + k);
    if (verify(n, task.base, ChangeCount::at_most(2), policy).verdict)
      result.solutions.push_back(n);
  });
  return result;
}

std::vector<Value> sparse_search(unsigned base, unsigned max_total_digits,
                                 MsdPolicy policy) {
  check_base(base);
  const unsigned D = max_total_digits;
  if (!checked_pow(base, D))
    throw std::out_of_range("digit budget beyond supported range");

  std::vector<Value> pw(D > 0 ? D : 1);
  pw[0] = 1;
  for (unsigned i = 1; i < D; ++i) pw[i] = pw[i - 1] * base;

  std::vector<Value> out;
  auto consider = [&](Value n) {
    if (verify(n, base, ChangeCount::at_most(2), policy).verdict) out.push_back(n);
  };

  // two nonzero digits
  for (unsigned i = 0; i + 1 < D; ++i)
    for (unsigned j = i + 1; j < D; ++j)
      for (unsigned di = 1; di < base; ++di)
        for (unsigned dj = 1; dj < base; ++dj)
          consider(di * pw[i] + dj * pw[j]);

  // three nonzero digits
  for (unsigned i = 0; i + 2 < D; ++i)
    for (unsigned j = i + 1; j + 1 < D; ++j)
      for (unsigned k = j + 1; k < D; ++k)
        for (unsigned di = 1; di < base; ++di)
          for (unsigned dj = 1; dj < base; ++dj)
            for (unsigned dk = 1; dk < base; ++dk)
              consider(di * pw[i] + dj * pw[j] + dk * pw[k]);

  // four nonzero digits with digit 1 at position 1 and a nonzero last digit
  for (unsigned j = 2; j + 1 < D; ++j)
    for (unsigned k = j + 1; k < D; ++k)
      for (unsigned d0 = 1; d0 < base; ++d0)
        for (unsigned dj = 1; dj < base; ++dj)
          for (unsigned dk = 1; dk < base; ++dk)
            consider(d0 + base + dj * pw[j] + dk * pw[k]);

  std::sort(out.begin(), out.end());
  return out;
}

std::optional<MinimalSearchResult> find_minimal(unsigned base, unsigned exponent,
                                                MsdPolicy policy, Value unit_limit) {
  check_base(base);
  const auto unit_size = checked_pow(base, exponent + 1);
  if (!unit_size) throw std::out_of_range("unit size out of range");
  const Value B = *unit_size;

  std::optional<Value> unit_solution;
  Value scanned_units = 0;
  for (Value u = 0; u < unit_limit; ++u) {
    if (u + 1 > kValueLimit / B) break;  // ran out of representable range
    const UnitResult result =
        unit_search({base, exponent, u, SieveKind::Eratosthenes}, policy);
    ++scanned_units;
    if (!result.solutions.empty()) {
      unit_solution = result.solutions.front();
      break;
    }
  }
  const Value scanned_top = scanned_units * B;

  const Value bound = unit_solution ? *unit_solution : scanned_top;
  if (bound == 0) return std::nullopt;

  unsigned digit_budget = digit_length(bound - 1, base);
  while (digit_budget > 0 && !checked_pow(base, digit_budget)) --digit_budget;
  const Value sparse_top = *checked_pow(base, digit_budget);
  const std::vector<Value> sparse = sparse_search(base, digit_budget, policy);

  std::optional<Value> best = unit_solution;
  if (!sparse.empty() && (!best || sparse.front() < *best)) best = sparse.front();
  if (!best) return std::nullopt;

  return MinimalSearchResult{*best, *best <= scanned_top && *best <= sparse_top};
}

std::string solution_json_line(const UnitTask& task, MsdPolicy policy, Value n) {
  nlohmann::json j;
  j["base"] = task.base;
  j["e"] = task.exponent;
  j["u"] = task.unit;
  j["n"] = n;
  j["digits"] = DigitString(n, task.base).str();
  j["policy"] = to_string(policy);
  return j.dump();
}

}  // namespace stubborn
