#include "stubborn/primality.hpp"

#include <stdexcept>

namespace stubborn {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kSmallPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                37, 41, 43, 47, 53, 59, 61};

// After trial division below 67, anything smaller than 67^2 is prime.
constexpr u64 kTrialCutoff = 67 * 67;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((u128)a * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Strong-pseudoprime check; n odd, n > 2, a already reduced (a < n, a >= 2).
bool strong_probable_prime(u64 n, u64 a) {
  u64 d = n - 1;
  int s = __builtin_ctzll(d);
  d >>= s;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Witness set covering all n < 2^64 (Sinclair's seven bases).
constexpr u64 kWitnesses[] = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};

bool miller_rabin_64(u64 n) {
  for (u64 w : kWitnesses) {
    u64 a = w % n;
    if (a == 0) continue;
    if (a == 1 || a == n - 1) continue;
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

}  // namespace

PrimalityVerdict classify(Value n) {
  if (n >= kValueLimit) throw std::out_of_range("value out of supported range");
  if (n == 0) return PrimalityVerdict::Zero;
  if (n == 1) return PrimalityVerdict::One;
  if (n == 2) return PrimalityVerdict::Prime;
  if (n % 2 == 0) return PrimalityVerdict::Composite;
  for (u64 p : kSmallPrimes) {
    if (n == p) return PrimalityVerdict::Prime;
    if (n % p == 0) return PrimalityVerdict::Composite;
  }
  if (n < kTrialCutoff) return PrimalityVerdict::Prime;
  return miller_rabin_64(n) ? PrimalityVerdict::Prime : PrimalityVerdict::Composite;
}

bool is_composite(Value n) { return classify(n) == PrimalityVerdict::Composite; }

bool is_prime(Value n) { return classify(n) == PrimalityVerdict::Prime; }

PrimeBitmap primes_in_interval_oracle(Value lo, Value hi) {
  if (lo > hi) throw std::invalid_argument("interval bounds out of order");
  if (hi - lo > 10'000'000) throw std::invalid_argument("oracle interval too large");
  PrimeBitmap map{lo, hi, Bitset(static_cast<std::size_t>(hi - lo))};
  for (Value n = lo; n < hi; ++n)
    if (is_prime(n)) map.bits.set(static_cast<std::size_t>(n - lo));
  return map;
}

const char* to_string(PrimalityVerdict verdict) {
  switch (verdict) {
    case PrimalityVerdict::Zero: return "zero";
    case PrimalityVerdict::One: return "one";
    case PrimalityVerdict::Prime: return "prime";
    case PrimalityVerdict::Composite: return "composite";
  }
  return "?";
}

}  // namespace stubborn
