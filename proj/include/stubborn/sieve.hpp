#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stubborn/bitset.hpp"
#include "stubborn/common.hpp"

namespace stubborn {

// Atkin wheels restricted to the three supported moduli; Eratosthenes is the
// baseline every wheel is validated against.
enum class SieveKind { Eratosthenes, Atkin12, Atkin60, Atkin420 };

inline constexpr SieveKind kAllSieveKinds[] = {
    SieveKind::Eratosthenes, SieveKind::Atkin12, SieveKind::Atkin60,
    SieveKind::Atkin420};

unsigned wheel_modulus(SieveKind kind);  // 0 for Eratosthenes
const char* to_string(SieveKind kind);
std::optional<SieveKind> sieve_kind_from(std::string_view name);

struct SieveOptions {
  // Numbers per internal segment; order 10^6..10^7 keeps the working set in
  // cache.
  std::size_t segment_len = std::size_t{1} << 23;
};

// Exact primality bitmap for [lo, hi). Any kind produces identical output.
// Throws std::out_of_range past kValueLimit.
PrimeBitmap sieve_interval(Value lo, Value hi, SieveKind kind,
                           const SieveOptions& options = {});

// Streams [lo, hi) as consecutive segment bitmaps without materializing the
// whole interval.
void for_each_sieve_segment(Value lo, Value hi, SieveKind kind,
                            const SieveOptions& options,
                            const std::function<void(const PrimeBitmap&)>& consume);

struct BenchmarkRow {
  SieveKind kind;
  Value lo = 0;
  Value hi = 0;
  double seconds = 0.0;
  Value primes = 0;
};

struct BenchmarkReport {
  std::vector<BenchmarkRow> rows;
  bool counts_agree = true;  // a disagreement is a correctness failure
};

// Times each kind over [lo, hi); seconds is the best of `repetitions` runs.
BenchmarkReport sieve_benchmark(Value lo, Value hi,
                                const std::vector<SieveKind>& kinds,
                                int repetitions = 1,
                                const SieveOptions& options = {});

// CSV rows "kind,lo,hi,seconds,primes" with header.
std::string benchmark_csv(const BenchmarkReport& report);

// Simple sieve of all primes <= limit; shared bootstrap for base primes.
std::vector<std::uint32_t> small_primes_up_to(std::uint32_t limit);

}  // namespace stubborn
