#include "stubborn/sieve.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace stubborn {

namespace {

using u64 = std::uint64_t;

// Smallest y with y*y >= v.
u64 ceil_sqrt(u64 v) {
  if (v == 0) return 0;
  return isqrt(v - 1) + 1;
}

void check_interval(Value lo, Value hi) {
  if (lo > hi) throw std::invalid_argument("interval bounds out of order");
  if (hi > kValueLimit) throw std::out_of_range("interval beyond supported range");
}

// ---------------------------------------------------------------------------
// Eratosthenes
// ---------------------------------------------------------------------------

void eratosthenes_segment(Value lo, Value hi, const std::vector<std::uint32_t>& base_primes,
                          Bitset& bits) {
  // Start from "every odd number is prime", then repair the small cases.
  auto& words = bits.words();
  const u64 odd_pattern = 0xAAAAAAAAAAAAAAAAull;  // bits at odd in-word offsets
  const u64 pattern = (lo % 2 == 0) ? odd_pattern : ~odd_pattern;
  std::fill(words.begin(), words.end(), pattern);
  bits.clear_tail();
  if (lo <= 1 && 1 < hi) bits.reset(static_cast<std::size_t>(1 - lo));
  if (lo <= 2 && 2 < hi) bits.set(static_cast<std::size_t>(2 - lo));

  for (std::uint32_t p : base_primes) {
    if (p == 2) continue;
    const u64 p64 = p;
    const u64 square = p64 * p64;
    if (square >= hi) break;
    u64 start = ((lo + p64 - 1) / p64) * p64;
    if (start < square) start = square;
    if (start % 2 == 0) start += p64;  // odd multiples only
    for (u64 m = start; m < hi; m += 2 * p64)
      bits.reset(static_cast<std::size_t>(m - lo));
  }
}

// ---------------------------------------------------------------------------
// Atkin with wheel W in {12, 60, 420}
//
// For n coprime to 12:
//   n = 1,5 (mod 12): prime iff #{x,y>0 : 4x^2+y^2=n} is odd and n squarefree
//   n = 7   (mod 12): prime iff #{x,y>0 : 3x^2+y^2=n} is odd and n squarefree
//   n = 11  (mod 12): prime iff #{x>y>0 : 3x^2-y^2=n} is odd and n squarefree
//
// The wheel restricts toggling to residues coprime to W. Seed tables list,
// per form and per x residue class, the y residue classes that land on a
// wheel residue of the right form, so the inner loops step y by W and touch
// nothing else. Primes dividing W never appear as quadratic-form residues and
// are emitted by a hard-coded check.
// ---------------------------------------------------------------------------

struct AtkinTables {
  unsigned W = 0;
  std::vector<std::uint32_t> wheel_primes;
  // seeds[form][x % W] = ascending list of y residues
  std::array<std::vector<std::vector<std::uint16_t>>, 3> seeds;
};

AtkinTables build_atkin_tables(unsigned W) {
  AtkinTables t;
  t.W = W;
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    if (W % p == 0) t.wheel_primes.push_back(p);
  for (auto& per_form : t.seeds) per_form.assign(W, {});

  auto form_index = [](unsigned r12) -> int {
    if (r12 == 1 || r12 == 5) return 0;
    if (r12 == 7) return 1;
    if (r12 == 11) return 2;
    return -1;
  };

  for (unsigned a = 0; a < W; ++a) {
    for (unsigned b = 0; b < W; ++b) {
      const unsigned ra = (4 * a * a + b * b) % W;
      const unsigned rb = (3 * a * a + b * b) % W;
      const unsigned rc = (3 * a * a % W + W - b * b % W) % W;
      if (std::gcd(ra, W) == 1 && form_index(ra % 12) == 0)
        t.seeds[0][a].push_back(static_cast<std::uint16_t>(b));
      if (std::gcd(rb, W) == 1 && form_index(rb % 12) == 1)
        t.seeds[1][a].push_back(static_cast<std::uint16_t>(b));
      if (std::gcd(rc, W) == 1 && form_index(rc % 12) == 2)
        t.seeds[2][a].push_back(static_cast<std::uint16_t>(b));
    }
  }
  return t;
}

const AtkinTables& atkin_tables(unsigned W) {
  static const AtkinTables t12 = build_atkin_tables(12);
  static const AtkinTables t60 = build_atkin_tables(60);
  static const AtkinTables t420 = build_atkin_tables(420);
  switch (W) {
    case 12: return t12;
    case 60: return t60;
    default: return t420;
  }
}

// First y >= ylo with y = b (mod W).
u64 align_residue(u64 ylo, unsigned b, unsigned W) {
  const u64 r = ylo % W;
  return ylo + (b >= r ? b - r : W + b - r);
}

void atkin_segment(Value lo, Value hi, const AtkinTables& t,
                   const std::vector<std::uint32_t>& base_primes, Bitset& bits) {
  const unsigned W = t.W;
  auto& words = bits.words();
  std::fill(words.begin(), words.end(), 0);
  if (hi <= lo) return;

  // Per x the y window moves monotonically, so both bounds are maintained by
  // stepping rather than recomputed by isqrt; the total stepping over a whole
  // form is O(sqrt(hi)).

  // forms 0 and 1: n = cc*x^2 + y^2, windows shrink as x grows
  for (int form = 0; form <= 1; ++form) {
    const u64 cc = form == 0 ? 4 : 3;
    u64 yhi = isqrt(hi - 1 - std::min(hi - 1, cc));
    u64 ylo = lo > cc ? ceil_sqrt(lo - cc) : 1;
    for (u64 x = 1;; ++x) {
      const u64 c = cc * x * x;
      if (c + 1 >= hi) break;
      const u64 room = hi - 1 - c;
      while (yhi > 0 && yhi * yhi > room) --yhi;
      if (yhi == 0) break;
      if (lo > c) {
        const u64 need = lo - c;
        while (ylo > 1 && (ylo - 1) * (ylo - 1) >= need) --ylo;
      } else {
        ylo = 1;
      }
      if (ylo > yhi) continue;
      const auto& classes = t.seeds[form][static_cast<std::size_t>(x % W)];
      for (std::uint16_t b : classes) {
        for (u64 y = align_residue(ylo, b, W); y <= yhi; y += W)
          bits.flip(static_cast<std::size_t>(c + y * y - lo));
      }
    }
  }

  // form 2: n = 3x^2 - y^2 with x > y > 0, windows climb as x grows
  {
    u64 ylo = 1;
    u64 yhi = 0;
    for (u64 x = 2;; ++x) {
      const u64 c = 3 * x * x;
      if (2 * x * x + 2 * x - 1 >= hi) break;  // min n at y = x-1
      if (c < lo + 1) continue;                // max n = c - 1 below lo
      if (c >= hi) {
        const u64 need = c - hi + 1;  // y^2 must reach past c - hi
        while (ylo * ylo < need) ++ylo;
      }
      const u64 room = c - lo;
      while ((yhi + 1) * (yhi + 1) <= room) ++yhi;
      const u64 ycap = std::min<u64>(yhi, x - 1);
      if (ylo > ycap) continue;
      const auto& classes = t.seeds[2][static_cast<std::size_t>(x % W)];
      for (std::uint16_t b : classes) {
        for (u64 y = align_residue(ylo, b, W); y <= ycap; y += W)
          bits.flip(static_cast<std::size_t>(c - y * y - lo));
      }
    }
  }

  // squarefree filter: clear multiples of p^2 for primes not dividing W
  for (std::uint32_t p : base_primes) {
    if (W % p == 0) continue;
    const u64 p2 = static_cast<u64>(p) * p;
    if (p2 >= hi) break;
    u64 start = ((lo + p2 - 1) / p2) * p2;
    if (start < p2) start = p2;
    for (u64 m = start; m < hi; m += p2)
      bits.reset(static_cast<std::size_t>(m - lo));
  }

  // primes dividing the wheel
  for (std::uint32_t p : t.wheel_primes)
    if (lo <= p && p < hi) bits.set(static_cast<std::size_t>(p - lo));
}

std::vector<std::uint32_t> base_primes_for(Value hi) {
  if (hi < 4) return {};
  const u64 limit = isqrt(hi - 1);
  return small_primes_up_to(static_cast<std::uint32_t>(limit));
}

void fill_segment(Value lo, Value hi, SieveKind kind,
                  const std::vector<std::uint32_t>& base_primes, Bitset& bits) {
  if (kind == SieveKind::Eratosthenes)
    eratosthenes_segment(lo, hi, base_primes, bits);
  else
    atkin_segment(lo, hi, atkin_tables(wheel_modulus(kind)), base_primes, bits);
}

std::size_t normalized_segment_len(const SieveOptions& options) {
  std::size_t len = std::max<std::size_t>(options.segment_len, 64);
  return (len + 63) / 64 * 64;  // word-aligned so segments blit cleanly
}

}  // namespace

unsigned wheel_modulus(SieveKind kind) {
  switch (kind) {
    case SieveKind::Eratosthenes: return 0;
    case SieveKind::Atkin12: return 12;
    case SieveKind::Atkin60: return 60;
    case SieveKind::Atkin420: return 420;
  }
  return 0;
}

const char* to_string(SieveKind kind) {
  switch (kind) {
    case SieveKind::Eratosthenes: return "eratosthenes";
    case SieveKind::Atkin12: return "atkin12";
    case SieveKind::Atkin60: return "atkin60";
    case SieveKind::Atkin420: return "atkin420";
  }
  return "?";
}

std::optional<SieveKind> sieve_kind_from(std::string_view name) {
  for (SieveKind kind : kAllSieveKinds)
    if (name == to_string(kind)) return kind;
  return std::nullopt;
}

std::vector<std::uint32_t> small_primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  // odd-only sieve: index i represents 2i + 1
  const std::size_t n_odd = (static_cast<std::size_t>(limit) - 1) / 2;
  Bitset composite(n_odd + 1);
  for (std::size_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite.test(i)) continue;
    const std::size_t p = 2 * i + 1;
    for (std::size_t j = (p * p - 1) / 2; j <= n_odd; j += p) composite.set(j);
  }
  for (std::size_t i = 1; i <= n_odd; ++i)
    if (!composite.test(i)) primes.push_back(static_cast<std::uint32_t>(2 * i + 1));
  return primes;
}

void for_each_sieve_segment(Value lo, Value hi, SieveKind kind,
                            const SieveOptions& options,
                            const std::function<void(const PrimeBitmap&)>& consume) {
  check_interval(lo, hi);
  std::size_t seg_len = normalized_segment_len(options);
  if (kind != SieveKind::Eratosthenes && hi > 4) {
    // every Atkin segment scans x up to sqrt(hi); widen segments until the
    // toggling work dominates that scan
    const Value amortized = std::min<Value>(Value{1} << 27, 16 * isqrt(hi - 1));
    seg_len = std::max(seg_len, static_cast<std::size_t>((amortized + 63) / 64 * 64));
  }
  const auto base_primes = base_primes_for(hi);
  for (Value s = lo; s < hi;) {
    const Value e = std::min<Value>(s + seg_len, hi);
    PrimeBitmap segment{s, e, Bitset(static_cast<std::size_t>(e - s))};
    fill_segment(s, e, kind, base_primes, segment.bits);
    consume(segment);
    s = e;
  }
}

PrimeBitmap sieve_interval(Value lo, Value hi, SieveKind kind,
                           const SieveOptions& options) {
  check_interval(lo, hi);
  PrimeBitmap map{lo, hi, Bitset(static_cast<std::size_t>(hi - lo))};
  for_each_sieve_segment(lo, hi, kind, options, [&](const PrimeBitmap& segment) {
    const std::size_t word_offset = static_cast<std::size_t>(segment.lo - lo) / 64;
    const auto& src = segment.bits.words();
    std::copy(src.begin(), src.end(), map.bits.words().begin() + word_offset);
  });
  map.bits.clear_tail();
  return map;
}

BenchmarkReport sieve_benchmark(Value lo, Value hi,
                                const std::vector<SieveKind>& kinds,
                                int repetitions, const SieveOptions& options) {
  check_interval(lo, hi);
  if (repetitions < 1) repetitions = 1;
  BenchmarkReport report;
  for (SieveKind kind : kinds) {
    BenchmarkRow row{kind, lo, hi, 0.0, 0};
    double best = -1.0;
    for (int rep = 0; rep < repetitions; ++rep) {
      Value primes = 0;
      const auto t0 = std::chrono::steady_clock::now();
      for_each_sieve_segment(lo, hi, kind, options, [&](const PrimeBitmap& segment) {
        primes += segment.bits.count();
      });
      const auto t1 = std::chrono::steady_clock::now();
      const double seconds = std::chrono::duration<double>(t1 - t0).count();
      if (best < 0 || seconds < best) best = seconds;
      row.primes = primes;
    }
    row.seconds = best;
    report.rows.push_back(row);
  }
  for (std::size_t i = 1; i < report.rows.size(); ++i)
    if (report.rows[i].primes != report.rows[0].primes) report.counts_agree = false;
  return report;
}

std::string benchmark_csv(const BenchmarkReport& report) {
  std::string out = "kind,lo,hi,seconds,primes\n";
  char line[160];
  for (const auto& row : report.rows) {
    std::snprintf(line, sizeof(line), "%s,%llu,%llu,%.6f,%llu\n", to_string(row.kind),
                  static_cast<unsigned long long>(row.lo),
                  static_cast<unsigned long long>(row.hi), row.seconds,
                  static_cast<unsigned long long>(row.primes));
    out += line;
  }
  return out;
}

}  // namespace stubborn
