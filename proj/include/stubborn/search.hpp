#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stubborn/bitset.hpp"
#include "stubborn/digits.hpp"
#include "stubborn/sieve.hpp"

namespace stubborn {

// One work unit: the interval [u*b^(e+1), (u+1)*b^(e+1)), scanned for
// solutions among multiples of b.
struct UnitTask {
  unsigned base = 2;
  unsigned exponent = 0;
  Value unit = 0;
  SieveKind sieve = SieveKind::Eratosthenes;
};

struct UnitCounters {
  Value primes_found = 0;
  Value blocks_flagged = 0;
  Value survivors = 0;
  Value direct_checks = 0;
};

struct UnitResult {
  UnitTask task;
  MsdPolicy policy = MsdPolicy::AllowMsdZero;
  std::vector<Value> solutions;  // ascending
  UnitCounters counters;
};

// OR-reduction of the primality bitmap over contiguous blocks of `base`
// numbers. The bitmap length must be divisible by base.
Bitset block_flags(const PrimeBitmap& a, unsigned base);

// survivors[k] = 1 iff no flagged block sits at Hamming distance <= 1 from k
// in the exponent-digit base-b representation (k itself included). flags must
// have length base^exponent.
Bitset survivors(const Bitset& flags, unsigned base, unsigned exponent);

// The filter unit_search actually applies. For unit >= 1 it equals
// survivors(). At unit 0 a candidate b*k has only length(k)+1 digits, so
// neighbor positions above the leading digit of k do not correspond to legal
// alterations and must not prune; the leading digit also obeys the MSD
// policy. Less aggressive than the uniform filter, never more.
Bitset unit_survivors(const Bitset& flags, unsigned base, unsigned exponent,
                      Value unit, MsdPolicy policy);

// Finds every solution among multiples of base in the unit: sieve, block
// flags, survivor filter, then a full verification of each surviving
// candidate. The filter is a sound pruning; the verifier alone decides
// membership.
UnitResult unit_search(const UnitTask& task, MsdPolicy policy,
                       const SieveOptions& options = {});

// Candidates the reduction to multiples of b does not cover: every
// n < base^max_total_digits with 2 or 3 nonzero digits, plus those with
// exactly 4 nonzero digits whose digit at position 1 is 1 and whose least
// significant digit is nonzero. Returns the verified solutions, ascending.
std::vector<Value> sparse_search(unsigned base, unsigned max_total_digits,
                                 MsdPolicy policy);

struct MinimalSearchResult {
  Value solution = 0;
  // True when every unit below the solution's unit was scanned and the
  // sparse cases were exhausted below the solution.
  bool minimality_proven = false;
};

// Scans units 0,1,2,... (at most unit_limit of them) plus the sparse cases
// and returns the least solution found, if any.
std::optional<MinimalSearchResult> find_minimal(unsigned base, unsigned exponent,
                                                MsdPolicy policy, Value unit_limit);

// {"base":..,"e":..,"u":..,"n":..,"digits":"..","policy":".."}
std::string solution_json_line(const UnitTask& task, MsdPolicy policy, Value n);

}  // namespace stubborn
