#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stubborn/digits.hpp"
#include "stubborn/primality.hpp"

namespace stubborn {

// First non-composite outcome in canonical enumeration order.
struct Counterexample {
  Alteration alteration;
  Value altered_value = 0;
  PrimalityVerdict verdict = PrimalityVerdict::Zero;
};

struct VerificationReport {
  Value candidate = 0;
  unsigned base = 10;
  ChangeCount count;
  MsdPolicy policy = MsdPolicy::AllowMsdZero;
  bool verdict = false;
  std::optional<Counterexample> counterexample;
  Value tested = 0;  // alteration outcomes evaluated
};

// True verdict iff the candidate is composite and every legal alteration
// yields a composite value. Exactly-k variants still require the candidate
// itself to be composite. Deterministic: the counterexample is the first
// failure in enumeration order.
VerificationReport verify(Value n, unsigned base, ChangeCount count, MsdPolicy policy);

// Single-line JSON rendering:
// {"candidate":..,"base":..,"count":"..","policy":"..","verdict":..,
//  "counterexample":{"positions":[..],"new_digits":[..],"value":..,"verdict":".."},
//  "tested":..}
std::string report_json(const VerificationReport& report);

struct TableEntry {
  unsigned base = 10;
  Value value = 0;
  ChangeCount count;
  MsdPolicy policy = MsdPolicy::AllowMsdZero;
  bool expected = true;
};

struct TableCheck {
  TableEntry entry;
  bool verdict = false;
  bool ok = false;
};

struct TableSummary {
  std::vector<TableCheck> checks;
  std::size_t mismatches = 0;
};

// Runs verify over each entry and reports mismatches against expectations.
TableSummary verify_table(const std::vector<TableEntry>& entries);

}  // namespace stubborn
