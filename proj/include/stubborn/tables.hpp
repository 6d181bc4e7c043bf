#pragma once

#include <vector>

#include "stubborn/digits.hpp"
#include "stubborn/verifier.hpp"

namespace stubborn {

// Known minimal solutions, bundled so verification runs self-contained.
// Table 1: exactly two digit changes, both most-significant-digit policies
//          (its ">4" row is instantiated at bases 5 and 10).
// Table 2: at most two changes, changing the leading digit to zero allowed.
// Table 3: at most two changes, changing the leading digit to zero disallowed.
struct PublishedRow {
  int table = 0;
  unsigned base = 10;
  const char* digits = "";
  Value value = 0;
  ChangeCount count;
  MsdPolicy policy = MsdPolicy::AllowMsdZero;
};

const std::vector<PublishedRow>& published_rows();

std::vector<PublishedRow> rows_for_table(int which);

TableEntry to_table_entry(const PublishedRow& row);

}  // namespace stubborn
