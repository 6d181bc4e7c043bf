#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stubborn/common.hpp"

namespace stubborn {

// Whether the most significant digit may be changed to zero. Changing it to
// zero shortens the value numerically; the digit count of the representation
// stays fixed.
enum class MsdPolicy { AllowMsdZero, NoMsdZero };

enum class CountMode { AtMost, Exactly };

// How many digit positions an alteration may change.
struct ChangeCount {
  CountMode mode = CountMode::AtMost;
  unsigned limit = 2;

  static constexpr ChangeCount at_most(unsigned k) { return {CountMode::AtMost, k}; }
  static constexpr ChangeCount exactly(unsigned k) { return {CountMode::Exactly, k}; }
  bool operator==(const ChangeCount&) const = default;
};

struct DigitChange {
  std::uint32_t position = 0;  // 0 = least significant digit
  std::uint8_t new_digit = 0;
  bool operator==(const DigitChange&) const = default;
};

// Up to two replacements at distinct positions, stored in ascending position
// order. Each replacement differs from the original digit.
class Alteration {
 public:
  void clear() { count_ = 0; }
  void push(std::uint32_t position, std::uint8_t digit) {
    changes_[count_++] = {position, digit};
  }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  const DigitChange& operator[](std::size_t i) const { return changes_[i]; }
  bool operator==(const Alteration& o) const {
    if (count_ != o.count_) return false;
    for (std::size_t i = 0; i < count_; ++i)
      if (!(changes_[i] == o.changes_[i])) return false;
    return true;
  }

 private:
  std::array<DigitChange, 2> changes_{};
  std::uint8_t count_ = 0;
};

// Base-b positional representation, least significant digit first.
// Canonical form has no leading zero unless the value is zero.
class DigitString {
 public:
  // Canonical digits of n. Throws std::invalid_argument for base < 2 or
  // base > 16, std::out_of_range for n >= kValueLimit.
  DigitString(Value n, unsigned base);

  // Msd-first text, digits 0-9a-f. Leading zeros are kept, so the result may
  // be non-canonical. Throws std::invalid_argument on bad digits/base.
  static DigitString parse(std::string_view text, unsigned base);

  unsigned base() const { return base_; }
  std::size_t length() const { return digits_.size(); }
  std::uint8_t digit(std::size_t position) const { return digits_[position]; }
  const std::vector<std::uint8_t>& digits() const { return digits_; }

  // Numeric value; leading zeros are ignored. Throws std::out_of_range when
  // the value does not fit below kValueLimit.
  Value value() const;

  bool canonical() const;

  // Msd-first rendering.
  std::string str() const;

 private:
  DigitString() = default;
  std::vector<std::uint8_t> digits_;
  unsigned base_ = 10;
};

// Value after applying the alteration; the digit count stays fixed, so a most
// significant digit changed to zero simply yields a numerically shorter value.
Value apply_alteration(const DigitString& ds, const Alteration& alt);

// Visits every legal alteration exactly once together with its altered value.
// Order: the empty alteration first (at-most counts), then single changes by
// (position, digit ascending), then pairs by (low position, high position,
// low digit, high digit). The Alteration reference is reused between calls.
// The visitor returns false to stop early; the function returns false iff the
// walk was stopped.
//
// Requires ds canonical. Rejects configurations whose altered values could
// reach kValueLimit (std::out_of_range).
bool for_each_alteration(const DigitString& ds, ChangeCount count, MsdPolicy policy,
                         const std::function<bool(const Alteration&, Value)>& visit);

// Materialized form of the walk above.
std::vector<std::pair<Alteration, Value>> alterations(const DigitString& ds,
                                                      ChangeCount count,
                                                      MsdPolicy policy);

// Closed-form size of the alteration stream for a canonical representation of
// the given length with a nonzero leading digit (any value of that shape
// yields the same count).
Value alteration_count(std::size_t length, unsigned base, ChangeCount count,
                       MsdPolicy policy);

const char* to_string(MsdPolicy policy);
std::string to_string(ChangeCount count);

}  // namespace stubborn
