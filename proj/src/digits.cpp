#include "stubborn/digits.hpp"

#include <algorithm>
#include <stdexcept>

namespace stubborn {

namespace {

constexpr char kDigitChars[] = "0123456789abcdef";

void check_base(unsigned base) {
  if (base < 2 || base > 16) throw std::invalid_argument("base must be in [2, 16]");
}

int digit_of_char(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

DigitString::DigitString(Value n, unsigned base) : base_(base) {
  check_base(base);
  if (n >= kValueLimit) throw std::out_of_range("value out of supported range");
  if (n == 0) {
    digits_.push_back(0);
    return;
  }
  while (n > 0) {
    digits_.push_back(static_cast<std::uint8_t>(n % base));
    n /= base;
  }
}

DigitString DigitString::parse(std::string_view text, unsigned base) {
  check_base(base);
  if (text.empty()) throw std::invalid_argument("empty digit string");
  DigitString ds;
  ds.base_ = base;
  ds.digits_.reserve(text.size());
  for (auto it = text.rbegin(); it != text.rend(); ++it) {
    int d = digit_of_char(*it);
    if (d < 0 || static_cast<unsigned>(d) >= base)
      throw std::invalid_argument("digit out of range for base");
    ds.digits_.push_back(static_cast<std::uint8_t>(d));
  }
  return ds;
}

Value DigitString::value() const {
  Value acc = 0;
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (acc > (kValueLimit - 1 - digits_[i]) / base_)
      throw std::out_of_range("value out of supported range");
    acc = acc * base_ + digits_[i];
  }
  return acc;
}

bool DigitString::canonical() const {
  if (digits_.empty()) return false;
  if (digits_.size() == 1) return true;
  return digits_.back() != 0;
}

std::string DigitString::str() const {
  std::string out;
  out.reserve(digits_.size());
  for (std::size_t i = digits_.size(); i-- > 0;) out.push_back(kDigitChars[digits_[i]]);
  return out;
}

Value apply_alteration(const DigitString& ds, const Alteration& alt) {
  Value v = ds.value();
  Value pow = 1;
  std::size_t next = 0;
  for (std::size_t pos = 0; pos < ds.length() && next < alt.size(); ++pos) {
    if (alt[next].position == pos) {
      v -= ds.digit(pos) * pow;
      v += alt[next].new_digit * pow;
      ++next;
    }
    pow *= ds.base();
  }
  return v;
}

bool for_each_alteration(const DigitString& ds, ChangeCount count, MsdPolicy policy,
                         const std::function<bool(const Alteration&, Value)>& visit) {
  if (!ds.canonical()) throw std::invalid_argument("digit string not canonical");
  if (count.limit > 2) throw std::invalid_argument("at most two digit changes are supported");
  const unsigned base = ds.base();
  const std::size_t len = ds.length();
  // All altered values live below base^len; reject lengths that could
  // produce values at or above the limit.
  if (!checked_pow(base, static_cast<unsigned>(len)))
    throw std::out_of_range("altered values could exceed the supported range");

  std::vector<Value> pow(len);
  pow[0] = 1;
  for (std::size_t i = 1; i < len; ++i) pow[i] = pow[i - 1] * base;

  const Value base_value = ds.value();
  const std::size_t msd = len - 1;
  const bool no_msd_zero = policy == MsdPolicy::NoMsdZero;

  const bool want_empty = (count.mode == CountMode::AtMost) || count.limit == 0;
  const bool want_single =
      (count.mode == CountMode::AtMost && count.limit >= 1) ||
      (count.mode == CountMode::Exactly && count.limit == 1);
  const bool want_pair =
      (count.mode == CountMode::AtMost && count.limit >= 2) ||
      (count.mode == CountMode::Exactly && count.limit == 2);

  Alteration alt;
  if (want_empty) {
    if (!visit(alt, base_value)) return false;
  }

  auto digit_ok = [&](std::size_t pos, unsigned d) {
    if (d == ds.digit(pos)) return false;
    if (no_msd_zero && pos == msd && d == 0) return false;
    return true;
  };

  for (std::size_t p1 = 0; p1 < len; ++p1) {
    const Value v1_base = base_value - ds.digit(p1) * pow[p1];
    if (want_single) {
      for (unsigned d1 = 0; d1 < base; ++d1) {
        if (!digit_ok(p1, d1)) continue;
        alt.clear();
        alt.push(static_cast<std::uint32_t>(p1), static_cast<std::uint8_t>(d1));
        if (!visit(alt, v1_base + d1 * pow[p1])) return false;
      }
    }
    if (want_pair) {
      for (std::size_t p2 = p1 + 1; p2 < len; ++p2) {
        const Value v2_base = v1_base - ds.digit(p2) * pow[p2];
        for (unsigned d1 = 0; d1 < base; ++d1) {
          if (!digit_ok(p1, d1)) continue;
          const Value v_d1 = v2_base + d1 * pow[p1];
          for (unsigned d2 = 0; d2 < base; ++d2) {
            if (!digit_ok(p2, d2)) continue;
            alt.clear();
            alt.push(static_cast<std::uint32_t>(p1), static_cast<std::uint8_t>(d1));
            alt.push(static_cast<std::uint32_t>(p2), static_cast<std::uint8_t>(d2));
            if (!visit(alt, v_d1 + d2 * pow[p2])) return false;
          }
        }
      }
    }
  }
  return true;
}

std::vector<std::pair<Alteration, Value>> alterations(const DigitString& ds,
                                                      ChangeCount count,
                                                      MsdPolicy policy) {
  std::vector<std::pair<Alteration, Value>> out;
  for_each_alteration(ds, count, policy, [&](const Alteration& alt, Value v) {
    out.emplace_back(alt, v);
    return true;
  });
  return out;
}

Value alteration_count(std::size_t length, unsigned base, ChangeCount count,
                       MsdPolicy policy) {
  check_base(base);
  if (length < 1) throw std::invalid_argument("length must be >= 1");
  if (count.limit > 2) throw std::invalid_argument("at most two digit changes are supported");
  const Value inner = base - 1;
  const Value msd = policy == MsdPolicy::NoMsdZero ? base - 2 : base - 1;
  const Value L = length;

  const Value singles = (L - 1) * inner + msd;
  Value pairs = 0;
  if (L >= 2) {
    pairs = (L - 1) * (L - 2) / 2 * inner * inner  // neither position is the msd
            + (L - 1) * inner * msd;               // high position is the msd
  }

  switch (count.mode) {
    case CountMode::AtMost:
      if (count.limit == 0) return 1;
      if (count.limit == 1) return 1 + singles;
      return 1 + singles + pairs;
    case CountMode::Exactly:
      if (count.limit == 0) return 1;
      if (count.limit == 1) return singles;
      if (count.limit == 2) return pairs;
      return 0;
  }
  return 0;
}

const char* to_string(MsdPolicy policy) {
  return policy == MsdPolicy::AllowMsdZero ? "allow-msd-zero" : "no-msd-zero";
}

std::string to_string(ChangeCount count) {
  std::string out = count.mode == CountMode::AtMost ? "atmost" : "exactly";
  out += static_cast<char>('0' + count.limit);
  return out;
}

}  // namespace stubborn
