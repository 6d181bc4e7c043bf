#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "stubborn/digits.hpp"

using namespace stubborn;

TEST_CASE("digit strings render msd-first and round-trip") {
  CHECK(DigitString(84, 2).str() == "1010100");
  CHECK(DigitString(1953, 3).str() == "2200100");
  CHECK(DigitString(0, 10).str() == "0");
  CHECK(DigitString::parse("1010100", 2).value() == 84);
  CHECK(DigitString::parse("0", 7).value() == 0);
  CHECK(DigitString::parse("977731833235239280", 10).value() == 977731833235239280ull);
}

TEST_CASE("bad bases and oversized values are rejected") {
  CHECK_THROWS_AS(DigitString(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(DigitString(5, 17), std::invalid_argument);
  CHECK_THROWS_AS(DigitString(kValueLimit, 10), std::out_of_range);
  CHECK_THROWS_AS(DigitString::parse("19", 9).value(), std::invalid_argument);
  // 19 decimal digits can overflow; value() must notice
  CHECK_THROWS_AS(DigitString::parse("9999999999999999999", 10).value(),
                  std::out_of_range);
}

TEST_CASE("parse keeps leading zeros but value ignores them") {
  const auto ds = DigitString::parse("0084", 10);
  CHECK(ds.length() == 4);
  CHECK_FALSE(ds.canonical());
  CHECK(ds.value() == 84);
}

TEST_CASE("round-trip identity across bases") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 2000; ++i) {
    const Value n = rng() % kValueLimit;
    for (unsigned base = 2; base <= 16; ++base) {
      CAPTURE(n);
      CAPTURE(base);
      REQUIRE(DigitString(n, base).value() == n);
    }
  }
}

TEST_CASE("single-digit alteration stream") {
  const DigitString four(4, 10);

  SUBCASE("at most two changes reach every other digit plus the identity") {
    const auto all = alterations(four, ChangeCount::at_most(2), MsdPolicy::AllowMsdZero);
    CHECK(all.size() == 10);
    std::set<Value> values;
    for (const auto& [alt, v] : all) values.insert(v);
    CHECK(values == std::set<Value>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  }

  SUBCASE("exactly two changes cannot touch a one-digit number") {
    CHECK(alterations(four, ChangeCount::exactly(2), MsdPolicy::AllowMsdZero).empty());
    CHECK(alterations(four, ChangeCount::exactly(2), MsdPolicy::NoMsdZero).empty());
  }
}

TEST_CASE("alteration stream matches the closed-form count") {
  const DigitString ds(84, 2);  // 1010100
  const auto all = alterations(ds, ChangeCount::at_most(2), MsdPolicy::AllowMsdZero);
  CHECK(all.size() == 29);  // 1 + 7 + C(7,2)
  CHECK(alteration_count(7, 2, ChangeCount::at_most(2), MsdPolicy::AllowMsdZero) == 29);
}

TEST_CASE("exactly-two alterations of 1001 in base 2 without msd-to-zero") {
  const DigitString ds(9, 2);
  const auto all = alterations(ds, ChangeCount::exactly(2), MsdPolicy::NoMsdZero);
  std::set<Value> values;
  for (const auto& [alt, v] : all) values.insert(v);
  CHECK(values == std::set<Value>{10, 12, 15});
  CHECK(alteration_count(4, 2, ChangeCount::exactly(2), MsdPolicy::NoMsdZero) == 3);
}

TEST_CASE("alteration_count edge cases") {
  CHECK(alteration_count(1, 7, ChangeCount::exactly(2), MsdPolicy::AllowMsdZero) == 0);
  CHECK(alteration_count(1, 7, ChangeCount::exactly(2), MsdPolicy::NoMsdZero) == 0);
  CHECK(alteration_count(1, 10, ChangeCount::at_most(0), MsdPolicy::AllowMsdZero) == 1);
  CHECK(alteration_count(18, 10, ChangeCount::at_most(2), MsdPolicy::AllowMsdZero) ==
        12556);
}

TEST_CASE("enumeration agrees with the naive whole-vector oracle") {
  std::mt19937_64 rng(7);
  const ChangeCount counts[] = {ChangeCount::at_most(1), ChangeCount::at_most(2),
                                ChangeCount::exactly(1), ChangeCount::exactly(2)};
  for (unsigned base = 2; base <= 5; ++base) {
    for (unsigned len = 1; len <= 5; ++len) {
      for (int rep = 0; rep < 20; ++rep) {
        // canonical value of exactly len digits
        Value lo = 1;
        for (unsigned i = 1; i < len; ++i) lo *= base;
        const Value n = len == 1 ? rng() % base : lo + rng() % (lo * (base - 1));
        const DigitString ds(n, base);
        REQUIRE(ds.length() == len);
        for (const auto count : counts) {
          for (const auto policy : {MsdPolicy::AllowMsdZero, MsdPolicy::NoMsdZero}) {
            std::set<Value> got;
            for (const auto& [alt, v] : alterations(ds, count, policy)) got.insert(v);
            const auto want = oracles::naive_altered_values(n, base, count, policy);
            CAPTURE(n);
            CAPTURE(base);
            REQUIRE(got == want);
          }
        }
      }
    }
  }
}

TEST_CASE("count agreement between formula and stream") {
  std::mt19937_64 rng(11);
  const ChangeCount counts[] = {ChangeCount::at_most(2), ChangeCount::exactly(2),
                                ChangeCount::at_most(1), ChangeCount::exactly(1)};
  for (unsigned base = 2; base <= 10; ++base) {
    for (unsigned len = 1; len <= 8; ++len) {
      Value lo = 1;
      for (unsigned i = 1; i < len; ++i) lo *= base;
      const Value n = len == 1 ? 1 + rng() % (base - 1) : lo + rng() % (lo * (base - 1));
      const DigitString ds(n, base);
      for (const auto count : counts)
        for (const auto policy : {MsdPolicy::AllowMsdZero, MsdPolicy::NoMsdZero})
          CHECK(alterations(ds, count, policy).size() ==
                alteration_count(len, base, count, policy));
    }
  }
}

TEST_CASE("distinct alterations give distinct digit sequences") {
  const DigitString ds(1953, 3);
  std::set<std::vector<std::uint8_t>> sequences;
  std::size_t total = 0;
  for_each_alteration(ds, ChangeCount::at_most(2), MsdPolicy::AllowMsdZero,
                      [&](const Alteration& alt, Value) {
                        auto digits = ds.digits();
                        for (std::size_t i = 0; i < alt.size(); ++i)
                          digits[alt[i].position] = alt[i].new_digit;
                        sequences.insert(digits);
                        ++total;
                        return true;
                      });
  CHECK(sequences.size() == total);
}

TEST_CASE("enumeration order starts with the identity, then low positions") {
  const DigitString ds(84, 2);
  std::vector<Value> order;
  for_each_alteration(ds, ChangeCount::at_most(2), MsdPolicy::AllowMsdZero,
                      [&](const Alteration&, Value v) {
                        order.push_back(v);
                        return order.size() < 4;
                      });
  // 1010100 -> identity, flip bit 0, then pairs (0,1), ...
  CHECK(order[0] == 84);
  CHECK(order[1] == 85);
  CHECK(order[2] == 87);  // bits 0 and 1 both flipped
}

TEST_CASE("altered values reject configurations that could overflow") {
  // 9.9e18 < 2^63 is fine as a value, but a 19-digit decimal candidate could
  // be altered past the limit.
  const Value nineteen_digits = 5'000'000'000'000'000'000ull;
  const DigitString ds(nineteen_digits, 10);
  CHECK_THROWS_AS(alterations(ds, ChangeCount::at_most(2), MsdPolicy::AllowMsdZero),
                  std::out_of_range);
  // 63 binary digits stay in range
  const DigitString bits(kValueLimit - 1, 2);
  CHECK(bits.length() == 63);
  std::size_t seen = 0;
  for_each_alteration(bits, ChangeCount::at_most(1), MsdPolicy::AllowMsdZero,
                      [&](const Alteration&, Value) {
                        ++seen;
                        return seen < 5;
                      });
  CHECK(seen == 5);
}
