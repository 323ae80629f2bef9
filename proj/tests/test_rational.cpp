#include <doctest.h>

#include <optional>

#include "rforest/errors.hpp"
#include "rforest/rational.hpp"

using namespace rforest;

namespace {

// Oracle: literal scan over denominators 1..max_den, numerators upward.
std::optional<Rat> simplest_by_scan(const Rat& lo, bool lo_c, const Rat& hi, bool hi_c,
                                    long max_den) {
  for (long q = 1; q <= max_den; ++q) {
    Rat qr(q, 1);
    Int p_lo = lo_c ? ceil_rat(lo * qr) : floor_rat(lo * qr) + 1;
    Int p_hi = hi_c ? floor_rat(hi * qr) : ceil_rat(hi * qr) - 1;
    if (p_lo <= p_hi) return rat(p_lo, Int(q));
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("parse and format round in lowest terms") {
  CHECK(format_rat(parse_rat("6/4")) == "3/2");
  CHECK(format_rat(parse_rat("-6/4")) == "-3/2");
  CHECK(format_rat(parse_rat("0/7")) == "0");
  CHECK(format_rat(parse_rat("10")) == "10");
  CHECK(parse_rat("7/2") == rat(7, 2));
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* s : {"", "1.5", "1/0", "a", "1/", "/2", "+3", "3/2/5", "2 ", " 2", "-"}) {
    CHECK_THROWS_AS(parse_rat(s), Error);
  }
  try {
    parse_rat("1.5");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_rational_value);
  }
}

TEST_CASE("floor and ceil on negatives") {
  CHECK(floor_rat(rat(-5, 2)) == -3);
  CHECK(ceil_rat(rat(-5, 2)) == -2);
  CHECK(floor_rat(rat(5, 2)) == 2);
  CHECK(ceil_rat(rat(5, 2)) == 3);
  CHECK(floor_rat(rat(4, 2)) == 2);
  CHECK(ceil_rat(rat(4, 2)) == 2);
}

TEST_CASE("extended distance truncation") {
  CHECK(truncate_ext(std::nullopt, rat(3)) == rat(3));
  CHECK(truncate_ext(rat(1, 2), rat(3)) == rat(1, 2));
  CHECK(truncate_ext(rat(5), rat(3)) == rat(3));
  CHECK(format_ext(std::nullopt) == "INF");
  CHECK(format_ext(rat(3, 2)) == "3/2");
}

TEST_CASE("simplest_in pinned values") {
  // No integer strictly inside (2,3); first denominator-2 hit is 5/2.
  CHECK(simplest_in(rat(2), false, rat(3), false) == rat(5, 2));
  // Closed left endpoint is admissible immediately.
  CHECK(simplest_in(rat(2), true, rat(3), false) == rat(2));
  // Integer range picks the least integer.
  CHECK(simplest_in(rat(2), false, rat(5), false) == rat(3));
  CHECK(simplest_in(rat(0), true, rat(1, 64), false) == rat(0));
  CHECK(simplest_in(rat(1, 3), false, rat(2, 3), false) == rat(1, 2));
  CHECK(simplest_in(rat(7, 2), true, rat(7, 2), true) == rat(7, 2));
  // Narrow window away from simple fractions.
  CHECK(simplest_in(rat(28, 100), false, rat(45, 100), false) == rat(1, 3));
}

TEST_CASE("simplest_in matches the literal denominator scan") {
  // Deterministic sweep over small-denominator interval endpoints.
  int checked = 0;
  for (long an = 0; an <= 20; ++an) {
    for (long ad : {1L, 2L, 3L, 5L, 7L}) {
      for (long span_n = 1; span_n <= 9; span_n += 4) {
        for (long span_d : {2L, 3L, 11L}) {
          Rat lo = rat(an, ad);
          Rat hi = lo + rat(span_n, span_d);
          for (int flags = 0; flags < 4; ++flags) {
            bool lc = flags & 1, hc = flags & 2;
            auto expect = simplest_by_scan(lo, lc, hi, hc, 1024);
            REQUIRE(expect.has_value());
            CHECK(simplest_in(lo, lc, hi, hc) == *expect);
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 1000);
}
