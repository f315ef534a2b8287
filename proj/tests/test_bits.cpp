#include "doctest.h"

#include <algorithm>
#include <vector>

#include "vclab/bits.hpp"

using namespace vclab;

namespace {

std::vector<int> ids(Mask m) { return indices_of(m); }

}  // namespace

TEST_CASE("bit strings put point 0 first") {
  CHECK(to_bit_string(0b0101, 4) == "1010");
  CHECK(parse_bit_string("1010") == 0b0101);
  CHECK(parse_bit_string("") == 0);
  CHECK_THROWS_AS(parse_bit_string("10x"), Error);
  for (Mask m = 0; m < 64; ++m) CHECK(parse_bit_string(to_bit_string(m, 6)) == m);
}

TEST_CASE("bit_string_less matches string comparison") {
  for (Mask a = 0; a < 32; ++a) {
    for (Mask b = 0; b < 32; ++b) {
      CHECK(bit_string_less(a, b) == (to_bit_string(a, 5) < to_bit_string(b, 5)));
    }
  }
}

TEST_CASE("index_lex_less matches index vector comparison") {
  for (Mask a = 0; a < 64; ++a) {
    for (Mask b = 0; b < 64; ++b) {
      CHECK(index_lex_less(a, b) == (ids(a) < ids(b)));
    }
  }
}

TEST_CASE("size_lex order on three points") {
  std::vector<Mask> all;
  for (Mask m = 0; m < 8; ++m) all.push_back(m);
  std::sort(all.begin(), all.end(), size_lex_less);
  std::vector<Mask> expected{0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
  CHECK(all == expected);
}

TEST_CASE("compress and expand are inverse on the selector") {
  Mask sel = 0b1011'0110;
  for (Mask packed = 0; packed < 32; ++packed) {
    Mask spread = expand_bits(packed, sel);
    CHECK(is_subset(spread, sel));
    CHECK(compress_bits(spread, sel) == packed);
  }
  CHECK(compress_bits(0b1010, 0b1110) == 0b101);
}

TEST_CASE("submasks_of_size counts binomials") {
  Mask of = 0b1101'1010'0110;
  int n = popcount(of);
  long long binom = 1;
  for (int k = 0; k <= n; ++k) {
    auto subs = submasks_of_size(of, k);
    CHECK(static_cast<long long>(subs.size()) == binom);
    for (Mask s : subs) {
      CHECK(popcount(s) == k);
      CHECK(is_subset(s, of));
    }
    CHECK(std::is_sorted(subs.begin(), subs.end()));
    binom = binom * (n - k) / (k + 1);
  }
  CHECK(submasks_of_size(of, n + 1).empty());
  CHECK_THROWS_AS(submasks_of_size(~Mask{0}, 3), CapExceeded);
}

TEST_CASE("full_mask edges") {
  CHECK(full_mask(0) == 0);
  CHECK(full_mask(3) == 0b111);
  CHECK(full_mask(64) == ~Mask{0});
}
