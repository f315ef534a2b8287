#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "vclab/bits.hpp"
#include "vclab/bounds.hpp"

using namespace vclab;
using namespace vclab::bounds;

namespace {

// Pascal's rule on big integers.
BigInt pascal_leq(std::uint64_t m, std::uint64_t d) {
  std::vector<BigInt> row{1};
  for (std::uint64_t i = 1; i <= m; ++i) {
    std::vector<BigInt> next(row.size() + 1, 1);
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  BigInt total = 0;
  for (std::uint64_t j = 0; j <= std::min(m, d); ++j) total += row[j];
  return total;
}

// The tail sum term by term in plain double arithmetic.
double direct_tail(std::uint64_t m, const std::vector<std::uint64_t>& copies, double eps) {
  double total = 0, binom = 1;
  for (std::uint64_t i = 0; i < copies.size() && i <= m; ++i) {
    if (i > 0) binom = binom * static_cast<double>(m - i + 1) / static_cast<double>(i);
    total += static_cast<double>(copies[i]) * binom * std::pow(1 - eps, static_cast<double>(m - i));
  }
  return total;
}

double fw(double eps, double delta, double d, double beta) {
  return (std::log(1 / delta) / eps + d + d / eps * std::log(1 / (beta * eps))) / (1 - beta);
}

}  // namespace

TEST_CASE("binom_leq against Pascal") {
  for (std::uint64_t m = 0; m <= 40; ++m)
    for (std::uint64_t d = 0; d <= m + 1; ++d) CHECK(binom_leq(m, d) == pascal_leq(m, d));
}

TEST_CASE("the 884 inequality in exact integers") {
  CHECK(binom_leq(884, 7) == BigInt("82388258805306052"));
  CHECK(18418 * binom_leq(884, 5) == BigInt("82389740221003576"));
  CHECK(binom_leq(884, 7) <= 18418 * binom_leq(884, 5));
  CHECK(binom_leq(884, 7) > 18417 * binom_leq(884, 5));
  CHECK(pascal_leq(884, 7) == binom_leq(884, 7));
}

TEST_CASE("tail_bound against the direct sum") {
  double expect = std::pow(0.7, 20) + 20 * std::pow(0.7, 19);
  CHECK(static_cast<double>(tail_bound(20, 1, 0.3)) == doctest::Approx(expect).epsilon(1e-12));
  for (std::uint64_t m : {1u, 5u, 30u, 200u}) {
    for (double eps : {0.05, 0.3, 0.9}) {
      std::vector<std::uint64_t> copies{3, 1, 7};
      double a = static_cast<double>(tail_bound(m, copies, eps));
      CHECK(a == doctest::Approx(direct_tail(m, copies, eps)).epsilon(1e-10));
    }
  }
  CHECK(tail_bound(3, 5, 0.5) == doctest::Approx(3.375));  // (1 + 1/2)^3, keys above m drop
  CHECK(tail_bound(10, 2, 1.0) == 0);
  CHECK(tail_bound(2, 2, 1.0) == 1);
  CHECK_THROWS_AS(tail_bound(10, 1, 0.0), Error);
}

TEST_CASE("closed forms at a fixed beta") {
  BoundQuery q;
  q.epsilon = 0.1;
  q.delta = 0.05;
  q.d = 3;
  q.beta = 0.25;
  CHECK(bound_value(Which::floyd_warmuth, q) == doctest::Approx(fw(0.1, 0.05, 3, 0.25)));
  double st = (std::log(2 / 0.05) / 0.1 + 2 * 3 * std::log(2.0) / 0.1 +
               3 / 0.1 * std::log(1 / (0.1 * 0.25 * 0.25))) / 0.75;
  CHECK(bound_value(Which::shawe_taylor, q) == doctest::Approx(st));
  q.n = 1;
  CHECK(bound_value(Which::copy, q) == doctest::Approx(bound_value(Which::floyd_warmuth, q)));
  q.n = 10;
  CHECK(bound_value(Which::copy, q) ==
        doctest::Approx(fw(0.1, 0.05, 3, 0.25) + std::log(10.0) / 0.1 / 0.75));
  double blumer = std::max(4 / 0.1 * std::log2(2 / 0.05), 8 * 3 / 0.1 * std::log2(13 / 0.1));
  CHECK(bound_value(Which::blumer, q) == doctest::Approx(blumer));
  q.beta.reset();
  CHECK_THROWS_AS(bound_value(Which::floyd_warmuth, q), Error);
  q.beta = 1.0;
  CHECK_THROWS_AS(bound_value(Which::floyd_warmuth, q), Error);
}

TEST_CASE("optimize_beta beats a fine grid") {
  for (Which w : {Which::floyd_warmuth, Which::shawe_taylor, Which::copy}) {
    for (int d : {1, 4, 12}) {
      BoundQuery q;
      q.epsilon = 0.07;
      q.delta = 0.02;
      q.d = d;
      q.n = 50;
      auto opt = optimize_beta(w, q);
      CHECK(opt.unimodal);
      double best = 1e300;
      for (int i = 1; i < 200000; ++i) {
        q.beta = i / 200000.0;
        best = std::min(best, bound_value(w, q));
      }
      CHECK(opt.value <= best + 1e-9);
      CHECK(opt.value >= best - 1e-3);
    }
  }
  CHECK_THROWS_AS(optimize_beta(Which::blumer, BoundQuery{}), Error);
}

TEST_CASE("884 worked example bounds") {
  BoundQuery q;
  q.epsilon = 0.05;
  q.delta = 0.05;
  q.d = 5;
  q.n = 18418;
  auto copy = optimize_beta(Which::copy, q);
  CHECK(std::abs(std::ceil(copy.value) - 879) <= 1);
  q.d = 7;
  q.n = 1;
  auto f = optimize_beta(Which::floyd_warmuth, q);
  CHECK(f.value > 884);
}

TEST_CASE("figure rows: compression beats the general bound") {
  auto rows = figure31_data(0.05, 0.05, 50);
  REQUIRE(rows.size() == 50);
  for (const auto& r : rows) {
    CHECK(r.f < r.g);
    CHECK(r.beta_fw > 0);
    CHECK(r.beta_fw < 1);
  }
  CHECK(rows[0].d == 1);
  CHECK(rows[0].f == doctest::Approx(185.36).epsilon(1e-4));
  CHECK(rows[0].g == doctest::Approx(279.13).epsilon(1e-4));
  double grid = 1e300;
  for (int i = 1; i < 1000000; ++i) grid = std::min(grid, fw(0.05, 0.05, 3, i / 1e6));
  CHECK(std::abs(rows[2].f - grid) < 0.5);
  CHECK(rows[2].f <= grid + 1e-9);
  auto csv = figure31_csv(rows);
  CHECK(csv.rfind("d,beta_fw,f,beta_st,g\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 51);
  auto serial = figure31_data(0.05, 0.05, 10, Exec::serial);
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].f == rows[i].f);
}

TEST_CASE("the ceiled bound controls the tail") {
  for (int d : {1, 3, 7}) {
    auto c = check_lemma322(0.05, 0.05, d, 1, 0.2);
    CHECK(c.holds);
    CHECK(c.tail <= 0.05L);
  }
  auto c = check_lemma322(0.05, 0.05, 5, 18418, 0.11);
  CHECK(c.holds);
}

TEST_CASE("parse_which") {
  CHECK(parse_which("fw") == Which::floyd_warmuth);
  CHECK(parse_which("st") == Which::shawe_taylor);
  CHECK(parse_which("blumer") == Which::blumer);
  CHECK(parse_which("copy") == Which::copy);
  CHECK_THROWS_AS(parse_which("vapnik"), Error);
  CHECK(to_string(Which::copy) == "copy");
}
