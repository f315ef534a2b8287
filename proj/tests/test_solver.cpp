#include "doctest.h"

#include <set>

#include "vclab/fixtures.hpp"
#include "vclab/solver.hpp"
#include "vclab/vcdim.hpp"

using namespace vclab;

namespace {

std::uint64_t lcg(std::uint64_t& s) {
  s = s * 6364136223846793005ULL + 1442695040888963407ULL;
  return s >> 24;
}

ConceptSpace random_space(std::uint64_t& state, std::size_t n, int count) {
  std::vector<Mask> cs;
  for (int i = 0; i < count; ++i) cs.push_back(lcg(state) & full_mask(n));
  return ConceptSpace(fixtures::chain_names(n), cs);
}

std::vector<SchemeKey> all_keys(std::size_t n, int size, const std::vector<std::uint32_t>& copies,
                                bool labelled) {
  std::vector<SchemeKey> keys;
  for (Mask s = 0; s <= full_mask(n); ++s) {
    int k = popcount(s);
    if (k > size) continue;
    for (Mask lab = 0; lab <= s; ++lab) {
      if ((lab & ~s) || (!labelled && lab)) continue;
      for (std::uint32_t c = 1; c <= copies[static_cast<std::size_t>(k)]; ++c)
        keys.push_back({s, c, lab});
    }
  }
  return keys;
}

// Oracle: every assignment of hypotheses to keys, checked against the definition.
bool brute_exists(const ConceptSpace& s, int size, const std::vector<std::uint32_t>& copies,
                  bool labelled) {
  auto keys = all_keys(s.size(), size, copies, labelled);
  const std::uint64_t h = std::uint64_t{1} << s.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < keys.size(); ++i) total *= h;
  std::vector<Mask> hyp(keys.size());
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t t = code;
    for (auto& v : hyp) {
      v = t % h;
      t /= h;
    }
    bool ok = true;
    for (Mask a = 1; a <= s.full() && ok; ++a) {
      for (Mask c : s.concepts()) {
        Mask f = c & a;
        bool hit = false;
        for (std::size_t i = 0; i < keys.size() && !hit; ++i) {
          if (keys[i].points & ~a) continue;
          if (labelled && keys[i].labels != (f & keys[i].points)) continue;
          hit = (hyp[i] & a) == f;
        }
        if (!hit) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("2.4.6 class: no plain size-1 scheme, a 2-copy one exists") {
  auto s = fixtures::paper_example("2.4.6");
  auto plain = solve_scheme(s, 1, {}, SchemeKind::unlabelled);
  CHECK(plain.status == SolveStatus::unsat);
  CHECK(plain.counting_witness.has_value());
  CHECK_FALSE(plain.scheme.has_value());

  auto copy = solve_scheme(s, 1, {2, 2}, SchemeKind::unlabelled);
  REQUIRE(copy.status == SolveStatus::found);
  REQUIRE(copy.scheme);
  CHECK(copy.scheme->copies() == std::vector<std::uint32_t>{2, 2});
  CHECK(verify_scheme(s, *copy.scheme).ok);
}

TEST_CASE("2.4.5 class has a size-0 scheme with four copies") {
  auto s = fixtures::paper_example("2.4.5");
  auto r = solve_scheme(s, 0, {4}, SchemeKind::unlabelled);
  REQUIRE(r.status == SolveStatus::found);
  CHECK(verify_scheme(s, *r.scheme).ok);
  CHECK(solve_scheme(s, 0, {3}, SchemeKind::unlabelled).status == SolveStatus::unsat);
}

TEST_CASE("solver output is deterministic") {
  auto s = fixtures::paper_example("1.2.5");
  auto a = solve_scheme(s, 2, {}, SchemeKind::unlabelled);
  auto b = solve_scheme(s, 2, {}, SchemeKind::unlabelled);
  CHECK(a.status == b.status);
  CHECK(a.scheme == b.scheme);
  CHECK(a.stats.nodes == b.stats.nodes);
  CHECK(a.stats.constraints == b.stats.constraints);
}

TEST_CASE("solver agrees with exhaustive assignment on tiny spaces") {
  std::uint64_t state = 3;
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 3;
    auto s = random_space(state, n, 1 + trial % 6);
    for (int size = 0; size <= 1; ++size) {
      std::vector<std::uint32_t> ones(static_cast<std::size_t>(size) + 1, 1);
      auto r = solve_scheme(s, size, {}, SchemeKind::unlabelled);
      CHECK(r.status != SolveStatus::cap_exceeded);
      CHECK((r.status == SolveStatus::found) == brute_exists(s, size, ones, false));
      if (r.scheme) CHECK(verify_scheme(s, *r.scheme).ok);
    }
    if (n <= 2) {
      for (int size = 0; size <= 1; ++size) {
        std::vector<std::uint32_t> ones(static_cast<std::size_t>(size) + 1, 1);
        auto r = solve_scheme(s, size, {}, SchemeKind::labelled);
        CHECK((r.status == SolveStatus::found) == brute_exists(s, size, ones, true));
        if (r.scheme) CHECK(verify_scheme(s, *r.scheme).ok);
      }
      auto r = solve_scheme(s, 0, {2}, SchemeKind::unlabelled);
      CHECK((r.status == SolveStatus::found) == brute_exists(s, 0, {2}, false));
    }
  }
}

TEST_CASE("found at size d stays found at size d + 1") {
  std::uint64_t state = 17;
  for (int trial = 0; trial < 30; ++trial) {
    auto s = random_space(state, 3 + trial % 3, 2 + trial % 9);
    int vc = vc_of(s);
    auto at = solve_scheme(s, vc, {}, SchemeKind::unlabelled);
    auto above = solve_scheme(s, vc + 1, {}, SchemeKind::unlabelled);
    if (at.status == SolveStatus::found) CHECK(above.status == SolveStatus::found);
    if (vc > 0) CHECK(solve_scheme(s, vc - 1, {}, SchemeKind::unlabelled).status == SolveStatus::unsat);
  }
}

TEST_CASE("found stays found with more copies") {
  std::uint64_t state = 29;
  int found = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto s = random_space(state, 3 + trial % 3, 2 + trial % 8);
    for (int size = 0; size <= 1; ++size) {
      std::vector<std::uint32_t> base(static_cast<std::size_t>(size) + 1, 1);
      base[0] = 1 + trial % 2;
      auto r = solve_scheme(s, size, base, SchemeKind::unlabelled);
      if (r.status != SolveStatus::found) continue;
      ++found;
      for (std::size_t i = 0; i < base.size(); ++i) {
        auto more = base;
        ++more[i];
        CHECK(solve_scheme(s, size, more, SchemeKind::unlabelled).status == SolveStatus::found);
      }
      auto longer = base;
      longer.push_back(1);
      CHECK(solve_scheme(s, size + 1, longer, SchemeKind::unlabelled).status ==
            SolveStatus::found);
    }
  }
  CHECK(found > 5);
}

TEST_CASE("labelled schemes on the chain") {
  auto s = fixtures::initial_segments(5);
  auto r = solve_scheme(s, 1, {}, SchemeKind::labelled);
  REQUIRE(r.status == SolveStatus::found);
  CHECK(r.scheme->labelled());
  CHECK(verify_scheme(s, *r.scheme).ok);
  CHECK(solve_scheme(s, 0, {}, SchemeKind::labelled).status == SolveStatus::unsat);
}

TEST_CASE("caps") {
  auto big = fixtures::initial_segments(13);
  CHECK(solve_scheme(big, 1, {}, SchemeKind::unlabelled).status == SolveStatus::cap_exceeded);
  SolveOptions tight;
  tight.node_budget = 1;
  auto s = fixtures::paper_example("2.4.6");
  CHECK(solve_scheme(s, 1, {2, 2}, SchemeKind::unlabelled, tight).status ==
        SolveStatus::cap_exceeded);
  SolveOptions few;
  few.constraint_cap = 10;
  CHECK(solve_scheme(s, 1, {2, 2}, SchemeKind::unlabelled, few).status ==
        SolveStatus::cap_exceeded);
  CHECK_THROWS_AS(solve_scheme(s, -1, {}, SchemeKind::unlabelled), Error);
  CHECK_THROWS_AS(solve_scheme(s, 1, {2}, SchemeKind::unlabelled), Error);
  CHECK(to_string(SolveStatus::found) == "FOUND");
  CHECK(to_string(SolveStatus::unsat) == "UNSAT");
  CHECK(to_string(SolveStatus::cap_exceeded) == "CAP_EXCEEDED");
}
