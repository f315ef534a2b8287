#include "doctest.h"

#include <algorithm>
#include <string>

#include "vclab/fixtures.hpp"
#include "vclab/space.hpp"
#include "vclab/vcdim.hpp"

using namespace vclab;

namespace {

const char* kExample124 =
    R"({"domain": ["1","2","3","4"], "concepts": ["1000","0100","0010","1100","1010",)"
    R"("0110","1001","0101","0011","1110"], "dedup": true})";

// Oracle: the brute-force product-form embedding search, first in row-major order.
bool brute_embeds(const RelationSpace& src, const RelationSpace& dst) {
  std::vector<std::size_t> lm(src.rows(), 0), rm(src.cols(), 0);
  auto ok = [&] {
    for (std::size_t x = 0; x < src.rows(); ++x)
      for (std::size_t y = 0; y < src.cols(); ++y)
        if (src.at(x, y) != dst.at(lm[x], rm[y])) return false;
    return true;
  };
  std::size_t total_l = 1, total_r = 1;
  for (std::size_t i = 0; i < src.rows(); ++i) total_l *= dst.rows();
  for (std::size_t i = 0; i < src.cols(); ++i) total_r *= dst.cols();
  for (std::size_t a = 0; a < total_l; ++a) {
    std::size_t t = a;
    for (auto& v : lm) { v = t % dst.rows(); t /= dst.rows(); }
    for (std::size_t b = 0; b < total_r; ++b) {
      std::size_t u = b;
      for (auto& v : rm) { v = u % dst.cols(); u /= dst.cols(); }
      if (ok()) return true;
    }
  }
  return false;
}

RelationSpace random_relation(std::uint64_t& state, std::size_t rows, std::size_t cols) {
  std::vector<std::string> l, r;
  for (std::size_t i = 0; i < rows; ++i) l.push_back("x" + std::to_string(i));
  for (std::size_t j = 0; j < cols; ++j) r.push_back("y" + std::to_string(j));
  std::vector<std::uint8_t> rel;
  for (std::size_t k = 0; k < rows * cols; ++k) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    rel.push_back((state >> 33) & 1);
  }
  return RelationSpace(l, r, rel);
}

}  // namespace

TEST_CASE("load_space reads the 1.2.4 class") {
  auto s = load_space(kExample124);
  CHECK(s.size() == 4);
  CHECK(s.concepts().size() == 10);
  CHECK(s.contains(0b0111));
  CHECK_FALSE(s.contains(0));
}

TEST_CASE("load_space singleton power set") {
  auto s = load_space(R"({"domain": ["a"], "concepts": ["0","1"]})");
  CHECK(s.size() == 1);
  CHECK(s.concepts().size() == 2);
}

TEST_CASE("load_space errors") {
  CHECK_THROWS_AS(load_space(R"({"domain": ["a","b"], "concepts": ["01","011"]})"), Error);
  CHECK_THROWS_AS(load_space(R"({"domain": ["a","a"], "concepts": ["01"]})"), Error);
  CHECK_THROWS_AS(load_space(R"({"domain": ["a"], "concepts": []})"), Error);
  CHECK_THROWS_AS(load_space(R"({"domain": [], "concepts": ["0"]})"), Error);
  CHECK_THROWS_AS(load_space("{nope"), Error);
  CHECK_THROWS_AS(load_space(R"({"domain": ["a"], "concepts": ["2"]})"), Error);
}

TEST_CASE("dedup keeps first occurrences, flag retains duplicates") {
  auto s = load_space(R"({"domain": ["a","b"], "concepts": ["01","10","01"]})");
  CHECK(s.concepts() == std::vector<Mask>{0b10, 0b01});
  auto t = load_space(R"({"domain": ["a","b"], "concepts": ["01","10","01"], "dedup": false})");
  CHECK(t.concepts().size() == 3);
  CHECK(t.has_duplicates());
  CHECK(t.distinct_count() == 2);
}

TEST_CASE("save and load round-trip") {
  for (const auto& id : fixtures::paper_example_ids()) {
    auto s = fixtures::paper_example(id);
    CHECK(load_space(save_space(s)) == s);
  }
  auto dup = ConceptSpace({"a", "b"}, {1, 1, 2}, false);
  CHECK(load_space(save_space(dup)) == dup);
}

TEST_CASE("restrict the 1.2.4 class to {1,2}") {
  auto s = load_space(kExample124);
  auto r = restrict_space(s, std::vector<std::string>{"1", "2"});
  CHECK(r.domain() == std::vector<std::string>{"1", "2"});
  // bit-string order: 00, 01, 10, 11
  CHECK(r.concepts() == std::vector<Mask>{0b00, 0b10, 0b01, 0b11});
  CHECK_THROWS_AS(restrict_space(s, std::vector<std::string>{}), Error);
  CHECK_THROWS_AS(restrict_space(s, std::vector<std::string>{"9"}), Error);
}

TEST_CASE("restriction of a power set is a power set") {
  auto p = fixtures::power_set(3);
  for (Mask a : {Mask{0b011}, Mask{0b101}, Mask{0b110}}) {
    auto r = restrict_space(p, a);
    CHECK(r.concepts().size() == 4);
  }
  auto whole = restrict_space(p, p.full());
  CHECK(whole.concepts().size() == p.concepts().size());
}

TEST_CASE("restriction is idempotent and composes") {
  auto s = fixtures::paper_example("1.2.5");
  Mask a = 0b1110, b = 0b0110;
  auto ra = restrict_space(s, a);
  auto rab = restrict_space(ra, compress_bits(b, a));
  auto rb = restrict_space(s, b);
  CHECK(rab == rb);
  CHECK(restrict_space(ra, ra.full()) == ra);
}

TEST_CASE("dual is an involution") {
  std::uint64_t state = 11;
  for (int i = 0; i < 20; ++i) {
    auto r = random_relation(state, 1 + i % 5, 1 + (i * 7) % 6);
    CHECK(dual(dual(r)) == r);
  }
}

TEST_CASE("dual of the 3-chain of initial segments") {
  auto s = fixtures::initial_segments(3);
  auto d = to_concept_space(dual(to_relation(s)));
  CHECK(d.size() == 4);
  CHECK(d.concepts().size() == 3);
  // point p_k lies in the segments I_j with j >= k: the columns are nested
  auto c = d.concepts();
  CHECK(is_subset(c[2], c[1]));
  CHECK(is_subset(c[1], c[0]));
  CHECK(vc_of(d) == 1);
}

TEST_CASE("dual of the power set on two points has vc 1") {
  auto r = to_relation(fixtures::power_set(2));
  auto d = dual(r);
  CHECK(d.rows() == 4);
  CHECK(d.cols() == 2);
  CHECK(vc_of(to_concept_space(d)) == 1);
}

TEST_CASE("reduce drops repeated rows and columns") {
  ConceptSpace s({"a", "b", "c"}, {0b011, 0b011, 0b100}, false);
  auto r = to_relation(s, true);
  CHECK(r.cols() == 2);
  CHECK(r.rows() == 2);
}

TEST_CASE("check_embedding") {
  auto r = to_relation(fixtures::paper_example("1.2.4"));
  EmbeddingMap id;
  for (std::size_t i = 0; i < r.rows(); ++i) id.left_map.push_back(i);
  for (std::size_t j = 0; j < r.cols(); ++j) id.right_map.push_back(j);
  CHECK(check_embedding(r, r, id));

  auto p1 = to_relation(fixtures::power_set(1));  // concepts: {} {p1}
  auto p2 = to_relation(fixtures::power_set(2));  // {} {p1} {p2} {p1,p2}
  EmbeddingMap inc{{0}, {0, 1}, std::nullopt};
  CHECK(check_embedding(p1, p2, inc));
  EmbeddingMap bad{{0}, {1, 1}, std::nullopt};
  CHECK_FALSE(check_embedding(p1, p2, bad));
  EmbeddingMap out_of_range{{5}, {0, 1}, std::nullopt};
  CHECK_THROWS_AS(check_embedding(p1, p2, out_of_range), Error);
}

TEST_CASE("pair maps must factor") {
  std::vector<std::pair<std::size_t, std::size_t>> grid{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  auto m = EmbeddingMap::from_pair_map(2, 2, grid);
  CHECK(m.left_map == std::vector<std::size_t>{0, 1});
  CHECK(m.pair_map() == grid);
  grid[3] = {1, 0};
  CHECK_THROWS_AS(EmbeddingMap::from_pair_map(2, 2, grid), Error);
}

TEST_CASE("find_embedding examples") {
  auto r = to_relation(fixtures::paper_example("1.2.5"), true);
  auto small = to_relation(fixtures::power_set(2));
  auto found = find_embedding(small, small, false);
  REQUIRE(found);
  CHECK(check_embedding(small, small, *found));

  auto chain = to_relation(fixtures::initial_segments(3));
  CHECK_FALSE(find_embedding(small, chain, false).has_value());

  RelationSpace one({"x"}, {"y"}, {1});
  RelationSpace zero({"x"}, {"y"}, {0});
  CHECK_FALSE(find_embedding(one, zero, false).has_value());
  auto g = find_embedding(one, zero, true);
  REQUIRE(g);
  REQUIRE(g->flip);
  CHECK((*g->flip)[0]);

  CHECK_THROWS_AS(find_embedding(r, to_relation(fixtures::power_set(5)), false), CapExceeded);
}

TEST_CASE("find_embedding agrees with brute force") {
  std::uint64_t state = 99;
  for (int i = 0; i < 60; ++i) {
    auto src = random_relation(state, 1 + i % 3, 1 + (i / 3) % 3);
    auto dst = random_relation(state, 2 + i % 3, 2 + (i / 2) % 3);
    auto m = find_embedding(src, dst, false);
    CHECK(m.has_value() == brute_embeds(src, dst));
    if (m) CHECK(check_embedding(src, dst, *m));
  }
}

TEST_CASE("labelled samples") {
  auto s = fixtures::initial_segments(4);
  LabelledSample a(s, {{"p2", true}, {"p4", false}, {"p2", true}});
  CHECK(a.support() == 0b1010);
  CHECK(a.labels() == 0b0010);
  CHECK_THROWS_AS(LabelledSample(s, {{"p1", true}, {"p1", false}}), Error);
  CHECK_THROWS_AS(LabelledSample(s, {{"q", true}}), Error);
}
