#include "vclab/fixtures.hpp"

#include <algorithm>

namespace vclab::fixtures {

namespace {

std::vector<std::string> number_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Sets over 1-based point numbers.
std::vector<Mask> numbered(const std::vector<std::vector<int>>& sets) {
  std::vector<Mask> out;
  for (const auto& s : sets) {
    Mask m = 0;
    for (int x : s) m |= Mask{1} << (x - 1);
    out.push_back(m);
  }
  return out;
}

Mask num(std::initializer_list<int> xs) {
  Mask m = 0;
  for (int x : xs) m |= Mask{1} << (x - 1);
  return m;
}

void check_chain(std::size_t n) {
  if (n < 1 || n > kMaxDomain) throw Error("chain length must lie in 1..64");
}

}  // namespace

std::vector<std::string> chain_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

ConceptSpace power_set(std::size_t n) {
  if (n < 1 || n > 20) throw Error("power set size must lie in 1..20");
  std::vector<Mask> concepts;
  for (Mask m = 0; m <= full_mask(n); ++m) concepts.push_back(m);
  std::sort(concepts.begin(), concepts.end(), size_lex_less);
  return ConceptSpace(chain_names(n), std::move(concepts));
}

ConceptSpace initial_segments(std::size_t n) {
  check_chain(n);
  std::vector<Mask> concepts{0};
  for (std::size_t k = 1; k <= n; ++k) concepts.push_back(full_mask(k));
  return ConceptSpace(chain_names(n), std::move(concepts));
}

ConceptSpace final_segments(std::size_t n) {
  check_chain(n);
  std::vector<Mask> concepts{0};
  for (std::size_t k = 1; k <= n; ++k) concepts.push_back(full_mask(n) & ~full_mask(k - 1));
  return ConceptSpace(chain_names(n), std::move(concepts));
}

ConceptSpace size_at_most(std::size_t n, int d) {
  if (n < 1 || n > 24) throw Error("size-at-most-d needs 1..24 points");
  if (d < 0) throw Error("d must be nonnegative");
  std::vector<Mask> concepts;
  for (int j = 0; j <= std::min<int>(d, static_cast<int>(n)); ++j) {
    auto layer = submasks_of_size(full_mask(n), j);
    std::sort(layer.begin(), layer.end(), index_lex_less);
    concepts.insert(concepts.end(), layer.begin(), layer.end());
  }
  return ConceptSpace(chain_names(n), std::move(concepts));
}

ConceptSpace paper_example(const std::string& id, std::size_t chain) {
  if (id == "1.2.4" || id == "2.4.6") {
    return ConceptSpace(number_names(4),
                        numbered({{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4},
                                  {1, 2, 3}}));
  }
  if (id == "1.2.5") {
    return ConceptSpace(number_names(4),
                        numbered({{1}, {2}, {1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4},
                                  {1, 2, 3}, {1, 2, 4}}));
  }
  if (id == "2.1.4") return initial_segments(chain);
  if (id == "2.4.5") return ConceptSpace(number_names(5), numbered({{}, {1}, {2}, {1, 2}}));
  throw Error("unknown example '" + id + "'");
}

std::vector<std::string> paper_example_ids() { return {"1.2.4", "1.2.5", "2.1.4", "2.4.5", "2.4.6"}; }

CompressionScheme paper_scheme(const std::string& id, std::size_t chain) {
  if (id == "2.1.4" || id == "2.1.4-prime") {
    check_chain(chain);
    bool prime = id == "2.1.4-prime";
    EntryMap e;
    e.emplace(SchemeKey{0, 1, 0}, prime ? full_mask(chain) : Mask{0});
    for (std::size_t k = 1; k <= chain; ++k) {
      Mask segment = full_mask(k);
      if (prime) segment &= ~(Mask{1} << (k - 1));
      e.emplace(SchemeKey{Mask{1} << (k - 1), 1, 0}, segment);
    }
    return CompressionScheme::plain(chain, 1, SchemeKind::unlabelled, std::move(e));
  }
  if (id == "2.4.5") {
    EntryMap e;
    const Mask c[] = {0, num({1}), num({2}), num({1, 2})};
    for (std::uint32_t l = 1; l <= 4; ++l) e.emplace(SchemeKey{0, l, 0}, c[l - 1]);
    return CompressionScheme(5, 0, {4}, SchemeKind::unlabelled, std::move(e));
  }
  if (id == "2.4.6") {
    EntryMap e;
    auto put = [&](Mask key, std::uint32_t copy, Mask h) { e.emplace(SchemeKey{key, copy, 0}, h); };
    put(0, 1, num({1, 2}));
    put(0, 2, num({3, 4}));
    put(num({1}), 1, num({3}));
    put(num({1}), 2, num({1, 3}));
    put(num({2}), 1, num({1}));
    put(num({2}), 2, num({2, 4}));
    put(num({3}), 1, num({2}));
    put(num({3}), 2, num({1, 2, 3}));
    put(num({4}), 1, num({2, 3}));
    put(num({4}), 2, num({1, 4}));
    return CompressionScheme(4, 1, {2, 2}, SchemeKind::unlabelled, std::move(e));
  }
  throw Error("unknown example scheme '" + id + "'");
}

std::vector<std::string> paper_scheme_ids() { return {"2.1.4", "2.1.4-prime", "2.4.5", "2.4.6"}; }

CompressionScheme segment_scheme(std::size_t n, bool final) {
  check_chain(n);
  EntryMap e;
  e.emplace(SchemeKey{0, 1, 0}, Mask{0});
  for (std::size_t k = 1; k <= n; ++k) {
    Mask point = Mask{1} << (k - 1);
    Mask segment = final ? full_mask(n) & ~full_mask(k - 1) : full_mask(k);
    e.emplace(SchemeKey{point, 1, 0}, segment);
  }
  return CompressionScheme::plain(n, 1, SchemeKind::unlabelled, std::move(e));
}

}  // namespace vclab::fixtures
