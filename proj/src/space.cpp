#include "vclab/space.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "json.hpp"

namespace vclab {

using nlohmann::json;

std::string to_bit_string(Mask m, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if ((m >> i) & 1) s[i] = '1';
  }
  return s;
}

Mask parse_bit_string(const std::string& s) {
  if (s.size() > kMaxDomain) {
    throw Error("bit string longer than " + std::to_string(kMaxDomain));
  }
  Mask m = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      m |= Mask{1} << i;
    } else if (s[i] != '0') {
      throw Error("bit string contains '" + std::string(1, s[i]) + "'");
    }
  }
  return m;
}

ConceptSpace::ConceptSpace(std::vector<std::string> domain,
                           std::vector<Mask> concepts, bool dedup)
    : domain_(std::move(domain)) {
  if (domain_.empty()) throw Error("domain is empty");
  if (domain_.size() > kMaxDomain) {
    throw CapExceeded("domain has " + std::to_string(domain_.size()) +
                      " points; at most 64 are supported");
  }
  if (concepts.empty()) throw Error("concept class is empty");
  std::unordered_set<std::string_view> seen;
  for (const auto& name : domain_) {
    if (!seen.insert(name).second) {
      throw Error("duplicate point name '" + name + "'");
    }
  }
  Mask full = full_mask(domain_.size());
  for (Mask c : concepts) {
    if (c & ~full) throw Error("concept has bits outside the domain");
  }
  if (dedup) {
    std::unordered_set<Mask> kept;
    concepts_.reserve(concepts.size());
    for (Mask c : concepts) {
      if (kept.insert(c).second) concepts_.push_back(c);
    }
  } else {
    concepts_ = std::move(concepts);
  }
}

std::size_t ConceptSpace::index_of(std::string_view name) const {
  auto it = std::find(domain_.begin(), domain_.end(), name);
  if (it == domain_.end()) {
    throw Error("unknown point '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - domain_.begin());
}

Mask ConceptSpace::mask_of(const std::vector<std::string>& names) const {
  Mask m = 0;
  for (const auto& n : names) m |= Mask{1} << index_of(n);
  return m;
}

std::vector<std::string> ConceptSpace::names_of(Mask m) const {
  std::vector<std::string> out;
  for (int i : indices_of(m)) out.push_back(domain_[static_cast<std::size_t>(i)]);
  return out;
}

bool ConceptSpace::contains(Mask c) const {
  return std::find(concepts_.begin(), concepts_.end(), c) != concepts_.end();
}

bool ConceptSpace::has_duplicates() const { return distinct_count() != concepts_.size(); }

std::size_t ConceptSpace::distinct_count() const {
  std::vector<Mask> sorted = concepts_;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) -
                                  sorted.begin());
}

std::vector<Mask> traces(const ConceptSpace& space, Mask subset) {
  std::vector<Mask> out;
  out.reserve(space.concepts().size());
  for (Mask c : space.concepts()) out.push_back(c & subset);
  std::sort(out.begin(), out.end(), bit_string_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConceptSpace restrict_space(const ConceptSpace& space, Mask subset) {
  if (subset == 0) throw Error("restriction to the empty set");
  if (subset & ~space.full()) throw Error("subset outside the domain");
  std::vector<std::string> domain = space.names_of(subset);
  std::vector<Mask> concepts;
  for (Mask t : traces(space, subset)) concepts.push_back(compress_bits(t, subset));
  // compress_bits keeps relative order, so bit-string order is preserved.
  return ConceptSpace(std::move(domain), std::move(concepts), true);
}

ConceptSpace restrict_space(const ConceptSpace& space,
                            const std::vector<std::string>& subset) {
  return restrict_space(space, space.mask_of(subset));
}

ConceptSpace load_space(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed space file: ") + e.what());
  }
  try {
    if (!j.is_object()) throw Error("space file must be a JSON object");
    auto domain = j.at("domain").get<std::vector<std::string>>();
    auto strings = j.at("concepts").get<std::vector<std::string>>();
    bool dedup = j.value("dedup", true);
    std::vector<Mask> concepts;
    concepts.reserve(strings.size());
    for (const auto& s : strings) {
      if (s.size() != domain.size()) {
        throw Error("concept '" + s + "' has length " + std::to_string(s.size()) +
                    ", expected " + std::to_string(domain.size()));
      }
      concepts.push_back(parse_bit_string(s));
    }
    return ConceptSpace(std::move(domain), std::move(concepts), dedup);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed space file: ") + e.what());
  }
}

std::string save_space(const ConceptSpace& space) {
  json j;
  j["domain"] = space.domain();
  std::vector<std::string> concepts;
  for (Mask c : space.concepts()) concepts.push_back(to_bit_string(c, space.size()));
  j["concepts"] = concepts;
  j["dedup"] = !space.has_duplicates();
  return j.dump();
}

RelationSpace::RelationSpace(std::vector<std::string> left,
                             std::vector<std::string> right,
                             std::vector<std::uint8_t> rel)
    : left_(std::move(left)), right_(std::move(right)), rel_(std::move(rel)) {
  if (rel_.size() != left_.size() * right_.size()) {
    throw Error("relation matrix does not match the name lists");
  }
  for (auto& v : rel_) v = v ? 1 : 0;
}

RelationSpace to_relation(const ConceptSpace& space, bool reduce) {
  const auto& concepts = space.concepts();
  std::vector<std::size_t> rows, cols;
  if (reduce) {
    std::vector<Mask> seen_cols;
    for (std::size_t j = 0; j < concepts.size(); ++j) {
      if (std::find(seen_cols.begin(), seen_cols.end(), concepts[j]) == seen_cols.end()) {
        seen_cols.push_back(concepts[j]);
        cols.push_back(j);
      }
    }
    std::vector<std::vector<bool>> seen_rows;
    for (std::size_t i = 0; i < space.size(); ++i) {
      std::vector<bool> row;
      for (std::size_t j : cols) row.push_back((concepts[j] >> i) & 1);
      if (std::find(seen_rows.begin(), seen_rows.end(), row) == seen_rows.end()) {
        seen_rows.push_back(std::move(row));
        rows.push_back(i);
      }
    }
  } else {
    for (std::size_t j = 0; j < concepts.size(); ++j) cols.push_back(j);
    for (std::size_t i = 0; i < space.size(); ++i) rows.push_back(i);
  }
  std::vector<std::string> left, right;
  for (std::size_t i : rows) left.push_back(space.domain()[i]);
  for (std::size_t j : cols) right.push_back("c" + std::to_string(j));
  std::vector<std::uint8_t> rel;
  rel.reserve(rows.size() * cols.size());
  for (std::size_t i : rows) {
    for (std::size_t j : cols) rel.push_back((concepts[j] >> i) & 1);
  }
  return RelationSpace(std::move(left), std::move(right), std::move(rel));
}

RelationSpace dual(const RelationSpace& rs) {
  std::vector<std::uint8_t> t(rs.data().size());
  for (std::size_t i = 0; i < rs.rows(); ++i) {
    for (std::size_t j = 0; j < rs.cols(); ++j) {
      t[j * rs.rows() + i] = rs.at(i, j) ? 1 : 0;
    }
  }
  return RelationSpace(rs.right(), rs.left(), std::move(t));
}

ConceptSpace to_concept_space(const RelationSpace& rs) {
  std::vector<Mask> concepts;
  for (std::size_t j = 0; j < rs.cols(); ++j) {
    Mask c = 0;
    for (std::size_t i = 0; i < rs.rows(); ++i) {
      if (rs.at(i, j)) c |= Mask{1} << i;
    }
    concepts.push_back(c);
  }
  return ConceptSpace(rs.left(), std::move(concepts), false);
}

std::vector<std::pair<std::size_t, std::size_t>> EmbeddingMap::pair_map() const {
  std::vector<std::pair<std::size_t, std::size_t>> grid;
  grid.reserve(left_map.size() * right_map.size());
  for (std::size_t x : left_map) {
    for (std::size_t y : right_map) grid.emplace_back(x, y);
  }
  return grid;
}

EmbeddingMap EmbeddingMap::from_pair_map(
    std::size_t rows, std::size_t cols,
    const std::vector<std::pair<std::size_t, std::size_t>>& grid,
    std::optional<std::vector<bool>> flip) {
  if (grid.size() != rows * cols) throw Error("pair map is not total on the grid");
  EmbeddingMap m;
  m.flip = std::move(flip);
  for (std::size_t x = 0; x < rows; ++x) m.left_map.push_back(grid[x * cols].first);
  if (rows > 0) {
    for (std::size_t y = 0; y < cols; ++y) m.right_map.push_back(grid[y].second);
  }
  for (std::size_t x = 0; x < rows; ++x) {
    for (std::size_t y = 0; y < cols; ++y) {
      if (grid[x * cols + y] != m.image(x, y)) {
        throw Error("pair map does not factor into left and right maps");
      }
    }
  }
  return m;
}

bool check_embedding(const RelationSpace& src, const RelationSpace& dst,
                     const EmbeddingMap& map) {
  if (map.left_map.size() != src.rows() || map.right_map.size() != src.cols()) {
    throw Error("embedding map is not total on the source grid");
  }
  if (map.flip && map.flip->size() != src.rows()) {
    throw Error("flip vector does not match the source left side");
  }
  for (std::size_t x : map.left_map) {
    if (x >= dst.rows()) throw Error("embedding image outside the target grid");
  }
  for (std::size_t y : map.right_map) {
    if (y >= dst.cols()) throw Error("embedding image outside the target grid");
  }
  for (std::size_t x = 0; x < src.rows(); ++x) {
    bool flipped = map.flip && (*map.flip)[x];
    for (std::size_t y = 0; y < src.cols(); ++y) {
      auto [x2, y2] = map.image(x, y);
      if ((src.at(x, y) != flipped) != dst.at(x2, y2)) return false;
    }
  }
  return true;
}

namespace {

struct EmbeddingSearch {
  const RelationSpace& src;
  const RelationSpace& dst;
  bool generalized;
  // cols_with[x'][b]: target columns y' with dst(x', y') == b.
  std::vector<std::array<std::uint64_t, 2>> cols_with;
  std::vector<std::size_t> left_map;
  std::vector<bool> flip;

  bool run(std::size_t x, const std::vector<std::uint64_t>& candidates) {
    if (x == src.rows()) {
      final_candidates = candidates;
      return true;
    }
    for (int tau = 0; tau <= (generalized ? 1 : 0); ++tau) {
      for (std::size_t x2 = 0; x2 < dst.rows(); ++x2) {
        std::vector<std::uint64_t> next = candidates;
        bool ok = true;
        for (std::size_t y = 0; y < src.cols() && ok; ++y) {
          int want = (src.at(x, y) ? 1 : 0) ^ tau;
          next[y] &= cols_with[x2][static_cast<std::size_t>(want)];
          ok = next[y] != 0;
        }
        if (!ok) continue;
        left_map[x] = x2;
        flip[x] = tau != 0;
        if (run(x + 1, next)) return true;
      }
    }
    return false;
  }

  std::vector<std::uint64_t> final_candidates;
};

}  // namespace

std::optional<EmbeddingMap> find_embedding(const RelationSpace& src,
                                           const RelationSpace& dst,
                                           bool generalized) {
  if (src.rows() * src.cols() > kEmbedSrcCap) {
    throw CapExceeded("embedding search: source grid exceeds 16 cells");
  }
  if (dst.rows() * dst.cols() > kEmbedDstCap) {
    throw CapExceeded("embedding search: target grid exceeds 36 cells");
  }
  if (src.cols() > 0 && dst.cols() == 0) return std::nullopt;
  if (src.rows() > 0 && dst.rows() == 0) return std::nullopt;

  EmbeddingSearch search{src, dst, generalized, {}, {}, {}, {}};
  search.cols_with.resize(dst.rows());
  for (std::size_t x2 = 0; x2 < dst.rows(); ++x2) {
    for (std::size_t y2 = 0; y2 < dst.cols(); ++y2) {
      search.cols_with[x2][dst.at(x2, y2) ? 1 : 0] |= std::uint64_t{1} << y2;
    }
  }
  search.left_map.assign(src.rows(), 0);
  search.flip.assign(src.rows(), false);
  std::vector<std::uint64_t> all(src.cols(), full_mask(dst.cols()));
  if (!search.run(0, all)) return std::nullopt;

  EmbeddingMap m;
  m.left_map = search.left_map;
  for (std::uint64_t c : search.final_candidates) {
    m.right_map.push_back(static_cast<std::size_t>(std::countr_zero(c)));
  }
  if (generalized) m.flip = search.flip;
  return m;
}

LabelledSample::LabelledSample(
    const ConceptSpace& space, const std::vector<std::pair<std::string, bool>>& points) {
  std::vector<std::pair<std::size_t, bool>> idx;
  idx.reserve(points.size());
  for (const auto& [name, label] : points) idx.emplace_back(space.index_of(name), label);
  *this = LabelledSample(std::move(idx));
}

LabelledSample::LabelledSample(std::vector<std::pair<std::size_t, bool>> points)
    : points_(std::move(points)) {
  for (const auto& [i, label] : points_) {
    if (i >= kMaxDomain) throw Error("sample point index out of range");
    Mask bit = Mask{1} << i;
    if (support_ & bit) {
      if (((labels_ & bit) != 0) != label) {
        throw Error("conflicting labels for point " + std::to_string(i));
      }
    }
    support_ |= bit;
    if (label) labels_ |= bit;
  }
}

}  // namespace vclab
