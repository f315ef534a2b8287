#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vclab/bits.hpp"

namespace vclab {

/// A finite domain of named points together with a family of concepts.
///
/// Concepts are masks over the domain order. With dedup (the default) the
/// concept list holds pairwise distinct masks in first-occurrence order.
class ConceptSpace {
public:
  ConceptSpace(std::vector<std::string> domain, std::vector<Mask> concepts,
               bool dedup = true);

  const std::vector<std::string>& domain() const { return domain_; }
  const std::vector<Mask>& concepts() const { return concepts_; }
  std::size_t size() const { return domain_.size(); }
  Mask full() const { return full_mask(domain_.size()); }

  std::size_t index_of(std::string_view name) const;
  Mask mask_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(Mask m) const;

  bool contains(Mask c) const;
  bool has_duplicates() const;
  // Number of distinct concepts.
  std::size_t distinct_count() const;

  friend bool operator==(const ConceptSpace&, const ConceptSpace&) = default;

private:
  std::vector<std::string> domain_;
  std::vector<Mask> concepts_;
};

// Distinct traces C ∩ A, as masks over the parent domain, in bit-string order.
std::vector<Mask> traces(const ConceptSpace& space, Mask subset);

/// The subspace on `subset`: domain keeps the parent order, concepts are the
/// distinct traces in bit-string order.
ConceptSpace restrict_space(const ConceptSpace& space, Mask subset);
ConceptSpace restrict_space(const ConceptSpace& space,
                            const std::vector<std::string>& subset);

ConceptSpace load_space(std::string_view json_text);
std::string save_space(const ConceptSpace& space);

/// Bipartite relation: rel(i, j) says whether left[i] is related to right[j].
class RelationSpace {
public:
  RelationSpace(std::vector<std::string> left, std::vector<std::string> right,
                std::vector<std::uint8_t> rel);

  const std::vector<std::string>& left() const { return left_; }
  const std::vector<std::string>& right() const { return right_; }
  std::size_t rows() const { return left_.size(); }
  std::size_t cols() const { return right_.size(); }
  bool at(std::size_t i, std::size_t j) const {
    return rel_[i * right_.size() + j] != 0;
  }
  const std::vector<std::uint8_t>& data() const { return rel_; }

  friend bool operator==(const RelationSpace&, const RelationSpace&) = default;

private:
  std::vector<std::string> left_;
  std::vector<std::string> right_;
  std::vector<std::uint8_t> rel_;
};

// left = domain, right = concept labels "c0", "c1", ...; with reduce, rows and
// columns that repeat an earlier one are dropped.
RelationSpace to_relation(const ConceptSpace& space, bool reduce = false);
RelationSpace dual(const RelationSpace& rs);
// Concepts are the columns; duplicates are kept.
ConceptSpace to_concept_space(const RelationSpace& rs);

/// A product-form map (x, y) -> (left_map[x], right_map[y]), optionally with a
/// flip vector over the source left points.
struct EmbeddingMap {
  std::vector<std::size_t> left_map;
  std::vector<std::size_t> right_map;
  std::optional<std::vector<bool>> flip;

  std::pair<std::size_t, std::size_t> image(std::size_t x, std::size_t y) const {
    return {left_map[x], right_map[y]};
  }
  // The full grid map, row-major over the source.
  std::vector<std::pair<std::size_t, std::size_t>> pair_map() const;

  // Accepts a row-major grid map; throws unless it factors through the two sides.
  static EmbeddingMap from_pair_map(
      std::size_t rows, std::size_t cols,
      const std::vector<std::pair<std::size_t, std::size_t>>& grid,
      std::optional<std::vector<bool>> flip = std::nullopt);

  friend bool operator==(const EmbeddingMap&, const EmbeddingMap&) = default;
};

bool check_embedding(const RelationSpace& src, const RelationSpace& dst,
                     const EmbeddingMap& map);

inline constexpr std::size_t kEmbedSrcCap = 16;
inline constexpr std::size_t kEmbedDstCap = 36;

std::optional<EmbeddingMap> find_embedding(const RelationSpace& src,
                                           const RelationSpace& dst,
                                           bool generalized);

/// Labelled sample with repeats allowed; labels must agree on repeated points.
class LabelledSample {
public:
  LabelledSample() = default;
  LabelledSample(const ConceptSpace& space,
                 const std::vector<std::pair<std::string, bool>>& points);
  // From domain indices.
  LabelledSample(std::vector<std::pair<std::size_t, bool>> points);

  const std::vector<std::pair<std::size_t, bool>>& points() const {
    return points_;
  }
  Mask support() const { return support_; }
  Mask labels() const { return labels_; }

private:
  std::vector<std::pair<std::size_t, bool>> points_;
  Mask support_ = 0;
  Mask labels_ = 0;
};

}  // namespace vclab
