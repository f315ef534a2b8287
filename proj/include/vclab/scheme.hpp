#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vclab/kernels.hpp"
#include "vclab/space.hpp"

namespace vclab {

enum class SchemeKind { unlabelled, labelled };

/// A compression key: a point set, a copy index in 1..n_{|points|}, and for
/// labelled schemes the labels on those points (bits of `labels` ⊆ `points`).
struct SchemeKey {
  Mask points = 0;
  std::uint32_t copy = 1;
  Mask labels = 0;

  friend bool operator==(const SchemeKey&, const SchemeKey&) = default;
};

// |points|, then index order of points, then labels, then copy.
struct KeyLess {
  bool operator()(const SchemeKey& a, const SchemeKey& b) const {
    if (a.points != b.points) return size_lex_less(a.points, b.points);
    if (a.labels != b.labels) return bit_string_less(a.labels, b.labels);
    return a.copy < b.copy;
  }
};

using EntryMap = std::map<SchemeKey, Mask, KeyLess>;

/// A (copy, possibly labelled) sample compression scheme. Only the keys in
/// `entries` are stored; every other legal key maps to the empty hypothesis.
class CompressionScheme {
public:
  CompressionScheme(std::size_t domain_size, int size, std::vector<std::uint32_t> copies,
                    SchemeKind kind, EntryMap entries);

  static CompressionScheme plain(std::size_t domain_size, int size, SchemeKind kind,
                                 EntryMap entries) {
    return CompressionScheme(domain_size, size,
                             std::vector<std::uint32_t>(static_cast<std::size_t>(size) + 1, 1),
                             kind, std::move(entries));
  }

  std::size_t domain_size() const { return domain_size_; }
  int size() const { return size_; }
  const std::vector<std::uint32_t>& copies() const { return copies_; }
  std::uint32_t copies_at(int key_size) const {
    return key_size < 0 || key_size > size_ ? 0 : copies_[static_cast<std::size_t>(key_size)];
  }
  SchemeKind kind() const { return kind_; }
  bool labelled() const { return kind_ == SchemeKind::labelled; }
  bool is_plain() const;
  const EntryMap& entries() const { return entries_; }

  Mask hypothesis(const SchemeKey& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second;
  }

  // Number of legal keys with points inside `subset` and all-zero labels.
  std::uint64_t keys_within(Mask subset) const;

  friend bool operator==(const CompressionScheme&, const CompressionScheme&) = default;

private:
  std::size_t domain_size_;
  int size_;
  std::vector<std::uint32_t> copies_;
  SchemeKind kind_;
  EntryMap entries_;
};

CompressionScheme load_scheme(std::string_view json_text, const ConceptSpace& space);
std::string save_scheme(const CompressionScheme& scheme, const ConceptSpace& space);

struct Verification {
  bool ok = true;
  // First uncovered sample (subset, trace) in (|A|, index order; trace order).
  Mask subset = 0;
  Mask trace = 0;
};

inline constexpr std::size_t kVerifyCap = 16;

Verification verify_scheme(const ConceptSpace& space, const CompressionScheme& scheme,
                           Exec exec = Exec::parallel);

/// Keys each unlabelled key (σ, i) by the labels its own hypothesis puts on σ.
CompressionScheme to_labelled(const ConceptSpace& space, const CompressionScheme& scheme);

struct RestrictedScheme {
  ConceptSpace space;
  CompressionScheme scheme;
};

RestrictedScheme restrict_scheme(const ConceptSpace& space, const CompressionScheme& scheme,
                                 Mask subset);

class InfeasibleWidening : public Error {
public:
  using Error::Error;
};

// n * C(m, <=k) >= C(m, <=d) in exact integer arithmetic.
bool widening_feasible(std::uint64_t m, std::uint64_t d, std::uint64_t k, std::uint64_t n);

/// Turns a plain unlabelled scheme of size d into an n-copy scheme of size k by
/// matching every key σ to a distinct (σ', i) with σ' ⊆ σ. Throws
/// InfeasibleWidening when the counting inequality fails; nullopt when no
/// perfect matching exists.
std::optional<CompressionScheme> widen_to_copies(const ConceptSpace& space,
                                                 const CompressionScheme& scheme, int k,
                                                 std::uint32_t n);

struct CoverPart {
  ConceptSpace space;
  CompressionScheme scheme;
};

/// Combines plain schemes of classes covering the space into one copy scheme.
CompressionScheme cover_to_copy_scheme(const ConceptSpace& space,
                                       const std::vector<CoverPart>& parts);

/// Extended scheme with b extra bits: keys (σ, τ) with τ < 2^b.
CompressionScheme from_bit_scheme(std::size_t domain_size, int size, int bits,
                                  const std::map<std::pair<Mask, std::uint32_t>, Mask>& entries);

// Number of length-`length` words over (i named points + blank) using all i points.
std::uint64_t array_words_with_range(int i, int length);

/// Array scheme: words of length `length` over point indices, -1 for blank.
CompressionScheme from_array_scheme(std::size_t domain_size, int length,
                                    const std::vector<std::pair<std::vector<int>, Mask>>& words);

}  // namespace vclab
