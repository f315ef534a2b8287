#include "vclab/scheme.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "json.hpp"
#include "vclab/bounds.hpp"
#include "vclab/matching.hpp"
#include "vclab/vcdim.hpp"

namespace vclab {

using nlohmann::json;

CompressionScheme::CompressionScheme(std::size_t domain_size, int size,
                                     std::vector<std::uint32_t> copies, SchemeKind kind,
                                     EntryMap entries)
    : domain_size_(domain_size),
      size_(size),
      copies_(std::move(copies)),
      kind_(kind),
      entries_(std::move(entries)) {
  if (size_ < 0) throw Error("scheme size must be nonnegative");
  if (copies_.size() != static_cast<std::size_t>(size_) + 1) {
    throw Error("copies must list n_0 .. n_size (" + std::to_string(size_ + 1) +
                " values), got " + std::to_string(copies_.size()));
  }
  Mask full = full_mask(domain_size_);
  for (const auto& [key, h] : entries_) {
    int k = popcount(key.points);
    if (key.points & ~full) throw Error("key points outside the domain");
    if (h & ~full) throw Error("hypothesis outside the domain");
    if (k > size_) throw Error("key larger than the scheme size");
    if (key.copy < 1 || key.copy > copies_[static_cast<std::size_t>(k)]) {
      throw Error("copy index " + std::to_string(key.copy) + " out of range for keys of size " +
                  std::to_string(k));
    }
    if (kind_ == SchemeKind::unlabelled && key.labels != 0) {
      throw Error("unlabelled key carries labels");
    }
    if (key.labels & ~key.points) throw Error("labels outside the key points");
  }
}

bool CompressionScheme::is_plain() const {
  return std::all_of(copies_.begin(), copies_.end(), [](std::uint32_t n) { return n == 1; });
}

std::uint64_t CompressionScheme::keys_within(Mask subset) const {
  int a = popcount(subset);
  std::uint64_t total = 0;
  for (int j = 0; j <= std::min(a, size_); ++j) {
    std::uint64_t c = binom_leq_u64(a, j) - (j == 0 ? 0 : binom_leq_u64(a, j - 1));
    total += c * copies_[static_cast<std::size_t>(j)];
  }
  return total;
}

CompressionScheme load_scheme(std::string_view json_text, const ConceptSpace& space) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed scheme file: ") + e.what());
  }
  try {
    int size = j.at("size").get<int>();
    std::vector<std::uint32_t> copies;
    if (j.contains("copies")) {
      copies = j.at("copies").get<std::vector<std::uint32_t>>();
    } else {
      copies.assign(static_cast<std::size_t>(std::max(size, 0)) + 1, 1);
    }
    std::string kind_name = j.value("kind", std::string("unlabelled"));
    SchemeKind kind;
    if (kind_name == "unlabelled") {
      kind = SchemeKind::unlabelled;
    } else if (kind_name == "labelled") {
      kind = SchemeKind::labelled;
    } else {
      throw Error("unknown scheme kind '" + kind_name + "'");
    }
    EntryMap entries;
    for (const auto& e : j.at("entries")) {
      auto names = e.at("points").get<std::vector<std::string>>();
      SchemeKey key;
      key.points = space.mask_of(names);
      if (static_cast<std::size_t>(popcount(key.points)) != names.size()) {
        throw Error("repeated point in a key");
      }
      key.copy = e.value("copy", 1u);
      if (e.contains("labels")) {
        auto labels = e.at("labels").get<std::string>();
        if (labels.size() != names.size()) throw Error("labels length differs from points");
        for (std::size_t i = 0; i < names.size(); ++i) {
          if (labels[i] == '1') {
            key.labels |= Mask{1} << space.index_of(names[i]);
          } else if (labels[i] != '0') {
            throw Error("labels must be '0'/'1'");
          }
        }
      } else if (kind == SchemeKind::labelled) {
        throw Error("labelled scheme entry without labels");
      }
      auto h = e.at("hypothesis").get<std::string>();
      if (h.size() != space.size()) throw Error("hypothesis length differs from the domain");
      if (!entries.emplace(key, parse_bit_string(h)).second) {
        throw Error("duplicate scheme key");
      }
    }
    return CompressionScheme(space.size(), size, std::move(copies), kind, std::move(entries));
  } catch (const json::exception& e) {
    throw Error(std::string("malformed scheme file: ") + e.what());
  }
}

std::string save_scheme(const CompressionScheme& scheme, const ConceptSpace& space) {
  if (scheme.domain_size() != space.size()) throw Error("scheme and space domains differ");
  json j;
  j["size"] = scheme.size();
  j["copies"] = scheme.copies();
  j["kind"] = scheme.labelled() ? "labelled" : "unlabelled";
  json entries = json::array();
  for (const auto& [key, h] : scheme.entries()) {
    json e;
    e["points"] = space.names_of(key.points);
    e["copy"] = key.copy;
    if (scheme.labelled()) e["labels"] = to_bit_string(compress_bits(key.labels, key.points),
                                                       static_cast<std::size_t>(popcount(key.points)));
    e["hypothesis"] = to_bit_string(h, space.size());
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

namespace {

struct Entry {
  Mask points;
  Mask labels;
  Mask hypothesis;
};

// Uncovered trace of C ⊓ subset, or nullopt.
std::optional<Mask> first_uncovered(const ConceptSpace& space,
                                    const CompressionScheme& scheme,
                                    const std::vector<Entry>& entries, Mask subset) {
  std::vector<Mask> covered;
  std::uint64_t zero_label_keys = 0;
  for (const auto& e : entries) {
    if (!is_subset(e.points, subset)) continue;
    if (e.labels == 0) ++zero_label_keys;
    if ((e.hypothesis & e.points) != e.labels && scheme.labelled()) continue;
    covered.push_back(e.hypothesis & subset);
  }
  // keys left undefined act as the empty hypothesis
  if (zero_label_keys < scheme.keys_within(subset)) covered.push_back(0);
  std::sort(covered.begin(), covered.end());
  for (Mask t : traces(space, subset)) {
    if (!std::binary_search(covered.begin(), covered.end(), t)) return t;
  }
  return std::nullopt;
}

}  // namespace

Verification verify_scheme(const ConceptSpace& space, const CompressionScheme& scheme,
                           Exec exec) {
  if (scheme.domain_size() != space.size()) throw Error("scheme and space domains differ");
  if (space.size() > kVerifyCap) {
    throw CapExceeded("verification: domain exceeds cap of 16");
  }
  std::vector<Entry> entries;
  for (const auto& [key, h] : scheme.entries()) entries.push_back({key.points, key.labels, h});

  std::vector<Mask> subsets;
  for (Mask a = 1; a <= space.full(); ++a) subsets.push_back(a);
  std::sort(subsets.begin(), subsets.end(), size_lex_less);

  std::int64_t bad = kernels::first_index(
      static_cast<std::int64_t>(subsets.size()),
      [&](std::int64_t i) {
        return first_uncovered(space, scheme, entries, subsets[static_cast<std::size_t>(i)])
            .has_value();
      },
      exec);
  Verification v;
  if (bad != kernels::kNone) {
    v.ok = false;
    v.subset = subsets[static_cast<std::size_t>(bad)];
    v.trace = *first_uncovered(space, scheme, entries, v.subset);
  }
  return v;
}

namespace {

void require_verified(const ConceptSpace& space, const CompressionScheme& scheme) {
  if (space.size() > kVerifyCap) return;
  auto v = verify_scheme(space, scheme);
  if (!v.ok) throw Error("scheme fails verification");
}

}  // namespace

CompressionScheme to_labelled(const ConceptSpace& space, const CompressionScheme& scheme) {
  if (scheme.labelled()) throw Error("scheme is already labelled");
  require_verified(space, scheme);
  EntryMap out;
  for (const auto& [key, h] : scheme.entries()) {
    out.emplace(SchemeKey{key.points, key.copy, h & key.points}, h);
  }
  return CompressionScheme(scheme.domain_size(), scheme.size(), scheme.copies(),
                           SchemeKind::labelled, std::move(out));
}

RestrictedScheme restrict_scheme(const ConceptSpace& space, const CompressionScheme& scheme,
                                 Mask subset) {
  if (scheme.domain_size() != space.size()) throw Error("scheme and space domains differ");
  ConceptSpace sub = restrict_space(space, subset);
  require_verified(space, scheme);
  EntryMap out;
  for (const auto& [key, h] : scheme.entries()) {
    if (!is_subset(key.points, subset)) continue;
    out.emplace(SchemeKey{compress_bits(key.points, subset), key.copy,
                          compress_bits(key.labels, subset)},
                compress_bits(h, subset));
  }
  CompressionScheme restricted(sub.size(), scheme.size(), scheme.copies(), scheme.kind(),
                               std::move(out));
  return {std::move(sub), std::move(restricted)};
}

bool widening_feasible(std::uint64_t m, std::uint64_t d, std::uint64_t k, std::uint64_t n) {
  return bounds::BigInt(n) * bounds::binom_leq(m, k) >= bounds::binom_leq(m, d);
}

namespace {

// All subsets of `of` of size <= max_size, by size then index order.
std::vector<Mask> keys_up_to(Mask of, int max_size) {
  std::vector<Mask> out;
  for (int j = 0; j <= max_size; ++j) {
    auto layer = submasks_of_size(of, j);
    std::sort(layer.begin(), layer.end(), index_lex_less);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace

std::optional<CompressionScheme> widen_to_copies(const ConceptSpace& space,
                                                 const CompressionScheme& scheme, int k,
                                                 std::uint32_t n) {
  if (scheme.domain_size() != space.size()) throw Error("scheme and space domains differ");
  if (!scheme.is_plain() || scheme.labelled()) {
    throw Error("widening needs a plain unlabelled scheme");
  }
  const int d = scheme.size();
  if (k < 0 || k > d) throw Error("k must satisfy 0 <= k <= d");
  if (n < 1) throw Error("n must be at least 1");
  if (!widening_feasible(space.size(), static_cast<std::uint64_t>(d),
                         static_cast<std::uint64_t>(k), n)) {
    throw InfeasibleWidening("n * C(m, <=k) < C(m, <=d)");
  }
  if (bounds::binom_leq(space.size(), static_cast<std::uint64_t>(d)) > 2'000'000) {
    throw CapExceeded("widening: more than 2e6 keys to match");
  }
  require_verified(space, scheme);

  std::vector<Mask> left = keys_up_to(space.full(), d);
  std::vector<Mask> targets = keys_up_to(space.full(), k);
  std::unordered_map<Mask, std::size_t> target_rank;
  for (std::size_t i = 0; i < targets.size(); ++i) target_rank.emplace(targets[i], i);

  BipartiteMatcher matcher(left.size(), targets.size() * n);
  for (std::size_t u = 0; u < left.size(); ++u) {
    for (Mask sub : keys_up_to(left[u], std::min(k, popcount(left[u])))) {
      std::size_t r = target_rank.at(sub);
      for (std::uint32_t c = 0; c < n; ++c) matcher.add_edge(u, r * n + c);
    }
  }
  if (matcher.run() != left.size()) return std::nullopt;

  EntryMap out;
  for (std::size_t u = 0; u < left.size(); ++u) {
    auto it = scheme.entries().find(SchemeKey{left[u], 1, 0});
    if (it == scheme.entries().end()) continue;
    std::size_t v = matcher.partner(u);
    out.emplace(SchemeKey{targets[v / n], static_cast<std::uint32_t>(v % n) + 1, 0}, it->second);
  }
  return CompressionScheme(space.size(), k,
                           std::vector<std::uint32_t>(static_cast<std::size_t>(k) + 1, n),
                           SchemeKind::unlabelled, std::move(out));
}

CompressionScheme cover_to_copy_scheme(const ConceptSpace& space,
                                       const std::vector<CoverPart>& parts) {
  if (parts.empty()) throw Error("cover needs at least one part");
  for (const auto& p : parts) {
    if (p.space.domain() != space.domain()) throw Error("cover part has a different domain");
    if (p.scheme.domain_size() != space.size()) throw Error("cover part scheme domain differs");
    if (!p.scheme.is_plain() || p.scheme.labelled()) {
      throw Error("cover parts need plain unlabelled schemes");
    }
  }
  for (Mask c : space.concepts()) {
    bool covered = std::any_of(parts.begin(), parts.end(),
                               [&](const CoverPart& p) { return p.space.contains(c); });
    if (!covered) {
      throw Error("cover check fails: concept " + to_bit_string(c, space.size()) +
                  " is in no part");
    }
  }
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].space.size() <= kVerifyCap && !verify_scheme(parts[j].space, parts[j].scheme).ok) {
      throw Error("cover part " + std::to_string(j + 1) + " scheme fails verification");
    }
  }
  std::vector<std::size_t> order(parts.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return parts[a].scheme.size() > parts[b].scheme.size();
  });
  const int k = parts[order.front()].scheme.size();
  std::vector<std::uint32_t> copies(static_cast<std::size_t>(k) + 1, 0);
  for (const auto& p : parts) {
    for (int i = 0; i <= p.scheme.size(); ++i) ++copies[static_cast<std::size_t>(i)];
  }
  EntryMap out;
  for (std::size_t l = 0; l < order.size(); ++l) {
    for (const auto& [key, h] : parts[order[l]].scheme.entries()) {
      out.emplace(SchemeKey{key.points, static_cast<std::uint32_t>(l) + 1, 0}, h);
    }
  }
  return CompressionScheme(space.size(), k, std::move(copies), SchemeKind::unlabelled,
                           std::move(out));
}

CompressionScheme from_bit_scheme(std::size_t domain_size, int size, int bits,
                                  const std::map<std::pair<Mask, std::uint32_t>, Mask>& entries) {
  if (bits < 0 || bits > 31) throw Error("bits must lie in 0..31");
  const std::uint32_t n = std::uint32_t{1} << bits;
  EntryMap out;
  for (const auto& [key, h] : entries) {
    if (key.second >= n) throw Error("bit pattern out of range");
    out.emplace(SchemeKey{key.first, key.second + 1, 0}, h);
  }
  return CompressionScheme(domain_size, size,
                           std::vector<std::uint32_t>(static_cast<std::size_t>(size) + 1, n),
                           SchemeKind::unlabelled, std::move(out));
}

std::uint64_t array_words_with_range(int i, int length) {
  // inclusion-exclusion over the named points left out
  if (i < 0 || length < 0) throw Error("array word counts need nonnegative arguments");
  std::int64_t exact = 0;
  std::int64_t binom = 1;
  for (int j = 0; j <= i; ++j) {
    if (j > 0) binom = binom * (i - j + 1) / j;
    std::int64_t power = 1;
    for (int t = 0; t < length; ++t) power *= (i + 1 - j);
    exact += (j % 2 == 0 ? 1 : -1) * binom * power;
  }
  return static_cast<std::uint64_t>(exact);
}

CompressionScheme from_array_scheme(std::size_t domain_size, int length,
                                    const std::vector<std::pair<std::vector<int>, Mask>>& words) {
  if (length < 0 || length > 8) throw Error("array length must lie in 0..8");
  std::vector<std::uint32_t> copies;
  for (int i = 0; i <= length; ++i) {
    copies.push_back(static_cast<std::uint32_t>(array_words_with_range(i, length)));
  }
  EntryMap out;
  for (const auto& [word, h] : words) {
    if (static_cast<int>(word.size()) != length) throw Error("array word has the wrong length");
    Mask range = 0;
    for (int x : word) {
      if (x < -1 || x >= static_cast<int>(domain_size)) throw Error("array word symbol out of range");
      if (x >= 0) range |= Mask{1} << x;
    }
    // rank among the words over (blank, range points) that use every range point
    std::vector<int> alphabet{-1};
    for (int x : indices_of(range)) alphabet.push_back(x);
    std::vector<int> cur(static_cast<std::size_t>(length), 0);
    std::uint32_t rank = 0;
    bool found = false;
    std::function<void(int)> walk = [&](int pos) {
      if (found) return;
      if (pos == length) {
        Mask used = 0;
        for (int idx : cur) {
          if (alphabet[static_cast<std::size_t>(idx)] >= 0) used |= Mask{1} << alphabet[static_cast<std::size_t>(idx)];
        }
        if (used != range) return;
        bool same = true;
        for (int t = 0; t < length; ++t) {
          same = same && alphabet[static_cast<std::size_t>(cur[static_cast<std::size_t>(t)])] == word[static_cast<std::size_t>(t)];
        }
        ++rank;
        if (same) found = true;
        return;
      }
      for (std::size_t a = 0; a < alphabet.size() && !found; ++a) {
        cur[static_cast<std::size_t>(pos)] = static_cast<int>(a);
        walk(pos + 1);
      }
    };
    walk(0);
    if (!out.emplace(SchemeKey{range, rank, 0}, h).second) throw Error("duplicate array word");
  }
  return CompressionScheme(domain_size, length, std::move(copies), SchemeKind::unlabelled,
                           std::move(out));
}

}  // namespace vclab
