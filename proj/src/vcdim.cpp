#include "vclab/vcdim.hpp"

#include <algorithm>
#include <unordered_set>

namespace vclab {

std::uint64_t binom_leq_u64(int n, int d) {
  if (n < 0 || d < 0) return 0;
  unsigned __int128 total = 0;
  unsigned __int128 term = 1;  // C(n, i)
  for (int i = 0; i <= std::min(n, d); ++i) {
    if (i > 0) term = term * static_cast<unsigned>(n - i + 1) / static_cast<unsigned>(i);
    total += term;
    if (total > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(total);
}

std::size_t count_traces(std::span<const Mask> concepts, Mask subset,
                         std::vector<Mask>& scratch) {
  scratch.clear();
  for (Mask c : concepts) scratch.push_back(c & subset);
  std::sort(scratch.begin(), scratch.end());
  return static_cast<std::size_t>(std::unique(scratch.begin(), scratch.end()) -
                                  scratch.begin());
}

bool is_shattered(const ConceptSpace& space, Mask subset) {
  if (subset & ~space.full()) throw Error("subset outside the domain");
  int k = popcount(subset);
  if (k >= 63) return false;
  if (space.concepts().size() < (std::size_t{1} << k)) return false;
  std::vector<Mask> scratch;
  return count_traces(space.concepts(), subset, scratch) == (std::size_t{1} << k);
}

bool is_shattered(const ConceptSpace& space, const std::vector<std::string>& subset) {
  return is_shattered(space, space.mask_of(subset));
}

int vc_of(const ConceptSpace& space, Mask* witness, Exec exec) {
  if (space.size() > kVcCap) {
    throw CapExceeded("vc: domain has " + std::to_string(space.size()) +
                      " points; cap is 24");
  }
  const auto& concepts = space.concepts();
  std::size_t distinct = space.distinct_count();
  int n = static_cast<int>(space.size());

  std::vector<Mask> layer{0};
  std::unordered_set<Mask> layer_set{0};
  int k = 0;
  while (k < n && (std::size_t{1} << (k + 1)) <= distinct) {
    std::vector<Mask> candidates;
    for (Mask s : layer) {
      int top = s == 0 ? -1 : 63 - std::countl_zero(s);
      for (int j = top + 1; j < n; ++j) {
        Mask t = s | (Mask{1} << j);
        bool all_below = true;
        for (Mask rest = s; rest && all_below; rest &= rest - 1) {
          Mask drop = rest & -rest;
          all_below = layer_set.count(t & ~drop) > 0;
        }
        if (all_below) candidates.push_back(t);
      }
    }
    std::vector<char> shattered(candidates.size(), 0);
    std::size_t want = std::size_t{1} << (k + 1);
    kernels::for_each_index(
        static_cast<std::int64_t>(candidates.size()),
        [&](std::int64_t i) {
          thread_local std::vector<Mask> scratch;
          shattered[static_cast<std::size_t>(i)] =
              count_traces(concepts, candidates[static_cast<std::size_t>(i)], scratch) ==
              want;
        },
        exec);
    std::vector<Mask> next;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (shattered[i]) next.push_back(candidates[i]);
    }
    if (next.empty()) break;
    layer = std::move(next);
    layer_set = std::unordered_set<Mask>(layer.begin(), layer.end());
    ++k;
  }
  if (witness) *witness = *std::min_element(layer.begin(), layer.end(), index_lex_less);
  return k;
}

std::vector<std::uint64_t> shatter_coefficients(const ConceptSpace& space, int vc,
                                                Exec exec) {
  if (space.size() > kVcCap) {
    throw CapExceeded("shatter coefficients: domain exceeds cap of 24");
  }
  const auto& concepts = space.concepts();
  auto distinct = static_cast<std::int64_t>(space.distinct_count());
  int n = static_cast<int>(space.size());
  std::vector<std::uint64_t> out;
  for (int k = 0; k <= n; ++k) {
    if (k <= vc) {
      out.push_back(std::uint64_t{1} << k);
      continue;
    }
    auto ceiling = static_cast<std::int64_t>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(distinct), binom_leq_u64(k, vc)));
    if (static_cast<std::int64_t>(out.back()) >= ceiling) {
      out.push_back(static_cast<std::uint64_t>(ceiling));
      continue;
    }
    std::vector<Mask> subsets = submasks_of_size(space.full(), k);
    std::int64_t best = kernels::max_of(
        static_cast<std::int64_t>(subsets.size()),
        [&](std::int64_t i) {
          thread_local std::vector<Mask> scratch;
          return static_cast<std::int64_t>(
              count_traces(concepts, subsets[static_cast<std::size_t>(i)], scratch));
        },
        0, ceiling, exec);
    out.push_back(static_cast<std::uint64_t>(best));
  }
  return out;
}

VcReport vc_dimension(const ConceptSpace& space, Exec exec) {
  VcReport r;
  r.vc = vc_of(space, &r.witness, exec);
  r.shatter_coeffs = shatter_coefficients(space, r.vc, exec);
  return r;
}

bool is_maximum(const ConceptSpace& space, int d, MaximumMode mode, Exec exec) {
  if (d < 0) throw Error("d must be nonnegative");
  if (mode == MaximumMode::cardinality) {
    int vc = vc_of(space, nullptr, exec);
    if (vc != d) {
      throw Error("cardinality criterion needs vc = d (vc is " + std::to_string(vc) +
                  ", d is " + std::to_string(d) + ")");
    }
    return space.distinct_count() == binom_leq_u64(static_cast<int>(space.size()), d);
  }
  if (space.size() > kMaximumCap) {
    throw CapExceeded("maximum check: domain exceeds cap of 16");
  }
  const auto& concepts = space.concepts();
  std::int64_t subsets = std::int64_t{1} << space.size();
  std::int64_t bad = kernels::first_index(
      subsets,
      [&](std::int64_t a) {
        thread_local std::vector<Mask> scratch;
        Mask subset = static_cast<Mask>(a);
        return count_traces(concepts, subset, scratch) !=
               binom_leq_u64(popcount(subset), d);
      },
      exec);
  return bad == kernels::kNone;
}

bool is_maximal(const ConceptSpace& space, int d, Exec exec) {
  if (space.size() > kMaximumCap) {
    throw CapExceeded("maximal check: domain exceeds cap of 16");
  }
  int vc = vc_of(space, nullptr, exec);
  if (vc != d) {
    throw Error("maximal check needs vc = d (vc is " + std::to_string(vc) + ", d is " +
                std::to_string(d) + ")");
  }
  int n = static_cast<int>(space.size());
  if (d >= n) return true;  // vc = |X| forces the power set

  struct Missing {
    Mask subset;
    Mask trace;
  };
  std::vector<Mask> sets = submasks_of_size(space.full(), d + 1);
  std::vector<Missing> single(sets.size(), Missing{0, 0});
  std::vector<char> has_single(sets.size(), 0);
  const auto& concepts = space.concepts();
  std::size_t full_count = std::size_t{1} << (d + 1);
  kernels::for_each_index(
      static_cast<std::int64_t>(sets.size()),
      [&](std::int64_t i) {
        thread_local std::vector<Mask> scratch;
        Mask a = sets[static_cast<std::size_t>(i)];
        std::size_t count = count_traces(concepts, a, scratch);
        if (count + 1 != full_count) return;
        // scratch holds the sorted distinct traces; find the absent one
        std::vector<char> present(full_count, 0);
        for (std::size_t t = 0; t < count; ++t) present[compress_bits(scratch[t], a)] = 1;
        for (std::size_t p = 0; p < full_count; ++p) {
          if (!present[p]) {
            single[static_cast<std::size_t>(i)] = {a, expand_bits(p, a)};
            has_single[static_cast<std::size_t>(i)] = 1;
            break;
          }
        }
      },
      exec);
  std::vector<Missing> raisers;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (has_single[i]) raisers.push_back(single[i]);
  }

  std::vector<char> in_class(std::size_t{1} << n, 0);
  for (Mask c : concepts) in_class[c] = 1;
  std::int64_t escape = kernels::first_index(
      std::int64_t{1} << n,
      [&](std::int64_t i) {
        if (in_class[static_cast<std::size_t>(i)]) return false;
        Mask candidate = static_cast<Mask>(i);
        for (const auto& r : raisers) {
          if ((candidate & r.subset) == r.trace) return false;
        }
        return true;
      },
      exec);
  return escape == kernels::kNone;
}

}  // namespace vclab
