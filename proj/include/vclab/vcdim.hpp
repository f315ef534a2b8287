#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vclab/kernels.hpp"
#include "vclab/space.hpp"

namespace vclab {

inline constexpr std::size_t kVcCap = 24;
inline constexpr std::size_t kMaximumCap = 16;

struct VcReport {
  int vc = 0;
  Mask witness = 0;
  // s(C, n) for n = 0 .. |domain|
  std::vector<std::uint64_t> shatter_coeffs;
};

// C(n, 0) + ... + C(n, d), saturating at UINT64_MAX.
std::uint64_t binom_leq_u64(int n, int d);

// Distinct values of c & subset. `scratch` is reused between calls.
std::size_t count_traces(std::span<const Mask> concepts, Mask subset,
                         std::vector<Mask>& scratch);

bool is_shattered(const ConceptSpace& space, Mask subset);
bool is_shattered(const ConceptSpace& space, const std::vector<std::string>& subset);

/// Exact VC dimension with the index-lexicographically first witness.
/// Layers are grown only from sets whose every one-smaller subset is shattered.
VcReport vc_dimension(const ConceptSpace& space, Exec exec = Exec::parallel);

// vc and witness only; same cap.
int vc_of(const ConceptSpace& space, Mask* witness = nullptr,
          Exec exec = Exec::parallel);

std::vector<std::uint64_t> shatter_coefficients(const ConceptSpace& space, int vc,
                                                Exec exec = Exec::parallel);

enum class MaximumMode { definition, cardinality };

bool is_maximum(const ConceptSpace& space, int d, MaximumMode mode,
                Exec exec = Exec::parallel);

/// True iff vc = d and every D outside the class completes some (d+1)-set
/// whose traces miss exactly D's trace.
bool is_maximal(const ConceptSpace& space, int d, Exec exec = Exec::parallel);

}  // namespace vclab
