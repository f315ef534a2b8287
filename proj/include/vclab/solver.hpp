#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vclab/scheme.hpp"

namespace vclab {

enum class SolveStatus { found, unsat, cap_exceeded };

std::string to_string(SolveStatus s);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t constraints = 0;
  double wall_seconds = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::unsat;
  std::optional<CompressionScheme> scheme;  // set iff found
  SolveStats stats;
  // Set when the counting argument alone refutes the instance.
  std::optional<Mask> counting_witness;
};

inline constexpr std::size_t kSolveCap = 12;

struct SolveOptions {
  std::size_t domain_cap = kSolveCap;
  std::uint64_t node_budget = 20'000'000;
  std::uint64_t constraint_cap = 4'000'000;
};

/// Exhaustive search for a scheme of the given size and copy counts.
///
/// Every sample (A, f), A nonempty, is a constraint that must be assigned to
/// a key inside A; keys accumulate the traces assigned to them and the
/// hypothesis is their union, zero elsewhere. The branching pair is the one
/// with fewest compatible keys, ties going to larger A, then index order of A,
/// then the trace. Keys are tried in key order, and of several untouched
/// copies of one key only the first is tried. The search is serial and the
/// result depends only on the input.
SolveResult solve_scheme(const ConceptSpace& space, int size,
                         std::vector<std::uint32_t> copies, SchemeKind kind,
                         const SolveOptions& options = {});

}  // namespace vclab
