#pragma once

#include <string>
#include <vector>

#include "vclab/scheme.hpp"
#include "vclab/space.hpp"

namespace vclab::fixtures {

// Points p1..pN.
std::vector<std::string> chain_names(std::size_t n);

ConceptSpace power_set(std::size_t n);
// ∅ and I_k = {p1..pk} for k = 1..n.
ConceptSpace initial_segments(std::size_t n);
// ∅ and {pk..pn} for k = 1..n.
ConceptSpace final_segments(std::size_t n);
// All subsets of size at most d, by size then index order.
ConceptSpace size_at_most(std::size_t n, int d);

// Named examples: "1.2.4", "1.2.5", "2.1.4" (chain of `chain` points),
// "2.4.5", "2.4.6".
ConceptSpace paper_example(const std::string& id, std::size_t chain = 6);
std::vector<std::string> paper_example_ids();

/// Schemes shipped with the examples: "2.1.4" ({x} -> I_x, ∅ -> ∅),
/// "2.1.4-prime" ({x} -> I_x \ {x}, ∅ -> X), "2.4.5", "2.4.6".
CompressionScheme paper_scheme(const std::string& id, std::size_t chain = 6);
std::vector<std::string> paper_scheme_ids();

// {x} -> I_x for the initial segments, {x} -> F_x for the final segments.
CompressionScheme segment_scheme(std::size_t n, bool final);

}  // namespace vclab::fixtures
