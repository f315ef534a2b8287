#include "vclab/solver.hpp"

#include <algorithm>
#include <chrono>

#include "vclab/vcdim.hpp"

namespace vclab {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::found: return "FOUND";
    case SolveStatus::unsat: return "UNSAT";
    case SolveStatus::cap_exceeded: return "CAP_EXCEEDED";
  }
  return "?";
}

namespace {

struct Pair {
  Mask subset;
  Mask trace;
  std::vector<std::uint32_t> keys;  // keys inside subset with matching labels
};

struct Frame {
  std::uint32_t pair = 0;
  std::vector<std::uint32_t> cands;
  std::size_t pos = 0;
  bool applied = false;
  std::uint32_t key = 0;
  Mask old_dom = 0;
  Mask old_val = 0;
  std::size_t trail_mark = 0;
};

class Search {
public:
  Search(std::vector<SchemeKey> keys, std::vector<Pair> pairs, std::uint64_t budget)
      : keys_(std::move(keys)),
        pairs_(std::move(pairs)),
        budget_(budget),
        dom_(keys_.size(), 0),
        val_(keys_.size(), 0),
        group_(keys_.size(), 0),
        covered_(pairs_.size(), 0) {
    for (std::size_t k = 1; k < keys_.size(); ++k) {
      bool same = keys_[k].points == keys_[k - 1].points && keys_[k].labels == keys_[k - 1].labels;
      group_[k] = same ? group_[k - 1] : static_cast<std::uint32_t>(k);
    }
  }

  SolveStatus run() {
    std::vector<Frame> stack;
    bool descend = true;
    for (;;) {
      if (descend) {
        if (++nodes_ > budget_) return SolveStatus::cap_exceeded;
        std::uint32_t best = 0;
        std::size_t best_count = SIZE_MAX;
        bool pending = false;
        for (std::uint32_t p = 0; p < pairs_.size() && best_count > 0; ++p) {
          if (covered_[p]) continue;
          if (is_covered(pairs_[p])) {
            covered_[p] = 1;
            trail_.push_back(p);
            continue;
          }
          pending = true;
          std::size_t count = viable(pairs_[p], nullptr);
          if (count < best_count) {
            best_count = count;
            best = p;
          }
        }
        if (!pending) return SolveStatus::found;
        if (best_count > 0) {
          Frame f;
          f.pair = best;
          viable(pairs_[best], &f.cands);
          stack.push_back(std::move(f));
        }
      }
      descend = false;
      while (!descend) {
        if (stack.empty()) return SolveStatus::unsat;
        Frame& f = stack.back();
        if (f.applied) {
          dom_[f.key] = f.old_dom;
          val_[f.key] = f.old_val;
          while (trail_.size() > f.trail_mark) {
            covered_[trail_.back()] = 0;
            trail_.pop_back();
          }
          f.applied = false;
        }
        if (f.pos < f.cands.size()) {
          const Pair& p = pairs_[f.pair];
          f.key = f.cands[f.pos++];
          f.old_dom = dom_[f.key];
          f.old_val = val_[f.key];
          f.trail_mark = trail_.size();
          dom_[f.key] |= p.subset;
          val_[f.key] |= p.trace;
          f.applied = true;
          descend = true;
        } else {
          stack.pop_back();
        }
      }
    }
  }

  EntryMap entries() const {
    EntryMap out;
    for (std::size_t k = 0; k < keys_.size(); ++k) {
      if (dom_[k] != 0) out.emplace(keys_[k], val_[k]);
    }
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

private:
  bool is_covered(const Pair& p) const {
    for (std::uint32_t k : p.keys) {
      if (is_subset(p.subset, dom_[k]) && ((val_[k] ^ p.trace) & p.subset) == 0) return true;
    }
    return false;
  }

  // Keys the pair can still go to; untouched copies of a key count once.
  std::size_t viable(const Pair& p, std::vector<std::uint32_t>* out) const {
    std::size_t count = 0;
    std::uint32_t last_fresh_group = UINT32_MAX;
    for (std::uint32_t k : p.keys) {
      bool ok;
      if (dom_[k] == 0) {
        ok = group_[k] != last_fresh_group;
        if (ok) last_fresh_group = group_[k];
      } else {
        ok = ((val_[k] ^ p.trace) & dom_[k] & p.subset) == 0;
      }
      if (ok) {
        ++count;
        if (out) out->push_back(k);
      }
    }
    return count;
  }

  std::vector<SchemeKey> keys_;
  std::vector<Pair> pairs_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Mask> dom_;
  std::vector<Mask> val_;
  std::vector<std::uint32_t> group_;
  std::vector<char> covered_;
  std::vector<std::uint32_t> trail_;
};

}  // namespace

SolveResult solve_scheme(const ConceptSpace& space, int size,
                         std::vector<std::uint32_t> copies, SchemeKind kind,
                         const SolveOptions& options) {
  auto start = std::chrono::steady_clock::now();
  SolveResult result;
  auto finish = [&](SolveStatus status) {
    result.status = status;
    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  };
  if (size < 0) throw Error("scheme size must be nonnegative");
  if (copies.empty()) copies.assign(static_cast<std::size_t>(size) + 1, 1);
  if (copies.size() != static_cast<std::size_t>(size) + 1) {
    throw Error("copies must list n_0 .. n_size");
  }
  if (space.size() > options.domain_cap) return finish(SolveStatus::cap_exceeded);

  const std::size_t n = space.size();
  const bool labelled = kind == SchemeKind::labelled;
  const Mask full = space.full();

  // trace counts on every subset, for the counting test
  std::vector<std::uint32_t> trace_count(std::size_t{1} << n);
  std::vector<Mask> scratch;
  for (Mask a = 0; a <= full; ++a) {
    trace_count[a] = static_cast<std::uint32_t>(count_traces(space.concepts(), a, scratch));
  }

  std::vector<Mask> subsets;
  for (Mask a = 1; a <= full; ++a) subsets.push_back(a);
  std::sort(subsets.begin(), subsets.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa > pb;
    return index_lex_less(a, b);
  });

  std::uint64_t constraints = 0;
  for (Mask a : subsets) constraints += trace_count[a];
  result.stats.constraints = constraints;
  if (constraints > options.constraint_cap) return finish(SolveStatus::cap_exceeded);

  auto key_capacity = [&](Mask a) -> std::uint64_t {
    std::uint64_t cap = 0;
    // submasks of a, including the empty set
    for (Mask s = a;; s = (s - 1) & a) {
      int j = popcount(s);
      if (j <= size) {
        cap += static_cast<std::uint64_t>(copies[static_cast<std::size_t>(j)]) *
               (labelled ? trace_count[s] : 1);
      }
      if (s == 0) break;
    }
    return cap;
  };
  for (Mask a : subsets) {
    if (trace_count[a] > key_capacity(a)) {
      result.counting_witness = a;
      return finish(SolveStatus::unsat);
    }
  }

  std::vector<SchemeKey> keys;
  for (int j = 0; j <= std::min<int>(size, static_cast<int>(n)); ++j) {
    for (Mask s : submasks_of_size(full, j)) {
      for (Mask lab = s;; lab = (lab - 1) & s) {
        if (labelled || lab == 0) {
          for (std::uint32_t c = 1; c <= copies[static_cast<std::size_t>(j)]; ++c) {
            keys.push_back({s, c, lab});
          }
        }
        if (lab == 0) break;
      }
    }
  }
  std::sort(keys.begin(), keys.end(), KeyLess{});

  std::vector<Pair> pairs;
  pairs.reserve(constraints);
  for (Mask a : subsets) {
    for (Mask t : traces(space, a)) {
      Pair p{a, t, {}};
      for (std::uint32_t k = 0; k < keys.size(); ++k) {
        const SchemeKey& key = keys[k];
        if (!is_subset(key.points, a)) continue;
        if (labelled && key.labels != (t & key.points)) continue;
        p.keys.push_back(k);
      }
      pairs.push_back(std::move(p));
    }
  }

  Search search(std::move(keys), std::move(pairs), options.node_budget);
  SolveStatus status = search.run();
  result.stats.nodes = search.nodes();
  if (status == SolveStatus::found) {
    CompressionScheme scheme(n, size, copies, kind, search.entries());
    if (n <= kVerifyCap && !verify_scheme(space, scheme).ok) {
      throw Error("internal: solver produced a scheme that fails verification");
    }
    result.scheme = std::move(scheme);
  }
  return finish(status);
}

}  // namespace vclab
