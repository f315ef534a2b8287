#include "vclab/pacsim.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "vclab/bounds.hpp"

namespace vclab {

Distribution::Distribution(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error("distribution needs at least one point");
  double total = 0;
  for (double w : weights_) {
    if (!(w >= 0) || !std::isfinite(w)) throw Error("distribution weights must be nonnegative");
    total += w;
    cumulative_.push_back(total);
  }
  if (std::abs(total - 1) > 1e-12) throw Error("distribution weights must sum to 1");
}

Distribution Distribution::uniform(std::size_t n) {
  if (n == 0) throw Error("distribution needs at least one point");
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double Distribution::mass(Mask m) const {
  double total = 0;
  for (int i : indices_of(m)) {
    if (static_cast<std::size_t>(i) < weights_.size()) total += weights_[static_cast<std::size_t>(i)];
  }
  return total;
}

std::size_t Distribution::draw(Xoshiro256& rng) const {
  double u = rng.uniform() * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  std::size_t i = static_cast<std::size_t>(it - cumulative_.begin());
  if (i >= weights_.size()) i = weights_.size() - 1;
  // never land on a zero-weight point through rounding
  while (weights_[i] == 0 && i > 0) --i;
  return i;
}

Distribution load_distribution(std::string_view json_text, std::size_t domain_size) {
  try {
    auto j = nlohmann::json::parse(json_text);
    auto w = j.at("weights").get<std::vector<double>>();
    if (w.size() != domain_size) throw Error("distribution length differs from the domain");
    return Distribution(std::move(w));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed distribution file: ") + e.what());
  }
}

Mask learn(const CompressionScheme& scheme, const LabelledSample& sample) {
  const Mask support = sample.support();
  const Mask labels = sample.labels();
  if (support & ~full_mask(scheme.domain_size())) throw Error("sample point outside the domain");
  for (int j = 0; j <= std::min(scheme.size(), popcount(support)); ++j) {
    auto layer = submasks_of_size(support, j);
    std::sort(layer.begin(), layer.end(), index_lex_less);
    for (Mask s : layer) {
      Mask key_labels = scheme.labelled() ? (labels & s) : 0;
      for (std::uint32_t c = 1; c <= scheme.copies_at(j); ++c) {
        Mask h = scheme.hypothesis(SchemeKey{s, c, key_labels});
        if ((h & support) == labels) return h;
      }
    }
  }
  return 0;
}

double true_error(const Distribution& dist, Mask hypothesis, Mask target) {
  return dist.mass(hypothesis ^ target);
}

double hoeffding_slack(double bound, std::uint64_t trials) {
  double b = std::clamp(bound, 0.0, 1.0);
  return 3 * std::sqrt(b * (1 - b) / static_cast<double>(trials)) + 1e-6;
}

namespace {

void check_experiment(const Experiment& e) {
  if (!e.space || !e.scheme || !e.dist) throw Error("experiment is missing its inputs");
  if (e.scheme->domain_size() != e.space->size()) throw Error("scheme and space domains differ");
  if (e.dist->size() != e.space->size()) throw Error("distribution and space domains differ");
  if (e.target >= e.space->concepts().size()) {
    throw Error("target index " + std::to_string(e.target) + " is not a concept");
  }
  if (e.trials < 1) throw Error("trials must be at least 1");
  if (!(e.epsilon > 0 && e.epsilon <= 1)) throw Error("epsilon must lie in (0, 1]");
}

TrialReport make_report(const Experiment& e, std::int64_t failures) {
  TrialReport r;
  r.trials = e.trials;
  r.failures = static_cast<std::uint64_t>(failures);
  r.empirical_rate = static_cast<double>(failures) / static_cast<double>(e.trials);
  std::vector<std::uint64_t> copies(e.scheme->copies().begin(), e.scheme->copies().end());
  r.theoretical_bound =
      static_cast<double>(std::min<long double>(1, bounds::tail_bound(e.m, copies, e.epsilon)));
  r.seed = e.seed;
  r.m = e.m;
  r.epsilon = e.epsilon;
  r.slack = hoeffding_slack(r.theoretical_bound, e.trials);
  r.within_bound = r.empirical_rate <= r.theoretical_bound + r.slack;
  return r;
}

}  // namespace

LabelledSample draw_sample(const Experiment& e, std::uint64_t trial) {
  Xoshiro256 rng(trial_seed(e.seed, trial));
  const Mask target = e.space->concepts()[e.target];
  std::vector<std::pair<std::size_t, bool>> points;
  points.reserve(e.m);
  for (std::uint64_t i = 0; i < e.m; ++i) {
    std::size_t x = e.dist->draw(rng);
    points.emplace_back(x, ((target >> x) & 1) != 0);
  }
  return LabelledSample(std::move(points));
}

TrialReport pac_experiment(const Experiment& e, Exec exec) {
  check_experiment(e);
  const Mask target = e.space->concepts()[e.target];
  std::int64_t failures = kernels::count_if(
      static_cast<std::int64_t>(e.trials),
      [&](std::int64_t t) {
        LabelledSample s = draw_sample(e, static_cast<std::uint64_t>(t));
        Mask h = learn(*e.scheme, s);
        return true_error(*e.dist, h, target) > e.epsilon;
      },
      exec);
  return make_report(e, failures);
}

TrialReport event321_experiment(const Experiment& e, Exec exec) {
  check_experiment(e);
  if (e.m < static_cast<std::uint64_t>(e.scheme->size())) {
    throw Error("m must be at least the scheme size");
  }
  const Mask target = e.space->concepts()[e.target];
  const bool empty_is_bad = true_error(*e.dist, 0, target) > e.epsilon;
  std::vector<std::pair<SchemeKey, Mask>> bad;
  for (const auto& [key, h] : e.scheme->entries()) {
    if (true_error(*e.dist, h, target) > e.epsilon) bad.emplace_back(key, h);
  }
  std::int64_t failures = kernels::count_if(
      static_cast<std::int64_t>(e.trials),
      [&](std::int64_t t) {
        LabelledSample s = draw_sample(e, static_cast<std::uint64_t>(t));
        const Mask support = s.support();
        const Mask labels = s.labels();
        for (const auto& [key, h] : bad) {
          if (!is_subset(key.points, support) || (h & support) != labels) continue;
          if (!e.scheme->labelled() || key.labels == (labels & key.points)) return true;
        }
        if (labels != 0 || !empty_is_bad) return false;
        // a key left out of the entries gives the empty hypothesis
        std::uint64_t defined = 0;
        for (const auto& [key, h] : e.scheme->entries()) {
          if (key.labels == 0 && is_subset(key.points, support)) ++defined;
        }
        return defined < e.scheme->keys_within(support);
      },
      exec);
  return make_report(e, failures);
}

}  // namespace vclab
