#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "vclab/kernels.hpp"
#include "vclab/rng.hpp"
#include "vclab/scheme.hpp"

namespace vclab {

/// Finite distribution on the domain points.
class Distribution {
public:
  // Weights must be nonnegative and sum to 1 within 1e-12.
  explicit Distribution(std::vector<double> weights);
  static Distribution uniform(std::size_t n);

  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double mass(Mask m) const;
  // One point by inversion of the cumulative weights.
  std::size_t draw(Xoshiro256& rng) const;

private:
  std::vector<double> weights_;
  std::vector<double> cumulative_;
};

// {"weights": [..]} in domain order.
Distribution load_distribution(std::string_view json_text, std::size_t domain_size);

/// The scheme's learning rule: the hypothesis of the first key inside the
/// sample support that agrees with the sample, in key order. Keys without an
/// entry give the empty hypothesis. All-zero when no key fits.
Mask learn(const CompressionScheme& scheme, const LabelledSample& sample);

// P(hypothesis △ target).
double true_error(const Distribution& dist, Mask hypothesis, Mask target);

struct TrialReport {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double empirical_rate = 0;
  double theoretical_bound = 0;
  std::uint64_t seed = 0;
  std::uint64_t m = 0;
  double epsilon = 0;
  double slack = 0;
  // empirical_rate <= theoretical_bound + slack
  bool within_bound = true;
};

// 3 sqrt(b (1 - b) / T) + 1e-6, with b clamped to [0, 1].
double hoeffding_slack(double bound, std::uint64_t trials);

struct Experiment {
  const ConceptSpace* space = nullptr;
  const CompressionScheme* scheme = nullptr;
  std::size_t target = 0;  // index into space.concepts()
  const Distribution* dist = nullptr;
  std::uint64_t m = 0;
  double epsilon = 0.1;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
};

// Draws a labelled sample of size m for one trial.
LabelledSample draw_sample(const Experiment& e, std::uint64_t trial);

/// Fraction of trials where the learned hypothesis has error > epsilon.
TrialReport pac_experiment(const Experiment& e, Exec exec = Exec::parallel);

/// Fraction of trials where some key inside the sample has a hypothesis that
/// agrees with the sample and has error > epsilon.
TrialReport event321_experiment(const Experiment& e, Exec exec = Exec::parallel);

}  // namespace vclab
