#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vclab/kernels.hpp"

namespace vclab::bounds {

using BigInt = boost::multiprecision::cpp_int;

// Sum of C(m, i) for i = 0..d, exact. C(m, i) = 0 for i > m.
BigInt binom_leq(std::uint64_t m, std::uint64_t d);

/// Probability bound on a bad consistent hypothesis among the keys of a
/// sample of size m: sum_i n_i C(m, i) (1 - eps)^(m - i). Accumulated in
/// log space with long double.
long double tail_bound(std::uint64_t m, const std::vector<std::uint64_t>& copies,
                       double epsilon);
// Plain scheme of size d: n_i = 1 for i = 0..d.
long double tail_bound(std::uint64_t m, int d, double epsilon);

enum class Which { blumer, shawe_taylor, floyd_warmuth, copy };

Which parse_which(const std::string& s);
std::string to_string(Which w);

struct BoundQuery {
  double epsilon = 0.05;
  double delta = 0.05;
  int d = 0;              // VC dimension, or scheme size d / k
  std::uint64_t n = 1;    // copy count, copy bound only
  std::optional<double> beta;
};

// The closed-form value of the named bound. Throws on missing or bad beta.
double bound_value(Which which, const BoundQuery& q);

struct BetaOptimum {
  double beta = 0;
  double value = 0;
  // The coarse grid decreased to its minimum and increased after it.
  bool unimodal = true;
};

inline constexpr int kBetaGrid = 10000;
inline constexpr double kBetaLo = 1e-9;
inline constexpr double kBetaHi = 1 - 1e-9;

/// Minimizes the bound over beta: a 10^4-point grid, then golden-section
/// search on the bracketing grid cell down to a width of 1e-9.
BetaOptimum optimize_beta(Which which, BoundQuery q);

struct FigureRow {
  int d = 0;
  double beta_fw = 0;
  double f = 0;
  double beta_st = 0;
  double g = 0;
};

std::vector<FigureRow> figure31_data(double epsilon, double delta, int d_max,
                                     Exec exec = Exec::parallel);
std::string figure31_csv(const std::vector<FigureRow>& rows);

struct LemmaCheck {
  bool holds = false;
  std::uint64_t m = 0;
  long double tail = 0;
};

/// m = ceil(bound at beta) must give tail(m) <= delta; n = 1 is the plain case.
LemmaCheck check_lemma322(double epsilon, double delta, int d, std::uint64_t n,
                          double beta);

}  // namespace vclab::bounds
