#include "vclab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "vclab/bits.hpp"

namespace vclab::bounds {

BigInt binom_leq(std::uint64_t m, std::uint64_t d) {
  BigInt total = 0;
  BigInt term = 1;
  std::uint64_t top = std::min(m, d);
  for (std::uint64_t i = 0; i <= top; ++i) {
    if (i > 0) {
      term *= (m - i + 1);
      term /= i;
    }
    total += term;
  }
  return total;
}

long double tail_bound(std::uint64_t m, const std::vector<std::uint64_t>& copies,
                       double epsilon) {
  if (!(epsilon > 0 && epsilon <= 1)) throw Error("epsilon must lie in (0, 1]");
  const long double log_keep = std::log1p(-static_cast<long double>(epsilon));
  std::vector<long double> logs;
  long double log_binom = 0;  // log C(m, i)
  for (std::uint64_t i = 0; i < copies.size() && i <= m; ++i) {
    if (i > 0) {
      log_binom += std::log(static_cast<long double>(m - i + 1)) -
                   std::log(static_cast<long double>(i));
    }
    if (copies[i] == 0) continue;
    std::uint64_t rest = m - i;
    long double log_power;
    if (rest == 0) {
      log_power = 0;
    } else if (epsilon == 1) {
      continue;  // (1 - eps)^rest = 0
    } else {
      log_power = static_cast<long double>(rest) * log_keep;
    }
    logs.push_back(std::log(static_cast<long double>(copies[i])) + log_binom + log_power);
  }
  if (logs.empty()) return 0;
  long double top = *std::max_element(logs.begin(), logs.end());
  long double sum = 0;
  for (long double l : logs) sum += std::exp(l - top);
  return std::exp(top) * sum;
}

long double tail_bound(std::uint64_t m, int d, double epsilon) {
  if (d < 0) throw Error("d must be nonnegative");
  return tail_bound(m, std::vector<std::uint64_t>(static_cast<std::size_t>(d) + 1, 1),
                    epsilon);
}

Which parse_which(const std::string& s) {
  if (s == "blumer") return Which::blumer;
  if (s == "st" || s == "shawe_taylor" || s == "shawe-taylor") return Which::shawe_taylor;
  if (s == "fw" || s == "floyd_warmuth" || s == "floyd-warmuth") return Which::floyd_warmuth;
  if (s == "copy") return Which::copy;
  throw Error("unknown bound '" + s + "'");
}

std::string to_string(Which w) {
  switch (w) {
    case Which::blumer: return "blumer";
    case Which::shawe_taylor: return "shawe_taylor";
    case Which::floyd_warmuth: return "floyd_warmuth";
    case Which::copy: return "copy";
  }
  return "?";
}

namespace {

void check_query(const BoundQuery& q) {
  if (!(q.epsilon > 0 && q.epsilon <= 1)) throw Error("epsilon must lie in (0, 1]");
  if (!(q.delta > 0 && q.delta <= 1)) throw Error("delta must lie in (0, 1]");
  if (q.d < 0) throw Error("d must be nonnegative");
}

double with_beta(Which which, const BoundQuery& q, double beta) {
  const double eps = q.epsilon;
  const double delta = q.delta;
  const double d = q.d;
  switch (which) {
    case Which::shawe_taylor:
      return (1 / (1 - beta)) * ((1 / eps) * std::log(2 / delta) +
                                 (2 * d * std::log(2.0)) / eps +
                                 (d / eps) * std::log(1 / (eps * beta * beta)));
    case Which::floyd_warmuth:
      return (1 / (1 - beta)) *
             ((1 / eps) * std::log(1 / delta) + d + (d / eps) * std::log(1 / (beta * eps)));
    case Which::copy:
      return (1 / (1 - beta)) * ((1 / eps) * std::log(static_cast<double>(q.n) / delta) + d +
                                 (d / eps) * std::log(1 / (beta * eps)));
    case Which::blumer:
      break;
  }
  throw Error("bound has no beta parameter");
}

}  // namespace

double bound_value(Which which, const BoundQuery& q) {
  check_query(q);
  if (which == Which::blumer) {
    const double eps = q.epsilon;
    return std::max((4 / eps) * std::log2(2 / q.delta),
                    (8 * static_cast<double>(q.d) / eps) * std::log2(13 / eps));
  }
  if (which == Which::copy && q.n < 1) throw Error("copy bound needs n >= 1");
  if (!q.beta) throw Error(to_string(which) + " bound needs beta");
  if (!(*q.beta > 0 && *q.beta < 1)) throw Error("beta must lie in (0, 1)");
  return with_beta(which, q, *q.beta);
}

BetaOptimum optimize_beta(Which which, BoundQuery q) {
  check_query(q);
  if (which == Which::blumer) throw Error("blumer bound has no beta parameter");
  auto f = [&](double beta) { return with_beta(which, q, beta); };

  const double step = (kBetaHi - kBetaLo) / (kBetaGrid - 1);
  std::vector<double> values(kBetaGrid);
  std::size_t best = 0;
  for (int i = 0; i < kBetaGrid; ++i) {
    values[static_cast<std::size_t>(i)] = f(kBetaLo + step * i);
    if (values[static_cast<std::size_t>(i)] < values[best]) best = static_cast<std::size_t>(i);
  }
  BetaOptimum out;
  const double slack = 1e-12;
  for (std::size_t i = 1; i <= best; ++i) {
    if (values[i] > values[i - 1] * (1 + slack)) out.unimodal = false;
  }
  for (std::size_t i = best + 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1] * (1 - slack)) out.unimodal = false;
  }

  double a = best == 0 ? kBetaLo : kBetaLo + step * static_cast<double>(best - 1);
  double b = best + 1 >= values.size() ? kBetaHi : kBetaLo + step * static_cast<double>(best + 1);
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double c = b - (b - a) * inv_phi;
  double e = a + (b - a) * inv_phi;
  double fc = f(c), fe = f(e);
  while (b - a > 1e-9) {
    if (fc < fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - (b - a) * inv_phi;
      fc = f(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + (b - a) * inv_phi;
      fe = f(e);
    }
  }
  double mid = (a + b) / 2;
  // keep the best of the refined point and the grid point
  double grid_beta = kBetaLo + step * static_cast<double>(best);
  if (f(mid) <= values[best]) {
    out.beta = mid;
    out.value = f(mid);
  } else {
    out.beta = grid_beta;
    out.value = values[best];
  }
  return out;
}

std::vector<FigureRow> figure31_data(double epsilon, double delta, int d_max, Exec exec) {
  if (d_max < 1) throw Error("dmax must be at least 1");
  std::vector<FigureRow> rows(static_cast<std::size_t>(d_max));
  kernels::for_each_index(
      d_max,
      [&](std::int64_t i) {
        BoundQuery q;
        q.epsilon = epsilon;
        q.delta = delta;
        q.d = static_cast<int>(i) + 1;
        auto fw = optimize_beta(Which::floyd_warmuth, q);
        auto st = optimize_beta(Which::shawe_taylor, q);
        rows[static_cast<std::size_t>(i)] = {q.d, fw.beta, fw.value, st.beta, st.value};
      },
      exec);
  return rows;
}

std::string figure31_csv(const std::vector<FigureRow>& rows) {
  std::ostringstream out;
  out << "d,beta_fw,f,beta_st,g\n";
  out << std::setprecision(17);
  for (const auto& r : rows) {
    out << r.d << ',' << r.beta_fw << ',' << r.f << ',' << r.beta_st << ',' << r.g << '\n';
  }
  return out.str();
}

LemmaCheck check_lemma322(double epsilon, double delta, int d, std::uint64_t n,
                          double beta) {
  BoundQuery q;
  q.epsilon = epsilon;
  q.delta = delta;
  q.d = d;
  q.n = n;
  q.beta = beta;
  double bound = bound_value(n == 1 ? Which::floyd_warmuth : Which::copy, q);
  LemmaCheck out;
  double m = std::ceil(bound);
  if (!(m < 1.8e19)) throw Error("sample size overflows 64 bits");
  out.m = m <= 0 ? 0 : static_cast<std::uint64_t>(m);
  out.tail = tail_bound(out.m, std::vector<std::uint64_t>(static_cast<std::size_t>(d) + 1, n),
                        epsilon);
  out.holds = out.tail <= static_cast<long double>(delta);
  return out;
}

}  // namespace vclab::bounds
