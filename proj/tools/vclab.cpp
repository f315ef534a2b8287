// vclab command-line front end. Every command prints one JSON object (fig31
// prints CSV). Exit codes: 0 ok, 1 a checked property failed, 2 usage or
// input error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vclab/bounds.hpp"
#include "vclab/fixtures.hpp"
#include "vclab/kernels.hpp"
#include "vclab/pacsim.hpp"
#include "vclab/scheme.hpp"
#include "vclab/solver.hpp"
#include "vclab/space.hpp"
#include "vclab/vcdim.hpp"

using nlohmann::json;
using namespace vclab;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kFailure = 2;

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct Output {
  std::string path;
  const int* status = nullptr;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
  }
  // Reports carry the command verdict; it always agrees with the exit code.
  void write(json j) const {
    if (status) j["result"] = *status == kOk ? "ok" : *status == kViolation ? "violation" : "error";
    write(j.dump() + "\n");
  }
};

json report(const std::string& command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

json space_json(const ConceptSpace& space) { return json::parse(save_space(space)); }

json scheme_json(const CompressionScheme& scheme, const ConceptSpace& space) {
  return json::parse(save_scheme(scheme, space));
}

// A scheme file, or any report that carries one under "scheme".
CompressionScheme read_scheme(const std::string& path, const ConceptSpace& space) {
  std::string text = read_text(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed scheme file: ") + e.what());
  }
  if (j.is_object() && !j.contains("entries") && j.contains("scheme")) {
    return load_scheme(j.at("scheme").dump(), space);
  }
  return load_scheme(text, space);
}

// Same for spaces: a space file or a report with a "space" object.
ConceptSpace read_space(const std::string& path) {
  std::string text = read_text(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed space file: ") + e.what());
  }
  if (j.is_object() && !j.contains("domain") && j.contains("space")) {
    return load_space(j.at("space").dump());
  }
  return load_space(text);
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<std::uint32_t> parse_copies(const std::string& s) {
  std::vector<std::uint32_t> out;
  for (const auto& part : split_names(s)) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(part, &used);
      if (used != part.size() || v < 0 || v > 0xffffffffLL) throw std::invalid_argument(part);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      throw Error("bad copy count '" + part + "'");
    }
  }
  return out;
}

json embedding_json(const RelationSpace& src, const RelationSpace& dst, const EmbeddingMap& m) {
  json j;
  std::vector<std::string> left, right;
  for (std::size_t x = 0; x < m.left_map.size(); ++x) left.push_back(dst.left()[m.left_map[x]]);
  for (std::size_t y = 0; y < m.right_map.size(); ++y) right.push_back(dst.right()[m.right_map[y]]);
  j["left_map"] = left;
  j["right_map"] = right;
  j["source_left"] = src.left();
  j["source_right"] = src.right();
  if (m.flip) {
    std::vector<int> flip(m.flip->begin(), m.flip->end());
    j["flip"] = flip;
  }
  return j;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("VCLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
      throw Error("VCLAB_SEED must be an unsigned integer");
    }
  }
  return 20190101;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vclab: VC dimension, compression schemes and PAC bounds on finite concept spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  std::string out_path;
  app.add_option("--threads", threads, "OpenMP worker count (0 = runtime default)");
  app.add_option("--out", out_path, "Write the result to this file instead of stdout");

  int status = kOk;
  std::function<void()> action;

  // vc
  std::string space_path = "-";
  auto* vc_cmd = app.add_subcommand("vc", "VC dimension, first witness and shatter coefficients (cap 24 points)");
  vc_cmd->add_option("space", space_path, "Space file, '-' for stdin");
  vc_cmd->callback([&] {
    action = [&] {
      auto space = read_space(space_path);
      auto r = vc_dimension(space);
      json j = report("vc");
      j["vc"] = r.vc;
      j["witness"] = space.names_of(r.witness);
      j["shatter_coefficients"] = r.shatter_coeffs;
      j["concepts"] = space.distinct_count();
      Output{out_path, &status}.write(j);
    };
  });

  // shatter
  std::string subset_arg;
  auto* shatter_cmd = app.add_subcommand("shatter", "Whether a set of points is shattered");
  shatter_cmd->add_option("space", space_path, "Space file, '-' for stdin");
  shatter_cmd->add_option("--subset", subset_arg, "Comma-separated point names")->required();
  shatter_cmd->callback([&] {
    action = [&] {
      auto space = read_space(space_path);
      auto names = split_names(subset_arg);
      Mask subset = space.mask_of(names);
      json j = report("shatter");
      j["subset"] = space.names_of(subset);
      j["shattered"] = is_shattered(space, subset);
      j["traces"] = traces(space, subset).size();
      Output{out_path, &status}.write(j);
    };
  });

  // check-maximum
  int d_arg = 0;
  std::string mode_arg = "both";
  auto* maximum_cmd = app.add_subcommand(
      "check-maximum", "d-maximum test by definition (cap 16), by cardinality, or both");
  maximum_cmd->add_option("space", space_path, "Space file, '-' for stdin");
  maximum_cmd->add_option("--d", d_arg, "Dimension d")->required();
  maximum_cmd->add_option("--mode", mode_arg, "definition|cardinality|both")
      ->check(CLI::IsMember({"definition", "cardinality", "both"}));
  maximum_cmd->callback([&] {
    action = [&] {
      auto space = read_space(space_path);
      json j = report("check-maximum");
      j["d"] = d_arg;
      int vc = vc_of(space);
      j["vc"] = vc;
      std::optional<bool> def, card;
      if (vc == d_arg && mode_arg != "cardinality") {
        def = is_maximum(space, d_arg, MaximumMode::definition);
        j["definition"] = *def;
      }
      if (vc == d_arg && mode_arg != "definition") {
        card = is_maximum(space, d_arg, MaximumMode::cardinality);
        j["cardinality"] = *card;
      }
      if (vc != d_arg) {
        j["maximum"] = false;
        j["reason"] = "vc differs from d";
      } else {
        j["maximum"] = def ? *def : *card;
      }
      if (def && card) {
        j["agree"] = *def == *card;
        if (*def != *card) status = kViolation;
      }
      Output{out_path, &status}.write(j);
    };
  });

  // check-maximal
  auto* maximal_cmd = app.add_subcommand("check-maximal", "d-maximal test (cap 16 points)");
  maximal_cmd->add_option("space", space_path, "Space file, '-' for stdin");
  maximal_cmd->add_option("--d", d_arg, "Dimension d")->required();
  maximal_cmd->callback([&] {
    action = [&] {
      auto space = read_space(space_path);
      json j = report("check-maximal");
      j["d"] = d_arg;
      int vc = vc_of(space);
      j["vc"] = vc;
      j["maximal"] = vc == d_arg && is_maximal(space, d_arg);
      Output{out_path, &status}.write(j);
    };
  });

  // dual
  bool reduce = false;
  auto* dual_cmd = app.add_subcommand("dual", "Dual space: concepts become points");
  dual_cmd->add_option("space", space_path, "Space file, '-' for stdin");
  dual_cmd->add_flag("--reduce", reduce, "Drop repeated rows and columns first");
  dual_cmd->callback([&] {
    action = [&] {
      auto space = read_space(space_path);
      auto d = to_concept_space(dual(to_relation(space, reduce)));
      json j = space_json(d);
      j["schema_version"] = kSchemaVersion;
      j["command"] = "dual";
      j["vc_primal"] = vc_of(space);
      j["vc_dual"] = vc_of(d);
      Output{out_path, &status}.write(j);
    };
  });

  // find-embedding
  std::string src_path, dst_path;
  bool generalized = false;
  auto* embed_cmd = app.add_subcommand(
      "find-embedding", "Product-form embedding of one relation into another (grids of 16 and 36 cells)");
  embed_cmd->add_option("--src", src_path, "Source space file")->required();
  embed_cmd->add_option("--dst", dst_path, "Target space file")->required();
  embed_cmd->add_flag("--generalized", generalized, "Allow complementing source rows");
  embed_cmd->callback([&] {
    action = [&] {
      auto src = to_relation(read_space(src_path));
      auto dst = to_relation(read_space(dst_path));
      auto m = find_embedding(src, dst, generalized);
      json j = report("find-embedding");
      j["generalized"] = generalized;
      j["found"] = m.has_value();
      if (m) j["embedding"] = embedding_json(src, dst, *m);
      Output{out_path, &status}.write(j);
    };
  });

  // verify-scheme
  std::string scheme_path;
  auto* verify_cmd = app.add_subcommand("verify-scheme", "Check a scheme on every sample (cap 16 points)");
  verify_cmd->add_option("space", space_path, "Space file, '-' for stdin");
  verify_cmd->add_option("--scheme", scheme_path, "Scheme file")->required();
  verify_cmd->callback([&] {
    action = [&] {
      auto space = read_space(space_path);
      auto scheme = read_scheme(scheme_path, space);
      auto v = verify_scheme(space, scheme);
      json j = report("verify-scheme");
      j["ok"] = v.ok;
      if (!v.ok) {
        j["counterexample"] = {{"subset", space.names_of(v.subset)},
                               {"trace", space.names_of(v.trace)}};
        status = kViolation;
      }
      Output{out_path, &status}.write(j);
    };
  });

  // find-scheme
  int size_arg = 0;
  std::string copies_arg;
  bool labelled = false;
  std::uint64_t node_budget = SolveOptions{}.node_budget;
  auto* find_cmd = app.add_subcommand("find-scheme", "Exhaustive scheme search (cap 12 points)");
  find_cmd->add_option("space", space_path, "Space file, '-' for stdin");
  find_cmd->add_option("--size", size_arg, "Scheme size")->required();
  find_cmd->add_option("--copies", copies_arg, "n0,n1,...,n_size (default all 1)");
  find_cmd->add_flag("--labelled", labelled, "Search for a labelled scheme");
  find_cmd->add_option("--node-budget", node_budget, "Search nodes before CAP_EXCEEDED");
  find_cmd->callback([&] {
    action = [&] {
      auto space = read_space(space_path);
      SolveOptions opts;
      opts.node_budget = node_budget;
      auto r = solve_scheme(space, size_arg, parse_copies(copies_arg),
                            labelled ? SchemeKind::labelled : SchemeKind::unlabelled, opts);
      json j = report("find-scheme");
      j["status"] = to_string(r.status);
      j["nodes"] = r.stats.nodes;
      j["constraints"] = r.stats.constraints;
      if (r.counting_witness) j["counting_witness"] = space.names_of(*r.counting_witness);
      if (r.scheme) j["scheme"] = scheme_json(*r.scheme, space);
      std::cerr << "find-scheme: " << to_string(r.status) << " in " << r.stats.wall_seconds
                << " s\n";
      if (r.status == SolveStatus::cap_exceeded) status = kFailure;
      Output{out_path, &status}.write(j);
    };
  });

  // to-labelled
  auto* labelled_cmd = app.add_subcommand("to-labelled", "Labelled scheme from an unlabelled one");
  labelled_cmd->add_option("space", space_path, "Space file, '-' for stdin");
  labelled_cmd->add_option("--scheme", scheme_path, "Scheme file")->required();
  labelled_cmd->callback([&] {
    action = [&] {
      auto space = read_space(space_path);
      auto out = to_labelled(space, read_scheme(scheme_path, space));
      json j = scheme_json(out, space);
      j["schema_version"] = kSchemaVersion;
      j["command"] = "to-labelled";
      Output{out_path, &status}.write(j);
    };
  });

  // restrict-scheme
  auto* restrict_cmd = app.add_subcommand("restrict-scheme", "Scheme and space restricted to a subset");
  restrict_cmd->add_option("space", space_path, "Space file, '-' for stdin");
  restrict_cmd->add_option("--scheme", scheme_path, "Scheme file")->required();
  restrict_cmd->add_option("--subset", subset_arg, "Comma-separated point names")->required();
  restrict_cmd->callback([&] {
    action = [&] {
      auto space = read_space(space_path);
      auto scheme = read_scheme(scheme_path, space);
      auto r = restrict_scheme(space, scheme, space.mask_of(split_names(subset_arg)));
      json j = report("restrict-scheme");
      j["space"] = space_json(r.space);
      j["scheme"] = scheme_json(r.scheme, r.space);
      j["verified"] = r.space.size() <= kVerifyCap && verify_scheme(r.space, r.scheme).ok;
      Output{out_path, &status}.write(j);
    };
  });

  // widen
  int k_arg = 0;
  std::uint32_t n_arg = 1;
  bool feasibility_only = false;
  std::uint64_t m_arg = 0;
  int wd_arg = 0;
  auto* widen_cmd = app.add_subcommand(
      "widen", "n-copy scheme of size k from a plain scheme of size d, via subset matching");
  widen_cmd->add_option("space", space_path, "Space file, '-' for stdin");
  widen_cmd->add_option("--scheme", scheme_path, "Plain unlabelled scheme file");
  widen_cmd->add_option("--k", k_arg, "Target size")->required();
  widen_cmd->add_option("--n", n_arg, "Copies per key size")->required();
  widen_cmd->add_flag("--feasibility-only", feasibility_only,
                      "Only test n C(m,<=k) >= C(m,<=d) exactly; needs --m and --d");
  widen_cmd->add_option("--m", m_arg, "Domain size (feasibility only)");
  widen_cmd->add_option("--d", wd_arg, "Source size (feasibility only)");
  widen_cmd->callback([&] {
    action = [&] {
      json j = report("widen");
      if (feasibility_only) {
        if (m_arg == 0) throw Error("--feasibility-only needs --m");
        auto d = static_cast<std::uint64_t>(wd_arg);
        auto k = static_cast<std::uint64_t>(k_arg);
        j["m"] = m_arg;
        j["d"] = wd_arg;
        j["k"] = k_arg;
        j["n"] = n_arg;
        j["lhs"] = (bounds::BigInt(n_arg) * bounds::binom_leq(m_arg, k)).str();
        j["rhs"] = bounds::binom_leq(m_arg, d).str();
        j["feasible"] = widening_feasible(m_arg, d, k, n_arg);
        Output{out_path, &status}.write(j);
        return;
      }
      if (scheme_path.empty()) throw Error("widen needs --scheme unless --feasibility-only");
      auto space = read_space(space_path);
      auto scheme = read_scheme(scheme_path, space);
      auto w = widen_to_copies(space, scheme, k_arg, n_arg);
      j["k"] = k_arg;
      j["n"] = n_arg;
      j["feasible"] = true;
      j["matched"] = w.has_value();
      if (w) {
        j["scheme"] = scheme_json(*w, space);
        bool ok = space.size() > kVerifyCap || verify_scheme(space, *w).ok;
        j["verified"] = ok;
        if (!ok) status = kViolation;
      } else {
        status = kViolation;
      }
      Output{out_path, &status}.write(j);
    };
  });

  // cover-scheme
  std::vector<std::string> part_paths;
  auto* cover_cmd = app.add_subcommand(
      "cover-scheme", "Copy scheme from plain schemes of covering classes");
  cover_cmd->add_option("--space", space_path, "Space file, '-' for stdin");
  cover_cmd->add_option("parts", part_paths, "Part files {\"space\", \"scheme\"}")->required();
  cover_cmd->callback([&] {
    action = [&] {
      auto space = read_space(space_path);
      std::vector<CoverPart> parts;
      for (const auto& p : part_paths) {
        auto part_space = read_space(p);
        auto part_scheme = read_scheme(p, part_space);
        parts.push_back({std::move(part_space), std::move(part_scheme)});
      }
      auto out = cover_to_copy_scheme(space, parts);
      json j = report("cover-scheme");
      j["scheme"] = scheme_json(out, space);
      bool ok = space.size() > kVerifyCap || verify_scheme(space, out).ok;
      j["verified"] = ok;
      if (!ok) status = kViolation;
      Output{out_path, &status}.write(j);
    };
  });

  // bounds
  std::string which_arg;
  double eps = 0.05, delta = 0.05;
  std::uint64_t bn_arg = 1;
  double beta = 0;
  bool optimize = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "Sample-complexity bound value");
  bounds_cmd->add_option("--which", which_arg, "fw|st|blumer|copy")->required();
  bounds_cmd->add_option("--eps", eps, "Accuracy epsilon")->required();
  bounds_cmd->add_option("--delta", delta, "Risk delta")->required();
  bounds_cmd->add_option("--d", d_arg, "VC dimension or scheme size")->required();
  bounds_cmd->add_option("--n", bn_arg, "Copies (copy bound)");
  auto* beta_opt = bounds_cmd->add_option("--beta", beta, "Fixed beta in (0, 1)");
  auto* opt_flag = bounds_cmd->add_flag("--optimize", optimize, "Minimize over beta");
  beta_opt->excludes(opt_flag);
  bounds_cmd->callback([&] {
    action = [&] {
      auto which = bounds::parse_which(which_arg);
      bounds::BoundQuery q;
      q.epsilon = eps;
      q.delta = delta;
      q.d = d_arg;
      q.n = bn_arg;
      json j = report("bounds");
      j["which"] = bounds::to_string(which);
      j["epsilon"] = eps;
      j["delta"] = delta;
      j["d"] = d_arg;
      if (which == bounds::Which::copy) j["n"] = bn_arg;
      double value;
      if (which == bounds::Which::blumer) {
        value = bounds::bound_value(which, q);
      } else if (optimize || beta_opt->count() == 0) {
        auto o = bounds::optimize_beta(which, q);
        value = o.value;
        j["beta"] = o.beta;
        j["unimodal"] = o.unimodal;
      } else {
        q.beta = beta;
        value = bounds::bound_value(which, q);
        j["beta"] = beta;
      }
      j["value"] = value;
      j["sample_size"] = std::ceil(value);
      Output{out_path, &status}.write(j);
    };
  });

  // fig31
  int dmax = 50;
  auto* fig_cmd = app.add_subcommand("fig31", "Optimized FW (f) and ST (g) bounds for d = 1..dmax, as CSV");
  fig_cmd->add_option("--eps", eps, "Accuracy epsilon");
  fig_cmd->add_option("--delta", delta, "Risk delta");
  fig_cmd->add_option("--dmax", dmax, "Largest d");
  fig_cmd->callback([&] {
    action = [&] {
      auto rows = bounds::figure31_data(eps, delta, dmax);
      Output{out_path, &status}.write(bounds::figure31_csv(rows));
      for (const auto& r : rows) {
        if (!(r.f < r.g)) {
          std::cerr << "fig31: f(" << r.d << ") >= g(" << r.d << ")\n";
          status = kViolation;
        }
      }
    };
  });

  // check-884
  auto* c884_cmd = app.add_subcommand(
      "check-884", "The |X| = 884, d = 7 comparison of plain and 18418-copy size-5 schemes");
  c884_cmd->callback([&] {
    action = [&] {
      json j = report("check-884");
      const std::uint64_t m = 884, n = 18418;
      bool inequality = widening_feasible(m, 7, 5, n);
      bounds::BoundQuery q;
      q.epsilon = 0.05;
      q.delta = 0.05;
      q.d = 5;
      q.n = n;
      auto copy = bounds::optimize_beta(bounds::Which::copy, q);
      q.d = 7;
      q.n = 1;
      auto fw = bounds::optimize_beta(bounds::Which::floyd_warmuth, q);
      auto copy_bound = static_cast<std::int64_t>(std::ceil(copy.value));
      j["inequality"] = inequality;
      j["copy_bound"] = copy_bound;
      j["copy_beta"] = copy.beta;
      j["copy_min"] = copy.value;
      j["fw_min"] = fw.value;
      j["fw_beta"] = fw.beta;
      j["fw_min_exceeds_884"] = fw.value > 884;
      bool ok = inequality && std::llabs(copy_bound - 879) <= 1 && fw.value > 884;
      j["ok"] = ok;
      if (!ok) status = kViolation;
      Output{out_path, &status}.write(j);
    };
  });

  // simulate
  std::string sim_mode, dist_arg = "uniform";
  std::size_t target = 0;
  std::uint64_t sim_m = 0, trials = 10000, seed = 0;
  double sim_eps = 0.1;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo PAC experiment (pac) or bad-key event (event321)");
  sim_cmd->add_option("mode", sim_mode, "pac|event321")
      ->required()
      ->check(CLI::IsMember({"pac", "event321"}));
  sim_cmd->add_option("--space", space_path, "Space file")->required();
  sim_cmd->add_option("--scheme", scheme_path, "Scheme file")->required();
  sim_cmd->add_option("--target", target, "Index of the target concept")->required();
  sim_cmd->add_option("--dist", dist_arg, "uniform, or a file {\"weights\": [...]}");
  sim_cmd->add_option("--m", sim_m, "Sample size")->required();
  sim_cmd->add_option("--eps", sim_eps, "Accuracy epsilon")->required();
  sim_cmd->add_option("--trials", trials, "Trials");
  auto* seed_opt = sim_cmd->add_option("--seed", seed, "Seed (default: $VCLAB_SEED or 20190101)");
  sim_cmd->callback([&] {
    action = [&] {
      auto space = read_space(space_path);
      auto scheme = read_scheme(scheme_path, space);
      Distribution dist = dist_arg == "uniform"
                              ? Distribution::uniform(space.size())
                              : load_distribution(read_text(dist_arg), space.size());
      Experiment e;
      e.space = &space;
      e.scheme = &scheme;
      e.target = target;
      e.dist = &dist;
      e.m = sim_m;
      e.epsilon = sim_eps;
      e.trials = trials;
      e.seed = seed_opt->count() ? seed : default_seed();
      auto r = sim_mode == "pac" ? pac_experiment(e) : event321_experiment(e);
      json j = report("simulate");
      j["mode"] = sim_mode;
      j["trials"] = r.trials;
      j["failures"] = r.failures;
      j["empirical_rate"] = r.empirical_rate;
      j["theoretical_bound"] = r.theoretical_bound;
      j["slack"] = r.slack;
      j["within_bound"] = r.within_bound;
      j["seed"] = r.seed;
      j["m"] = r.m;
      j["epsilon"] = r.epsilon;
      if (!r.within_bound) status = kViolation;
      Output{out_path, &status}.write(j);
    };
  });

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Fixture spaces and example schemes");
  gen_cmd->require_subcommand(1);
  gen_cmd->fallthrough();
  std::size_t gen_n = 0;
  int gen_d = 0;
  std::string gen_id;
  std::size_t chain = 6;
  auto emit_space = [&](const ConceptSpace& s, const std::string& kind) {
    json j = space_json(s);
    j["schema_version"] = kSchemaVersion;
    j["command"] = "gen " + kind;
    Output{out_path, &status}.write(j);
  };
  auto* g_power = gen_cmd->add_subcommand("power-set", "All subsets of p1..pN");
  g_power->add_option("N", gen_n)->required();
  g_power->callback([&] { action = [&] { emit_space(fixtures::power_set(gen_n), "power-set"); }; });
  auto* g_init = gen_cmd->add_subcommand("initial-segments", "Initial segments of p1..pN and the empty set");
  g_init->add_option("N", gen_n)->required();
  g_init->callback([&] {
    action = [&] { emit_space(fixtures::initial_segments(gen_n), "initial-segments"); };
  });
  auto* g_final = gen_cmd->add_subcommand("final-segments", "Final segments of p1..pN and the empty set");
  g_final->add_option("N", gen_n)->required();
  g_final->callback([&] {
    action = [&] { emit_space(fixtures::final_segments(gen_n), "final-segments"); };
  });
  auto* g_size = gen_cmd->add_subcommand("size-at-most-d", "All subsets of size at most D");
  g_size->add_option("N", gen_n)->required();
  g_size->add_option("D", gen_d)->required();
  g_size->callback([&] {
    action = [&] { emit_space(fixtures::size_at_most(gen_n, gen_d), "size-at-most-d"); };
  });
  auto* g_example = gen_cmd->add_subcommand("paper-example", "Example class: 1.2.4 1.2.5 2.1.4 2.4.5 2.4.6");
  g_example->alias("paper-examples");
  g_example->add_option("ID", gen_id)->required();
  g_example->add_option("--chain", chain, "Chain length for 2.1.4");
  g_example->callback([&] {
    action = [&] { emit_space(fixtures::paper_example(gen_id, chain), "paper-example " + gen_id); };
  });
  auto* g_scheme = gen_cmd->add_subcommand(
      "paper-scheme", "Example scheme: 2.1.4 2.1.4-prime 2.4.5 2.4.6, with its space");
  g_scheme->add_option("ID", gen_id)->required();
  g_scheme->add_option("--chain", chain, "Chain length for 2.1.4");
  g_scheme->callback([&] {
    action = [&] {
      std::string space_id = gen_id == "2.1.4-prime" ? "2.1.4" : gen_id;
      auto space = fixtures::paper_example(space_id, chain);
      auto scheme = fixtures::paper_scheme(gen_id, chain);
      json j = scheme_json(scheme, space);
      j["schema_version"] = kSchemaVersion;
      j["command"] = "gen paper-scheme " + gen_id;
      j["space"] = space_json(space);
      Output{out_path, &status}.write(j);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kFailure;
  }
  try {
    kernels::set_threads(threads);
    if (action) action();
  } catch (const std::exception& e) {
    std::cerr << "vclab: error: " << e.what() << "\n";
    return kFailure;
  }
  return status;
}
