#include "tvs/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>

#include "tvs/bandlimit.hpp"
#include "tvs/complexity.hpp"
#include "tvs/error.hpp"
#include "tvs/graph.hpp"
#include "tvs/io.hpp"
#include "tvs/oracle.hpp"
#include "tvs/random.hpp"
#include "tvs/sampling.hpp"
#include "tvs/spectral.hpp"

namespace tvs::cli {

namespace {

constexpr const char* kSeedEnv = "TVS_SEED";

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) {
    return *flag;
  }
  if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string(kSeedEnv) + " is not an unsigned integer");
    }
  }
  return 0;
}

// Writes to the named file, or to `out` when the path is empty or "-".
void emit(const std::string& path, std::string_view text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_file(path, text);
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

std::size_t to_index(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw InputError("not a non-negative integer: \"" + s + "\"");
  }
  if (pos != s.size() || s.front() == '-') {
    throw InputError("not a non-negative integer: \"" + s + "\"");
  }
  return static_cast<std::size_t>(v);
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw InputError("not a number: \"" + s + "\"");
  }
  if (pos != s.size()) {
    throw InputError("not a number: \"" + s + "\"");
  }
  return v;
}

// "a,b;c,d" -> {(a, b), (c, d)}
std::vector<FrequencyPair> parse_pairs(const std::string& text) {
  std::vector<FrequencyPair> pairs;
  for (const auto& item : split(text, ';')) {
    const auto parts = split(item, ',');
    if (parts.size() != 2) {
      throw InputError("bad pair \"" + item + "\", expected j_t,j_g");
    }
    pairs.push_back({to_index(parts[0]), to_index(parts[1])});
  }
  return pairs;
}

SpectralCoefficients parse_coeffs(const std::string& text) {
  SpectralCoefficients coeffs;
  for (const auto& item : split(text, ';')) {
    const auto parts = split(item, ',');
    if (parts.size() != 3) {
      throw InputError("bad coefficient \"" + item + "\", expected j_t,j_g,value");
    }
    coeffs[{to_index(parts[0]), to_index(parts[1])}] = to_double(parts[2]);
  }
  return coeffs;
}

struct ProblemArgs {
  std::string graph_t;
  std::string graph_g;
  std::string support;
  std::string basis;

  void add_to(CLI::App* cmd, bool support_required = true) {
    cmd->add_option("--graph-t", graph_t, "Time graph JSON");
    cmd->add_option("--graph-g", graph_g, "Vertex graph JSON");
    auto* s = cmd->add_option("--support", support, "Spectral support JSON");
    if (support_required) {
      s->required();
    }
    cmd->add_option("--basis-file", basis,
                    "Reduced basis JSON {\"time\", \"graph\"}; replaces the eigendecomposition");
  }
};

Graph load_graph(const std::string& path) { return io::graph_from_json(io::read_file(path)); }

void check_graph_dims(const ProblemArgs& a, const SpectralSupport& s) {
  if (!a.graph_t.empty() && load_graph(a.graph_t).size() != s.times()) {
    throw InputError("dimension mismatch: time graph does not have T = " +
                     std::to_string(s.times()) + " vertices");
  }
  if (!a.graph_g.empty() && load_graph(a.graph_g).size() != s.vertices()) {
    throw InputError("dimension mismatch: vertex graph does not have N = " +
                     std::to_string(s.vertices()) + " vertices");
  }
}

ReducedBasis load_reduced(const ProblemArgs& a) {
  auto support = io::support_from_json(io::read_file(a.support));
  check_graph_dims(a, support);
  if (!a.basis.empty()) {
    return io::reduced_basis_from_json(io::read_file(a.basis), support);
  }
  if (a.graph_t.empty() || a.graph_g.empty()) {
    throw InputError("need --graph-t and --graph-g (or --basis-file)");
  }
  return make_instance(load_graph(a.graph_t), load_graph(a.graph_g), std::move(support)).reduced;
}

std::string report_line(const QualificationReport& r) {
  std::ostringstream os;
  os << "samples=" << r.samples << " rank=" << r.rank << " K=" << r.bandwidth
     << " K_T=" << r.time_bandwidth << " K_G=" << r.graph_bandwidth << " |S_T|=" << r.time_slots
     << " |S_G|=" << r.vertices << " qualified=" << (r.qualified ? "true" : "false")
     << " critical=" << (r.critical ? "true" : "false") << "\n";
  return os.str();
}

struct GenGraphArgs {
  std::string type;
  std::size_t n{0};
  std::size_t center{0};
  double p{0.5};
  std::optional<std::uint64_t> seed;
  std::string output;
};

struct GenSupportArgs {
  std::size_t T{0};
  std::size_t N{0};
  std::string pairs;
  bool random{false};
  std::size_t kt{0};
  std::size_t kg{0};
  double fill{0.5};
  std::optional<std::uint64_t> seed;
  std::string output;
};

struct GenSignalArgs {
  ProblemArgs problem;
  std::string coeffs;
  std::optional<std::uint64_t> seed;
  std::string output;
};

int gen_graph(const GenGraphArgs& a, std::ostream& out) {
  std::optional<Graph> g;
  if (a.type == "cycle") {
    g = cycle_graph(a.n);
  } else if (a.type == "star") {
    g = star_graph(a.n, a.center);
  } else if (a.type == "path") {
    g = path_graph(a.n);
  } else if (a.type == "er") {
    Rng rng(resolve_seed(a.seed));
    RandomGraphOptions opts;
    opts.edge_probability = a.p;
    g = random_connected_graph(a.n, rng, opts);
  } else {
    throw InputError("unknown graph type \"" + a.type + "\" (cycle, star, path, er)");
  }
  emit(a.output, io::graph_to_json(*g), out);
  return kOk;
}

int gen_support(const GenSupportArgs& a, std::ostream& out) {
  std::optional<SpectralSupport> s;
  if (a.random == !a.pairs.empty()) {
    throw InputError("gen support: give exactly one of --pairs or --random");
  }
  if (a.random) {
    Rng rng(resolve_seed(a.seed));
    if (a.kt == 0 && a.kg == 0) {
      s = random_sbl_support(a.T, a.N, rng);
    } else {
      s = random_support(a.T, a.N, a.kt, a.kg, a.fill, rng);
    }
  } else {
    s = SpectralSupport(a.T, a.N, parse_pairs(a.pairs));
  }
  emit(a.output, io::support_to_json(*s), out);
  return kOk;
}

int gen_signal(const GenSignalArgs& a, std::ostream& out) {
  const auto reduced = load_reduced(a.problem);
  SpectralCoefficients coeffs;
  if (a.coeffs.empty()) {
    Rng rng(resolve_seed(a.seed));
    coeffs = random_coefficients(reduced.support(), rng);
  } else {
    coeffs = parse_coeffs(a.coeffs);
  }
  emit(a.output, io::signal_to_csv(synth_signal(reduced, coeffs)), out);
  return kOk;
}

struct AnalyzeArgs {
  std::string graph_t;
  std::string graph_g;
  std::string signal;
  double eps{kDefaultSupportEps};
  std::string output;
  std::string spectrum;
};

int analyze(const AnalyzeArgs& a, std::ostream& out) {
  const auto tb = eig_sym(laplacian(load_graph(a.graph_t)));
  const auto gb = eig_sym(laplacian(load_graph(a.graph_g)));
  const auto x = io::signal_from_csv(io::read_file(a.signal));
  const Matrix xf = jft(tb, gb, x);
  const auto s = detect_support(xf, a.eps);
  if (!a.spectrum.empty()) {
    io::write_file(a.spectrum, io::matrix_to_csv(xf));
  }
  if (!a.output.empty()) {
    io::write_file(a.output, io::support_to_json(s));
  }
  out << "T=" << s.times() << " N=" << s.vertices() << " K=" << s.bandwidth()
      << " K_T=" << s.time_bandwidth() << " K_G=" << s.graph_bandwidth()
      << " gbl=" << (is_gbl(s) ? "true" : "false") << " sbl=" << (is_sbl(s) ? "true" : "false")
      << "\n";
  if (a.output.empty()) {
    out << io::support_to_json(s);
  }
  return kOk;
}

struct BasisArgs {
  std::string graph;
  std::string output;
  std::string values;
};

int basis(const BasisArgs& a, std::ostream& out) {
  const auto b = eig_sym(laplacian(load_graph(a.graph)));
  emit(a.output, io::matrix_to_csv(b.vectors()), out);
  if (!a.values.empty()) {
    io::write_file(a.values, io::matrix_to_csv(b.values().transpose()));
  }
  return kOk;
}

struct PlanArgs {
  ProblemArgs problem;
  bool separate{false};
  std::string output;
  std::string schedule;
};

int plan(const PlanArgs& a, std::ostream& out) {
  const auto reduced = load_reduced(a.problem);
  std::optional<SamplingPlan> p;
  QualificationReport report;
  if (a.separate) {
    p = separate_sampling(reduced);
    report = qualify(*p, reduced);
  } else {
    auto result = critical_sampling_set(reduced);
    p = std::move(result.plan);
    report = result.report;
  }
  if (a.output.empty()) {
    out << io::plan_to_json(*p, report);
  } else {
    io::write_file(a.output, io::plan_to_json(*p, report));
  }
  if (a.schedule.empty()) {
    out << io::schedule_to_csv(*p);
  } else {
    io::write_file(a.schedule, io::schedule_to_csv(*p));
  }
  out << report_line(report);
  return kOk;
}

struct SampleArgs {
  std::string signal;
  std::string plan;
  std::string output;
};

int sample_cmd(const SampleArgs& a, std::ostream& out) {
  const auto x = io::signal_from_csv(io::read_file(a.signal));
  const auto p = io::plan_from_json(io::read_file(a.plan));
  emit(a.output, io::samples_to_csv(p, sample(x, p)), out);
  return kOk;
}

struct ReconstructArgs {
  ProblemArgs problem;
  std::string plan;
  std::string samples;
  std::string output;
  std::string reference;
  double tol{1e-6};
};

int reconstruct_cmd(const ReconstructArgs& a, std::ostream& out, std::ostream& err) {
  const auto reduced = load_reduced(a.problem);
  const auto p = io::plan_from_json(io::read_file(a.plan));
  const auto values = io::samples_from_csv(io::read_file(a.samples), p);
  const auto rec = reconstruct(values, p, reduced);
  emit(a.output, io::signal_to_csv(rec.signal), out);
  if (a.reference.empty()) {
    return kOk;
  }
  const auto ref = io::signal_from_csv(io::read_file(a.reference));
  if (ref.vertices() != rec.signal.vertices() || ref.times() != rec.signal.times()) {
    throw InputError("dimension mismatch: reference signal shape differs from the plan");
  }
  const double max_err = (ref.matrix() - rec.signal.matrix()).cwiseAbs().maxCoeff();
  const double bound = a.tol * ref.matrix().norm();
  std::ostream& report = (a.output.empty() || a.output == "-") ? err : out;
  report << "max_abs_error=" << io::format_double(max_err) << " bound=" << io::format_double(bound)
         << " method=" << (rec.least_squares ? "least_squares" : "square") << "\n";
  return max_err < bound ? kOk : kFailure;
}

struct VerifyArgs {
  ProblemArgs problem;
  std::string plan;
  bool exhaustive{false};
  std::size_t max_size{0};
  std::size_t monotonicity_trials{0};
  std::optional<std::uint64_t> seed;
  std::string output;
};

int verify(const VerifyArgs& a, std::ostream& out) {
  const auto reduced = load_reduced(a.problem);
  const auto& s = reduced.support();
  int code = kOk;
  if (!a.plan.empty()) {
    const auto p = io::plan_from_json(io::read_file(a.plan));
    const auto report = qualify(p, reduced);
    out << report_line(report);
    if (!report.qualified) {
      code = kTheoryViolation;
    }
  }
  if (a.exhaustive) {
    const Matrix joint = joint_columns(reduced);
    const std::size_t max_size = a.max_size == 0 ? s.bandwidth() + 1 : a.max_size;
    const auto report = oracle::exhaustive_check(joint, s, max_size);
    emit(a.output, io::exhaustive_report_to_json(report, s), out);
    if (!report.violations.empty() ||
        (report.joint_rank == s.bandwidth() && report.min_qualified_size != s.bandwidth())) {
      code = kTheoryViolation;
    }
  }
  if (a.monotonicity_trials > 0) {
    const bool ok = oracle::check_monotonicity(joint_columns(reduced), s.vertices(),
                                               a.monotonicity_trials, resolve_seed(a.seed));
    out << "monotonicity=" << (ok ? "pass" : "fail") << " trials=" << a.monotonicity_trials
        << "\n";
    if (!ok) {
      code = kTheoryViolation;
    }
  }
  return code;
}

struct BenchArgs {
  std::string sizes{"32,48,64"};
  std::size_t reps{5};
  std::optional<std::uint64_t> seed;
  ProblemArgs problem;
  std::string output;
};

int bench(const BenchArgs& a, std::ostream& out) {
  std::string csv = bench_csv_header();
  if (!a.problem.support.empty()) {
    csv += bench_csv_row(bench_instance(load_reduced(a.problem), a.reps));
  }
  const auto seed = resolve_seed(a.seed);
  for (const auto& item : split(a.sizes, ',')) {
    csv += bench_csv_row(bench_size(to_index(item), seed, a.reps));
  }
  emit(a.output, csv, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical sampling of time-vertex graph signals"};
  app.name("tvs");
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate graphs, supports and signals");
  gen->require_subcommand(1);

  GenGraphArgs gg;
  auto* gen_g = gen->add_subcommand("graph", "Write a graph JSON file");
  gen_g->add_option("--type", gg.type, "cycle | star | path | er")->required();
  gen_g->add_option("--n", gg.n, "Vertex count")->required();
  gen_g->add_option("--center", gg.center, "Star center vertex");
  gen_g->add_option("--p", gg.p, "Edge probability for er");
  gen_g->add_option("--seed", gg.seed, "Random seed (default: $TVS_SEED or 0)");
  gen_g->add_option("-o,--output", gg.output, "Output file (default stdout)");

  GenSupportArgs gs;
  auto* gen_s = gen->add_subcommand("support", "Write a spectral support JSON file");
  gen_s->add_option("--T", gs.T, "Time slots")->required();
  gen_s->add_option("--N", gs.N, "Vertices")->required();
  gen_s->add_option("--pairs", gs.pairs, "Pairs \"j_t,j_g;j_t,j_g;...\" (0-based)");
  gen_s->add_flag("--random", gs.random, "Draw a random support (SBL unless --kt/--kg given)");
  gen_s->add_option("--kt", gs.kt, "Time bandwidth for --random");
  gen_s->add_option("--kg", gs.kg, "Graph bandwidth for --random");
  gen_s->add_option("--fill", gs.fill, "Extra fill probability inside the K_T x K_G rectangle");
  gen_s->add_option("--seed", gs.seed, "Random seed");
  gen_s->add_option("-o,--output", gs.output, "Output file (default stdout)");

  GenSignalArgs gsig;
  auto* gen_x = gen->add_subcommand("signal", "Synthesize a bandlimited signal CSV");
  gsig.problem.add_to(gen_x);
  gen_x->add_option("--coeffs", gsig.coeffs, "Coefficients \"j_t,j_g,value;...\" (default random)");
  gen_x->add_option("--seed", gsig.seed, "Random seed");
  gen_x->add_option("-o,--output", gsig.output, "Output file (default stdout)");

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Joint spectrum and bandwidths of a signal");
  analyze_cmd->add_option("--graph-t", an.graph_t, "Time graph JSON")->required();
  analyze_cmd->add_option("--graph-g", an.graph_g, "Vertex graph JSON")->required();
  analyze_cmd->add_option("--signal", an.signal, "Signal CSV (N x T)")->required();
  analyze_cmd->add_option("--eps", an.eps, "Relative support threshold");
  analyze_cmd->add_option("-o,--output", an.output, "Support JSON output");
  analyze_cmd->add_option("--spectrum", an.spectrum, "Write X_f as CSV");

  BasisArgs ba;
  auto* basis_cmd = app.add_subcommand("basis", "Export a graph's Laplacian eigenbasis as CSV");
  basis_cmd->add_option("--graph", ba.graph, "Graph JSON")->required();
  basis_cmd->add_option("-o,--output", ba.output, "Eigenvector CSV (columns)");
  basis_cmd->add_option("--values", ba.values, "Eigenvalue CSV");

  PlanArgs pa;
  auto* plan_cmd = app.add_subcommand("plan", "Find a critical sampling set");
  pa.problem.add_to(plan_cmd);
  plan_cmd->add_flag("--separate", pa.separate, "Baseline: sample all of S_T x S_G");
  plan_cmd->add_option("-o,--output", pa.output, "Plan JSON output");
  plan_cmd->add_option("--schedule", pa.schedule, "Per-vertex schedule CSV output");

  SampleArgs sa;
  auto* sample_sub = app.add_subcommand("sample", "Read a signal at the plan's samples");
  sample_sub->add_option("--signal", sa.signal, "Signal CSV")->required();
  sample_sub->add_option("--plan", sa.plan, "Plan JSON")->required();
  sample_sub->add_option("-o,--output", sa.output, "Samples CSV output");

  ReconstructArgs ra;
  auto* rec_cmd = app.add_subcommand("reconstruct", "Recover a signal from its samples");
  ra.problem.add_to(rec_cmd);
  rec_cmd->add_option("--plan", ra.plan, "Plan JSON")->required();
  rec_cmd->add_option("--samples", ra.samples, "Samples CSV")->required();
  rec_cmd->add_option("-o,--output", ra.output, "Reconstructed signal CSV");
  rec_cmd->add_option("--reference", ra.reference, "Original signal to compare against");
  rec_cmd->add_option("--tol", ra.tol, "Pass iff max-abs error < tol * ||X||_F");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Check a plan and the sampling bounds");
  va.problem.add_to(verify_cmd);
  verify_cmd->add_option("--plan", va.plan, "Plan JSON to qualify");
  verify_cmd->add_flag("--exhaustive", va.exhaustive, "Enumerate all small sample sets");
  verify_cmd->add_option("--max-size", va.max_size, "Largest subset size (default K + 1)");
  verify_cmd->add_option("--monotonicity", va.monotonicity_trials,
                         "Random nested-subset rank checks");
  verify_cmd->add_option("--seed", va.seed, "Random seed");
  verify_cmd->add_option("-o,--output", va.output, "Exhaustive report JSON output");

  BenchArgs be;
  auto* bench_cmd = app.add_subcommand("bench", "Time factored vs naive row selection");
  bench_cmd->add_option("--sizes", be.sizes, "Comma-separated N = T sizes");
  bench_cmd->add_option("--reps", be.reps, "Timed batches per path");
  bench_cmd->add_option("--seed", be.seed, "Random seed");
  be.problem.add_to(bench_cmd, false);
  bench_cmd->add_option("-o,--output", be.output, "Timing CSV output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "tvs: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*gen_g) return gen_graph(gg, out);
    if (*gen_s) return gen_support(gs, out);
    if (*gen_x) return gen_signal(gsig, out);
    if (*analyze_cmd) return analyze(an, out);
    if (*basis_cmd) return basis(ba, out);
    if (*plan_cmd) return plan(pa, out);
    if (*sample_sub) return sample_cmd(sa, out);
    if (*rec_cmd) return reconstruct_cmd(ra, out, err);
    if (*verify_cmd) return verify(va, out);
    if (*bench_cmd) return bench(be, out);
  } catch (const InputError& e) {
    err << "tvs: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const TheoryViolation& e) {
    err << "tvs: " << e.what() << "\n";
    return kTheoryViolation;
  } catch (const std::exception& e) {
    err << "tvs: " << e.what() << "\n";
    return kFailure;
  }
  return kInputError;
}

}  // namespace tvs::cli
