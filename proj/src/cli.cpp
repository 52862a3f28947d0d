#include "convdual/cli.hpp"

#include "convdual/fenchel.hpp"
#include "convdual/io.hpp"
#include "convdual/oracle_protocol.hpp"
#include "convdual/sampling.hpp"
#include "convdual/verifier.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace convdual {

namespace {

struct Options {
  std::string fn_path, t_path, output;
  std::string mode = "preserving", oracle = "builtin:random", lattice = "subspace", suite = "all", grid, record;
  std::uint64_t seed = 1;
  int dim = 2;
  long n = 10000;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw InvalidArgument("cannot write '" + o.output + "'");
  f << text;
}

struct OracleSpec {
  std::string kind;  // builtin or batch
  std::string arg;   // builtin name or file path
};

OracleSpec parse_oracle(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw InvalidArgument("--oracle must be builtin:<name> or batch:<file>");
  OracleSpec spec{s.substr(0, colon), s.substr(colon + 1)};
  if (spec.kind != "builtin" && spec.kind != "batch") throw InvalidArgument("--oracle must be builtin:<name> or batch:<file>");
  return spec;
}

std::shared_ptr<const OracleTranscript> load_transcript(const std::string& path) {
  return std::make_shared<const OracleTranscript>(OracleTranscript::load(path));
}

int cmd_conjugate(const Options& o, std::ostream& out) {
  const PLConvexFunction f = function_from_json(read_json_file(o.fn_path));
  emit(o, out, dump(to_json(conjugate_pl(f))));
  return kExitOk;
}

int cmd_apply(const Options& o, std::ostream& out) {
  const CanonicalTransform t = transform_from_json(read_json_file(o.t_path));
  const PLConvexFunction f = function_from_json(read_json_file(o.fn_path));
  emit(o, out, dump(to_json(apply(t, f))));
  return kExitOk;
}

int cmd_identify(const Options& o, std::ostream& out) {
  const TransformMode mode = parse_mode(o.mode);
  const OracleSpec spec = parse_oracle(o.oracle);
  Json result;
  FunctionOracle oracle;
  std::optional<CanonicalTransform> generator;
  if (spec.kind == "batch") {
    oracle = replay_function_oracle(load_transcript(spec.arg), ConeTag::kConv);
  } else {
    if (o.dim < 1) throw InvalidArgument("--dim must be positive");
    if (spec.arg == "random") {
      Rng rng(o.seed);
      generator = random_transform(rng, o.dim, mode);
      oracle = transform_oracle(*generator);
    } else if (spec.arg == "identity") {
      oracle = transform_oracle(CanonicalTransform::identity(o.dim, mode));
    } else if (spec.arg == "fenchel") {
      oracle = {ConeTag::kConv, o.dim, [](const PLConvexFunction& f) { return conjugate_pl(f); }};
    } else {
      throw InvalidArgument("unknown builtin oracle '" + spec.arg + "' (random, identity, fenchel)");
    }
  }
  std::shared_ptr<OracleRecorder> rec;
  if (!o.record.empty()) {
    rec = std::make_shared<OracleRecorder>(o.record);
    oracle = recording(oracle, rec);
  }
  RecoveryOptions opt;
  opt.seed = o.seed;
  const Identification id = mode == TransformMode::kPreserving ? identify_preserving(oracle, opt) : identify_reversing(oracle, opt);
  if (rec) rec->flush();
  result["transform"] = to_json(id.transform);
  result["residual"] = id.residual;
  result["audited_pairs"] = id.audited_pairs;
  if (generator) {
    result["generator"] = to_json(*generator);
    result["parameter_error"] = parameter_distance(id.transform, *generator);
  }
  emit(o, out, dump(result));
  return kExitOk;
}

int cmd_reconstruct(const Options& o, std::ostream& out) {
  const OracleSpec spec = parse_oracle(o.oracle);
  std::optional<Mat> a;
  std::shared_ptr<const OracleTranscript> transcript;
  if (spec.kind == "batch") {
    transcript = load_transcript(spec.arg);
  } else {
    if (o.dim < 1) throw InvalidArgument("--dim must be positive");
    if (spec.arg == "random") {
      Rng rng(o.seed);
      a = random_gl(rng, o.dim);
    } else if (spec.arg == "identity") {
      a = Mat::Identity(o.dim, o.dim);
    } else {
      throw InvalidArgument("unknown builtin oracle '" + spec.arg + "' (random, identity)");
    }
  }
  std::shared_ptr<OracleRecorder> rec;
  if (!o.record.empty()) rec = std::make_shared<OracleRecorder>(o.record);
  RecoveryOptions opt;
  opt.seed = o.seed;
  RecoveredMap m;
  if (o.lattice == "subspace") {
    SubspaceOracle oracle = transcript ? replay_subspace_oracle(transcript) : linear_subspace_oracle(*a);
    if (rec) oracle = recording(oracle, rec);
    m = recover_linear_subspaces(oracle, opt);
  } else if (o.lattice == "segments") {
    SetOracle oracle = transcript ? replay_set_oracle(transcript) : linear_set_oracle(*a);
    if (rec) oracle = recording(oracle, rec);
    m = recover_from_segments(oracle, opt);
  } else if (o.lattice == "semn" || o.lattice == "mink") {
    const ConeTag tag = o.lattice == "semn" ? ConeTag::kSemn : ConeTag::kMink;
    FunctionOracle oracle = transcript ? replay_function_oracle(transcript, tag) : precomposition_oracle(tag, *a);
    if (rec) oracle = recording(oracle, rec);
    m = tag == ConeTag::kSemn ? recover_seminorm_map(oracle, opt) : recover_mink_map(oracle, opt);
  } else {
    throw InvalidArgument("unknown lattice '" + o.lattice + "' (subspace, segments, semn, mink)");
  }
  if (rec) rec->flush();
  Json result{{"lattice", o.lattice}, {"map", to_json(m)}};
  if (a) result["generator"] = to_json(*a);
  emit(o, out, dump(result));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const SuiteReport r = run_suite(o.suite, o.seed);
  emit(o, out, dump(to_json(r)));
  return r.violations() == 0 ? kExitOk : kExitViolations;
}

int cmd_plot(const Options& o, std::ostream& out) {
  const PLConvexFunction f = function_from_json(read_json_file(o.fn_path));
  if (f.dim() != 1) throw InvalidArgument("plot: only one-dimensional functions can be sampled on a grid");
  double a = 0.0, b = 0.0;
  long count = 0;
  char c1 = 0, c2 = 0;
  std::istringstream is(o.grid);
  if (!(is >> a >> c1 >> b >> c2 >> count) || c1 != ':' || c2 != ':' || count < 2 || !(b > a)) {
    throw InvalidArgument("--grid must be a:b:N with a < b and N >= 2");
  }
  // Values outside dom f are written as inf; the grid type only checks finite blocks.
  std::ostringstream csv;
  csv << "x,value\n";
  const double step = (b - a) / static_cast<double>(count - 1);
  for (long i = 0; i < count; ++i) {
    const double x = a + static_cast<double>(i) * step;
    const double v = f(Vec::Constant(1, x));
    char buf[80];
    if (v == kInf) std::snprintf(buf, sizeof buf, "%.17g,inf\n", x);
    else std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x, v);
    csv << buf;
  }
  emit(o, out, csv.str());
  return kExitOk;
}

int cmd_bench_legendre(const Options& o, std::ostream& out) {
  if (o.n < 2) throw InvalidArgument("--n must be at least 2");
  const std::size_t n = static_cast<std::size_t>(o.n);
  const GridFunction1D g = GridFunction1D::sample(-1.0, 2.0 / static_cast<double>(n - 1), n,
                                                  [](double x) { return x * x + std::abs(x); });
  const GridSpec spec = default_conjugate_grid(g);
  auto time = [](auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = fn();
    return std::make_pair(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), std::move(r));
  };
  const auto [t_fast, fast] = time([&] { return conjugate_grid(g, spec); });
  const auto [t_brute, brute] = time([&] { return conjugate_grid_brute(g, spec); });
  const auto [t_omp, omp] = time([&] { return conjugate_grid_brute_omp(g, spec); });
  const Json r{{"n", o.n},
               {"m", spec.count},
               {"fast_seconds", t_fast},
               {"brute_seconds", t_brute},
               {"brute_omp_seconds", t_omp},
               {"speedup", t_brute / std::max(t_fast, 1e-12)},
               {"identical", fast.values() == brute.values() && omp.values() == brute.values()}};
  emit(o, out, dump(r));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex duality toolkit: conjugates, order transforms and their recovery"};
  app.require_subcommand(1);
  Options o;

  auto* conj = app.add_subcommand("conjugate", "Exact conjugate of a PL function (n <= 3)");
  conj->add_option("function", o.fn_path, "function JSON")->required();
  conj->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* app_cmd = app.add_subcommand("apply", "Apply a canonical transform to a function");
  app_cmd->add_option("transform", o.t_path, "transform JSON")->required();
  app_cmd->add_option("function", o.fn_path, "function JSON")->required();
  app_cmd->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* ident = app.add_subcommand("identify", "Recover a canonical transform from an order transform oracle");
  ident->add_option("--mode", o.mode, "preserving or reversing")->check(CLI::IsMember({"preserving", "reversing"}));
  ident->add_option("--oracle", o.oracle, "builtin:random|identity|fenchel or batch:<file>");
  ident->add_option("--seed", o.seed, "seed for probes and builtin oracles");
  ident->add_option("--dim", o.dim, "dimension of builtin oracles");
  ident->add_option("--record", o.record, "write the oracle calls as a JSON-lines file");
  ident->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* recon = app.add_subcommand("reconstruct", "Recover the linear map behind a lattice or cone oracle");
  recon->add_option("--lattice", o.lattice, "subspace, segments, semn or mink")
      ->check(CLI::IsMember({"subspace", "segments", "semn", "mink"}));
  recon->add_option("--oracle", o.oracle, "builtin:random|identity or batch:<file>");
  recon->add_option("--seed", o.seed, "seed for probes and builtin oracles");
  recon->add_option("--dim", o.dim, "dimension of builtin oracles");
  recon->add_option("--record", o.record, "write the oracle calls as a JSON-lines file");
  recon->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run a suite of sampled property checks");
  verify->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", o.seed, "seed");
  verify->add_option("-o,--output", o.output, "report file (default stdout)");

  auto* plot = app.add_subcommand("plot", "Sample a one-dimensional function on a grid as CSV");
  plot->add_option("function", o.fn_path, "function JSON")->required();
  plot->add_option("--grid", o.grid, "a:b:N")->required();
  plot->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Timings");
  auto* legendre = bench->add_subcommand("legendre", "Fast versus brute-force grid conjugate");
  bench->require_subcommand(1);
  legendre->add_option("--n", o.n, "number of samples (and output nodes)");
  legendre->add_option("-o,--output", o.output, "output file (default stdout)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (conj->parsed()) return cmd_conjugate(o, out);
    if (app_cmd->parsed()) return cmd_apply(o, out);
    if (ident->parsed()) return cmd_identify(o, out);
    if (recon->parsed()) return cmd_reconstruct(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (plot->parsed()) return cmd_plot(o, out);
    if (legendre->parsed()) return cmd_bench_legendre(o, out);
  } catch (const NonRepresentable& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolations;
  } catch (const AuditFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolations;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace convdual
