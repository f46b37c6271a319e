#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fano/axioms.hpp"
#include "fano/continuum.hpp"
#include "fano/enumerate.hpp"
#include "fano/error.hpp"
#include "fano/io.hpp"
#include "fano/kernel.hpp"
#include "fano/transform.hpp"

namespace fano::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
    case ErrorCode::kFormat:
      return kExitIo;
    case ErrorCode::kInvalidSign:
    case ErrorCode::kUnsupportedDimension:
    case ErrorCode::kNonReal:
    case ErrorCode::kInvalidState:
    case ErrorCode::kInconsistentGrid:
      return kExitFailed;
    case ErrorCode::kInvalidDimension:
    case ErrorCode::kShape:
    case ErrorCode::kArity:
    case ErrorCode::kTooLarge:
    case ErrorCode::kConfig:
      return kExitUsage;
  }
  return kExitUsage;
}

// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

struct Settings {
  double tol = kDefaultTolerance;
  unsigned threads = default_workers();
};

double default_tolerance() {
  const char* env = std::getenv("FANO_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(value > 0.0)) {
    throw Error(ErrorCode::kConfig, std::string("FANO_TOL must be a positive number, got ") + env);
  }
  return value;
}

void require_positive(double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kConfig, "tolerance must be positive");
}

int cmd_build(int n, const std::string& source, const std::string& out_path, bool sign_only,
              std::ostream& out) {
  const LatticeDim dim(n);
  SignFn sign = [&] {
    if (source == "cohendet") return cohendet_sign(dim);
    if (source.rfind("bits:", 0) == 0) {
      try {
        return sign_from_bits(dim, source.substr(5));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kFormat) throw;
        throw Error(ErrorCode::kConfig, e.what());
      }
    }
    if (source.rfind("file:", 0) == 0) {
      SignFn loaded = sign_from_json(read_text_file(source.substr(5)));
      if (loaded.dim() != dim) {
        throw Error(ErrorCode::kShape, "sign file has N = " + std::to_string(loaded.dim().value()) +
                                           " but --n is " + std::to_string(n));
      }
      return loaded;
    }
    throw Error(ErrorCode::kConfig, "--sign must be cohendet, bits:<+-...> or file:<path>");
  }();
  const FanoKernel kernel = build_kernel(sign);
  emit(out_path, kernel_to_json(kernel, !sign_only), out);
  return kExitOk;
}

int cmd_verify(const std::string& path, const Settings& settings, std::ostream& out) {
  const LoadedKernel loaded = kernel_from_json(read_text_file(path));
  VerificationReport report = verify_all(loaded.kernel, settings.tol);
  if (loaded.had_matrices) {
    report.checks.push_back(
        make_check("matrices_match_sign", loaded.matrix_sign_deviation, settings.tol));
    finalize(report);
  }
  out << report_to_json(report);
  return report.pass ? kExitOk : kExitFailed;
}

int cmd_enumerate(int n, bool count_only, bool certify, const std::string& out_path,
                  std::uint64_t seed, std::size_t sample, const Settings& settings,
                  std::ostream& out) {
  EnumerationOptions options;
  options.workers = settings.threads;
  options.keep_signs = !count_only;
  options.seed = seed;
  options.sample_size = sample;
  options.tol = settings.tol;
  const EnumerationResult result = enumerate_kernels(LatticeDim(n), certify, options);
  if (!count_only) {
    std::string lines;
    for (const auto& sign : *result.signs) lines += enumeration_member_json(sign);
    if (out_path.empty()) {
      out << lines;
    } else {
      write_text_file(out_path, lines);
    }
  }
  out << enumeration_summary_json(result);
  return result.sample_failures == 0 ? kExitOk : kExitFailed;
}

// Loads a kernel for the transforms and refuses it unless verify_all passes.
std::optional<FanoKernel> usable_kernel(const std::string& path, const Settings& settings,
                                        std::ostream& err) {
  LoadedKernel loaded = kernel_from_json(read_text_file(path));
  const VerificationReport report = verify_all(loaded.kernel, settings.tol);
  if (!report.pass || loaded.matrix_sign_deviation > settings.tol) {
    err << "error: kernel " << path << " fails verification";
    for (const auto& name : report.failing_checks()) err << " " << name;
    if (loaded.matrix_sign_deviation > settings.tol) err << " matrices_match_sign";
    err << "\n";
    return std::nullopt;
  }
  return std::move(loaded.kernel);
}

int cmd_wigner(const std::string& kernel_path, const std::string& state_path,
               const std::string& out_path, const Settings& settings, std::ostream& out,
               std::ostream& err) {
  const auto kernel = usable_kernel(kernel_path, settings, err);
  if (!kernel) return kExitFailed;
  const DensityMatrix rho = DensityMatrix::from_matrix(state_from_json(read_text_file(state_path)));
  emit(out_path, wigner_to_csv(wigner_of_state(*kernel, rho, settings.tol)), out);
  return kExitOk;
}

int cmd_reconstruct(const std::string& kernel_path, const std::string& wigner_path,
                    const std::string& out_path, const Settings& settings, std::ostream& out,
                    std::ostream& err) {
  const auto kernel = usable_kernel(kernel_path, settings, err);
  if (!kernel) return kExitFailed;
  const WignerGrid grid = wigner_from_csv(read_text_file(wigner_path));
  emit(out_path, state_to_json(state_of_wigner(*kernel, grid).matrix()), out);
  return kExitOk;
}

int cmd_continuum(const GaussianState& state, double a, double b, const QuadratureConfig& cfg,
                  double tol, const std::string& csv_path, const Settings& settings,
                  std::ostream& out) {
  validate(cfg);
  try {
    validate(state);
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfig, e.what());
  }
  require_positive(tol);
  const VerificationReport report = continuum_report(state, a, b, cfg, tol, settings.threads);
  if (!csv_path.empty()) {
    const auto axis = grid_axis(cfg);
    write_text_file(csv_path,
                    continuum_grid_to_csv(wigner_grid(state, axis, axis, cfg, settings.threads)));
  }
  out << report_to_json(report);
  return report.pass ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete Wigner kernels on Z_N x Z_N: build, verify, enumerate, transform", "fano"};
  app.require_subcommand(1);

  Settings settings;
  std::optional<double> tol_flag;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", tol_flag, "Tolerance (default 1e-12, or $FANO_TOL)");
    sub->add_option("--threads", settings.threads, "Worker threads")->check(CLI::PositiveNumber);
  };

  int n = 0;
  std::string sign_source = "cohendet";
  std::string out_path;
  bool sign_only = false;
  auto* build = app.add_subcommand("build", "Build a kernel from a sign function");
  build->add_option("--n", n, "Lattice dimension N")->required();
  build->add_option("--sign", sign_source, "cohendet | bits:<+-...> | file:<path>");
  build->add_option("--out", out_path, "Output kernel JSON (default stdout)");
  build->add_flag("--sign-only", sign_only, "Omit the redundant matrices");
  add_common(build);

  std::string kernel_path;
  auto* verify = app.add_subcommand("verify", "Check a kernel against all axioms");
  verify->add_option("kernel,--kernel", kernel_path, "Kernel JSON")->required();
  add_common(verify);

  bool count_only = false;
  bool certify = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t sample = 32;
  auto* enumerate = app.add_subcommand("enumerate", "List every valid sign function for N");
  enumerate->add_option("--n", n, "Lattice dimension N")->required();
  enumerate->add_flag("--count-only", count_only, "Print only the summary");
  enumerate->add_flag("--certify", certify, "Run verify_all on every member (N <= 4)");
  enumerate->add_option("--out", out_path, "Member JSON lines (default stdout)");
  enumerate->add_option("--seed", seed, "Seed for sampled certification (N >= 5)");
  enumerate->add_option("--sample", sample, "Members verified when N >= 5");
  add_common(enumerate);

  std::string state_path;
  auto* wigner = app.add_subcommand("wigner", "Wigner grid of a density matrix");
  wigner->add_option("--kernel", kernel_path, "Kernel JSON")->required();
  wigner->add_option("--state", state_path, "State JSON")->required();
  wigner->add_option("--out", out_path, "Output CSV (default stdout)");
  add_common(wigner);

  std::string wigner_path;
  auto* reconstruct = app.add_subcommand("reconstruct", "Density matrix from a Wigner grid");
  reconstruct->add_option("--kernel", kernel_path, "Kernel JSON")->required();
  reconstruct->add_option("--wigner", wigner_path, "Wigner CSV")->required();
  reconstruct->add_option("--out", out_path, "Output state JSON (default stdout)");
  add_common(reconstruct);

  GaussianState state;
  QuadratureConfig cfg;
  double shift_q = 1.0;
  double shift_p = 0.0;
  double continuum_tol = kContinuumTolerance;
  std::string csv_path;
  auto* continuum = app.add_subcommand("continuum-check", "Quadrature checks on a Gaussian state");
  continuum->add_option("--q0", state.q0, "Position center");
  continuum->add_option("--p0", state.p0, "Momentum center");
  continuum->add_option("--hbar", state.hbar, "Reduced Planck constant");
  continuum->add_option("--a", shift_q, "Translation in q");
  continuum->add_option("--b", shift_p, "Translation in p");
  continuum->add_option("--r-max", cfg.r_max, "Half-width of the r integration window");
  continuum->add_option("--steps", cfg.steps, "Simpson intervals (even, >= 64)");
  continuum->add_option("--grid-extent", cfg.grid_extent, "Grid half-width");
  continuum->add_option("--grid-points", cfg.grid_points, "Grid points per axis (odd)");
  continuum->add_option("--tol", continuum_tol, "Tolerance (default 1e-6)");
  continuum->add_option("--csv", csv_path, "Also write W over the grid as CSV");
  continuum->add_option("--threads", settings.threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    settings.tol = tol_flag ? *tol_flag : default_tolerance();
    require_positive(settings.tol);
    if (*build) return cmd_build(n, sign_source, out_path, sign_only, out);
    if (*verify) return cmd_verify(kernel_path, settings, out);
    if (*enumerate) {
      return cmd_enumerate(n, count_only, certify, out_path, seed, sample, settings, out);
    }
    if (*wigner) return cmd_wigner(kernel_path, state_path, out_path, settings, out, err);
    if (*reconstruct) return cmd_reconstruct(kernel_path, wigner_path, out_path, settings, out, err);
    if (*continuum) {
      return cmd_continuum(state, shift_q, shift_p, cfg, continuum_tol, csv_path, settings, out);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace fano::cli
