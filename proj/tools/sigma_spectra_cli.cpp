#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "sigma_spectra/constructions.hpp"
#include "sigma_spectra/engine.hpp"
#include "sigma_spectra/errors.hpp"
#include "sigma_spectra/report.hpp"
#include "sigma_spectra/validator.hpp"
#include "sigma_spectra/verify.hpp"

using namespace sigma_spectra;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // invalid colouring, failed suite, walk contradiction
constexpr int kExitError = 2;
constexpr int kExitTruncated = 3;

struct SpecFlags {
  std::optional<std::string> file;
  int n = 0, r = 0, q = 0, alpha = 0, beta = 0;
  std::vector<int> sigma;

  void attach(CLI::App* cmd) {
    cmd->add_option("--spec-file", file, "JSON spec {n,r,q,sigma,alpha,beta}");
    cmd->add_option("--n", n, "number of classes");
    cmd->add_option("--r", r, "edge size, must equal the sum of --sigma");
    cmd->add_option("--q", q, "vertices per class");
    cmd->add_option("--sigma", sigma, "comma-separated parts of sigma")->delimiter(',');
    cmd->add_option("--alpha", alpha, "least colours per edge");
    cmd->add_option("--beta", beta, "most colours per edge");
  }

  HypergraphSpec resolve() const {
    if (file) return spec_from_json(read_json_file(*file));
    if (sigma.empty() || n == 0 || q == 0 || r == 0 || alpha == 0 || beta == 0) {
      throw MalformedInput("give --spec-file or all of --n --r --q --sigma --alpha --beta");
    }
    auto s = Sigma::build(sigma);
    if (s.r() != r) {
      throw MalformedInput("--sigma " + s.to_string() + " sums to " + std::to_string(s.r()) + ", not --r " +
                           std::to_string(r));
    }
    return HypergraphSpec::make(n, q, std::move(s), alpha, beta);
  }
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const RunReport& report) { std::cout << to_json(report).dump(2) << "\n"; }

void apply_thread_cap() {
  const char* env = std::getenv("SIGMA_SPECTRA_THREADS");
  if (env == nullptr) return;
  const int threads = std::atoi(env);
  if (threads > 0) omp_set_num_threads(threads);
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();
  CLI::App app{"Exact (alpha,beta)-spectra of sigma-hypergraphs"};
  app.require_subcommand(1);

  SpecFlags spectrum_spec, check_spec, construct_spec, walk_spec;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "decide every k and report feasible counts and gaps");
  spectrum_spec.attach(spectrum_cmd);
  std::optional<int> k_max;
  std::string format = "json";
  std::uint64_t budget = 0;
  spectrum_cmd->add_option("--k-max", k_max, "largest k to decide (default nq)");
  spectrum_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  spectrum_cmd->add_option("--budget", budget, "search nodes per k, 0 for no limit");

  auto* check_cmd = app.add_subcommand("check", "validate a colouring");
  check_spec.attach(check_cmd);
  std::string colouring_file;
  check_cmd->add_option("--colouring-file", colouring_file, "JSON colouring {n,q,classes}")->required();

  auto* construct_cmd = app.add_subcommand("construct", "emit a constructed colouring");
  construct_spec.attach(construct_cmd);
  std::string kind;
  int k = 0;
  construct_cmd->add_option("--kind", kind, "mono, layered or beta")
      ->required()
      ->check(CLI::IsMember({"mono", "layered", "beta"}));
  construct_cmd->add_option("--k", k, "colour count for mono and layered");

  auto* walk_cmd = app.add_subcommand("walk", "recolouring walk through the (2,beta)-spectrum");
  walk_spec.attach(walk_cmd);
  std::string start_file;
  std::string direction = "down";
  std::uint64_t walk_budget = 0;
  walk_cmd->add_option("--colouring-file", start_file, "JSON start colouring")->required();
  walk_cmd->add_option("--direction", direction, "up or down")->check(CLI::IsMember({"up", "down"}));
  walk_cmd->add_option("--budget", walk_budget, "node budget for engine fallbacks");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  SuiteOptions suite_options;
  verify_cmd->add_option("--suite", suite, "lemmas, zone, zone-only, uncolourable, nogaps, gaps, appendix")
      ->required();
  verify_cmd->add_option("--max-n", suite_options.max_n, "zone grid: largest n");
  verify_cmd->add_option("--max-q", suite_options.max_q, "zone grid: largest q");
  verify_cmd->add_option("--max-vertices", suite_options.max_vertices, "nogaps grid: largest n*q");
  verify_cmd->add_option("--budget", suite_options.node_budget, "search nodes per k, 0 for no limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    Stopwatch clock;
    if (*spectrum_cmd) {
      const auto spec = spectrum_spec.resolve();
      const auto result = spectrum(spec, {.k_max = k_max, .node_budget = budget});
      if (format == "csv") {
        std::cout << spectrum_csv(result);
      } else {
        emit({"spectrum", spec, to_json(result), result.complete, clock.ms()});
      }
      return result.complete ? kExitOk : kExitTruncated;
    }
    if (*check_cmd) {
      const auto spec = check_spec.resolve();
      const auto colouring = colouring_from_json(read_json_file(colouring_file));
      if (colouring.n() != spec.n || colouring.q() != spec.q) {
        throw MalformedInput("colouring shape does not match the spec");
      }
      const auto witness = find_violation(spec, colouring);
      json result = {{"verdict", witness ? "invalid" : "valid"}, {"colour_count", colouring.colour_count()}};
      result["witness"] = witness ? to_json(*witness) : json(nullptr);
      emit({"check", spec, result, true, clock.ms()});
      return witness ? kExitNegative : kExitOk;
    }
    if (*construct_cmd) {
      const auto spec = construct_spec.resolve();
      Colouring c;
      if (kind == "mono") c = mono_colouring(spec, k);
      if (kind == "layered") c = layered_colouring(spec, k);
      if (kind == "beta") c = beta_colouring(spec);
      std::cout << to_json(c).dump() << "\n";
      return kExitOk;
    }
    if (*walk_cmd) {
      const auto spec = walk_spec.resolve();
      const auto start = colouring_from_json(read_json_file(start_file));
      const auto steps = spectrum_walk(spec, start, direction == "up" ? WalkDirection::up : WalkDirection::down,
                                       SearchLimits{walk_budget});
      json out = json::array();
      for (const auto& step : steps) out.push_back(to_json(step));
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }
    if (*verify_cmd) {
      const auto rows = run_suite(suite, suite_options);
      if (!rows) {
        std::cerr << "unknown suite \"" << suite << "\"\n";
        return kExitError;
      }
      const bool passed = all_passed(*rows);
      emit({"verify:" + suite, std::nullopt, to_json(*rows), true, clock.ms()});
      return passed ? kExitOk : kExitNegative;
    }
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kExitNegative;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
