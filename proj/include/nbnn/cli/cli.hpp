#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbnn/binary_classifier.hpp"

namespace nbnn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

/// Bad flag values detected before any work starts.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SimulateOptions {
  std::string design;           // location | scale
  std::string minority = "wide";  // scale design only: narrow | wide
  double alpha = 0.1;
  int trials = 100;
  std::uint64_t seed = 0;
  std::string methods = "proposed,knn,wnn,bayes";
  std::int64_t k_max = kDefaultKMax;
  std::size_t train_size = 1000;
  std::size_t test_size = 1000;
  int cv_folds = 5;
  int jobs = 1;
  std::string output;  // empty: stdout
  bool table = false;
};

struct BenchmarkOptions {
  std::string input;
  std::string label_column;
  int trials = 100;
  std::uint64_t seed = 0;
  double fraction = 0.25;
  std::string methods;  // empty: chosen by class count
  std::int64_t k_max = kDefaultKMax;
  int cv_folds = 5;
  int jobs = 1;
  std::string output;
  bool table = false;
};

struct FitPredictOptions {
  std::string train;
  std::string query;
  std::string label_column;
  std::string method = "auto";  // auto | proposed | ovo_plus | ovr_plus
  std::int64_t k_max = kDefaultKMax;
  bool emit_evidence = false;
  bool standardize = true;
  std::string output;
};

struct SplitOptions {
  std::string input;
  std::string label_column;
  int trials = 1;
  std::uint64_t seed = 0;
  double fraction = 0.25;
  std::string output;
};

// Each command writes its primary output to `out` (or to the --output file,
// replaced atomically) and throws UsageError / DataError / DomainError.
void cmd_simulate(const SimulateOptions& opt, std::ostream& out);
void cmd_benchmark(const BenchmarkOptions& opt, std::ostream& out);
void cmd_fit_predict(const FitPredictOptions& opt, std::ostream& out);
void cmd_split(const SplitOptions& opt, std::ostream& out);

/// Writes `content` to `path` through a temporary file and a rename.
void write_atomically(const std::string& path, const std::string& content);

/// Parses `args` (without the program name) and runs the subcommand.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nbnn::cli
