#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unistd.h>

#include "nbnn/benchmark.hpp"
#include "nbnn/cli/cli.hpp"
#include "nbnn/data_io.hpp"
#include "nbnn/errors.hpp"
#include "nbnn/multiclass.hpp"
#include "nbnn/neighbors.hpp"
#include "nbnn/report.hpp"
#include "nbnn/simulation.hpp"

namespace nbnn::cli {
namespace {

std::vector<Method> methods_or_usage(const std::string& list) {
  try {
    return parse_methods(list);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_atomically(path, content);
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (const char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw DataError("cannot write '" + tmp.string() + "'");
    f << content;
    f.flush();
    if (!f) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw DataError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw DataError("cannot move report into place at '" + path + "'");
  }
}

void cmd_simulate(const SimulateOptions& opt, std::ostream& out) {
  require(opt.alpha > 0.0 && opt.alpha <= 0.5, "--alpha must lie in (0, 0.5]");
  require(opt.trials >= 1, "--trials must be >= 1");
  require(opt.k_max >= 1, "--k-max must be >= 1");
  require(opt.train_size >= 8 && opt.test_size >= 2, "sample sizes are too small");
  require(opt.jobs >= 1, "--jobs must be >= 1");
  require(opt.cv_folds >= 2, "--cv-folds must be >= 2");

  ExperimentConfig cfg;
  cfg.alpha = opt.alpha;
  cfg.trials = opt.trials;
  cfg.seed = opt.seed;
  cfg.methods = methods_or_usage(opt.methods);
  for (const Method m : cfg.methods) {
    require(m == Method::proposed || m == Method::knn || m == Method::wnn || m == Method::bayes,
            "simulate supports methods proposed, knn, wnn, bayes; got '" +
                std::string(method_name(m)) + "'");
  }
  cfg.k_max = opt.k_max;
  cfg.train_size = opt.train_size;
  cfg.test_size = opt.test_size;
  cfg.cv_folds = opt.cv_folds;
  cfg.jobs = opt.jobs;

  std::vector<TrialReport> reports;
  std::optional<ScaleMinority> minority;
  if (opt.design == "location") {
    reports = run_location_experiment(cfg);
  } else if (opt.design == "scale") {
    minority = opt.minority == "narrow" ? ScaleMinority::narrow : ScaleMinority::wide;
    reports = run_scale_experiment(cfg, *minority);
  } else {
    throw UsageError("--design must be location or scale");
  }
  const std::string json = simulation_document(opt.design, minority, cfg, reports).dump(2) + "\n";
  if (opt.table) {
    if (!opt.output.empty()) write_atomically(opt.output, json);
    out << format_table(reports);
    return;
  }
  emit(json, opt.output, out);
}

void cmd_benchmark(const BenchmarkOptions& opt, std::ostream& out) {
  require(opt.trials >= 1, "--trials must be >= 1");
  require(opt.fraction > 0.0 && opt.fraction < 1.0, "--test-fraction must lie in (0, 1)");
  require(opt.k_max >= 1, "--k-max must be >= 1");
  require(opt.jobs >= 1, "--jobs must be >= 1");
  require(opt.cv_folds >= 2, "--cv-folds must be >= 2");

  BenchmarkConfig cfg;
  cfg.split = {opt.fraction, opt.seed, opt.trials};
  if (!opt.methods.empty()) cfg.methods = methods_or_usage(opt.methods);
  cfg.k_max = opt.k_max;
  cfg.jobs = opt.jobs;
  cfg.cv_folds = opt.cv_folds;

  const LoadedDataset input = load_csv(opt.input, opt.label_column);
  for (const Method m : cfg.methods) {
    require(m != Method::bayes, "the bayes oracle is only available in simulate");
    require(m != Method::proposed || input.data.num_classes() == 2,
            "'proposed' needs two classes; use ovo_plus or ovr_plus");
  }
  const BenchmarkResult result = run_benchmark(input.data, cfg);
  const std::string json = benchmark_document(input, cfg, result).dump(2) + "\n";
  if (opt.table) {
    if (!opt.output.empty()) write_atomically(opt.output, json);
    std::ostringstream t;
    t << format_table(result.reports) << "\nefficiency (P / R / F1)\n";
    for (const auto& r : result.reports) {
      char line[128];
      std::snprintf(line, sizeof line, "%-10s %.4f / %.4f / %.4f\n", r.method.c_str(),
                    result.efficiency.at("precision").at(r.method),
                    result.efficiency.at("recall").at(r.method),
                    result.efficiency.at("f1").at(r.method));
      t << line;
    }
    out << t.str();
    return;
  }
  emit(json, opt.output, out);
}

void cmd_fit_predict(const FitPredictOptions& opt, std::ostream& out) {
  require(opt.k_max >= 1, "--k-max must be >= 1");
  const LoadedDataset train_in = load_csv(opt.train, opt.label_column);
  const FeatureTable queries =
      load_features_csv(opt.query, train_in.feature_names, opt.label_column);
  const int j = train_in.data.num_classes();
  if (j < 2) throw DataError("training data has a single class");
  std::string method = opt.method;
  if (method == "auto") method = j == 2 ? "proposed" : "ovr_plus";
  require(method != "proposed" || j == 2,
          "--method proposed needs two classes; training data has " + std::to_string(j));

  std::optional<StandardizationParams> params;
  LabeledDataset train = train_in.data;
  if (opt.standardize) {
    params = fit_standardization(train);
    train = params->apply(train);
  }

  std::ostringstream csv;
  csv << "prediction";
  if (opt.emit_evidence) {
    if (method == "proposed") {
      csv << ",E1,E2";
    } else {
      for (const auto& name : train_in.class_names) csv << "," << csv_field("evidence_" + name);
    }
  }
  csv << "\n";

  std::optional<BinaryEvidenceClassifier> binary;
  if (method == "proposed") binary.emplace(train, opt.k_max);

  for (std::size_t r = 0; r < queries.rows; ++r) {
    const std::span<const double> raw(queries.values.data() + r * queries.dim, queries.dim);
    std::vector<double> z;
    const std::span<const double> q = params ? std::span<const double>(z = params->transform_row(raw)) : raw;
    const NeighborOrdering ord = neighbor_order(train, q);
    if (method == "proposed") {
      const EvidencePair ev = binary->evidence(ord);
      const int label = decide(ev) == BinaryOutcome::minority ? binary->minority_label()
                                                              : binary->majority_label();
      csv << csv_field(train_in.class_names[static_cast<std::size_t>(label - 1)]);
      if (opt.emit_evidence) {
        // E1 backs the majority, E2 the minority.
        csv << "," << number(ev.e1) << "," << number(ev.e2);
      }
    } else {
      const MulticlassDecision d = method == "ovo_plus" ? ovo_plus_decision(train, ord, opt.k_max)
                                                        : ovr_plus_decision(train, ord, opt.k_max);
      csv << csv_field(train_in.class_names[static_cast<std::size_t>(d.label - 1)]);
      if (opt.emit_evidence) {
        const auto& first = d.rounds.front().evidences;
        for (int c = 1; c <= j; ++c) {
          const auto it = first.find(c);
          csv << "," << (it == first.end() ? std::string() : number(it->second));
        }
      }
    }
    csv << "\n";
  }
  emit(csv.str(), opt.output, out);
}

void cmd_split(const SplitOptions& opt, std::ostream& out) {
  require(opt.trials >= 1, "--trials must be >= 1");
  require(opt.fraction > 0.0 && opt.fraction < 1.0, "--test-fraction must lie in (0, 1)");
  const LoadedDataset input = load_csv(opt.input, opt.label_column);
  const SplitSpec spec{opt.fraction, opt.seed, opt.trials};
  emit(split_manifest(input, spec).dump(2) + "\n", opt.output, out);
}

}  // namespace nbnn::cli
