#include "nbnn/cli/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "nbnn/errors.hpp"

namespace nbnn::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Negative-binomial p-value nearest neighbour classification for imbalanced data",
               "nbnn"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Gaussian location/scale simulation study");
  simulate->add_option("--design", sim.design, "location | scale")
      ->required()
      ->check(CLI::IsMember({"location", "scale"}));
  simulate->add_option("--alpha", sim.alpha, "Minority share of the training sample, in (0, 0.5]")
      ->required();
  simulate->add_option("--minority", sim.minority, "Scale design: minority class narrow | wide")
      ->check(CLI::IsMember({"narrow", "wide"}))
      ->capture_default_str();
  simulate->add_option("--trials", sim.trials, "Number of simulation runs")->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Base seed")->capture_default_str();
  simulate->add_option("--methods", sim.methods, "Comma list of proposed,knn,wnn,bayes")
      ->capture_default_str();
  simulate->add_option("--k-max", sim.k_max, "Largest k in the evidence sweep")->capture_default_str();
  simulate->add_option("--train-size", sim.train_size, "Training sample size")->capture_default_str();
  simulate->add_option("--test-size", sim.test_size, "Balanced test sample size")->capture_default_str();
  simulate->add_option("--cv-folds", sim.cv_folds, "Folds used to pick k for knn/wnn")
      ->capture_default_str();
  simulate->add_option("--jobs", sim.jobs, "Worker threads (results do not depend on it)")
      ->capture_default_str();
  simulate->add_option("--output", sim.output, "Write the JSON report here instead of stdout");
  simulate->add_flag("--table", sim.table, "Print the human-readable table to stdout");

  BenchmarkOptions bench;
  auto* benchmark = app.add_subcommand("benchmark", "Repeated split benchmark on a CSV dataset");
  benchmark->add_option("--input", bench.input, "CSV file with a header row")->required();
  benchmark->add_option("--label-column", bench.label_column, "Name of the class column")->required();
  benchmark->add_option("--trials", bench.trials, "Number of random partitions")->capture_default_str();
  benchmark->add_option("--seed", bench.seed, "Base seed")->capture_default_str();
  benchmark->add_option("--test-fraction", bench.fraction,
                        "Share of the smallest class placed in the test set")
      ->capture_default_str();
  benchmark->add_option("--methods", bench.methods,
                        "Comma list of proposed,ovo_plus,ovr_plus,knn,wnn (default by class count)");
  benchmark->add_option("--k-max", bench.k_max, "Largest k in the evidence sweep")->capture_default_str();
  benchmark->add_option("--cv-folds", bench.cv_folds, "Folds used to pick k for knn/wnn")
      ->capture_default_str();
  benchmark->add_option("--jobs", bench.jobs, "Worker threads (results do not depend on it)")
      ->capture_default_str();
  benchmark->add_option("--output", bench.output, "Write the JSON report here instead of stdout");
  benchmark->add_flag("--table", bench.table, "Print the human-readable table to stdout");

  FitPredictOptions fp;
  auto* fit_predict = app.add_subcommand("fit-predict", "Fit on a CSV and label query rows");
  fit_predict->add_option("--train", fp.train, "Training CSV")->required();
  fit_predict->add_option("--query", fp.query, "Query CSV with the same feature columns")->required();
  fit_predict->add_option("--label-column", fp.label_column, "Name of the class column")->required();
  fit_predict->add_option("--method", fp.method, "auto | proposed | ovo_plus | ovr_plus")
      ->check(CLI::IsMember({"auto", "proposed", "ovo_plus", "ovr_plus"}))
      ->capture_default_str();
  fit_predict->add_option("--k-max", fp.k_max, "Largest k in the evidence sweep")->capture_default_str();
  fit_predict->add_flag("--emit-evidence", fp.emit_evidence, "Append evidence columns");
  fit_predict->add_flag("!--no-standardize", fp.standardize, "Use raw features");
  fit_predict->add_option("--output", fp.output, "Write predictions here instead of stdout");

  SplitOptions sp;
  auto* split = app.add_subcommand("split", "Export train/test partitions as JSON");
  split->add_option("--input", sp.input, "CSV file with a header row")->required();
  split->add_option("--label-column", sp.label_column, "Name of the class column")->required();
  split->add_option("--trials", sp.trials, "Number of partitions")->capture_default_str();
  split->add_option("--seed", sp.seed, "Base seed")->capture_default_str();
  split->add_option("--test-fraction", sp.fraction,
                    "Share of the smallest class placed in the test set")
      ->capture_default_str();
  split->add_option("--output", sp.output, "Write the manifest here instead of stdout");

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
    if (simulate->parsed()) cmd_simulate(sim, out);
    if (benchmark->parsed()) cmd_benchmark(bench, out);
    if (fit_predict->parsed()) cmd_fit_predict(fp, out);
    if (split->parsed()) cmd_split(sp, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace nbnn::cli
