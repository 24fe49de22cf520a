// stoplex: command line front end.
//
//   stoplex analyze <inputs...> [--fraction F] [--averaging all|containing]
//                   [--xbar midpoint|candidates] [--zcrit C] [--out DIR] [--plots]
//   stoplex tokenize <file>
//   stoplex version
//
// Exit codes: 0 success, 2 input errors, 3 degenerate corpus.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stoplex/stoplex.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;

int exit_code(const stoplex::Error& e) {
  return e.category() == stoplex::ErrorCategory::Degenerate ? kExitDegenerate : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stop-word candidates and first-appearance statistics for a document corpus"};
  app.require_subcommand(1);

  stoplex::RunConfig config;
  std::vector<std::string> inputs;
  std::string output_dir = ".";

  auto* analyze = app.add_subcommand("analyze", "Detect stop-word candidates and write reports");
  analyze->add_option("inputs", inputs, "Text files or directories (one file per document)")
      ->required();
  analyze->add_option("--fraction", config.fraction, "Fraction of lowest-weight words selected")
      ->default_val(stoplex::kDefaultFraction);
  std::string averaging = "all";
  std::string xbar = "midpoint";
  std::string order = "list";
  analyze->add_option("--averaging", averaging, "Average TF-IDF over all or containing documents")
      ->check(CLI::IsMember({"all", "containing"}))
      ->capture_default_str();
  analyze->add_option("--xbar", xbar, "Sample mean of the Z test")
      ->check(CLI::IsMember({"midpoint", "candidates"}))
      ->capture_default_str();
  analyze->add_option("--zcrit", config.z_critical, "Critical |Z|")
      ->default_val(stoplex::kDefaultZCritical);
  analyze->add_option("--out", output_dir, "Output directory")->default_val(".");
  analyze->add_flag("--plots", config.plots, "Also write density.svg and sorted.svg");
  analyze->add_option("--order", order, "Document order")
      ->check(CLI::IsMember({"list", "lexicographic"}))
      ->capture_default_str();
  analyze->add_option("--threads", config.threads, "Tokenizer threads")
      ->check(CLI::Range(1u, 256u));

  std::string tokenize_path;
  auto* tokenize = app.add_subcommand("tokenize", "Print the tokens of one file, one per line");
  tokenize->add_option("file", tokenize_path, "UTF-8 text file")->required();

  auto* version = app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*version) {
      std::cout << stoplex::kVersion << '\n';
    } else if (*tokenize) {
      const std::string text = stoplex::read_file(tokenize_path);
      if (!stoplex::is_valid_utf8(text)) throw stoplex::DecodeError(tokenize_path, "invalid UTF-8");
      for (const auto& token : stoplex::tokenize(text)) std::cout << token << '\n';
    } else if (*analyze) {
      config.inputs.assign(inputs.begin(), inputs.end());
      config.averaging =
          averaging == "all" ? stoplex::Averaging::AllDocuments : stoplex::Averaging::ContainingDocuments;
      config.xbar_mode =
          xbar == "midpoint" ? stoplex::SampleMeanMode::Midpoint : stoplex::SampleMeanMode::CandidateMean;
      config.order = order == "list" ? stoplex::DocumentOrder::List : stoplex::DocumentOrder::Lexicographic;
      config.output_dir = output_dir;
      const auto report = stoplex::run_pipeline(config);
      std::cout << stoplex::summary_text(report);
    }
  } catch (const stoplex::Error& e) {
    std::cerr << "stoplex: " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "stoplex: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
