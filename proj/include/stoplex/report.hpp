#pragma once

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "stoplex/corpus.hpp"
#include "stoplex/distribution.hpp"
#include "stoplex/error.hpp"
#include "stoplex/position.hpp"
#include "stoplex/selector.hpp"
#include "stoplex/svg.hpp"
#include "stoplex/weighting.hpp"

namespace stoplex {

inline constexpr std::string_view kVersion = "0.1.0";

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  double fraction = kDefaultFraction;
  Averaging averaging = Averaging::AllDocuments;
  SampleMeanMode xbar_mode = SampleMeanMode::Midpoint;
  double z_critical = kDefaultZCritical;
  std::filesystem::path output_dir = ".";
  bool plots = false;
  DocumentOrder order = DocumentOrder::List;
  unsigned threads = 1;

  void validate() const {
    if (!(fraction > 0.0 && fraction < 1.0)) {
      throw DomainError("fraction must lie in (0, 1), got " + std::to_string(fraction));
    }
    if (!(z_critical > 0.0) || !std::isfinite(z_critical)) {
      throw DomainError("critical value must be positive, got " + std::to_string(z_critical));
    }
  }
};

struct CorpusSummary {
  std::size_t documents = 0;
  std::size_t unique_words = 0;
  std::size_t tokens = 0;
};

struct StopwordSummary {
  double fraction = kDefaultFraction;
  std::size_t count = 0;
  double threshold = 0.0;
};

struct AnalysisReport {
  CorpusSummary corpus;
  MomentSummary moments;
  StopwordSummary stopwords;
  CoverageReport coverage;
  ZTestResult z_test;
  LocationVerdict verdict;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::string version{kVersion};
};

/// Every intermediate product of one analysis run.
struct Analysis {
  Corpus corpus;
  Lexicon lexicon;
  IndexDistribution distribution;
  MomentSummary moments;
  StopwordSet stopwords;
  CoverageReport coverage;
  ZTestResult z_test;
  LocationVerdict verdict;
  AnalysisReport report;
};

[[nodiscard]] constexpr std::string_view to_string(Averaging a) noexcept {
  return a == Averaging::AllDocuments ? "all" : "containing";
}

[[nodiscard]] constexpr std::string_view to_string(SampleMeanMode m) noexcept {
  return m == SampleMeanMode::Midpoint ? "midpoint" : "candidates";
}

[[nodiscard]] constexpr std::string_view to_string(DocumentOrder o) noexcept {
  return o == DocumentOrder::List ? "list" : "lexicographic";
}

/// Shortest decimal string that reads back to the same double.
[[nodiscard]] inline std::string format_number(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

namespace detail {

/// Runs `step`, tagging any library error with the stage name.
template <typename F>
decltype(auto) stage(std::string_view name, F&& step) {
  try {
    return std::forward<F>(step)();
  } catch (Error& e) {
    if (e.stage().empty()) e.set_stage(std::string(name));
    throw;
  }
}

inline nlohmann::ordered_json config_echo(const RunConfig& config) {
  nlohmann::ordered_json inputs = nlohmann::ordered_json::array();
  for (const auto& p : config.inputs) inputs.push_back(p.generic_string());
  return {
      {"inputs", inputs},
      {"fraction", config.fraction},
      {"averaging", to_string(config.averaging)},
      {"xbar", to_string(config.xbar_mode)},
      {"z_critical", config.z_critical},
      {"plots", config.plots},
      {"order", to_string(config.order)},
  };
}

}  // namespace detail

/// Runs every analysis stage on in-memory sources.
[[nodiscard]] inline Analysis analyze(std::span<const Source> sources, const RunConfig& config) {
  detail::stage("config", [&] { config.validate(); });

  Analysis a;
  a.corpus = detail::stage("load_corpus", [&] { return load_corpus(sources, config.threads); });
  a.lexicon = detail::stage("build_lexicon", [&] { return build_lexicon(a.corpus); });
  detail::stage("weights", [&] { assign_weights(a.lexicon, config.averaging); });
  detail::stage("probabilities", [&] { assign_probabilities(a.lexicon); });
  a.distribution = detail::stage("density", [&] { return density(a.lexicon); });
  a.moments = detail::stage("moment_summary", [&] { return moment_summary(a.distribution); });
  a.stopwords =
      detail::stage("select_candidates", [&] { return select_candidates(a.lexicon, config.fraction); });
  a.coverage =
      detail::stage("interval_coverage", [&] { return interval_coverage(a.stopwords, a.moments); });
  a.z_test = detail::stage("z_test", [&] {
    const double xbar = sample_mean(config.xbar_mode, a.lexicon.size(), a.stopwords);
    return hypothesis_decision(a.lexicon.size(), xbar, a.moments, config.z_critical);
  });
  a.verdict = detail::stage("verdict", [&] { return location_verdict(a.moments.asymmetry); });

  auto& r = a.report;
  r.corpus = {a.corpus.doc_count(), a.lexicon.size(), a.corpus.token_total};
  r.moments = a.moments;
  r.stopwords = {a.stopwords.fraction, a.stopwords.count(), a.stopwords.threshold};
  r.coverage = a.coverage;
  r.z_test = a.z_test;
  r.verdict = a.verdict;
  r.config = detail::config_echo(config);
  return a;
}

[[nodiscard]] inline nlohmann::ordered_json to_json(const AnalysisReport& r) {
  const auto& m = r.moments;
  return {
      {"corpus",
       {{"documents", r.corpus.documents},
        {"unique_words", r.corpus.unique_words},
        {"tokens", r.corpus.tokens}}},
      {"moments",
       {{"expectation", m.expectation},
        {"dispersion", m.dispersion},
        {"std_dev", m.std_dev},
        {"raw_moment_1", m.raw_moment_1},
        {"raw_moment_2", m.raw_moment_2},
        {"raw_moment_3", m.raw_moment_3},
        {"third_central_moment", m.third_central_moment},
        {"asymmetry", m.asymmetry}}},
      {"stopwords",
       {{"fraction", r.stopwords.fraction},
        {"count", r.stopwords.count},
        {"threshold", r.stopwords.threshold}}},
      {"coverage",
       {{"left", r.coverage.left_count},
        {"inside", r.coverage.inside_count},
        {"right", r.coverage.right_count},
        {"outside_fraction", r.coverage.outside_fraction}}},
      {"z_test",
       {{"n", r.z_test.n_unique},
        {"x_bar", r.z_test.sample_mean},
        {"z", r.z_test.z},
        {"critical", r.z_test.critical},
        {"x_bar_side", to_string(r.z_test.xbar_side)},
        {"decision", to_string(r.z_test.decision)}}},
      {"verdict", {{"asymmetry", r.verdict.asymmetry}, {"location", to_string(r.verdict.location)}}},
      {"config", r.config},
      {"version", r.version},
  };
}

/// Inverse of to_json. Throws DomainError on missing keys or unknown enum
/// spellings.
[[nodiscard]] inline AnalysisReport report_from_json(const nlohmann::ordered_json& j) {
  auto side = [](const std::string& s) {
    for (auto v : {Side::Left, Side::Inside, Side::Right}) {
      if (to_string(v) == s) return v;
    }
    throw DomainError("unknown x_bar_side '" + s + "'");
  };
  auto decision = [](const std::string& s) {
    for (auto v : {Decision::RetainH0, Decision::RejectH0}) {
      if (to_string(v) == s) return v;
    }
    throw DomainError("unknown decision '" + s + "'");
  };
  auto location = [](const std::string& s) {
    for (auto v : {Location::Beginning, Location::End, Location::BothEnds}) {
      if (to_string(v) == s) return v;
    }
    throw DomainError("unknown location '" + s + "'");
  };

  try {
    AnalysisReport r;
    const auto& c = j.at("corpus");
    r.corpus = {c.at("documents").get<std::size_t>(), c.at("unique_words").get<std::size_t>(),
                c.at("tokens").get<std::size_t>()};

    const auto& m = j.at("moments");
    r.moments.expectation = m.at("expectation").get<double>();
    r.moments.dispersion = m.at("dispersion").get<double>();
    r.moments.std_dev = m.at("std_dev").get<double>();
    r.moments.std_dev_cubed = r.moments.std_dev * r.moments.std_dev * r.moments.std_dev;
    r.moments.raw_moment_1 = m.at("raw_moment_1").get<double>();
    r.moments.raw_moment_2 = m.at("raw_moment_2").get<double>();
    r.moments.raw_moment_3 = m.at("raw_moment_3").get<double>();
    r.moments.third_central_moment = m.at("third_central_moment").get<double>();
    r.moments.asymmetry = m.at("asymmetry").get<double>();

    const auto& s = j.at("stopwords");
    r.stopwords = {s.at("fraction").get<double>(), s.at("count").get<std::size_t>(),
                   s.at("threshold").get<double>()};

    const auto& cov = j.at("coverage");
    r.coverage.left_count = cov.at("left").get<std::size_t>();
    r.coverage.inside_count = cov.at("inside").get<std::size_t>();
    r.coverage.right_count = cov.at("right").get<std::size_t>();
    r.coverage.outside_fraction = cov.at("outside_fraction").get<double>();

    const auto& z = j.at("z_test");
    r.z_test.n_unique = z.at("n").get<std::size_t>();
    r.z_test.sample_mean = z.at("x_bar").get<double>();
    r.z_test.z = z.at("z").get<double>();
    r.z_test.critical = z.at("critical").get<double>();
    r.z_test.xbar_side = side(z.at("x_bar_side").get<std::string>());
    r.z_test.decision = decision(z.at("decision").get<std::string>());
    r.z_test.expectation = r.moments.expectation;
    r.z_test.std_dev = r.moments.std_dev;

    const auto& v = j.at("verdict");
    r.verdict.asymmetry = v.at("asymmetry").get<double>();
    r.verdict.location = location(v.at("location").get<std::string>());

    r.config = j.at("config");
    r.version = j.at("version").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
}

/// word,first_index,doc_frequency,idf,weight,probability; one row per
/// unique word in first_index order.
[[nodiscard]] inline std::string words_csv(const Lexicon& lexicon) {
  std::string out = "word,first_index,doc_frequency,idf,weight,probability\n";
  for (const auto& e : lexicon.entries) {
    out += e.surface;
    out += ',' + std::to_string(e.first_index);
    out += ',' + std::to_string(e.doc_frequency);
    out += ',' + format_number(e.idf);
    out += ',' + format_number(e.weight);
    out += ',' + format_number(e.probability);
    out += '\n';
  }
  return out;
}

/// Human-readable summary printed by the CLI.
[[nodiscard]] inline std::string summary_text(const AnalysisReport& r) {
  std::string out;
  auto line = [&](std::string_view key, const std::string& value) {
    out += key;
    out += ": ";
    out += value;
    out += '\n';
  };
  line("documents", std::to_string(r.corpus.documents));
  line("tokens", std::to_string(r.corpus.tokens));
  line("unique words", std::to_string(r.corpus.unique_words));
  line("E", format_number(r.moments.expectation));
  line("D", format_number(r.moments.dispersion));
  line("sigma", format_number(r.moments.std_dev));
  line("mu3", format_number(r.moments.third_central_moment));
  line("A_s", format_number(r.moments.asymmetry));
  line("stop-word candidates", std::to_string(r.stopwords.count) + " (" +
                                   format_percent(r.stopwords.fraction) + ", p* = " +
                                   format_number(r.stopwords.threshold) + ")");
  line("outside (E-sigma, E+sigma)",
       format_percent(r.coverage.outside_fraction) + " (left " + std::to_string(r.coverage.left_count) +
           ", inside " + std::to_string(r.coverage.inside_count) + ", right " +
           std::to_string(r.coverage.right_count) + ")");
  line("Z", format_number(r.z_test.z) + " (x_bar " + format_number(r.z_test.sample_mean) + ", " +
                std::string(to_string(r.z_test.xbar_side)) + ", " +
                std::string(to_string(r.z_test.decision)) + ")");
  line("location", std::string(to_string(r.verdict.location)));
  return out;
}

namespace detail {

inline void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError(path.string(), "write failed");
}

}  // namespace detail

/// Reads the configured inputs, runs the analysis and writes stopwords.txt,
/// report.json, words.csv and, when enabled, density.svg and sorted.svg into
/// the output directory. Nothing is written if any stage fails.
inline AnalysisReport run_pipeline(const RunConfig& config) {
  detail::stage("config", [&] { config.validate(); });
  const auto sources = detail::stage("input", [&] {
    const auto files = collect_document_paths(config.inputs, config.order);
    if (files.empty()) throw EmptyCorpus("no input files found");
    return read_sources(files);
  });

  const Analysis a = analyze(sources, config);

  const std::string report_json = to_json(a.report).dump(2) + "\n";
  const std::string stopwords = export_list(a.stopwords);
  const std::string csv = words_csv(a.lexicon);
  std::string density_svg;
  std::string sorted_svg;
  if (config.plots) {
    density_svg = emit_density_plot(a.distribution, a.stopwords, a.moments);
    sorted_svg = emit_sorted_plot(a.lexicon, a.stopwords);
  }

  detail::stage("write", [&] {
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) throw IoError(config.output_dir.string(), ec.message());
    detail::write_file(config.output_dir / "stopwords.txt", stopwords);
    detail::write_file(config.output_dir / "report.json", report_json);
    detail::write_file(config.output_dir / "words.csv", csv);
    if (config.plots) {
      detail::write_file(config.output_dir / "density.svg", density_svg);
      detail::write_file(config.output_dir / "sorted.svg", sorted_svg);
    }
  });
  return a.report;
}

}  // namespace stoplex
