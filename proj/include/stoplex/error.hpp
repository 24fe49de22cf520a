#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace stoplex {

/// Broad classes of failure; the CLI maps these onto exit codes.
enum class ErrorCategory {
  Input,       // unreadable or empty input, bad parameters
  Degenerate,  // the corpus cannot be analysed by the method
};

/// Base class of every error thrown by the library.
///
/// Carries an optional stage name (set by the pipeline) and an optional
/// source identifier (file name) so messages point at the failing step.
class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string kind, std::string detail)
      : std::runtime_error(detail),
        category_(category),
        kind_(std::move(kind)),
        detail_(std::move(detail)) {
    rebuild();
  }

  [[nodiscard]] ErrorCategory category() const noexcept { return category_; }
  [[nodiscard]] const std::string& kind() const noexcept { return kind_; }
  [[nodiscard]] const std::string& stage() const noexcept { return stage_; }
  [[nodiscard]] const std::string& source() const noexcept { return source_; }
  [[nodiscard]] const char* what() const noexcept override { return message_.c_str(); }

  void set_stage(std::string stage) {
    stage_ = std::move(stage);
    rebuild();
  }

  void set_source(std::string source) {
    source_ = std::move(source);
    rebuild();
  }

 private:
  void rebuild() {
    message_.clear();
    if (!stage_.empty()) message_ += "[" + stage_ + "] ";
    message_ += kind_;
    if (!source_.empty()) message_ += " (" + source_ + ")";
    if (!detail_.empty()) message_ += ": " + detail_;
  }

  ErrorCategory category_;
  std::string kind_;
  std::string detail_;
  std::string stage_;
  std::string source_;
  std::string message_;
};

/// No documents were supplied.
class EmptyCorpus : public Error {
 public:
  explicit EmptyCorpus(std::string detail = "no documents supplied")
      : Error(ErrorCategory::Input, "EmptyCorpus", std::move(detail)) {}
};

/// A source is not valid UTF-8.
class DecodeError : public Error {
 public:
  DecodeError(std::string source_name, std::string detail)
      : Error(ErrorCategory::Input, "DecodeError", std::move(detail)) {
    set_source(std::move(source_name));
  }
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  IoError(std::string path, std::string detail)
      : Error(ErrorCategory::Input, "IoError", std::move(detail)) {
    set_source(std::move(path));
  }
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  explicit DomainError(std::string detail)
      : Error(ErrorCategory::Input, "DomainError", std::move(detail)) {}
};

/// Every word occurs in every document, so all weights are zero.
class AllZeroWeights : public Error {
 public:
  explicit AllZeroWeights(std::string detail = "every word occurs in every document")
      : Error(ErrorCategory::Degenerate, "AllZeroWeights", std::move(detail)) {}
};

/// The index distribution has zero variance.
class DegenerateDistribution : public Error {
 public:
  explicit DegenerateDistribution(std::string detail = "zero dispersion")
      : Error(ErrorCategory::Degenerate, "DegenerateDistribution", std::move(detail)) {}
};

/// A NaN or infinite value reached an operation that needs a finite one.
class NonFinite : public Error {
 public:
  explicit NonFinite(std::string detail)
      : Error(ErrorCategory::Degenerate, "NonFinite", std::move(detail)) {}
};

}  // namespace stoplex
