#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <limits>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "stoplex/error.hpp"
#include "stoplex/tokenize.hpp"

namespace stoplex {

/// A named blob of raw text; one source becomes one document.
struct Source {
  std::string name;
  std::string text;
};

struct Document {
  std::size_t doc_index = 0;  // 1-based
  std::string name;
  std::vector<std::string> tokens;
};

struct Corpus {
  std::vector<Document> documents;
  std::size_t token_total = 0;

  [[nodiscard]] std::size_t doc_count() const noexcept { return documents.size(); }
};

/// One unique word. idf, weight and probability stay NaN until the
/// weighting stage fills them in.
struct WordEntry {
  std::string surface;
  std::size_t first_index = 0;                // 1-based order of first appearance
  std::vector<std::uint64_t> per_doc_counts;  // raw term frequency per document
  std::size_t doc_frequency = 0;              // documents with a positive count
  double idf = std::numeric_limits<double>::quiet_NaN();
  double weight = std::numeric_limits<double>::quiet_NaN();
  double probability = std::numeric_limits<double>::quiet_NaN();

  [[nodiscard]] std::uint64_t total_count() const noexcept {
    return std::accumulate(per_doc_counts.begin(), per_doc_counts.end(), std::uint64_t{0});
  }
};

/// Unique words ordered by first appearance; entries[k].first_index == k + 1.
struct Lexicon {
  std::size_t doc_count = 0;
  std::vector<WordEntry> entries;

  [[nodiscard]] std::size_t size() const noexcept { return entries.size(); }
};

/// Tokenizes every source into a document, keeping the given order.
/// Tokenization runs on up to `threads` workers; the result does not depend
/// on the thread count.
[[nodiscard]] inline Corpus load_corpus(std::span<const Source> sources, unsigned threads = 1) {
  if (sources.empty()) throw EmptyCorpus();

  for (const auto& source : sources) {
    std::size_t offset = 0;
    if (!is_valid_utf8(source.text, &offset)) {
      throw DecodeError(source.name, "invalid UTF-8 at byte " + std::to_string(offset));
    }
  }

  Corpus corpus;
  corpus.documents.resize(sources.size());
  auto work = [&](std::size_t k) {
    corpus.documents[k] = Document{k + 1, sources[k].name, tokenize(sources[k].text)};
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, sources.size());
  if (workers == 1) {
    for (std::size_t k = 0; k < sources.size(); ++k) work(k);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < sources.size(); k += workers) work(k);
      });
    }
  }

  for (const auto& doc : corpus.documents) corpus.token_total += doc.tokens.size();
  return corpus;
}

/// Assigns first-appearance indices by scanning documents in order, and
/// fills per-document counts and document frequencies.
[[nodiscard]] inline Lexicon build_lexicon(const Corpus& corpus) {
  if (corpus.documents.empty()) throw EmptyCorpus();
  const std::size_t n = corpus.doc_count();

  Lexicon lexicon;
  lexicon.doc_count = n;
  std::unordered_map<std::string, std::size_t> position;

  for (std::size_t d = 0; d < n; ++d) {
    for (const auto& token : corpus.documents[d].tokens) {
      auto [it, inserted] = position.try_emplace(token, lexicon.entries.size());
      if (inserted) {
        WordEntry entry;
        entry.surface = token;
        entry.first_index = lexicon.entries.size() + 1;
        entry.per_doc_counts.assign(n, 0);
        lexicon.entries.push_back(std::move(entry));
      }
      ++lexicon.entries[it->second].per_doc_counts[d];
    }
  }

  for (auto& entry : lexicon.entries) {
    entry.doc_frequency = static_cast<std::size_t>(
        std::ranges::count_if(entry.per_doc_counts, [](std::uint64_t c) { return c > 0; }));
  }
  return lexicon;
}

/// How files found under directories are ordered into documents.
enum class DocumentOrder {
  List,           // explicit files keep argument order; directory contents sorted by name
  Lexicographic,  // every collected file sorted by file name
};

[[nodiscard]] inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read failed");
  return buffer.str();
}

/// Expands input paths (files or directories, non-recursive) into the
/// ordered list of document files.
[[nodiscard]] inline std::vector<std::filesystem::path> collect_document_paths(
    std::span<const std::filesystem::path> inputs, DocumentOrder order) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& input : inputs) {
    std::error_code ec;
    if (fs::is_directory(input, ec)) {
      std::vector<fs::path> inside;
      for (const auto& item : fs::directory_iterator(input, ec)) {
        if (item.is_regular_file()) inside.push_back(item.path());
      }
      if (ec) throw IoError(input.string(), ec.message());
      std::ranges::sort(inside, {}, [](const fs::path& p) { return p.filename().string(); });
      files.insert(files.end(), inside.begin(), inside.end());
    } else if (fs::is_regular_file(input, ec)) {
      files.push_back(input);
    } else {
      throw IoError(input.string(), "no such file or directory");
    }
  }
  if (order == DocumentOrder::Lexicographic) {
    std::ranges::stable_sort(files, {}, [](const fs::path& p) { return p.filename().string(); });
  }
  return files;
}

[[nodiscard]] inline std::vector<Source> read_sources(std::span<const std::filesystem::path> files) {
  std::vector<Source> sources;
  sources.reserve(files.size());
  for (const auto& file : files) {
    sources.push_back(Source{file.stem().string(), read_file(file)});
  }
  return sources;
}

}  // namespace stoplex
