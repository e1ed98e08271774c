#pragma once

// Regression corpus of tabulated LG values, some with braid words.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lg/braid.hpp"
#include "lg/engine.hpp"
#include "lg/invariant.hpp"

namespace lg {

class CorpusParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorpusEntry {
  std::string name;
  CompactForm compact;
  std::optional<BraidWord> braid;
  bool amphichiral = false;
  std::optional<int> components;
};

/// Parses the corpus file format (see data/lg_corpus.txt).
std::vector<CorpusEntry> parse_corpus(std::string_view text);

/// The corpus compiled into the library.
std::string_view embedded_corpus_text();
const std::vector<CorpusEntry>& load_corpus();

/// Entries that must carry a braid word and pass end to end.
const std::vector<std::string>& mandatory_entries();

const CorpusEntry* find_entry(const std::vector<CorpusEntry>& corpus, std::string_view name);

enum class RegressionStatus { kPass, kFail, kValueOnly, kError };

std::string_view to_string(RegressionStatus s);

struct RegressionResult {
  std::string name;
  RegressionStatus status = RegressionStatus::kValueOnly;
  std::string detail;
  double seconds = 0.0;
};

struct RegressionReport {
  std::vector<RegressionResult> results;

  int count(RegressionStatus s) const;
  /// Failures plus errors.
  int failures() const { return count(RegressionStatus::kFail) + count(RegressionStatus::kError); }
};

/// Evaluates every entry that has a braid word and compares bit-exactly.
RegressionReport run_regression(const std::vector<CorpusEntry>& corpus, const EngineOptions& opts = {},
                                int jobs = 1);

/// Human-readable list of the blocks and terms where two compact forms differ.
std::string describe_difference(const CompactForm& expected, const CompactForm& actual);

}  // namespace lg
