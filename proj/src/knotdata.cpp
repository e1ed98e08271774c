#include "lg/knotdata.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace lg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    out.push_back(trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

[[noreturn]] void corpus_error(int line, const std::string& what) {
  throw CorpusParseError("corpus line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::optional<CorpusEntry> pending;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!pending) {
      const auto fields = split(line, ';');
      if (fields.size() != 4) corpus_error(line_no, "expected 'name; components; chirality; braid'");
      CorpusEntry e;
      e.name = std::string(fields[0]);
      if (e.name.empty()) corpus_error(line_no, "empty name");
      if (fields[1] != "?") {
        try {
          e.components = std::stoi(std::string(fields[1]));
        } catch (const std::exception&) {
          corpus_error(line_no, "bad component count '" + std::string(fields[1]) + "'");
        }
      }
      if (fields[2] == "amphichiral") {
        e.amphichiral = true;
      } else if (fields[2] != "chiral") {
        corpus_error(line_no, "chirality must be 'amphichiral' or 'chiral'");
      }
      if (!fields[3].empty()) {
        try {
          e.braid = parse_braid(fields[3]);
        } catch (const std::exception& ex) {
          corpus_error(line_no, ex.what());
        }
        if (e.components && closure_info(*e.braid).components != *e.components) {
          corpus_error(line_no, "braid closure of " + e.name + " has " +
                                    std::to_string(closure_info(*e.braid).components) +
                                    " components, expected " + std::to_string(*e.components));
        }
      }
      pending = std::move(e);
    } else {
      try {
        pending->compact = parse_machine(line);
      } catch (const std::exception& ex) {
        corpus_error(line_no, ex.what());
      }
      out.push_back(std::move(*pending));
      pending.reset();
    }
  }
  if (pending) corpus_error(line_no, "entry " + pending->name + " has no value line");
  return out;
}

const std::vector<CorpusEntry>& load_corpus() {
  static const std::vector<CorpusEntry> corpus = parse_corpus(embedded_corpus_text());
  return corpus;
}

const std::vector<std::string>& mandatory_entries() {
  static const std::vector<std::string> names = {"3_1", "5_1", "7_1", "9_1", "2^2_1", "4_1", "6^3_2"};
  return names;
}

const CorpusEntry* find_entry(const std::vector<CorpusEntry>& corpus, std::string_view name) {
  auto it = std::find_if(corpus.begin(), corpus.end(), [&](const CorpusEntry& e) { return e.name == name; });
  return it == corpus.end() ? nullptr : &*it;
}

std::string_view to_string(RegressionStatus s) {
  switch (s) {
    case RegressionStatus::kPass:
      return "pass";
    case RegressionStatus::kFail:
      return "FAIL";
    case RegressionStatus::kValueOnly:
      return "value-only";
    case RegressionStatus::kError:
      return "ERROR";
  }
  return "?";
}

int RegressionReport::count(RegressionStatus s) const {
  return static_cast<int>(
      std::count_if(results.begin(), results.end(), [&](const RegressionResult& r) { return r.status == s; }));
}

std::string describe_difference(const CompactForm& expected, const CompactForm& actual) {
  std::ostringstream os;
  const std::size_t blocks = std::max(expected.qpolys.size(), actual.qpolys.size());
  static const QPoly kEmpty;
  for (std::size_t k = 0; k < blocks; ++k) {
    const QPoly& e = k < expected.qpolys.size() ? expected.qpolys[k] : kEmpty;
    const QPoly& a = k < actual.qpolys.size() ? actual.qpolys[k] : kEmpty;
    std::map<int, std::pair<Coeff, Coeff>> merged;
    for (const auto& [x, c] : e) merged[x].first = c;
    for (const auto& [x, c] : a) merged[x].second = c;
    for (const auto& [x, cs] : merged) {
      if (cs.first != cs.second) {
        os << " [P^" << k << " q^" << x << ": expected " << cs.first << ", got " << cs.second << "]";
      }
    }
  }
  return os.str();
}

namespace {

RegressionResult check_entry(const CorpusEntry& e, const EngineOptions& opts) {
  RegressionResult r;
  r.name = e.name;
  if (!e.braid) {
    r.status = RegressionStatus::kValueOnly;
    return r;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    const CompactForm got = to_compact(evaluate_lg(*e.braid, opts));
    if (got == e.compact) {
      r.status = RegressionStatus::kPass;
    } else {
      r.status = RegressionStatus::kFail;
      r.detail = "got " + render_machine(got) + ";" + describe_difference(e.compact, got);
    }
  } catch (const std::exception& ex) {
    r.status = RegressionStatus::kError;
    r.detail = ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

RegressionReport run_regression(const std::vector<CorpusEntry>& corpus, const EngineOptions& opts, int jobs) {
  RegressionReport report;
  report.results.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      report.results[i] = check_entry(corpus[i], opts);
    }
  };
  const int threads = std::max(1, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return report;
}

}  // namespace lg
