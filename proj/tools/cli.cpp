#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lg/braid.hpp"
#include "lg/checks.hpp"
#include "lg/engine.hpp"
#include "lg/invariant.hpp"
#include "lg/knotdata.hpp"
#include "lg/statemodel.hpp"

namespace lg::cli {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeCap = 3;

enum class Format { kCompactText, kCompactMachine, kLaurent, kJson };

const std::map<std::string, Format> kFormats = {
    {"compact-text", Format::kCompactText},
    {"compact-machine", Format::kCompactMachine},
    {"laurent", Format::kLaurent},
    {"json", Format::kJson},
};

constexpr std::string_view kZeroNote =
    "the closure has a split component; closing a free strand multiplies by trace(C+) = 0";

struct EvalRequest {
  std::vector<std::string> word;
  std::optional<int> strings;
  Format format = Format::kCompactText;
  std::uint64_t max_size = kDefaultMaxSize;
  bool verbose = false;
};

struct Outcome {
  BraidWord braid;
  InvariantPoly poly;
  double seconds = 0.0;
};

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

Outcome evaluate(const BraidWord& b, const EngineOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{b, evaluate_lg(b, opts), 0.0};
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return o;
}

nlohmann::json compact_json(const CompactForm& form) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& qpoly : form.qpolys) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : qpoly) terms.push_back({e, c});
    blocks.push_back(std::move(terms));
  }
  return blocks;
}

nlohmann::json outcome_json(const Outcome& o) {
  const CompactForm form = to_compact(o.poly);
  const ClosureInfo info = closure_info(o.braid);
  return {
      {"braid", render(o.braid)},
      {"strings", o.braid.strings()},
      {"letters", o.braid.length()},
      {"writhe", writhe(o.braid)},
      {"components", info.components},
      {"palindromic", is_palindromic_q(o.poly)},
      {"compact", compact_json(form)},
      {"machine", render_machine(form)},
  };
}

void print_outcome(const Outcome& o, Format format, std::ostream& out) {
  const CompactForm form = to_compact(o.poly);
  const ClosureInfo info = closure_info(o.braid);
  const bool palindromic = is_palindromic_q(o.poly);
  switch (format) {
    case Format::kJson:
      out << outcome_json(o).dump() << "\n";
      return;
    case Format::kCompactMachine:
      out << "# strings=" << o.braid.strings() << " letters=" << o.braid.length()
          << " writhe=" << writhe(o.braid) << " components=" << info.components
          << " palindromic=" << (palindromic ? "yes" : "no") << "\n";
      out << render_machine(form) << "\n";
      return;
    case Format::kCompactText:
    case Format::kLaurent:
      break;
  }
  out << "braid:       " << (o.braid.letters().empty() ? "(empty)" : render(o.braid)) << "\n";
  out << "strings:     " << o.braid.strings() << "\n";
  out << "letters:     " << o.braid.length() << "\n";
  out << "writhe:      " << writhe(o.braid) << "\n";
  out << "components:  " << info.components << "\n";
  out << "palindromic: " << (palindromic ? "yes (chirality not detected)" : "no (chiral)") << "\n";
  out << "elapsed:     " << std::fixed << std::setprecision(3) << o.seconds << " s\n";
  out.unsetf(std::ios::floatfield);
  if (format == Format::kLaurent) {
    out << "LG = " << render_laurent(o.poly) << "\n";
  } else {
    out << "LG = " << render_compact_text(form) << "\n";
  }
  if (o.poly.is_zero()) out << "note: " << kZeroNote << "\n";
}

int cmd_eval(const EvalRequest& req, std::ostream& out, std::ostream& err) {
  EngineOptions opts;
  opts.max_size = req.max_size;
  if (req.verbose) opts.log = &err;
  try {
    const BraidWord b = parse_braid(join(req.word), req.strings);
    print_outcome(evaluate(b, opts), req.format, out);
    return 0;
  } catch (const BraidSyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BraidRangeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << " (raise it with --max-size)\n";
    return kExitSizeCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

struct BatchLine {
  int line_no = 0;
  std::string name;
  std::string word;
};

struct BatchResult {
  std::optional<Outcome> outcome;
  std::string error;
};

int cmd_batch(const std::string& path, Format format, std::uint64_t max_size, int jobs, bool verbose,
              std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open " << path << "\n";
    return kExitUsage;
  }
  std::vector<BatchLine> lines;
  std::string text;
  for (int line_no = 1; std::getline(in, text); ++line_no) {
    std::istringstream ss(text);
    std::string name;
    if (!(ss >> name) || name.front() == '#') continue;
    std::string rest;
    std::getline(ss, rest);
    lines.push_back({line_no, name, rest});
  }

  EngineOptions opts;
  opts.max_size = max_size;
  if (verbose && jobs <= 1) opts.log = &err;

  std::vector<BatchResult> results(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      try {
        results[i].outcome = evaluate(parse_braid(lines[i].word), opts);
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  int failed = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const BatchResult& r = results[i];
    if (!r.outcome) {
      ++failed;
      err << "line " << lines[i].line_no << " (" << lines[i].name << "): " << r.error << "\n";
      continue;
    }
    if (format == Format::kJson) {
      nlohmann::json j = outcome_json(*r.outcome);
      j["name"] = lines[i].name;
      out << j.dump() << "\n";
    } else {
      out << lines[i].name << ' ' << render_machine(to_compact(r.outcome->poly)) << "\n";
    }
  }
  return failed == 0 ? 0 : kExitFailure;
}

void row(std::ostream& out, const std::string& what, const std::string& result) {
  out << std::left << std::setw(52) << what << ' ' << result << "\n";
}

int cmd_selftest(bool quick, std::uint64_t seed, int braids, int jobs, std::ostream& out) {
  int checks = 0;
  int failures = 0;
  auto tally = [&](bool ok) {
    ++checks;
    if (!ok) ++failures;
    return ok ? std::string("pass") : std::string("FAIL");
  };

  out << "== model identities\n";
  for (const auto& c : run_identity_checks()) {
    row(out, c.name, tally(c.passed) + (c.detail.empty() ? "" : "  " + c.detail));
  }

  out << "== regression corpus" << (quick ? " (mandatory entries)" : "") << "\n";
  std::vector<CorpusEntry> selected;
  for (const auto& e : load_corpus()) {
    const bool mandatory = std::find(mandatory_entries().begin(), mandatory_entries().end(), e.name) !=
                           mandatory_entries().end();
    if (mandatory) {
      if (!e.braid) {
        row(out, e.name, tally(false) + "  mandatory entry has no braid word");
        continue;
      }
      selected.push_back(e);
    } else if (!quick && e.braid) {
      selected.push_back(e);
    }
  }
  const RegressionReport rep = run_regression(selected, {}, jobs);
  for (const auto& r : rep.results) {
    std::ostringstream line;
    line << tally(r.status == RegressionStatus::kPass) << "  (" << std::fixed << std::setprecision(3)
         << r.seconds << " s)";
    if (!r.detail.empty()) line << "  " << r.detail;
    row(out, r.name, line.str());
  }
  if (!quick) {
    int value_only = 0;
    for (const auto& e : load_corpus()) value_only += e.braid ? 0 : 1;
    row(out, "value-only entries (no braid word)", std::to_string(value_only) + " skipped");
  }

  if (!quick) {
    out << "== Markov moves (seed " << seed << ", " << braids << " braids)\n";
    MarkovOptions mopts;
    mopts.seed = seed;
    mopts.braids = braids;
    const MarkovReport mr = run_markov_suite(mopts);
    for (const std::string move :
         {"conjugation", "stabilization+", "stabilization-", "free insertion", "braid relation", "mirror"}) {
      int total = 0;
      int passed = 0;
      for (const auto& c : mr.cases) {
        if (c.move != move) continue;
        ++total;
        passed += c.passed ? 1 : 0;
      }
      row(out, move, tally(passed == total) + "  " + std::to_string(passed) + "/" + std::to_string(total));
    }
    for (const auto& c : mr.cases) {
      if (!c.passed) out << "  " << c.move << ": " << c.before << " -> " << c.after << ": " << c.detail << "\n";
    }
    row(out, "structural checks on all values", tally(mr.structural.empty()) + "  " +
                                                   std::to_string(mr.structural.size()) + " violations");
    for (const auto& s : mr.structural) out << "  " << s << "\n";
  }

  out << "== " << checks << " checks, " << failures << " failed\n";
  return failures == 0 ? 0 : kExitFailure;
}

int cmd_dump_rmatrix(bool inverse, std::ostream& out) {
  const StateModel& model = StateModel::links_gould();
  const RMatrix& r = inverse ? model.sigma_inverse() : model.sigma();
  const auto& m = r.matrix();
  std::vector<std::vector<std::string>> cells(16, std::vector<std::string>(16));
  std::size_t width = 1;
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      cells[i][j] = m(i, j).is_zero() ? "." : m(i, j).to_string();
      width = std::max(width, cells[i][j].size());
    }
  }
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      if (j > 0) out << (j % 4 == 0 ? " | " : "  ");
      out << std::left << std::setw(static_cast<int>(width)) << cells[i][j];
    }
    out << "\n";
    if (i % 4 == 3 && i < 15) out << std::string((width + 2) * 16 + 3 * 2, '-') << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate the Links-Gould invariant LG(q, P) of closed braids"};
  app.name("lgpoly");
  app.require_subcommand(1);

  EvalRequest req;
  std::string format_name = "compact-text";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"compact-text", "compact-machine", "laurent", "json"}));
    sub->add_option("--max-size", req.max_size, "Largest admissible M^(2n)")->check(CLI::PositiveNumber);
    sub->add_flag("-v,--verbose", req.verbose, "Report tangle sizes on stderr");
  };

  CLI::App* eval = app.add_subcommand("eval", "Evaluate one braid word, e.g. \"1 -2 1 -2\" or \"1^3\"");
  eval->add_option("word", req.word, "Braid word (signed generator indices, optional ^exponents)");
  eval->add_option("--strings,-n", req.strings, "Number of strings (default: inferred)")
      ->check(CLI::PositiveNumber);
  add_common(eval);

  std::string batch_file;
  int jobs = 1;
  CLI::App* batch = app.add_subcommand("batch", "Evaluate a file of 'name word' lines");
  batch->add_option("file", batch_file, "Input file")->required();
  batch->add_option("--jobs,-j", jobs, "Parallel evaluations")->check(CLI::PositiveNumber);
  add_common(batch);

  bool quick = false;
  std::uint64_t seed = 1;
  int braids = 100;
  CLI::App* selftest = app.add_subcommand("selftest", "Check identities, the corpus and Markov invariance");
  selftest->add_flag("--quick", quick, "Identities and mandatory corpus entries only");
  selftest->add_option("--seed", seed, "Seed for the random braids");
  selftest->add_option("--braids", braids, "Number of random braids")->check(CLI::PositiveNumber);
  selftest->add_option("--jobs,-j", jobs, "Parallel corpus evaluations")->check(CLI::PositiveNumber);

  bool inverse = false;
  CLI::App* dump = app.add_subcommand("dump-rmatrix", "Print psi(sigma) as a 16x16 grid");
  dump->add_flag("--inverse", inverse, "Print psi(sigma^-1) instead");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  req.format = kFormats.at(format_name);
  if (eval->parsed()) return cmd_eval(req, out, err);
  if (batch->parsed()) return cmd_batch(batch_file, req.format, req.max_size, jobs, req.verbose, out, err);
  if (selftest->parsed()) return cmd_selftest(quick, seed, braids, jobs, out);
  if (dump->parsed()) return cmd_dump_rmatrix(inverse, out);
  return kExitUsage;
}

}  // namespace lg::cli
