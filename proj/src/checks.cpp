#include "lg/checks.hpp"

#include <algorithm>
#include <sstream>

namespace lg {

std::vector<CheckResult> run_identity_checks() {
  std::vector<CheckResult> out;
  const StateModel& model = StateModel::links_gould();

  out.push_back({"psi(sigma) psi(sigma^-1) = I_16", is_inverse_pair(model.sigma(), model.sigma_inverse()), ""});
  out.push_back({"Yang-Baxter relation for psi(sigma)", satisfies_yang_baxter(model.sigma()), ""});
  out.push_back({"Yang-Baxter relation for psi(sigma^-1)", satisfies_yang_baxter(model.sigma_inverse()), ""});

  CheckResult handles{"left handles C+- equal cap/cup composition", true, ""};
  try {
    lg_handles();
  } catch (const ModelInconsistency& e) {
    handles.passed = false;
    handles.detail = e.what();
  }
  out.push_back(handles);

  const Handles h = lg_handles();
  const RingElem tp = h.plus.trace();
  const RingElem tm = h.minus.trace();
  out.push_back({"trace(C+) = trace(C-) = 0", tp.is_zero() && tm.is_zero(),
                 tp.is_zero() && tm.is_zero() ? "" : "trace(C+) = " + tp.to_string() + ", trace(C-) = " + tm.to_string()});
  return out;
}

CheckedValue evaluate_checked(const BraidWord& b, const EngineOptions& opts) {
  CheckedValue cv;
  const std::string tag = "[" + render(b) + " on " + std::to_string(b.strings()) + " strings] ";
  RingElem raw;
  try {
    raw = extract_scalar(evaluate_tangle(b, StateModel::links_gould(), opts));
  } catch (const NonScalarTangle& e) {
    cv.violations.push_back(tag + e.what());
    return cv;
  }
  if (!raw.is_y_free()) cv.violations.push_back(tag + "value is not Y-free");
  for (const auto& t : raw.a().terms()) {
    if (t.mono.q2 % 2 != 0) {
      cv.violations.push_back(tag + "half-integer q-exponent");
      break;
    }
  }
  for (const auto& t : raw.a().terms()) {
    if (t.mono.p % 2 != 0) {
      cv.violations.push_back(tag + "odd p-exponent");
      break;
    }
  }
  if (!cv.violations.empty()) return cv;
  try {
    cv.poly = to_invariant(raw);
  } catch (const std::exception& e) {
    cv.violations.push_back(tag + e.what());
    return cv;
  }
  for (const auto& v : parity_check(*cv.poly)) {
    std::ostringstream os;
    os << tag << "parity rule violated by " << v.coeff << " q^" << v.q << " P^" << v.P;
    cv.violations.push_back(os.str());
  }
  return cv;
}

int MarkovReport::failures() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const MarkovCase& c) { return !c.passed; }));
}

int MarkovReport::count(const std::string& move) const {
  return static_cast<int>(
      std::count_if(cases.begin(), cases.end(), [&](const MarkovCase& c) { return c.move == move; }));
}

BraidWord random_braid(std::mt19937_64& rng, int max_strings, int max_length) {
  std::uniform_int_distribution<int> strings_dist(2, std::max(2, max_strings));
  std::uniform_int_distribution<int> length_dist(1, std::max(1, max_length));
  std::uniform_int_distribution<int> sign_dist(0, 1);
  const int n = strings_dist(rng);
  const int m = length_dist(rng);
  std::uniform_int_distribution<int> pos_dist(1, n - 1);
  std::vector<int> gens;
  for (int i = 0; i < m; ++i) {
    const int j = pos_dist(rng);
    gens.push_back(sign_dist(rng) ? j : -j);
  }
  return BraidWord::from_generators(n, gens);
}

namespace {

class MarkovRunner {
 public:
  MarkovRunner(MarkovReport& report, const EngineOptions& opts) : report_(report), opts_(opts) {}

  std::optional<InvariantPoly> value(const BraidWord& b) {
    CheckedValue cv = evaluate_checked(b, opts_);
    report_.structural.insert(report_.structural.end(), cv.violations.begin(), cv.violations.end());
    return cv.poly;
  }

  void expect_equal(const std::string& move, const BraidWord& before, const std::optional<InvariantPoly>& base,
                    const BraidWord& after, bool mirrored = false) {
    MarkovCase c;
    c.move = move;
    c.before = render(before);
    c.after = render(after);
    c.strings_before = before.strings();
    c.strings_after = after.strings();
    try {
      const std::optional<InvariantPoly> moved = value(after);
      if (!base || !moved) {
        c.detail = "structural failure";
      } else {
        const InvariantPoly expected = mirrored ? q_inverted(*base) : *base;
        c.passed = expected == *moved;
        if (!c.passed) {
          c.detail = "expected " + render_laurent(expected) + ", got " + render_laurent(*moved);
        }
      }
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    report_.cases.push_back(std::move(c));
  }

 private:
  MarkovReport& report_;
  const EngineOptions& opts_;
};

}  // namespace

MarkovReport run_markov_suite(const MarkovOptions& mopts, const EngineOptions& opts) {
  MarkovReport report;
  MarkovRunner runner(report, opts);
  std::mt19937_64 rng(mopts.seed);
  std::uniform_int_distribution<int> sign_dist(0, 1);

  for (int i = 0; i < mopts.braids; ++i) {
    const BraidWord b = random_braid(rng, mopts.max_strings, mopts.max_length);
    ++report.braids;
    const int n = b.strings();
    const int m = b.length();
    std::uniform_int_distribution<int> pos_dist(1, n - 1);
    std::uniform_int_distribution<int> at_dist(0, m);

    std::optional<InvariantPoly> base;
    try {
      base = runner.value(b);
    } catch (const std::exception& e) {
      report.structural.push_back(render(b) + ": " + e.what());
    }

    const int gpos = pos_dist(rng);
    const int gsign = sign_dist(rng) ? 1 : -1;
    runner.expect_equal("conjugation", b, base, conjugate(b, {gpos, gsign}));
    runner.expect_equal("stabilization+", b, base, stabilize(b, +1));
    runner.expect_equal("stabilization-", b, base, stabilize(b, -1));

    const int ins_at = at_dist(rng);
    const int ins_pos = pos_dist(rng);
    const int ins_sign = sign_dist(rng) ? 1 : -1;
    runner.expect_equal("free insertion", b, base, insert_cancelling_pair(b, ins_at, ins_pos, ins_sign));

    if (n >= 3) {
      std::uniform_int_distribution<int> rel_dist(1, n - 2);
      const int j = rel_dist(rng);
      const int at = at_dist(rng);
      const BraidWord lhs = insert_braid_triple(b, at, j, false);
      const BraidWord rhs = insert_braid_triple(b, at, j, true);
      std::optional<InvariantPoly> lhs_value;
      try {
        lhs_value = runner.value(lhs);
      } catch (const std::exception& e) {
        report.structural.push_back(render(lhs) + ": " + e.what());
      }
      runner.expect_equal("braid relation", lhs, lhs_value, rhs);
    }

    runner.expect_equal("mirror", b, base, mirror(b), /*mirrored=*/true);
  }
  return report;
}

}  // namespace lg
