#include <doctest.h>

#include <algorithm>

#include "lg/knotdata.hpp"

namespace {

const std::vector<lg::CorpusEntry>& corpus() { return lg::load_corpus(); }

}  // namespace

TEST_CASE("corpus loads with the mandatory entries") {
  CHECK(corpus().size() == 266);
  for (const auto& name : lg::mandatory_entries()) {
    const lg::CorpusEntry* e = lg::find_entry(corpus(), name);
    REQUIRE(e != nullptr);
    CHECK(e->braid.has_value());
  }
  const lg::CorpusEntry* hopf = lg::find_entry(corpus(), "2^2_1");
  CHECK(hopf->components == 2);
  CHECK(*hopf->braid == lg::parse_braid("1 1"));
  const lg::CorpusEntry* borromean = lg::find_entry(corpus(), "6^3_2");
  CHECK(borromean->components == 3);
  CHECK(borromean->amphichiral);
  CHECK(lg::find_entry(corpus(), "no_such_knot") == nullptr);
}

TEST_CASE("stored values satisfy symmetry, parity and the chirality flag") {
  for (const auto& e : corpus()) {
    INFO(e.name);
    const lg::InvariantPoly poly = lg::from_compact(e.compact);
    CHECK(lg::is_p_symmetric(poly));
    CHECK(lg::parity_check(poly).empty());
    CHECK(lg::is_palindromic_q(poly) == e.amphichiral);
    CHECK(lg::to_compact(poly) == e.compact);
    if (e.braid && e.components) CHECK(lg::closure_info(*e.braid).components == *e.components);
  }
}

TEST_CASE("regression over every entry with a braid word") {
  const lg::RegressionReport rep = lg::run_regression(corpus(), {}, 2);
  CHECK(rep.failures() == 0);
  CHECK(rep.count(lg::RegressionStatus::kPass) ==
        std::count_if(corpus().begin(), corpus().end(), [](const auto& e) { return e.braid.has_value(); }));
  CHECK(rep.count(lg::RegressionStatus::kValueOnly) ==
        std::count_if(corpus().begin(), corpus().end(), [](const auto& e) { return !e.braid; }));
  for (const auto& r : rep.results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.status != lg::RegressionStatus::kFail);
  }
}

TEST_CASE("a corrupted coefficient gives exactly one failure") {
  std::vector<lg::CorpusEntry> mutated;
  for (const auto& name : lg::mandatory_entries()) mutated.push_back(*lg::find_entry(corpus(), name));
  mutated[0].compact.qpolys[0].begin()->second += 1;
  const lg::RegressionReport rep = lg::run_regression(mutated);
  CHECK(rep.failures() == 1);
  CHECK(rep.results[0].status == lg::RegressionStatus::kFail);
  CHECK(rep.results[0].detail.find("expected") != std::string::npos);
}

TEST_CASE("entries without a braid are value-only") {
  const lg::CorpusEntry* e = lg::find_entry(corpus(), "10_166");
  REQUIRE(e != nullptr);
  CHECK_FALSE(e->braid.has_value());
  const lg::RegressionReport rep = lg::run_regression({*e});
  CHECK(rep.results[0].status == lg::RegressionStatus::kValueOnly);
  CHECK(lg::to_string(rep.results[0].status) == "value-only");
  CHECK(rep.failures() == 0);
}

TEST_CASE("corpus parser") {
  const auto parsed = lg::parse_corpus(
      "# comment\n\n"
      "3_1; 1; chiral; 1 1 1\n"
      "0: [0:1, 2:2] 1: [1:-1, 3:-1] 2: [2:1]\n"
      "X; ?; amphichiral;\n"
      "0: [0:1]\n");
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].braid == lg::parse_braid("1 1 1"));
  CHECK_FALSE(parsed[1].components.has_value());
  CHECK_FALSE(parsed[1].braid.has_value());
  CHECK_THROWS_AS(lg::parse_corpus("a; 1; chiral; 1 1\n0: [0:1]\n"), lg::CorpusParseError);
  CHECK_THROWS_AS(lg::parse_corpus("a; 1; chiral\n0: [0:1]\n"), lg::CorpusParseError);
  CHECK_THROWS_AS(lg::parse_corpus("a; 1; sideways; 1\n0: [0:1]\n"), lg::CorpusParseError);
  CHECK_THROWS_AS(lg::parse_corpus("a; 1; chiral; 1\n"), lg::CorpusParseError);
  CHECK_THROWS_AS(lg::parse_corpus("a; 1; chiral; 1\n0: [0:0]\n"), lg::CorpusParseError);
}

TEST_CASE("describe_difference lists differing terms") {
  const lg::CompactForm a{{{{0, 1}}, {{1, 2}}}};
  const lg::CompactForm b{{{{0, 1}}, {{1, 3}}}};
  CHECK(lg::describe_difference(a, b) == " [P^1 q^1: expected 2, got 3]");
  CHECK(lg::describe_difference(a, a).empty());
}
