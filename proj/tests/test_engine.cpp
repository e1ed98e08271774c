#include <doctest.h>

#include <random>
#include <sstream>

#include "lg/braid.hpp"
#include "lg/checks.hpp"
#include "lg/engine.hpp"
#include "lg/statemodel.hpp"
#include "oracles.hpp"

using lg::DenseMatrix;
using lg::RingElem;
using lg::RTensor4;
using lg::SparseTangle;
namespace lt = lg::testing;

namespace {

using IntTensor = RTensor4<long>;

IntTensor random_tensor(std::mt19937_64& rng, int m, double density) {
  std::uniform_int_distribution<int> value(-2, 2);
  std::bernoulli_distribution keep(density);
  IntTensor x(m);
  for (int r = 0; r < m * m; ++r)
    for (int c = 0; c < m * m; ++c) x.matrix()(r, c) = keep(rng) ? value(rng) : 0;
  return x;
}

const lg::StateModel& model() { return lg::StateModel::links_gould(); }

}  // namespace

TEST_CASE("identity tangle sizes") {
  CHECK(lg::identity_tangle<RingElem>(1, 4).size() == 4);
  CHECK(lg::identity_tangle<RingElem>(2, 4).size() == 16);
  CHECK(lg::identity_tangle<long>(3, 2).size() == 8);
  const auto z = lg::identity_tangle<long>(3, 2);
  CHECK(lt::to_dense(z) == DenseMatrix<long>::Identity(8, 8));
  for (const auto& [idx, v] : z.entries()) {
    CHECK(v == 1);
    for (int k = 0; k < 3; ++k) CHECK(z.upper_digit(idx, k) == z.lower_digit(idx, k));
  }
}

TEST_CASE("identity absorbs a generator") {
  const auto z = lg::accrete(lg::identity_tangle<RingElem>(2, 4), model().sigma(), 1);
  CHECK(lt::to_dense(z) == model().sigma().matrix());
}

TEST_CASE("accretion matches the dense Kronecker oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 2);
    const int n = 2 + static_cast<int>(rng() % 3);
    const int letters = 1 + static_cast<int>(rng() % 6);
    std::vector<std::pair<IntTensor, int>> steps;
    auto z = lg::identity_tangle<long>(n, m);
    for (int i = 0; i < letters; ++i) {
      const int j = 1 + static_cast<int>(rng() % (n - 1));
      steps.emplace_back(random_tensor(rng, m, 0.4), j);
      z = lg::accrete(z, steps.back().first, j);
    }
    const DenseMatrix<long> dense = lt::dense_braid(steps, n, m);
    REQUIRE(lt::to_dense(z) == dense);
    for (const auto& [idx, v] : z.entries()) REQUIRE(v != 0);

    lg::DiagTensor2<long> h(lg::DenseVector<long>::NullaryExpr(m, [&](Eigen::Index) {
      return static_cast<long>(rng() % 5) - 2;
    }));
    REQUIRE(lg::close(z, h) == lt::dense_close(dense, h, n));
  }
}

TEST_CASE("run-length accretion equals repeated accretion") {
  for (int e = 1; e <= 6; ++e) {
    for (int sign : {1, -1}) {
      const int n = 3;
      auto once = lg::accrete(lg::identity_tangle<RingElem>(n, 4), model().generator_power(sign * e), 2);
      auto step = lg::identity_tangle<RingElem>(n, 4);
      const auto& x = sign > 0 ? model().sigma() : model().sigma_inverse();
      for (int i = 0; i < e; ++i) step = lg::accrete(step, x, 2);
      CHECK(once.entries() == step.entries());
    }
  }
}

TEST_CASE("a generator followed by its inverse is the identity") {
  for (int j = 1; j <= 2; ++j) {
    auto z = lg::accrete(lg::identity_tangle<RingElem>(3, 4), model().sigma(), j);
    z = lg::accrete(z, model().sigma_inverse(), j);
    CHECK(z.entries() == lg::identity_tangle<RingElem>(3, 4).entries());
  }
}

TEST_CASE("closure base cases") {
  const auto& h = model().closing_handle();
  CHECK(lg::close(lg::identity_tangle<RingElem>(1, 4), h) == DenseMatrix<RingElem>::Identity(4, 4));
  CHECK(lg::close(lg::identity_tangle<RingElem>(2, 4), h) == DenseMatrix<RingElem>::Zero(4, 4));
  CHECK(lg::extract_scalar(DenseMatrix<RingElem>(DenseMatrix<RingElem>::Identity(4, 4))) == RingElem(1));
  CHECK(lg::extract_scalar(DenseMatrix<RingElem>(DenseMatrix<RingElem>::Zero(4, 4))).is_zero());
  DenseMatrix<RingElem> bad = DenseMatrix<RingElem>::Identity(4, 4);
  bad(1, 2) = RingElem(5);
  CHECK_THROWS_AS(lg::extract_scalar(bad), lg::NonScalarTangle);
}

TEST_CASE("evaluate_raw base cases") {
  CHECK(lg::evaluate_raw(lg::parse_braid("", 1)) == RingElem(1));
  CHECK(lg::evaluate_raw(lg::parse_braid("", 2)).is_zero());
  const RingElem trefoil = lg::evaluate_raw(lg::parse_braid("1 1 1"));
  CHECK(trefoil.is_y_free());
  CHECK(trefoil == lg::evaluate_raw(lg::conjugate(lg::parse_braid("1 1 1"), {1, -1})));
}

TEST_CASE("full evaluation matches the dense oracle over the ring") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const lg::BraidWord b = lg::random_braid(rng, 3, 6);
    INFO(lg::render(b));
    std::vector<std::pair<lg::RMatrix, int>> steps;
    for (int g : b.generators()) steps.emplace_back(g > 0 ? model().sigma() : model().sigma_inverse(), std::abs(g));
    const auto dense = lt::dense_braid(steps, b.strings(), 4);
    const auto expected = lt::dense_close(dense, model().closing_handle(), b.strings());
    CHECK(lg::evaluate_tangle(b, model()) == expected);
  }
}

TEST_CASE("size cap") {
  CHECK(lg::tangle_capacity(5, 4) == 1'048'576);
  CHECK(lg::tangle_capacity(6, 4) == 16'777'216);
  CHECK(lg::tangle_capacity(40, 4) == std::numeric_limits<std::uint64_t>::max());
  try {
    lg::evaluate_raw(lg::parse_braid("1", 6));
    FAIL("expected a size-cap refusal");
  } catch (const lg::SizeCapExceeded& e) {
    const std::string what = e.what();
    CHECK(what.find("M^(2n) = 4^12 = 16777216") != std::string::npos);
  }
  lg::EngineOptions tight;
  tight.max_size = 100;
  CHECK_THROWS_AS(lg::evaluate_raw(lg::parse_braid("1 2"), tight), lg::SizeCapExceeded);
  CHECK_NOTHROW(lg::evaluate_raw(lg::parse_braid("1 2 3 4"), {}));
}

TEST_CASE("accrete rejects positions out of range") {
  auto z = lg::identity_tangle<RingElem>(2, 4);
  CHECK_THROWS_AS(lg::accrete(z, model().sigma(), 0), std::out_of_range);
  CHECK_THROWS_AS(lg::accrete(z, model().sigma(), 2), std::out_of_range);
}

TEST_CASE("verbose evaluation logs progress") {
  std::ostringstream log;
  lg::EngineOptions opts;
  opts.log = &log;
  lg::evaluate_raw(lg::parse_braid("1 -2 1 -2"), opts);
  CHECK(log.str().find("accrete j=2") != std::string::npos);
  CHECK(log.str().find("close rank=2") != std::string::npos);
}
