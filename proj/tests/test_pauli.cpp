#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "qlocal/constructions.hpp"
#include "qlocal/errors.hpp"
#include "qlocal/stabilizer.hpp"

using namespace qlocal;

TEST_CASE("pauli string round trip") {
  auto p = PauliOperator::from_string("XZZXI");
  CHECK(p.n == 5);
  CHECK(p.to_string() == "XZZXI");
  CHECK(p.weight() == 4);
  CHECK(p.support() == std::vector<std::size_t>{0, 1, 2, 3});

  CHECK(PauliOperator::from_string("+XY").to_string() == "XY");
  CHECK(PauliOperator::from_string("-ZI").to_string() == "ZI");
  CHECK(PauliOperator::from_string("Y").x_bits.get(0));
  CHECK(PauliOperator::from_string("Y").z_bits.get(0));
  CHECK_THROWS_AS(PauliOperator::from_string("XQ"), ContractError);
}

TEST_CASE("product drops phases") {
  auto x = PauliOperator::from_string("X");
  auto z = PauliOperator::from_string("Z");
  CHECK(x.times(z).to_string() == "Y");
  CHECK(x.times(x).is_identity());
}

TEST_CASE("symplectic commutation matches the letter-counting oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t n = 1 + trial % 12;
    PauliOperator p(n), q(n);
    for (std::size_t i = 0; i < n; ++i) {
      int a = letter(rng), b = letter(rng);
      if (a & 1) p.x_bits.set(i, true);
      if (a & 2) p.z_bits.set(i, true);
      if (b & 1) q.x_bits.set(i, true);
      if (b & 2) q.z_bits.set(i, true);
    }
    CHECK(symplectic_commutes(p, q) == oracle::commute(p, q));
  }
}

TEST_CASE("constructor rejects anticommuting pairs and names them") {
  std::vector<PauliOperator> gens = {PauliOperator::from_string("XX"),
                                     PauliOperator::from_string("ZI")};
  try {
    StabilizerCode code(2, gens);
    FAIL("expected InvalidCodeError");
  } catch (const InvalidCodeError& e) {
    CHECK(e.gen_a == 0);
    CHECK(e.gen_b == 1);
  }
}

TEST_CASE("dimension equals n minus rank on the corpus") {
  for (const auto& code : corpus::small_codes())
    CHECK(code.k() == code.n() - oracle::code_rank(code));
}

TEST_CASE("dependent generators do not change k") {
  auto code = corpus::from_strings({"XXXX", "ZZZZ", "YYYY"});
  CHECK(code.k() == 2);  // YYYY = XXXX * ZZZZ
}

TEST_CASE("logical operator basis structure") {
  for (const auto& code : corpus::small_codes()) {
    auto logicals = logical_operator_basis(code);
    REQUIRE(logicals.size() == 2 * code.k());
    for (const auto& l : logicals) {
      CHECK(code.commutes_with_all(l));
      CHECK(!code.in_stabilizer_group(l));
    }
    for (std::size_t i = 0; i < logicals.size(); ++i)
      for (std::size_t j = i + 1; j < logicals.size(); ++j) {
        bool paired = (i / 2 == j / 2);
        CHECK(symplectic_commutes(logicals[i], logicals[j]) == !paired);
      }
    // determinism
    CHECK(logical_operator_basis(code) == logicals);
  }
}

TEST_CASE("code distance on known codes") {
  CHECK(code_distance(corpus::code_422()).value == 2);
  CHECK(code_distance(corpus::code_513()).value == 3);
  auto pinned = corpus::pinned_lattice(2, 2).code;
  CHECK_THROWS_AS(code_distance(pinned), ContractError);  // k = 0
}

TEST_CASE("distance matches the naive bounded search on the corpus") {
  for (const auto& code : corpus::small_codes()) {
    if (code.k() == 0 || code.n() > 7) continue;
    auto naive = oracle::min_logical_weight(code, static_cast<int>(code.n()));
    auto fast = code_distance(code);
    REQUIRE(naive.has_value());
    CHECK(fast.exact);
    CHECK(fast.value == *naive);
  }
}

TEST_CASE("weight cap semantics") {
  auto code = corpus::code_513();
  auto capped = code_distance(code, 2);
  CHECK(!capped.exact);
  CHECK(capped.value == 3);  // lower bound cap + 1

  // n > 24 without a cap is rejected outright
  auto big = pad_code(corpus::code_422(), 21);
  CHECK(big.n() == 25);
  CHECK_THROWS_AS(code_distance(big), ContractError);
  auto bounded = code_distance(big, 1);
  CHECK(!bounded.exact);
  CHECK(bounded.value == 2);
}

TEST_CASE("correctability spot checks against the exhaustive oracle") {
  std::mt19937 rng(99);
  int checked = 0;
  for (const auto& code : corpus::small_codes()) {
    if (code.n() > 8) continue;
    auto group = oracle::full_group(code);
    std::uniform_int_distribution<std::size_t> pick(0, code.n() - 1);
    for (int t = 0; t < 6; ++t) {
      std::vector<std::size_t> idx;
      for (std::size_t q = 0; q < code.n(); ++q)
        if (pick(rng) % 2 == 0) idx.push_back(q);
      auto u = QubitSet::of(idx, code.n());
      if (u.size() > 6) continue;
      auto got = is_correctable(code, u);
      CHECK(got.correctable == oracle::correctable(code, u, group));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("witness is a genuine logical operator on u") {
  auto code = corpus::code_513();
  auto all = QubitSet::of({0, 1, 2, 3, 4}, 5);
  auto res = is_correctable(code, all);
  REQUIRE(!res.correctable);
  REQUIRE(res.witness.has_value());
  CHECK(code.commutes_with_all(*res.witness));
  CHECK(!code.in_stabilizer_group(*res.witness));
  for (auto q : res.witness->support()) CHECK(all.contains(q));

  // sets below the distance are always correctable
  CHECK(is_correctable(code, QubitSet::of({1, 3}, 5)).correctable);
}
