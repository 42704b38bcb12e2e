#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "corpus.hpp"
#include "oracles.hpp"
#include "qlocal/constructions.hpp"
#include "qlocal/geometry.hpp"

using namespace qlocal;

namespace {

// Multiset of interaction lengths, rounded to kill float noise.
std::multiset<long long> length_multiset(const StabilizerCode& code,
                                         const Embedding& emb) {
  std::multiset<long long> out;
  for (const auto& i : extract_interactions(code, emb))
    out.insert(llround(i.length * 1e9));
  return out;
}

}  // namespace

TEST_CASE("surface code parameters") {
  for (std::size_t m : {2u, 3u, 4u}) {
    auto ec = build_surface_code(m);
    CHECK(ec.code.n() == m * m);
    CHECK(ec.code.k() == 1);
    auto d = code_distance(ec.code);
    CHECK(d.exact);
    CHECK(d.value == static_cast<int>(m));
    for (const auto& i : extract_interactions(ec.code, ec.embedding))
      CHECK(i.length <= std::sqrt(2.0) + 1e-9);
  }
  auto ec2 = build_surface_code(2);
  CHECK(ec2.code.n() == 4);
  CHECK(ec2.code.k() == 1);
  // qubit i at (i % m, i / m)
  CHECK(ec2.embedding.points[3].x == doctest::Approx(1));
  CHECK(ec2.embedding.points[3].y == doctest::Approx(1));
}

TEST_CASE("padding preserves k, d and the interactions") {
  std::mt19937 rng(7);
  std::vector<StabilizerCode> bases = {corpus::code_422(), corpus::code_513(),
                                       build_surface_code(3).code};
  for (int t = 0; t < 6; ++t) bases.push_back(corpus::random_code(rng, 6, 3));

  for (const auto& base : bases) {
    for (std::size_t r : {1u, 3u}) {
      if (base.n() + r > 14) continue;
      auto padded = pad_code(base, r);
      CHECK(padded.n() == base.n() + r);
      CHECK(padded.k() == base.k());
      if (base.k() > 0) {
        auto d0 = code_distance(base);
        auto d1 = code_distance(padded);
        CHECK(d0.exact);
        CHECK(d1.exact);
        CHECK(d0.value == d1.value);
      }
      // ancilla pins are single-qubit: no new interactions anywhere
      std::vector<Point> pts;
      for (std::size_t i = 0; i < padded.n(); ++i)
        pts.push_back({2.0 * double(i), 0.0});
      Embedding emb = Embedding::of(std::move(pts));
      Embedding emb_base =
          Embedding::of({emb.points.begin(),
                         emb.points.begin() + static_cast<long>(base.n())});
      CHECK(length_multiset(padded, emb) == length_multiset(base, emb_base));
    }
  }
}

TEST_CASE("concatenating with a single-qubit identity code") {
  // [[1, 1, 1]]: one qubit, no generators
  StabilizerCode triv(1, {});
  auto a = concatenate(triv, corpus::code_513());
  CHECK(a.n() == 5);
  CHECK(a.k() == 1);
  auto da = code_distance(a);
  CHECK(da.exact);
  CHECK(da.value == 3);

  auto b = concatenate(corpus::code_513(), triv);
  CHECK(b.n() == 5);
  CHECK(b.k() == 1);
  auto db = code_distance(b);
  CHECK(db.exact);
  CHECK(db.value == 3);
}

TEST_CASE("concatenation block structure and dimension") {
  std::mt19937 rng(11);
  std::size_t pairs_checked = 0;
  std::vector<StabilizerCode> pool = {corpus::code_422(), corpus::code_513(),
                                      build_surface_code(2).code};
  for (int t = 0; t < 10; ++t)
    pool.push_back(corpus::random_code(rng, 3 + t % 4, 1 + t % 3));

  for (const auto& inner : pool) {
    for (const auto& outer : pool) {
      if (inner.k() != 1) continue;  // block must carry one logical qubit
      if (inner.n() * outer.n() > 40 || outer.n() == 0) continue;
      auto cat = concatenate(inner, outer);
      CHECK(cat.n() == inner.n() * outer.n());
      CHECK(cat.k() == inner.k() * outer.k());
      ++pairs_checked;
    }
  }
  CHECK(pairs_checked >= 10);
}

TEST_CASE("concatenated distance bound via bounded-weight search") {
  // [[4,2,2]] is k = 2, so use [[4,1,2]] (surface m = 2) as the block code
  // and the [[9,1,3]] surface code as the outer code: d >= 2 * 3 = 6.
  auto inner = build_surface_code(2).code;
  auto outer = build_surface_code(3).code;
  auto cat = concatenate(inner, outer);
  CHECK(cat.n() == 36);
  CHECK(cat.k() == 1);
  // no logical operator of weight <= 5 (oracle-style capped search)
  auto res = code_distance(cat, 5);
  CHECK(!res.exact);
  CHECK(res.value == 6);  // cap + 1 lower bound
}

TEST_CASE("concatenation agrees with the oracle on tiny inputs") {
  // [[4,1,2]] with itself: [[16, 1, d >= 4]]
  auto inner = build_surface_code(2).code;
  auto cat = concatenate(inner, inner);
  CHECK(cat.n() == 16);
  CHECK(cat.k() == 1);
  auto res = code_distance(cat, 3);
  CHECK(res.value >= 4);
  // every type-1 generator is the inner generator shifted into its block
  const auto& inner_gens = inner.generators();
  const auto& gens = cat.generators();
  for (std::size_t b = 0; b < 4; ++b) {
    for (std::size_t g = 0; g < inner_gens.size(); ++g) {
      bool found = false;
      for (const auto& cg : gens) {
        bool match = true;
        for (std::size_t i = 0; i < 16; ++i) {
          bool in_block = i / 4 == b;
          bool x = in_block && inner_gens[g].x_bits.get(i % 4);
          bool z = in_block && inner_gens[g].z_bits.get(i % 4);
          if (cg.x_bits.get(i) != x || cg.z_bits.get(i) != z) {
            match = false;
            break;
          }
        }
        if (match) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("locality construction keeps every interaction short") {
  auto inner = corpus::code_422();
  auto build = build_locality_construction(inner, 3, 40.0);
  CHECK(build.copies == 1);
  CHECK(build.outer_side == 3);
  CHECK(build.ell == doctest::Approx(40.0));
  CHECK(build.max_interaction_length < 40.0);
  CHECK(build.embedded.code.n() == 4 * 9);
  double audited = 0;
  for (const auto& i :
       extract_interactions(build.embedded.code, build.embedded.embedding))
    audited = std::max(audited, i.length);
  CHECK(audited == doctest::Approx(build.max_interaction_length));
  CHECK(build.embedded.code.k() == inner.k() * 1);  // outer surface k = 1
}

TEST_CASE("locality construction with copies stays disjoint and valid") {
  auto inner = build_surface_code(2).code;
  auto build = build_locality_construction(inner, 2, 60.0, 3);
  CHECK(build.copies == 3);
  CHECK(build.embedded.code.n() == 4 * 4 * 3);
  CHECK(build.embedded.code.k() == 3);  // one logical per copy
  CHECK(build.max_interaction_length < 60.0);
  // embedding invariant (>= 1 separation) already validated by Embedding::of
  CHECK(build.embedded.embedding.size() == build.embedded.code.n());
}

TEST_CASE("locality construction sizing error names the minimum ell") {
  auto inner = corpus::code_422();
  try {
    build_locality_construction(inner, 3, 2.0);
    FAIL("expected a sizing error");
  } catch (const ContractError& e) {
    std::string msg = e.what();
    CHECK(msg.find("ell") != std::string::npos);
  }
}

TEST_CASE("locality planner") {
  auto plan = plan_locality_construction(14400, 4, 60, 4);
  CHECK(plan.ell > 0);
  CHECK(plan.outer_side >= 1);
  CHECK(plan.copies >= 1);
  // threshold violation rejected
  CHECK_THROWS_AS(plan_locality_construction(1000000, 1, 2, 4), ContractError);
}

TEST_CASE("planned build wrapper produces an audited layout") {
  auto inner = build_surface_code(2).code;
  auto build = build_locality_construction(14400, 4, 60, inner);
  CHECK(build.max_interaction_length < build.ell);
  CHECK(build.embedded.embedding.size() == build.embedded.code.n());
}
