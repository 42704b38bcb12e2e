#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qlocal/bounds.hpp"
#include "qlocal/errors.hpp"

using namespace qlocal;

TEST_CASE("rational arithmetic normalizes and compares") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
  CHECK(Rational(3, 4) * Rational(2, 9) == Rational(1, 6));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(!(Rational(1, 2) < Rational(1, 2)));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(1, 2).value() == doctest::Approx(0.5));
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(3).str() == "3");
}

TEST_CASE("exponent formatting") {
  using R = Rational;
  CHECK(Exponent::zero().str() == "1");
  CHECK(Exponent::poly(R(1, 2)).str() == "n^{1/2}");
  CHECK(Exponent{R(0), R(1), R(0)}.str() == "n^{e}");
  CHECK(Exponent{R(0), R(1, 2), R(0)}.str() == "n^{e/2}");
  CHECK(Exponent{R(0), R(0), R(1, 2)}.str() == "log^{1/2}");
  CHECK((Exponent::poly(R(1, 4)) + Exponent::poly(R(1, 4))).str() == "n^{1/2}");
}

TEST_CASE("numeric bound evaluation") {
  // d = sqrt(k*n) is the crossover where both lower bounds coincide
  std::size_t n = 10000, k = 4, d = 200;
  auto r = evaluate_bounds(n, k, d, 1.0, 1.0);
  CHECK(r.above_threshold);  // k*d^2 = 160000 >= n
  CHECK(r.ell_star == doctest::Approx(double(d) / std::sqrt(double(n))));
  CHECK(r.ell_star ==
        doctest::Approx(std::pow(double(k) * d * d / n, 0.25)));
  CHECK(r.count_star == std::max(k, d));
  CHECK(r.bpt_ratio == doctest::Approx(double(k) * d * d / n));

  // below threshold
  auto low = evaluate_bounds(10000, 1, 10, 1.0, 100);
  CHECK(!low.above_threshold);

  // monotone in d: larger d never shrinks the length floor
  double prev = 0;
  for (std::size_t dd = 10; dd <= 100; dd += 10) {
    auto rr = evaluate_bounds(10000, 4, dd, 1.0, 1.0);
    CHECK(rr.ell_star >= prev - 1e-12);
    prev = rr.ell_star;
  }

  CHECK_THROWS_AS(evaluate_bounds(10, 11, 2), ContractError);
  CHECK_THROWS_AS(evaluate_bounds(0, 0, 0), ContractError);
}

TEST_CASE("numeric and symbolic stacked feasibility agree on power laws") {
  using R = Rational;
  struct Profile {
    Rational kappa, delta;
  };
  std::vector<Profile> profiles = {{R(1), R(1, 2)}, {R(4, 5), R(3, 5)},
                                   {R(3, 5), R(3, 5)}, {R(1, 2), R(1, 2)},
                                   {R(1), R(1)},       {R(0), R(1, 2)}};
  for (const auto& p : profiles) {
    auto sym = stacked_feasibility_symbolic(Exponent::poly(p.kappa),
                                            Exponent::poly(p.delta));
    for (double nd : {1e3, 1e6}) {
      auto n = static_cast<std::size_t>(nd);
      auto k = static_cast<std::size_t>(
          std::llround(std::pow(nd, p.kappa.value())));
      auto d = static_cast<std::size_t>(
          std::llround(std::pow(nd, p.delta.value())));
      auto num = stacked_feasibility(n, std::max<std::size_t>(k, 1),
                                     std::max<std::size_t>(d, 1), 1.0);
      // compare on log scale: numeric verdict must match the sign of the
      // symbolic exponent comparison except exactly at equality, where the
      // numeric inequality is non-strict and also holds
      CHECK(num.d_bound_ok == sym.d_bound_ok);
      CHECK(num.combined_ok == sym.combined_ok);
    }
  }
}

TEST_CASE("family table rows are exactly the published profiles") {
  using R = Rational;
  auto rows = family_table();
  REQUIRE(rows.size() == 8);

  auto find = [&](const std::string& name) -> const FamilyRow& {
    for (const auto& r : rows)
      if (r.family == name) return r;
    FAIL("missing family ", name);
    return rows[0];
  };

  const auto& surface = find("surface");
  CHECK(surface.k_exp == Exponent::zero());
  CHECK(surface.d_exp == Exponent::poly(R(1, 2)));
  CHECK(!surface.above_threshold);
  CHECK(!surface.stacked.ruled_out());

  const auto& hyp2 = find("2d-hyperbolic");
  CHECK(hyp2.d_exp == Exponent{R(0), R(0), R(1)});
  CHECK(hyp2.above_threshold);
  CHECK(hyp2.ell_exp == Exponent{R(0), R(0), R(1, 2)});
  CHECK(!hyp2.stacked.ruled_out());

  const auto& hyp4 = find("4d-hyperbolic");
  CHECK(hyp4.d_exp == Exponent{R(0), R(1), R(0)});
  CHECK(hyp4.ell_exp == Exponent{R(0), R(1, 2), R(0)});
  CHECK(hyp4.ell_exp.str() == "n^{e/2}");
  CHECK(!hyp4.stacked.ruled_out());

  const auto& hgp = find("hypergraph-product");
  CHECK(hgp.count_exp == Exponent::poly(R(1)));
  CHECK(hgp.ell_exp == Exponent::poly(R(1, 4)));
  CHECK(hgp.stacked.ruled_out());

  const auto& fb = find("fiber-bundle");
  CHECK(fb.ell_exp == Exponent::poly(R(1, 5)));
  CHECK(!fb.stacked.ruled_out());

  const auto& bp = find("balanced-product");
  CHECK(bp.count_exp == Exponent::poly(R(4, 5)));
  CHECK(bp.ell_exp == Exponent::poly(R(1, 4)));
  CHECK(bp.stacked.ruled_out());

  const auto& hdx = find("hdx");
  CHECK(hdx.ell_exp == Exponent::poly(R(1, 8)));
  CHECK(!hdx.stacked.ruled_out());

  const auto& good = find("good");
  CHECK(good.ell_exp == Exponent::poly(R(1, 2)));
  CHECK(good.stacked.ruled_out());
}

TEST_CASE("stacked verdict rules out exactly two of the six stackable profiles") {
  auto rows = family_table();
  std::vector<std::string> ruled;
  for (const auto& r : rows)
    if (r.above_threshold && r.stacked.ruled_out() && r.family != "good")
      ruled.push_back(r.family);
  REQUIRE(ruled.size() == 2);
  CHECK(ruled[0] == "hypergraph-product");
  CHECK(ruled[1] == "balanced-product");
}
