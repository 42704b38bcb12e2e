#include "qlocal/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qlocal {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw ContractError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational operator+(Rational a, Rational b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}
Rational operator-(Rational a, Rational b) {
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}
Rational operator*(Rational a, Rational b) {
  return {a.num * b.num, a.den * b.den};
}
Rational operator/(Rational a, Rational b) {
  if (b.num == 0) throw ContractError("rational division by zero");
  return {a.num * b.den, a.den * b.num};
}
bool operator<(const Rational& a, const Rational& b) {
  return a.num * b.den < b.num * a.den;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Exponent& a, const Exponent& b) {
  if (!(a.main == b.main)) return a.main < b.main;
  if (!(a.eps == b.eps)) return a.eps < b.eps;
  return a.logp < b.logp;
}

std::string Exponent::str() const {
  const Rational zero;
  std::string s;
  bool poly = !(main == zero) || !(eps == zero);
  if (poly) {
    s = "n^{";
    if (!(main == zero)) s += main.str();
    if (!(eps == zero)) {
      if (!(main == zero)) s += "+";
      if (eps == Rational{1}) {
        s += "e";
      } else if (eps.num == 1) {
        s += "e/" + std::to_string(eps.den);
      } else {
        s += "(" + eps.str() + ")e";
      }
    }
    s += "}";
  }
  if (!(logp == zero)) {
    if (!s.empty()) s += "*";
    s += "log^{" + logp.str() + "}";
  }
  if (s.empty()) s = "1";
  return s;
}

BoundReport evaluate_bounds(std::size_t n, std::size_t k, std::size_t d,
                            double c0, double c1) {
  if (n < 1 || k < 1 || d < 1 || k > n || d > n)
    throw ContractError("need 1 <= k, d <= n");
  double nn = n, kk = k, dd = d;
  BoundReport r;
  r.n = n;
  r.k = k;
  r.d = d;
  r.c0 = c0;
  r.c1 = c1;
  r.ell_star =
      std::max(dd / std::sqrt(nn), std::pow(kk * dd * dd / nn, 0.25));
  r.count_star = std::max(k, d);
  r.bpt_ratio = kk * dd * dd / nn;
  r.above_threshold = kk * dd * dd >= c1 * nn;
  double mx = static_cast<double>(r.count_star);
  r.stacked_d_ok = dd * dd * dd <= nn * nn / (c0 * c0 * c0);
  r.stacked_kd_ok =
      kk * dd * dd * mx * mx <= nn * nn * nn / std::pow(c0, 6);
  return r;
}

StackedFeasibility stacked_feasibility(std::size_t n, std::size_t k,
                                       std::size_t d, double c0) {
  BoundReport r = evaluate_bounds(n, k, d, c0, 0);
  return {r.stacked_d_ok, r.stacked_kd_ok};
}

StackedFeasibility stacked_feasibility_symbolic(const Exponent& kappa,
                                                const Exponent& delta) {
  Rational kap = kappa.main, del = delta.main;
  Rational mx = std::max(kap, del);
  bool d_ok = del <= Rational{2, 3};
  bool combined_ok =
      kap + del * Rational{2} + mx * Rational{2} <= Rational{3};
  return {d_ok, combined_ok};
}

namespace {

FamilyRow make_row(std::string name, Exponent k_exp, Exponent d_exp) {
  FamilyRow row;
  row.family = std::move(name);
  row.k_exp = k_exp;
  row.d_exp = d_exp;
  // Threshold k*d^2 >= c1*n on growth rates: exponent of k*d^2 must beat
  // n^1, with epsilon/log parts breaking the tie at equality.
  Exponent prod = k_exp + d_exp.scaled(Rational{2});
  const Rational one{1}, zero;
  row.above_threshold =
      one < prod.main ||
      (prod.main == one && (zero < prod.eps || zero < prod.logp));
  row.count_exp = std::max(k_exp, d_exp);
  Exponent term1 = d_exp - Exponent::poly(Rational{1, 2});
  Exponent term2 =
      (k_exp + d_exp.scaled(Rational{2}) - Exponent::poly(one))
          .scaled(Rational{1, 4});
  row.ell_exp = std::max(term1, term2);
  row.stacked = stacked_feasibility_symbolic(k_exp, d_exp);
  return row;
}

}  // namespace

std::vector<FamilyRow> family_table() {
  using R = Rational;
  auto P = [](R r) { return Exponent::poly(r); };
  Exponent log1{R{0}, R{0}, R{1}};   // log(n)
  Exponent n_eps{R{0}, R{1}, R{0}};  // n^epsilon
  std::vector<FamilyRow> rows;
  rows.push_back(make_row("surface", P(R{0}), P(R{1, 2})));
  rows.push_back(make_row("2d-hyperbolic", P(R{1}), log1));
  rows.push_back(make_row("4d-hyperbolic", P(R{1}), n_eps));
  rows.push_back(make_row("hypergraph-product", P(R{1}), P(R{1, 2})));
  rows.push_back(make_row("fiber-bundle", P(R{3, 5}), P(R{3, 5})));
  rows.push_back(make_row("balanced-product", P(R{4, 5}), P(R{3, 5})));
  rows.push_back(make_row("hdx", P(R{1, 2}), P(R{1, 2})));
  rows.push_back(make_row("good", P(R{1}), P(R{1})));
  return rows;
}

}  // namespace qlocal
