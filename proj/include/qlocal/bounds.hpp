#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlocal/errors.hpp"

namespace qlocal {

// Exact rational arithmetic for exponent bookkeeping.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);  // normalizes

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a < b || a == b;
  }

  double value() const { return static_cast<double>(num) / den; }
  std::string str() const;
};

// Symbolic growth rate n^main * n^(eps * epsilon) * log(n)^logp, where
// epsilon is a free small parameter (used by families stated with an
// unspecified exponent). Asymptotic verdicts compare only the main part;
// the epsilon and log parts are carried for reporting.
struct Exponent {
  Rational main;
  Rational eps;
  Rational logp;

  static Exponent poly(Rational main) { return {main, {}, {}}; }
  static Exponent zero() { return {}; }

  friend Exponent operator+(const Exponent& a, const Exponent& b) {
    return {a.main + b.main, a.eps + b.eps, a.logp + b.logp};
  }
  friend Exponent operator-(const Exponent& a, const Exponent& b) {
    return {a.main - b.main, a.eps - b.eps, a.logp - b.logp};
  }
  Exponent scaled(Rational c) const { return {main * c, eps * c, logp * c}; }
  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.main == b.main && a.eps == b.eps && a.logp == b.logp;
  }
  // Ordering used when taking maxima of growth rates.
  friend bool operator<(const Exponent& a, const Exponent& b);

  std::string str() const;  // e.g. "n^{1/4}", "log^{1/2}", "n^{e/2}", "1"
};

struct BoundReport {
  std::size_t n, k, d;
  double c0, c1;
  double ell_star;         // max(d/sqrt(n), (k*d^2/n)^(1/4))
  std::size_t count_star;  // max(k, d)
  double bpt_ratio;        // k*d^2 / n
  bool above_threshold;    // k*d^2 >= c1*n; below it the theorem is silent
  bool stacked_d_ok;       // d^3 <= n^2 / c0^3
  bool stacked_kd_ok;      // k*d^2*max(k,d)^2 <= n^3 / c0^6
};

// Numeric floor on long-interaction count/length for concrete parameters.
BoundReport evaluate_bounds(std::size_t n, std::size_t k, std::size_t d,
                            double c0 = 1.0 / 100, double c1 = 100);

struct StackedFeasibility {
  bool d_bound_ok;
  bool combined_ok;
  bool ruled_out() const { return !d_bound_ok || !combined_ok; }
};

StackedFeasibility stacked_feasibility(std::size_t n, std::size_t k,
                                       std::size_t d, double c0 = 1.0 / 100);

// Symbolic variant for family profiles k = n^kappa, d = n^delta: compares
// epsilon- and log-free main exponents against d <= n^(2/3) and
// k*d^2*max(k,d)^2 <= n^3.
StackedFeasibility stacked_feasibility_symbolic(const Exponent& kappa,
                                                const Exponent& delta);

struct FamilyRow {
  std::string family;
  Exponent k_exp;
  Exponent d_exp;
  bool above_threshold;    // k*d^2 vs n, on symbolic exponents
  Exponent count_exp;      // max(k, d); meaningless below threshold
  Exponent ell_exp;        // max(d/sqrt(n), (k*d^2/n)^(1/4)); ditto
  StackedFeasibility stacked;
};

// The eight standard family profiles with their required interaction count
// and length exponents.
std::vector<FamilyRow> family_table();

}  // namespace qlocal
