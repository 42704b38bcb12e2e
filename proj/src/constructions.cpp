#include "qlocal/constructions.hpp"

#include <algorithm>
#include <cmath>

namespace qlocal {

EmbeddedCode build_surface_code(std::size_t m) {
  if (m < 2) throw ContractError("surface code needs lattice side m >= 2");
  const std::size_t n = m * m;
  auto index = [m](long x, long y) { return static_cast<std::size_t>(y) * m + x; };
  auto in_grid = [m](long x, long y) {
    return x >= 0 && y >= 0 && x < static_cast<long>(m) &&
           y < static_cast<long>(m);
  };

  std::vector<PauliOperator> gens;
  for (long y = -1; y < static_cast<long>(m); ++y) {
    for (long x = -1; x < static_cast<long>(m); ++x) {
      // Face (x, y) covers lattice points (x..x+1, y..y+1).
      std::vector<std::size_t> sup;
      for (long dy = 0; dy <= 1; ++dy)
        for (long dx = 0; dx <= 1; ++dx)
          if (in_grid(x + dx, y + dy)) sup.push_back(index(x + dx, y + dy));
      if (sup.size() < 2) continue;  // corner stubs carry no generator
      bool x_type = ((x + y) % 2 + 2) % 2 == 1;
      if (sup.size() == 2) {
        bool left_right = (x == -1 || x == static_cast<long>(m) - 1);
        // Only every other boundary face exists: X-faces terminate the
        // left/right edges, Z-faces the top/bottom.
        if (left_right != x_type) continue;
      }
      PauliOperator g(n);
      for (auto q : sup) {
        if (x_type)
          g.x_bits.set(q, true);
        else
          g.z_bits.set(q, true);
      }
      gens.push_back(std::move(g));
    }
  }

  std::vector<Point> pts;
  for (std::size_t y = 0; y < m; ++y)
    for (std::size_t x = 0; x < m; ++x)
      pts.push_back({static_cast<double>(x), static_cast<double>(y)});
  return {StabilizerCode(n, std::move(gens)), Embedding::of(std::move(pts))};
}

StabilizerCode pad_code(const StabilizerCode& code, std::size_t r) {
  if (r < 1) throw ContractError("padding needs r >= 1 ancilla qubits");
  const std::size_t n = code.n();
  std::vector<PauliOperator> gens;
  for (const auto& g : code.generators()) {
    PauliOperator e(n + r);
    for (std::size_t i = 0; i < n; ++i) {
      if (g.x_bits.get(i)) e.x_bits.set(i, true);
      if (g.z_bits.get(i)) e.z_bits.set(i, true);
    }
    gens.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < r; ++i) {
    PauliOperator a(n + r);
    a.x_bits.set(n + i, true);
    gens.push_back(std::move(a));
  }
  return StabilizerCode(n + r, std::move(gens));
}

StabilizerCode concatenate(const StabilizerCode& inner,
                           const StabilizerCode& outer) {
  if (inner.k() == 0)
    throw ContractError("inner code has no logical qubits to carry the "
                        "outer code");
  const std::size_t n1 = inner.n(), n2 = outer.n();
  const std::size_t k1 = inner.k();
  const std::size_t n = n1 * n2;

  auto embed_block = [&](const PauliOperator& p, std::size_t block) {
    PauliOperator e(n);
    for (std::size_t i = 0; i < n1; ++i) {
      if (p.x_bits.get(i)) e.x_bits.set(block * n1 + i, true);
      if (p.z_bits.get(i)) e.z_bits.set(block * n1 + i, true);
    }
    return e;
  };

  std::vector<PauliOperator> gens;
  // Type 1: inner generators, one copy per block.
  for (std::size_t b = 0; b < n2; ++b)
    for (const auto& g : inner.generators())
      gens.push_back(embed_block(g, b));

  // Type 2: outer generators with letters replaced by block logicals of
  // the carried copy.
  std::vector<PauliOperator> logicals = logical_operator_basis(inner);
  for (std::size_t copy = 0; copy < k1; ++copy) {
    const PauliOperator& lx = logicals[2 * copy];
    const PauliOperator& lz = logicals[2 * copy + 1];
    for (const auto& g : outer.generators()) {
      PauliOperator e(n);
      for (std::size_t i = 0; i < n2; ++i) {
        bool x = g.x_bits.get(i), z = g.z_bits.get(i);
        if (x) e = e.times(embed_block(lx, i));
        if (z) e = e.times(embed_block(lz, i));
      }
      gens.push_back(std::move(e));
    }
  }
  return StabilizerCode(n, std::move(gens));
}

LocalityBuild build_locality_construction(const StabilizerCode& inner,
                                          std::size_t outer_side, double ell,
                                          std::size_t copies) {
  if (outer_side < 2)
    throw ContractError("outer surface code needs side >= 2");
  if (copies < 1) throw ContractError("need at least one copy");
  const std::size_t n1 = inner.n();
  std::size_t grid = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(n1))));
  // Block packing: a (grid-1)-wide unit grid must fit in the ell/10 block,
  // and the 3*ell/10 gap between blocks must keep distinct blocks at unit
  // distance.
  double min_ell = std::max(10.0 * (grid > 0 ? grid - 1.0 : 0.0), 10.0 / 3.0);
  if (ell < min_ell - kGeomTol)
    throw ContractError("ell = " + std::to_string(ell) +
                        " too small to pack " + std::to_string(n1) +
                        " inner qubits per block; minimum feasible ell is " +
                        std::to_string(min_ell));

  EmbeddedCode outer = build_surface_code(outer_side);
  StabilizerCode unit = concatenate(inner, outer.code);

  const std::size_t n_unit = unit.n();
  const std::size_t n = n_unit * copies;
  std::vector<PauliOperator> gens;
  for (std::size_t c = 0; c < copies; ++c)
    for (const auto& g : unit.generators()) {
      PauliOperator e(n);
      for (std::size_t i = 0; i < n_unit; ++i) {
        if (g.x_bits.get(i)) e.x_bits.set(c * n_unit + i, true);
        if (g.z_bits.get(i)) e.z_bits.set(c * n_unit + i, true);
      }
      gens.push_back(std::move(e));
    }

  const double spacing = 0.4 * ell;
  const double copy_extent = spacing * (outer_side - 1) + 0.1 * ell;
  std::vector<Point> pts(n);
  for (std::size_t c = 0; c < copies; ++c) {
    double copy_x = c * (copy_extent + ell);
    for (std::size_t b = 0; b < outer.code.n(); ++b) {
      double bx = copy_x + spacing * (b % outer_side);
      double by = spacing * (b / outer_side);
      for (std::size_t i = 0; i < n1; ++i) {
        double gx = static_cast<double>(i % grid) - (grid - 1) / 2.0;
        double gy = static_cast<double>(i / grid) - (grid - 1) / 2.0;
        pts[c * n_unit + b * n1 + i] = {bx + gx, by + gy};
      }
    }
  }

  EmbeddedCode built{StabilizerCode(n, std::move(gens)),
                     Embedding::of(std::move(pts))};
  double max_len = 0;
  for (const auto& it : extract_interactions(built.code, built.embedding))
    max_len = std::max(max_len, it.length);
  if (max_len >= ell)
    throw ContractError("layout audit failed: interaction of length " +
                        std::to_string(max_len) + " >= ell");

  std::size_t d_bound = 0;
  if (inner.n() <= 12 && inner.k() >= 1) {
    DistanceResult dr = code_distance(inner);
    if (dr.exact) d_bound = static_cast<std::size_t>(dr.value) * outer_side;
  }
  return {std::move(built), ell, max_len, copies, outer_side, d_bound};
}

LocalityPlan plan_locality_construction(std::size_t n, std::size_t k,
                                        std::size_t d, std::size_t inner_n,
                                        double c0, double c1) {
  if (k < 1 || d < 1 || k > n || d > n)
    throw ContractError("need 1 <= k, d <= n");
  double nn = static_cast<double>(n), kk = static_cast<double>(k),
         dd = static_cast<double>(d);
  if (kk * dd * dd < c1 * nn)
    throw ContractError("parameters sit below the k*d^2 >= c1*n threshold");
  double ell =
      c0 * std::max(dd / std::sqrt(nn), std::pow(kk * dd * dd / nn, 0.25));
  double n_prime = dd * dd / (ell * ell);
  double n2 = n_prime / static_cast<double>(inner_n);
  std::size_t side =
      std::max<std::size_t>(2, static_cast<std::size_t>(std::floor(std::sqrt(
                                   std::max(n2, 0.0)))));
  std::size_t copies = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::floor(nn / std::max(n_prime, 1.0))));
  return {ell, side, copies};
}

LocalityBuild build_locality_construction(std::size_t n, std::size_t k,
                                          std::size_t d,
                                          const StabilizerCode& inner) {
  LocalityPlan plan = plan_locality_construction(n, k, d, inner.n());
  std::size_t grid = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(inner.n()))));
  double min_ell = std::max(10.0 * (grid > 0 ? grid - 1.0 : 0.0), 10.0 / 3.0);
  double ell = std::max(plan.ell, min_ell);
  return build_locality_construction(inner, plan.outer_side, ell, plan.copies);
}

}  // namespace qlocal
