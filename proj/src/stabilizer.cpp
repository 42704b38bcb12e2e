#include "qlocal/stabilizer.hpp"

#include <algorithm>

namespace qlocal {

StabilizerCode::StabilizerCode(std::size_t n,
                               std::vector<PauliOperator> generators)
    : n_(n), generators_(std::move(generators)), basis_(2 * n) {
  if (n == 0) throw ContractError("code must have at least one qubit");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].n != n)
      throw ContractError("generator " + std::to_string(i) +
                          " has length " + std::to_string(generators_[i].n) +
                          ", expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (!symplectic_commutes(generators_[i], generators_[j]))
        throw InvalidCodeError("generators " + std::to_string(i) + " and " +
                                   std::to_string(j) + " anticommute",
                               i, j);
  for (const auto& g : generators_) basis_.insert(to_symplectic(g));
  k_ = n_ - basis_.rank();
}

bool StabilizerCode::commutes_with_all(const PauliOperator& p) const {
  for (const auto& g : generators_)
    if (!symplectic_commutes(p, g)) return false;
  return true;
}

namespace {

// Symplectic inner product of two (x|z) vectors.
bool symp_pair(const BitVec& a, const BitVec& b, std::size_t n) {
  bool acc = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.get(i) && b.get(n + i)) acc = !acc;
    if (a.get(n + i) && b.get(i)) acc = !acc;
  }
  return acc;
}

}  // namespace

std::vector<PauliOperator> logical_operator_basis(const StabilizerCode& code) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  if (k == 0) return {};

  // Centralizer: nullspace of the rows (z_i | x_i), one per generator.
  std::vector<BitVec> constraint_rows;
  for (const auto& g : code.generators()) {
    BitVec row(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (g.z_bits.get(i)) row.set(i, true);
      if (g.x_bits.get(i)) row.set(n + i, true);
    }
    constraint_rows.push_back(std::move(row));
  }
  std::vector<BitVec> centralizer = nullspace_gf2(constraint_rows, 2 * n);

  // Logical representatives: centralizer vectors independent of the
  // stabilizer group.
  EchelonBasis combined = code.group_basis();
  std::vector<BitVec> logicals;
  for (const auto& v : centralizer) {
    BitVec r = combined.reduce(v);
    if (r.is_zero()) continue;
    combined.insert(r);
    logicals.push_back(std::move(r));
    if (logicals.size() == 2 * k) break;
  }

  // Symplectic Gram-Schmidt into k anticommuting pairs.
  std::vector<PauliOperator> out;
  std::vector<BitVec> pool = std::move(logicals);
  while (!pool.empty()) {
    BitVec a = pool.front();
    pool.erase(pool.begin());
    std::size_t partner = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (symp_pair(a, pool[i], n)) {
        partner = i;
        break;
      }
    // The symplectic form is nondegenerate on the logical quotient, so a
    // partner always exists.
    BitVec b = pool[partner];
    pool.erase(pool.begin() + partner);
    for (auto& v : pool) {
      if (symp_pair(v, b, n)) v ^= a;
      if (symp_pair(v, a, n)) v ^= b;
    }
    out.push_back(from_symplectic(a, n));
    out.push_back(from_symplectic(b, n));
  }
  return out;
}

namespace {

// Visit weight-w supports in colexicographic order. Returns false from the
// callback to stop early.
template <typename F>
bool for_each_support(std::size_t n, int w, F&& visit) {
  std::vector<std::size_t> c(w);
  for (int i = 0; i < w; ++i) c[i] = i;
  for (;;) {
    if (!visit(c)) return false;
    // colex successor
    int i = 0;
    while (i < w) {
      std::size_t limit = (i + 1 < w) ? c[i + 1] : n;
      if (c[i] + 1 < limit) break;
      ++i;
    }
    if (i == w) return true;
    ++c[i];
    for (int j = 0; j < i; ++j) c[j] = j;
  }
}

}  // namespace

DistanceResult code_distance(const StabilizerCode& code,
                             std::optional<int> weight_cap) {
  if (code.k() == 0)
    throw ContractError("code has no logical qubits; distance undefined");
  const std::size_t n = code.n();
  if (!weight_cap && n > 24)
    throw ContractError(
        "exhaustive distance search needs an explicit weight_cap for n > 24");
  int cap = weight_cap ? *weight_cap : static_cast<int>(n);
  if (cap < 1) throw ContractError("weight_cap must be >= 1");
  cap = std::min(cap, static_cast<int>(n));

  // Precompute generator halves once.
  struct GenBits {
    BitVec x, z;
  };
  std::vector<GenBits> gens;
  for (const auto& g : code.generators()) gens.push_back({g.x_bits, g.z_bits});

  for (int w = 1; w <= cap; ++w) {
    int found = -1;
    PauliOperator p(n);
    bool stop = !for_each_support(n, w, [&](const std::vector<std::size_t>& c) {
      // 3^w letter assignments per support: 0=X, 1=Z, 2=Y.
      std::vector<int> letters(w, 0);
      for (;;) {
        for (int i = 0; i < w; ++i) {
          p.x_bits.set(c[i], letters[i] != 1);
          p.z_bits.set(c[i], letters[i] != 0);
        }
        bool commutes = true;
        for (const auto& g : gens) {
          if (BitVec::and_parity(p.x_bits, g.z) !=
              BitVec::and_parity(p.z_bits, g.x)) {
            commutes = false;
            break;
          }
        }
        if (commutes && !code.in_stabilizer_group(p)) {
          found = w;
          return false;
        }
        int i = 0;
        while (i < w && letters[i] == 2) letters[i++] = 0;
        if (i == w) break;
        ++letters[i];
      }
      for (int i = 0; i < w; ++i) {
        p.x_bits.set(c[i], false);
        p.z_bits.set(c[i], false);
      }
      return true;
    });
    (void)stop;
    if (found > 0) return {true, found};
  }
  return {false, cap + 1};
}

CorrectabilityResult is_correctable(const StabilizerCode& code,
                                    const QubitSet& u) {
  const std::size_t n = code.n();
  if (!u.members.empty() && u.members.back() >= n)
    throw ContractError("qubit set exceeds code length");
  const std::size_t m = u.size();
  if (m == 0) return {true, std::nullopt};

  // Variables: (x_q, z_q) for q in u. Constraints: symplectic orthogonality
  // to every declared generator.
  std::vector<BitVec> rows;
  for (const auto& g : code.generators()) {
    BitVec row(2 * m);
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t q = u.members[j];
      if (g.z_bits.get(q)) row.set(j, true);
      if (g.x_bits.get(q)) row.set(m + j, true);
    }
    rows.push_back(std::move(row));
  }
  std::vector<BitVec> null = nullspace_gf2(rows, 2 * m);

  auto lift = [&](const BitVec& v) {
    PauliOperator p(n);
    for (std::size_t j = 0; j < m; ++j) {
      if (v.get(j)) p.x_bits.set(u.members[j], true);
      if (v.get(m + j)) p.z_bits.set(u.members[j], true);
    }
    return p;
  };

  std::vector<std::size_t> outside;  // basis vectors outside the group
  for (std::size_t i = 0; i < null.size(); ++i)
    if (!code.in_stabilizer_group(lift(null[i]))) outside.push_back(i);
  if (outside.empty()) return {true, std::nullopt};

  // Witness: lowest-weight logical in the nullspace span when the span is
  // small enough to enumerate, else the first basis vector outside the
  // group.
  if (null.size() <= 16) {
    std::optional<PauliOperator> best;
    for (std::uint32_t mask = 1; mask < (1u << null.size()); ++mask) {
      BitVec v(2 * m);
      for (std::size_t i = 0; i < null.size(); ++i)
        if (mask & (1u << i)) v ^= null[i];
      PauliOperator p = lift(v);
      if (code.in_stabilizer_group(p)) continue;
      if (!best || p.weight() < best->weight()) best = p;
    }
    return {false, best};
  }
  return {false, lift(null[outside.front()])};
}

}  // namespace qlocal
