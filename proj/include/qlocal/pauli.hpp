#pragma once

#include <string>
#include <vector>

#include "qlocal/errors.hpp"
#include "qlocal/gf2.hpp"

namespace qlocal {

// n-qubit Pauli operator in binary-symplectic form. Signs and phases are
// dropped throughout: every quantity in this toolkit depends only on the
// unsigned symplectic image.
struct PauliOperator {
  std::size_t n = 0;
  BitVec x_bits;
  BitVec z_bits;

  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : n(n), x_bits(n), z_bits(n) {}

  // Parse "XZZXI" style strings. A leading '+' or '-' is accepted and
  // ignored.
  static PauliOperator from_string(const std::string& s);

  std::string to_string() const;

  std::size_t weight() const;
  std::vector<std::size_t> support() const;
  bool is_identity() const { return x_bits.is_zero() && z_bits.is_zero(); }

  // Product with phase dropped (bitwise xor of both halves).
  PauliOperator times(const PauliOperator& o) const;

  friend bool operator==(const PauliOperator& a, const PauliOperator& b) {
    return a.n == b.n && a.x_bits == b.x_bits && a.z_bits == b.z_bits;
  }
};

// Symplectic inner product x_p.z_q + z_p.x_q mod 2; true iff it vanishes.
bool symplectic_commutes(const PauliOperator& p, const PauliOperator& q);

// (x|z) concatenation used by the GF(2) linear algebra.
BitVec to_symplectic(const PauliOperator& p);
PauliOperator from_symplectic(const BitVec& v, std::size_t n);

// Sorted duplicate-free set of qubit indices in [0, n).
struct QubitSet {
  std::vector<std::size_t> members;

  QubitSet() = default;

  // Sorts, deduplicates, and range-checks against n.
  static QubitSet of(std::vector<std::size_t> indices, std::size_t n);

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool contains(std::size_t q) const;
  bool is_subset_of(const QubitSet& other) const;
  bool disjoint_from(const QubitSet& other) const;

  static QubitSet union_of(const QubitSet& a, const QubitSet& b);

  friend bool operator==(const QubitSet& a, const QubitSet& b) {
    return a.members == b.members;
  }
};

}  // namespace qlocal
