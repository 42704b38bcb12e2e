#pragma once

#include <optional>
#include <vector>

#include "qlocal/pauli.hpp"

namespace qlocal {

// Stabilizer code given by a declared generating set. The declared list may
// contain dependent generators; the dimension k uses the rank, interactions
// and boundaries use the list as-is.
class StabilizerCode {
 public:
  // Validates that all generator pairs commute; throws InvalidCodeError
  // naming the first offending pair otherwise.
  StabilizerCode(std::size_t n, std::vector<PauliOperator> generators);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const std::vector<PauliOperator>& generators() const { return generators_; }

  // Row-reduced basis of the stabilizer group, as (x|z) vectors.
  const EchelonBasis& group_basis() const { return basis_; }

  bool in_stabilizer_group(const PauliOperator& p) const {
    return basis_.contains(to_symplectic(p));
  }

  bool commutes_with_all(const PauliOperator& p) const;

 private:
  std::size_t n_;
  std::vector<PauliOperator> generators_;
  EchelonBasis basis_;
  std::size_t k_;
};

inline std::size_t code_dimension(const StabilizerCode& code) {
  return code.k();
}

// 2k logical operators as k symplectically paired rows
// [X1, Z1, X2, Z2, ...]: all commute with the stabilizer, are independent
// of it, and each pair anticommutes while distinct pairs commute. Output is
// deterministic given the declared generator order.
std::vector<PauliOperator> logical_operator_basis(const StabilizerCode& code);

struct DistanceResult {
  bool exact;   // false means the search was capped
  int value;    // distance if exact, else lower bound (cap + 1)
};

// Exhaustive minimum-weight logical search, increasing weight. weight_cap
// defaults to n; beyond 24 qubits an explicit cap is required.
DistanceResult code_distance(const StabilizerCode& code,
                             std::optional<int> weight_cap = std::nullopt);

struct CorrectabilityResult {
  bool correctable;
  std::optional<PauliOperator> witness;  // logical operator supported on u
};

// Erasure criterion: u is correctable iff no operator supported inside u
// commutes with all generators while lying outside the stabilizer group.
// Decided by GF(2) rank computations, polynomial in n.
CorrectabilityResult is_correctable(const StabilizerCode& code,
                                    const QubitSet& u);

}  // namespace qlocal
