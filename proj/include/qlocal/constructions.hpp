#pragma once

#include <optional>

#include "qlocal/geometry.hpp"
#include "qlocal/stabilizer.hpp"

namespace qlocal {

struct EmbeddedCode {
  StabilizerCode code;
  Embedding embedding;
};

// Rotated surface code [[m^2, 1, m]] on the unit m x m lattice. Qubit
// (x, y) sits at coordinate (x, y), index y*m + x. Generators are the
// checkerboard faces: interior faces act on their four qubits, boundary
// faces on their two; X-faces continue onto the left/right boundary,
// Z-faces onto the top/bottom. All interactions have length <= sqrt(2).
EmbeddedCode build_surface_code(std::size_t m);

// Appends r ancilla qubits, each pinned by a single-qubit X generator.
// k, d and the interaction multiset are unchanged.
StabilizerCode pad_code(const StabilizerCode& code, std::size_t r);

// Standard stabilizer concatenation: n2 blocks of the inner code carry the
// inner generators per block (type 1), and each of the k1 outer copies
// carries the outer generators with single-qubit Paulis replaced by the
// block's logical operators (type 2; Y maps to the X*Z logical product).
// Qubit indexing is block-major: block b, inner qubit i -> b*n1 + i.
// Result is [[n1*n2, k1*k2, d >= d1*d2]].
StabilizerCode concatenate(const StabilizerCode& inner,
                           const StabilizerCode& outer);

struct LocalityBuild {
  EmbeddedCode embedded;
  double ell;
  double max_interaction_length;  // audited; asserted < ell by the builder
  std::size_t copies;
  std::size_t outer_side;
  std::size_t d_lower_bound;  // d1*d2 when the inner distance is computable,
                              // else 0
};

// Concatenate `inner` with a side-m surface code and lay the result out
// with locality ell: blocks of side ell/10 on a lattice with spacing
// 4*ell/10, inner qubits on a centered unit grid inside each block, and
// `copies` disjoint translates. Throws a sizing error naming the minimum
// feasible ell when the inner block does not fit.
LocalityBuild build_locality_construction(const StabilizerCode& inner,
                                          std::size_t outer_side, double ell,
                                          std::size_t copies = 1);

struct LocalityPlan {
  double ell;
  std::size_t outer_side;
  std::size_t copies;
};

// Parameter planner for target [[n, k, d]]: ell = max(d/sqrt(n),
// (k*d^2/n)^(1/4)) scaled by c0, block count n' = d^2/ell^2, outer size
// n2 = n'/n1, copies = n/n', all rounded down to feasible integers.
// Requires k*d^2 >= c1*n.
LocalityPlan plan_locality_construction(std::size_t n, std::size_t k,
                                        std::size_t d, std::size_t inner_n,
                                        double c0 = 1.0, double c1 = 1.0);

// Convenience wrapper: plan for (n, k, d), then build with the planned
// parameters, bumping ell up to the block-packing minimum if needed.
LocalityBuild build_locality_construction(std::size_t n, std::size_t k,
                                          std::size_t d,
                                          const StabilizerCode& inner);

}  // namespace qlocal
