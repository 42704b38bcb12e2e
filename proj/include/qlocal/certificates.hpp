#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlocal/geometry.hpp"
#include "qlocal/stabilizer.hpp"

namespace qlocal {

// Qubits outside u that share a generator with a qubit in u.
QubitSet boundary(const StabilizerCode& code, const QubitSet& u);

// Replayable proof that a qubit set is correctable, built from the four
// closure rules: sets smaller than d (Distance), subsets (Subset), disjoint
// non-interacting unions (Union), and adding a correctable boundary
// (Expansion).
struct Certificate {
  enum class Kind { Distance, Subset, Union, Expansion };

  Kind kind;
  QubitSet root;
  // Subset: one child with root superset of this root.
  // Union: any number of pairwise decoupled children covering root.
  // Expansion: exactly two children {u, t} with t.root containing the
  // boundary of u.root and root = u.root union t.root.
  std::vector<Certificate> children;

  static Certificate distance_leaf(QubitSet u);
  static Certificate subset(QubitSet u, Certificate parent);
  static Certificate union_of(std::vector<Certificate> parts);
  static Certificate expansion(Certificate u, Certificate t);

  std::size_t node_count() const;
};

struct VerifyResult {
  bool ok;
  std::string diagnostic;  // first failing node, empty when ok
};

// Structural check of every node invariant: |leaf| < d, subset relations,
// pairwise disjointness plus no generator spanning two union children,
// boundary containment for expansions. The distance d is passed explicitly
// so codes without logical qubits can be certified against a working d.
VerifyResult verify_certificate(const StabilizerCode& code,
                                const Certificate& cert, std::size_t d);

// Budgets from the constructive proofs. Defaults reproduce the source
// analysis; they are deliberately conservative (vacuous at desk scale), so
// experiments override them. Verification never reads these: an emitted
// certificate stands or falls on the structural rules alone.
struct ProofConstants {
  double grow_side_divisor = 100;  // square side limit d/(this * ell)
  double grow_bad_divisor = 8;     // f budget d/this for grow_square
  double base_side_divisor = 4;    // initial square side sqrt(d)/this
  double recur_bad_divisor = 10;   // f budget d/this for certify_recursive
  double good_square_divisor = 10;  // good cell iff f(cell) < d/this
  double subdivide_divisor = 10;    // subdivision mass d1 = d/this
  double tiling_w_divisor = 100;    // default cell width d/(this * ell)
};

struct CertificateResult {
  std::optional<Certificate> certificate;
  std::string diagnostic;  // why construction stopped, empty on success
};

// Growing-the-square: certify all qubits in `rect` by starting from a
// central square of side sqrt(d)/4 (a Distance leaf) and alternating
// Expansion steps over 2*ell-wide annuli with Subset steps that drop the
// spurious long-interaction partners. Every expansion set is checked
// numerically against |T| < d; the first violation aborts with a
// diagnostic. Requires ell >= 1 and rect sides within the side limit.
CertificateResult grow_square(const StabilizerCode& code, const Embedding& emb,
                              const Rectangle& rect, double ell, std::size_t d,
                              const ProofConstants& pc = {});

// Recursive separator certification of the qubits in `region`: split with
// find_separator, certify both sides, restrict to their good-only qubits,
// join with a Union, and close with an Expansion whose set T (separator
// strip + stripped bad qubits + outside good boundary) must satisfy
// |T| < d. ell < 1 falls back to the all-interactions-short corner case.
CertificateResult certify_recursive(const StabilizerCode& code,
                                    const Embedding& emb,
                                    const Rectangle& region, double ell,
                                    std::size_t d,
                                    const ProofConstants& pc = {});

// A/B/C split with correctability certificates for A and B.
struct Partition {
  QubitSet a, b, c;
  std::optional<Certificate> cert_a;
  std::optional<Certificate> cert_b;
  int case_used;  // 1: bad qubits into C; 2: bad qubits into B
  std::vector<std::string> diagnostics;
};

// Full pipeline: tile the plane (cells of width w, default d/(100*ell)),
// classify cells good/bad by their bad-interaction mass, subdivide bad
// cells, carve the vertex/edge neighborhoods C and B, and certify A (per
// piece via grow_square) and B (edge-centered rectangles as Distance
// leaves). Certificates that fail verification are dropped and reported in
// diagnostics; the qubit partition itself is always returned.
Partition build_partition(const StabilizerCode& code, const Embedding& emb,
                          double ell, std::size_t d,
                          std::optional<double> w = std::nullopt,
                          const ProofConstants& pc = {});

}  // namespace qlocal
